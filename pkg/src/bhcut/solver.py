"""Exact minimum restricted-h and g-extra connectivity search.

Two routes: a brute-force oracle that enumerates every fault set up to a
bound (meant for BH_2 and below), and a quotient search that enumerates
only partner-closed fault sets.  Collapsing each partner pair {v, v'}
to a single class yields an n-regular graph on 4^n/2 classes; inside a
partner-closed set every original degree is exactly twice the class
degree, so a class subset is a valid restricted-h find iff the quotient
minus it is disconnected with every component's class degree >= ceil(h/2).
Every minimum conditional cut is partner-closed, which makes the reduced
search exact.

Lower bounds come only from exhaustive enumeration; each size is swept
completely (no early exit inside a size) so the coverage counts are
reproducible combinatorial totals and results are independent of worker
scheduling.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from multiprocessing import Pool
from typing import Iterable

from . import analysis
from .topology import CubeGraph

DEFAULT_MAX_SUBSETS = 10**9


class BudgetExceededError(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"search would examine {required} subsets, budget is {budget}"
        )
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class QuotientGraph:
    """Partner-pair quotient of BH_n: 4^n/2 classes, n-regular."""

    n: int
    class_reps: tuple[int, ...]  # smaller vertex index of each pair
    class_of_vertex: tuple[int, ...] = field(repr=False)
    adj: tuple[tuple[int, ...], ...] = field(repr=False)
    adj_mask: tuple[int, ...] = field(repr=False)

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def lift(self, g: CubeGraph, classes: Iterable[int]) -> tuple[int, ...]:
        """Vertex indices of the partner-closed set a class subset denotes."""
        out = []
        for c in classes:
            rep = self.class_reps[c]
            out.append(rep)
            out.append(g.partner_index(rep))
        return tuple(sorted(out))


def build_quotient(g: CubeGraph) -> QuotientGraph:
    size = g.num_vertices
    reps = [i for i in range(size) if min(i, g.partner_index(i)) == i]
    class_id = {r: c for c, r in enumerate(reps)}
    class_of_vertex = [0] * size
    for i in range(size):
        class_of_vertex[i] = class_id[min(i, g.partner_index(i))]
    adj: list[set[int]] = [set() for _ in reps]
    for (u, v) in g.edge_dim:
        cu, cv = class_of_vertex[u], class_of_vertex[v]
        adj[cu].add(cv)
        adj[cv].add(cu)
    for c, nbrs in enumerate(adj):
        assert len(nbrs) == g.n, f"class {c} has quotient degree {len(nbrs)}"
    adj_mask = tuple(sum(1 << w for w in nbrs) for nbrs in adj)
    return QuotientGraph(
        n=g.n,
        class_reps=tuple(reps),
        class_of_vertex=tuple(class_of_vertex),
        adj=tuple(tuple(sorted(s)) for s in adj),
        adj_mask=adj_mask,
    )


@dataclass(frozen=True)
class SolverResult:
    kind: str  # "plain", "restricted" or "extra"
    param: int
    n: int
    value: int | None
    witness: tuple[int, ...] | None
    coverage: dict
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "param": self.param,
            "n": self.n,
            "value": self.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "coverage": self.coverage,
            "elapsed_ms": self.elapsed_ms,
        }


# --- bitmask connectivity over the quotient -------------------------------

def _mask_components(adj_mask, remaining: int) -> list[int]:
    comps = []
    todo = remaining
    while todo:
        seed = todo & -todo
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= adj_mask[bit.bit_length() - 1]
            frontier = nxt & remaining & ~comp
        comps.append(comp)
        todo &= ~comp
    return comps


def _quotient_find_ok(adj_mask, all_mask, removed, min_deg, min_count) -> bool:
    """Valid find: quotient minus the subset is disconnected and every
    component meets the class-degree (restricted) or class-count (extra)
    threshold."""
    remaining = all_mask & ~removed
    if remaining == 0:
        return False
    comps = _mask_components(adj_mask, remaining)
    if len(comps) < 2:
        return False
    for comp in comps:
        if min_count and comp.bit_count() < min_count:
            return False
        if min_deg:
            c = comp
            while c:
                bit = c & -c
                c ^= bit
                if (adj_mask[bit.bit_length() - 1] & comp).bit_count() < min_deg:
                    return False
    return True


def _scan_chunk(args) -> tuple[int, tuple[int, ...] | None]:
    """Enumerate size-k class subsets whose smallest element is `first`;
    return (count examined, first valid subset in lex order or None)."""
    adj_mask, all_mask, first, k, min_deg, min_count, m = args
    examined = 0
    best = None
    rest = range(first + 1, m)
    first_bit = 1 << first
    for tail in combinations(rest, k - 1):
        examined += 1
        removed = first_bit
        for c in tail:
            removed |= 1 << c
        if best is None and _quotient_find_ok(
            adj_mask, all_mask, removed, min_deg, min_count
        ):
            best = (first, *tail)
    return examined, best


def _search_size(
    q: QuotientGraph, k: int, min_deg: int, min_count: int, workers: int
) -> tuple[int, tuple[int, ...] | None]:
    """Sweep all size-k class subsets; return (examined, lex-first valid)."""
    m = q.num_classes
    all_mask = (1 << m) - 1
    jobs = [
        (q.adj_mask, all_mask, first, k, min_deg, min_count, m)
        for first in range(m - k + 1)
    ]
    if workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            results = pool.map(_scan_chunk, jobs)
    else:
        results = [_scan_chunk(j) for j in jobs]
    examined = sum(r[0] for r in results)
    for _, best in results:  # jobs are ordered by first element
        if best is not None:
            return examined, best
    return examined, None


def _quotient_search(
    g: CubeGraph,
    q: QuotientGraph,
    kind: str,
    param: int,
    bound: int,
    min_deg: int,
    min_count: int,
    workers: int,
    max_subsets: int,
) -> SolverResult:
    start = time.perf_counter()
    m = q.num_classes
    max_k = min(bound // 2, m - 1)
    total = sum(comb(m, k) for k in range(1, max_k + 1))
    if total > max_subsets:
        raise BudgetExceededError(total, max_subsets)
    examined = 0
    sizes = []
    for k in range(1, max_k + 1):
        sizes.append(k)
        count, best = _search_size(q, k, min_deg, min_count, workers)
        examined += count
        if best is not None:
            witness = q.lift(g, best)
            return SolverResult(
                kind=kind,
                param=param,
                n=g.n,
                value=2 * k,
                witness=witness,
                coverage=_coverage(sizes, examined, True),
                elapsed_ms=_elapsed(start),
            )
    return SolverResult(
        kind=kind,
        param=param,
        n=g.n,
        value=None,
        witness=None,
        coverage=_coverage(sizes, examined, True),
        elapsed_ms=_elapsed(start),
    )


def _coverage(sizes, examined, quotient_used) -> dict:
    return {
        "sizes_searched": list(sizes),
        "subsets_examined": examined,
        "quotient_used": quotient_used,
    }


def _elapsed(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


# --- public solver entry points -------------------------------------------

def brute_force_min_cut(
    g: CubeGraph,
    kind: str,
    param: int,
    bound: int,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> SolverResult:
    """Enumerate every fault set of size 1..bound in increasing size.

    kind is "plain" (param ignored, treated as h=0), "restricted" or
    "extra".  Each size is swept fully; the witness is the lex-first
    valid cut at the first admitting size.
    """
    if kind not in ("plain", "restricted", "extra"):
        raise ValueError(f"unknown cut kind {kind!r}")
    if kind == "plain":
        param = 0
    start = time.perf_counter()
    size = g.num_vertices
    bound = min(bound, size - 1)
    total = sum(comb(size, k) for k in range(1, bound + 1))
    if total > max_subsets:
        raise BudgetExceededError(total, max_subsets)
    examined = 0
    sizes = []
    for k in range(1, bound + 1):
        sizes.append(k)
        best = None
        for subset in combinations(range(size), k):
            examined += 1
            if best is not None:
                continue
            if kind == "extra":
                verdict = analysis.is_g_extra_cut(g, subset, param)
            else:
                verdict = analysis.is_restricted_h_cut(g, subset, param)
            if verdict.is_cut:
                best = subset
        if best is not None:
            return SolverResult(
                kind=kind,
                param=param,
                n=g.n,
                value=k,
                witness=best,
                coverage=_coverage(sizes, examined, False),
                elapsed_ms=_elapsed(start),
            )
    return SolverResult(
        kind=kind,
        param=param,
        n=g.n,
        value=None,
        witness=None,
        coverage=_coverage(sizes, examined, False),
        elapsed_ms=_elapsed(start),
    )


def quotient_min_restricted_cut(
    g: CubeGraph,
    h: int,
    bound: int,
    workers: int = 1,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    quotient: QuotientGraph | None = None,
) -> SolverResult:
    """Minimum restricted-h cut via the partner-quotient reduction.

    Only partner-closed fault sets are searched, which is exact because
    every minimum restricted-h cut is partner-closed.  h=0 is rejected:
    an isolated class lifts to two degree-0 vertices, so the reduction
    cannot represent plain cuts that isolate a single vertex.
    """
    if h < 1:
        raise ValueError("quotient search requires h >= 1; use brute force for h=0")
    if h >= 2 * g.n:
        raise ValueError(f"h must be below {2 * g.n}")
    q = quotient if quotient is not None else build_quotient(g)
    min_deg = (h + 1) // 2
    return _quotient_search(
        g, q, "restricted", h, bound, min_deg, 0, workers, max_subsets
    )


def g_extra_min_cut(
    g: CubeGraph,
    gparam: int,
    bound: int,
    workers: int = 1,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    force_brute: bool = False,
    quotient: QuotientGraph | None = None,
) -> SolverResult:
    """Minimum g-extra cut.  Brute force on BH_2 and below (or when
    forced); otherwise the quotient route, requiring gparam >= 1.  The
    component-size condition maps to a class-count threshold of
    max(2, ceil((gparam+1)/2))."""
    if gparam < 0:
        raise ValueError("g must be nonnegative")
    if g.n <= 2 or force_brute or gparam == 0:
        return brute_force_min_cut(g, "extra", gparam, bound, max_subsets)
    q = quotient if quotient is not None else build_quotient(g)
    # a singleton class lifts to two nonadjacent vertices (partners share a
    # neighborhood but never an edge), so components need >= 2 classes
    min_count = max(2, (gparam + 2) // 2)
    return _quotient_search(
        g, q, "extra", gparam, bound, 0, min_count, workers, max_subsets
    )


# --- reduction soundness cross-check --------------------------------------

def _quotient_restricted_verdict(q: QuotientGraph, classes, h: int) -> bool:
    all_mask = (1 << q.num_classes) - 1
    removed = 0
    for c in classes:
        removed |= 1 << c
    return _quotient_find_ok(q.adj_mask, all_mask, removed, (h + 1) // 2, 0)


def verify_lift_equivalence(
    g: CubeGraph,
    q: QuotientGraph,
    sample_budget: int = 100_000,
    max_class_size: int | None = None,
    seed: int = 0,
) -> dict:
    """Cross-check the quotient-level restricted-h verdict against the
    direct predicate on the lifted fault set, for h in 1..4.

    Exhaustive over all proper nonempty class subsets when the quotient
    is small (BH_1, BH_2); random-sampled otherwise.  Any mismatch means
    the reduction is unsound and the solver must not be trusted.
    """
    import random

    m = q.num_classes
    hs = [h for h in (1, 2, 3, 4) if h < 2 * g.n]
    subsets: Iterable[tuple[int, ...]]
    if m <= 10:
        limit = max_class_size if max_class_size is not None else m - 1
        subsets = (
            s for k in range(1, limit + 1) for s in combinations(range(m), k)
        )
        exhaustive = True
    else:
        rng = random.Random(seed)
        limit = max_class_size if max_class_size is not None else m - 1

        def sampled():
            for _ in range(sample_budget):
                k = rng.randint(1, limit)
                yield tuple(sorted(rng.sample(range(m), k)))

        subsets = sampled()
        exhaustive = False
    checked = 0
    mismatches = []
    for classes in subsets:
        checked += 1
        lifted = q.lift(g, classes)
        report = analysis.components(g, lifted)
        for h in hs:
            direct = analysis.verdicts_from_report(report, "restricted", h).is_cut
            reduced = _quotient_restricted_verdict(q, classes, h)
            if direct != reduced:
                mismatches.append(
                    {"classes": list(classes), "h": h,
                     "direct": direct, "quotient": reduced}
                )
    return {
        "n": g.n,
        "exhaustive": exhaustive,
        "subsets_checked": checked,
        "h_values": hs,
        "mismatches": mismatches,
    }
