"""Acceptance suite: one test per criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
pass/fail lines alongside the pytest verdicts.
"""

import contextlib
import sys
import time
from math import comb

import pytest

from bhcut import analysis, constructions as cons, solver, topology


@contextlib.contextmanager
def criterion(name):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[ACCEPTANCE] {name}: FAIL", file=sys.stderr)
        raise
    elapsed = time.perf_counter() - start
    print(f"[ACCEPTANCE] {name}: PASS ({elapsed:.2f}s)")


def test_criterion_1_generator_equivalence():
    with criterion("1 generator equivalence n=1..4"):
        for n in (1, 2, 3, 4):
            direct = topology.build_direct(n)
            recursive = topology.build_recursive(n)
            assert direct.adj == recursive.adj
            assert direct.num_vertices == 4**n
            assert len(direct.edges()) == n * 4**n


def test_criterion_2_structural_lemmas():
    with criterion("2 structural lemmas n=2..5"):
        for n in (2, 3, 4, 5):
            g = topology.build_direct(n)
            v0, v1 = topology.bipartition(g)  # raises on monochromatic edge
            assert len(v0) == len(v1) == 4**n // 2
            for i in range(g.num_vertices):
                assert set(g.adj[i]) == set(g.adj[g.partner_index(i)])
            split = topology.split_subcubes(g)  # raises on opposite-part edge
            for k in range(4):
                assert len(split.cross_edges[k]) == 4 ** (n - 1)


def test_criterion_3_bh2_exhaustive_constants(bh2):
    with criterion("3 BH_2 exhaustive constants"):
        for h in (1, 2):
            assert solver.brute_force_min_cut(bh2, "restricted", h, 4).value == 4
        for gparam in (1, 2, 3, 4, 5):
            assert solver.brute_force_min_cut(bh2, "extra", gparam, 4).value == 4


def test_criterion_4_kappa_3_4_bh3(bh3, q3):
    with criterion("4 kappa^3(BH_3)=kappa^4(BH_3)=12"):
        # upper bound: the explicit 12-vertex cut is a valid restricted-4 cut
        cert = cons.verify_upper_bound(3, bh3)
        assert cert.verdict == "valid" and cert.cut_size == 12
        # lower bound: no partner-closed fault set of size <= 10 works
        r = solver.quotient_min_restricted_cut(bh3, 3, 10, quotient=q3)
        assert r.value is None
        assert r.coverage["subsets_examined"] == sum(
            comb(32, k) for k in range(1, 6)
        ) == 242_824


def test_criterion_5_fig3_counterexample(bh3):
    with criterion("5 4-regular 12-vertex subgraph of BH_3"):
        core = {bh3.index(v) for v in cons.build_T(3)}
        assert len(core) == 12
        for u in core:
            assert sum(1 for w in bh3.adj[u] if w in core) == 4
        assert 12 < 2**4  # refutes the |X| >= 2^h bound at h=4


def test_criterion_6_n4_anomaly(bh4):
    with criterion("6 n=4 anomaly"):
        cut = [bh4.index(v) for v in cons.build_cut(4)]
        assert len(cut) == 24
        report = analysis.components(bh4, cut)
        assert len(report.components) == 2
        core = {bh4.index(v) for v in cons.build_T(4)}
        outer = next(
            c for c in report.components if not core & set(c.vertices)
        )
        members = set(outer.vertices)
        deg2 = {
            bh4.vertex(u)
            for u in outer.vertices
            if sum(1 for w in bh4.adj[u] if w in members) == 2
        }
        assert deg2 == set(cons.ANOMALY_VERTICES_N4)
        assert not analysis.is_restricted_h_cut(bh4, cut, 3).is_cut


def test_criterion_7_n5_construction(bh5):
    with criterion("7 n=5 construction"):
        cut = [bh5.index(v) for v in cons.build_cut(5)]
        assert len(cut) == 36 == 12 * 5 - 24
        assert analysis.is_restricted_h_cut(bh5, cut, 4).is_cut
        report = analysis.components(bh5, cut)
        core = {bh5.index(v) for v in cons.build_T(5)}
        outer = next(
            c for c in report.components if not core & set(c.vertices)
        )
        assert outer.min_degree == 4


def test_criterion_8_reduction_soundness(bh1, bh2, bh3, q2, q3):
    with criterion("8 reduction soundness"):
        q1 = solver.build_quotient(bh1)
        for g, q in ((bh1, q1), (bh2, q2)):
            rep = solver.verify_lift_equivalence(g, q)
            assert rep["exhaustive"] and not rep["mismatches"]
        rep = solver.verify_lift_equivalence(bh3, q3, sample_budget=100_000)
        assert rep["subsets_checked"] >= 100_000
        assert not rep["mismatches"]


def test_criterion_9_parity_and_monotonicity(bh2, bh3, q3):
    with criterion("9 parity and monotonicity"):
        values_2 = {
            h: solver.brute_force_min_cut(bh2, "restricted", h, 6).value
            for h in (1, 2, 3)
        }
        assert values_2[1] == values_2[2]  # the (1,2) pair coincides
        values_3 = {
            h: solver.quotient_min_restricted_cut(
                bh3, h, 12, quotient=q3
            ).value
            for h in (1, 2, 3, 4)
        }
        assert values_3[1] == values_3[2]
        assert values_3[3] == values_3[4] == 12
        for values in (values_2, values_3):
            present = [
                values[h] for h in sorted(values) if values[h] is not None
            ]
            assert present == sorted(present)
