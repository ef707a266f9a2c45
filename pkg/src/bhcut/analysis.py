"""Fault-set evaluation: component census and conditional-cut predicates.

A fault set is a set of vertex indices to delete.  A restricted-h cut
leaves every component with minimum degree >= h; a g-extra cut leaves
every component with at least g+1 vertices.  Minimum degrees are always
measured inside the induced component, never against the host graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .topology import CubeGraph, partner


class EmptyGraphError(ValueError):
    pass


def as_fault_set(g: CubeGraph, faults: Iterable[int]) -> frozenset[int]:
    f = frozenset(faults)
    if not all(0 <= i < g.num_vertices for i in f):
        raise ValueError("fault set contains indices outside the graph")
    if len(f) == g.num_vertices:
        raise EmptyGraphError("fault set deletes every vertex")
    return f


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    min_degree: int

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]
    fault_size: int

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "fault_size": self.fault_size,
            "components": [
                {
                    "size": c.size,
                    "min_degree": c.min_degree,
                    "vertices": list(c.vertices),
                }
                for c in self.components
            ],
        }


@dataclass(frozen=True)
class CutVerdict:
    is_cut: bool
    kind: str  # "plain", "restricted" or "extra"
    param: int
    failing_component: Component | None = None

    def to_json(self) -> dict:
        out: dict = {"is_cut": self.is_cut, "kind": self.kind, "param": self.param}
        if self.failing_component is not None:
            out["failing_component"] = {
                "size": self.failing_component.size,
                "min_degree": self.failing_component.min_degree,
                "vertices": list(self.failing_component.vertices),
            }
        return out


def components(g: CubeGraph, faults: Iterable[int]) -> ComponentReport:
    """BFS decomposition of G-F with per-component minimum degree.

    Components are ordered by their smallest contained index so reports
    are byte-stable.
    """
    f = as_fault_set(g, faults)
    seen = [False] * g.num_vertices
    comps: list[Component] = []
    for start in range(g.num_vertices):
        if seen[start] or start in f:
            continue
        queue = deque([start])
        seen[start] = True
        members = []
        while queue:
            u = queue.popleft()
            members.append(u)
            for w in g.adj[u]:
                if not seen[w] and w not in f:
                    seen[w] = True
                    queue.append(w)
        member_set = set(members)
        min_deg = min(
            sum(1 for w in g.adj[u] if w in member_set) for u in members
        )
        comps.append(Component(vertices=tuple(sorted(members)), min_degree=min_deg))
    return ComponentReport(components=tuple(comps), fault_size=len(f))


def is_restricted_h_cut(
    g: CubeGraph, faults: Iterable[int], h: int
) -> CutVerdict:
    """F is a restricted-h cut iff G-F is disconnected and every component
    has minimum degree >= h.  h=0 is the plain vertex cut."""
    if not 0 <= h < 2 * g.n:
        raise ValueError(f"h must be in 0..{2 * g.n - 1}, got {h}")
    report = components(g, faults)
    kind = "plain" if h == 0 else "restricted"
    return _verdict_from_report(report, kind, h, lambda c: c.min_degree >= h)


def is_g_extra_cut(
    g: CubeGraph, faults: Iterable[int], gparam: int
) -> CutVerdict:
    """F is a g-extra cut iff G-F is disconnected and every component has
    at least gparam+1 vertices."""
    if gparam < 0:
        raise ValueError(f"g must be nonnegative, got {gparam}")
    report = components(g, faults)
    return _verdict_from_report(
        report, "extra", gparam, lambda c: c.size >= gparam + 1
    )


def verdicts_from_report(
    report: ComponentReport, kind: str, param: int
) -> CutVerdict:
    """Re-derive a verdict from an existing census (used when many
    parameters are evaluated against one fault set)."""
    if kind in ("restricted", "plain"):
        return _verdict_from_report(
            report, kind, param, lambda c: c.min_degree >= param
        )
    if kind == "extra":
        return _verdict_from_report(
            report, kind, param, lambda c: c.size >= param + 1
        )
    raise ValueError(f"unknown cut kind {kind!r}")


def _verdict_from_report(report, kind, param, ok) -> CutVerdict:
    if report.connected:
        return CutVerdict(is_cut=False, kind=kind, param=param)
    for c in report.components:
        if not ok(c):
            return CutVerdict(
                is_cut=False, kind=kind, param=param, failing_component=c
            )
    return CutVerdict(is_cut=True, kind=kind, param=param)


def partner_closure_check(g: CubeGraph, vertex_set: Iterable[int]) -> bool:
    """True iff the set is closed under the partner involution."""
    s = set(vertex_set)
    return all(g.partner_index(u) in s for u in s)
