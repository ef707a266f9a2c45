"""Balanced hypercube construction and structural queries.

Vertices of the n-dimensional balanced hypercube are length-n tuples over
Z4.  Coordinate a_0 is the inner index, a_1..a_{n-1} are outer indices.
The canonical vertex index is the mixed-radix base-4 integer with a_0
least significant, giving O(1) vertex<->index conversion and a stable
output ordering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

Vertex = tuple[int, ...]

#: refuse to build graphs with more than 4**MAX_DIMENSION vertices
MAX_DIMENSION = 10


class InvalidVertexError(ValueError):
    pass


class ConfigurationError(ValueError):
    pass


def validate_vertex(v: Vertex, n: int) -> None:
    if len(v) != n or any(c not in (0, 1, 2, 3) for c in v):
        raise InvalidVertexError(f"not a valid dimension-{n} vertex: {v!r}")


def vertex_index(v: Vertex) -> int:
    """Canonical index: base-4 integer, a_0 least significant."""
    idx = 0
    for c in reversed(v):
        idx = idx * 4 + c
    return idx


def index_vertex(idx: int, n: int) -> Vertex:
    coords = []
    for _ in range(n):
        coords.append(idx & 3)
        idx >>= 2
    return tuple(coords)


def format_vertex(v: Vertex) -> str:
    """Parenthesized text form, e.g. "(0,3,1)"."""
    return "(" + ",".join(str(c) for c in v) + ")"


def parse_vertex(text: str) -> Vertex:
    """Accepts "(0,3,1)" or the compact digit string "031" (a_0 first)."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        parts = text[1:-1].split(",")
    else:
        parts = list(text)
    try:
        v = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InvalidVertexError(f"cannot parse vertex from {text!r}") from exc
    if not v or any(c not in (0, 1, 2, 3) for c in v):
        raise InvalidVertexError(f"cannot parse vertex from {text!r}")
    return v


def compact_vertex(v: Vertex) -> str:
    """Compact base-4 digit string, a_0 first."""
    return "".join(str(c) for c in v)


def neighbors_direct(v: Vertex, n: int) -> set[Vertex]:
    """The 2n neighbors of v: two per dimension.

    Dimension 0 steps the inner index by +-1; dimension i additionally
    shifts a_i by +1 when a_0 is even and by -1 when a_0 is odd.
    """
    validate_vertex(v, n)
    a0 = v[0]
    step = 1 if a0 % 2 == 0 else -1
    out: set[Vertex] = set()
    for d in (1, -1):
        out.add(((a0 + d) % 4,) + v[1:])
        for i in range(1, n):
            coords = list(v)
            coords[0] = (a0 + d) % 4
            coords[i] = (coords[i] + step) % 4
            out.add(tuple(coords))
    return out


def partner(v: Vertex) -> Vertex:
    """The unique other vertex with the same neighborhood: a_0 shifted by 2."""
    return ((v[0] + 2) % 4,) + v[1:]


@dataclass(frozen=True)
class CubeGraph:
    """Immutable adjacency structure of BH_n.

    adj[i] is the sorted tuple of neighbor indices of vertex i; edge_dim
    maps each edge (u, v) with u < v to its dimension tag in 0..n-1.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    edge_dim: dict[tuple[int, int], int] = field(repr=False)

    @property
    def num_vertices(self) -> int:
        return 4**self.n

    @property
    def num_edges(self) -> int:
        return self.n * 4**self.n

    def vertex(self, idx: int) -> Vertex:
        return index_vertex(idx, self.n)

    def index(self, v: Vertex) -> int:
        validate_vertex(v, self.n)
        return vertex_index(v)

    def vertices(self) -> list[Vertex]:
        return [index_vertex(i, self.n) for i in range(4**self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_dim)

    def degree(self, idx: int) -> int:
        return len(self.adj[idx])

    def partner_index(self, idx: int) -> int:
        return vertex_index(partner(index_vertex(idx, self.n)))


def _edge_dimension(u: Vertex, v: Vertex) -> int:
    diff = [i for i in range(1, len(u)) if u[i] != v[i]]
    if not diff:
        return 0
    if len(diff) == 1:
        return diff[0]
    raise InvalidVertexError(f"{u!r} and {v!r} are not adjacent")


def _finalize(n: int, neighbor_sets: list[set[int]]) -> CubeGraph:
    """Freeze adjacency, tag edge dimensions, and check the partner-pair
    structure of every neighborhood (the quotient solver relies on it)."""
    adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
    edge_dim: dict[tuple[int, int], int] = {}
    for u, nbrs in enumerate(adj):
        if len(nbrs) != 2 * n:
            raise ConfigurationError(
                f"vertex {u} has degree {len(nbrs)}, expected {2 * n}"
            )
        vu = index_vertex(u, n)
        pairs = {min(w, vertex_index(partner(index_vertex(w, n)))) for w in nbrs}
        if len(pairs) != n:
            raise ConfigurationError(
                f"neighbors of {vu} do not form {n} partner pairs"
            )
        for w in nbrs:
            if w > u:
                edge_dim[(u, w)] = _edge_dimension(vu, index_vertex(w, n))
    return CubeGraph(n=n, adj=adj, edge_dim=edge_dim)


def _check_dimension(n: int) -> None:
    if not 1 <= n <= MAX_DIMENSION:
        raise ConfigurationError(f"dimension must be in 1..{MAX_DIMENSION}, got {n}")


def build_direct(n: int) -> CubeGraph:
    """Build BH_n from the closed-form neighbor formulas."""
    _check_dimension(n)
    size = 4**n
    neighbor_sets = [
        {vertex_index(w) for w in neighbors_direct(index_vertex(i, n), n)}
        for i in range(size)
    ]
    return _finalize(n, neighbor_sets)


def build_recursive(n: int) -> CubeGraph:
    """Build BH_n by gluing four copies of BH_{n-1}.

    Each copy k gets the appended last coordinate k; a vertex with even
    inner index gains two neighbors in copy k+1, one with odd inner index
    in copy k-1 (the two rules describe the same undirected edges).
    """
    _check_dimension(n)
    edges: set[frozenset[Vertex]] = {
        frozenset({(a,), ((a + 1) % 4,)}) for a in range(4)
    }
    verts: list[Vertex] = [(a,) for a in range(4)]
    for _ in range(n - 1):
        new_edges: set[frozenset[Vertex]] = set()
        for e in edges:
            u, v = tuple(e)
            for k in range(4):
                new_edges.add(frozenset({u + (k,), v + (k,)}))
        for v in verts:
            a0 = v[0]
            for k in range(4):
                target = (k + 1) % 4 if a0 % 2 == 0 else (k - 1) % 4
                for d in (1, -1):
                    w = ((a0 + d) % 4,) + v[1:] + (target,)
                    new_edges.add(frozenset({v + (k,), w}))
        edges = new_edges
        verts = [v + (k,) for k in range(4) for v in verts]
    neighbor_sets: list[set[int]] = [set() for _ in range(4**n)]
    for e in edges:
        u, v = tuple(e)
        ui, vi = vertex_index(u), vertex_index(v)
        neighbor_sets[ui].add(vi)
        neighbor_sets[vi].add(ui)
    return _finalize(n, neighbor_sets)


@dataclass(frozen=True)
class SubcubeSplit:
    """The four BH_{n-1} copies obtained by fixing the last outer index,
    plus the cross edges between consecutive copies."""

    n: int
    parts: tuple[tuple[int, ...], ...]
    cross_edges: dict[int, tuple[tuple[int, int], ...]] = field(repr=False)


def split_subcubes(g: CubeGraph) -> SubcubeSplit:
    """Partition by a_{n-1}; collect the (n-1)-dimension edges between
    consecutive parts.  Opposite parts carry no edges."""
    if g.n < 2:
        raise ConfigurationError("BH_1 has no subcube split")
    part_of = [g.vertex(i)[-1] for i in range(g.num_vertices)]
    parts: list[list[int]] = [[], [], [], []]
    for i, k in enumerate(part_of):
        parts[k].append(i)
    cross: dict[int, list[tuple[int, int]]] = {k: [] for k in range(4)}
    for (u, v) in g.edges():
        ku, kv = part_of[u], part_of[v]
        if ku == kv:
            continue
        if (ku - kv) % 4 == 2:
            raise ConfigurationError(
                f"edge {u}-{v} joins opposite subcubes B^{ku} and B^{kv}"
            )
        k = ku if (ku + 1) % 4 == kv else kv
        cross[k].append((u, v))
    return SubcubeSplit(
        n=g.n,
        parts=tuple(tuple(p) for p in parts),
        cross_edges={k: tuple(sorted(v)) for k, v in cross.items()},
    )


def bipartition(g: CubeGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(V_0, V_1): even versus odd inner index.  Every edge crosses."""
    v0 = tuple(i for i in range(g.num_vertices) if g.vertex(i)[0] % 2 == 0)
    v1 = tuple(i for i in range(g.num_vertices) if g.vertex(i)[0] % 2 == 1)
    for (u, v) in g.edge_dim:
        if g.vertex(u)[0] % 2 == g.vertex(v)[0] % 2:
            raise ConfigurationError(f"monochromatic edge {u}-{v}")
    return v0, v1


def adjacency_text(g: CubeGraph) -> str:
    """Line-oriented adjacency export: "index: idx1 idx2 ..."."""
    lines = [
        f"{i}: " + " ".join(str(w) for w in g.adj[i]) for i in range(g.num_vertices)
    ]
    return "\n".join(lines) + "\n"


def graph_json(g: CubeGraph) -> str:
    edges = g.edges()
    payload = {
        "n": g.n,
        "vertices": [format_vertex(g.vertex(i)) for i in range(g.num_vertices)],
        "edges": [list(e) for e in edges],
        "edge_dims": [g.edge_dim[e] for e in edges],
    }
    return json.dumps(payload, sort_keys=False, separators=(",", ":")) + "\n"
