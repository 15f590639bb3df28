"""The pair graph of non-nested two-matchings, its exact chromatic number,
vertex criticality, and the derived monochromatic non-nested two-matching.

Vertices of the pair graph on parameter t are the non-consecutive edges
(i, j) of the ordered complete graph on [t+3], except the full-span pair
(1, t+3); two vertices are adjacent exactly when the corresponding edges
are crossing or separated, i.e. when together they form a non-nested
two-matching.  Any t-edge-coloring of the host graph is a t-vertex-coloring
of the pair graph, so a chromatic number of t+1 forces two adjacent
vertices of equal color -- a monochromatic non-nested two-matching.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ordram.core import (
    Certificate,
    Constraint,
    Edge,
    LimitExceeded,
    NoneFound,
    OrderedColoring,
    Relation,
    classify_pair,
    coloring_to_text,
)

CHROMATIC_VERTEX_LIMIT = 60

NON_NESTED = Constraint.forbid(Relation.NESTED)


@dataclass(frozen=True, eq=False)
class KneserSubgraph:
    """The pair graph for parameter t: vertices are Edge objects, adjacency
    holds each unordered adjacent pair once, as (smaller, larger)."""

    t: int
    vertices: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[Edge, Edge], ...]
    _neighbors: Dict[Edge, frozenset] = field(repr=False, default=None)

    def __post_init__(self):
        nbrs = {v: set() for v in self.vertices}
        for u, v in self.adjacency:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(
            self, "_neighbors", {v: frozenset(s) for v, s in nbrs.items()})

    def neighbors(self, v: Edge) -> frozenset:
        return self._neighbors[v]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def without(self, removed: Edge) -> "KneserSubgraph":
        """The induced subgraph after deleting one vertex."""
        if removed not in self._neighbors:
            raise ValueError(f"{removed} is not a vertex")
        return KneserSubgraph(
            self.t,
            tuple(v for v in self.vertices if v != removed),
            tuple(pair for pair in self.adjacency if removed not in pair),
        )


@lru_cache(maxsize=None)
def build_g(t: int) -> KneserSubgraph:
    """The pair graph on parameter t.

    Vertices: edges (i, j) of [t+3] with j >= i+2, excluding (1, t+3).
    Adjacency: vertex pairs whose edges are crossing or separated.
    The result is cached; treat it as immutable (use `without` for
    vertex-deleted copies).
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    m = t + 3
    vertices = tuple(
        Edge(i, j)
        for i in range(1, m)
        for j in range(i + 2, m + 1)
        if (i, j) != (1, m)
    )
    adjacency = tuple(
        (u, v) for u, v in combinations(vertices, 2)
        if not u.shares_vertex(v)
        and classify_pair(u, v) in (Relation.CROSSING, Relation.SEPARATED)
    )
    return KneserSubgraph(t, vertices, adjacency)


def _as_graph(g) -> Tuple[list, dict]:
    """Accept a KneserSubgraph or a {vertex: iterable-of-neighbors} mapping."""
    if isinstance(g, KneserSubgraph):
        return list(g.vertices), {v: set(g.neighbors(v)) for v in g.vertices}
    nbrs = {v: set(ns) for v, ns in dict(g).items()}
    for v, ns in nbrs.items():
        for u in ns:
            if v not in nbrs.get(u, ()):  # pragma: no cover - defensive
                raise ValueError(f"adjacency not symmetric at {u!r}/{v!r}")
    return list(nbrs), nbrs


def _greedy_clique(order: list, adj_masks: List[int], index: dict) -> List[int]:
    """A maximal clique found greedily by descending degree; its size is the
    lower bound handed to the exact search."""
    best: List[int] = []
    by_degree = sorted(range(len(order)), key=lambda i: -bin(adj_masks[i]).count("1"))
    for start in by_degree[:8]:
        clique = [start]
        common = adj_masks[start]
        while common:
            cand = max(
                (i for i in range(len(order)) if common >> i & 1),
                key=lambda i: bin(common & adj_masks[i]).count("1"),
            )
            clique.append(cand)
            common &= adj_masks[cand]
        if len(clique) > len(best):
            best = clique
    return best


def _search_coloring(nverts: int, adj_masks: List[int], k: int,
                     preassigned: List[int]) -> Optional[List[int]]:
    """Exact backtracking k-colorability with saturation-first vertex choice
    and first-use color-index capping; returns an assignment or None after
    exhausting the space."""
    colors = [-1] * nverts
    color_masks = [0] * k
    max_used = -1
    for c, v in enumerate(preassigned):
        colors[v] = c
        color_masks[c] |= 1 << v
        max_used = max(max_used, c)
    uncolored = [v for v in range(nverts) if colors[v] < 0]

    def choose() -> Optional[int]:
        best_v, best_key = None, None
        for v in uncolored:
            if colors[v] >= 0:
                continue
            a = adj_masks[v]
            sat = sum(1 for c in range(max_used + 1) if a & color_masks[c])
            key = (sat, bin(a).count("1"))
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec() -> bool:
        nonlocal max_used
        v = choose()
        if v is None:
            return True
        a = adj_masks[v]
        top = min(k - 1, max_used + 1)
        for c in range(top + 1):
            if a & color_masks[c]:
                continue
            colors[v] = c
            color_masks[c] |= 1 << v
            prev = max_used
            max_used = max(max_used, c)
            if rec():
                return True
            max_used = prev
            color_masks[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return colors if rec() else None


def _prepare(g, limit: int):
    verts, nbrs = _as_graph(g)
    if len(verts) > limit:
        raise LimitExceeded(
            f"{len(verts)} vertices exceeds the exact-search limit {limit}")
    index = {v: i for i, v in enumerate(verts)}
    adj_masks = [0] * len(verts)
    for v, ns in nbrs.items():
        for u in ns:
            adj_masks[index[v]] |= 1 << index[u]
    return verts, index, adj_masks


def is_colorable(g, k: int, limit: int = CHROMATIC_VERTEX_LIMIT) -> Optional[dict]:
    """A proper k-coloring as {vertex: color}, or None when exhaustive search
    proves none exists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    verts, index, adj_masks = _prepare(g, limit)
    if not verts:
        return {}
    if k == 0:
        return None
    clique = _greedy_clique(verts, adj_masks, index)
    if len(clique) > k:
        return None
    assignment = _search_coloring(len(verts), adj_masks, k, clique)
    if assignment is None:
        return None
    return {v: assignment[i] for v, i in index.items()}


def chromatic_number(g, limit: int = CHROMATIC_VERTEX_LIMIT) -> Tuple[int, dict]:
    """The exact chromatic number with a verified proper-coloring witness.

    Starts at the greedy-clique size and increases k until the exact search
    finds a coloring; every value below the answer is refuted by exhaustion.
    """
    verts, index, adj_masks = _prepare(g, limit)
    if not verts:
        return 0, {}
    if not any(adj_masks):
        return 1, {v: 0 for v in verts}
    k = max(2, len(_greedy_clique(verts, adj_masks, index)))
    while True:
        witness = is_colorable(g, k, limit)
        if witness is not None:
            return k, witness
        k += 1


def critical_vertices(g, limit: int = CHROMATIC_VERTEX_LIMIT) -> List[Edge]:
    """All vertices whose removal lowers the chromatic number.

    Each candidate is decided by an independent exact search on the reduced
    graph; no incremental shortcuts.
    """
    if not isinstance(g, KneserSubgraph):
        raise ValueError("criticality is defined here for KneserSubgraph inputs")
    chi, _ = chromatic_number(g, limit)
    out = []
    for v in g.vertices:
        if is_colorable(g.without(v), chi - 1, limit) is not None:
            out.append(v)
    return out


def m2_from_edge_coloring(coloring: OrderedColoring) -> Certificate:
    """A monochromatic non-nested two-matching in any t-coloring of [t+3].

    The edge-coloring is read as a vertex-coloring of the pair graph; its
    chromatic number t+1 guarantees two adjacent equal-colored vertices,
    found by a direct scan of the adjacency list.
    """
    t = coloring.t
    if coloring.m != t + 3:
        raise ValueError(
            f"need m = t+3 vertices for t = {t}, got m = {coloring.m}")
    g = build_g(t)
    for u, v in g.adjacency:
        cu = coloring.color_of(u)
        if cu == coloring.color_of(v):
            return Certificate(
                "Matching", (u, v), cu, NON_NESTED,
                producer="m2_from_edge_coloring")
    raise NoneFound(
        "no equal-colored adjacent pair; this contradicts the chromatic "
        "bound -- offending coloring:\n" + coloring_to_text(coloring))


def graph_to_text(g: KneserSubgraph) -> str:
    """Plain adjacency-list text: one vertex pair per line (two numbers),
    then one adjacent pair per line (four numbers)."""
    lines = [f"{v.lo} {v.hi}" for v in g.vertices]
    lines += [f"{u.lo} {u.hi} {v.lo} {v.hi}" for u, v in g.adjacency]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Tuple[Tuple[Edge, ...], Tuple[Tuple[Edge, Edge], ...]]:
    """Parse the plain adjacency-list format back into (vertices, adjacency)."""
    vertices: List[Edge] = []
    adjacency: List[Tuple[Edge, Edge]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2:
            vertices.append(Edge(int(parts[0]), int(parts[1])))
        elif len(parts) == 4:
            adjacency.append((Edge(int(parts[0]), int(parts[1])),
                              Edge(int(parts[2]), int(parts[3]))))
        else:
            raise ValueError(f"line {lineno}: expected 2 or 4 numbers, got {line!r}")
    return tuple(vertices), tuple(adjacency)
