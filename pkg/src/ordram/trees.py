"""Monochromatic spanning-tree solvers, extremal colorings, and exact
subtree/subgraph oracles for relation-constrained structures.

The three find_tree_* solvers take any 2-coloring of the ordered complete
graph and produce a monochromatic spanning tree avoiding one relation
(crossing / nested / separated).  Existence is a theorem, so they never
fail; every returned certificate can be re-checked with
validate_certificate.
"""

from __future__ import annotations

from typing import Optional

from ordram._clique import max_clique
from ordram.core import (
    Certificate,
    Constraint,
    Edge,
    OracleLimitExceeded,
    OrderedColoring,
    Relation,
    classify_pair,
    edge_index,
)

__all__ = [
    "find_tree_noncrossing",
    "find_tree_nonnested",
    "find_tree_nonseparated",
    "dense_nonseparated_subgraph",
    "construct_prop6",
    "construct_thm8",
    "max_constrained_subtree",
    "max_constrained_subgraph",
    "SUBTREE_ORACLE_LIMIT",
    "SUBGRAPH_ORACLE_LIMIT",
]

SUBTREE_ORACLE_LIMIT = 14
SUBGRAPH_ORACLE_LIMIT = 12


def _require_two_colors(coloring: OrderedColoring) -> None:
    if coloring.t != 2:
        raise ValueError(f"tree solvers need a 2-coloring, got t={coloring.t}")


# ============================================================
# Spanning tree without crossing pairs
# ============================================================

def find_tree_noncrossing(coloring: OrderedColoring) -> Certificate:
    """Monochromatic spanning tree with no crossing independent pair.

    Induction on the vertex count: if the consecutive path is monochromatic
    it is the answer; otherwise the smallest interior vertex whose two path
    edges disagree is deleted, the smaller instance solved, and the vertex
    reattached by whichever of its two path edges matches the returned
    color.  The reattachment edge spans a gap of the reduced vertex set, so
    it cannot cross any other tree edge.
    """
    _require_two_colors(coloring)

    def rec(verts):
        n = len(verts)
        if n == 1:
            return [], 0
        path = [Edge(verts[k], verts[k + 1]) for k in range(n - 1)]
        cols = [coloring.color_of(e) for e in path]
        pivot = next((k for k in range(1, n - 1) if cols[k - 1] != cols[k]), None)
        if pivot is None:
            return path, cols[0]
        sub, c = rec(verts[:pivot] + verts[pivot + 1:])
        attach = path[pivot - 1] if cols[pivot - 1] == c else path[pivot]
        return sub + [attach], c

    edges, color = rec(list(range(1, coloring.m + 1)))
    return Certificate("SpanningTree", tuple(edges), color,
                       Constraint.forbid(Relation.CROSSING),
                       producer="find_tree_noncrossing")


# ============================================================
# Spanning trees without nested / separated pairs
# ============================================================
#
# Both solvers recurse on the suffix [a+1, m] after handling the first
# active vertex a, temporarily recoloring some edges.  The overlay is one
# mutable color array plus a global swap flag (t = 2), with an undo log so
# each level restores what it changed.

def _kruskal(prioritized_edges, vertices):
    """Spanning tree of the given vertex set, keeping earlier edges first."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    kept = []
    for e in prioritized_edges:
        ra, rb = find(e.lo), find(e.hi)
        if ra != rb:
            parent[ra] = rb
            kept.append(e)
    assert len(kept) == len(vertices) - 1, "splice did not span"
    return kept


class _Overlay:
    """Mutable view of a 2-coloring supporting swap-all and forced recolors."""

    def __init__(self, coloring: OrderedColoring):
        self.m = coloring.m
        self.col = list(coloring.colors)
        self.flip = 0

    def eff(self, lo: int, hi: int) -> int:
        return self.col[edge_index(self.m, lo, hi)] ^ self.flip

    def force_blue(self, lo: int, hi: int, undo) -> None:
        idx = edge_index(self.m, lo, hi)
        undo.append((idx, self.col[idx]))
        self.col[idx] = 1 ^ self.flip

    def restore(self, undo) -> None:
        for idx, old in reversed(undo):
            self.col[idx] = old


def _tree_by_suffix_recursion(coloring: OrderedColoring, nested_variant: bool):
    """Shared engine for the non-nested and non-separated tree solvers.

    At each level the first active vertex a is examined.  After normalizing
    (by a full color swap) so that the anchor edge -- (a, a+1) for the
    nested variant, (a, m) for the separated one -- is blue, either vertex
    a's edges are all blue (monochromatic star, done), or the extreme red
    edge (a, s) splits the instance: the block away from s is recolored
    blue and the suffix [a+1, m] is solved recursively.  A blue answer is
    spliced with the star at a (dropping recolored block edges, pruning
    cycles); a red answer is extended by (a, s).
    """
    m = coloring.m
    ov = _Overlay(coloring)

    def rec(a):
        # returns (edges, color) in the current effective coloring, spanning [a, m]
        if a == m:
            return [], 1
        if a == m - 1:
            return [Edge(a, m)], ov.eff(a, m)
        anchor_hi = a + 1 if nested_variant else m
        swapped = ov.eff(a, anchor_hi) == 0
        if swapped:
            ov.flip ^= 1

        reds = [j for j in range(a + 1, m + 1) if ov.eff(a, j) == 0]
        if not reds:
            result = [Edge(a, j) for j in range(a + 1, m + 1)], 1
        else:
            undo = []
            if nested_variant:
                s = min(reds)  # (a, a+1) is blue, so s >= a+2
                block = range(a + 1, s)        # recolor the prefix block [a, s-1]
                star = [Edge(a, j) for j in block]
            else:
                s = max(reds)  # (a, m) is blue, so s <= m-1
                block = range(s + 1, m + 1)    # recolor the suffix block [s+1, m]
                star = [Edge(a, j) for j in block]
            for u in block:
                for v in block:
                    if u < v:
                        ov.force_blue(u, v, undo)
            sub, c = rec(a + 1)
            if c == 1:
                lo_b, hi_b = min(block), max(block)
                kept = [e for e in sub if not (lo_b <= e.lo and e.hi <= hi_b)]
                edges = _kruskal(star + sorted(kept), range(a, m + 1))
                result = edges, 1
            else:
                result = sub + [Edge(a, s)], 0
            ov.restore(undo)

        if swapped:
            ov.flip ^= 1
            return result[0], result[1] ^ 1
        return result

    return rec(1)


def find_tree_nonnested(coloring: OrderedColoring) -> Certificate:
    """Monochromatic spanning tree with no nested independent pair."""
    _require_two_colors(coloring)
    edges, color = _tree_by_suffix_recursion(coloring, nested_variant=True)
    return Certificate("SpanningTree", tuple(edges), color,
                       Constraint.forbid(Relation.NESTED),
                       producer="find_tree_nonnested")


def find_tree_nonseparated(coloring: OrderedColoring) -> Certificate:
    """Monochromatic spanning tree with no separated independent pair."""
    _require_two_colors(coloring)
    edges, color = _tree_by_suffix_recursion(coloring, nested_variant=False)
    return Certificate("SpanningTree", tuple(edges), color,
                       Constraint.forbid(Relation.SEPARATED),
                       producer="find_tree_nonseparated")


# ============================================================
# Dense non-separated subgraph
# ============================================================

def dense_nonseparated_subgraph(coloring: OrderedColoring) -> Certificate:
    """Majority color class of the edges straddling the midpoint.

    Every straddling edge covers the gap between positions ⌊m/2⌋ and
    ⌊m/2⌋+1, so no two of them are separated; the majority color keeps at
    least ⌊m²/8⌋ of them.
    """
    _require_two_colors(coloring)
    mid = coloring.m // 2
    straddling = [e for e in coloring.edges() if e.lo <= mid < e.hi]
    by_color = [[e for e in straddling if coloring.color_of(e) == c] for c in (0, 1)]
    color = 0 if len(by_color[0]) >= len(by_color[1]) else 1
    return Certificate("Subgraph", tuple(by_color[color]), color,
                       Constraint.forbid(Relation.SEPARATED),
                       producer="dense_nonseparated_subgraph")


# ============================================================
# Extremal colorings
# ============================================================

def construct_prop6(variant: str, n: int) -> OrderedColoring:
    """Colorings of [n] with no monochromatic non-crossing (resp. non-nested)
    subgraph of n edges: consecutive path blue, or blue iff i+j even."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if variant == "noncrossing":
        return OrderedColoring.from_function(n, 2, lambda lo, hi: 1 if hi - lo == 1 else 0)
    if variant == "nonnested":
        return OrderedColoring.from_function(n, 2, lambda lo, hi: 1 if (lo + hi) % 2 == 0 else 0)
    raise ValueError(f"unknown variant {variant!r}")


def construct_thm8(variant: str, n: int) -> OrderedColoring:
    """Colorings of [n] bounding monochromatic relation-constrained subtrees:
    the split coloring for the separated variant, parity for the others."""
    if variant == "separated":
        if n < 4:
            raise ValueError(f"separated variant needs n >= 4, got {n}")
        mid = n // 2
        return OrderedColoring.from_function(n, 2, lambda lo, hi: 0 if lo <= mid < hi else 1)
    if variant in ("nested", "crossing"):
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        return OrderedColoring.from_function(n, 2, lambda lo, hi: 1 if (lo + hi) % 2 == 0 else 0)
    raise ValueError(f"unknown variant {variant!r}")


# ============================================================
# Exact oracles
# ============================================================

def max_constrained_subtree(coloring: OrderedColoring, constraint: Constraint,
                            color: int, limit: int = SUBTREE_ORACLE_LIMIT):
    """Exact maximum vertex count of a monochromatic subtree whose
    independent edge pairs all satisfy the constraint; with witness.

    Branch and bound growing connected acyclic edge sets.  A star is always
    valid (no independent pairs), which seeds the bound; branches are cut
    when the component reachable in the color class cannot beat the best.
    """
    m = coloring.m
    if m > limit:
        raise OracleLimitExceeded(f"m={m} exceeds subtree oracle limit {limit}")
    cls = [e for e in coloring.edges() if coloring.color_of(e) == color]
    adj = {v: set() for v in range(1, m + 1)}
    for e in cls:
        adj[e.lo].add(e.hi)
        adj[e.hi].add(e.lo)

    # warm start: best star
    best, best_edges = 1, ()
    for v in range(1, m + 1):
        if len(adj[v]) + 1 > best:
            best = len(adj[v]) + 1
            best_edges = tuple(sorted(Edge(min(v, u), max(v, u)) for u in adj[v]))

    def reach_size(vset):
        seen = set(vset)
        stack = list(vset)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen)

    seen_trees = set()

    def grow(tree, vset):
        nonlocal best, best_edges
        if len(vset) > best:
            best, best_edges = len(vset), tuple(sorted(tree))
        if reach_size(vset) <= best:
            return
        for v in sorted(vset):
            for u in sorted(adj[v]):
                if u in vset:
                    continue
                e = Edge(min(v, u), max(v, u))
                key = frozenset(tree) | {e}
                if key in seen_trees:
                    continue
                seen_trees.add(key)
                if all(e.shares_vertex(f) or constraint.allows(classify_pair(e, f))
                       for f in tree):
                    grow(tree + [e], vset | {u})

    for root in range(1, m + 1):
        grow([], {root})

    witness = Certificate("Subtree", best_edges, color, constraint,
                          producer="max_constrained_subtree")
    return best, witness


def _compat_clique(items, compatible, constraint, color, kind, producer,
                   warm=None):
    """Max pairwise-compatible subset via the clique engine, with witness."""
    n = len(items)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if compatible(items[i], items[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    warm_size, warm_mask = 0, 0
    if warm:
        warm_size = len(warm)
        for i in warm:
            warm_mask |= 1 << i
    size, mask = max_clique(n, adj, warm_size, warm_mask)
    edges = tuple(items[i] for i in range(n) if mask >> i & 1)
    return size, Certificate(kind, edges, color, constraint, producer=producer)


def max_constrained_subgraph(coloring: OrderedColoring, constraint: Constraint,
                             color: int, limit: int = SUBGRAPH_ORACLE_LIMIT):
    """Exact maximum edge count of a monochromatic subgraph whose
    independent pairs all satisfy the constraint; with witness.

    Valid subsets are exactly the cliques of the compatibility graph on the
    color class (edges compatible when they share a vertex or their
    relation is allowed).
    """
    if coloring.m > limit:
        raise OracleLimitExceeded(f"m={coloring.m} exceeds subgraph oracle limit {limit}")
    cls = [e for e in coloring.edges() if coloring.color_of(e) == color]

    def compatible(e, f):
        return e.shares_vertex(f) or constraint.allows(classify_pair(e, f))

    # warm start: the largest star of the class is always compatible
    stars = {}
    for i, e in enumerate(cls):
        stars.setdefault(e.lo, []).append(i)
        stars.setdefault(e.hi, []).append(i)
    warm = max(stars.values(), key=len, default=None)
    return _compat_clique(cls, compatible, constraint, color, "Subgraph",
                          "max_constrained_subgraph", warm=warm)
