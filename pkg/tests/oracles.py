"""Naive reference implementations used only by the test suite.

These deliberately use different algorithms than the package (interval
arithmetic instead of endpoint comparisons, full enumeration instead of
branch-and-bound) so agreement is meaningful evidence.
"""

from __future__ import annotations

from itertools import combinations

from ordram.core import Constraint, Edge, OrderedColoring, Relation


def naive_classify(e, f):
    """Relation via closed-interval arithmetic (independent of the package)."""
    a, b = e
    c, d = f
    ie = set(range(a, b + 1))
    jf = set(range(c, d + 1))
    assert len({a, b, c, d}) == 4, "oracle expects independent edges"
    if not (ie & jf):
        return Relation.SEPARATED
    if ie <= jf or jf <= ie:
        return Relation.NESTED
    return Relation.CROSSING


def independent(e, f):
    a, b = e
    c, d = f
    return len({a, b, c, d}) == 4


def pair_ok(edges, constraint: Constraint) -> bool:
    """All independent pairs of the edge list satisfy the constraint."""
    for e, f in combinations(edges, 2):
        if independent(e, f) and not constraint.allows(naive_classify(e, f)):
            return False
    return True


def all_matchings(edges):
    """Every matching (as a tuple) contained in the given edge list."""
    edges = list(edges)

    def rec(i, used, cur):
        yield tuple(cur)
        for j in range(i, len(edges)):
            e = edges[j]
            a, b = e
            if a in used or b in used:
                continue
            cur.append(e)
            yield from rec(j + 1, used | {a, b}, cur)
            cur.pop()

    yield from rec(0, frozenset(), [])


def naive_max_constrained_matching(coloring: OrderedColoring, color, constraint):
    """(size, witness) by enumerating every matching of the color class."""
    cls = coloring.color_class(color)
    best, best_m = 0, ()
    for mat in all_matchings(cls):
        if len(mat) > best and pair_ok(mat, constraint):
            best, best_m = len(mat), mat
    return best, best_m


def naive_has_matching(coloring, color, n, constraint) -> bool:
    size, _ = naive_max_constrained_matching(coloring, color, constraint)
    return size >= n


def naive_max_constrained_subgraph(coloring: OrderedColoring, color, constraint):
    """(edge count, witness) over all subsets of the color class."""
    cls = coloring.color_class(color)
    best, best_s = 0, ()
    for r in range(len(cls), 0, -1):
        if r <= best:
            break
        for sub in combinations(cls, r):
            if pair_ok(sub, constraint):
                best, best_s = r, sub
                break
    return best, best_s


def _is_tree(edges) -> bool:
    verts = set()
    for e in edges:
        verts.update((e.lo, e.hi))
    if len(edges) != len(verts) - 1:
        return False
    # connectivity by flooding
    adj = {v: set() for v in verts}
    for e in edges:
        adj[e.lo].add(e.hi)
        adj[e.hi].add(e.lo)
    seen = set()
    stack = [next(iter(verts))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v] - seen)
    return seen == verts


def naive_max_constrained_subtree(coloring: OrderedColoring, color, constraint):
    """(vertex count, witness) over all tree-shaped subsets of the color class.

    The empty subtree is a single vertex, so the floor is 1.
    """
    cls = coloring.color_class(color)
    best, best_s = 1, ()
    for r in range(len(cls)):
        r = len(cls) - r
        if r + 1 <= best:
            break
        for sub in combinations(cls, r):
            if _is_tree(sub) and pair_ok(sub, constraint):
                best, best_s = r + 1, sub
                break
    return best, best_s


def naive_is_colorable(adj, k) -> bool:
    """Straight backtracking on an adjacency dict, vertices in given order."""
    verts = list(adj)
    colors = {}

    def rec(i):
        if i == len(verts):
            return True
        v = verts[i]
        for c in range(k):
            if all(colors.get(u) != c for u in adj[v]):
                colors[v] = c
                if rec(i + 1):
                    return True
                del colors[v]
        return False

    return rec(0)


def naive_chromatic(adj) -> int:
    if not adj:
        return 0
    k = 1
    while not naive_is_colorable(adj, k):
        k += 1
    return k


def orbit_classes(m: int, t: int, use_reversal=True, use_colorperm=True):
    """Direct orbit partition of all t^E colorings under the symmetry group.

    Returns the number of orbits.  Feasible only for tiny m, t.
    """
    from itertools import permutations, product

    edges = [(lo, hi) for lo in range(1, m + 1) for hi in range(lo + 1, m + 1)]
    ne = len(edges)
    pos = {e: i for i, e in enumerate(edges)}

    def rev_vec(vec):
        out = [0] * ne
        for (lo, hi), i in pos.items():
            out[pos[(m + 1 - hi, m + 1 - lo)]] = vec[i]
        return tuple(out)

    perms = list(permutations(range(t))) if use_colorperm else [tuple(range(t))]
    seen = set()
    classes = 0
    for vec in product(range(t), repeat=ne):
        if vec in seen:
            continue
        classes += 1
        orbit = set()
        for base in (vec, rev_vec(vec)) if use_reversal else (vec,):
            for perm in perms:
                orbit.add(tuple(perm[c] for c in base))
        seen |= orbit
    return classes


# ------------------------------------------------------------
# Decision-path exhaustion
# ------------------------------------------------------------
#
# A deterministic solver reads edge colors one at a time; colorings that
# trigger identical read sequences are indistinguishable to it.  Enumerating
# the tree of read outcomes therefore covers *every* coloring while running
# the solver only once per leaf.  The coverage accounting (each leaf stands
# for t^(E - reads) colorings; the leaf weights must sum to t^E) proves no
# coloring is missed or double-counted.

class _NeedMore(Exception):
    pass


class _ProbeColoring:
    """Duck-typed coloring answering color_of from a replay script."""

    def __init__(self, m, t, script):
        self.m = m
        self.t = t
        self.script = script
        self.reads = {}

    def color_of(self, a, b=None):
        lo, hi = (a.lo, a.hi) if b is None else (a, b)
        key = (lo, hi)
        if key not in self.reads:
            if len(self.reads) == len(self.script):
                raise _NeedMore()
            self.reads[key] = self.script[len(self.reads)]
        return self.reads[key]


def exhaust_decision_paths(m, t, run, check):
    """Run `run(probe)` down every decision path; `check(coloring, result,
    reads)` validates each leaf against one concrete completion.

    Returns (number of leaves, total colorings covered); the caller should
    assert coverage == t**(m*(m-1)//2).
    """
    ne = m * (m - 1) // 2
    stack = [()]
    leaves = 0
    covered = 0
    while stack:
        script = stack.pop()
        probe = _ProbeColoring(m, t, script)
        try:
            result = run(probe)
        except _NeedMore:
            for v in range(t):
                stack.append(script + (v,))
            continue
        leaves += 1
        covered += t ** (ne - len(probe.reads))
        concrete = OrderedColoring.from_function(
            m, t, lambda lo, hi: probe.reads.get((lo, hi), 0))
        check(concrete, result, probe.reads)
    return leaves, covered
