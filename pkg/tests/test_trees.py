"""Tree solvers, dense subgraph, extremal colorings, and exact oracles."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordram import (
    Constraint,
    Edge,
    OracleLimitExceeded,
    OrderedColoring,
    Relation,
    classify_pair,
    relation_profile,
    validate_certificate,
)
from ordram.trees import (
    SUBGRAPH_ORACLE_LIMIT,
    SUBTREE_ORACLE_LIMIT,
    construct_prop6,
    construct_thm8,
    dense_nonseparated_subgraph,
    find_tree_noncrossing,
    find_tree_nonnested,
    find_tree_nonseparated,
    max_constrained_subgraph,
    max_constrained_subtree,
)

from oracles import naive_max_constrained_subgraph, naive_max_constrained_subtree

SOLVERS = [
    (find_tree_noncrossing, Relation.CROSSING),
    (find_tree_nonnested, Relation.NESTED),
    (find_tree_nonseparated, Relation.SEPARATED),
]


def random_coloring(m, t, rng):
    return OrderedColoring(m, t, tuple(rng.randrange(t) for _ in range(m * (m - 1) // 2)))


def all_colorings(m):
    ne = m * (m - 1) // 2
    for bits in product((0, 1), repeat=ne):
        yield OrderedColoring(m, 2, bits)


# ------------------------------------------------------------
# Base cases and worked traces
# ------------------------------------------------------------

class TestTreeSolverBasics:
    def test_single_vertex(self):
        col = OrderedColoring(1, 2, ())
        for solver, _ in SOLVERS:
            cert = solver(col)
            assert cert.edges == ()
            assert validate_certificate(col, cert).ok

    def test_two_vertices(self):
        for c in (0, 1):
            col = OrderedColoring(2, 2, (c,))
            for solver, _ in SOLVERS:
                cert = solver(col)
                assert cert.edges == (Edge(1, 2),)
                assert cert.color == c
                assert validate_certificate(col, cert).ok

    def test_noncrossing_pivot_trace(self):
        # red (1,2), blue rest: the pivot at 2 is removed, {1,3} solved
        # blue, and 2 reattached by its blue path edge
        col = OrderedColoring.from_function(
            3, 2, lambda lo, hi: 0 if (lo, hi) == (1, 2) else 1)
        cert = find_tree_noncrossing(col)
        assert set(cert.edges) == {Edge(1, 3), Edge(2, 3)}
        assert cert.color == 1
        assert validate_certificate(col, cert).ok

    def test_nonnested_all_blue_star(self):
        col = OrderedColoring.constant(3, 2, 1)
        cert = find_tree_nonnested(col)
        assert set(cert.edges) == {Edge(1, 2), Edge(1, 3)}
        assert cert.color == 1

    def test_nonseparated_all_red_star(self):
        col = OrderedColoring.constant(3, 2, 0)
        cert = find_tree_nonseparated(col)
        assert set(cert.edges) == {Edge(1, 2), Edge(1, 3)}
        assert cert.color == 0

    def test_parity_coloring_nonnested(self):
        col = OrderedColoring.from_function(5, 2, lambda lo, hi: 1 if (lo + hi) % 2 == 0 else 0)
        cert = find_tree_nonnested(col)
        assert len(cert.edges) == 4
        assert validate_certificate(col, cert).ok

    def test_split_coloring_nonseparated(self):
        col = OrderedColoring.from_function(6, 2, lambda lo, hi: 0 if lo <= 3 < hi else 1)
        cert = find_tree_nonseparated(col)
        assert validate_certificate(col, cert).ok

    def test_rejects_three_colors(self):
        col = OrderedColoring.constant(4, 3, 2)
        for solver, _ in SOLVERS:
            with pytest.raises(ValueError):
                solver(col)

    def test_certificates_carry_kind_and_constraint(self):
        col = OrderedColoring.constant(4, 2, 0)
        for solver, forbidden in SOLVERS:
            cert = solver(col)
            assert cert.kind == "SpanningTree"
            assert cert.constraint == Constraint.forbid(forbidden)
            assert cert.producer == solver.__name__


# ------------------------------------------------------------
# Exhaustive and randomized validity
# ------------------------------------------------------------

class TestTreeSolverValidity:
    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_exhaustive_small(self, m):
        for col in all_colorings(m):
            for solver, _ in SOLVERS:
                cert = solver(col)
                report = validate_certificate(col, cert)
                assert report.ok, (m, col.colors, solver.__name__, report)

    def test_sampled_m6(self):
        rng = random.Random(0)
        for _ in range(2000):
            col = random_coloring(6, 2, rng)
            for solver, _ in SOLVERS:
                report = validate_certificate(col, solver(col))
                assert report.ok, (col.colors, solver.__name__, report)

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_random_up_to_40(self, data):
        m = data.draw(st.integers(min_value=7, max_value=40))
        colors = data.draw(st.tuples(
            *[st.integers(0, 1) for _ in range(m * (m - 1) // 2)]))
        col = OrderedColoring(m, 2, colors)
        for solver, _ in SOLVERS:
            report = validate_certificate(col, solver(col))
            assert report.ok, (m, solver.__name__, report)


# ------------------------------------------------------------
# Dense non-separated subgraph
# ------------------------------------------------------------

class TestDenseNonseparated:
    def test_all_red_four(self):
        col = OrderedColoring.constant(4, 2, 0)
        cert = dense_nonseparated_subgraph(col)
        assert set(cert.edges) == {Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(2, 4)}
        assert cert.color == 0
        assert validate_certificate(col, cert).ok

    def test_eight_vertices_bound(self):
        rng = random.Random(1)
        for _ in range(50):
            col = random_coloring(8, 2, rng)
            cert = dense_nonseparated_subgraph(col)
            assert len(cert.edges) >= 8
            assert validate_certificate(col, cert).ok

    def test_size_bound_and_no_separated_pair(self):
        rng = random.Random(2)
        for _ in range(100):
            m = rng.randint(2, 40)
            col = random_coloring(m, 2, rng)
            cert = dense_nonseparated_subgraph(col)
            assert len(cert.edges) >= m * m // 8
            profile = relation_profile(cert.edges)
            assert profile[Relation.SEPARATED] == 0
            assert validate_certificate(col, cert).ok


# ------------------------------------------------------------
# Extremal colorings
# ------------------------------------------------------------

class TestConstructions:
    def test_prop6_noncrossing_exact(self):
        col = construct_prop6("noncrossing", 4)
        blue = {(e.lo, e.hi) for e in col.color_class(1)}
        assert blue == {(1, 2), (2, 3), (3, 4)}

    def test_prop6_nonnested_exact(self):
        col = construct_prop6("nonnested", 4)
        blue = {(e.lo, e.hi) for e in col.color_class(1)}
        assert blue == {(1, 3), (2, 4)}

    def test_prop6_rejects(self):
        with pytest.raises(ValueError):
            construct_prop6("noncrossing", 1)
        with pytest.raises(ValueError):
            construct_prop6("bogus", 5)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_prop6_noncrossing_tight(self, n):
        col = construct_prop6("noncrossing", n)
        for color in (0, 1):
            size, witness = max_constrained_subgraph(
                col, Constraint.forbid(Relation.CROSSING), color)
            assert size <= n - 1, (n, color, size)
            assert validate_certificate(col, witness).ok

    @pytest.mark.parametrize("n", range(2, 9))
    def test_prop6_nonnested_tight(self, n):
        # the red side is capped at n-1 (one nested pair among any n edges
        # whose endpoint sums repeat) and the consecutive path reaches it;
        # the blue side has only n-2 distinct even endpoint sums available
        col = construct_prop6("nonnested", n)
        expected = {0: n - 1, 1: n - 2}
        for color in (0, 1):
            size, witness = max_constrained_subgraph(
                col, Constraint.forbid(Relation.NESTED), color)
            assert size == expected[color], (n, color, size)
            assert size <= n - 1
            assert validate_certificate(col, witness).ok

    def test_thm8_separated_exact(self):
        col = construct_thm8("separated", 8)
        red = {(e.lo, e.hi) for e in col.color_class(0)}
        assert red == {(lo, hi) for lo in range(1, 5) for hi in range(5, 9)}

    def test_thm8_parity_variants(self):
        for variant in ("nested", "crossing"):
            col = construct_thm8(variant, 6)
            for e in col.edges():
                assert col.color_of(e) == (1 if (e.lo + e.hi) % 2 == 0 else 0)

    def test_thm8_rejects(self):
        with pytest.raises(ValueError):
            construct_thm8("separated", 3)
        with pytest.raises(ValueError):
            construct_thm8("bogus", 6)

    def test_thm8_avoidance_bounds(self):
        col = construct_thm8("separated", 8)
        best = max(max_constrained_subtree(col, Constraint.require(Relation.SEPARATED), c)[0]
                   for c in (0, 1))
        assert best <= 5  # ceil(8/2) + 1

        col = construct_thm8("nested", 8)
        best = max(max_constrained_subtree(col, Constraint.require(Relation.NESTED), c)[0]
                   for c in (0, 1))
        assert best <= 6  # (8+4)/2

        col = construct_thm8("crossing", 9)
        best = max(max_constrained_subtree(col, Constraint.require(Relation.CROSSING), c)[0]
                   for c in (0, 1))
        assert best <= 6  # floor((9+3)/2)


# ------------------------------------------------------------
# Exact oracles versus brute force
# ------------------------------------------------------------

CONSTRAINTS = [
    Constraint.none(),
    Constraint.forbid(Relation.CROSSING),
    Constraint.forbid(Relation.NESTED),
    Constraint.forbid(Relation.SEPARATED),
    Constraint.require(Relation.CROSSING),
    Constraint.require(Relation.NESTED),
    Constraint.require(Relation.SEPARATED),
]


class TestOracles:
    def test_subtree_small_examples(self):
        col = OrderedColoring.constant(4, 2, 0)
        size, witness = max_constrained_subtree(col, Constraint.require(Relation.NESTED), 0)
        naive_size, _ = naive_max_constrained_subtree(col, 0, Constraint.require(Relation.NESTED))
        assert size == naive_size
        assert validate_certificate(col, witness).ok

        col2 = OrderedColoring(2, 2, (1,))
        size2, witness2 = max_constrained_subtree(col2, Constraint.none(), 1)
        assert size2 == 2
        assert witness2.edges == (Edge(1, 2),)

    def test_subgraph_small_examples(self):
        col = OrderedColoring.constant(4, 2, 1)
        size, witness = max_constrained_subgraph(col, Constraint.forbid(Relation.SEPARATED), 1)
        assert size == 5
        assert validate_certificate(col, witness).ok
        # the red class is empty
        size0, witness0 = max_constrained_subgraph(col, Constraint.none(), 0)
        assert size0 == 0 and witness0.edges == ()

    def test_subtree_matches_naive(self):
        rng = random.Random(3)
        for _ in range(12):
            m = rng.randint(2, 6)
            col = random_coloring(m, 2, rng)
            for constraint in CONSTRAINTS:
                for color in (0, 1):
                    size, witness = max_constrained_subtree(col, constraint, color)
                    naive_size, _ = naive_max_constrained_subtree(col, color, constraint)
                    assert size == naive_size, (col.colors, constraint, color, size, naive_size)
                    assert validate_certificate(col, witness).ok
                    assert len(witness.vertices()) in (0, size)

    def test_subgraph_matches_naive(self):
        rng = random.Random(4)
        for _ in range(12):
            m = rng.randint(2, 6)
            col = random_coloring(m, 2, rng)
            for constraint in CONSTRAINTS:
                for color in (0, 1):
                    size, witness = max_constrained_subgraph(col, constraint, color)
                    naive_size, _ = naive_max_constrained_subgraph(col, color, constraint)
                    assert size == naive_size, (col.colors, constraint, color, size, naive_size)
                    assert len(witness.edges) == size
                    assert validate_certificate(col, witness).ok

    def test_pigeonhole_star(self):
        rng = random.Random(5)
        for _ in range(20):
            m = rng.randint(2, 12)
            col = random_coloring(m, 2, rng)
            best = max(max_constrained_subtree(col, Constraint.none(), c)[0] for c in (0, 1))
            assert best >= (m - 1 + 1) // 2 + 1, (m, col.colors, best)

    def test_limits(self):
        col = OrderedColoring.constant(SUBTREE_ORACLE_LIMIT + 1, 2, 0)
        with pytest.raises(OracleLimitExceeded):
            max_constrained_subtree(col, Constraint.none(), 0)
        col2 = OrderedColoring.constant(SUBGRAPH_ORACLE_LIMIT + 1, 2, 0)
        with pytest.raises(OracleLimitExceeded):
            max_constrained_subgraph(col2, Constraint.none(), 0)
        # explicit limit raises the ceiling
        size, _ = max_constrained_subgraph(col2, Constraint.require(Relation.NESTED), 0,
                                           limit=SUBGRAPH_ORACLE_LIMIT + 1)
        assert size >= 2
