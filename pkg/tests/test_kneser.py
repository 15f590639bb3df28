"""Pair graph of non-nested two-matchings: construction, exact chromatic
number, criticality, and the derived monochromatic two-matching."""

import random
from itertools import combinations, product

import pytest

from ordram import (
    Certificate,
    Constraint,
    Edge,
    LimitExceeded,
    OrderedColoring,
    Relation,
    classify_pair,
    validate_certificate,
)
from ordram.kneser import (
    KneserSubgraph,
    build_g,
    chromatic_number,
    critical_vertices,
    graph_from_text,
    graph_to_text,
    is_colorable,
    m2_from_edge_coloring,
)

from oracles import naive_chromatic, naive_is_colorable


def random_coloring(m, t, rng):
    return OrderedColoring(m, t, tuple(rng.randrange(t) for _ in range(m * (m - 1) // 2)))


class TestBuild:
    def test_t2_is_the_5_cycle(self):
        g = build_g(2)
        assert set(g.vertices) == {Edge(1, 3), Edge(1, 4), Edge(2, 4),
                                   Edge(2, 5), Edge(3, 5)}
        assert all(len(g.neighbors(v)) == 2 for v in g.vertices)
        # walk the cycle: degree-2 connected graph on 5 vertices, odd girth
        start = g.vertices[0]
        prev, cur, steps = None, start, 0
        while True:
            nxt = next(u for u in g.neighbors(cur) if u != prev)
            prev, cur, steps = cur, nxt, steps + 1
            if cur == start:
                break
        assert steps == 5

    @pytest.mark.parametrize("t,count", [(2, 5), (3, 9), (4, 14), (5, 20), (6, 27)])
    def test_vertex_count(self, t, count):
        g = build_g(t)
        assert g.vertex_count == count == (t + 3) * (t + 2) // 2 - (t + 2) - 1

    @pytest.mark.parametrize("t", range(2, 7))
    def test_vertex_shape(self, t):
        g = build_g(t)
        for v in g.vertices:
            assert v.hi - v.lo >= 2
            assert 1 <= v.lo < v.hi <= t + 3
        assert Edge(1, t + 3) not in g.vertices

    def test_sample_adjacencies(self):
        g = build_g(2)
        pairs = {frozenset(p) for p in g.adjacency}
        assert frozenset({Edge(1, 3), Edge(2, 4)}) in pairs     # crossing
        assert frozenset({Edge(1, 3), Edge(1, 4)}) not in pairs  # shared vertex

    @pytest.mark.parametrize("t", range(2, 6))
    def test_adjacency_recomputation(self, t):
        g = build_g(t)
        expected = {
            frozenset((u, v))
            for u, v in combinations(g.vertices, 2)
            if not u.shares_vertex(v)
            and classify_pair(u, v) in (Relation.CROSSING, Relation.SEPARATED)
        }
        assert {frozenset(p) for p in g.adjacency} == expected
        assert len(g.adjacency) == len(expected)  # each unordered pair once
        for u, v in g.adjacency:
            assert u != v
            assert v in g.neighbors(u) and u in g.neighbors(v)

    def test_rejects_small_t(self):
        with pytest.raises(ValueError):
            build_g(1)

    def test_without(self):
        g = build_g(2)
        h = g.without(Edge(1, 3))
        assert h.vertex_count == 4
        assert all(Edge(1, 3) not in pair for pair in h.adjacency)
        with pytest.raises(ValueError):
            g.without(Edge(1, 2))


class TestChromaticNumber:
    @pytest.mark.parametrize("t", range(2, 7))
    def test_pair_graph_value(self, t):
        g = build_g(t)
        chi, witness = chromatic_number(g)
        assert chi == t + 1
        assert set(witness) == set(g.vertices)
        for u, v in g.adjacency:
            assert witness[u] != witness[v]
        assert max(witness.values()) < chi

    @pytest.mark.parametrize("t", range(2, 7))
    def test_refutation(self, t):
        assert is_colorable(build_g(t), t) is None

    @pytest.mark.parametrize("t", [2, 3])
    def test_matches_naive(self, t):
        g = build_g(t)
        adj = {v: set(g.neighbors(v)) for v in g.vertices}
        assert naive_chromatic(adj) == t + 1
        assert not naive_is_colorable(adj, t)

    def test_generic_graphs(self):
        triangle = {1: {2, 3}, 2: {1, 3}, 3: {1, 2}}
        chi, wit = chromatic_number(triangle)
        assert chi == 3 and len(set(wit.values())) == 3
        path = {1: {2}, 2: {1, 3}, 3: {2}}
        assert chromatic_number(path)[0] == 2
        assert chromatic_number({})[0] == 0
        assert chromatic_number({1: set(), 2: set()})[0] == 1

    def test_random_graphs_match_naive(self):
        rng = random.Random(31)
        for _ in range(40):
            n = rng.randint(1, 8)
            adj = {v: set() for v in range(n)}
            for u, v in combinations(range(n), 2):
                if rng.random() < 0.5:
                    adj[u].add(v)
                    adj[v].add(u)
            chi, wit = chromatic_number(adj)
            assert chi == naive_chromatic(adj)
            for u in adj:
                for v in adj[u]:
                    assert wit[u] != wit[v]

    def test_limit(self):
        big = {i: set() for i in range(61)}
        with pytest.raises(LimitExceeded):
            chromatic_number(big)
        assert chromatic_number(big, limit=61)[0] == 1
        with pytest.raises(LimitExceeded):
            is_colorable(build_g(2), 3, limit=4)


class TestCriticalVertices:
    def test_odd_cycle_all_critical(self):
        g = build_g(2)
        assert set(critical_vertices(g)) == set(g.vertices)

    def test_t3_verified_against_naive(self):
        g = build_g(3)
        crit = set(critical_vertices(g))
        assert crit  # nonempty
        # independent confirmation: plain backtracking on each reduced graph
        for v in g.vertices:
            h = g.without(v)
            adj = {u: set(h.neighbors(u)) for u in h.vertices}
            assert naive_is_colorable(adj, 3) == (v in crit)

    @pytest.mark.parametrize("t", range(2, 6))
    def test_statement_and_proof_vertices(self, t):
        # the two candidate special vertices are both critical
        crit = set(critical_vertices(build_g(t)))
        assert crit
        assert Edge(2, t + 2) in crit
        assert Edge(2, t + 3) in crit

    @pytest.mark.parametrize("t", range(2, 6))
    def test_empirical_full_criticality(self, t):
        g = build_g(t)
        assert len(critical_vertices(g)) == g.vertex_count

    def test_rejects_generic_input(self):
        with pytest.raises(ValueError):
            critical_vertices({1: {2}, 2: {1}})


class TestM2FromEdgeColoring:
    def test_all_red_t2(self):
        col = OrderedColoring.constant(5, 2, 0)
        cert = m2_from_edge_coloring(col)
        assert set(cert.edges) == {Edge(1, 3), Edge(2, 4)}
        assert cert.color == 0
        assert cert.constraint == Constraint.forbid(Relation.NESTED)
        assert validate_certificate(col, cert).ok

    @pytest.mark.parametrize("t", range(2, 7))
    def test_every_adjacent_pair_is_a_valid_output(self, t):
        # static soundness of the scan list: each adjacent pair really is a
        # disjoint non-nested pair, so any hit the scan returns is valid
        g = build_g(t)
        host = OrderedColoring.constant(t + 3, t, 0)
        for u, v in g.adjacency:
            cert = Certificate("Matching", (u, v), 0,
                               Constraint.forbid(Relation.NESTED))
            assert validate_certificate(host, cert).ok

    def test_t3_deterministic_slice(self):
        # a structured sweep: all colorings constant except two moving edges
        base = OrderedColoring.constant(6, 3, 2)
        edges = sorted(base.edges())
        for e, f in combinations(edges, 2):
            for ce, cf in product(range(3), repeat=2):
                cmap = {(e.lo, e.hi): ce, (f.lo, f.hi): cf}
                col = OrderedColoring.from_function(
                    6, 3, lambda lo, hi: cmap.get((lo, hi), 2))
                cert = m2_from_edge_coloring(col)
                assert validate_certificate(col, cert).ok
                assert cert.size == 2

    @pytest.mark.parametrize("t", [3, 4, 5, 6])
    def test_randomized(self, t):
        rng = random.Random(32)
        for _ in range(500):
            col = random_coloring(t + 3, t, rng)
            cert = m2_from_edge_coloring(col)
            assert validate_certificate(col, cert).ok
            assert cert.size == 2 and cert.kind == "Matching"

    def test_rejects_wrong_size(self):
        with pytest.raises(ValueError):
            m2_from_edge_coloring(OrderedColoring.constant(6, 2, 0))


class TestTextFormat:
    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_round_trip(self, t):
        g = build_g(t)
        vertices, adjacency = graph_from_text(graph_to_text(g))
        assert vertices == g.vertices
        assert adjacency == g.adjacency

    def test_line_shapes(self):
        g = build_g(2)
        lines = graph_to_text(g).strip().splitlines()
        assert [len(line.split()) for line in lines[:5]] == [2] * 5
        assert all(len(line.split()) == 4 for line in lines[5:])

    def test_comments_and_blanks_ignored(self):
        vertices, adjacency = graph_from_text("# header\n\n1 3\n1 3 2 5\n")
        assert vertices == (Edge(1, 3),)
        assert adjacency == ((Edge(1, 3), Edge(2, 5)),)

    def test_bad_line(self):
        with pytest.raises(ValueError):
            graph_from_text("1 2 3\n")
