from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divprime.arithmetic import CapExceededError, factorize
from divprime.formulas import cf_report
from divprime.oracle import (
    build_graph,
    degree_of,
    distance_summary,
    edges,
    oracle_report,
)
from divprime.report import IndexReport
from divprime.verify import COMPARED_FIELDS


def graph_of(n, cap=None):
    return build_graph(factorize(n), cap=cap)


class TestBuildGraph:
    def test_twelve(self):
        g = graph_of(12)
        assert g.vertices == (1, 2, 3, 4, 6, 12)
        assert sum(1 for _ in edges(g)) == 7

    def test_one(self):
        g = graph_of(1)
        assert g.vertices == (1,)
        assert list(edges(g)) == []

    def test_fifteen(self):
        g = graph_of(15)
        assert len(g.vertices) == 4
        assert list(edges(g)) == [(1, 3), (1, 5), (1, 15), (3, 5)]

    def test_cap(self):
        with pytest.raises(CapExceededError):
            build_graph(factorize(720720), cap=100)

    @given(st.integers(min_value=2, max_value=4000))
    @settings(max_examples=60)
    def test_adjacency_is_the_coprimality_relation(self, n):
        g = graph_of(n)
        count = len(g.vertices)
        for i in range(count):
            assert not g.adjacency[i] >> i & 1  # no self-loops
            for j in range(count):
                expected = i != j and gcd(g.vertices[i], g.vertices[j]) == 1
                assert bool(g.adjacency[i] >> j & 1) == expected

    def test_central_vertex_adjacent_to_all(self):
        for n in (2, 12, 30, 360):
            g = graph_of(n)
            assert degree_of(g, 0) == len(g.vertices) - 1


class TestDegreeOf:
    def test_twenty(self):
        g = graph_of(20)
        assert g.vertices == (1, 2, 4, 5, 10, 20)
        assert degree_of(g, g.vertices.index(1)) == 5
        assert degree_of(g, g.vertices.index(5)) == 3
        assert degree_of(g, g.vertices.index(10)) == 1

    def test_one(self):
        assert degree_of(graph_of(1), 0) == 0

    def test_out_of_range(self):
        g = graph_of(12)
        with pytest.raises(IndexError):
            degree_of(g, 6)
        with pytest.raises(IndexError):
            degree_of(g, -1)


class TestDistanceSummary:
    def test_twelve(self):
        s = distance_summary(graph_of(12))
        assert s.pairs_at_distance == {1: 7, 2: 8}
        assert s.diameter == 2
        assert s.eccentricities == (1, 2, 2, 2, 2, 2)

    def test_one(self):
        s = distance_summary(graph_of(1))
        assert s.pairs_at_distance == {}
        assert s.diameter == 0
        assert s.eccentricities == (0,)

    def test_prime_is_single_edge(self):
        s = distance_summary(graph_of(7))
        assert s.pairs_at_distance == {1: 1}
        assert s.diameter == 1

    @given(st.integers(min_value=1, max_value=3000))
    @settings(max_examples=80)
    def test_pair_counts_cover_all_pairs(self, n):
        g = graph_of(n)
        s = distance_summary(g)
        count = len(g.vertices)
        assert sum(s.pairs_at_distance.values()) == count * (count - 1) // 2
        assert s.diameter == max(s.eccentricities)


class TestOracleReport:
    def test_twelve_wiener(self):
        assert oracle_report(graph_of(12)).wiener == 23

    def test_thirty(self):
        r = oracle_report(graph_of(30))
        assert r.gutman == 361
        assert r.zagreb1 == 110
        assert r.zagreb2 == 205

    def test_forty_five_schultz(self):
        assert oracle_report(graph_of(45)).schultz == 96

    def test_report_is_definitional(self):
        # Recompute everything pairwise with a dense distance matrix and
        # plain loops, then insist the report agrees.
        g = graph_of(60)
        count = len(g.vertices)
        adj = [[bool(g.adjacency[i] >> j & 1) for j in range(count)] for i in range(count)]
        dist = [[0 if i == j else (1 if adj[i][j] else 2) for j in range(count)] for i in range(count)]
        # (distance 2 is legitimate here only because vertex 1 joins all
        # pairs; asserted by the adjacency of row 0)
        assert all(adj[0][j] for j in range(1, count))
        degs = [sum(adj[i]) for i in range(count)]
        r = oracle_report(g)
        assert r.wiener == sum(dist[i][j] for i in range(count) for j in range(i + 1, count))
        assert r.harary == sum(
            (Fraction(1, dist[i][j]) for i in range(count) for j in range(i + 1, count)),
            Fraction(0),
        )
        assert r.hyper_wiener * 2 == sum(
            dist[i][j] + dist[i][j] ** 2 for i in range(count) for j in range(i + 1, count)
        )
        assert r.zagreb1 == sum(d * d for d in degs)
        assert r.zagreb2 == sum(
            degs[i] * degs[j] for i in range(count) for j in range(i + 1, count) if adj[i][j]
        )
        assert r.gutman == sum(
            degs[i] * degs[j] * dist[i][j] for i in range(count) for j in range(i + 1, count)
        )
        assert r.schultz == sum(
            (degs[i] + degs[j]) * dist[i][j] for i in range(count) for j in range(i + 1, count)
        )
        assert r.eccentric_connectivity == sum(
            degs[i] * max(dist[i]) for i in range(count)
        )


class TestStructuralInvariants:
    @pytest.mark.parametrize("n", range(1, 301))
    def test_small_n(self, n):
        f = factorize(n)
        g = build_graph(f)
        r = oracle_report(g)
        count = len(g.vertices)

        # diameter trichotomy
        assert r.diameter <= 2
        assert (r.diameter == 0) == (n == 1)
        assert (r.diameter == 1) == (len(f.factors) == 1 and f.factors[0][1] == 1)

        # edge count and handshake
        assert r.edge_count == (prod(2 * e + 1 for _, e in f.factors) - 1) // 2
        assert r.degree_sum == 2 * r.edge_count

        if n >= 2:
            assert degree_of(g, 0) == count - 1
            # diameter-2 identities on pure oracle values
            assert r.gutman == r.degree_sum**2 - r.zagreb1 - r.zagreb2
            assert r.schultz == 2 * (count - 1) * r.degree_sum - r.zagreb1
        assert 2 * r.wiener + 4 * r.harary == 3 * count * (count - 1)


class TestPathEquivalence:
    @given(st.integers(min_value=1, max_value=2000))
    @settings(max_examples=150, deadline=None)
    def test_closed_form_equals_oracle(self, n):
        f = factorize(n)
        closed = cf_report(f)
        oracle = oracle_report(build_graph(f))
        for name in COMPARED_FIELDS:
            assert getattr(closed, name) == getattr(oracle, name), name
        assert closed.n == oracle.n
        assert closed.divisor_count == oracle.divisor_count


def test_report_type_rejects_broken_invariants():
    good = oracle_report(graph_of(12))
    with pytest.raises(ValueError):
        IndexReport(
            n=good.n,
            divisor_count=good.divisor_count,
            edge_count=good.edge_count,
            degree_sum=good.degree_sum + 1,  # handshake broken
            wiener=good.wiener,
            harary=good.harary,
            hyper_wiener=good.hyper_wiener,
            zagreb1=good.zagreb1,
            zagreb2=good.zagreb2,
            gutman=good.gutman,
            schultz=good.schultz,
            eccentric_connectivity=good.eccentric_connectivity,
            source=good.source,
            diameter=good.diameter,
        )
    with pytest.raises(ValueError):
        IndexReport(
            n=good.n,
            divisor_count=good.divisor_count,
            edge_count=good.edge_count,
            degree_sum=good.degree_sum,
            wiener=good.wiener,
            harary=Fraction(1, 3),  # denominator must divide 4
            hyper_wiener=good.hyper_wiener,
            zagreb1=good.zagreb1,
            zagreb2=good.zagreb2,
            gutman=good.gutman,
            schultz=good.schultz,
            eccentric_connectivity=good.eccentric_connectivity,
            source=good.source,
            diameter=good.diameter,
        )
