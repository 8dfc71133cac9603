from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_connected_multigraph
from regma.catalog import catalog
from regma.errors import (AcyclicGraphError, DisconnectedGraphError,
                          GuardExceeded, PreconditionError)
from regma.graph import (Cycle, MultiGraph, betti, edge_cut_below,
                         enumerate_cycles, girth, is_three_edge_connected,
                         min_weight_cycle, reduce_to_cubic, split_vertex)

THETA = MultiGraph(2, ((0, 1), (0, 1), (0, 1)))


def cycle_space_oracle(g):
    """Independent enumeration: nonzero cycle-space members that are
    connected and 2-regular."""
    from regma.exact import BitMatrix
    from regma.matroid import _kernel_basis_masks, graphic

    if not g.is_connected():
        raise ValueError("oracle wants connected input")
    rep = graphic(g).rep
    basis = _kernel_basis_masks(rep)
    members = [0]
    for b in basis:
        members += [x ^ b for x in members]
    out = set()
    for x in members:
        if not x:
            continue
        ids = frozenset(i for i in range(g.m) if (x >> i) & 1)
        try:
            out.add(Cycle.from_edges(g, ids).edge_ids)
        except PreconditionError:
            continue
    return out


class TestBetti:
    def test_values(self, petersen):
        assert betti(THETA) == 2
        assert betti(petersen) == 6
        assert betti(MultiGraph(1, ())) == 0

    def test_additive_over_components(self):
        tri = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))
        two = MultiGraph(6, tri.edges + tuple((u + 3, v + 3) for u, v in tri.edges))
        assert betti(two) == 2 * betti(tri)

    def test_subdivision_invariant(self, k4):
        sub = MultiGraph(5, tuple(k4.edges[1:]) + ((0, 4), (4, 1)))
        assert betti(sub) == betti(k4)


class TestGirth:
    def test_named(self, petersen, heawood):
        assert girth(petersen) == 5
        assert girth(heawood) == 6
        assert girth(MultiGraph(4, ((0, 1), (1, 2), (2, 3)))) == float("inf")

    def test_loop_and_parallel(self):
        assert girth(MultiGraph(1, ((0, 0),))) == 1
        assert girth(THETA) == 2


class TestEdgeCut:
    def test_k4_none(self, k4):
        assert edge_cut_below(k4, 3) is None

    def test_bridge(self):
        assert edge_cut_below(MultiGraph(3, ((0, 1), (1, 2))), 2) == (0,)

    def test_f11_two_cut(self):
        f11 = catalog("f11")
        cut = edge_cut_below(f11, 3)
        assert cut is not None and len(cut) == 2
        skip = frozenset(cut)
        assert len(f11.components(skip)) == 2

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            edge_cut_below(MultiGraph(2, ()), 3)


class TestMinWeightCycle:
    def test_theta_uniform(self):
        c, v = min_weight_cycle(THETA, [Fraction(1, 3)] * 3)
        assert v == Fraction(2, 3) and c.sorted_ids() == (0, 1)

    def test_moebius_ladder_weights(self):
        g = catalog("g54")
        w = [Fraction(1, 16)] * 8 + [Fraction(2, 16)] * 4
        _, v = min_weight_cycle(g, w)
        assert v == Fraction(3, 8)

    def test_zero_weight_loop(self):
        g = MultiGraph(3, ((0, 1), (1, 2), (0, 2), (1, 1)))
        w = [Fraction(1)] * 3 + [Fraction(0)]
        c, v = min_weight_cycle(g, w)
        assert v == 0 and c.edge_ids == frozenset([3])

    def test_forest_rejected(self):
        with pytest.raises(AcyclicGraphError):
            min_weight_cycle(MultiGraph(2, ((0, 1),)), [Fraction(1)])

    def test_matches_enumeration_on_random_graphs(self, rng):
        for _ in range(40):
            g = random_connected_multigraph(rng, max_edges=14)
            w = [Fraction(rng.randint(0, 30), rng.randint(1, 9)) for _ in range(g.m)]
            c, v = min_weight_cycle(g, w)
            cycles = enumerate_cycles(g)
            best = min(c2.weight(w) for c2 in cycles)
            assert v == best
            # the reported tie-break is the lexicographically least edge set
            best_sets = sorted(c2.sorted_ids() for c2 in cycles
                               if c2.weight(w) == best)
            assert c.sorted_ids() == best_sets[0]


class TestEnumerateCycles:
    def test_counts(self, k4, petersen):
        assert len(enumerate_cycles(k4)) == 7
        assert len(enumerate_cycles(THETA)) == 3
        pet = enumerate_cycles(petersen)
        assert 12 <= len(pet) <= 2000

    def test_matches_cycle_space_oracle(self, rng, petersen):
        got = {c.edge_ids for c in enumerate_cycles(petersen)}
        assert got == cycle_space_oracle(petersen)
        for _ in range(25):
            g = random_connected_multigraph(rng, max_edges=13)
            got = {c.edge_ids for c in enumerate_cycles(g)}
            assert got == cycle_space_oracle(g)

    def test_guard(self):
        big = MultiGraph(2, tuple((0, 1) for _ in range(26)))
        with pytest.raises(GuardExceeded):
            enumerate_cycles(big)


class TestReduceToCubic:
    def test_theta_terminal(self):
        red, trace = reduce_to_cubic(THETA)
        assert red.edges == THETA.edges and trace == ()

    def test_subdivided_k4(self, k4):
        sub = MultiGraph(5, tuple(k4.edges[1:]) + ((0, 4), (4, 1)))
        red, trace = reduce_to_cubic(sub)
        assert red.n == 4 and red.m == 6
        assert any(s.kind == "contract_two_cut" for s in trace)

    def test_two_triangles(self):
        tri = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))
        two = MultiGraph(6, tri.edges + tuple((u + 3, v + 3) for u, v in tri.edges))
        red, trace = reduce_to_cubic(two)
        assert betti(red) == 2 and red.n == 2
        kinds = {s.kind for s in trace}
        assert "join_components" in kinds

    def test_requires_betti_two(self):
        with pytest.raises(PreconditionError):
            reduce_to_cubic(MultiGraph(3, ((0, 1), (1, 2), (0, 2))))

    def test_properties_on_random_graphs(self, rng):
        allowed = {"join_components", "contract_bridge", "contract_two_cut",
                   "split_vertex"}
        for _ in range(20):
            g = random_connected_multigraph(rng, max_edges=12)
            if betti(g) < 2:
                continue
            red, trace = reduce_to_cubic(g)
            assert betti(red) == betti(g)
            assert all(red.degree(v) == 3 for v in range(red.n))
            assert edge_cut_below(red, 3) is None
            assert {s.kind for s in trace} <= allowed


class TestSplitVertex:
    def test_k5(self):
        k5 = catalog("k5")
        out = split_vertex(k5, 0)
        assert out.n == 6 and betti(out) == betti(k5)
        assert is_three_edge_connected(out)

    def test_wheel_hub(self):
        # W4: hub 0 joined to a 4-cycle 1..4
        w4 = MultiGraph(5, ((1, 2), (2, 3), (3, 4), (4, 1),
                            (0, 1), (0, 2), (0, 3), (0, 4)))
        out = split_vertex(w4, 0)
        assert is_three_edge_connected(out) and betti(out) == betti(w4)

    def test_degree_three_rejected(self, k4):
        with pytest.raises(PreconditionError):
            split_vertex(k4, 0)

    def test_contracts_back(self, rng):
        from regma.cubicgen import canonical_form
        from regma.graph import _contract

        k5 = catalog("k5")
        out = split_vertex(k5, 0)
        back = _contract(out, out.m - 1)
        assert canonical_form(back) == canonical_form(k5)


class TestFormats:
    def test_roundtrip(self, petersen):
        assert MultiGraph.parse(petersen.format()).edges == petersen.edges


edge_lists = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                 min_size=1, max_size=10)))


@given(edge_lists)
@settings(max_examples=60, deadline=None)
def test_betti_unaffected_by_subdividing(data):
    n, edges = data
    g = MultiGraph(n, tuple(edges))
    e = len(edges) - 1
    u, v = g.edges[e]
    sub = MultiGraph(n + 1, g.edges[:e] + ((u, n), (n, v)))
    assert betti(sub) == betti(g)


@given(edge_lists)
@settings(max_examples=60, deadline=None)
def test_betti_additive(data):
    n, edges = data
    g = MultiGraph(n, tuple(edges))
    shifted = tuple((u + n, v + n) for u, v in edges)
    double = MultiGraph(2 * n, g.edges + shifted)
    assert betti(double) == 2 * betti(g)
