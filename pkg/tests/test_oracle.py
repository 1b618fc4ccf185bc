from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from twobridge import cf, invariants, oracle as O

additive = st.lists(st.integers(1, 4), min_size=1, max_size=5).filter(
    lambda a: len(a) % 2 == 1 and sum(a) <= 10)


def graph(n, *edges):
    return O.StateGraph(n, tuple(tuple(sorted(e)) for e in edges))


class TestBuildDiagram:
    def test_trefoil(self):
        d = O.build_diagram([3])
        assert d.crossing_count == 3
        assert [r.pair for r in d.twist_regions] == [O.StrandPair.MIDDLE]

    def test_23_85(self):
        d = O.build_diagram([3, 1, 2, 3, 2])
        assert d.crossing_count == 11
        assert len(d.twist_regions) == 5
        assert [r.pair for r in d.twist_regions] == [
            O.StrandPair.MIDDLE, O.StrandPair.LOWER, O.StrandPair.MIDDLE,
            O.StrandPair.LOWER, O.StrandPair.MIDDLE]

    def test_figure_eight(self):
        assert O.build_diagram([2, 1, 1]).crossing_count == 4

    @pytest.mark.parametrize("bad", [[2, 2], [], [3, 0, 1], [-1]])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            O.build_diagram(bad)


class TestStates:
    def test_trefoil_checkerboard_counts(self):
        d = O.build_diagram([3])
        assert {O.count_state_circles(d, 0), O.count_state_circles(d, 7)} == {2, 3}

    def test_trefoil_all_a_graph(self):
        g = O.state_graph(O.build_diagram([3]), 0)
        assert g.vertex_count == 2
        assert g.edges == ((0, 1),) * 3

    def test_trefoil_all_b_graph_is_triangle(self):
        g = O.state_graph(O.build_diagram([3]), 7)
        assert g.vertex_count == 3
        assert sorted(g.edges) == [(0, 1), (0, 2), (1, 2)]

    def test_single_crossing(self):
        d = O.build_diagram([1])
        counts = [O.count_state_circles(d, s) for s in (0, 1)]
        assert sum(counts) == 3
        two = O.state_graph(d, counts.index(2))
        assert two.vertex_count == 2 and two.edges == ((0, 1),)

    def test_state_out_of_range(self):
        with pytest.raises(ValueError):
            O.count_state_circles(O.build_diagram([3]), 8)

    @settings(max_examples=60, deadline=None)
    @given(additive)
    def test_vectorised_counts_match_union_find(self, a):
        d = O.build_diagram(a)
        fast = O.circle_counts(d)
        slow = np.array([O.count_state_circles(d, s) for s in range(1 << d.crossing_count)])
        assert np.array_equal(fast, slow)

    @settings(max_examples=60, deadline=None)
    @given(additive)
    def test_checkerboard_identity(self, a):
        d = O.build_diagram(a)
        c = d.crossing_count
        assert O.count_state_circles(d, 0) + O.count_state_circles(d, (1 << c) - 1) == c + 2

    @settings(max_examples=40, deadline=None)
    @given(additive, st.data())
    def test_graph_shape(self, a, data):
        d = O.build_diagram(a)
        s = data.draw(st.integers(0, (1 << d.crossing_count) - 1))
        g = O.state_graph(d, s)
        assert g.vertex_count == O.count_state_circles(d, s)
        assert len(g.edges) == d.crossing_count

    def test_chunked_sweep_matches_single_pass(self, monkeypatch):
        d = O.diagram_for(Fraction(23, 85))
        whole = O.max_circle_states(d)
        monkeypatch.setattr(O, "_CHUNK", 64)
        assert O.max_circle_states(d) == whole


class TestGraphPredicates:
    def test_parallel_triple_is_bipartite(self):
        assert O.is_orientable_state(graph(2, (0, 1), (0, 1), (0, 1)))

    def test_loop_is_odd(self):
        assert not O.is_orientable_state(graph(1, (0, 0)))

    def test_tree(self):
        assert O.is_orientable_state(graph(4, (0, 1), (1, 2), (1, 3)))

    def test_triangle(self):
        assert not O.is_orientable_state(graph(3, (0, 1), (1, 2), (0, 2)))

    def test_cycle_condition(self):
        assert not O.cycle_condition(graph(2, (0, 1), (0, 1)))
        assert O.cycle_condition(graph(4, (0, 1), (1, 2), (2, 3), (0, 3)))
        assert not O.cycle_condition(graph(2, (0, 0), (0, 1)))

    def test_degree_sequence(self):
        assert graph(3, (0, 1), (0, 1), (1, 2)).degree_sequence() == [3, 2, 1]


class TestOracle:
    @pytest.mark.parametrize("a, genus, crosscap", [
        ([3], 1, 1),
        ([2, 1, 1], 2, 2),
        ([3, 1, 3], 2, 3),
        ([2], 1, 2),
    ])
    def test_small(self, a, genus, crosscap):
        res = O.oracle_invariants(O.build_diagram(a))
        assert (res.gamma_unoriented, res.crosscap) == (genus, crosscap)

    def test_23_85(self):
        d = O.diagram_for(Fraction(23, 85))
        res = O.oracle_invariants(d)
        assert res.max_circles == 8
        assert res.gamma_unoriented == 4 and res.crosscap == 4
        # the minimal state surfaces include one whose graph has parallel edges
        assert any(not O.cycle_condition(O.state_graph(d, s)) for s in res.minimal_states)

    def test_4_15_unique_minimal_state(self):
        d = O.diagram_for(Fraction(4, 15))
        res = O.oracle_invariants(d)
        assert res.minimal_state_count == 1
        assert O.cycle_condition(O.state_graph(d, res.minimal_states[0]))

    def test_result_invariant(self):
        res = O.oracle_invariants(O.diagram_for(Fraction(5, 13)))
        expected = res.gamma_unoriented if res.some_minimal_nonorientable else res.gamma_unoriented + 1
        assert res.crosscap == expected
        assert set(res.as_record()) == {"gamma_unoriented", "crosscap", "minimal_state_count",
                                        "some_minimal_nonorientable", "max_circles"}

    def test_budget(self):
        d = O.build_diagram([9])
        with pytest.raises(O.BudgetExceeded) as info:
            O.oracle_invariants(d, budget=8)
        assert info.value.required == 9 and info.value.budget == 8
        assert "--budget 9" in str(info.value)

    def test_crosscheck_examples(self):
        assert O.theorem11_crosscheck(Fraction(4, 15))
        assert O.theorem11_crosscheck(Fraction(1, 3))

    def test_crosscheck_needs_three_crossings(self):
        with pytest.raises(ValueError):
            O.theorem11_crosscheck(Fraction(1, 2))


@pytest.mark.parametrize("c", range(3, 11))
def test_oracle_matches_formulas(c):
    for f in cf.fractions_with_crossing_number(c):
        d = O.diagram_for(f)
        res = O.oracle_invariants(d)
        rep = invariants.formula_report(f)
        assert res.gamma_unoriented == rep.unoriented_genus, f
        if rep.crosscap is not None:
            assert res.crosscap == rep.crosscap, f
        gap = res.crosscap == res.gamma_unoriented + 1
        assert all(O.cycle_condition(O.state_graph(d, s)) == gap for s in res.minimal_states), f
        if gap:
            assert res.minimal_state_count == 1, f


@pytest.mark.parametrize("c", range(2, 9))
def test_two_sided_adequate_states(c):
    # Among adequate states (no loops), the two-sided ones are few: one for a
    # knot, whose complexity is the length of the all-even expansion, two for
    # a link.
    for f in cf.fractions_with_crossing_number(c):
        d = O.diagram_for(f)
        found = []
        for s in range(1 << c):
            g = O.state_graph(d, s)
            if all(u != v for u, v in g.edges) and O.is_orientable_state(g):
                found.append(1 + c - g.vertex_count)
        if f.denominator % 2:
            assert found == [len(cf.to_even_subtractive(f))], f
        else:
            assert len(found) == 2, f


@pytest.mark.parametrize("f", [Fraction(1, 3), Fraction(2, 5), Fraction(23, 85), Fraction(3, 8), Fraction(13, 34)])
def test_tait_graph_tree_count_is_q(f):
    # the spanning-tree count of a checkerboard graph is the determinant q
    d = O.diagram_for(f)
    for state in (0, (1 << d.crossing_count) - 1):
        g = O.state_graph(d, state)
        lap = sympy.zeros(g.vertex_count, g.vertex_count)
        for u, v in g.edges:
            if u != v:
                lap[u, u] += 1
                lap[v, v] += 1
                lap[u, v] -= 1
                lap[v, u] -= 1
        assert lap[1:, 1:].det() == f.denominator
