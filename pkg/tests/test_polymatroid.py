import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpfp.core import BVector, VertexDescriptor
from gpfp.oracle import bfs_diameter
from gpfp.polymatroid import (
    Axis,
    Difference,
    brute_force_optimum,
    cardinality_profile,
    check_submodular_nondecreasing,
    circuit_bound_swapped,
    circuit_bound,
    circuit_diameter_upper,
    circuit_walk,
    circuits,
    combinatorial_diameter,
    f_value,
    greedy_maximize,
    max_step,
    walk_bound,
)
from gpfp.polytope import Upper, contains, edge_graph, facets, vertex_points, vertices

from conftest import b_vectors, battery


def test_profile_examples():
    assert cardinality_profile(BVector((1, 2, 3))).g == (0, 5, 7, 7)
    assert cardinality_profile(BVector((2, 3, 4))).g == (0, 8, 12, 13)
    with pytest.raises(ValueError):
        f_value(BVector((1, 2)), 3)


@settings(max_examples=50, deadline=None)
@given(b_vectors(max_n=8, max_entry=6))
def test_profile_matches_upper_facets(b):
    g = cardinality_profile(b).g
    assert check_submodular_nondecreasing(b)
    for m in range(1, b.n + 1):
        assert g[m] == Upper(range(1, m + 1)).rhs(b) - m


def test_greedy_examples():
    b = BVector((1, 2, 3))
    assert greedy_maximize(b, (5, 2, 1)) == ((5, 2, 0), 29)
    assert greedy_maximize(b, (1, 1, 1))[1] == 7
    # ties go to the lower index
    assert greedy_maximize(b, (1, 1, 0))[0] == (5, 2, 0)
    assert greedy_maximize(b, (-1, -2, -3)) == ((0, 0, 0), 0)
    assert greedy_maximize(BVector((2, 3, 4)), (1, 1, 1))[1] == 13


@settings(max_examples=60, deadline=None)
@given(b_vectors(max_n=4), st.data())
def test_greedy_matches_brute_force(b, data):
    w = data.draw(st.lists(st.integers(-5, 5), min_size=b.n, max_size=b.n))
    y, value = greedy_maximize(b, w)
    assert value == brute_force_optimum(b, w)
    assert contains(b, tuple(c + 1 for c in y))


def test_greedy_fractional_weights():
    b = BVector((2, 3, 4))
    w = (Fraction(1, 2), Fraction(1, 3), Fraction(-1, 7))
    assert greedy_maximize(b, w)[1] == brute_force_optimum(b, w)


def test_combinatorial_diameter_values():
    assert combinatorial_diameter(BVector((1, 2, 3))) == 3
    assert combinatorial_diameter(BVector((2, 3, 4))) == 4
    assert combinatorial_diameter(BVector((1, 1, 1, 1, 1))) == 8
    assert combinatorial_diameter(BVector((2, 1, 1, 1, 1))) == 10
    assert combinatorial_diameter(BVector((1, 1))) == 1
    assert combinatorial_diameter(BVector((2,))) == 1


@pytest.mark.parametrize("b", battery(4, 2) + [BVector((1, 2, 3, 4, 5)), BVector((2, 1, 1, 1, 1))])
def test_combinatorial_diameter_matches_bfs(b):
    assert bfs_diameter(edge_graph(b)) == combinatorial_diameter(b)


def test_circuit_set():
    cs = circuits(3)
    assert len(cs) == 6 + 6
    assert Axis(2, -1).vector(3) == (0, -1, 0)
    assert Difference(1, 3).vector(3) == (1, 0, -1)


def test_max_step_examples():
    b = BVector((2, 3, 4))
    assert max_step(b, (1, 1, 1), (1, 0, 0)) == 8
    assert max_step(b, (2, 5, 9), (1, -1, 0)) == 3
    assert max_step(b, (Fraction(3, 2), 1, 1), (1, 0, 0)) == Fraction(15, 2)


def test_walk_examples():
    b = BVector((2, 3, 4))
    w = circuit_walk(b, (2, 5, 9), (9, 5, 2))
    assert len(w) == 1
    assert w.steps[0].circuit == Difference(1, 3) and w.steps[0].length == 7
    w = circuit_walk(b, (1, 1, 1), (2, 5, 9))
    assert [s.circuit for s in w.steps] == [Axis(3, 1), Axis(2, 1), Axis(1, 1)]
    assert w.to_json(b)["steps"][0] == {
        "circuit": {"kind": "axis", "i": 3, "sign": 1},
        "length": 8,
        "arrival": [1, 1, 9],
    }


def _all_walks(b):
    vs = vertices(b)
    for s, t in itertools.product(vs, repeat=2):
        yield s, t, circuit_walk(b, s, t)


@pytest.mark.parametrize("b", battery(3, 3) + battery(4, 2, min_n=4))
def test_walks_are_valid_and_bounded(b):
    longest = 0
    for s, t, w in _all_walks(b):
        assert w.steps[-1].arrival == t.point(b) if w.steps else s == t
        assert len(w) <= walk_bound(b, s, t) <= circuit_bound(b)
        for st_ in w.steps:
            assert st_.length > 0 and contains(b, st_.arrival)
        longest = max(longest, len(w))
    assert longest == circuit_bound(b)


def test_bound_regimes():
    assert circuit_bound(BVector((1, 2, 3))) == 2
    assert circuit_bound(BVector((2, 3, 4))) == 3
    assert circuit_bound_swapped(BVector((1, 2, 3))) == 3
    assert circuit_bound_swapped(BVector((2, 3, 4))) == 2
    # a walk of length n exists when b_1 >= 2, so the exchanged bound fails there
    b = BVector((2, 3, 4))
    assert len(circuit_walk(b, (1, 1, 1), (2, 5, 9))) == 3 > circuit_bound_swapped(b)


@pytest.mark.parametrize("b", [BVector((1, 2, 3)), BVector((2, 3, 4)), BVector((1, 1, 1, 1))])
def test_circuit_diameter_below_combinatorial(b):
    assert circuit_diameter_upper(b) < combinatorial_diameter(b)


def test_sampled_circuit_diameter_is_seeded():
    b = BVector((2, 1, 3, 1, 2))
    a = circuit_diameter_upper(b, sample=200, seed=5)
    assert a == circuit_diameter_upper(b, sample=200, seed=5)
    assert a <= circuit_bound(b)
