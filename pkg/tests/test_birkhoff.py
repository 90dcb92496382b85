from fractions import Fraction

import pytest

from gpfp.birkhoff import (
    basic_feasible_solutions,
    build_relaxed_birkhoff,
    build_relaxed_partition,
    project,
    projected_point,
    verify_projection_theorem,
    zero_one_points,
)
from gpfp.core import BudgetExceeded, BVector, enumerate_parking_functions


def test_system_shape():
    s = build_relaxed_partition(BVector((1, 2)))
    assert (s.rows, s.cols, s.num_vars) == (2, 3, 6)
    assert len(s.equalities) == 2
    assert [r for _, r in s.inequalities] == [1, 2]
    assert s.inequalities[0][0] == (1, 0, 0, 1, 0, 0)
    assert s.var(2, 3) == 5


def test_classical_case_matches_relaxed_birkhoff():
    assert build_relaxed_partition(BVector((1, 1, 1))) == build_relaxed_birkhoff(3)
    with pytest.raises(ValueError):
        build_relaxed_birkhoff(0)


def test_project():
    assert project([[0, 1, 0], [1, 0, 0]]) == (2, 1)
    assert project([[Fraction(1, 2), Fraction(1, 2)]]) == (Fraction(3, 2),)
    with pytest.raises(ValueError):
        project([[1], [0, 1]])


def test_feasibility():
    s = build_relaxed_birkhoff(2)
    assert s.is_feasible((1, 0, 1, 0))
    assert not s.is_feasible((0, 1, 0, 1))
    with pytest.raises(ValueError):
        s.is_feasible((1, 0))


def test_zero_one_images_are_parking_functions():
    b = BVector((1, 2))
    s = build_relaxed_partition(b)
    images = {tuple(int(v) for v in projected_point(s, x)) for x in zero_one_points(s)}
    assert images == set(enumerate_parking_functions(b))


def test_basic_solutions_are_integral():
    s = build_relaxed_birkhoff(2)
    bfs = basic_feasible_solutions(s)
    assert bfs and all(v in (0, 1) for x in bfs for v in x)
    with pytest.raises(BudgetExceeded):
        basic_feasible_solutions(build_relaxed_birkhoff(3), budget=10)


@pytest.mark.parametrize("entries", [(2,), (1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (1, 1, 1)])
def test_projection_certificate(entries):
    c = verify_projection_theorem(BVector(entries))
    assert c.passed, c.witness
