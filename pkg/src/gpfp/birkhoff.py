"""Relaxed assignment systems whose projections give the polytope.

Variable ``x_ij`` says car ``i`` takes spot ``j``.  Each car takes exactly
one spot (row equalities) and, instead of column equalities, the first
``S_k`` spots must receive at least ``k`` cars in total.  The map
``x -> (sum_j j * x_ij)_i`` sends the system onto the polytope.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .core import BudgetExceeded, BVector, Point, enumerate_parking_functions
from .oracle import Certificate, CertificateKind
from .polytope import contains, vertex_points

DEFAULT_SUBSYSTEM_BUDGET = 200_000

Constraint = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class LinearSystem:
    """``eq: a . x = r`` and ``ineq: a . x >= r`` over ``rows * cols`` variables
    ``x_ij`` (flattened row-major), plus ``x >= 0`` when ``nonneg`` is set."""

    rows: int
    cols: int
    equalities: tuple[Constraint, ...]
    inequalities: tuple[Constraint, ...]
    nonneg: bool = True

    @property
    def num_vars(self) -> int:
        return self.rows * self.cols

    def var(self, i: int, j: int) -> int:
        """Flat index of ``x_ij`` (1-based ``i``, ``j``)."""
        return (i - 1) * self.cols + (j - 1)

    def all_inequalities(self) -> list[Constraint]:
        out = list(self.inequalities)
        if self.nonneg:
            for v in range(self.num_vars):
                out.append((tuple(1 if t == v else 0 for t in range(self.num_vars)), 0))
        return out

    def is_feasible(self, x: Sequence[int | Fraction]) -> bool:
        if len(x) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} values, got {len(x)}")
        dot = lambda a: sum(c * v for c, v in zip(a, x))  # noqa: E731
        return all(dot(a) == r for a, r in self.equalities) and all(
            dot(a) >= r for a, r in self.all_inequalities()
        )


def _system(n: int, cuts: Sequence[int]) -> LinearSystem:
    cols = cuts[-1]
    nv = n * cols
    eqs = []
    for i in range(n):
        eqs.append((tuple(1 if v // cols == i else 0 for v in range(nv)), 1))
    ineqs = []
    for k, cut in enumerate(cuts, start=1):
        ineqs.append((tuple(1 if v % cols < cut else 0 for v in range(nv)), k))
    return LinearSystem(n, cols, tuple(eqs), tuple(ineqs))


def build_relaxed_birkhoff(n: int) -> LinearSystem:
    if n < 1:
        raise ValueError("n must be positive")
    return _system(n, list(range(1, n + 1)))


def build_relaxed_partition(b: BVector, budget: int = 10_000) -> LinearSystem:
    """Spots ``1..S_n``, prefix cuts at ``S_1, ..., S_n``."""
    if b.n * b.S(b.n) > budget:
        raise BudgetExceeded(f"{b.n * b.S(b.n)} variables exceed the budget {budget}")
    return _system(b.n, b.prefix_sums)


def project(assignment: Sequence[Sequence[int | Fraction]]) -> tuple[Fraction, ...]:
    """``(sum_j j * x_ij)_i`` for a matrix given as a list of rows."""
    if not assignment or len({len(r) for r in assignment}) != 1:
        raise ValueError("assignment must be a nonempty rectangular matrix")
    return tuple(sum(j * Fraction(v) for j, v in enumerate(row, start=1)) for row in assignment)


def _as_rows(system: LinearSystem, x: Sequence) -> list[list]:
    return [list(x[i * system.cols : (i + 1) * system.cols]) for i in range(system.rows)]


def zero_one_points(system: LinearSystem, budget: int = 1 << 22) -> list[tuple[int, ...]]:
    """Feasible points of ``{0,1}^num_vars``, scanning every candidate."""
    if 2**system.num_vars > budget:
        raise BudgetExceeded(f"2^{system.num_vars} candidates exceed the budget {budget}")
    return [x for x in itertools.product((0, 1), repeat=system.num_vars) if system.is_feasible(x)]


def basic_feasible_solutions(
    system: LinearSystem, budget: int = DEFAULT_SUBSYSTEM_BUDGET
) -> list[tuple[Fraction, ...]]:
    """Vertices of the system: solve every square subsystem made of all
    equalities plus a choice of inequalities held tight, keep feasible ones."""
    ineqs = system.all_inequalities()
    need = system.num_vars - len(system.equalities)
    total = math.comb(len(ineqs), need)
    if total > budget:
        raise BudgetExceeded(f"{total} square subsystems exceed the budget {budget}")
    found = set()
    for choice in itertools.combinations(ineqs, need):
        rows = [a for a, _ in system.equalities] + [a for a, _ in choice]
        rhs = [r for _, r in system.equalities] + [r for _, r in choice]
        sol = _linalg.solve_square(rows, rhs)
        if sol is not None and system.is_feasible(sol):
            found.add(tuple(sol))
    return sorted(found)


def verify_projection_theorem(b: BVector, budget: int = DEFAULT_SUBSYSTEM_BUDGET) -> Certificate:
    """Three checks: 0/1 feasible points project exactly onto the parking
    functions; every basic feasible solution is 0/1; every vertex of the
    polytope is the image of a 0/1 feasible point."""
    kind = CertificateKind.ProjectionMatch
    system = build_relaxed_partition(b)
    zo = zero_one_points(system)
    images = {}
    for x in zo:
        p = tuple(int(v) for v in project(_as_rows(system, x)))
        if not contains(b, p):
            return Certificate(kind, False, {"step": "image inside", "point": list(x)})
        images.setdefault(p, x)
    pfs = set(enumerate_parking_functions(b))
    if set(images) != pfs:
        diff = sorted(set(images) ^ pfs)[:5]
        return Certificate(kind, False, {"step": "images are the parking functions", "diff": diff})
    bfs = basic_feasible_solutions(system, budget)
    for x in bfs:
        if any(v not in (0, 1) for v in x):
            return Certificate(kind, False, {"step": "integral vertices", "point": [str(v) for v in x]})
    missing = [list(v) for v in vertex_points(b) if v not in images]
    if missing:
        return Certificate(kind, False, {"step": "vertices covered", "missing": missing[:5]})
    return Certificate(
        kind,
        True,
        {
            "variables": system.num_vars,
            "zero_one_points": len(zo),
            "basic_feasible_solutions": len(bfs),
            "parking_functions": len(pfs),
        },
    )


def projected_point(system: LinearSystem, x: Sequence) -> Point | tuple[Fraction, ...]:
    return project(_as_rows(system, x))
