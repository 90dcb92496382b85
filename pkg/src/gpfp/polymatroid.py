"""The polymatroid view: rank function, greedy optimization, diameters and
circuit walks.

Translating by the all-ones vector turns the polytope into the polymatroid
``{y >= 0 : sum_{i in I} y_i <= g(|I|)}``, whose rank function depends only on
the cardinality of ``I``.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .core import BudgetExceeded, BVector, NotAVertex, Point, VertexDescriptor, _check_dim
from .polytope import DEFAULT_VERTEX_BUDGET, contains, facet_matrix, vertex_count, vertex_points


@dataclass(frozen=True)
class CardinalityProfile:
    """``g[m]`` is the rank of any ``m``-element subset."""

    g: tuple[int, ...]

    def differences(self) -> tuple[int, ...]:
        return tuple(c - a for a, c in zip(self.g, self.g[1:]))


def f_value(b: BVector, m: int) -> int:
    """``-m + sum_{j=1}^{n} min(m, j) * b_{n-j+1}``."""
    n = b.n
    if not 0 <= m <= n:
        raise ValueError(f"cardinality must lie in [0, {n}], got {m}")
    if m == 0:
        return 0
    return -m + sum(min(m, j) * b.entries[n - j] for j in range(1, n + 1))


def cardinality_profile(b: BVector) -> CardinalityProfile:
    return CardinalityProfile(tuple(f_value(b, m) for m in range(b.n + 1)))


def check_submodular_nondecreasing(b: BVector) -> bool:
    """For a rank depending only on ``|I|``, submodularity is concavity of ``g``."""
    d = cardinality_profile(b).differences()
    return all(v >= 0 for v in d) and all(a >= c for a, c in zip(d, d[1:]))


def greedy_maximize(b: BVector, w: Sequence[int | Fraction]) -> tuple[Point, Fraction]:
    """Maximize ``<w, y>`` over the polymatroid.  Coordinates are visited by
    decreasing weight, ties by lower index; each positive-weight coordinate
    receives the next increment of ``g``."""
    _check_dim(w, b)
    g = cardinality_profile(b).g
    order = sorted(range(b.n), key=lambda i: (-Fraction(w[i]), i))
    y = [0] * b.n
    for rank, i in enumerate(order, start=1):
        if Fraction(w[i]) <= 0:
            break
        y[i] = g[rank] - g[rank - 1]
    value = sum(Fraction(wi) * yi for wi, yi in zip(w, y))
    return tuple(y), value


def brute_force_optimum(b: BVector, w: Sequence[int | Fraction]) -> Fraction:
    """Best ``<w, v - 1>`` over all vertices ``v``."""
    _check_dim(w, b)
    return max(sum(Fraction(a) * (c - 1) for a, c in zip(w, v)) for v in vertex_points(b))


# -- combinatorial diameter -------------------------------------------------------


def combinatorial_diameter(b: BVector) -> int:
    n = b.n
    if b.b1_is_one:
        return min(2 * (n - 1), n * (n - 1) // 2)
    return min(2 * n, n * (n - 1) // 2 + 1)


# -- circuits and circuit walks ------------------------------------------------------


@dataclass(frozen=True)
class Axis:
    """The direction ``sign * e_i``."""

    i: int
    sign: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(self.sign if j == self.i else 0 for j in range(1, n + 1))

    def to_json(self) -> dict:
        return {"kind": "axis", "i": self.i, "sign": self.sign}


@dataclass(frozen=True)
class Difference:
    """The direction ``e_i - e_j``."""

    i: int
    j: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(1 if t == self.i else -1 if t == self.j else 0 for t in range(1, n + 1))

    def to_json(self) -> dict:
        return {"kind": "difference", "i": self.i, "j": self.j}


CircuitVector = Union[Axis, Difference]


def circuits(n: int) -> list[CircuitVector]:
    if n < 1:
        raise ValueError("n must be positive")
    out: list[CircuitVector] = [Axis(i, s) for i in range(1, n + 1) for s in (1, -1)]
    out += [Difference(i, j) for i, j in itertools.permutations(range(1, n + 1), 2)]
    return out


@lru_cache(maxsize=64)
def _facet_arrays(b: BVector) -> tuple[np.ndarray, np.ndarray]:
    _, A, r = facet_matrix(b)
    return A, r


def max_step(b: BVector, x: Sequence, direction: Sequence[int]) -> Fraction:
    """Largest ``t`` with ``x + t * direction`` still in the polytope (ratio test
    over every facet).  ``x`` must be feasible and ``direction`` nonzero."""
    A, r = _facet_arrays(b)
    rates = A @ np.asarray(direction, dtype=np.int64)
    rows = np.nonzero(rates > 0)[0]
    if rows.size == 0:
        raise ValueError("the polytope is bounded; a zero direction has no step")
    if all(isinstance(v, (int, np.integer)) for v in x):
        slack = r[rows] - A[rows] @ np.asarray(x, dtype=np.int64)
        return min(Fraction(int(s), int(q)) for s, q in zip(slack, rates[rows]))
    best = None
    for i in rows:
        slack = int(r[i]) - sum(int(a) * Fraction(v) for a, v in zip(A[i], x))
        t = slack / int(rates[i])
        best = t if best is None or t < best else best
    return best


@dataclass(frozen=True)
class WalkStep:
    circuit: CircuitVector
    length: int
    arrival: Point


@dataclass
class CircuitWalk:
    start: VertexDescriptor
    end: VertexDescriptor
    steps: list[WalkStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self, b: BVector) -> dict:
        return {
            "from": list(self.start.point(b)),
            "to": list(self.end.point(b)),
            "length": len(self.steps),
            "steps": [
                {"circuit": s.circuit.to_json(), "length": s.length, "arrival": list(s.arrival)}
                for s in self.steps
            ],
        }


def _ones(x: Sequence[int]) -> int:
    return sum(1 for v in x if v == 1)


def circuit_walk(
    b: BVector, start: VertexDescriptor | Sequence[int], end: VertexDescriptor | Sequence[int]
) -> CircuitWalk:
    """A walk of maximal integral steps along ``+-e_i`` and ``e_i - e_j``.

    Swaps first place the large entries shared by both endpoints, largest
    value first.  Then surplus entries drop to 1, or 1-entries are raised to
    the missing values in decreasing order.  Every step is checked against
    the ratio test, so a step that is not maximal raises ``AssertionError``.
    """
    sv = start if isinstance(start, VertexDescriptor) else VertexDescriptor.from_point(b, start)
    ev = end if isinstance(end, VertexDescriptor) else VertexDescriptor.from_point(b, end)
    x = list(sv.point(b))
    t = ev.point(b)
    walk = CircuitWalk(sv, ev)

    def step(circuit: CircuitVector, length: int) -> None:
        d = circuit.vector(b.n)
        limit = max_step(b, x, d)
        if limit != length:
            raise AssertionError(f"step {circuit} of length {length} from {tuple(x)} is not maximal ({limit})")
        for i, di in enumerate(d):
            x[i] += di * length
        if not contains(b, x):
            raise AssertionError(f"walk left the polytope at {tuple(x)}")
        walk.steps.append(WalkStep(circuit, length, tuple(x)))

    shared = b.n - max(_ones(x), _ones(t))
    big = sorted((v for v in t if v != 1), reverse=True)[:shared]
    for val in big:
        q = t.index(val)
        if x[q] == val:
            continue
        p = x.index(val)
        step(Difference(q + 1, p + 1), val - x[q])
    for q in range(b.n):
        if t[q] == 1 and x[q] != 1:
            step(Axis(q + 1, -1), x[q] - 1)
    for q in sorted(range(b.n), key=lambda i: -t[i]):
        if x[q] != t[q]:
            step(Axis(q + 1, 1), t[q] - x[q])
    if tuple(x) != t:
        raise AssertionError(f"walk ended at {tuple(x)} instead of {t}")
    return walk


def walk_bound(b: BVector, start: VertexDescriptor, end: VertexDescriptor) -> int:
    """``n - min(k_start, k_end)``."""
    return b.n - min(start.k, end.k)


def circuit_bound(b: BVector) -> int:
    """``n`` when a vertex with no 1-entries exists (``b_1 >= 2``), else ``n - 1``."""
    return b.n - 1 if b.b1_is_one else b.n


def circuit_bound_swapped(b: BVector) -> int:
    """The bound with the two regimes exchanged; reported for comparison only."""
    return b.n if b.b1_is_one else b.n - 1


def circuit_diameter_upper(
    b: BVector,
    sample: int | None = None,
    seed: int = 0,
    budget: int = DEFAULT_VERTEX_BUDGET,
) -> int:
    """Longest constructed walk over all ordered vertex pairs, or over
    ``sample`` pairs drawn with the given seed."""
    count = vertex_count(b)
    if count > budget:
        raise BudgetExceeded(f"{count} vertices exceed the budget {budget}")
    pts = vertex_points(b, budget)
    if sample is None:
        pairs = itertools.product(pts, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(pts), rng.choice(pts)) for _ in range(sample)]
    return max(len(circuit_walk(b, p, q)) for p, q in pairs)


__all__ = [
    "Axis",
    "CardinalityProfile",
    "CircuitVector",
    "CircuitWalk",
    "Difference",
    "NotAVertex",
    "WalkStep",
    "brute_force_optimum",
    "cardinality_profile",
    "check_submodular_nondecreasing",
    "circuit_bound_swapped",
    "circuit_bound",
    "circuit_diameter_upper",
    "circuit_walk",
    "circuits",
    "combinatorial_diameter",
    "f_value",
    "greedy_maximize",
    "max_step",
    "walk_bound",
]
