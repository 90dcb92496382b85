"""Lifting to the hyperplane ``sum x = B`` and the simplex decomposition.

The lifted polytope is a generalized permutahedron, so its support function
is ``sum_I y_I * max_{i in I} w_i`` for the coefficients ``y_I``.  Those
coefficients are produced here in closed form and, independently, by Moebius
inversion of the rank values ``z_I``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import BVector, Point, _check_dim
from .nestedsets import elements, popcount
from .polytope import edge_graph, vertex_points


def lift(b: BVector, x: Sequence[int]) -> Point:
    """Append the slack coordinate ``B - sum(x)``."""
    _check_dim(x, b)
    return tuple(x) + (b.total - sum(x),)


def lifted_vertices(b: BVector) -> list[Point]:
    return [lift(b, p) for p in vertex_points(b)]


def _root_multiple(d: Sequence[int]) -> tuple[int, int, int] | None:
    """``(i, j, c)`` with ``d = c (e_i - e_j)``, ``c > 0``, 1-based; else None."""
    nz = [(i + 1, v) for i, v in enumerate(d) if v]
    if len(nz) != 2 or nz[0][1] != -nz[1][1]:
        return None
    (i, vi), (j, _) = nz
    return (i, j, vi) if vi > 0 else (j, i, -vi)


def certify_generalized_permutahedron(b: BVector) -> bool:
    """Every lifted edge is a multiple of some ``e_i - e_j``."""
    g = edge_graph(b)
    pts = g.points
    for i, j, _ in g.edges:
        d = [a - c for a, c in zip(lift(b, pts[j]), lift(b, pts[i]))]
        if _root_multiple(d) is None:
            return False
    return True


# -- z and y --------------------------------------------------------------------


@dataclass(frozen=True)
class ZYParameters:
    """Values on subsets of ``[n+1]``, keyed by bitmask (bit ``i-1`` is ``i``)."""

    n: int
    values: dict[int, int]

    def __getitem__(self, subset: int | Iterable[int]) -> int:
        if not isinstance(subset, int):
            subset = sum(1 << (i - 1) for i in subset)
        return self.values.get(subset, 0)

    def nonzero(self) -> dict[int, int]:
        return {m: v for m, v in self.values.items() if v}

    def to_json(self) -> list[dict]:
        keys = sorted(self.nonzero(), key=lambda m: (popcount(m), elements(m)))
        return [{"set": list(elements(m)), "value": self.values[m]} for m in keys]


def z_value(b: BVector, subset_mask: int) -> int:
    """``|I|`` when ``n+1`` is not in ``I``, else ``S_1 + ... + S_{|I|-1}``."""
    size = popcount(subset_mask)
    if subset_mask >> b.n & 1:
        return sum(b.prefix_sums[: size - 1])
    return size


def z_parameters(b: BVector) -> ZYParameters:
    full = 1 << (b.n + 1)
    return ZYParameters(b.n, {m: z_value(b, m) for m in range(1, full)})


def y_value(b: BVector, subset_mask: int) -> int:
    n = b.n
    size = popcount(subset_mask)
    has_top = bool(subset_mask >> n & 1)
    if size == 0:
        return 0
    if size == 1:
        return 0 if has_top else 1
    if not has_top:
        return 0
    if size == 2:
        return b.entries[0] - 1
    m = size - 3
    return sum(
        (-1) ** (size + j - 1) * math.comb(m, j) * b.entries[j + 1] for j in range(m + 1)
    )


def y_coefficients(b: BVector) -> ZYParameters:
    full = 1 << (b.n + 1)
    return ZYParameters(b.n, {m: y_value(b, m) for m in range(1, full)})


def _submasks(mask: int) -> Iterable[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def y_from_z(z: ZYParameters) -> ZYParameters:
    """Moebius inversion on the Boolean lattice."""
    out = {}
    for m in range(1, 1 << (z.n + 1)):
        sz = popcount(m)
        out[m] = sum((-1) ** (sz - popcount(s)) * z[s] for s in _submasks(m))
    return ZYParameters(z.n, out)


def z_from_y(y: ZYParameters) -> ZYParameters:
    return ZYParameters(
        y.n, {m: sum(y[s] for s in _submasks(m)) for m in range(1, 1 << (y.n + 1))}
    )


def is_y_positive(b: BVector) -> bool:
    return all(v >= 0 for v in y_coefficients(b).values.values())


# -- support-function check ------------------------------------------------------


def random_directions(n_plus_one: int, count: int, seed: int, low: int = -9, high: int = 9):
    rng = random.Random(seed)
    return [tuple(rng.randint(low, high) for _ in range(n_plus_one)) for _ in range(count)]


def _max_on(mask: int, w: Sequence[int]) -> int:
    return max(w[i - 1] for i in elements(mask))


def support_identity_holds(
    lifted: Sequence[Point], y: ZYParameters, w: Sequence[int]
) -> bool:
    """``h(w) + sum_{y<0} |y| max_I w == sum_{y>0} y max_I w``."""
    h = max(sum(a * c for a, c in zip(w, v)) for v in lifted)
    pos = neg = 0
    for m, c in y.nonzero().items():
        if c > 0:
            pos += c * _max_on(m, w)
        else:
            neg += -c * _max_on(m, w)
    return h + neg == pos


def verify_signed_minkowski(b: BVector, directions: Sequence[Sequence[int]]) -> bool:
    if not directions:
        raise ValueError("need at least one direction")
    lifted = lifted_vertices(b)
    y = y_coefficients(b)
    for w in directions:
        if len(w) != b.n + 1:
            raise ValueError(f"directions live in dimension {b.n + 1}")
        if not support_identity_holds(lifted, y, w):
            return False
    return True


def count_passing_directions(b: BVector, directions: Sequence[Sequence[int]]) -> int:
    lifted = lifted_vertices(b)
    y = y_coefficients(b)
    return sum(support_identity_holds(lifted, y, w) for w in directions)
