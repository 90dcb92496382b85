"""b-vectors, b-parking functions and the canonical vertices ``y_k``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_ENUMERATION_BUDGET = 10**7

Point = tuple[int, ...]


class GPFPError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatch(GPFPError, ValueError):
    pass


class BudgetExceeded(GPFPError, RuntimeError):
    pass


class NotAVertex(GPFPError, ValueError):
    pass


@dataclass(frozen=True)
class BVector:
    """The defining vector ``b = (b_1, ..., b_n)`` of positive integers.

    ``prefix_sums[i - 1]`` is ``S_i = b_1 + ... + b_i``.
    """

    entries: tuple[int, ...]
    prefix_sums: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise ValueError("b must have at least one entry")
        if any(e < 1 for e in entries):
            raise ValueError(f"entries of b must be positive integers, got {entries}")
        if entries == (1,):
            raise ValueError("b = (1) gives a single point; n = 1 requires b_1 >= 2")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "prefix_sums", tuple(itertools.accumulate(entries)))

    @classmethod
    def parse(cls, text: str) -> BVector:
        """Parse the comma-separated form, e.g. ``"1,2,3"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse b-vector {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def b1_is_one(self) -> bool:
        return self.entries[0] == 1

    def S(self, i: int) -> int:
        """Partial sum ``S_i`` (1-based); ``S_0 = 0``."""
        return 0 if i == 0 else self.prefix_sums[i - 1]

    @property
    def total(self) -> int:
        """``B = S_1 + ... + S_n``, the coordinate sum of every lifted point."""
        return sum(self.prefix_sums)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def _check_dim(x: Sequence, b: BVector) -> None:
    if len(x) != b.n:
        raise DimensionMismatch(f"expected a point of length {b.n}, got {len(x)}")


def is_parking_function(beta: Sequence[int], b: BVector) -> bool:
    _check_dim(beta, b)
    srt = sorted(beta)
    if srt[0] < 1:
        return False
    return all(v <= s for v, s in zip(srt, b.prefix_sums))


def enumerate_parking_functions(
    b: BVector, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> list[Point]:
    """All b-parking functions, in lexicographic order.

    The budget bounds the size ``S_n ** n`` of the candidate box.
    """
    cells = b.S(b.n) ** b.n
    if cells > budget:
        raise BudgetExceeded(f"enumeration box has {cells} cells (budget {budget})")
    out: set[Point] = set()
    # nondecreasing sequences first, then their distinct rearrangements
    for srt in itertools.combinations_with_replacement(range(1, b.S(b.n) + 1), b.n):
        if all(v <= s for v, s in zip(srt, b.prefix_sums)):
            out.update(itertools.permutations(srt))
    return sorted(out)


def y_point(b: BVector, k: int) -> Point:
    """``y_k = (1, ..., 1, S_{k+1}, ..., S_n)`` with ``k`` leading ones."""
    if not 0 <= k <= b.n:
        raise ValueError(f"k must lie in [0, {b.n}], got {k}")
    return (1,) * k + b.prefix_sums[k:]


def canonical_k(b: BVector, k: int) -> int:
    # y_0 == y_1 when b_1 == 1
    return 1 if (b.b1_is_one and k == 0) else k


@dataclass(frozen=True, order=True)
class VertexDescriptor:
    """A vertex ``pi(y_k)`` named by ``k`` and the permutation ``pi``.

    ``perm[j - 1] = pi(j)`` is the (1-based) coordinate that receives the
    ``j``-th entry of ``y_k``.  Use :func:`make_vertex` or
    :meth:`from_point` to get the canonical form, in which the positions of
    the leading ones are sorted and ``k = 0`` is folded into ``k = 1`` when
    ``b_1 = 1``; canonical descriptors are equal iff they name the same point.
    """

    k: int
    perm: tuple[int, ...]

    def point(self, b: BVector) -> Point:
        y = y_point(b, self.k)
        x = [0] * len(y)
        for j, pos in enumerate(self.perm):
            x[pos - 1] = y[j]
        return tuple(x)

    @classmethod
    def from_point(cls, b: BVector, x: Sequence[int]) -> VertexDescriptor:
        _check_dim(x, b)
        n = b.n
        ones = [i + 1 for i, v in enumerate(x) if v == 1]
        k = len(ones)
        if b.b1_is_one and k == 1:
            expected = b.prefix_sums
        else:
            if b.b1_is_one and k == 0:
                raise NotAVertex(f"{tuple(x)} is not a vertex for b = ({b})")
            expected = y_point(b, k)
        if sorted(x) != sorted(expected):
            raise NotAVertex(f"{tuple(x)} is not a vertex for b = ({b})")
        lead = len(ones) if not (b.b1_is_one and k == 1) else 1
        where = {v: i + 1 for i, v in enumerate(x) if v != 1}
        perm = tuple(ones[:lead]) + tuple(where[expected[j]] for j in range(lead, n))
        return cls(k, perm)


def make_vertex(b: BVector, k: int, perm: Sequence[int]) -> VertexDescriptor:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, b.n + 1)):
        raise ValueError(f"{perm} is not a permutation of [{b.n}]")
    return VertexDescriptor.from_point(b, VertexDescriptor(k, perm).point(b))
