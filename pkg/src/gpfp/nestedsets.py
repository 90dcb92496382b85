"""Building sets, nested-set complexes, and the face lattice they describe.

Subsets of ``[m]`` are bitmasks internally: element ``i`` is bit ``i - 1``.
They are serialized as sorted 1-based index lists.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import BudgetExceeded, BVector, Point, VertexDescriptor
from .polytope import Facet, Lower, Upper, facets, is_tight, vertices

DEFAULT_NESTED_BUDGET = 1_000_000


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        if i < 1:
            raise ValueError(f"elements are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _member_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (popcount(mask), elements(mask))


@dataclass(frozen=True)
class SetSystem:
    """A family of nonempty subsets of ``[ground_size]``, stored as masks."""

    ground_size: int
    members: frozenset[int]

    def __init__(self, ground_size: int, members: Iterable[int | Iterable[int]]):
        masks = set()
        for s in members:
            m = s if isinstance(s, int) else mask_of(s)
            if m == 0:
                raise ValueError("members must be nonempty")
            if m >> ground_size:
                raise ValueError(f"member {elements(m)} is not inside [{ground_size}]")
            masks.add(m)
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "members", frozenset(masks))

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def sorted_masks(self) -> list[int]:
        """Members ordered by size, then lexicographically."""
        return sorted(self.members, key=_member_key)

    def to_lists(self) -> list[list[int]]:
        return [list(elements(m)) for m in self.sorted_masks()]

    def maximal(self) -> frozenset[int]:
        return frozenset(
            m for m in self.members if not any(m != o and m & o == m for o in self.members)
        )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        m = item if isinstance(item, int) else mask_of(item)
        return m in self.members

    def __str__(self) -> str:
        return "{" + ", ".join("".join(map(str, e)) for e in self.to_lists()) + "}"


# -- axioms -------------------------------------------------------------------


def is_building_set(s: SetSystem) -> bool:
    """Closed under unions of intersecting members, and contains every singleton."""
    if any((1 << i) not in s.members for i in range(s.ground_size)):
        return False
    ms = list(s.members)
    return all(
        (a | c) in s.members for a, c in itertools.combinations(ms, 2) if a & c
    )


def _disjoint_families(pool: Sequence[int], start: int, used: int) -> Iterator[int]:
    """Unions of every nonempty pairwise-disjoint subfamily of ``pool[start:]``
    that avoids ``used``."""
    for idx in range(start, len(pool)):
        m = pool[idx]
        if m & used:
            continue
        yield m
        for rest in _disjoint_families(pool, idx + 1, used | m):
            yield m | rest


def _can_extend(current: Sequence[int], new: int, building: frozenset[int]) -> bool:
    """Would ``current + [new]`` still be nested, given ``current`` is?"""
    for m in current:
        inter = m & new
        if inter and inter != m and inter != new:
            return False
    # (N2) only needs the subfamilies that contain ``new``
    pool = [m for m in current if not m & new]
    return not any((new | u) in building for u in _disjoint_families(pool, 0, 0))


def is_nested_set(candidate: SetSystem, building: SetSystem) -> bool:
    """Check ``N subset B - B_max`` together with laminarity and the
    disjoint-union condition.  The empty family is nested."""
    allowed = building.members - building.maximal()
    if not candidate.members <= allowed:
        return False
    acc: list[int] = []
    for m in candidate.sorted_masks():
        if not _can_extend(acc, m, building.members):
            return False
        acc.append(m)
    return True


# -- the two building sets ------------------------------------------------------


def _building(n: int, skip_size_one: bool) -> SetSystem:
    if n < 1:
        raise ValueError("n must be positive")
    top = 1 << n
    members = [1 << i for i in range(n)]
    for sub in range(1 << n):
        if skip_size_one and popcount(sub) == 1:
            continue
        members.append(sub | top)
    return SetSystem(n + 1, members)


def building_st(n: int) -> SetSystem:
    """Singletons of ``[n]`` together with every ``S + {n+1}``."""
    return _building(n, skip_size_one=False)


def building_pf(n: int) -> SetSystem:
    """Like :func:`building_st` but without the pairs ``{i, n+1}``."""
    return _building(n, skip_size_one=True)


def building_for(b: BVector) -> SetSystem:
    return building_pf(b.n) if b.b1_is_one else building_st(b.n)


# -- nested-set complex -----------------------------------------------------------


def nested_complex(
    building: SetSystem, max_dim: int | None = None, budget: int = DEFAULT_NESTED_BUDGET
) -> list[SetSystem]:
    """All nested sets with at most ``max_dim + 1`` members (all of them when
    ``max_dim`` is None), ordered by size and then lexicographically."""
    cands = sorted(building.members - building.maximal(), key=_member_key)
    limit = len(cands) if max_dim is None else max_dim + 1
    found: list[list[int]] = []

    def grow(acc: list[int], start: int) -> None:
        found.append(list(acc))
        if len(found) > budget:
            raise BudgetExceeded(f"more than {budget} nested sets")
        if len(acc) == limit:
            return
        for idx in range(start, len(cands)):
            if _can_extend(acc, cands[idx], building.members):
                acc.append(cands[idx])
                grow(acc, idx + 1)
                acc.pop()

    grow([], 0)
    found.sort(key=lambda ms: (len(ms), [_member_key(m) for m in ms]))
    return [SetSystem(building.ground_size, ms) for ms in found]


def maximal_nested_sets(building: SetSystem) -> list[SetSystem]:
    complex_ = nested_complex(building)
    top = max(len(N) for N in complex_)
    return [N for N in complex_ if len(N) == top]


# -- structural descriptions ------------------------------------------------------


def _split(N: SetSystem) -> tuple[int, list[int]]:
    singles = 0
    rest = []
    for m in N.members:
        if popcount(m) == 1:
            singles |= m
        else:
            rest.append(m)
    return singles, sorted(rest, key=popcount)


def _is_chain(masks: Sequence[int]) -> bool:
    return all(a & c == a and a != c for a, c in zip(masks, masks[1:]))


def matches_pf_structure(N: SetSystem, n: int) -> bool:
    """Singletons ``{i}`` for ``i`` in some ``I`` (at most two of them when
    ``n+1`` is in ``I``) plus a chain of proper subsets of ``[n+1]``, each
    containing ``n+1`` with at least 3 elements, whose smallest member
    contains ``I``."""
    top = 1 << n
    full = (1 << (n + 1)) - 1
    if N.ground_size != n + 1:
        return False
    singles, chain = _split(N)
    if singles & top and popcount(singles) > 2:
        return False
    if not _is_chain(chain):
        return False
    if chain:
        low = chain[0]
        if chain[-1] == full or not low & top or popcount(low) < 3:
            return False
        if singles & low != singles:
            return False
    return True


def matches_st_structure(N: SetSystem, n: int) -> bool:
    """Singletons ``{i}``, ``i`` in ``I`` inside ``[n]``, plus sets ``A + {n+1}``
    where the ``A`` form a chain of proper subsets of ``[n]`` whose smallest
    member contains ``I``."""
    top = 1 << n
    full = (1 << (n + 1)) - 1
    if N.ground_size != n + 1:
        return False
    singles = 0
    chain = []
    for m in N.members:
        if m & top:
            chain.append(m)
        elif popcount(m) == 1:
            singles |= m
        else:
            return False
    chain.sort(key=popcount)
    if not _is_chain(chain) or (chain and chain[-1] == full):
        return False
    return not chain or singles & chain[0] == singles


# -- faces --------------------------------------------------------------------------


def facet_for_member(b: BVector, member: int) -> Facet:
    """``{i}`` gives ``L_i``; ``S + {n+1}`` gives ``U_{[n] - S}``."""
    n = b.n
    top = 1 << n
    if member & top:
        rest = frozenset(range(1, n + 1)) - frozenset(elements(member & ~top))
        if not rest:
            raise ValueError("[n+1] is the maximal member and names no facet")
        f = Upper(rest)
        if b.b1_is_one and len(rest) == n - 1:
            raise ValueError(f"{f} is not a facet when b_1 = 1")
        return f
    if popcount(member) != 1:
        raise ValueError(f"{elements(member)} is not a member of the building set")
    return Lower(elements(member)[0])


def member_for_facet(b: BVector, f: Facet) -> int:
    if isinstance(f, Lower):
        return 1 << (f.i - 1)
    rest = frozenset(range(1, b.n + 1)) - f.subset
    return mask_of(rest) | (1 << b.n)


@dataclass(frozen=True)
class FaceRecord:
    nested_set: SetSystem
    facet_set: frozenset
    vertex_set: frozenset[VertexDescriptor]
    dim: int

    def points(self, b: BVector) -> list[Point]:
        return sorted(v.point(b) for v in self.vertex_set)

    def to_json(self, b: BVector) -> dict:
        return {
            "nested": self.nested_set.to_lists(),
            "facets": [f.to_json(b) for f in sorted(self.facet_set, key=lambda f: f.sort_key())],
            "vertices": [list(p) for p in self.points(b)],
            "dim": self.dim,
        }


def face_from_nested_set(
    b: BVector, N: SetSystem, verts: Sequence[VertexDescriptor] | None = None
) -> FaceRecord:
    building = building_for(b)
    if not is_nested_set(N, building):
        raise ValueError(f"{N} is not nested for this building set")
    fs = frozenset(facet_for_member(b, m) for m in N.members)
    pool = vertices(b) if verts is None else verts
    on = frozenset(v for v in pool if all(is_tight(f, b, v.point(b)) for f in fs))
    if not on:
        raise AssertionError(f"nested set {N} gave an empty face")
    # the polytope is simple, so each facet cuts the dimension by one
    return FaceRecord(N, fs, on, b.n - len(N))


def vertex_from_maximal_nested_set(b: BVector, N: SetSystem) -> Point:
    """Place the entries of the vertex directly from the nested set: each
    singleton ``{i}`` (``i <= n``) is a 1, and walking up the chain of members
    containing ``n+1`` the new position at each step receives ``S_{|C|}``,
    where ``C`` is the previous chain member."""
    n = b.n
    top = 1 << n
    full = (1 << (n + 1)) - 1
    if len(N) != n:
        raise ValueError(f"a maximal nested set has {n} members, got {len(N)}")
    ones = 0
    with_top = []
    for m in N.members:
        if m & top:
            with_top.append(m)
        elif popcount(m) == 1:
            ones |= m
        else:
            raise ValueError(f"unexpected member {elements(m)}")
    base = ones | top
    stray = [m for m in with_top if m & base != m and base & m != base]
    if stray:
        raise ValueError(f"members {[elements(m) for m in stray]} do not extend {elements(base)}")
    chain = [base] + sorted((m for m in with_top if popcount(m) > popcount(base)), key=popcount)
    if chain[-1] != full:
        chain.append(full)
    x = [0] * n
    for i in elements(ones):
        x[i - 1] = 1
    for lo, hi in zip(chain, chain[1:]):
        new = hi & ~lo
        if lo & hi != lo or popcount(new) != 1:
            raise ValueError(f"chain step {elements(lo)} -> {elements(hi)} is not a cover")
        x[elements(new)[0] - 1] = b.S(popcount(lo))
    if 0 in x:
        raise ValueError(f"{N} does not determine every coordinate")
    return tuple(x)


class CombinatorialType(enum.Enum):
    ClassicalPF = "ClassicalPF"
    Stellohedron = "Stellohedron"


def combinatorial_type(b: BVector) -> CombinatorialType:
    return CombinatorialType.ClassicalPF if b.b1_is_one else CombinatorialType.Stellohedron


@dataclass
class FaceLattice:
    """Nonempty faces, each tagged with the nested set that names it.

    Faces are ordered by dimension and then by their sorted vertex points.
    The order relation is reverse inclusion of nested sets.
    """

    b: BVector
    faces: list[FaceRecord]

    def rank_sizes(self) -> tuple[int, ...]:
        """Number of faces in each dimension ``0..n``."""
        counts = [0] * (self.b.n + 1)
        for f in self.faces:
            counts[f.dim] += 1
        return tuple(counts)

    def of_dim(self, d: int) -> list[FaceRecord]:
        return [f for f in self.faces if f.dim == d]

    def leq(self, a: FaceRecord, c: FaceRecord) -> bool:
        """``a`` is a face of ``c``."""
        return c.nested_set.members <= a.nested_set.members


def face_lattice(b: BVector, budget: int = DEFAULT_NESTED_BUDGET) -> FaceLattice:
    verts = vertices(b)
    recs = [face_from_nested_set(b, N, verts) for N in nested_complex(building_for(b), budget=budget)]
    recs.sort(key=lambda r: (r.dim, r.points(b)))
    return FaceLattice(b, recs)


def descriptor_map(b: BVector, other: BVector) -> dict[VertexDescriptor, VertexDescriptor]:
    """Match vertices of two polytopes in the same regime by descriptor."""
    if b.n != other.n or b.b1_is_one != other.b1_is_one:
        raise ValueError("descriptor matching needs equal n and the same b_1 regime")
    theirs = set(vertices(other))
    out = {}
    for v in vertices(b):
        if v not in theirs:
            raise AssertionError(f"descriptor {v} has no partner")
        out[v] = v
    return out


def lattices_isomorphic_by_descriptors(b: BVector, other: BVector) -> bool:
    """The descriptor bijection sends every face of one polytope onto a face
    of the other with the same dimension."""
    mapping = descriptor_map(b, other)
    mine = {(frozenset(mapping[v] for v in f.vertex_set), f.dim) for f in face_lattice(b).faces}
    theirs = {(f.vertex_set, f.dim) for f in face_lattice(other).faces}
    return mine == theirs
