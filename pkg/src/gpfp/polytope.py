"""Vertices, facets, edges and tangent cones of the b-parking-function polytope."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .core import (
    BVector,
    BudgetExceeded,
    DimensionMismatch,
    NotAVertex,
    Point,
    VertexDescriptor,
    _check_dim,
    make_vertex,
    y_point,
)

DEFAULT_VERTEX_BUDGET = 100_000


# -- facets -----------------------------------------------------------------


@dataclass(frozen=True)
class Lower:
    """The facet ``x_i >= 1``."""

    i: int

    def normal(self, n: int) -> tuple[int, ...]:
        """Outer normal ``a`` in the form ``a . x <= rhs``."""
        return tuple(-1 if j == self.i else 0 for j in range(1, n + 1))

    def rhs(self, b: BVector) -> int:
        return -1

    def sort_key(self):
        return (0, 0, (self.i,))

    def to_json(self, b: BVector) -> dict:
        return {"kind": "lower", "i": self.i}

    def __str__(self) -> str:
        return f"L{self.i}"


@dataclass(frozen=True)
class Upper:
    """The b-parking inequality ``sum_{i in I} x_i <= S_n + ... + S_{n-|I|+1}``."""

    subset: frozenset[int]

    def __init__(self, subset):
        object.__setattr__(self, "subset", frozenset(subset))
        if not self.subset:
            raise ValueError("an upper facet needs a nonempty index set")

    def normal(self, n: int) -> tuple[int, ...]:
        return tuple(1 if j in self.subset else 0 for j in range(1, n + 1))

    def rhs(self, b: BVector) -> int:
        return upper_rhs(b, len(self.subset))

    def sort_key(self):
        return (1, len(self.subset), tuple(sorted(self.subset)))

    def to_json(self, b: BVector) -> dict:
        return {"kind": "upper", "set": sorted(self.subset), "rhs": self.rhs(b)}

    def __str__(self) -> str:
        return "U{" + ",".join(map(str, sorted(self.subset))) + "}"


Facet = Union[Lower, Upper]


def upper_rhs(b: BVector, m: int) -> int:
    """Right-hand side of the b-parking inequality for any ``|I| = m``."""
    return sum(b.prefix_sums[b.n - m :])


def facets(b: BVector) -> list[Facet]:
    """The minimal H-description: lower facets by index, then upper facets by
    ``(|I|, I)``.  Subsets of size ``n - 1`` are redundant when ``b_1 = 1``."""
    n = b.n
    out: list[Facet] = [Lower(i) for i in range(1, n + 1)]
    for m in range(1, n + 1):
        if b.b1_is_one and m == n - 1:
            continue
        out.extend(Upper(c) for c in itertools.combinations(range(1, n + 1), m))
    return out


def facet_value(f: Facet, x: Sequence) -> int | Fraction:
    return sum(a * v for a, v in zip(f.normal(len(x)), x))


def satisfies(f: Facet, b: BVector, x: Sequence) -> bool:
    return facet_value(f, x) <= f.rhs(b)


def is_tight(f: Facet, b: BVector, x: Sequence) -> bool:
    return facet_value(f, x) == f.rhs(b)


def contains(b: BVector, x: Sequence[int | Fraction]) -> bool:
    """Exact membership test; ``x`` may have rational coordinates."""
    _check_dim(x, b)
    xs = [Fraction(v) for v in x]
    if min(xs) < 1:
        return False
    # sum over I is largest for the |I| largest coordinates
    top = sorted(xs, reverse=True)
    return all(sum(top[:m]) <= upper_rhs(b, m) for m in range(1, b.n + 1))


def active_facets(b: BVector, x: Sequence) -> list[Facet]:
    _check_dim(x, b)
    return [f for f in facets(b) if is_tight(f, b, x)]


def facet_matrix(b: BVector) -> tuple[list[Facet], np.ndarray, np.ndarray]:
    """Facets with their normals stacked as an integer matrix ``A`` and ``rhs``
    so that the polytope is ``{x : A x <= rhs}``."""
    fs = facets(b)
    A = np.array([f.normal(b.n) for f in fs], dtype=np.int64)
    r = np.array([f.rhs(b) for f in fs], dtype=np.int64)
    return fs, A, r


# -- vertices ---------------------------------------------------------------


def vertex_count(b: BVector) -> int:
    n = b.n
    # pi(y_k) <-> (positions of the n-k non-one entries, placement of S_{k+1..n})
    by_k = [math.comb(n, n - k) * math.factorial(n - k) for k in range(n + 1)]
    if b.b1_is_one:
        # y_0 = y_1: one vertex per permutation of (1, S_2, ..., S_n)
        return math.factorial(n) + sum(by_k[2:])
    return sum(by_k)


def vertices(b: BVector, budget: int = DEFAULT_VERTEX_BUDGET) -> list[VertexDescriptor]:
    """All vertices, sorted by their coordinates."""
    count = vertex_count(b)
    if count > budget:
        raise BudgetExceeded(f"{count} vertices exceed the budget {budget}")
    n = b.n
    found: dict[Point, VertexDescriptor] = {}
    for k in range(n + 1):
        for perm in itertools.permutations(range(1, n + 1)):
            v = VertexDescriptor(k, perm)
            x = v.point(b)
            if x not in found:
                found[x] = VertexDescriptor.from_point(b, x)
    return [found[x] for x in sorted(found)]


def vertex_points(b: BVector, budget: int = DEFAULT_VERTEX_BUDGET) -> list[Point]:
    return [v.point(b) for v in vertices(b, budget)]


def _as_vertex(b: BVector, v: VertexDescriptor | Sequence[int]) -> VertexDescriptor:
    if isinstance(v, VertexDescriptor):
        return make_vertex(b, v.k, v.perm)
    return VertexDescriptor.from_point(b, v)


def _special(b: BVector, v: VertexDescriptor) -> bool:
    # b_1 = 1 and v a permutation of y_0 = y_1
    return b.b1_is_one and v.k == 1


def facets_containing_vertex(b: BVector, v: VertexDescriptor | Sequence[int]) -> list[Facet]:
    """The ``n`` facets through ``v``, read off from its descriptor."""
    v = _as_vertex(b, v)
    n, k, pi = b.n, v.k, v.perm

    def upper_from(j: int) -> Upper:
        return Upper(pi[j - 1 :])

    if _special(b, v):
        out = [Lower(pi[0]), upper_from(1)] + [upper_from(j) for j in range(3, n + 1)]
    else:
        out = [Lower(pi[j - 1]) for j in range(1, k + 1)]
        out += [upper_from(j) for j in range(k + 1, n + 1)]
    return sorted(out, key=lambda f: f.sort_key())


# -- edges ------------------------------------------------------------------


@dataclass(frozen=True)
class Raise:
    """Neighbor minus vertex is ``amount * e_position``."""

    position: int
    amount: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(self.amount if j == self.position else 0 for j in range(1, n + 1))


@dataclass(frozen=True)
class Drop:
    """Neighbor minus vertex is ``-amount * e_position``."""

    position: int
    amount: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(-self.amount if j == self.position else 0 for j in range(1, n + 1))


@dataclass(frozen=True)
class Swap:
    """Neighbor minus vertex is ``amount * (e_a - e_b)``."""

    a: int
    b: int
    amount: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(
            self.amount if j == self.a else -self.amount if j == self.b else 0
            for j in range(1, n + 1)
        )


EdgeLabel = Union[Raise, Drop, Swap]


def label_to_json(label: EdgeLabel) -> dict:
    if isinstance(label, Swap):
        return {"kind": "swap", "a": label.a, "b": label.b, "amount": label.amount}
    kind = "raise" if isinstance(label, Raise) else "drop"
    return {"kind": kind, "position": label.position, "amount": label.amount}


def edge_labels(b: BVector, v: VertexDescriptor | Sequence[int]) -> list[EdgeLabel]:
    """Edge directions at ``v`` from the adjacency rules for ``pi(y_k)``."""
    v = _as_vertex(b, v)
    n, k, pi = b.n, v.k, v.perm
    S = b.S
    labels: list[EdgeLabel] = []
    if _special(b, v):
        for j in range(2, n + 1):
            labels.append(Swap(pi[j - 2], pi[j - 1], b.entries[j - 1]))
        labels.append(Drop(pi[1], b.entries[1]))
        return labels
    for j in range(1, k + 1):
        # one of the ones becomes S_k
        labels.append(Raise(pi[j - 1], S(k) - 1))
    for j in range(k + 2, n + 1):
        labels.append(Swap(pi[j - 2], pi[j - 1], b.entries[j - 1]))
    if k <= n - 1:
        labels.append(Drop(pi[k], S(k + 1) - 1))
    return labels


def neighbors(
    b: BVector, v: VertexDescriptor | Sequence[int]
) -> list[tuple[VertexDescriptor, EdgeLabel]]:
    v = _as_vertex(b, v)
    x = v.point(b)
    out = []
    for lab in edge_labels(b, v):
        w = tuple(a + d for a, d in zip(x, lab.vector(b.n)))
        out.append((VertexDescriptor.from_point(b, w), lab))
    return out


@dataclass
class EdgeGraph:
    """The 1-skeleton.  ``adjacency[i]`` lists neighbor indices in ascending
    order; ``edges`` holds ``(i, j, label)`` with ``i < j`` and the label read
    as ``vertex j - vertex i``."""

    b: BVector
    vertices: list[VertexDescriptor]
    adjacency: list[list[int]]
    edges: list[tuple[int, int, EdgeLabel]]

    @property
    def points(self) -> list[Point]:
        return [v.point(self.b) for v in self.vertices]

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from((i, j) for i, j, _ in self.edges)
        return g


def edge_graph(b: BVector, budget: int = DEFAULT_VERTEX_BUDGET) -> EdgeGraph:
    verts = vertices(b, budget)
    index = {v: i for i, v in enumerate(verts)}
    adjacency: list[list[int]] = []
    edges = []
    for i, v in enumerate(verts):
        nbrs = []
        for w, lab in neighbors(b, v):
            j = index[w]
            nbrs.append(j)
            if i < j:
                edges.append((i, j, lab))
        adjacency.append(sorted(nbrs))
    edges.sort(key=lambda e: (e[0], e[1]))
    return EdgeGraph(b, verts, adjacency, edges)


# -- tangent cones ------------------------------------------------------------


def _unit(n: int, i: int, s: int = 1) -> tuple[int, ...]:
    return tuple(s if j == i else 0 for j in range(1, n + 1))


def _diff(n: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(1 if t == i else -1 if t == j else 0 for t in range(1, n + 1))


def tangent_cone_generators(b: BVector, v: VertexDescriptor | Sequence[int]) -> list[tuple[int, ...]]:
    """Primitive generators of the tangent cone at ``v``, one per incident edge."""
    v = _as_vertex(b, v)
    n, k, pi = b.n, v.k, v.perm
    if _special(b, v):
        gens = [_diff(n, pi[j - 2], pi[j - 1]) for j in range(2, n + 1)]
        gens.append(_unit(n, pi[1], -1))
        return gens
    if k == n:
        return [_unit(n, j) for j in range(1, n + 1)]
    gens = [_unit(n, pi[j - 1]) for j in range(1, k + 1)]
    gens.append(_unit(n, pi[k], -1))
    gens += [_diff(n, pi[j - 2], pi[j - 1]) for j in range(k + 2, n + 1)]
    return gens


__all__ = [
    "Lower",
    "Upper",
    "Facet",
    "Raise",
    "Drop",
    "Swap",
    "EdgeLabel",
    "EdgeGraph",
    "NotAVertex",
    "DimensionMismatch",
    "upper_rhs",
    "facets",
    "contains",
    "active_facets",
    "facet_matrix",
    "vertex_count",
    "vertices",
    "vertex_points",
    "facets_containing_vertex",
    "edge_labels",
    "neighbors",
    "edge_graph",
    "tangent_cone_generators",
    "label_to_json",
]
