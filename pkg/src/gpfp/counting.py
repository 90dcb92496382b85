"""Eulerian polynomials, vertex posets, and the h- and f-vectors.

The h-polynomial is available along two routes that share no code: the
closed form in terms of (binomial) Eulerian polynomials, and the sum of
``z ** des(Q_v)`` over the vertex posets ``Q_v``.  The f-vector likewise
comes from a Stirling-number sum and from ``f(t) = h(t + 1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import BVector, VertexDescriptor
from .polytope import _as_vertex, _special, vertices


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` multiplies ``z**i``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(v) for v in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(m))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + other.scale(-1)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, c in enumerate(other.coeffs):
                out[i + j] += a * c
        return IntPolynomial(out)

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(c * v for v in self.coeffs)

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by ``z**k``."""
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, z):
        return sum(c * z**i for i, c in enumerate(self.coeffs))

    def translate(self, a: int) -> IntPolynomial:
        """The polynomial ``p(z + a)``."""
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += c * math.comb(i, j) * a ** (i - j)
        return IntPolynomial(out)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                coef = "" if (c == 1 and i > 0) else str(c)
                terms.append(coef if i == 0 else f"{coef}z" if i == 1 else f"{coef}z^{i}")
        return " + ".join(terms) or "0"


ONE = IntPolynomial([1])
Z = IntPolynomial([0, 1])


# -- Eulerian numbers ---------------------------------------------------------


@lru_cache(maxsize=None)
def _eulerian_row(k: int) -> tuple[int, ...]:
    if k == 0:
        return (1,)
    prev = _eulerian_row(k - 1)
    row = []
    for d in range(k):
        a = (d + 1) * prev[d] if d < len(prev) else 0
        c = (k - d) * prev[d - 1] if 0 < d <= len(prev) else 0
        row.append(a + c)
    return tuple(row)


def eulerian(k: int) -> IntPolynomial:
    """``A_k(z)``: descents over permutations of ``[k]``, via the triangle
    recurrence ``A(k, d) = (d+1) A(k-1, d) + (k-d) A(k-1, d-1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return IntPolynomial(_eulerian_row(k))


def permutation_descents(perm: Sequence[int]) -> int:
    return sum(1 for a, c in zip(perm, perm[1:]) if a > c)


def eulerian_bruteforce(k: int) -> IntPolynomial:
    counts = [0] * (k + 1)
    for p in itertools.permutations(range(1, k + 1)):
        counts[permutation_descents(p)] += 1
    return IntPolynomial(counts)


def binomial_eulerian(n: int) -> IntPolynomial:
    """``1 + z * sum_{k=1}^{n} C(n, k) A_k(z)``."""
    if n < 1:
        raise ValueError("n must be positive")
    acc = IntPolynomial()
    for k in range(1, n + 1):
        acc = acc + eulerian(k).scale(math.comb(n, k))
    return ONE + acc.shift()


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# -- vertex posets -------------------------------------------------------------


@dataclass(frozen=True)
class VertexPoset:
    """A poset on ``[n + 1]`` given by its cover relations ``(i, j)``, i.e.
    ``i`` is covered by ``j``."""

    size: int
    covers: frozenset[tuple[int, int]]

    def descents(self) -> int:
        return descents(self)

    def is_acyclic(self) -> bool:
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.size + 1))
        g.add_edges_from(self.covers)
        return nx.is_directed_acyclic_graph(g)


def vertex_poset(b: BVector, v: VertexDescriptor | Sequence[int]) -> VertexPoset:
    v = _as_vertex(b, v)
    n, k, pi = b.n, v.k, v.perm
    top = n + 1
    if _special(b, v):
        covers = {(pi[j - 2], pi[j - 1]) for j in range(2, n + 1)}
        covers.add((top, pi[1]))
        return VertexPoset(top, frozenset(covers))
    covers = {(pi[j - 1], top) for j in range(1, k + 1)}
    if k < n:
        covers.add((top, pi[k]))
    covers |= {(pi[j - 2], pi[j - 1]) for j in range(k + 2, n + 1)}
    return VertexPoset(top, frozenset(covers))


def vertex_poset_from_tangent_cone(b: BVector, v: VertexDescriptor | Sequence[int]) -> VertexPoset:
    """The same poset read off the lifted tangent cone: a lifted generator
    ``e_a - e_c`` bounds the normal cone by ``x_a <= x_c``."""
    from .polytope import tangent_cone_generators

    n = b.n
    covers = set()
    for g in tangent_cone_generators(b, v):
        lifted = list(g) + [-sum(g)]
        pos = [i + 1 for i, c in enumerate(lifted) if c == 1]
        neg = [i + 1 for i, c in enumerate(lifted) if c == -1]
        if len(pos) != 1 or len(neg) != 1 or sum(map(abs, lifted)) != 2:
            raise ValueError(f"lifted generator {lifted} is not a root e_a - e_c")
        covers.add((pos[0], neg[0]))
    return VertexPoset(n + 1, frozenset(covers))


def descents(q: VertexPoset) -> int:
    return sum(1 for i, j in q.covers if i > j)


# -- h and f -------------------------------------------------------------------


def h_polynomial(b: BVector) -> IntPolynomial:
    """Closed form: ``A~_n(z) - n z A_{n-1}(z)`` if ``b_1 = 1``, else ``A~_n(z)``."""
    n = b.n
    h = binomial_eulerian(n)
    if b.b1_is_one:
        h = h - eulerian(n - 1).shift().scale(n)
    return h


def h_polynomial_from_posets(b: BVector) -> IntPolynomial:
    """``sum_v z ** des(Q_v)`` over all vertices."""
    counts = [0] * (b.n + 1)
    for v in vertices(b):
        counts[descents(vertex_poset(b, v))] += 1
    return IntPolynomial(counts)


def f_vector(b: BVector) -> tuple[int, ...]:
    """``(f_0, ..., f_n)`` from the Stirling-number sums (``f_n = 1``)."""
    n = b.n
    out = []
    for k in range(n + 1):
        total = 0
        for j in range(n - k + 1):
            if b.b1_is_one and j == 1:
                continue
            total += math.comb(n, j) * math.factorial(n - k - j) * stirling2(n - j + 1, n - k - j + 1)
        out.append(total)
    return tuple(out)


def f_from_h(h: IntPolynomial, n: int) -> tuple[int, ...]:
    """Invert ``h(t) = f(t - 1)``: the coefficients of ``h(t + 1)``."""
    f = h.translate(1)
    return tuple(f[i] for i in range(n + 1))


def h_from_f(f: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(f).translate(-1)
