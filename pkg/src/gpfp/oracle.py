"""Brute-force certificates that do not rely on the closed-form descriptions.

Hull equality is certified without a convex-hull code:

1. every enumerated b-parking function satisfies every listed inequality;
2. every claimed vertex is a b-parking function whose tight inequalities
   have rank ``n``;
3. every inequality is tight on ``n`` affinely independent claimed vertices;
4. walking off each claimed vertex along each of its edges of the
   H-polytope (ratio test) lands on another claimed vertex.

Item 4 shows the claimed set is a union of connected components of the
H-polytope's graph, hence all of its vertices; with 1 and 2 this gives
``conv(parking functions) = H-polytope``, and 3 shows every inequality is
needed.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from . import _linalg
from .core import (
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceeded,
    BVector,
    Point,
    enumerate_parking_functions,
    is_parking_function,
)
from .nestedsets import FaceLattice
from .polytope import EdgeGraph, facet_matrix, facets, is_tight, satisfies, vertex_points


class CertificateKind(enum.Enum):
    VertexRank = "VertexRank"
    FacetTightness = "FacetTightness"
    HullContainment = "HullContainment"
    FaceLatticeMatch = "FaceLatticeMatch"
    DiameterMatch = "DiameterMatch"
    LatticeCount = "LatticeCount"
    ProjectionMatch = "ProjectionMatch"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    passed: bool
    witness: Any = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed certificate must carry a witness")

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "passed": self.passed, "witness": self.witness}


def _fail(kind: CertificateKind, **witness) -> Certificate:
    return Certificate(kind, False, witness)


def certify_vertex(b: BVector, v: Sequence[int]) -> Certificate:
    fs = facets(b)
    bad = [str(f) for f in fs if not satisfies(f, b, v)]
    if bad:
        return _fail(CertificateKind.VertexRank, point=list(v), violated=bad)
    active = [f for f in fs if is_tight(f, b, v)]
    r = _linalg.rank([f.normal(b.n) for f in active])
    if r != b.n:
        return _fail(CertificateKind.VertexRank, point=list(v), active=[str(f) for f in active], rank=r)
    return Certificate(CertificateKind.VertexRank, True, {"active": [str(f) for f in active]})


def _edge_endpoints(b: BVector, v: Point, A: np.ndarray, rhs: np.ndarray) -> list[Point] | str:
    """Other endpoints of the ``n`` edges at a simple vertex ``v``."""
    n = b.n
    x = np.asarray(v, dtype=np.int64)
    tight = np.nonzero(A @ x == rhs)[0]
    if len(tight) != n:
        return f"{len(tight)} tight inequalities"
    out = []
    for drop in tight:
        keep = [A[i].tolist() for i in tight if i != drop]
        (d,) = _linalg.nullspace(keep, n)
        if sum(a * c for a, c in zip(A[drop].tolist(), d)) > 0:
            d = [-c for c in d]
        rates = [sum(int(a) * c for a, c in zip(row, d)) for row in A]
        steps = [
            Fraction(int(rhs[i]) - int(A[i] @ x)) / rate
            for i, rate in enumerate(rates)
            if rate > 0
        ]
        if not steps:
            return "unbounded edge"
        t = min(steps)
        w = [a + t * c for a, c in zip(v, d)]
        if any(c.denominator != 1 for c in w):
            return f"fractional endpoint {w}"
        out.append(tuple(int(c) for c in w))
    return out


def certify_hull(b: BVector, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Certificate:
    kind = CertificateKind.HullContainment
    fs, A, rhs = facet_matrix(b)
    pfs = enumerate_parking_functions(b, budget)
    X = np.asarray(pfs, dtype=np.int64)
    viol = np.nonzero((X @ A.T > rhs).any(axis=1))[0]
    if viol.size:
        return _fail(kind, step="parking functions inside", point=list(pfs[viol[0]]))
    claimed = vertex_points(b)
    for v in claimed:
        if not is_parking_function(v, b):
            return _fail(kind, step="vertex is a parking function", point=list(v))
        c = certify_vertex(b, v)
        if not c.passed:
            return _fail(kind, step="vertex rank", detail=c.witness)
    for f, row, r in zip(fs, A, rhs):
        on = [v for v in claimed if int(row @ np.asarray(v)) == int(r)]
        if _linalg.affine_rank(on) != b.n - 1:
            return _fail(kind, step="facet tightness", facet=str(f), tight=len(on))
    known = set(claimed)
    for v in claimed:
        ends = _edge_endpoints(b, v, A, rhs)
        if isinstance(ends, str):
            return _fail(kind, step="edge closure", point=list(v), reason=ends)
        for w in ends:
            if w not in known:
                return _fail(kind, step="edge closure", point=list(v), unexpected=list(w))
    return Certificate(
        kind, True, {"parking_functions": len(pfs), "vertices": len(claimed), "facets": len(fs)}
    )


# -- face lattice --------------------------------------------------------------------


@dataclass
class BruteLattice:
    """Faces as sets of vertex points, ranked by affine dimension."""

    n: int
    faces: list[tuple[frozenset[Point], int]]

    def rank_sizes(self) -> tuple[int, ...]:
        counts = [0] * (self.n + 1)
        for _, d in self.faces:
            counts[d] += 1
        return tuple(counts)

    def leq(self, a: frozenset[Point], c: frozenset[Point]) -> bool:
        return a <= c


def brute_face_lattice(b: BVector, budget: int = 100_000) -> BruteLattice:
    """Every nonempty intersection of facets, found by closing the facet
    vertex sets under intersection, plus the polytope itself."""
    pts = vertex_points(b)
    fs, A, rhs = facet_matrix(b)
    P = np.asarray(pts, dtype=np.int64)
    facet_sets = [frozenset(np.nonzero(P @ row == r)[0].tolist()) for row, r in zip(A, rhs)]
    seen: set[frozenset[int]] = {frozenset(range(len(pts)))}
    frontier = [s for s in set(facet_sets) if s]
    seen.update(frontier)
    while frontier:
        nxt = []
        for face in frontier:
            for fs_ in facet_sets:
                inter = face & fs_
                if inter and inter not in seen:
                    seen.add(inter)
                    nxt.append(inter)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"more than {budget} faces")
        frontier = nxt
    faces = []
    for s in seen:
        members = [pts[i] for i in sorted(s)]
        faces.append((frozenset(members), _linalg.affine_rank(members)))
    faces.sort(key=lambda f: (f[1], sorted(f[0])))
    return BruteLattice(b.n, faces)


def compare_face_lattices(nested: FaceLattice, brute: BruteLattice) -> Certificate:
    """Match faces by vertex set, then check dimensions and that inclusion of
    vertex sets is exactly reverse inclusion of nested sets."""
    kind = CertificateKind.FaceLatticeMatch
    b = nested.b
    by_points = {}
    for rec in nested.faces:
        key = frozenset(rec.points(b))
        if key in by_points:
            return _fail(kind, duplicate=sorted(map(list, key)))
        by_points[key] = rec
    brute_dims = dict(brute.faces)
    if set(by_points) != set(brute_dims):
        extra = [sorted(map(list, k)) for k in set(by_points) ^ set(brute_dims)]
        return _fail(kind, unmatched=extra[:3])
    for key, rec in by_points.items():
        if rec.dim != brute_dims[key]:
            return _fail(kind, face=sorted(map(list, key)), nested_dim=rec.dim, brute_dim=brute_dims[key])
    keys = list(by_points)
    for a, c in itertools.product(keys, repeat=2):
        if nested.leq(by_points[a], by_points[c]) != brute.leq(a, c):
            return _fail(kind, pair=[sorted(map(list, a)), sorted(map(list, c))])
    return Certificate(kind, True, {"faces": len(keys)})


# -- lattice points and diameters -------------------------------------------------------


def count_lattice_points(b: BVector, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Integer points of the polytope, by scanning the box ``[1, S_n]^n``."""
    top = b.S(b.n)
    cells = top**b.n
    if cells > budget:
        raise BudgetExceeded(f"box has {cells} cells (budget {budget})")
    rhs = np.cumsum(np.asarray(b.prefix_sums[::-1], dtype=np.int64))
    total = 0
    axis = np.arange(1, top + 1, dtype=np.int64)
    rest = np.array(list(itertools.product(axis, repeat=b.n - 1)), dtype=np.int64)
    rest = rest.reshape(top ** (b.n - 1), b.n - 1)
    # one slab per value of the first coordinate keeps memory small
    for first in axis:
        pts = np.hstack([np.full((rest.shape[0], 1), first), rest])
        top_sums = np.cumsum(-np.sort(-pts, axis=1), axis=1)
        total += int((top_sums <= rhs).all(axis=1).sum())
    return total


def bfs_diameter(graph) -> int:
    """Largest BFS eccentricity.  Accepts an :class:`EdgeGraph` or a networkx graph."""
    import networkx as nx

    g = graph.to_networkx() if isinstance(graph, EdgeGraph) else graph
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        raise ValueError("diameter is only defined for a connected graph")
    return max(nx.eccentricity(g).values())
