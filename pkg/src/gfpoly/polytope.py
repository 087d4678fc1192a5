"""Lattice polytopes with exact vertex and facet data.

``LatticePolytope`` is built from any finite set of integer points and keeps the
irredundant, lexicographically sorted vertex list.  Full-dimensional polytopes
also carry their facets: primitive integer normals with integer offsets and the
vertex incidence of each facet.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import lattice
from .errors import DimensionMismatch, EmptyInput, NotFullDimensional, SearchBudgetExceeded
from .hull import facets_of_points, vertex_indices
from .intlinalg import Vector, det, independent_rows, inverse

log = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 10**7


class Facet(NamedTuple):
    normal: Vector
    offset: int
    vertex_mask: int


@dataclass(frozen=True)
class HRep:
    """``{x : <normal, x> <= offset}`` over all facets, sorted by (normal, offset)."""

    facets: tuple[Facet, ...]

    @property
    def normals(self) -> np.ndarray:
        return np.array([f.normal for f in self.facets], dtype=np.int64)

    @property
    def offsets(self) -> np.ndarray:
        return np.array([f.offset for f in self.facets], dtype=np.int64)

    def inequalities(self) -> list[tuple[Vector, int]]:
        return [(f.normal, f.offset) for f in self.facets]

    def __len__(self) -> int:
        return len(self.facets)


@dataclass(frozen=True)
class FVector:
    counts: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.counts))

    def satisfies_euler(self) -> bool:
        m = self.dim
        return self.euler_characteristic() == 1 - (-1) ** m

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]


# -- hull ------------------------------------------------------------------


@dataclass(frozen=True)
class _AffineChart:
    """Coordinates ``cols`` identify the affine hull with ``Z^k`` rationally."""

    cols: tuple[int, ...]
    origin: Vector
    lift_num: tuple[tuple[int, ...], ...]  # k x m integer matrix, lift = lift_num / lift_den
    lift_den: int


def _affine_chart(points: Sequence[Vector], m: int) -> _AffineChart:
    v0 = points[0]
    diffs = [tuple(a - b for a, b in zip(p, v0)) for p in points[1:]]
    basis = [diffs[i] for i in independent_rows(diffs)]
    k = len(basis)
    cols = tuple(independent_rows([[row[c] for row in basis] for c in range(m)]))
    sub = [[row[c] for c in cols] for row in basis]
    inv = inverse(sub)  # k x k, rows indexed by the projected coordinates
    lift = [[sum(inv[i][r] * basis[r][c] for r in range(k)) for c in range(m)] for i in range(k)]
    den = 1
    for row in lift:
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
    num = tuple(tuple(int(x * den) for x in row) for row in lift)
    return _AffineChart(cols, v0, num, den)


@lru_cache(maxsize=8192)
def _hull_data(m: int, pts: tuple[Vector, ...]):
    """(dim, vertices, facets or None, chart or None) for sorted distinct ``pts``."""
    if len(pts) == 1:
        return 0, pts, None, None
    v0 = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, v0)) for p in pts[1:]]
    k = len(independent_rows(diffs))
    if k == m:
        raw = facets_of_points(pts)
        vidx = vertex_indices(len(pts), raw)
        verts = tuple(pts[i] for i in vidx)
        remap = {old: new for new, old in enumerate(vidx)}
        facets = []
        for normal, offset, pmask in raw:
            vm = 0
            for old, new in remap.items():
                if pmask >> old & 1:
                    vm |= 1 << new
            facets.append(Facet(normal, offset, vm))
        facets.sort(key=lambda f: (f.normal, f.offset))
        return m, verts, tuple(facets), None
    chart = _affine_chart(list(pts), m)
    proj = [tuple(p[c] for c in chart.cols) for p in pts]
    if k == 1:
        lo = min(range(len(pts)), key=lambda i: proj[i])
        hi = max(range(len(pts)), key=lambda i: proj[i])
        vidx = sorted({lo, hi})
    else:
        vidx = vertex_indices(len(pts), facets_of_points(proj))
    verts = tuple(sorted(pts[i] for i in vidx))
    return k, verts, None, chart


class LatticePolytope:
    """Convex hull of integer points, stored by its sorted vertex list."""

    def __init__(self, points: Iterable[Sequence[int]], ambient_dim: int | None = None):
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            raise EmptyInput("cannot take the hull of no points")
        m = len(pts[0]) if ambient_dim is None else ambient_dim
        if any(len(p) != m for p in pts):
            raise DimensionMismatch("points have inconsistent lengths")
        self.ambient_dim = m
        self.dim, self.vertices, self._facets, self._chart = _hull_data(m, tuple(pts))

    # identity
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticePolytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self.dim}, ambient_dim={self.ambient_dim}, n_vertices={len(self.vertices)})"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def vertex_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=np.int64).reshape(len(self.vertices), self.ambient_dim)

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "vertices": [list(v) for v in self.vertices]}

    def negate(self) -> "LatticePolytope":
        return LatticePolytope([tuple(-x for x in v) for v in self.vertices], self.ambient_dim)


def hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    return LatticePolytope(points)


def require_full_dimensional(P: LatticePolytope) -> None:
    if not P.is_full_dimensional:
        raise NotFullDimensional(f"polytope has dimension {P.dim} in Z^{P.ambient_dim}")


def h_representation(P: LatticePolytope) -> HRep:
    require_full_dimensional(P)
    return HRep(P._facets)


# -- lattice points --------------------------------------------------------


@lru_cache(maxsize=4096)
def _levels_for(m: int, vertices: tuple[Vector, ...]):
    levels = []
    for j in range(1, m + 1):
        facets = _hull_data(j, tuple(sorted({v[:j] for v in vertices})))[2]
        levels.append((
            np.array([f.normal for f in facets], dtype=np.int64),
            np.array([f.offset for f in facets], dtype=np.int64),
        ))
    return levels


def _projection_levels(P: LatticePolytope):
    """Facet data of the projections of ``P`` onto its first 1, 2, ..., m coordinates."""
    return _levels_for(P.ambient_dim, P.vertices)


def _scan(P: LatticePolytope, n: int, strict: bool, count_only: bool):
    if n < 0:
        raise ValueError("dilation must be nonnegative")
    if P.is_full_dimensional:
        radius = int(np.abs(P.vertex_array).max())
        return lattice.scan(_projection_levels(P), n, strict=strict, count_only=count_only, radius=radius)
    if strict:
        raise NotFullDimensional("interior points need a full-dimensional polytope")
    return _scan_lower_dim(P, n, count_only)


def _scan_lower_dim(P: LatticePolytope, n: int, count_only: bool):
    m = P.ambient_dim
    if P.dim == 0:
        pts = np.array([[n * x for x in P.vertices[0]]], dtype=np.int64).reshape(1, m)
        return 1 if count_only else pts
    chart = P._chart
    proj = LatticePolytope([tuple(v[c] for c in chart.cols) for v in P.vertices])
    Y = _scan(proj, n, strict=False, count_only=False)
    y0 = np.array([chart.origin[c] for c in chart.cols], dtype=np.int64)
    T = np.array(chart.lift_num, dtype=np.int64).reshape(P.dim, m)
    num = (Y - n * y0[None, :]) @ T
    ok = (num % chart.lift_den == 0).all(axis=1)
    X = n * np.array(chart.origin, dtype=np.int64)[None, :] + num[ok] // chart.lift_den
    if count_only:
        return int(X.shape[0])
    return X[np.lexsort(X.T[::-1])]


def lattice_point_array(P: LatticePolytope, n: int = 1) -> np.ndarray:
    """Points of ``nP`` in ``Z^m`` as a lexicographically sorted int64 array."""
    return _scan(P, n, strict=False, count_only=False)


def count_lattice_points(P: LatticePolytope, n: int = 1) -> int:
    if n == 0:
        return 1
    return _scan(P, n, strict=False, count_only=True)


def count_interior_lattice_points(P: LatticePolytope, n: int = 1) -> int:
    require_full_dimensional(P)
    return _scan(P, n, strict=True, count_only=True)


def lattice_points(P: LatticePolytope, n: int = 1) -> set[Vector]:
    return {tuple(int(x) for x in row) for row in lattice_point_array(P, n)}


def interior_lattice_points(P: LatticePolytope, n: int = 1) -> set[Vector]:
    require_full_dimensional(P)
    return {tuple(int(x) for x in row) for row in _scan(P, n, strict=True, count_only=False)}


def contains(P: LatticePolytope, x: Sequence[int], n: int = 1) -> bool:
    """Membership of an integer point in ``nP`` for full-dimensional ``P``."""
    return all(sum(a * b for a, b in zip(f.normal, x)) <= n * f.offset for f in h_representation(P).facets)


# -- faces -----------------------------------------------------------------


def face_masks(P: LatticePolytope) -> list[set[int]]:
    """Vertex masks of all nonempty proper faces, grouped by dimension."""
    require_full_dimensional(P)
    m = P.dim
    facets = [f.vertex_mask for f in P._facets]
    levels: list[set[int]] = [set() for _ in range(m)]
    levels[m - 1] = set(facets)
    for k in range(m - 1, 0, -1):
        below = levels[k - 1]
        for face in levels[k]:
            cands = {face & g for g in facets}
            cands.discard(face)
            cands.discard(0)
            for c in cands:
                if not any(c != o and c & o == c for o in cands):
                    below.add(c)
    return levels


def f_vector(P: LatticePolytope) -> FVector:
    return FVector(tuple(len(level) for level in face_masks(P)))


def vertex_signatures(P: LatticePolytope) -> list[tuple]:
    """Per-vertex combinatorial fingerprint (facet degree, sizes of those facets)."""
    require_full_dimensional(P)
    sigs = []
    for i in range(P.n_vertices):
        sizes = sorted(f.vertex_mask.bit_count() for f in P._facets if f.vertex_mask >> i & 1)
        sigs.append((len(sizes), tuple(sizes)))
    return sigs


# -- unimodular equivalence -----------------------------------------------


def transform(P: LatticePolytope, U: Sequence[Sequence[int]], t: Sequence[int] | None = None) -> LatticePolytope:
    """Image ``{v U + t}`` of ``P`` (row-vector convention)."""
    m = P.ambient_dim
    t = t or (0,) * m
    pts = [tuple(sum(v[r] * U[r][c] for r in range(m)) + t[c] for c in range(m)) for v in P.vertices]
    return LatticePolytope(pts, m)


def _is_reflexive_quick(P: LatticePolytope) -> bool:
    return all(f.offset == 1 for f in P._facets)


def invariant_mismatch(P: LatticePolytope, Q: LatticePolytope) -> str | None:
    """Name of the first cheap invariant separating ``P`` and ``Q`` (or ``None``)."""
    from .ehrhart import ehrhart_polynomial

    checks = [
        ("vertex count", lambda X: X.n_vertices),
        ("facet count", lambda X: len(X._facets)),
        ("vertex signatures", lambda X: sorted(vertex_signatures(X))),
        ("f-vector", f_vector),
        ("lattice point count", lambda X: count_lattice_points(X, 1)),
        ("Ehrhart polynomial", ehrhart_polynomial),
    ]
    for name, fn in checks:
        if fn(P) != fn(Q):
            return name
    return None


def unimodular_equivalent(P: LatticePolytope, Q: LatticePolytope, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Whether ``Q = P U + t`` for some ``U`` in GL(m, Z) and integer ``t``.

    Cheap invariants are compared first.  The search then fixes an affine
    basis of ``P`` (a linear one when both polytopes are reflexive, where the
    translation must vanish) and tries every signature-compatible image tuple
    of vertices of ``Q``.  More than ``budget`` candidate maps raises
    :class:`SearchBudgetExceeded`.
    """
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {P.ambient_dim} and {Q.ambient_dim}")
    require_full_dimensional(P)
    require_full_dimensional(Q)
    if invariant_mismatch(P, Q) is not None:
        return False
    m = P.ambient_dim
    linear = _is_reflexive_quick(P) and _is_reflexive_quick(Q)
    sp, sq = vertex_signatures(P), vertex_signatures(Q)
    by_sig: dict[tuple, list[int]] = {}
    for j, s in enumerate(sq):
        by_sig.setdefault(s, []).append(j)
    # basis vertices of P, rarest signature classes first
    order = sorted(range(P.n_vertices), key=lambda i: (len(by_sig[sp[i]]), i))
    if linear:
        rows = [P.vertices[i] for i in order]
        basis = [order[i] for i in independent_rows(rows)]
        anchor = None
    else:
        anchor = order[0]
        v0 = P.vertices[anchor]
        rest = [i for i in order if i != anchor]
        rows = [tuple(a - b for a, b in zip(P.vertices[i], v0)) for i in rest]
        basis = [rest[i] for i in independent_rows(rows)]
    shift = (0,) * m if anchor is None else P.vertices[anchor]
    B = [tuple(a - b for a, b in zip(P.vertices[i], shift)) for i in basis]
    dB = det(B)
    adjB = [[int(x * dB) for x in row] for row in inverse(B)]
    target = set(Q.vertices)
    slots = ([anchor] if anchor is not None else []) + basis
    choices = [by_sig[sp[i]] for i in slots]
    tried = 0
    for combo in itertools.product(*choices):
        if len(set(combo)) != len(combo):
            continue
        tried += 1
        if tried > budget:
            raise SearchBudgetExceeded(f"more than {budget} candidate maps", budget)
        if anchor is not None:
            w0 = Q.vertices[combo[0]]
            imgs = combo[1:]
        else:
            w0 = (0,) * m
            imgs = combo
        C = [tuple(a - b for a, b in zip(Q.vertices[j], w0)) for j in imgs]
        num = [[sum(adjB[r][k] * C[k][c] for k in range(m)) for c in range(m)] for r in range(m)]
        if any(x % dB for row in num for x in row):
            continue
        U = [[x // dB for x in row] for row in num]
        if abs(det(U)) != 1:
            continue
        t = tuple(w0[c] - sum(shift[r] * U[r][c] for r in range(m)) for c in range(m))
        image = {
            tuple(sum(v[r] * U[r][c] for r in range(m)) + t[c] for c in range(m)) for v in P.vertices
        }
        if image == target:
            log.debug("unimodular map found after %d candidates", tried)
            return True
    return False


def normalized_volume_simplex(vertices: Sequence[Vector]) -> int:
    v0 = vertices[0]
    return abs(det([tuple(a - b for a, b in zip(v, v0)) for v in vertices[1:]]))
