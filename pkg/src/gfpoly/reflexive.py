"""Reflexivity and normality certificates, and the census of reflexive polygons."""

from __future__ import annotations

import functools
import logging
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .ehrhart import EhrhartPolynomial, ehrhart_polynomial
from .errors import BudgetExceeded
from .io import AnalysisReport
from .polytope import (
    LatticePolytope,
    contains,
    count_interior_lattice_points,
    count_lattice_points,
    f_vector,
    h_representation,
    lattice_point_array,
    require_full_dimensional,
    unimodular_equivalent,
)

log = logging.getLogger(__name__)

DEFAULT_NORMALITY_BUDGET = 3 * 10**8


def is_reflexive(P: LatticePolytope) -> bool:
    """Origin is the only interior lattice point and every facet sits at offset 1."""
    H = h_representation(P)
    if any(f.offset != 1 for f in H.facets):
        return False
    return count_interior_lattice_points(P, 1) == 1


def dual_polytope(P: LatticePolytope) -> LatticePolytope:
    """Hull of the facet normals; for reflexive ``P`` this is the (integral) dual."""
    H = h_representation(P)
    if any(f.offset != 1 for f in H.facets):
        raise ValueError("dual is integral only when all facets have offset 1")
    return LatticePolytope([f.normal for f in H.facets], P.ambient_dim)


# -- normality -------------------------------------------------------------


@dataclass
class NormalityCertificate:
    """Outcome of the level-by-level decomposition check.

    ``verdict`` is ``True`` when every level up to ``level_bound`` was checked,
    ``False`` with a witness, and ``None`` when the check stopped early without
    a witness.
    """

    verdict: bool | None
    checked_levels: list[int]
    level_bound: int
    witness: tuple[int, ...] | None = None
    witness_level: int | None = None
    level_counts: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "checked_levels": self.checked_levels,
            "level_bound": self.level_bound,
            "witness": None if self.witness is None else list(self.witness),
            "witness_level": self.witness_level,
        }


def _key_weights(m: int, radius: int) -> np.ndarray | None:
    base = 2 * radius + 1
    if base ** m >= 1 << 62:
        return None
    return base ** np.arange(m, dtype=np.int64)


def is_normal(
    P: LatticePolytope,
    max_level: int | None = None,
    budget: int = DEFAULT_NORMALITY_BUDGET,
) -> NormalityCertificate:
    """Check that every lattice point of ``kP`` is a sum of ``k`` lattice points of ``P``.

    Levels ``k = 2 .. max(2, m - 1)`` suffice (generators of the cone over a
    lattice polytope of dimension ``m`` live in degree at most ``m - 1``).  The
    ``k``-fold sumset is built incrementally and compared against the exact
    count of ``kP``; on a shortfall the lexicographically first missing point
    is returned as witness.  ``max_level`` stops earlier; ``budget`` caps the
    number of pairwise sums formed at one level.
    """
    require_full_dimensional(P)
    m = P.dim
    bound = max(2, m - 1)
    top = bound if max_level is None else min(max_level, bound)
    base = lattice_point_array(P, 1)
    radius = top * max(1, int(np.abs(P.vertex_array).max()))
    weights = _key_weights(m, radius)
    cert = NormalityCertificate(None, [], bound, level_counts={1: base.shape[0]})

    def keys(X: np.ndarray) -> np.ndarray:
        return X @ weights

    if weights is not None:
        base_k = keys(base)
        current = base_k
    else:
        current = base
    for k in range(2, top + 1):
        cells = current.shape[0] * base.shape[0]
        if cells > budget:
            raise BudgetExceeded(f"level {k} needs {cells} sums, budget {budget}", budget)
        if weights is not None:
            current = np.unique((current[:, None] + base_k[None, :]).ravel())
        else:
            current = np.unique((current[:, None, :] + base[None, :, :]).reshape(-1, m), axis=0)
        target = count_lattice_points(P, k)
        cert.checked_levels.append(k)
        cert.level_counts[k] = target
        if current.shape[0] != target:
            pts = lattice_point_array(P, k)
            if weights is not None:
                missing = ~np.isin(keys(pts), current)
            else:
                have = {tuple(r) for r in current.tolist()}
                missing = np.array([tuple(r) not in have for r in pts.tolist()])
            z = pts[np.argmax(missing)]
            cert.verdict = False
            cert.witness = tuple(int(x) for x in z)
            cert.witness_level = k
            log.info("normality witness at level %d: %s", k, cert.witness)
            return cert
    if top == bound:
        cert.verdict = True
    return cert


def lattice_points_by_box(P: LatticePolytope, n: int = 1, chunk: int = 1 << 16) -> set[tuple[int, ...]]:
    """Brute-force ``nP`` lattice points: scan the bounding box against every facet."""
    H = h_representation(P)
    A, b = H.normals, n * H.offsets
    V = P.vertex_array
    lo, hi = n * V.min(axis=0), n * V.max(axis=0)
    sizes = hi - lo + 1
    total = int(np.prod(sizes))
    out = set()
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        X = np.empty((idx.shape[0], P.ambient_dim), dtype=np.int64)
        rest = idx
        for c in range(P.ambient_dim):
            X[:, c] = lo[c] + rest % sizes[c]
            rest = rest // sizes[c]
        ok = (X @ A.T <= b[None, :]).all(axis=1)
        out.update(map(tuple, X[ok].tolist()))
    return out


def verify_witness(P: LatticePolytope, z: Sequence[int], k: int) -> bool:
    """Re-check a non-normality witness without the sumset machinery.

    True iff ``z`` lies in ``kP`` and is not a sum of ``k`` lattice points of
    ``P``; the lattice points of ``P`` come from a plain box scan.
    """
    z = tuple(int(x) for x in z)
    if not contains(P, z, k):
        return False
    base = sorted(lattice_points_by_box(P, 1))

    @lru_cache(maxsize=None)
    def decomposable(point: tuple[int, ...], parts: int) -> bool:
        if parts == 0:
            return not any(point)
        if not contains(P, point, parts):
            return False
        return any(decomposable(tuple(x - y for x, y in zip(point, a)), parts - 1) for a in base)

    return not decomposable(z, k)


# -- census of reflexive polygons ------------------------------------------


@dataclass
class ReflexivePolygon:
    polytope: LatticePolytope
    ehrhart: EhrhartPolynomial
    normal: bool
    boundary_points: int


def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _det(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def one_point_polygons(radius: int) -> list[LatticePolytope]:
    """All lattice polygons in ``[-radius, radius]^2`` whose only interior lattice point is 0.

    Vertices are walked counterclockwise from the one of smallest angle.  Each
    fan triangle ``(0, v, w)`` over an edge must hold no lattice point besides
    those on the edge ``vw``: with primitive ``v`` and ``w`` that is Pick's
    condition ``det(v, w) == gcd(w - v)``.
    """
    pts = [
        (x, y)
        for x in range(-radius, radius + 1)
        for y in range(-radius, radius + 1)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1
    ]
    pts.sort(key=functools.cmp_to_key(_angle_cmp))

    def empty_fan(v, w) -> bool:
        d = _det(v, w)
        return d > 0 and d == math.gcd(w[0] - v[0], w[1] - v[1])

    def left_turn(a, b, c) -> bool:
        return _det((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) > 0

    found = []

    def extend(path: list, last_idx: int) -> None:
        v0, vl = path[0], path[-1]
        if len(path) >= 3 and empty_fan(vl, v0) and left_turn(path[-2], vl, v0) and left_turn(vl, v0, path[1]):
            found.append(LatticePolytope(path))
        for j in range(last_idx + 1, len(pts)):
            w = pts[j]
            if not empty_fan(vl, w):
                continue
            if len(path) >= 2 and not left_turn(path[-2], vl, w):
                continue
            extend(path + [w], j)

    for i, v in enumerate(pts):
        extend([v], i)
    return found


def _reduce_classes(polys: Sequence[LatticePolytope]) -> list[LatticePolytope]:
    # prefer compact representatives
    order = sorted(polys, key=lambda P: (int(np.abs(P.vertex_array).max()), P.n_vertices, P.vertices))
    reps: list[LatticePolytope] = []
    for P in order:
        if not any(unimodular_equivalent(R, P) for R in reps):
            reps.append(P)
    return reps


def classify_reflexive_2d(radius: int = 4, check_closure: bool = True) -> list[ReflexivePolygon]:
    """One representative per unimodular class of reflexive polygons.

    Every polygon with a single interior lattice point inside the box is
    generated, checked to be reflexive, and reduced modulo unimodular
    equivalence.  With ``check_closure`` the reduction is repeated on the box of
    radius ``radius + 1`` and the class count must not change.
    """
    polys = one_point_polygons(radius)
    for P in polys:
        if not is_reflexive(P):
            raise AssertionError(f"one-interior-point polygon {P.vertices} is not reflexive")
    reps = _reduce_classes(polys)
    if check_closure:
        bigger = _reduce_classes(one_point_polygons(radius + 1))
        if len(bigger) != len(reps):
            raise AssertionError(f"class count changes from {len(reps)} to {len(bigger)} when the box grows")
    out = []
    for R in reps:
        e = ehrhart_polynomial(R)
        out.append(ReflexivePolygon(R, e, bool(is_normal(R).verdict), count_lattice_points(R, 1) - 1))
    out.sort(key=lambda r: (r.boundary_points, r.polytope.n_vertices, r.polytope.vertices))
    return out


def census_histogram(census: Sequence[ReflexivePolygon]) -> dict[int, int]:
    hist = {b: 0 for b in range(3, 10)}
    for r in census:
        hist[r.boundary_points] = hist.get(r.boundary_points, 0) + 1
    return hist


# -- report ----------------------------------------------------------------


def reflexivity_report(
    P: LatticePolytope,
    normal: bool = True,
    normal_max_level: int | None = None,
    ehrhart: bool = True,
    faces: bool = True,
) -> AnalysisReport:
    require_full_dimensional(P)
    H = h_representation(P)
    rep = AnalysisReport(
        vertices=[list(v) for v in P.vertices],
        facets=[{"normal": list(f.normal), "offset": f.offset} for f in H.facets],
    )
    t = time.perf_counter()
    rep.reflexive = is_reflexive(P)
    rep.timings["reflexive"] = time.perf_counter() - t
    if normal:
        t = time.perf_counter()
        rep.normal = is_normal(P, max_level=normal_max_level).to_json()
        rep.timings["normal"] = time.perf_counter() - t
    if faces:
        t = time.perf_counter()
        rep.f_vector = list(f_vector(P).counts)
        rep.timings["f_vector"] = time.perf_counter() - t
    if ehrhart:
        t = time.perf_counter()
        e = ehrhart_polynomial(P)
        rep.ehrhart = list(e.coeffs)
        rep.volume = e.leading
        rep.normalized_volume = int(e.leading * math.factorial(P.dim))
        rep.timings["ehrhart"] = time.perf_counter() - t
    return rep
