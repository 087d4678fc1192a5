"""Ehrhart polynomials by exact interpolation, volumes, and the subset-sum volume formula."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatch, NoCommonLinearExtension
from .polytope import LatticePolytope, count_lattice_points, require_full_dimensional
from .posets import Poset, adjoin_bottom, delta_W, has_common_linear_extension, linear_extension_count


@dataclass(frozen=True)
class EhrhartPolynomial:
    """``sum(coeffs[k] * n**k)`` with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __call__(self, n: int) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * n + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def to_json(self) -> list[dict]:
        return [{"num": c.numerator, "den": c.denominator} for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "EhrhartPolynomial":
        return cls(tuple(Fraction(c["num"], c["den"]) for c in data))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else "n" if k == 1 else f"n^{k}"
                if not mono:
                    terms.append(f"{c}")
                else:
                    terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


def interpolate(values: Sequence[int]) -> tuple[Fraction, ...]:
    """Coefficients of the unique polynomial of degree < len(values) through (n, values[n])."""
    k = len(values)
    coeffs = [Fraction(0)] * k
    for i, y in enumerate(values):
        if not y:
            continue
        # Lagrange basis polynomial for node i, built by multiplying (n - j)
        basis = [Fraction(1)]
        denom = 1
        for j in range(k):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= j * basis[t + 1]
            denom *= i - j
        for t in range(k):
            coeffs[t] += Fraction(y, denom) * basis[t]
    return tuple(coeffs)


def ehrhart_counts(P: LatticePolytope, n_max: int | None = None) -> list[int]:
    require_full_dimensional(P)
    top = P.dim if n_max is None else n_max
    return [count_lattice_points(P, n) for n in range(top + 1)]


@lru_cache(maxsize=8192)
def ehrhart_polynomial(P: LatticePolytope) -> EhrhartPolynomial:
    return EhrhartPolynomial(interpolate(ehrhart_counts(P)))


def volume(P: LatticePolytope) -> Fraction:
    return ehrhart_polynomial(P).leading


def normalized_volume(P: LatticePolytope) -> int:
    v = volume(P) * math.factorial(P.dim)
    assert v.denominator == 1
    return int(v)


def volume_omega_formula(P: Poset, Q: Poset, force: bool = False) -> Fraction:
    """Sum of ``e(Delta_W(P', Q'))`` over all ``W`` in ``[d + 1]``, divided by ``(d + 1)!``.

    ``P'`` and ``Q'`` are ``P`` and ``Q`` with a new bottom element.  The value
    is the common volume of the three omega polytopes of ``(P, Q)`` when ``P``
    and ``Q`` have a common linear extension; ``force`` skips that check.
    """
    if P.d != Q.d:
        raise DimensionMismatch(f"|P| = {P.d} but |Q| = {Q.d}")
    if not force and not has_common_linear_extension(P, Q):
        raise NoCommonLinearExtension("P and Q have no common linear extension")
    Pb, Qb = adjoin_bottom(P), adjoin_bottom(Q)
    n = P.d + 1
    total = 0
    for k in range(n + 1):
        for W in itertools.combinations(range(1, n + 1), k):
            total += linear_extension_count(delta_W(Pb, Qb, W))
    return Fraction(total, math.factorial(n))


def ehrhart_equal(polytopes: Sequence[LatticePolytope]) -> tuple[bool, list[EhrhartPolynomial]]:
    """Whether all Ehrhart polynomials coincide, with the list of polynomials."""
    if not polytopes:
        return True, []
    dims = {(P.ambient_dim, P.dim) for P in polytopes}
    if len(dims) != 1:
        raise DimensionMismatch(f"polytopes of differing dimensions: {sorted(dims)}")
    polys = [ehrhart_polynomial(P) for P in polytopes]
    return all(p == polys[0] for p in polys), polys
