"""Toric rings of the Omega polytopes and their quadratic binomial Groebner bases.

Variables: one ``X(I)`` per ideal of ``P``, one ``Y(J)`` per ideal of ``Q`` and a
single ``Z`` for the origin.  Chain-type variables (antichains ``max(I)``) are
indexed by the ideal they generate, so all three families share one variable
set and differ only in the map ``pi`` into the semigroup ring.

A monomial is a tuple of exponents indexed by the variable order, smallest
variable first: ``Z``, then the ``Y`` block, then the ``X`` block, each block
in canonical ideal order.  The monomial order is graded reverse
lexicographic: at equal degree, the monomial with the smaller exponent at the
smallest differing variable is the larger one.

Every check here is a degree-bounded verification, not a proof for all degrees.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .constructions import chain_polytope, omega, order_polytope
from .errors import BudgetExceeded, DimensionMismatch, NoCommonLinearExtension
from .intlinalg import spans_lattice
from .polytope import LatticePolytope, count_lattice_points
from .posets import (
    Poset,
    has_common_linear_extension,
    ideals,
    max_elements,
    members_of,
    star_mask,
)

log = logging.getLogger(__name__)

FAMILIES = ("oo", "oc", "cc")
Monomial = tuple  # tuple[int, ...] of exponents in variable order


@dataclass(frozen=True)
class ToricVariable:
    kind: str  # "X", "Y" or "Z"
    ideal: frozenset | None = None

    def __str__(self) -> str:
        if self.kind == "Z":
            return "Z"
        return f"{self.kind}{{{','.join(map(str, sorted(self.ideal)))}}}"


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order on exponent tuples.

    ``variables`` is listed from the smallest to the largest variable.
    """

    variables: tuple[ToricVariable, ...]

    @staticmethod
    def key(u: Monomial) -> tuple:
        return (sum(u), tuple(-e for e in u))

    def greater(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) > self.key(v)

    def compare(self, u: Monomial, v: Monomial) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)


@dataclass(frozen=True)
class Binomial:
    first: Monomial
    second: Monomial
    kind: str = ""

    def __post_init__(self):
        if self.first == self.second:
            raise ValueError("binomial with equal monomials is zero")


@dataclass
class BinomialSystem:
    family: str
    P: Poset
    Q: Poset
    variables: tuple[ToricVariable, ...]
    pi: np.ndarray  # (n_vars, d + 2): semigroup exponent of each variable, s-degree last
    generators: list[Binomial]
    order: MonomialOrder

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    def pi_eval(self, u: Monomial) -> tuple[int, ...]:
        return tuple(int(x) for x in np.asarray(u, dtype=np.int64) @ self.pi)

    def format_monomial(self, u: Monomial) -> str:
        parts = []
        for v, e in zip(self.variables, u):
            if e:
                parts.append(str(v) if e == 1 else f"{v}^{e}")
        return "*".join(parts) or "1"

    def format(self, b: Binomial) -> str:
        return f"{self.format_monomial(b.first)} - {self.format_monomial(b.second)}"

    def without(self, kind: str) -> "BinomialSystem":
        """Copy with every generator of the given kind dropped (for negative tests)."""
        gens = [g for g in self.generators if g.kind != kind]
        return BinomialSystem(self.family, self.P, self.Q, self.variables, self.pi, gens, self.order)


def _family(family: str) -> str:
    f = family.lower()
    if f not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return f


def toric_presentation(family: str, P: Poset, Q: Poset):
    """Variables (smallest first) and the matrix of their semigroup exponents.

    ``X(I) -> (rho(I), 1; 1)`` and ``Y(J) -> (-rho(J), -1; 1)``, with ``rho``
    replaced by ``rho(max(.))`` on the chain side(s) of the family.
    """
    family = _family(family)
    if P.d != Q.d:
        raise DimensionMismatch(f"posets have {P.d} and {Q.d} elements")
    d = P.d
    chain_x = family == "cc"
    chain_y = family in ("oc", "cc")
    variables = [ToricVariable("Z")]
    rows = [[0] * (d + 1) + [1]]
    for J in ideals(Q):
        variables.append(ToricVariable("Y", J))
        S = max_elements(Q, J) if chain_y else J
        rows.append([-int(i + 1 in S) for i in range(d)] + [-1, 1])
    for I in ideals(P):
        variables.append(ToricVariable("X", I))
        S = max_elements(P, I) if chain_x else I
        rows.append([int(i + 1 in S) for i in range(d)] + [1, 1])
    return tuple(variables), np.array(rows, dtype=np.int64)


def omega_for(family: str, P: Poset, Q: Poset) -> LatticePolytope:
    family = _family(family)
    A = chain_polytope(P) if family == "cc" else order_polytope(P)
    B = order_polytope(Q) if family == "oo" else chain_polytope(Q)
    return omega(A, B)


def generate_family(family: str, P: Poset, Q: Poset) -> BinomialSystem:
    """The quadratic binomials of the given family, first monomial leading.

    * ``x-lattice``: ``X(I) X(I') - X(I u I') X(I ^ I')`` for incomparable ideals,
      where ``^`` is intersection on an order side and ``*`` on a chain side;
    * ``y-lattice``: the same on the ``Q`` side;
    * ``mixed``: ``X(I) Y(J) - X(I') Y(J')`` for a shared label ``i`` with
      ``p_i`` maximal in ``I`` and ``q_i`` maximal in ``J``, dropping ``p_i``
      (resp. ``q_i``) from the ideal or from its antichain of maximal elements;
    * ``origin``: ``X({}) Y({}) - Z^2``.
    """
    family = _family(family)
    variables, pi = toric_presentation(family, P, Q)
    index = {v: k for k, v in enumerate(variables)}
    nv = len(variables)
    chain_x = family == "cc"
    chain_y = family in ("oc", "cc")

    def mono(*vs: ToricVariable) -> Monomial:
        e = [0] * nv
        for v in vs:
            e[index[v]] += 1
        return tuple(e)

    def X(mask: int) -> ToricVariable:
        return ToricVariable("X", members_of(mask))

    def Y(mask: int) -> ToricVariable:
        return ToricVariable("Y", members_of(mask))

    gens: list[Binomial] = []

    def lattice_side(R: Poset, var, chain: bool, kind: str) -> None:
        masks = R.ideal_masks
        for a, b in itertools.combinations(masks, 2):
            if a & b in (a, b):
                continue
            meet = star_mask(R, a, b) if chain else a & b
            gens.append(Binomial(mono(var(a), var(b)), mono(var(a | b), var(meet)), kind))

    lattice_side(P, X, chain_x, "x-lattice")
    lattice_side(Q, Y, chain_y, "y-lattice")

    def drop(R: Poset, mask: int, bit: int, chain: bool) -> int:
        if chain:
            return R.downset_mask(R.max_mask(mask) & ~bit)
        return mask & ~bit

    for a in P.ideal_masks:
        ma = P.max_mask(a)
        for b in Q.ideal_masks:
            common = ma & Q.max_mask(b)
            while common:
                bit = common & -common
                common ^= bit
                gens.append(Binomial(
                    mono(X(a), Y(b)),
                    mono(X(drop(P, a, bit, chain_x)), Y(drop(Q, b, bit, chain_y))),
                    "mixed",
                ))
    gens.append(Binomial(mono(X(0), Y(0)), mono(ToricVariable("Z"), ToricVariable("Z")), "origin"))

    for g in gens:
        u, v = np.asarray(g.first) @ pi, np.asarray(g.second) @ pi
        if not np.array_equal(u, v):
            raise AssertionError(f"generator of kind {g.kind} is not pi-balanced")
    return BinomialSystem(family, P, Q, variables, pi, gens, MonomialOrder(variables))


# -- Buchberger check ------------------------------------------------------


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def is_oriented(S: BinomialSystem) -> bool:
    """Whether each generator's first monomial is its leading monomial."""
    return all(S.order.greater(g.first, g.second) for g in S.generators)


def reduces_to_zero(u: Monomial, v: Monomial, leads: Sequence[Monomial], tails: Sequence[Monomial]) -> bool:
    """Top-reduce the binomial ``u - v`` by the oriented pairs ``(leads, tails)``.

    Binomials stay binomials under reduction (coefficients are +-1); the
    result is zero exactly when the two terms meet.
    """
    key = MonomialOrder.key
    lead_arr = np.asarray(leads, dtype=np.int64)
    while u != v:
        if key(v) > key(u):
            u, v = v, u
        hits = np.flatnonzero((lead_arr <= np.asarray(u)).all(axis=1))
        if not hits.size:
            return False
        k = int(hits[0])
        u = _add(_sub(u, leads[k]), tails[k])
    return True


def spair_reduce_verify(S: BinomialSystem, max_pairs: int = 10**6) -> bool:
    """Buchberger's criterion for the generator list of ``S``.

    Returns false when some generator's first monomial is not its leading
    monomial (the list is then not presented as a Groebner basis with the
    declared initial terms) or when an S-pair has a nonzero remainder.
    Pairs with coprime leading monomials are skipped; the others are
    processed lowest ``lcm`` degree first.
    """
    if not is_oriented(S):
        return False
    leads = [g.first for g in S.generators]
    tails = [g.second for g in S.generators]
    pairs = []
    for i, j in itertools.combinations(range(len(leads)), 2):
        if _coprime(leads[i], leads[j]):
            continue
        L = _lcm(leads[i], leads[j])
        pairs.append((sum(L), i, j, L))
    if len(pairs) > max_pairs:
        raise BudgetExceeded(f"{len(pairs)} S-pairs exceed the budget {max_pairs}", max_pairs)
    pairs.sort(key=lambda p: p[:3])
    for _, i, j, L in pairs:
        u = _add(_sub(L, leads[i]), tails[i])
        v = _add(_sub(L, leads[j]), tails[j])
        if not reduces_to_zero(u, v, leads, tails):
            log.debug("S-pair %d,%d does not reduce to zero", i, j)
            return False
    return True


# -- initial ideal and Hilbert function ----------------------------------


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    ms = sorted(set(monomials), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in ms:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def initial_ideal(S: BinomialSystem) -> list[Monomial]:
    """Minimal generators of the ideal of first monomials."""
    return minimalize(g.first for g in S.generators)


def is_squarefree(monomials: Iterable[Monomial]) -> bool:
    return all(e <= 1 for m in monomials for e in m)


def monomials_of_degree(n_vars: int, n: int) -> np.ndarray:
    """All exponent vectors of total degree ``n`` as an ``(N, n_vars)`` array."""
    combos = list(itertools.combinations_with_replacement(range(n_vars), n))
    E = np.zeros((len(combos), n_vars), dtype=np.int64)
    if n:
        idx = np.array(combos, dtype=np.int64)
        rows = np.repeat(np.arange(len(combos)), n)
        np.add.at(E, (rows, idx.ravel()), 1)
    return E


def standard_monomials(S: BinomialSystem, n: int, initial: Sequence[Monomial] | None = None) -> np.ndarray:
    init = initial_ideal(S) if initial is None else initial
    E = monomials_of_degree(S.n_vars, n)
    bad = np.zeros(E.shape[0], dtype=bool)
    for m in init:
        bad |= (E >= np.asarray(m)[None, :]).all(axis=1)
    return E[~bad]


def _face_counts(n_vars: int, nonfaces: Sequence[int]) -> list[int]:
    """Face counts by size of the complex whose minimal nonfaces are the given masks."""
    counts = [0] * (n_vars + 1)

    def grow(face: int, size: int, start: int) -> None:
        counts[size] += 1
        for k in range(start, n_vars):
            f = face | 1 << k
            if any(nf & f == nf for nf in nonfaces):
                continue
            grow(f, size + 1, k + 1)

    grow(0, 0, 0)
    return counts


def standard_monomial_count(S: BinomialSystem, n: int, method: str = "enumerate") -> int:
    """Number of degree-``n`` monomials outside the initial ideal.

    ``enumerate`` lists monomials directly.  ``faces`` needs a squarefree
    initial ideal and counts ``sum_F C(n - 1, |F| - 1)`` over faces ``F`` of the
    associated simplicial complex.
    """
    if n == 0:
        return 1
    init = initial_ideal(S)
    if method == "enumerate":
        return int(standard_monomials(S, n, init).shape[0])
    if method == "faces":
        if not is_squarefree(init):
            raise ValueError("face counting needs a squarefree initial ideal")
        nonfaces = [sum(1 << k for k, e in enumerate(m) if e) for m in init]
        counts = _face_counts(S.n_vars, nonfaces)
        return sum(c * math.comb(n - 1, k - 1) for k, c in enumerate(counts) if k >= 1)
    raise ValueError(f"unknown method {method!r}")


def lattice_spanning(S: BinomialSystem) -> bool:
    """Degree-one semigroup points (origin included) generate the full lattice ``Z^{d+1}``."""
    pts = S.pi[:, :-1]
    return spans_lattice([tuple(int(x) for x in r) for r in pts - pts[0]], S.P.d + 1)


def hilbert_profile(S: BinomialSystem, n_max: int = 4) -> dict[int, tuple[int, int]]:
    """Per degree: (standard monomial count, lattice points of the dilated Omega)."""
    W = omega_for(S.family, S.P, S.Q)
    return {n: (standard_monomial_count(S, n), count_lattice_points(W, n)) for n in range(n_max + 1)}


def hilbert_match(S: BinomialSystem, n_max: int = 4) -> bool:
    if not lattice_spanning(S):
        return False
    return all(a == b for a, b in hilbert_profile(S, n_max).values())


def injectivity_profile(S: BinomialSystem, n_max: int = 4) -> dict[int, bool]:
    init = initial_ideal(S)
    out = {}
    for n in range(n_max + 1):
        E = standard_monomials(S, n, init)
        images = E @ S.pi
        out[n] = np.unique(images, axis=0).shape[0] == E.shape[0]
    return out


def injectivity_check(S: BinomialSystem, n_max: int = 4) -> bool:
    """``pi`` separates the standard monomials of every degree up to ``n_max``."""
    return all(injectivity_profile(S, n_max).values())


def semigroup_count(S: BinomialSystem, n: int) -> int:
    """Distinct ``pi``-images of all degree-``n`` monomials."""
    E = monomials_of_degree(S.n_vars, n)
    return int(np.unique(E @ S.pi, axis=0).shape[0])


# -- reports ---------------------------------------------------------------


@dataclass
class GroebnerReport:
    family: str
    variable_count: int
    generator_count: int
    spair_ok: bool
    squarefree: bool
    lattice_spanning: bool
    hilbert: dict[int, tuple[int, int]]
    injective: dict[int, bool]

    @property
    def hilbert_ok(self) -> bool:
        return self.lattice_spanning and all(a == b for a, b in self.hilbert.values())

    @property
    def passed(self) -> bool:
        return self.spair_ok and self.squarefree and self.hilbert_ok and all(self.injective.values())

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "variable_count": self.variable_count,
            "generator_count": self.generator_count,
            "spair_ok": self.spair_ok,
            "squarefree": self.squarefree,
            "lattice_spanning": self.lattice_spanning,
            "hilbert_match": {
                str(n): {"standard_monomials": a, "lattice_points": b, "match": a == b}
                for n, (a, b) in self.hilbert.items()
            },
            "injectivity": {str(n): ok for n, ok in self.injective.items()},
            "passed": self.passed,
        }


def verify_system(S: BinomialSystem, n_max: int = 4, max_pairs: int = 10**6) -> GroebnerReport:
    return GroebnerReport(
        family=S.family,
        variable_count=S.n_vars,
        generator_count=len(S.generators),
        spair_ok=spair_reduce_verify(S, max_pairs),
        squarefree=is_squarefree(initial_ideal(S)),
        lattice_spanning=lattice_spanning(S),
        hilbert=hilbert_profile(S, n_max),
        injective=injectivity_profile(S, n_max),
    )


@dataclass
class IsomorphismReport:
    counts: dict[str, list[int]]
    oc_cc_equal: bool
    oo_equal: bool | None
    oo_skipped: str | None = None
    phi_maps_initial_ideals: bool = False
    oo_initial_matches: bool | None = None

    @property
    def passed(self) -> bool:
        return self.oc_cc_equal and self.phi_maps_initial_ideals and self.oo_equal is not False

    def to_json(self) -> dict:
        return {
            "counts": self.counts,
            "oc_cc_equal": self.oc_cc_equal,
            "oo_equal": self.oo_equal,
            "oo_skipped": self.oo_skipped,
            "phi_maps_initial_ideals": self.phi_maps_initial_ideals,
            "oo_initial_matches": self.oo_initial_matches,
            "passed": self.passed,
        }


def rings_isomorphism_check(P: Poset, Q: Poset, n_max: int = 4, strict: bool = False) -> IsomorphismReport:
    """Compare the three initial-ideal quotients degree by degree.

    The bijection ``X(I) -> X(max(I))`` is the identity on ideal indices here,
    so it maps the chain-order initial ideal onto the chain-chain one exactly
    when the two minimal generator sets coincide.  The order-order leg needs
    a common linear extension; without one it is skipped (or raises with
    ``strict``).
    """
    systems = {f: generate_family(f, P, Q) for f in ("oc", "cc")}
    oo_skipped = None
    if has_common_linear_extension(P, Q):
        systems["oo"] = generate_family("oo", P, Q)
    elif strict:
        raise NoCommonLinearExtension("P and Q have no common linear extension")
    else:
        oo_skipped = "NoCommonLinearExtension"
    counts = {f: [standard_monomial_count(S, n) for n in range(n_max + 1)] for f, S in systems.items()}
    init = {f: set(initial_ideal(S)) for f, S in systems.items()}
    rep = IsomorphismReport(
        counts=counts,
        oc_cc_equal=counts["oc"] == counts["cc"],
        oo_equal=None if "oo" not in counts else counts["oo"] == counts["oc"],
        oo_skipped=oo_skipped,
        phi_maps_initial_ideals=init["oc"] == init["cc"],
        oo_initial_matches=None if "oo" not in init else init["oo"] == init["oc"],
    )
    return rep
