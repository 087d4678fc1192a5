"""Order and chain polytopes of posets and the two symmetric hull constructions.

The order polytope uses the convention ``x_i >= x_j`` whenever ``p_i <= p_j``,
so its vertices are the indicator vectors of poset ideals.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .polytope import LatticePolytope, require_full_dimensional
from .posets import Poset, adjoin_bottom, antichain_masks


def indicator(mask: int, d: int) -> tuple[int, ...]:
    return tuple(mask >> i & 1 for i in range(d))


def order_polytope(P: Poset) -> LatticePolytope:
    return LatticePolytope([indicator(m, P.d) for m in P.ideal_masks], P.d)


def chain_polytope(P: Poset) -> LatticePolytope:
    return LatticePolytope([indicator(m, P.d) for m in antichain_masks(P)], P.d)


def _check_pair(P: LatticePolytope, Q: LatticePolytope) -> None:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {P.ambient_dim} and {Q.ambient_dim}")
    require_full_dimensional(P)
    require_full_dimensional(Q)


def gamma(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    """``conv(P | -Q)``."""
    _check_pair(P, Q)
    pts = list(P.vertices) + [tuple(-x for x in v) for v in Q.vertices]
    return LatticePolytope(pts, P.ambient_dim)


def omega(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    """``conv(P x {1} | -Q x {-1})`` one dimension up."""
    _check_pair(P, Q)
    pts = [v + (1,) for v in P.vertices] + [tuple(-x for x in v) + (-1,) for v in Q.vertices]
    return LatticePolytope(pts, P.ambient_dim + 1)


KINDS = ("oo", "oc", "cc")


def _poly(P: Poset, kind: str) -> LatticePolytope:
    return order_polytope(P) if kind == "o" else chain_polytope(P)


def omega_of_posets(P: Poset, Q: Poset, kind: str) -> LatticePolytope:
    """``omega`` of the order/chain polytopes selected by ``kind`` (e.g. ``"oc"``)."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    return omega(_poly(P, kind[0]), _poly(Q, kind[1]))


def gamma_of_posets(P: Poset, Q: Poset, kind: str) -> LatticePolytope:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    return gamma(_poly(P, kind[0]), _poly(Q, kind[1]))


def six_polytopes(P: Poset, Q: Poset) -> dict[str, LatticePolytope]:
    """The three omegas of ``(P, Q)`` and the three gammas of the bottom-adjoined pair."""
    Pb, Qb = adjoin_bottom(P), adjoin_bottom(Q)
    out = {f"omega-{k}": omega_of_posets(P, Q, k) for k in KINDS}
    out.update({f"gamma-{k}'": gamma_of_posets(Pb, Qb, k) for k in KINDS})
    return out
