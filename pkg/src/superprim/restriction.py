"""Generic restriction to the even part: the 2^|S_nu| decomposition, the
dominant restriction set R_mu, and even Weyl dimensions for reports."""

from __future__ import annotations

from fractions import Fraction

from .errors import NonGenericWeight, NonIntegralWeight, NotCircleDominant
from .predicates import classify, is_operationally_generic
from .rootsystem import RootSystem, Weight, coroot, pairing
from .star import odd_support

WeightMultiset = dict[Weight, int]


def penkov_restrict(rs: RootSystem, nu: Weight, strict: bool = False) -> WeightMultiset:
    """Even highest weights of res L(nu): {nu - |I| : I subset of S_nu}.

    Colliding subsets are kept as multiplicity; for generic nu there are
    none, and `strict` turns a collision into an error.
    """
    if not is_operationally_generic(rs, nu):
        raise NonGenericWeight("restriction formula requires a generic weight")
    support = odd_support(rs, nu).roots
    out: WeightMultiset = {}
    subtotals = [rs.zero()]
    for g in support:
        subtotals = subtotals + [t + g.vector for t in subtotals]
    for total in subtotals:
        w = nu - total
        out[w] = out.get(w, 0) + 1
    if strict and any(c > 1 for c in out.values()):
        raise NonGenericWeight("colliding restriction summands on a generic weight")
    return out


def is_circle_regular(rs: RootSystem, kappa: Weight) -> bool:
    shifted = kappa + rs.rho_even
    return all(pairing(rs, shifted, coroot(rs, r)) != 0 for r in rs.pos_even)


def is_circle_dominant(rs: RootSystem, kappa: Weight) -> bool:
    shifted = kappa + rs.rho_even
    return all(pairing(rs, shifted, coroot(rs, r)) >= 0 for r in rs.pos_even)


def dominant_restriction_set(rs: RootSystem, mu: Weight) -> WeightMultiset:
    """R_mu: the restriction summands of a dominant generic weight.

    Returned with multiplicities: for osp with n >= 2, distinct subsets
    of S_mu can share a root sum even for generic mu, and the Kronecker
    delta form of the restriction identity needs those counts.  Every
    member must be circle-regular and circle-dominant, which is what
    makes the normal form res L(w * mu) = sum of L_0(w o kappa) work.
    """
    cls = classify(rs, mu)
    if not is_operationally_generic(rs, mu):
        raise NonGenericWeight("R_mu requires a generic weight")
    if not cls.dominant:
        raise NotCircleDominant("R_mu requires a dominant weight")
    members = penkov_restrict(rs, mu)
    for kappa in members:
        if not is_circle_regular(rs, kappa):
            raise NotCircleDominant(
                "restriction summand is not circle-regular; mu is outside "
                "the generic dominant regime"
            )
        if not is_circle_dominant(rs, kappa):
            raise NotCircleDominant(
                "restriction summand is not circle-dominant; mu is outside "
                "the generic dominant regime"
            )
    return members


def weyl_dim_even(rs: RootSystem, kappa: Weight) -> int:
    """Weyl dimension formula for the even part at highest weight kappa."""
    shifted = kappa + rs.rho_even
    num = Fraction(1)
    for r in rs.pos_even:
        av = coroot(rs, r)
        p = pairing(rs, shifted, av)
        if p.denominator != 1:
            raise NonIntegralWeight("kappa is not integral for the even part")
        if p <= 0:
            raise NotCircleDominant("kappa is not circle-dominant")
        num *= Fraction(p, pairing(rs, rs.rho_even, av))
    assert num.denominator == 1 and num > 0
    return int(num)
