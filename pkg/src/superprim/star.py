"""Atypicality sets S_nu and the star action of W on generic weights.

For gl with the distinguished Borel the star action is the dot action.
For osp every simple reflection other than the one for 2*delta_n also
acts by the dot action; that last one picks up a correction s(gamma)
when a unique odd root gamma pairs to zero with nu + rho and meets
delta_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousAtypicalRoot, NonGenericWeight, WordDependence
from .predicates import is_operationally_generic
from .rootsystem import Root, RootSystem, Weight, pairing
from .weyl import WeylElement, WeylGroup, act, dot_act


@dataclass(frozen=True)
class OddSupport:
    roots: tuple[Root, ...]


def odd_support(rs: RootSystem, nu: Weight) -> OddSupport:
    """Positive odd roots pairing nontrivially with nu + rho."""
    rs.conform(nu)
    shifted = nu + rs.rho
    return OddSupport(
        tuple(g for g in rs.pos_odd if pairing(rs, shifted, g.vector) != 0)
    )


def _require_generic(rs: RootSystem, nu: Weight):
    if not is_operationally_generic(rs, nu):
        raise NonGenericWeight(
            "weight is not generic (some even wall is within the odd-root margin)"
        )


def _is_last_delta_reflection(rs: RootSystem, group: WeylGroup, index: int) -> bool:
    root = group.simple_root(index)
    return root.vector == rs.delta_unit(rs.n).scale(2)


def star_simple(
    rs: RootSystem, group: WeylGroup, index: int, nu: Weight, check: bool = True
) -> Weight:
    """Apply one simple reflection through the star action."""
    if check:
        _require_generic(rs, nu)
    s = group.simple(index)
    if rs.family == "gl" or not _is_last_delta_reflection(rs, group, index):
        return dot_act(rs, s, nu)
    shifted = nu + rs.rho
    delta_n = rs.delta_unit(rs.n)
    hits = [
        g.vector
        for g in rs.pos_odd
        if pairing(rs, shifted, g.vector) == 0
        and pairing(rs, g.vector, delta_n) != 0
    ]
    if not hits:
        return dot_act(rs, s, nu)
    if len(hits) > 1:
        raise AmbiguousAtypicalRoot(
            "multiple atypical odd roots meet delta_n; input escaped the "
            "generic regime"
        )
    return dot_act(rs, s, nu) + act(rs, s, hits[0])


def star_apply(
    rs: RootSystem,
    group: WeylGroup,
    w: WeylElement,
    nu: Weight,
    check: bool = True,
    verify_words: bool = False,
) -> Weight:
    """Evaluate w through star_simple along a reduced word of w."""
    if check:
        _require_generic(rs, nu)

    def evaluate(word):
        cur = nu
        for i in reversed(word):
            cur = star_simple(rs, group, i, cur, check=False)
        return cur

    result = evaluate(group.reduced_word(w))
    if verify_words:
        for word in group.all_reduced_words(w):
            if evaluate(word) != result:
                raise WordDependence(
                    "star action differs between reduced words of the same element"
                )
    return result


def star_orbit(
    rs: RootSystem, group: WeylGroup, nu: Weight, check: bool = True
) -> dict[WeylElement, Weight]:
    """The full table w -> w * nu over the Weyl group."""
    if check:
        _require_generic(rs, nu)
    return {
        w: star_apply(rs, group, w, nu, check=False) for w in group.elements()
    }
