"""Weight classifications, the height order on h^*, integral subsystems,
the s-free test and the typicalizing shift."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSimpleRoot, SearchExhausted
from .rootsystem import Root, RootSystem, Weight, coroot, pairing
from .weyl import WeylGroup, dot_act


@dataclass(frozen=True)
class WeightClassification:
    integral: bool
    regular: bool
    dominant: bool
    strongly_typical: bool
    generic: bool
    super_dominant: bool


@dataclass(frozen=True)
class IntegralSubsystem:
    roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]


def height_leq(rs: RootSystem, nu: Weight, lam: Weight) -> bool:
    """nu <= lam iff lam - nu is a nonnegative-integer sum of positive roots."""
    rs.conform(nu)
    rs.conform(lam)
    diff = lam - nu
    if diff.is_zero():
        return True
    if any(c.denominator != 1 for c in diff.eps + diff.delta):
        return False  # all positive roots have integer coordinates
    generators = [r.vector for r in rs.pos_even] + [r.vector for r in rs.pos_odd]
    # strictly positive functional on every generator bounds the coefficients
    heights = [_height_functional(rs, g) for g in generators]
    target_height = _height_functional(rs, diff)
    if target_height < 0:
        return False
    order = sorted(range(len(generators)), key=lambda k: -heights[k])
    generators = [generators[k] for k in order]
    heights = [heights[k] for k in order]

    memo: dict[tuple, bool] = {}

    def feasible(rem: Weight, start: int) -> bool:
        if rem.is_zero():
            return True
        key = (rem.eps, rem.delta, start)
        if key in memo:
            return memo[key]
        res = False
        h = _height_functional(rs, rem)
        if h > 0:
            for k in range(start, len(generators)):
                g = generators[k]
                if heights[k] > h:
                    continue
                cmax = int(h // heights[k])
                step = rem
                for c in range(1, cmax + 1):
                    step = step - g
                    if feasible(step, k + 1):
                        res = True
                        break
                if res:
                    break
        memo[key] = res
        return res

    return feasible(diff, 0)


def _height_functional(rs: RootSystem, v: Weight) -> Fraction:
    """A linear form positive on every positive root of the family."""
    total = Fraction(0)
    l, n = rs.eps_dim, rs.delta_dim
    if rs.family == "gl":
        # eps weights above delta weights, both strictly decreasing
        for i, a in enumerate(v.eps):
            total += a * (l + n - i)
        for j, b in enumerate(v.delta):
            total += b * (n - j)
    else:
        # delta weights dominate eps weights; all positive
        for j, b in enumerate(v.delta):
            total += b * (l + 1) * (n - j)
        for i, a in enumerate(v.eps):
            total += a * Fraction(l - i, l + 1) if l else 0
    return total


def integral_subsystem(rs: RootSystem, lam: Weight) -> IntegralSubsystem:
    """Even positive roots pairing integrally with lam, plus their simples."""
    rs.conform(lam)
    roots = tuple(
        r
        for r in rs.pos_even
        if pairing(rs, lam, coroot(rs, r)).denominator == 1
    )
    vectors = {r.vector.eps + r.vector.delta for r in roots}
    simples = []
    for r in roots:
        decomposable = False
        for a in roots:
            b = r.vector - a.vector
            if not b.is_zero() and (b.eps + b.delta) in vectors:
                decomposable = True
                break
        if not decomposable:
            simples.append(r)
    return IntegralSubsystem(roots=roots, simple_roots=tuple(simples))


def genericity_margin(rs: RootSystem, alpha: Root) -> Fraction:
    """Sum of |<gamma, alpha^vee>| over positive odd roots gamma."""
    av = coroot(rs, alpha)
    return sum(
        (abs(pairing(rs, g.vector, av)) for g in rs.pos_odd), Fraction(0)
    )


def is_operationally_generic(rs: RootSystem, lam: Weight) -> bool:
    """Genericity with the half-sum margin the star/restriction formulas need.

    Star corrections and restriction shifts move lam + rho by at most
    half the odd-root pairing sum against any even coroot, so this is
    the wall-clearance actually required; classify() reports the full
    (stricter) margin.
    """
    rs.conform(lam)
    shifted = lam + rs.rho
    return all(
        abs(pairing(rs, shifted, coroot(rs, r)))
        > genericity_margin(rs, r) / 2
        for r in rs.pos_even
    )


def classify(
    rs: RootSystem, lam: Weight, margin: Fraction | None = None
) -> WeightClassification:
    """All six flags of a weight; `margin` overrides the genericity bound."""
    rs.conform(lam)
    shifted = lam + rs.rho
    integral = all(
        pairing(rs, lam, coroot(rs, r)).denominator == 1 for r in rs.pos_even
    )
    regular = all(
        pairing(rs, shifted, coroot(rs, r)) != 0 for r in rs.pos_even
    )
    sub = integral_subsystem(rs, lam)
    dominant = all(
        pairing(rs, shifted, coroot(rs, r)) >= 0 for r in sub.roots
    )
    strongly_typical = all(
        pairing(rs, shifted, g.vector) != 0 for g in rs.pos_odd
    )
    generic = all(
        abs(pairing(rs, shifted, coroot(rs, r)))
        > (genericity_margin(rs, r) if margin is None else margin)
        for r in rs.pos_even
    )
    return WeightClassification(
        integral=integral,
        regular=regular,
        dominant=dominant,
        strongly_typical=strongly_typical,
        generic=generic,
        super_dominant=regular and strongly_typical and dominant,
    )


def classification_witnesses(
    rs: RootSystem, lam: Weight, margin: Fraction | None = None
) -> dict[str, list[dict]]:
    """Violating (root, pairing) pairs for each false flag; used by the CLI."""
    from .rootsystem import format_weight

    shifted = lam + rs.rho
    out: dict[str, list[dict]] = {}

    def record(flag, root_vec, value):
        out.setdefault(flag, []).append(
            {"root": format_weight(root_vec), "pairing": str(value)}
        )

    for r in rs.pos_even:
        av = coroot(rs, r)
        p_lam = pairing(rs, lam, av)
        p_shift = pairing(rs, shifted, av)
        if p_lam.denominator != 1:
            record("integral", r.vector, p_lam)
        if p_shift == 0:
            record("regular", r.vector, p_shift)
        bound = genericity_margin(rs, r) if margin is None else margin
        if abs(p_shift) <= bound:
            record("generic", r.vector, p_shift)
    sub = integral_subsystem(rs, lam)
    for r in sub.roots:
        p = pairing(rs, shifted, coroot(rs, r))
        if p < 0:
            record("dominant", r.vector, p)
    for g in rs.pos_odd:
        p = pairing(rs, shifted, g.vector)
        if p == 0:
            record("strongly_typical", g.vector, p)
    return out


def is_s_free(rs: RootSystem, group: WeylGroup, fb_simple: Root, lam: Weight) -> bool:
    """L(lam) is s-free iff s.lam >= lam in the height order."""
    for root, w in group.simple_reflections():
        if root.vector == fb_simple.vector:
            return height_leq(rs, lam, dot_act(rs, w, lam))
    raise NotSimpleRoot("%r is not a simple even root" % (fb_simple.vector,))


def typicalizing_shift(
    rs: RootSystem, mu: Weight, max_radius: int = 12
) -> Weight:
    """Find integral kappa with mu + kappa regular strongly typical.

    kappa is searched in the region where every even-coroot pairing of
    kappa + rho is at least d, for d = 1, 2, 4, ...; within a fixed d,
    candidates are enumerated by increasing max-norm so the result is
    deterministic.
    """
    rs.conform(mu)
    dims = rs.eps_dim + rs.delta_dim
    even_coroots = [coroot(rs, r) for r in rs.pos_even]
    d = 1
    while d <= 2**6:
        for radius in range(0, max_radius + 1):
            for coords in _bounded_integer_vectors(dims, radius):
                kappa = Weight(
                    tuple(Fraction(c) for c in coords[: rs.eps_dim]),
                    tuple(Fraction(c) for c in coords[rs.eps_dim :]),
                )
                shifted = kappa + rs.rho
                if any(pairing(rs, shifted, av) < d for av in even_coroots):
                    continue
                cls = classify(rs, mu + kappa)
                if cls.regular and cls.strongly_typical:
                    return kappa
        d *= 2
    raise SearchExhausted(
        "no typicalizing shift found within radius %d" % max_radius
    )


def _bounded_integer_vectors(dims: int, radius: int):
    """Integer vectors of exact max-norm `radius`, lexicographic order."""
    if dims == 0:
        if radius == 0:
            yield ()
        return
    rng = range(-radius, radius + 1)
    for coords in itertools.product(rng, repeat=dims):
        if max((abs(c) for c in coords), default=0) == radius:
            yield coords
