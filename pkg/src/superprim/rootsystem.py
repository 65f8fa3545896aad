"""Root data for gl(m|n) and osp(m|2n).

Weights live in the span of eps_1..eps_l, delta_1..delta_n with the
W-invariant form <eps_i,eps_j> = delta_ij, <delta_i,delta_j> = -delta_ij,
<eps_i,delta_j> = 0.  For gl the eps-block has m coordinates; for osp it
has floor(m/2).  All coordinates are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    DimensionMismatch,
    IsotropicRoot,
    MalformedWeightLiteral,
    RankOutOfRange,
    UnsupportedFamily,
)

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class Weight:
    """Exact rational coordinates in the eps/delta basis."""

    eps: tuple[Fraction, ...]
    delta: tuple[Fraction, ...]

    def __add__(self, other: "Weight") -> "Weight":
        self._conform(other)
        return Weight(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        self._conform(other)
        return Weight(
            tuple(a - b for a, b in zip(self.eps, other.eps)),
            tuple(a - b for a, b in zip(self.delta, other.delta)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.eps), tuple(-a for a in self.delta))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.eps), tuple(c * a for a in self.delta))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.eps) and all(a == 0 for a in self.delta)

    def _conform(self, other: "Weight"):
        if len(self.eps) != len(other.eps) or len(self.delta) != len(other.delta):
            raise DimensionMismatch(
                "weights have shapes (%d|%d) and (%d|%d)"
                % (len(self.eps), len(self.delta), len(other.eps), len(other.delta))
            )

    def __repr__(self):
        return "Weight(%s)" % format_weight(self)


def weight(eps: Iterable, delta: Iterable = ()) -> Weight:
    """Build a Weight from any rational-convertible coordinate iterables."""
    return Weight(tuple(Fraction(a) for a in eps), tuple(Fraction(b) for b in delta))


@dataclass(frozen=True)
class Root:
    parity: str  # EVEN or ODD
    vector: Weight


@dataclass(frozen=True)
class RootSystem:
    family: str  # "gl" or "osp"
    m: int
    n: int
    pos_even: tuple[Root, ...]
    pos_odd: tuple[Root, ...]
    rho_even: Weight
    rho_odd: Weight
    rho: Weight

    @property
    def eps_dim(self) -> int:
        return self.m if self.family == "gl" else self.m // 2

    @property
    def delta_dim(self) -> int:
        return self.n

    def zero(self) -> Weight:
        z = Fraction(0)
        return Weight((z,) * self.eps_dim, (z,) * self.delta_dim)

    def eps_unit(self, i: int) -> Weight:
        """eps_i as a Weight (1-based index)."""
        co = [Fraction(0)] * self.eps_dim
        co[i - 1] = Fraction(1)
        return Weight(tuple(co), (Fraction(0),) * self.delta_dim)

    def delta_unit(self, j: int) -> Weight:
        co = [Fraction(0)] * self.delta_dim
        co[j - 1] = Fraction(1)
        return Weight((Fraction(0),) * self.eps_dim, tuple(co))

    def conform(self, lam: Weight):
        if len(lam.eps) != self.eps_dim or len(lam.delta) != self.delta_dim:
            raise DimensionMismatch(
                "weight shape (%d|%d) does not match %s(%d,%d)"
                % (len(lam.eps), len(lam.delta), self.family, self.m, self.n)
            )


def _half_sum(roots: tuple[Root, ...], zero: Weight) -> Weight:
    total = zero
    for r in roots:
        total = total + r.vector
    return total.scale(Fraction(1, 2))


def build_root_system(family: str, m: int, n: int) -> RootSystem:
    """Construct the root datum for gl(m|n) or osp(m|2n).

    For osp the second argument n counts the delta-coordinates, so the
    algebra is osp(m|2n).  The positive odd system of osp consists of all
    odd roots with positive delta-part, so that every even simple
    reflection except the one for 2*delta_n permutes it.
    """
    if family == "gl":
        if m < 1 or n < 0:
            raise RankOutOfRange("gl needs m >= 1, n >= 0; got (%d,%d)" % (m, n))
    elif family == "osp":
        if m < 1 or n < 1:
            raise RankOutOfRange("osp needs m >= 1, n >= 1; got (%d,%d)" % (m, n))
    else:
        raise UnsupportedFamily("unknown family %r" % family)

    l = m if family == "gl" else m // 2
    zero = Weight((Fraction(0),) * l, (Fraction(0),) * n)

    def eps(i):
        co = [Fraction(0)] * l
        co[i - 1] = Fraction(1)
        return Weight(tuple(co), (Fraction(0),) * n)

    def dlt(j):
        co = [Fraction(0)] * n
        co[j - 1] = Fraction(1)
        return Weight((Fraction(0),) * l, tuple(co))

    pos_even: list[Root] = []
    pos_odd: list[Root] = []

    if family == "gl":
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                pos_even.append(Root(EVEN, eps(i) - eps(j)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos_even.append(Root(EVEN, dlt(i) - dlt(j)))
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                pos_odd.append(Root(ODD, eps(i) - dlt(j)))
    else:
        odd_m = m % 2 == 1
        for i in range(1, l + 1):
            for j in range(i + 1, l + 1):
                pos_even.append(Root(EVEN, eps(i) - eps(j)))
                pos_even.append(Root(EVEN, eps(i) + eps(j)))
        if odd_m:
            for i in range(1, l + 1):
                pos_even.append(Root(EVEN, eps(i)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos_even.append(Root(EVEN, dlt(i) - dlt(j)))
                pos_even.append(Root(EVEN, dlt(i) + dlt(j)))
        for i in range(1, n + 1):
            pos_even.append(Root(EVEN, dlt(i).scale(2)))
        for j in range(1, n + 1):
            for i in range(1, l + 1):
                pos_odd.append(Root(ODD, dlt(j) - eps(i)))
                pos_odd.append(Root(ODD, dlt(j) + eps(i)))
            if odd_m:
                pos_odd.append(Root(ODD, dlt(j)))

    rho_even = _half_sum(tuple(pos_even), zero)
    rho_odd = _half_sum(tuple(pos_odd), zero)
    return RootSystem(
        family=family,
        m=m,
        n=n,
        pos_even=tuple(pos_even),
        pos_odd=tuple(pos_odd),
        rho_even=rho_even,
        rho_odd=rho_odd,
        rho=rho_even - rho_odd,
    )


def pairing(rs: RootSystem, a: Weight, b: Weight) -> Fraction:
    """The W-invariant form: +1 on eps-coordinates, -1 on delta-coordinates."""
    rs.conform(a)
    rs.conform(b)
    total = Fraction(0)
    for x, y in zip(a.eps, b.eps):
        total += x * y
    for x, y in zip(a.delta, b.delta):
        total -= x * y
    return total


def coroot(rs: RootSystem, alpha: Root) -> Weight:
    """alpha^vee = 2*alpha / <alpha,alpha>; only defined for non-isotropic roots."""
    norm = pairing(rs, alpha.vector, alpha.vector)
    if norm == 0:
        raise IsotropicRoot("coroot of isotropic root %r" % (alpha.vector,))
    return alpha.vector.scale(Fraction(2) / norm)


def reflect(rs: RootSystem, alpha: Root, lam: Weight) -> Weight:
    """s_alpha(lam) = lam - <lam, alpha^vee> * alpha."""
    av = coroot(rs, alpha)
    return lam - alpha.vector.scale(pairing(rs, lam, av))


def _format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def format_weight(lam: Weight) -> str:
    """Render in the literal grammar `a_1,...,a_l|b_1,...,b_n`."""
    eps = ",".join(_format_rational(a) for a in lam.eps)
    if not lam.delta:
        return eps
    return eps + "|" + ",".join(_format_rational(b) for b in lam.delta)


def parse_weight(literal: str, rs: RootSystem) -> Weight:
    """Parse a weight literal against a root system's coordinate shape."""

    def parse_block(text: str, count: int, offset: int) -> tuple[Fraction, ...]:
        if count == 0:
            if text.strip():
                raise MalformedWeightLiteral(
                    "expected empty coordinate block, got %r" % text, position=offset
                )
            return ()
        parts = text.split(",")
        if len(parts) != count:
            raise MalformedWeightLiteral(
                "expected %d coordinates, got %d" % (count, len(parts)),
                position=offset,
            )
        out = []
        pos = offset
        for part in parts:
            try:
                out.append(Fraction(part.strip().replace("−", "-")))
            except (ValueError, ZeroDivisionError):
                raise MalformedWeightLiteral(
                    "bad rational %r" % part, position=pos
                ) from None
            pos += len(part) + 1
        return tuple(out)

    if "|" in literal:
        bar = literal.index("|")
        eps_text, delta_text = literal[:bar], literal[bar + 1 :]
        if rs.delta_dim == 0 and delta_text.strip():
            raise MalformedWeightLiteral(
                "delta block given but n = 0", position=bar + 1
            )
        return Weight(
            parse_block(eps_text, rs.eps_dim, 0),
            parse_block(delta_text, rs.delta_dim, bar + 1),
        )
    if rs.delta_dim != 0:
        raise MalformedWeightLiteral(
            "missing delta block (expected `...|...`)", position=len(literal)
        )
    return Weight(parse_block(literal, rs.eps_dim, 0), ())
