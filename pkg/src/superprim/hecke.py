"""Kazhdan-Lusztig polynomials, mu-coefficients, the left preorder with
its cells, and Grothendieck-class arithmetic for twisted simple modules
on regular integral Lie-algebra blocks.

Everything here is a function of the abstract Coxeter group W carried by
a WeylGroup; weights never enter.  Orbit labels x stand for the simple
module L(x.lam) with lam dominant regular integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class KLPolynomial:
    """Polynomial in q with integer coefficients, sparse map exp -> coeff."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (exponent, coefficient) pairs

    @staticmethod
    def from_dict(d: dict[int, int]) -> "KLPolynomial":
        return KLPolynomial(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @staticmethod
    def zero() -> "KLPolynomial":
        return KLPolynomial(())

    @staticmethod
    def one() -> "KLPolynomial":
        return KLPolynomial(((0, 1),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def coefficient(self, exp: int) -> int:
        return dict(self.coeffs).get(exp, 0)

    def degree(self) -> int:
        return max((e for e, _ in self.coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def add(self, other: "KLPolynomial") -> "KLPolynomial":
        d = self.as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return KLPolynomial.from_dict(d)

    def sub(self, other: "KLPolynomial") -> "KLPolynomial":
        d = self.as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) - c
        return KLPolynomial.from_dict(d)

    def shift(self, k: int) -> "KLPolynomial":
        """Multiply by q^k."""
        return KLPolynomial(tuple((e + k, c) for e, c in self.coeffs))

    def scale(self, k: int) -> "KLPolynomial":
        return KLPolynomial.from_dict({e: k * c for e, c in self.coeffs})

    def coefficient_list(self) -> list[int]:
        out = [0] * (self.degree() + 1)
        for e, c in self.coeffs:
            out[e] = c
        return out

    def __repr__(self):
        if self.is_zero():
            return "KL(0)"
        terms = []
        for e, c in self.coeffs:
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append("%dq" % c if c != 1 else "q")
            else:
                terms.append("%dq^%d" % (c, e) if c != 1 else "q^%d" % e)
        return "KL(%s)" % " + ".join(terms)


@dataclass
class Hecke:
    """KL data and the derived order relations for one Weyl group."""

    group: WeylGroup
    _kl: dict = field(default_factory=dict, repr=False)
    _left_succ: dict | None = field(default=None, repr=False)
    _left_reach: dict = field(default_factory=dict, repr=False)
    _completed_reach: dict = field(default_factory=dict, repr=False)
    _kl_order_reach: dict = field(default_factory=dict, repr=False)

    def kl_polynomial(self, x: WeylElement, w: WeylElement) -> KLPolynomial:
        key = (x, w)
        if key in self._kl:
            return self._kl[key]
        G = self.group
        if x == w:
            res = KLPolynomial.one()
        elif not G.bruhat_leq(x, w):
            res = KLPolynomial.zero()
        else:
            i = min(G.left_descents(w))
            s = G.simple(i)
            sx = s * x
            if G.length(sx) > G.length(x):
                res = self.kl_polynomial(sx, w)
            else:
                v = s * w
                res = self.kl_polynomial(sx, v).add(
                    self.kl_polynomial(x, v).shift(1)
                )
                for z in G.elements():
                    if G.length(s * z) >= G.length(z):
                        continue
                    m = self.mu(z, v)
                    if m == 0 or not G.bruhat_leq(x, z):
                        continue
                    exp = (G.length(w) - G.length(z)) // 2
                    res = res.sub(self.kl_polynomial(x, z).shift(exp).scale(m))
        self._kl[key] = res
        return res

    def mu(self, x: WeylElement, w: WeylElement) -> int:
        """Coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w}; 0 off-parity."""
        gap = self.group.length(w) - self.group.length(x)
        if gap <= 0 or gap % 2 == 0:
            return 0
        if not self.group.bruhat_leq(x, w):
            return 0
        return self.kl_polynomial(x, w).coefficient((gap - 1) // 2)

    def mu_tilde(self, x: WeylElement, y: WeylElement) -> int:
        """Symmetrized mu on unordered pairs (Ext^1 is duality-symmetric)."""
        lx, ly = self.group.length(x), self.group.length(y)
        if lx == ly:
            return 0
        return self.mu(x, y) if lx < ly else self.mu(y, x)

    # ----- Grothendieck classes on regular integral Lie-algebra blocks -----

    def twisted_simple_class(self, s_index: int, x: WeylElement) -> dict:
        """Class of T_s L(x.lam) as a multiset of orbit labels.

        Zero for s-finite L(x.lam) (sx > x); otherwise L(x.lam) plus the
        semisimple Jantzen middle, whose multiplicities are mu-coefficients.
        """
        G = self.group
        s = G.simple(s_index)
        if G.length(s * x) > G.length(x):
            return {}
        out = {x: 1}
        for y in G.elements():
            if G.length(s * y) <= G.length(y):
                continue
            m = self.mu_tilde(x, y)
            if m > 0:
                out[y] = out.get(y, 0) + m
        return out

    def completed_kl_leq(self, x: WeylElement, y: WeylElement) -> bool:
        """x plays nu's orbit label, y plays lam's: J(nu) below J(lam)."""
        if x not in self._completed_reach:
            self._completed_reach[x] = self._reachable(x, self._completed_successors)
        return y in self._completed_reach[x]

    def _completed_successors(self, x: WeylElement) -> set[WeylElement]:
        out: set[WeylElement] = set()
        for i in range(self.group.num_simples):
            out.update(self.twisted_simple_class(i, x))
        out.discard(x)
        return out

    def kl_order_leq(self, x: WeylElement, y: WeylElement) -> bool:
        if x not in self._kl_order_reach:
            self._kl_order_reach[x] = self._reachable(x, self._kl_order_successors)
        return y in self._kl_order_reach[x]

    def _kl_order_successors(self, x: WeylElement) -> set[WeylElement]:
        G = self.group
        out: set[WeylElement] = set()
        for y in G.elements():
            if y == x or self.mu_tilde(y, x) == 0:
                continue
            for i in range(G.num_simples):
                s = G.simple(i)
                if (
                    G.length(s * y) > G.length(y)
                    and G.length(s * x) < G.length(x)
                ):
                    out.add(y)
                    break
        return out

    # ----- the left KL preorder -----

    def left_successors(self, x: WeylElement) -> set[WeylElement]:
        """New C'-basis terms of C'_s * C'_x over all simple s."""
        if self._left_succ is None:
            self._left_succ = {}
        if x in self._left_succ:
            return self._left_succ[x]
        G = self.group
        out: set[WeylElement] = set()
        for i in range(G.num_simples):
            s = G.simple(i)
            sx = s * x
            if G.length(sx) < G.length(x):
                continue  # C'_s C'_x = (q^1/2 + q^-1/2) C'_x
            out.add(sx)
            for z in G.elements():
                if G.length(s * z) < G.length(z) and self.mu(z, x) > 0:
                    out.add(z)
        out.discard(x)
        self._left_succ[x] = out
        return out

    def left_leq(self, x: WeylElement, y: WeylElement) -> bool:
        """y is reachable from x by left canonical-basis multiplication."""
        if x not in self._left_reach:
            self._left_reach[x] = self._reachable(x, self.left_successors)
        return y in self._left_reach[x]

    def left_cells(self) -> list[list[WeylElement]]:
        """Mutual left-reachability classes, one list per cell."""
        G = self.group
        elements = G.elements()
        cells: list[list[WeylElement]] = []
        assigned: set[WeylElement] = set()
        for x in elements:
            if x in assigned:
                continue
            cell = [
                y
                for y in elements
                if self.left_leq(x, y) and self.left_leq(y, x)
            ]
            cells.append(cell)
            assigned.update(cell)
        return cells

    def _reachable(self, x: WeylElement, successors) -> set[WeylElement]:
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for u in frontier:
                for v in successors(u):
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return seen
