"""Inclusion order on primitive-ideal labels in the generic region.

A generic integral weight is written uniquely as w * mu with mu the
dominant member of its star orbit; J(w1 * mu) is contained in
J(w2 * lam) exactly when mu = lam and w2 is below w1 in the left
preorder of the Hecke module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NoDominantRepresentative,
    NonGenericWeight,
    NonIntegralWeight,
    OrbitNotFree,
)
from .hecke import Hecke
from .predicates import classify, is_operationally_generic
from .rootsystem import RootSystem, Weight
from .star import star_apply, star_orbit
from .weyl import WeylElement, WeylGroup

INCLUDED = "included"
NOT_INCLUDED = "not_included"
INCOMPARABLE_BASES = "incomparable_bases"


@dataclass(frozen=True)
class InclusionCertificate:
    mu: Weight | None
    w1: WeylElement | None
    w2: WeylElement | None
    left_order_chain: tuple[tuple[WeylElement, int], ...]
    verdict: str


class PrimOrder:
    """Shared Weyl group + Hecke caches for order queries on one root system."""

    def __init__(self, rs: RootSystem, group: WeylGroup | None = None):
        self.rs = rs
        self.group = group or WeylGroup(rs)
        self.hecke = Hecke(self.group)

    def canonical_decomposition(self, nu: Weight) -> tuple[WeylElement, Weight]:
        """(w, mu) with star_apply(w, mu) = nu and mu dominant in the orbit."""
        cls = classify(self.rs, nu)
        if not cls.integral:
            raise NonIntegralWeight("order queries need integral weights")
        if not is_operationally_generic(self.rs, nu):
            raise NonGenericWeight("order queries need generic weights")
        orbit = star_orbit(self.rs, self.group, nu, check=False)
        dominant = [
            (w, val)
            for w, val in orbit.items()
            if classify(self.rs, val).dominant
        ]
        dominant_values = {val for _, val in dominant}
        if not dominant_values:
            raise NoDominantRepresentative(
                "star orbit contains no dominant weight"
            )
        if len(dominant_values) > 1:
            raise OrbitNotFree(
                "star orbit has several dominant members; input escaped the "
                "generic regime"
            )
        mu = next(iter(dominant_values))
        witnesses = [
            w for w, val in orbit.items() if val == nu
        ]
        if len(witnesses) != 1:
            raise OrbitNotFree("star orbit is not free on this weight")
        # nu = w*mu with w = witness of mu composed into nu's slot
        carriers = [w for w, val in orbit.items() if val == mu]
        if len(carriers) != 1:
            raise OrbitNotFree("star orbit is not free on this weight")
        w = witnesses[0] * carriers[0].inverse()
        if star_apply(self.rs, self.group, w, mu, check=False) != nu:
            raise OrbitNotFree(
                "canonical decomposition failed to round-trip; input escaped "
                "the generic regime"
            )
        return w, mu

    def ideal_includes(self, nu: Weight, lam: Weight) -> InclusionCertificate:
        """Decide J(nu) subset of J(lam), with the witnessing left chain."""
        w1, mu1 = self.canonical_decomposition(nu)
        w2, mu2 = self.canonical_decomposition(lam)
        if mu1 != mu2:
            return InclusionCertificate(
                mu=None, w1=w1, w2=w2, left_order_chain=(), verdict=INCOMPARABLE_BASES
            )
        if not self.hecke.left_leq(w2, w1):
            return InclusionCertificate(
                mu=mu1, w1=w1, w2=w2, left_order_chain=(), verdict=NOT_INCLUDED
            )
        chain = self._left_chain(w2, w1)
        return InclusionCertificate(
            mu=mu1, w1=w1, w2=w2, left_order_chain=chain, verdict=INCLUDED
        )

    def _left_chain(
        self, start: WeylElement, goal: WeylElement
    ) -> tuple[tuple[WeylElement, int], ...]:
        """Shortest path start -> goal along left-multiplication edges."""
        prev: dict[WeylElement, tuple[WeylElement, int]] = {}
        frontier = [start]
        seen = {start}
        while frontier and goal not in seen:
            nxt = []
            for u in frontier:
                for i in range(self.group.num_simples):
                    s = self.group.simple(i)
                    step_targets = set()
                    sx = s * u
                    if self.group.length(sx) > self.group.length(u):
                        step_targets.add(sx)
                        for z in self.group.elements():
                            if (
                                self.group.length(s * z) < self.group.length(z)
                                and self.hecke.mu(z, u) > 0
                            ):
                                step_targets.add(z)
                    for v in step_targets:
                        if v not in seen:
                            seen.add(v)
                            prev[v] = (u, i)
                            nxt.append(v)
            frontier = nxt
        chain = []
        cur = goal
        while cur != start:
            parent, i = prev[cur]
            chain.append((cur, i))
            cur = parent
        chain.reverse()
        return tuple(chain)

    def ideal_equal(self, nu: Weight, lam: Weight) -> bool:
        """Same dominant base and mutually left-comparable orbit positions."""
        w1, mu1 = self.canonical_decomposition(nu)
        w2, mu2 = self.canonical_decomposition(lam)
        return (
            mu1 == mu2
            and self.hecke.left_leq(w1, w2)
            and self.hecke.left_leq(w2, w1)
        )

    def hasse_dag(self, mu: Weight) -> "HasseDag":
        """Covering relations of the ideal order on the left cells at base mu."""
        cls = classify(self.rs, mu)
        if not cls.integral:
            raise NonIntegralWeight("hasse needs an integral base")
        if not is_operationally_generic(self.rs, mu):
            raise NonGenericWeight("hasse needs a generic base")
        if not cls.dominant:
            raise NoDominantRepresentative("hasse needs a dominant base")
        cells = self.hecke.left_cells()
        orbit = star_orbit(self.rs, self.group, mu, check=False)
        # ideal of cell a strictly inside ideal of cell b
        strictly_below = {}
        for a, cell_a in enumerate(cells):
            for b, cell_b in enumerate(cells):
                if a == b:
                    continue
                if self.hecke.left_leq(cell_b[0], cell_a[0]):
                    strictly_below.setdefault(a, set()).add(b)
        edges = []
        for a, bs in strictly_below.items():
            for b in bs:
                # covering: nothing strictly between a and b
                between = strictly_below.get(a, set()) & {
                    c
                    for c in range(len(cells))
                    if b in strictly_below.get(c, set())
                }
                if not between:
                    edges.append((a, b))
        return HasseDag(cells=cells, orbit=orbit, edges=sorted(edges))


@dataclass
class HasseDag:
    cells: list[list[WeylElement]]
    orbit: dict[WeylElement, Weight]
    edges: list[tuple[int, int]]  # (nu-cell, lam-cell): J(nu-cell) inside J(lam-cell)
