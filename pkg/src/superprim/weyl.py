"""The even Weyl group as pairs of signed permutations.

An element stores, for each basis vector, its signed image:
``eps[i-1] = +j`` means w(eps_i) = eps_j and ``-j`` means w(eps_i) = -eps_j,
likewise for delta.  Composition, inverses and the linear action on
weights are all O(rank).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, GroupTooLarge
from .rootsystem import EVEN, Root, RootSystem, Weight

DEFAULT_MAX_GROUP_ORDER = 10**5


@dataclass(frozen=True)
class WeylElement:
    eps_perm: tuple[int, ...]
    delta_perm: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition: (self * other)(v) = self(other(v))."""
        if len(self.eps_perm) != len(other.eps_perm) or len(
            self.delta_perm
        ) != len(other.delta_perm):
            raise DimensionMismatch("mismatched signed-permutation ranks")

        def compose(p, q):
            out = []
            for img in q:
                t = p[abs(img) - 1]
                out.append(t if img > 0 else -t)
            return tuple(out)

        return WeylElement(
            compose(self.eps_perm, other.eps_perm),
            compose(self.delta_perm, other.delta_perm),
        )

    def inverse(self) -> "WeylElement":
        def inv(p):
            out = [0] * len(p)
            for i, img in enumerate(p, start=1):
                out[abs(img) - 1] = i if img > 0 else -i
            return tuple(out)

        return WeylElement(inv(self.eps_perm), inv(self.delta_perm))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.eps_perm, 1)) and all(
            v == i for i, v in enumerate(self.delta_perm, 1)
        )


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(
        tuple(range(1, rs.eps_dim + 1)), tuple(range(1, rs.delta_dim + 1))
    )


def act(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """Linear action: w(eps_i) = sign * eps_|p[i]|, same for delta."""
    rs.conform(lam)
    if len(w.eps_perm) != rs.eps_dim or len(w.delta_perm) != rs.delta_dim:
        raise DimensionMismatch("element rank does not match root system")
    eps = [Fraction(0)] * rs.eps_dim
    for i, img in enumerate(w.eps_perm):
        eps[abs(img) - 1] = lam.eps[i] if img > 0 else -lam.eps[i]
    delta = [Fraction(0)] * rs.delta_dim
    for i, img in enumerate(w.delta_perm):
        delta[abs(img) - 1] = lam.delta[i] if img > 0 else -lam.delta[i]
    return Weight(tuple(eps), tuple(delta))


def dot_act(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    return act(rs, w, lam + rs.rho) - rs.rho


def circle_act(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """w o lam = w(lam + rho_even) - rho_even."""
    return act(rs, w, lam + rs.rho_even) - rs.rho_even


def _reflection_element(rs: RootSystem, alpha: Root) -> WeylElement:
    """Signed-permutation form of the reflection in an even root."""
    from .rootsystem import reflect

    e = identity_element(rs)
    eps = []
    for i in range(1, rs.eps_dim + 1):
        img = reflect(rs, alpha, rs.eps_unit(i))
        eps.append(_single_signed_index(img))
    delta = []
    for j in range(1, rs.delta_dim + 1):
        img = reflect(rs, alpha, rs.delta_unit(j))
        delta.append(_single_signed_index(img, delta_side=True))
    w = WeylElement(tuple(eps), tuple(delta))
    assert (w * w) == e
    return w


def _single_signed_index(img: Weight, delta_side: bool = False) -> int:
    coords = img.delta if delta_side else img.eps
    hits = [(k + 1, c) for k, c in enumerate(coords) if c != 0]
    assert len(hits) == 1 and abs(hits[0][1]) == 1
    k, c = hits[0]
    return k if c > 0 else -k


class WeylGroup:
    """Simple reflections, lengths, reduced words and Bruhat order for W.

    All tables are filled lazily and memoised; elements are hashable
    values so the group can be shared freely.
    """

    def __init__(self, rs: RootSystem, max_order: int = DEFAULT_MAX_GROUP_ORDER):
        self.rs = rs
        self.max_order = max_order
        self.identity = identity_element(rs)
        self._simples = self._build_simples()
        self._elements: list[WeylElement] | None = None
        self._length: dict[WeylElement, int] = {}
        self._bruhat: dict[tuple[WeylElement, WeylElement], bool] = {}
        self._pos_even_vectors = [r.vector for r in rs.pos_even]
        self._neg_even_set = {(-r.vector).eps + (-r.vector).delta for r in rs.pos_even}

    def _build_simples(self) -> list[tuple[Root, WeylElement]]:
        rs = self.rs
        out: list[tuple[Root, WeylElement]] = []
        if rs.family == "gl":
            for i in range(1, rs.m):
                alpha = Root(EVEN, rs.eps_unit(i) - rs.eps_unit(i + 1))
                out.append((alpha, _reflection_element(rs, alpha)))
            for j in range(1, rs.n):
                alpha = Root(EVEN, rs.delta_unit(j) - rs.delta_unit(j + 1))
                out.append((alpha, _reflection_element(rs, alpha)))
        else:
            l = rs.eps_dim
            for i in range(1, l):
                alpha = Root(EVEN, rs.eps_unit(i) - rs.eps_unit(i + 1))
                out.append((alpha, _reflection_element(rs, alpha)))
            if rs.m % 2 == 1:
                if l >= 1:
                    alpha = Root(EVEN, rs.eps_unit(l))
                    out.append((alpha, _reflection_element(rs, alpha)))
            else:
                if l >= 2:
                    alpha = Root(EVEN, rs.eps_unit(l - 1) + rs.eps_unit(l))
                    out.append((alpha, _reflection_element(rs, alpha)))
            for j in range(1, rs.n):
                alpha = Root(EVEN, rs.delta_unit(j) - rs.delta_unit(j + 1))
                out.append((alpha, _reflection_element(rs, alpha)))
            alpha = Root(EVEN, rs.delta_unit(rs.n).scale(2))
            out.append((alpha, _reflection_element(rs, alpha)))
        return out

    def simple_reflections(self) -> list[tuple[Root, WeylElement]]:
        return list(self._simples)

    @property
    def num_simples(self) -> int:
        return len(self._simples)

    def simple(self, index: int) -> WeylElement:
        return self._simples[index][1]

    def simple_root(self, index: int) -> Root:
        return self._simples[index][0]

    def length(self, w: WeylElement) -> int:
        """Number of positive even roots sent to negative ones."""
        if w not in self._length:
            count = 0
            for v in self._pos_even_vectors:
                img = act(self.rs, w, v)
                if (img.eps + img.delta) in self._neg_even_set:
                    count += 1
            self._length[w] = count
        return self._length[w]

    def left_descents(self, w: WeylElement) -> list[int]:
        lw = self.length(w)
        return [
            i for i in range(self.num_simples)
            if self.length(self.simple(i) * w) < lw
        ]

    def right_descents(self, w: WeylElement) -> list[int]:
        lw = self.length(w)
        return [
            i for i in range(self.num_simples)
            if self.length(w * self.simple(i)) < lw
        ]

    def descents(self, w: WeylElement, side: str = "right") -> set[int]:
        if side == "left":
            return set(self.left_descents(w))
        if side == "right":
            return set(self.right_descents(w))
        raise ValueError("side must be 'left' or 'right'")

    def reduced_word(self, w: WeylElement) -> list[int]:
        """Lexicographically smallest reduced word, as simple indices."""
        word: list[int] = []
        cur = w
        while not cur.is_identity():
            i = min(self.left_descents(cur))
            word.append(i)
            cur = self.simple(i) * cur
        return word

    def all_reduced_words(self, w: WeylElement) -> list[list[int]]:
        if w.is_identity():
            return [[]]
        out = []
        for i in self.left_descents(w):
            for rest in self.all_reduced_words(self.simple(i) * w):
                out.append([i] + rest)
        return out

    def from_word(self, word: list[int]) -> WeylElement:
        cur = self.identity
        for i in word:
            cur = cur * self.simple(i)
        return cur

    def word_string(self, w: WeylElement) -> str:
        """Serialization `s1.s3.s2` used in CLI output (1-based indices)."""
        word = self.reduced_word(w)
        if not word:
            return "e"
        return ".".join("s%d" % (i + 1) for i in word)

    def bruhat_leq(self, x: WeylElement, w: WeylElement) -> bool:
        """Bruhat order (subword criterion semantics)."""
        key = (x, w)
        if key in self._bruhat:
            return self._bruhat[key]
        if x == w:
            res = True
        elif self.length(x) >= self.length(w):
            res = False
        else:
            # standard descent recursion, equivalent to the subword test
            i = self.left_descents(w)[0]
            s = self.simple(i)
            sw = s * w
            sx = s * x
            if self.length(sx) < self.length(x):
                res = self.bruhat_leq(sx, sw)
            else:
                res = self.bruhat_leq(x, sw)
        self._bruhat[key] = res
        return res

    def elements(self) -> list[WeylElement]:
        """Every element exactly once, BFS order from the identity."""
        if self._elements is None:
            seen = {self.identity}
            order = [self.identity]
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for _, s in self._simples:
                        u = s * w
                        if u not in seen:
                            seen.add(u)
                            order.append(u)
                            nxt.append(u)
                    if len(seen) > self.max_order:
                        raise GroupTooLarge(
                            "Weyl group exceeds max order %d" % self.max_order
                        )
                frontier = nxt
            order.sort(key=lambda w: (self.length(w), w.eps_perm, w.delta_perm))
            self._elements = order
        return list(self._elements)

    def order(self) -> int:
        return len(self.elements())
