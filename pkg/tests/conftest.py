"""Shared fixtures and random-weight builders for the test suite."""

import random

import pytest

from superprim import build_root_system, classify, weight
from superprim.weyl import WeylGroup

# one group per root system; rebuilding them for every test is wasteful
_SYSTEMS = {}


def system(family, m, n):
    key = (family, m, n)
    if key not in _SYSTEMS:
        rs = build_root_system(family, m, n)
        _SYSTEMS[key] = (rs, WeylGroup(rs))
    return _SYSTEMS[key]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_integer_weight(rs, rng, bound=8):
    return weight(
        [rng.randint(-bound, bound) for _ in range(rs.eps_dim)],
        [rng.randint(-bound, bound) for _ in range(rs.delta_dim)],
    )


def random_dominant_generic(rs, rng, scale=50, atypical=False):
    """Integral dominant generic weight, by construction plus a classify gate.

    Coordinates are spread by `scale` per slot, which clears every even
    wall by far more than the odd-root margin.  With `atypical` one odd
    pairing of lam + rho is forced to zero (needs odd roots present).
    """
    l, n = rs.eps_dim, rs.delta_dim
    while True:
        if rs.family == "gl":
            eps = [(l - i) * scale + rng.randrange(scale // 3) for i in range(l)]
            dlt = [-(j + 2) * scale - rng.randrange(scale // 3) for j in range(n)]
        else:
            eps = [(l - i + n + 1) * scale + rng.randrange(scale // 3)
                   for i in range(l)]
            dlt = [(n - j) * scale * (l + 2) + rng.randrange(scale // 3)
                   for j in range(n)]
        if atypical and rs.pos_odd:
            if not _force_atypical(rs, rng, eps, dlt):
                continue
        lam = weight(eps, dlt)
        cls = classify(rs, lam)
        if not (cls.integral and cls.dominant and cls.generic):
            continue
        if atypical and rs.pos_odd and cls.strongly_typical:
            continue
        return lam


def _force_atypical(rs, rng, eps, dlt) -> bool:
    """Adjust one delta coordinate so an odd pairing of lam + rho vanishes."""
    l, n = rs.eps_dim, rs.delta_dim
    if not (l and n):
        return False
    i, j = rng.randrange(l), rng.randrange(n)
    rho = rs.rho
    if rs.family == "gl":
        # <x, eps_i - delta_j> = x_eps_i + x_delta_j
        desired = -(eps[i] + rho.eps[i]) - rho.delta[j]
    else:
        # <x, delta_j + eps_i> = x_eps_i - x_delta_j
        desired = eps[i] + rho.eps[i] - rho.delta[j]
    if desired.denominator != 1:
        return False
    dlt[j] = int(desired)
    return True
