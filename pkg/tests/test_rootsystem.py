"""Root data: construction, the bilinear form, coroots and reflections."""

from fractions import Fraction

import pytest

from superprim import (
    Root,
    build_root_system,
    coroot,
    format_weight,
    pairing,
    parse_weight,
    reflect,
    weight,
)
from superprim.errors import (
    DimensionMismatch,
    IsotropicRoot,
    RankOutOfRange,
    UnsupportedFamily,
)
from superprim.rootsystem import EVEN, ODD

from conftest import random_integer_weight, system


def vectors(roots):
    return {r.vector for r in roots}


def test_gl11_rho_triple():
    rs = build_root_system("gl", 1, 1)
    assert rs.rho_even == weight([0], [0])
    assert rs.rho_odd == weight([Fraction(1, 2)], [Fraction(-1, 2)])
    assert rs.rho == weight([Fraction(-1, 2)], [Fraction(1, 2)])


def test_gl20_has_no_odd_roots():
    rs = build_root_system("gl", 2, 0)
    assert rs.pos_odd == ()
    assert rs.rho == weight([Fraction(1, 2), Fraction(-1, 2)], [])


def test_osp31_root_lists():
    rs = build_root_system("osp", 3, 1)
    assert vectors(rs.pos_even) == {weight([1], [0]), weight([0], [2])}
    assert vectors(rs.pos_odd) == {
        weight([0], [1]),
        weight([-1], [1]),
        weight([1], [1]),
    }
    assert rs.rho_even == weight([Fraction(1, 2)], [1])
    assert rs.rho_odd == weight([0], [Fraction(3, 2)])
    assert rs.rho == weight([Fraction(1, 2)], [Fraction(-1, 2)])


@pytest.mark.parametrize(
    "family,m,n",
    [("gl", 0, 1), ("gl", 1, -1), ("osp", 3, 0), ("osp", 0, 2)],
)
def test_rank_out_of_range(family, m, n):
    with pytest.raises(RankOutOfRange):
        build_root_system(family, m, n)


def test_unsupported_family():
    with pytest.raises(UnsupportedFamily):
        build_root_system("q", 2, 2)


def test_pairing_signature():
    rs = build_root_system("gl", 2, 2)
    assert pairing(rs, rs.eps_unit(1), rs.eps_unit(1)) == 1
    assert pairing(rs, rs.delta_unit(1), rs.delta_unit(1)) == -1
    assert pairing(rs, rs.eps_unit(1), rs.delta_unit(2)) == 0


def test_gl11_rho_is_isotropic_against_odd_root():
    rs = build_root_system("gl", 1, 1)
    odd = rs.pos_odd[0].vector
    assert pairing(rs, rs.rho, odd) == 0


def test_pairing_dimension_mismatch():
    rs = build_root_system("gl", 2, 1)
    with pytest.raises(DimensionMismatch):
        pairing(rs, weight([1], [2]), rs.rho)


def test_coroots():
    gl = build_root_system("gl", 2, 0)
    a = Root(EVEN, weight([1, -1], []))
    assert coroot(gl, a) == a.vector

    osp = build_root_system("osp", 3, 1)
    assert coroot(osp, Root(EVEN, weight([0], [2]))) == weight([0], [-1])
    assert coroot(osp, Root(EVEN, weight([1], [0]))) == weight([2], [0])


def test_coroot_pairs_to_two():
    for family, m, n in [("gl", 3, 2), ("osp", 4, 2), ("osp", 5, 1)]:
        rs = build_root_system(family, m, n)
        for r in rs.pos_even:
            assert pairing(rs, r.vector, coroot(rs, r)) == 2


def test_isotropic_coroot_rejected():
    rs = build_root_system("gl", 1, 1)
    with pytest.raises(IsotropicRoot):
        coroot(rs, rs.pos_odd[0])


def test_reflect_swaps_and_flips():
    gl = build_root_system("gl", 2, 1)
    a = Root(EVEN, weight([1, -1], [0]))
    assert reflect(gl, a, weight([3, 1], [-2])) == weight([1, 3], [-2])

    osp = build_root_system("osp", 3, 1)
    b = Root(EVEN, weight([0], [2]))
    assert reflect(osp, b, weight([0], [5])) == weight([0], [-5])


def test_reflect_is_involution(rng):
    rs = build_root_system("osp", 4, 2)
    for _ in range(50):
        lam = random_integer_weight(rs, rng)
        for r in rs.pos_even:
            assert reflect(rs, r, reflect(rs, r, lam)) == lam


def test_reflections_preserve_pairing(rng):
    for family, m, n in [("gl", 3, 1), ("osp", 5, 2)]:
        rs = build_root_system(family, m, n)
        for _ in range(20):
            a = random_integer_weight(rs, rng)
            b = random_integer_weight(rs, rng)
            for r in rs.pos_even:
                assert pairing(
                    rs, reflect(rs, r, a), reflect(rs, r, b)
                ) == pairing(rs, a, b)


@pytest.mark.parametrize(
    "family,m,n",
    [("gl", 2, 2), ("gl", 3, 1), ("osp", 3, 2), ("osp", 4, 1), ("osp", 5, 2)],
)
def test_rho_identity_and_parities(family, m, n):
    rs = build_root_system(family, m, n)
    assert rs.rho == rs.rho_even - rs.rho_odd
    half = Fraction(1, 2)
    total_even = rs.zero()
    for r in rs.pos_even:
        assert r.parity == EVEN
        assert pairing(rs, r.vector, r.vector) != 0
        total_even = total_even + r.vector
    assert total_even.scale(half) == rs.rho_even
    for r in rs.pos_odd:
        assert r.parity == ODD
        touches_eps = any(c != 0 for c in r.vector.eps)
        if family == "gl" or touches_eps:
            # eps-delta mixed odd roots are isotropic; osp delta_j is not
            assert pairing(rs, r.vector, r.vector) == 0
        else:
            assert pairing(rs, r.vector, r.vector) != 0


def test_gl_even_simples_are_simple_in_full_system():
    # distinguished Borel: the even simple roots stay simple in the super system
    rs = build_root_system("gl", 3, 2)
    all_pos = [r.vector for r in rs.pos_even] + [r.vector for r in rs.pos_odd]
    _, group = system("gl", 3, 2)
    for root, _ in group.simple_reflections():
        decomposable = False
        for a in all_pos:
            b = root.vector - a
            if not b.is_zero() and b in all_pos:
                decomposable = True
        assert not decomposable


@pytest.mark.parametrize("family,m,n", [("osp", 3, 2), ("osp", 4, 2), ("osp", 5, 2)])
def test_osp_simples_preserve_odd_system_except_last(family, m, n):
    rs = build_root_system(family, m, n)
    _, group = system(family, m, n)
    from superprim.weyl import act

    last = rs.delta_unit(rs.n).scale(2)
    pos_odd = {r.vector for r in rs.pos_odd}
    for root, w in group.simple_reflections():
        image = {act(rs, w, v) for v in pos_odd}
        if root.vector == last:
            assert image != pos_odd
        else:
            assert image == pos_odd


def test_weight_literal_round_trip():
    rs = build_root_system("gl", 2, 1)
    for text in ["3,1|-2", "7/2,0|-1/2", "-1,-2|5"]:
        assert format_weight(parse_weight(text, rs)) == text


def test_parse_weight_errors():
    from superprim.errors import MalformedWeightLiteral

    rs = build_root_system("gl", 2, 1)
    for bad in ["1,2", "1|2", "1,2,3|4", "a,b|c", "1,1/0|2"]:
        with pytest.raises(MalformedWeightLiteral):
            parse_weight(bad, rs)

    rs0 = build_root_system("gl", 2, 0)
    assert parse_weight("1,0", rs0) == weight([1, 0], [])
    assert parse_weight("1,0|", rs0) == weight([1, 0], [])
