"""Atypicality sets and the star action: the reflection recursion for
S_nu, word independence, and the correction rule at the last delta wall."""

import pytest

from superprim import weight
from superprim.errors import NonGenericWeight
from superprim.star import odd_support, star_apply, star_orbit, star_simple
from superprim.weyl import act, dot_act

from conftest import random_dominant_generic, random_integer_weight, system


def support_set(rs, nu):
    return {r.vector for r in odd_support(rs, nu).roots}


# ----- odd support -----


def test_odd_support_examples():
    rs, _ = system("gl", 1, 1)
    assert support_set(rs, weight([1], [0])) == {weight([1], [-1])}

    rs2, _ = system("gl", 2, 1)
    assert support_set(rs2, weight([1, 1], [-1])) == {weight([1, 0], [-1])}


def test_odd_support_full_iff_strongly_typical(rng):
    from superprim import classify

    for family, m, n in [("gl", 2, 1), ("gl", 2, 2), ("osp", 3, 1), ("osp", 3, 2)]:
        rs, _ = system(family, m, n)
        for _ in range(100):
            nu = random_integer_weight(rs, rng)
            full = len(odd_support(rs, nu).roots) == len(rs.pos_odd)
            assert full == classify(rs, nu).strongly_typical
            assert len(odd_support(rs, nu).roots) <= len(rs.pos_odd)


@pytest.mark.parametrize(
    "family,m,n", [("gl", 2, 1), ("gl", 2, 2), ("osp", 3, 1), ("osp", 3, 2)]
)
def test_support_reflection_recursion(family, m, n, rng):
    # S_{s.nu} = (s(S_nu) meet pos_odd) union (-s(S_nu) meet pos_odd)
    rs, group = system(family, m, n)
    pos_odd = {r.vector for r in rs.pos_odd}
    for _ in range(100):
        nu = random_integer_weight(rs, rng)
        base = support_set(rs, nu)
        for _, s in group.simple_reflections():
            image = {act(rs, s, v) for v in base}
            expected = (image & pos_odd) | ({-v for v in image} & pos_odd)
            assert support_set(rs, dot_act(rs, s, nu)) == expected


# ----- star action -----


def test_star_equals_dot_for_gl(rng):
    rs, group = system("gl", 2, 2)
    for _ in range(10):
        nu = random_dominant_generic(rs, rng)
        for w in group.elements():
            assert star_apply(rs, group, w, nu) == dot_act(rs, w, nu)


def test_star_equals_dot_on_strongly_typical_osp(rng):
    from superprim import classify

    rs, group = system("osp", 3, 2)
    for _ in range(10):
        nu = random_dominant_generic(rs, rng)
        assert classify(rs, nu).strongly_typical
        for w in group.elements():
            assert star_apply(rs, group, w, nu) == dot_act(rs, w, nu)


def test_star_correction_example():
    # last-delta reflection with a unique vanishing odd pairing
    rs, group = system("osp", 3, 1)
    idx = next(
        i
        for i in range(group.num_simples)
        if group.simple_root(i).vector == rs.delta_unit(1).scale(2)
    )
    nu = weight([3], [-3])  # <nu+rho, delta_1 - eps_1> = 0
    assert star_simple(rs, group, idx, nu) == weight([2], [3])
    # while the plain dot action lands elsewhere
    assert dot_act(rs, group.simple(idx), nu) == weight([3], [4])


def test_star_rejects_non_generic():
    rs, group = system("osp", 3, 1)
    with pytest.raises(NonGenericWeight):
        star_simple(rs, group, 0, rs.zero())
    with pytest.raises(NonGenericWeight):
        star_apply(rs, group, group.identity, rs.zero())
    with pytest.raises(NonGenericWeight):
        star_orbit(rs, group, rs.zero())


@pytest.mark.parametrize("atypical", [False, True])
@pytest.mark.parametrize("family,m,n", [("osp", 3, 1), ("osp", 3, 2)])
def test_star_word_independence(family, m, n, atypical, rng):
    rs, group = system(family, m, n)
    for _ in range(5):
        nu = random_dominant_generic(rs, rng, atypical=atypical)
        for w in group.elements():
            # verify_words recomputes along every reduced word and raises
            # on any disagreement
            star_apply(rs, group, w, nu, verify_words=True)


@pytest.mark.parametrize("family,m,n", [("gl", 2, 1), ("osp", 3, 1), ("osp", 3, 2)])
def test_star_orbit_free(family, m, n, rng):
    rs, group = system(family, m, n)
    nu = random_dominant_generic(rs, rng)
    orbit = star_orbit(rs, group, nu)
    assert len(orbit) == group.order()
    assert len(set(orbit.values())) == group.order()
    assert orbit[group.identity] == nu


def test_star_is_group_action(rng):
    rs, group = system("osp", 3, 2)
    els = group.elements()
    for atypical in (False, True):
        nu = random_dominant_generic(rs, rng, atypical=atypical)
        for _ in range(20):
            w, v = rng.choice(els), rng.choice(els)
            lhs = star_apply(rs, group, w * v, nu)
            rhs = star_apply(rs, group, w, star_apply(rs, group, v, nu, check=False))
            assert lhs == rhs


def test_case_b_preserves_support(rng):
    # when the correction fires, the atypicality set is that of s.nu
    rs, group = system("osp", 3, 2)
    idx = next(
        i
        for i in range(group.num_simples)
        if group.simple_root(i).vector == rs.delta_unit(rs.n).scale(2)
    )
    from superprim.rootsystem import pairing

    fired = 0
    for _ in range(40):
        nu = random_dominant_generic(rs, rng, atypical=True)
        shifted = nu + rs.rho
        hits = [
            g.vector
            for g in rs.pos_odd
            if pairing(rs, shifted, g.vector) == 0
            and pairing(rs, g.vector, rs.delta_unit(rs.n)) != 0
        ]
        if not hits:
            continue
        fired += 1
        starred = star_simple(rs, group, idx, nu)
        dotted = dot_act(rs, group.simple(idx), nu)
        assert starred != dotted
        assert support_set(rs, starred) == support_set(rs, dotted)
    assert fired >= 5
