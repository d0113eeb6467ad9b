import pytest

from conftest import cached
from hopfkit.cyclo import ONE, proportional, zeta
from hopfkit.invariants import (characters, coradical_h1, grouplike_census, integrals, is_grouplike,
                                lemma13_check, expected_character_count, skew_primitives, yx_commutation_check)


def test_h8_characters(h8):
    chars = characters(h8)
    assert len(chars) == 2
    assert sorted(str(c.images["a"]) for c in chars) == ["-1", "1"]
    assert all(c.images["x"] == 0 for c in chars)


def test_alpha_zero_has_N_characters(b4):
    assert len(characters(b4)) == 4 == expected_character_count(4, 1, 2, True)


def test_ua54_characters_brute_force(ua54):
    # a -> zeta_6^i, x, y -> 0 must satisfy zeta^{3i} = 1 (x^3 relation) and zeta^{2i} = 1 (yx relation)
    expected = [i for i in range(6) if zeta(6, 3 * i) == 1 and zeta(6, 2 * i) == 1]
    assert expected == [0]
    assert len(characters(ua54)) == len(expected)


@pytest.mark.parametrize("N,nu,n", [(4, 1, 2), (6, 1, 3), (8, 1, 4), (12, 2, 3), (12, 5, 4)])
def test_expected_character_counts_against_enumeration(N, nu, n):
    q = -1 if n == 2 else (n, 1)
    h = cached("HA", n=n, N=N, nu=nu, q=q, alpha=1)
    count = len(characters(h))
    assert count == sum(1 for i in range(N) if (nu * n * i) % N == 0)
    assert count == expected_character_count(N, nu, n, False)
    assert n <= count <= N and N % count == 0


def test_grouplikes(h8):
    for i in range(4):
        assert is_grouplike(h8, {h8.index(i): ONE})
    assert not is_grouplike(h8, h8.gen("x"))
    census = grouplike_census(h8, trials=5)
    assert census["a_powers_grouplike"] and census["extra_found"] == 0


def test_skew_primitive_dims(u2, ua54, h8):
    assert skew_primitives(u2, 1, 0).dim == 3
    assert skew_primitives(u2, 0, 0).dim == 0
    assert skew_primitives(ua54, 1, 0).dim == 3
    for v in (2, 3, 4, 5):
        assert skew_primitives(ua54, v, 0).dim == 1
    sp = skew_primitives(h8, 1, 0)
    assert sp.dim == 2 and len(sp.complement) == 1


def test_coradical_h1(h8, ua54, kz4):
    assert coradical_h1(h8)[0] == 8
    assert coradical_h1(h8, exhaustive=True)[0] == 8
    assert coradical_h1(ua54)[0] == 18
    assert coradical_h1(kz4)[0] == 4


def test_h8_integrals(h8):
    data = integrals(h8)
    expected = {h8.index(i, 1): ONE for i in range(4)}
    assert proportional(data.lambda_l, expected) is not None
    assert data.psi.images["a"] == -1 and data.psi.images["x"] == 0
    assert not data.unimodular
    assert data.formula_left and data.psi_formula


def test_ua54_integral_two_sided(ua54):
    data = integrals(ua54)
    expected = {ua54.index(i, 2, 2): ONE for i in range(6)}
    assert data.unimodular
    assert proportional(data.lambda_l, expected) is not None
    assert data.formula_two_sided


def test_group_algebra_integral(kz4):
    data = integrals(kz4)
    assert data.unimodular
    assert proportional(data.lambda_l, {kz4.index(i): ONE for i in range(4)}) is not None


def test_lemma13(h8, kz4, ua54):
    assert lemma13_check(h8, 1) == {"g": 1, "dim": 1, "matches_span": True}
    for g in range(1, 4):
        assert lemma13_check(kz4, g)["dim"] == 1
    assert lemma13_check(ua54, 1)["matches_span"]


def test_yx_commutation(ua54, u2):
    assert yx_commutation_check(ua54)
    assert yx_commutation_check(u2)
