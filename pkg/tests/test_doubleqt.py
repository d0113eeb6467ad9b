import pytest

from conftest import cached
from hopfkit.cyclo import ONE, RootOfUnity
from hopfkit.dual import NotApplicable, check_hopf_map
from hopfkit.doubleqt import (DEFAULT_CONVENTION, LITERAL_FORMULA, RMatrix, build_double, canonical_R,
                              double_embeddings, double_relation_check, group_ansatz_R, minimality_check,
                              pushforward_R, pushforward_to_U, qt_screen, qt_search_group_ansatz, verify_qt)
from hopfkit.hopf import HopfData, verify_hopf_axioms


@pytest.fixture(scope="module")
def dh4(h4):
    return build_double(h4)


def test_double_h4_axioms(dh4):
    assert dh4.dim == 16
    assert verify_hopf_axioms(dh4, stop_early=False).passed
    assert double_embeddings(dh4) == {"i_H": True, "i_dual": True}


def test_double_h4_literal_formula_convention_is_hopf(h4):
    dd = build_double(h4, LITERAL_FORMULA)
    assert verify_hopf_axioms(dd).passed
    assert double_embeddings(dd) == {"i_H": True, "i_dual": True}


def test_cross_product_matches_sweedler_expansion(h4, dh4):
    # (e # a)(p # 1) = sum p(S(a1) ? a3) # a2, expanded directly from Delta twice
    d = h4.dim
    for a in range(d):
        for p in range(d):
            expected = {}
            for (i, j), c in h4.comult[a].items():
                for (j1, j2), c2 in h4.comult[j].items():
                    s1 = h4.S({i: ONE})
                    for z in range(d):
                        val = h4.multiply(h4.multiply(s1, {z: ONE}), {j2: ONE}).get(p)
                        if val:
                            key = z * d + j1
                            expected[key] = expected.get(key, 0) + c * c2 * val
            expected = {k: v for k, v in expected.items() if v}
            got = dh4.multiply(dh4.i_H({a: ONE}), dh4.i_dual({p: ONE}))
            assert got == expected


def test_double_kz2():
    kz2 = cached("H", n=1, N=2, nu=1, q=1)
    dd = build_double(kz2)
    assert dd.dim == 4
    for i in range(4):
        for j in range(4):
            assert dd.mult[i][j] == dd.mult[j][i]
        assert dd.comult[i] == {(b, a): c for (a, b), c in dd.comult[i].items()}
    R, orders = canonical_R(dd)
    assert verify_qt(dd, R).passed
    # both slot orders work when everything commutes
    assert orders == {"H_first": True, "dual_first": True}


def test_canonical_R_h4(dh4):
    R, orders = canonical_R(dh4)
    assert verify_qt(dh4, R).passed
    assert sum(orders.values()) == 1


def test_verify_qt_examples(kz4, h8):
    assert verify_qt(kz4, group_ansatz_R(kz4, 1)).passed
    i0 = h8.index(0)
    rep = verify_qt(h8, {(i0, i0): ONE})
    assert not rep.passed
    assert rep.checks["QT.5"] is False and rep.witnesses["QT.5"] == "h = x"


def test_qt_search(h4, h8, kz4, u2):
    assert qt_search_group_ansatz(h4).passing == [1]
    assert qt_search_group_ansatz(h8).passing == []
    assert qt_search_group_ansatz(kz4).passing == [0, 1, 2, 3]
    assert qt_search_group_ansatz(u2).passing == [1]
    for h in (h4, h8, kz4, u2):
        res = qt_search_group_ansatz(h)
        assert set(res.passing) <= set(res.screen)


def test_qt_screen_vacuous_for_group_algebra(kz4):
    assert all(qt_screen(kz4, l) for l in range(4))


def test_minimality(h4, dh4):
    rep = minimality_check(h4, group_ansatz_R(h4, 1))
    assert not rep.minimal and rep.rank == 2 and rep.generated_dim == 2
    R, _ = canonical_R(dh4)
    rep = minimality_check(dh4, R)
    assert rep.minimal and rep.generated_dim == 16


def test_relation_in_double_h4(h4):
    res = double_relation_check(h4, RootOfUnity(2, 1))
    assert res["holds"] and res["closed_form_holds"]
    assert res["omega_nu2_is_minus_one"] and res["q_equals_omega_nu"]


def test_relation_fails_with_the_other_convention(h4):
    res = double_relation_check(h4, RootOfUnity(2, 1), LITERAL_FORMULA)
    assert not res["holds"]


def test_relation_in_double_b4_closed_form(b4):
    # the closed form q^nu X#x - A^mu # a^nu + e#1 holds; the stated right side does not
    res = double_relation_check(b4, RootOfUnity(4, 1))
    assert res["closed_form_holds"]
    assert not res["holds"]
    assert not res["omega_nu2_is_minus_one"]


def test_relation_not_applicable(kz4, h8):
    with pytest.raises(NotApplicable):
        double_relation_check(kz4)
    with pytest.raises(NotApplicable):
        double_relation_check(h8)


def test_pushforward_to_u(h4, u2):
    res = pushforward_to_U(h4, u2)
    assert res["found"]
    assert res["m"] == 1 and res["beta"] == -1
    assert res["qt"].passed
    assert res["minimal"].minimal and res["minimal"].generated_dim == 8


def test_pushforward_identity(dh4):
    R, _ = canonical_R(dh4)
    f = check_hopf_map(dh4, dh4, dict(dh4.generators))
    assert f.accepted and f.bijective
    R2, rep = pushforward_R(f, dh4, R)
    assert R2.R == R.R and rep.passed


def test_pushforward_counit_collapse(h4):
    # the one-dimensional Hopf algebra k, with a -> 1 and x -> 0
    k = HopfData(1, [[{0: ONE}]], [{(0, 0): ONE}], [{0: ONE}], [ONE], {0: ONE}, ["1"])
    f = check_hopf_map(h4, k, {"a": {0: ONE}, "x": {}})
    assert f.accepted and f.surjective
    R2, rep = pushforward_R(f, k, group_ansatz_R(h4, 1))
    assert R2.R == {(0, 0): ONE} and rep.passed


def test_default_convention_name():
    assert DEFAULT_CONVENTION.name == "dual-op"
    assert isinstance(RMatrix({}, "x"), RMatrix)
