import copy

from hopfkit.cyclo import ONE, ExactMatrix
from hopfkit.hopf import (HopfData, antipode_inverse, build, build_cached, delta_power_identity, load_cache,
                          q_binomial_identity, verify_hopf_axioms)
from hopfkit.presentations import make_presentation


def test_h8_products(h8):
    a, x = h8.gen("a"), h8.gen("x")
    one = h8.one()
    assert h8.multiply(x, x) == {h8.index(2): ONE, h8.index(0): -ONE}
    assert h8.multiply(x, a) == {h8.index(1, 1): -ONE}
    assert h8.multiply(a, h8.power(a, 3)) == one
    v = {h8.index(3, 1): ONE * 5}
    assert h8.multiply(one, v) == v


def test_h8_coproduct_of_x_squared(h8):
    # (x (x) a + 1 (x) x)^2 = x^2 (x) a^2 + 1 (x) x^2, with x^2 = a^2 - 1
    x2 = h8.multiply(h8.gen("x"), h8.gen("x"))
    expected = {}
    for i, c in x2.items():
        expected[i, h8.index(2)] = c
        expected[h8.index(0), i] = expected.get((h8.index(0), i), 0) + c
    expected = {k: v for k, v in expected.items() if v}
    assert h8.comultiply(x2) == expected


def test_h8_antipode_of_x(h8):
    # S(x) = -q^{-nu} a^{-nu} x = a^3 x for q = -1
    assert h8.S(h8.gen("x")) == {h8.index(3, 1): ONE}


def test_tensor_products(h8):
    i0, ia, ix, iax = h8.index(0), h8.index(1), h8.index(0, 1), h8.index(1, 1)
    one = {(i0, i0): ONE}
    u = {(ix, ia): ONE}
    assert h8.tensor_multiply(one, u) == u
    assert h8.tensor_multiply({(ix, ia): ONE}, {(i0, ix): ONE}) == {(ix, iax): ONE}
    # (x (x) a)^2 = (a^2 - 1) (x) a^2
    assert h8.tensor_multiply(u, u) == {(h8.index(2), h8.index(2)): ONE, (i0, h8.index(2)): -ONE}


def test_axioms_pass(h8, kz4, u2, h4):
    for h in (h8, kz4, u2, h4):
        rep = verify_hopf_axioms(h, stop_early=False)
        assert rep.passed, rep.witnesses


def test_axioms_ua54(ua54):
    assert ua54.dim == 54
    assert verify_hopf_axioms(ua54).passed


def test_tampered_antipode_detected(h8):
    bad = copy.copy(h8)
    bad.antipode = list(h8.antipode)
    ix = h8.index(0, 1)
    bad.antipode[ix] = {h8.index(3, 1): ONE}  # the correct value
    assert verify_hopf_axioms(bad).passed
    bad.antipode[ix] = {h8.index(3, 1): -ONE}
    rep = verify_hopf_axioms(bad, stop_early=False)
    assert rep.checks["antipode"] is False
    assert rep.witnesses["antipode"] == "b = x"


def test_antipode_inverse(kz4, h8, u2):
    S = kz4.antipode_matrix()
    assert antipode_inverse(kz4) == S
    for h in (h8, u2):
        S = h.antipode_matrix()
        assert antipode_inverse(h) @ S == ExactMatrix.identity(h.dim)
    S = u2.antipode_matrix()
    assert S @ S @ S @ S == ExactMatrix.identity(u2.dim)


def test_q_binomial_and_delta_power(h8, ua54):
    assert q_binomial_identity(h8)
    assert q_binomial_identity(ua54)
    assert delta_power_identity(make_presentation("HA", n=3, N=6, nu=1, q=(3, 1), alpha=1))


def test_cache_round_trip(tmp_path):
    p = make_presentation("U", N=2, nu=1, omega=(2, 1))
    h = build_cached(p, str(tmp_path))
    hit = load_cache(p, str(tmp_path))
    assert hit is not None
    assert hit.to_json() == h.to_json() == build(p).to_json()


def test_json_round_trip(h8):
    h2 = HopfData.from_json(h8.to_json())
    assert h2.to_json() == h8.to_json()
