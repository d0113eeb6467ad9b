import pytest

from conftest import cached
from hopfkit.cyclo import ONE, FieldElement
from hopfkit.dual import (NotApplicable, check_hopf_map, dual_exact_sequence_check, dual_generators, dualize,
                          exact_sequence_check, pairing_compatibility, self_duality_search, subalgebra_closure,
                          u_selfdual_cop_check)
from hopfkit.hopf import verify_hopf_axioms, vscale
from hopfkit.invariants import characters, is_grouplike


def test_dual_of_h8(h8):
    hd = dualize(h8)
    assert hd.dim == 8
    assert verify_hopf_axioms(hd).passed
    assert pairing_compatibility(h8, hd)
    dd = dualize(hd)
    assert dd.mult == h8.mult and dd.comult == h8.comult and dd.antipode == h8.antipode


def test_dual_grouplikes_are_characters(h8):
    hd = dualize(h8)
    chars = characters(h8)
    assert len(chars) == 2
    assert all(is_grouplike(hd, c.as_vector()) for c in chars)


def test_dual_generators_h4(h4):
    dg = dual_generators(h4)
    assert dg.passed, dg.checks
    assert dg.mu == 1
    hd = dg.dual
    assert hd.multiply(dg.X, dg.A) == vscale(hd.multiply(dg.A, dg.X), -ONE)
    assert not hd.multiply(dg.X, dg.X)


def test_dual_generators_b4(b4):
    dg = dual_generators(b4)
    assert dg.passed, dg.checks
    assert dg.mu == 2
    t = dg.target
    assert (t.n, t.N, t.nu, t.q.M, t.q.e) == (4, 4, 2, 4, 1)


def test_dual_generators_not_applicable(kz4, h8):
    with pytest.raises(NotApplicable):
        dual_generators(kz4)
    with pytest.raises(NotApplicable):
        dual_generators(h8)


def test_rescaling_map():
    src = cached("HA", n=2, N=4, nu=1, q=-1, alpha=1)
    dst = cached("HA", n=2, N=4, nu=1, q=-1, alpha=4)
    res = check_hopf_map(src, dst, {"a": dst.gen("a"), "x": vscale(dst.gen("x"), FieldElement.rational(1) / 2)})
    assert res.accepted and res.bijective
    wrong = check_hopf_map(src, dst, {"a": dst.gen("a"), "x": dst.gen("x")})
    assert not wrong.accepted


def test_identity_map(h8):
    res = check_hopf_map(h8, h8, {"a": h8.gen("a"), "x": h8.gen("x")})
    assert res.accepted and res.bijective


def test_h8_not_self_dual(h8):
    res = self_duality_search(h8)
    assert not res.self_dual
    assert not res.count_test
    assert res.tried >= 1


def test_self_dual_examples(h4, kz4):
    assert self_duality_search(h4).self_dual
    assert self_duality_search(kz4).self_dual


def test_closures(h8):
    res = subalgebra_closure(h8, [h8.gen("a")])
    assert res.dim == 4 and res.is_hopf_subalgebra
    # {x} closes up to span{1, a^2, x, a^2 x}, but Delta(x) = x (x) a + 1 (x) x leaves it
    res = subalgebra_closure(h8, [h8.gen("x")])
    assert res.dim == 4
    for v in ({h8.index(0): ONE}, {h8.index(2): ONE}, h8.gen("x"), {h8.index(2, 1): ONE}):
        assert res.space.contains(v)
    assert not res.is_hopf_subalgebra


def test_sub_hopf_algebra_generated_by_power_of_a_and_x():
    # H_{4,z4,8,2} with s = 4: k<a^2, x> is a copy of H_{2,-1,4,1}
    h = cached("H", n=4, N=8, nu=2, q=(4, 1))
    res = subalgebra_closure(h, [h.power(h.gen("a"), 2), h.gen("x")])
    small = cached("H", n=2, N=4, nu=1, q=-1)
    assert res.is_hopf_subalgebra and res.dim == small.dim == 8
    f = check_hopf_map(small, h, {"a": h.power(h.gen("a"), 2), "x": h.gen("x")})
    assert f.accepted and f.injective


def test_u_selfdual_cop(u2):
    res = u_selfdual_cop_check(u2)
    assert res.accepted and res.bijective
    u6 = cached("U", N=6, nu=3, omega=(6, 1))
    assert u_selfdual_cop_check(u6).accepted
    with pytest.raises(NotApplicable):
        u_selfdual_cop_check(cached("U", N=4, nu=1, omega=(4, 1)))


def test_exact_sequences(h8):
    es = exact_sequence_check(h8)
    assert es["K_dim"] == es["K_expected"] == 2
    assert es["central"] and es["K_hopf"] and es["map_accepted"] and es["surjective"] and es["kernel_is_HK+"]
    q = es["quotient"]
    assert (q["family"], q["n"], q["N"], q["nu"]) == ("H", 2, 2, 1)
    ds = dual_exact_sequence_check(h8)
    assert ds["accepted"] and ds["injective"] and ds["image_hopf"]
    assert ds["index"] == ds["expected_index"] == 2
