import pytest

from conftest import cached
from hopfkit.cyclo import RootOfUnity, zeta
from hopfkit.dual import NotApplicable
from hopfkit.reps import (dual_pointedness, is_irreducible, make_V_omega, matrix_coefficients,
                          regular_module, simple_subcoalgebra_census, trivial_module, x_part)


def test_v_omega_h8(h8):
    m = make_V_omega(h8, RootOfUnity(4, 1))
    assert m.dim == 2
    assert m.beta * m.beta == -2
    assert m.beta in (zeta(8) - zeta(8, 7), zeta(8, 7) - zeta(8))
    assert m.satisfies(h8.presentation)
    assert is_irreducible(m).irreducible


def test_v_omega_needs_alpha(b4):
    with pytest.raises(NotApplicable):
        make_V_omega(b4, RootOfUnity(4, 1))


def test_regular_module_of_kz2_is_reducible():
    kz2 = cached("H", n=1, N=2, nu=1, q=1)
    rep = is_irreducible(regular_module(kz2))
    assert not rep.irreducible
    (w,) = rep.witness
    assert w[0] == w[1] != 0


def test_one_dimensional_modules_are_irreducible(h8):
    assert is_irreducible(trivial_module(h8)).irreducible


def test_matrix_coefficients_h8(h8):
    mc = matrix_coefficients(h8, make_V_omega(h8, RootOfUnity(4, 1)))
    assert mc.dim == 4 and mc.subcoalgebra and mc.simple
    triv = matrix_coefficients(h8, trivial_module(h8))
    assert triv.dim == 1
    (eps,) = triv.basis
    assert [eps.get(k, 0) for k in range(8)] == [h8.counit[k] for k in range(8)]


def test_census_h8(h8):
    census = simple_subcoalgebra_census(h8)
    assert census["count"] == 1 and census["dim"] == 4 and census["complete"]


def test_ua_x_part():
    u = cached("UA", n=3, N=6, nu=1, q=(3, 1), alpha=4, beta=1, gamma=1)
    p = x_part(u.presentation)
    assert p.family == "HA" and p.dim == 18
    # alpha = 4 makes alpha(w^3 - 1) = -8 a cube
    xp = cached("HA", n=3, N=6, nu=1, q=(3, 1), alpha=4)
    mc = matrix_coefficients(xp, make_V_omega(u.presentation, RootOfUnity(6, 1)))
    assert mc.dim == 9 and mc.simple


def test_pointedness(h8, b4, kz4):
    assert dual_pointedness(h8).to_json()["verdict"] == "not_pointed"
    rep = dual_pointedness(b4)
    assert rep.pointed
    assert rep.certificate["power_dims"][-1] == 0
    assert dual_pointedness(kz4).pointed


@pytest.mark.parametrize("kw", [
    dict(n=3, N=6, nu=1, q=(3, 1), alpha=4),
    dict(n=4, N=8, nu=1, q=(4, 1), alpha=8),
    # alpha(w^3 - 1) = 1 for w = zeta_9
    dict(n=3, N=9, nu=1, q=(3, 1), alpha=1 / (zeta(3) - 1)),
])
def test_not_pointed_alpha_nonzero(kw):
    h = cached("HA", **kw)
    rep = dual_pointedness(h)
    assert rep.pointed is False
    assert rep.certificate["subcoalgebra_dim"] == kw["n"] ** 2
