import pytest

from hopfkit.cyclo import ONE, zeta
from hopfkit.presentations import InvalidParams, Presentation, emit_rules, make_presentation


def _rules(p):
    return {r.lhs: r.rhs_dict for r in emit_rules(p).rules}


def test_h8_presentation():
    p = make_presentation("HA", n=2, N=4, nu=1, q=-1, alpha=1)
    assert p.dim == 8 and p.r == 2
    assert _rules(p) == {
        "AAAA": {"": ONE},
        "XA": {"AX": -ONE},
        "XX": {"AA": ONE, "": -ONE},
        "B": {"A": ONE},
        "D": {"": ONE},
    }


def test_invalid_when_N_divides_nu_n():
    with pytest.raises(InvalidParams):
        make_presentation("HA", n=2, N=2, nu=1, q=-1, alpha=1)


def test_ua_dim():
    p = make_presentation("UA", n=3, N=6, nu=1, q=(3, 1), alpha=1, beta=1, gamma=1)
    assert p.dim == 54


def test_group_algebra_rules():
    p = make_presentation("H", n=1, N=5, nu=2, q=1)
    assert _rules(p) == {"AAAAA": {"": ONE}, "B": {"AA": ONE}, "D": {"": ONE}, "X": {}}


def test_u_rules():
    p = make_presentation("U", N=2, nu=1, omega=(2, 1))
    rules = _rules(p)
    assert len(rules) == 8
    # a^2 = 1 collapses a^{2 nu} - 1 to zero
    assert rules["YX"] == {"XY": -ONE}
    # the same relation with N = 4 keeps the a^2 - 1 tail
    p4 = make_presentation("UA", n=2, N=4, nu=1, q=-1, alpha=0, beta=0, gamma=1)
    assert _rules(p4)["YX"] == {"XY": -ONE, "AA": ONE, "": -ONE}


@pytest.mark.parametrize("kw", [
    dict(family="H", n=2, N=4, nu=1, q=(3, 1)),     # q of wrong order
    dict(family="H", n=3, N=4, nu=1, q=(3, 1)),     # n does not divide N
    dict(family="H", n=2, N=4, nu=4, q=-1),         # nu out of range
    dict(family="U", N=4, nu=2, omega=(4, 1)),      # N | nu^2
    dict(family="U", N=4, nu=1, omega=(4, 2)),      # omega not primitive
    dict(family="Z", N=4, nu=1),
])
def test_invalid(kw):
    fam = kw.pop("family")
    with pytest.raises(InvalidParams):
        make_presentation(fam, **kw)


def test_json_round_trip_and_hash():
    for p in (make_presentation("HA", n=2, N=4, nu=1, q=-1, alpha=1),
              make_presentation("U", N=6, nu=3, omega=(6, 1)),
              make_presentation("UA", n=3, N=6, nu=1, q=(3, 1), alpha=2, beta=1, gamma=zeta(3))):
        p2 = Presentation.from_json(p.to_json())
        assert p2 == p
        assert p2.content_hash() == p.content_hash()
