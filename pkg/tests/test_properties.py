"""Property-based checks over randomly drawn valid presentations."""

import math
import random
from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from hopfkit.cyclo import FieldElement, nth_root_in_field, zeta
from hopfkit.dual import dualize, pairing_compatibility
from hopfkit.hopf import build, delta_power_identity, q_binomial_identity, verify_hopf_axioms
from hopfkit.invariants import characters, integrals, expected_character_count, yx_commutation_check
from hopfkit.presentations import InvalidParams, emit_rules, make_presentation

SETTINGS = dict(deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


@st.composite
def h_params(draw, max_dim=32):
    n = draw(st.sampled_from([2, 3, 4]))
    N = n * draw(st.integers(1, 4))
    nu = draw(st.integers(1, N - 1))
    e = draw(st.sampled_from([k for k in range(1, n) if math.gcd(k, n) == 1]))
    alpha = draw(st.sampled_from([0, 0, 1, 2, -1, Fraction(1, 2)]))
    try:
        p = make_presentation("HA" if alpha else "H", n=n, N=N, nu=nu, q=(n, e), alpha=alpha or None)
    except InvalidParams:
        assume(False)
    assume(p.dim <= max_dim)
    return p


@st.composite
def u_params(draw, max_dim=54):
    n = draw(st.sampled_from([2, 3]))
    N = n * draw(st.integers(1, 3))
    nu = draw(st.integers(1, N - 1))
    abc = draw(st.tuples(*[st.sampled_from([0, 1, 2, -1])] * 3))
    try:
        p = make_presentation("UA", n=n, N=N, nu=nu, q=(n, 1), alpha=abc[0], beta=abc[1], gamma=abc[2])
    except InvalidParams:
        assume(False)
    assume(p.dim <= max_dim)
    return p



def build_any(p):
    return build(p)


# -- field arithmetic --------------------------------------------------------

elements = st.builds(lambda cs, d: FieldElement.from_coeffs(12, [Fraction(c, d) for c in cs]),
                     st.lists(st.integers(-5, 5), min_size=4, max_size=4), st.integers(1, 4))


@settings(max_examples=60, **SETTINGS)
@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if x:
        assert x * x.inverse() == 1


@settings(max_examples=40, **SETTINGS)
@given(st.integers(0, 11), st.fractions(min_value=-20, max_value=20, max_denominator=9), st.sampled_from([2, 3, 4]))
def test_nth_root_round_trip(k, c, n):
    # radicands of the supported shape: root of unity times rational
    assume(c != 0)
    x = zeta(12, k) * c
    r = nth_root_in_field(x ** n, n, 48)
    assert r is not None and r ** n == x ** n


# -- presentations and rewriting ------------------------------------------------

@settings(max_examples=25, **SETTINGS)
@given(st.one_of(h_params(), u_params()), st.integers(0, 2 ** 32))
def test_normal_form_strategy_independence(p, seed):
    rs = emit_rules(p)
    rng = random.Random(seed)
    letters = p.letters + "BD"
    for _ in range(200):
        e = {}
        for _ in range(rng.randint(1, 3)):
            w = "".join(rng.choice(letters) for _ in range(rng.randint(0, 7)))
            e[w] = e.get(w, 0) + rng.randint(-3, 3)
        e = {w: c for w, c in e.items() if c}
        assert rs.normal_form(e) == rs.random_normal_form(e, rng)


@settings(max_examples=25, **SETTINGS)
@given(st.one_of(h_params(), u_params()))
def test_confluence_and_basis_size(p):
    rs = emit_rules(p)
    assert rs.check_confluence().confluent
    assert len(rs.irreducible_words()) == p.dim


# -- Hopf structure ---------------------------------------------------------------

@settings(max_examples=15, **SETTINGS)
@given(h_params())
def test_h_family_axioms_and_identities(p):
    h = build_any(p)
    assert verify_hopf_axioms(h).passed
    if p.r > 1:
        assert q_binomial_identity(h)
    assert delta_power_identity(p)


@settings(max_examples=10, **SETTINGS)
@given(u_params(max_dim=32))
def test_u_family_axioms_and_commutation(p):
    h = build_any(p)
    assert verify_hopf_axioms(h).passed
    assert yx_commutation_check(h)
    assert q_binomial_identity(h)


@settings(max_examples=15, **SETTINGS)
@given(h_params())
def test_expected_character_count(p):
    h = build_any(p)
    count = len(characters(h))
    assert count == expected_character_count(p.N, p.nu, p.n, not p.alpha)
    assert count <= p.N and p.N % count == 0


@settings(max_examples=12, **SETTINGS)
@given(st.one_of(h_params(), u_params(max_dim=32)))
def test_integral_spaces_one_dimensional(p):
    data = integrals(build_any(p))
    assert len(data.left_basis) == 1 and len(data.right_basis) == 1
    if p.has_y:
        assert data.unimodular and data.formula_two_sided
    elif p.r > 1:
        assert data.formula_left and data.psi_formula


# -- duals ----------------------------------------------------------------------

@settings(max_examples=12, **SETTINGS)
@given(st.one_of(h_params(max_dim=24), u_params(max_dim=24)))
def test_pairing_and_double_dual(p):
    h = build_any(p)
    hd = dualize(h)
    assert pairing_compatibility(h, hd)
    dd = dualize(hd)
    assert dd.mult == h.mult and dd.comult == h.comult
    assert dd.antipode == h.antipode and dd.counit == h.counit and dd.unit == h.unit


def test_zeta_is_primitive():
    assert zeta(12) ** 6 == -1


# -- isomorphism classification -------------------------------------------------

@settings(max_examples=10, **SETTINGS)
@given(st.sampled_from([1, 2, 3, -1]), st.sampled_from([1, 2, -2]), st.sampled_from([0, 1, 3]),
       st.sampled_from([1, 2, -1, Fraction(1, 2)]), st.sampled_from([1, 3, Fraction(-1, 3)]))
def test_rescaled_presentations_are_isomorphic(alpha, beta, gamma, c, d):
    from hopfkit.atlas import iso_construct
    n = 3
    p1 = make_presentation("UA", n=n, N=6, nu=1, q=(3, 1), alpha=alpha, beta=beta, gamma=gamma)
    # x -> c x, y -> d y turns U_{alpha,beta,gamma} into U_{alpha/c^n, beta/d^n, gamma/(c d)}
    p2 = make_presentation("UA", n=n, N=6, nu=1, q=(3, 1), alpha=Fraction(alpha) / c ** n,
                           beta=Fraction(beta) / d ** n, gamma=Fraction(gamma) / (c * d))
    res = iso_construct(p1, p2)
    assert res.kind == "isomorphic"
    assert res.map.accepted and res.map.bijective


@settings(max_examples=10, **SETTINGS)
@given(st.lists(st.integers(1, 30), min_size=2, max_size=4, unique=True))
def test_distinct_invariants_certify_distinct(alphas):
    from hopfkit.atlas import iso_construct
    ps = [make_presentation("UA", n=3, N=6, nu=1, q=(3, 1), alpha=a, beta=1, gamma=1) for a in alphas]
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            assert iso_construct(ps[i], ps[j]).kind == "distinct"
