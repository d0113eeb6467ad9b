from hopfkit.cyclo import ONE
from hopfkit.presentations import emit_rules, make_presentation
from hopfkit.rewrite import Rule, RewriteSystem


def test_normal_forms_h8():
    rs = emit_rules(make_presentation("HA", n=2, N=4, nu=1, q=-1, alpha=1))
    assert rs.normal_form("XA") == {"AX": -ONE}
    assert rs.normal_form("XX") == {"AA": ONE, "": -ONE}
    assert rs.normal_form("BD") == {"A": ONE}


def test_normal_form_u():
    rs = emit_rules(make_presentation("UA", n=2, N=4, nu=1, q=-1, alpha=0, beta=0, gamma=1))
    assert rs.normal_form("YX") == {"XY": -ONE, "AA": ONE, "": -ONE}


def test_confluence_h_family_named():
    rep = emit_rules(make_presentation("HA", n=3, N=6, nu=1, q=(3, 1), alpha=2)).check_confluence()
    assert rep.confluent
    assert rep.named == {"XnA": True}


def test_confluence_u_family_named():
    rep = emit_rules(make_presentation("UA", n=3, N=6, nu=1, q=(3, 1), alpha=1, beta=1, gamma=1)).check_confluence()
    assert rep.confluent
    assert rep.named == {"XnA": True, "YXn": True}


def test_tampered_power_rule_is_not_confluent():
    p = make_presentation("HA", n=2, N=4, nu=1, q=-1, alpha=1)
    good = emit_rules(p)
    rules = [r for r in good.rules if r.lhs != "XX"]
    rules.append(Rule.make("XXX", {"AA": ONE, "": -ONE}))
    bad = RewriteSystem(rules, alphabet=good.alphabet, weights=good.weights)
    rep = bad.check_confluence()
    assert not rep.confluent
    w = rep.unresolved[0]
    assert w.word == "XXXA"
    assert w.branch1 != w.branch2


def test_irreducible_word_counts():
    cases = [
        make_presentation("H", n=1, N=5, nu=1, q=1),
        make_presentation("H", n=2, N=4, nu=1, q=-1),
        make_presentation("HA", n=2, N=4, nu=1, q=-1, alpha=1),
        make_presentation("HA", n=3, N=9, nu=1, q=(3, 1), alpha=1),
        make_presentation("U", N=2, nu=1, omega=(2, 1)),
        make_presentation("U", N=6, nu=3, omega=(6, 1)),
        make_presentation("UA", n=3, N=6, nu=1, q=(3, 1), alpha=1, beta=1, gamma=1),
    ]
    for p in cases:
        rs = emit_rules(p)
        assert len(rs.irreducible_words()) == p.dim
        assert rs.check_confluence().confluent
