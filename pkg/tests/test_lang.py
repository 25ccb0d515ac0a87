from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oretower.errors import NotInvertible, ParseError, UnboundName
from oretower.lang import (
    Add,
    GeneratorMap,
    Mul,
    Name,
    Num,
    Pow,
    Presentation,
    check_involution,
    check_ispe,
    check_map,
    check_mutually_inverse,
    check_relations,
    eval_expr,
    identity_map,
    parse,
    parse_relation,
    to_text,
)
from oretower.zoo import makeISPEnegWeyl, makeP, makeRf

leaves = st.one_of(
    st.fractions(min_value=0, max_value=9, max_denominator=3).map(Num),
    st.sampled_from(["a", "c", "u"]).map(Name),
)


def _tree(children):
    return st.one_of(
        st.lists(st.tuples(st.sampled_from([1, -1]), children), min_size=2, max_size=3).map(
            lambda ts: Add(tuple(ts))),
        st.lists(children, min_size=2, max_size=3).map(lambda fs: Mul(tuple(fs))),
        st.tuples(children, st.integers(0, 3)).map(lambda p: Pow(*p)),
    )


exprs = st.recursive(leaves, _tree, max_leaves=8)


@given(exprs)
def test_print_parse_round_trip(e):
    text = to_text(e)
    assert to_text(parse(text)) == text


@given(exprs)
def test_printed_text_evaluates_identically(e):
    t = makeP("c^2", "c").tower
    b = t.generator_binding()
    assert eval_expr(parse(to_text(e)), b, t) == eval_expr(e, b, t)


def test_precedence_and_unary_minus():
    t = makeRf("c^2").tower
    b = t.generator_binding()
    assert eval_expr("-c^2", b, t) == -(t.gen("c") ** 2)
    assert eval_expr("2*c - c*3", b, t) == -t.gen("c")
    assert eval_expr("a*c - c*a", b, t) == t.gen("c") ** 2
    assert eval_expr("1/2*c", b, t) == t.gen("c") * Fraction(1, 2)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("a * (c + ")
    assert err.value.line == 1 and err.value.column == 10
    with pytest.raises(ParseError) as err:
        parse("a\n  + $")
    assert (err.value.line, err.value.column) == (2, 5)
    with pytest.raises(ParseError):
        parse("c^-1")


def test_relation_parsing():
    r = parse_relation("a*c = c*a + c^2")
    t = makeRf("c^2").tower
    assert eval_expr(r, t.generator_binding(), t).is_zero()


def test_unbound_names_and_inverses():
    t = makeP("c^2", "c").alternates["loc"]
    b = t.generator_binding()
    with pytest.raises(UnboundName):
        eval_expr("x + c", b, t)
    assert eval_expr("inv(c)*c", b, t) == t.one()
    with pytest.raises(NotInvertible):
        eval_expr("inv(a)", b, t)


def test_lazy_constants_and_cycles():
    t = makeRf("c^2").tower
    b = dict(t.generator_binding(), f="c^2", g="f + 1")
    assert eval_expr("g", b, t) == t.coerce("c^2 + 1")
    with pytest.raises(UnboundName):
        eval_expr("x", dict(b, x="y", y="x"), t)


def test_presentation_rejects_undeclared_names():
    with pytest.raises(UnboundName):
        Presentation.from_text("bad", ("a", "c"), ["a*c = c*a + z"])


def test_wrong_relation_reports_residual():
    R = makeRf("c^2")
    pres = Presentation.from_text("wrong", R.tower.generators, ["a*c = c*a"])
    rep = check_relations(pres, identity_map(R.tower))
    assert not rep.passed
    assert str(rep.residual) == "c^2"


def test_maps_compose_and_invert():
    P = makeP("c^2", "c")
    f, g = P.maps["to_ispe"], P.maps["from_ispe"]
    assert check_map(f).passed and check_map(g).passed
    assert check_mutually_inverse(f, g).passed
    gf = g.compose(f)
    for x in P.tower.generators:
        assert gf(P.tower.gen(x)) == P.tower.gen(x)


def test_non_homomorphism_is_caught():
    R = makeRf("c^2").tower
    m = GeneratorMap(R, R, {"c": "c", "a": "2*a"}, "bad")
    rep = check_map(m)
    assert not rep.passed


def test_involution_and_ispe_reports():
    P = makeP("c^2", "c")
    assert check_involution(P.tau).passed
    rep = check_ispe(P.alternates["ispe"], P.maps["tau_ispe"])
    assert rep.passed and rep.data["u_normal"] and rep.data["birational_hypotheses"]
    W = makeISPEnegWeyl(1)
    rep = check_ispe(W.tower, W.tau)
    assert rep.passed and not rep.data["u_normal"]


def test_involution_check_rejects_non_involution():
    R = makeRf("c^2").tower
    m = GeneratorMap(R, R, {"c": "c", "a": "a - c"}, "shift")
    rep = check_involution(m)
    assert not rep.passed
