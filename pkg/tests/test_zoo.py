import pytest

from oretower.analysis import centralizerCheck
from oretower.errors import GJMAConditionFailed, ImageNotInP, TowerNotWellFormed
from oretower.lang import check_involution, check_map, check_mutually_inverse, eval_expr
from oretower.zoo import (
    makeG,
    makeGf,
    makeGJMAWeylMaps,
    makeISPEnegWeyl,
    makeISPEQuantumPlane,
    makeISPEWeylMaps,
    makeMJ2,
    makeMq2,
    makeP,
    makeQuantumPlane,
    makeQuantumWeyl,
    makeRf,
    towers_identical,
)

BUNDLES = {
    "Rf(c^2)": lambda: makeRf("c^2"),
    "Rf(1)": lambda: makeRf(1),
    "Rf(0)": lambda: makeRf(0),
    "Oq(2)": lambda: makeQuantumPlane(2),
    "AW(1/3)": lambda: makeQuantumWeyl("1/3"),
    "Mq2(2)": lambda: makeMq2(2),
    "Mq2(3)": lambda: makeMq2(3),
    "Mq2(q)": lambda: makeMq2("q"),
    "MJ2": makeMJ2,
    "P(c^2,c)": lambda: makeP("c^2", "c"),
    "P(c^3,c^2)": lambda: makeP("c^3", "c^2"),
    "P(c,1)": lambda: makeP("c", "1"),
    "P(1,0)": lambda: makeP(1, 0),
    "Gf(c^2)": lambda: makeGf("c^2"),
    "Gf(c^3)": lambda: makeGf("c^3"),
    "Gf(c^3+c^2)": lambda: makeGf("c^3 + c^2"),
    "ISPEnegWeyl(c^3)": lambda: makeISPEnegWeyl("c^3"),
    "ISPEnegWeyl(-2)": lambda: makeISPEnegWeyl(-2),
    "ISPEplane(3,commute)": lambda: makeISPEQuantumPlane(3),
    "ISPEplane(-1,anti,c)": lambda: makeISPEQuantumPlane(-1, "anti", "c"),
}


@pytest.mark.parametrize("name", list(BUNDLES))
def test_bundle_is_self_consistent(name):
    B = BUNDLES[name]()
    for rep in B.self_check() + B.reports:
        assert rep.passed, str(rep)
    if B.tau is not None:
        assert check_involution(B.tau).passed
    for k, e in B.named.items():
        if k in ("z", "detq", "detJ", "v"):
            assert centralizerCheck(e).passed, k


def test_gf_c2_is_the_jordanian_algebra():
    assert towers_identical(makeGf("c^2").tower, makeMJ2().alternates["u"])


def test_gf_closed_forms_and_z():
    B = makeGf("c^3")
    T = B.tower
    b = dict(T.generator_binding(), g="c^2", h="2*c^2")
    assert T.skew[1].sigma["a"] == eval_expr("a + h", b, T)
    assert B.named["z"] == eval_expr("g*b + (g - u)*a - a^2", b, T)


@pytest.mark.parametrize("f", ["c^2", "c^3", "c^3 + c^2"])
def test_printed_abcd_relations_have_two_errata(f):
    B = makeGf(f)
    errata = B.data["abcd_errata"]
    assert len(errata) == 2
    assert any("d*a" in e for e in errata) and any("b*d" in e for e in errata)
    corrected = B.presentations["abcd"]
    from oretower.lang import check_relations, identity_map

    assert check_relations(corrected, identity_map(B.alternates["abcd"])).passed


def test_section_seven_example():
    G = makeG("c", "c", "-(1/2*u + a)")
    T = G.tower
    assert str(T.skew[1].sigma["a"]) == "a + 1"
    z2 = eval_expr("2*(c*b + c*a) + u*c", T.generator_binding(), T)
    assert centralizerCheck(z2).passed
    assert z2 == G.named["z"] * 2


def test_g_conditions():
    # theta = 0 gives the Ore extension P[b; sigma], which satisfies both conditions
    G0 = makeG("c^2", "c", "0")
    assert G0.named["z"] == G0.tower.coerce("c*b")
    with pytest.raises(GJMAConditionFailed) as err:
        makeG("c^2", "c", "u")
    assert str(err.value.residual) == "-4*c*u"
    with pytest.raises(ImageNotInP):
        makeG("c^2", "c", "inv(c)^2")
    with pytest.raises(ValueError):
        makeG("c^2", "c + 1", "0")


def test_anti_plane_needs_q_minus_one():
    with pytest.raises(TowerNotWellFormed) as err:
        makeISPEQuantumPlane(3, "anti", "c")
    assert "-8*c^2" in str(err.value)
    assert makeISPEQuantumPlane(3, "anti", 0).tower


def test_weyl_maps_ispe_example():
    d = makeISPEWeylMaps()
    assert check_map(d["Phi"]).passed and check_map(d["Psi"]).passed
    assert check_mutually_inverse(d["Phi"], d["Psi"]).passed
    lit = makeISPEWeylMaps(literal=True)
    assert not check_map(lit["Phi"]).passed


@pytest.mark.parametrize("f", ["c^2", "c^3"])
def test_weyl_maps_gjma(f):
    d = makeGJMAWeylMaps(f)
    assert check_map(d["Phi"]).passed and check_map(d["Psi"]).passed
    assert check_mutually_inverse(d["Phi"], d["Psi"], extra_source=d["extra"]).passed
    lit = makeGJMAWeylMaps(f, literal=True)
    assert not check_map(lit["Phi"]).passed


def test_p_named_elements():
    P = makeP("c^2", "c")
    L = P.alternates["loc"]
    assert P.named["v"] == L.gen("c").inverse() * L.gen("u")
    assert "v" not in makeP("c^2", "1").named
