"""Constructors for the algebras studied here, bundled with distinguished
elements, involutions and the consistency checks each construction owes."""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GJMAConditionFailed, ImageNotInP, TowerNotWellFormed
from .exactnum import MPoly, split_rational_roots
from .lang import (
    GeneratorMap,
    Presentation,
    check_involution,
    check_map,
    check_mutually_inverse,
    check_relations,
    eval_expr,
    identity_map,
    parse_poly,
)
from .reports import CheckReport
from .tower import OreTower, check_tower_wellformed, clear_denominators

C = ("c",)


@dataclass
class AlgebraBundle:
    name: str
    tower: OreTower
    presentation: Presentation
    named: dict = field(default_factory=dict)
    tau: GeneratorMap = None
    provenance: str = ""
    alternates: dict = field(default_factory=dict)
    presentations: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    reports: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def towers(self):
        out = {"": self.tower}
        out.update(self.alternates)
        return out

    def binding(self, tower=None):
        """Generators of ``tower`` plus every named element that lives there."""
        tower = tower or self.tower
        b = tower.generator_binding()
        for k, e in self.named.items():
            if e.tower is tower:
                b[k] = e
            elif e.tower.generators == tower.generators:
                try:
                    b[k] = tower.convert(e)
                except Exception:
                    pass
        return b

    def self_check(self):
        """Presentation relations in the primary tower (and alternates)."""
        reps = [check_relations(self.presentation, identity_map(self.tower), f"relations {self.name}")]
        for alt, pres in self.presentations.items():
            t = self.alternates[alt]
            reps.append(check_relations(pres, identity_map(t), f"relations {self.name}.{alt}"))
        return reps


# ---------------------------------------------------------------------------
# helpers


def cpoly(f):
    """Coerce to a polynomial in the single variable c."""
    if isinstance(f, MPoly):
        used = {v for exp in f.terms for v, k in zip(f.variables, exp) if k}
        if used - {"c"}:
            raise ValueError(f"{f} is not a polynomial in c alone")
        out = {}
        i = f.variables.index("c") if "c" in f.variables else None
        for exp, cf in f.terms.items():
            out[(exp[i] if i is not None else 0,)] = cf
        return MPoly(C, out)
    if isinstance(f, (int, Fraction)):
        return MPoly.const(C, f)
    return parse_poly(str(f), C)


def ptext(p):
    """Parenthesized parseable text for a polynomial."""
    return f"({p})"


def _qtext(q):
    """Text for a q-parameter: a rational literal or a parameter name."""
    if isinstance(q, str) and q.isidentifier():
        return q
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    return f"({q})"


def _qsetup(q):
    """Base variables and monoid for a possibly symbolic q."""
    if isinstance(q, str) and q.isidentifier():
        return ("c", q), [q]
    return ("c",), []


def factors_of(f):
    """Distinct monic factors of f in k[c]: rational linear factors plus the
    leftover cofactor, which is assumed irreducible."""
    return split_rational_roots(f)


def swap_tau(tower, x, y, name="tau"):
    imgs = tower.generator_binding()
    imgs[x], imgs[y] = tower.gen(y), tower.gen(x)
    return GeneratorMap(tower, tower, imgs, name)


def _require(rep):
    if not rep.passed:
        raise TowerNotWellFormed(rep)
    return rep


def towers_identical(t1, t2):
    """Same generators in the same order and identical sigma/delta data."""
    if t1.generators != t2.generators:
        return False
    for s1, s2 in zip(t1.skew, t2.skew):
        for m1, m2 in ((s1.sigma, s2.sigma), (s1.delta, s2.delta)):
            if {k: str(v) for k, v in m1.items()} != {k: str(v) for k, v in m2.items()}:
                return False
    return True


# ---------------------------------------------------------------------------
# rank-one constructions


def makeRf(f):
    f = cpoly(f)
    name = f"R_{{{f}}}"
    t = OreTower(C, [("a", {}, {"c": f})], name=name)
    pres = Presentation.from_text(name, t.generators, ["a*c = c*a + f"], {"f": ptext(f)})
    return AlgebraBundle(name, t, pres, provenance="differential operator ring k[c][a; delta(c)=f]",
                         data={"f": f})


def makeQuantumPlane(q):
    qt = _qtext(q)
    base, mon = _qsetup(q)
    name = f"O_{q}"
    t = OreTower(base, [("a", {"c": f"{qt}*c"}, {})], monoid=mon, name=name)
    pres = Presentation.from_text(name, t.generators, [f"a*c = {qt}*c*a"])
    return AlgebraBundle(name, t, pres, provenance="quantum plane ac = qca")


def makeQuantumWeyl(q):
    qt = _qtext(q)
    base, mon = _qsetup(q)
    name = f"A1q_{q}"
    t = OreTower(base, [("a", {"c": f"{qt}*c"}, {"c": 1})], monoid=mon, name=name)
    pres = Presentation.from_text(name, t.generators, [f"a*c = {qt}*c*a + 1"])
    return AlgebraBundle(name, t, pres, provenance="quantum Weyl algebra ac = qca + 1")


# ---------------------------------------------------------------------------
# involutive two-step extensions


def makeISPEnegWeyl(h):
    h = cpoly(h)
    name = f"ISPEnegWeyl({h})"
    t = OreTower(
        C,
        [("a", {"c": "-c"}, {"c": 1}),
         ("d", {"c": "-c", "a": "-a"}, {"c": 1, "a": h})],
        name=name,
    )
    rep = _require(check_tower_wellformed(t))
    pres = Presentation.from_text(
        name, t.generators, ["a*c + c*a = 1", "d*c + c*d = 1", "d*a + a*d = h"], {"h": ptext(h)}
    )
    tau = swap_tau(t, "a", "d")
    return AlgebraBundle(name, t, pres, tau=tau, reports=[rep],
                         provenance="ISPE over the quantum Weyl algebra at q = -1", data={"h": h})


def makeISPEQuantumPlane(q, variant="commute", h=0):
    """variant 'commute': da = ad; variant 'anti': da + ad = h."""
    if variant in ("commute", "da=ad"):
        variant = "commute"
    elif variant in ("anti", "da+ad=h"):
        variant = "anti"
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if not (isinstance(q, str) and q.isidentifier()) and Fraction(q) in (0, 1):
        raise ValueError("q must differ from 0 and 1")
    qt = _qtext(q)
    base, mon = _qsetup(q)
    h = cpoly(h)
    name = f"ISPEplane({q},{variant},{h})"
    if variant == "commute":
        d = ("d", {"c": f"{qt}*c"}, {})
        rels = [f"a*c = {qt}*c*a", f"d*c = {qt}*c*d", "d*a = a*d"]
    else:
        d = ("d", {"c": f"{qt}*c", "a": "-a"}, {"a": ptext(h)})
        rels = [f"a*c = {qt}*c*a", f"d*c = {qt}*c*d", "d*a + a*d = h"]
    t = OreTower(base, [("a", {"c": f"{qt}*c"}, {}), d], monoid=mon, name=name)
    rep = _require(check_tower_wellformed(t))
    pres = Presentation.from_text(name, t.generators, rels, {"h": ptext(h)})
    tau = swap_tau(t, "a", "d")
    return AlgebraBundle(name, t, pres, tau=tau, reports=[rep],
                         provenance="ISPE over the quantum plane", data={"h": h, "variant": variant})


def makeP(f, g):
    """P(f,g) over k[c,u] with a acting by D = f d/dc + g u d/du, plus the
    k[c][a][u; sigma] and k[c][a][d; sigma, delta] presentations."""
    f, g = cpoly(f), cpoly(g)
    F, G = ptext(f), ptext(g)
    name = f"P({f},{g})"
    t = OreTower(("c", "u"), [("a", {}, {"c": F, "u": f"{G}*u"})], name=name)
    pres1 = OreTower(C, [("a", {}, {"c": F}), ("u", {"a": f"a - {G}"}, {})], name=f"{name}.pres1")
    ispe = OreTower(
        C,
        [("a", {}, {"c": F}), ("d", {"a": f"a - {G}"}, {"c": F, "a": f"{G}*a"})],
        name=f"{name}.ispe",
    )
    pres = Presentation.from_text(
        name, t.generators, ["a*c = c*a + f", "u*c = c*u", "a*u = u*a + g*u"], {"f": F, "g": G}
    )
    ispe_pres = Presentation.from_text(
        f"{name}.ispe", ispe.generators,
        ["a*c = c*a + f", "d*c = c*d + f", "d*a = (a - g)*d + g*a"], {"f": F, "g": G},
    )
    maps = {
        "to_pres1": GeneratorMap(t, pres1, {"c": "c", "u": "u", "a": "a"}, "to_pres1"),
        "from_pres1": GeneratorMap(pres1, t, {"c": "c", "u": "u", "a": "a"}, "from_pres1"),
        "to_ispe": GeneratorMap(t, ispe, {"c": "c", "u": "d - a", "a": "a"}, "to_ispe"),
        "from_ispe": GeneratorMap(ispe, t, {"c": "c", "a": "a", "d": "u + a"}, "from_ispe"),
    }
    reports = [check_map(m) for m in maps.values()]
    maps["tau_ispe"] = swap_tau(ispe, "a", "d")
    reports.append(check_mutually_inverse(maps["to_pres1"], maps["from_pres1"]))
    reports.append(check_mutually_inverse(maps["to_ispe"], maps["from_ispe"]))
    tau = GeneratorMap(t, t, {"c": "c", "u": "-u", "a": "u + a"}, "tau")
    alternates = {"pres1": pres1, "ispe": ispe}
    named = {"u": t.gen("u"), "d": t.gen("u") + t.gen("a")}
    facs = factors_of(f)
    if facs:
        loc = t.localized(facs, name=f"{name}.loc")
        alternates["loc"] = loc
        from .analysis import localReduction

        cert = localReduction(f, facs, g)
        if cert is not None:
            # v = -(prod p_i^{-m_i}) u^n is central in the localization
            eta = loc.one()
            for p, m in zip(facs, cert.m):
                pe = loc.coerce(p)
                eta = eta * (pe.inverse() ** m if m >= 0 else pe ** (-m))
            n = cert.n
            v = -(eta * loc.gen("u") ** abs(n))
            if cpoly(f) == cpoly(g) * MPoly.var(C, "c"):
                v = loc.gen("c").inverse() * loc.gen("u")
            named["v"] = v
        ispe_loc = ispe.localized(facs, name=f"{name}.ispe.loc")
        alternates["pres1.loc"] = pres1.localized(facs, name=f"{name}.pres1.loc")
        alternates["ispe.loc"] = ispe_loc
    return AlgebraBundle(
        name, t, pres, named=named, tau=tau, alternates=alternates,
        presentations={"ispe": ispe_pres}, maps=maps, reports=reports,
        provenance="ISPE P(f,g): sigma_2(a) = a - g, delta_2(a) = g a", data={"f": f, "g": g},
    )


# ---------------------------------------------------------------------------
# four-generator algebras


def makeMq2(q):
    qt = _qtext(q)
    base, mon = _qsetup(q)
    name = f"Mq2({q})"
    t = OreTower(
        base,
        [
            ("a", {"c": f"{qt}*c"}, {}),
            ("d", {"c": f"{qt}*c"}, {}),
            ("b", {"a": f"{qt}*a", "d": f"{qt}*d"}, {"c": f"({qt} - inv({qt}))*a*d"}),
        ],
        monoid=mon,
        name=name,
    )
    rels = [
        f"a*c = {qt}*c*a", f"d*c = {qt}*c*d", "d*a = a*d",
        f"b*a = {qt}*a*b", f"b*d = {qt}*d*b", f"b*c = c*b + ({qt} - inv({qt}))*a*d",
    ]
    pres = Presentation.from_text(name, t.generators, rels)
    detq = eval_expr(f"b*c - {qt}*a*d", t.generator_binding(), t)
    return AlgebraBundle(name, t, pres, named={"detq": detq}, tau=swap_tau(t, "a", "d"),
                         provenance="quantum 2x2 matrices", data={"q": q})


MJ2_ABCD_RELATIONS = [
    "a*c = c*a + c^2",
    "d*c = c*d + c^2",
    "d*a = a*d - c*d + c*a",
    "b*c = c*b + c*a + c*d + c^2",
    "b*d = d*b + c*b + c*d - a*d + d^2",
    "b*a = a*b + c*b + c*d - a*d + a^2",
]

MJ2_U_RELATIONS = [
    "a*c = c*a + c^2",
    "u*c = c*u",
    "u*a = a*u - c*u",
    "b*c = c*b + c*(2*a + u + c)",
    "b*u = u*b + u*(2*a + u + c)",
    "b*a = (a + c)*b + (c - u)*a",
]


def makeMJ2():
    name = "MJ2"
    t = OreTower(
        C,
        [
            ("a", {}, {"c": "c^2"}),
            ("d", {"a": "a - c"}, {"c": "c^2", "a": "c*a"}),
            ("b", {"a": "a + c", "d": "d + c"},
             {"c": "c*a + c*d + c^2", "a": "a^2 + c*d - a*d", "d": "c*d - a*d + d^2"}),
        ],
        name=name,
    )
    ut = OreTower(
        ("c", "u"),
        [
            ("a", {}, {"c": "c^2", "u": "c*u"}),
            ("b", {"a": "a + c"},
             {"c": "c*(2*a + u + c)", "u": "u*(2*a + u + c)", "a": "(c - u)*a"}),
        ],
        name="MJ2.u",
    )
    pres = Presentation.from_text(name, t.generators, MJ2_ABCD_RELATIONS)
    upres = Presentation.from_text("MJ2.u", ut.generators, MJ2_U_RELATIONS)
    to_u = GeneratorMap(t, ut, {"c": "c", "a": "a", "d": "u + a", "b": "b"}, "to_u")
    from_u = GeneratorMap(ut, t, {"c": "c", "u": "d - a", "a": "a", "b": "b"}, "from_u")
    reports = [check_map(to_u), check_map(from_u), check_mutually_inverse(to_u, from_u)]
    named = {
        "detJ": eval_expr("a*d - c*b - c*d", t.generator_binding(), t),
        "u": t.gen("d") - t.gen("a"),
        "z": eval_expr("c*b + (c - u)*a - a^2", ut.generator_binding(), ut),
    }
    return AlgebraBundle(
        name, t, pres, named=named, tau=swap_tau(t, "a", "d"),
        alternates={"u": ut}, presentations={"u": upres},
        maps={"to_u": to_u, "from_u": from_u, "tau_u": GeneratorMap(
            ut, ut, {"c": "c", "u": "-u", "a": "u + a", "b": "b"}, "tau_u")},
        reports=reports, provenance="Jordanian quantum 2x2 matrices",
    )


def _inner_data(L, p_el, theta):
    """sigma(x) = p^-1 x p and delta(x) = theta x - sigma(x) theta on c, u, a."""
    pinv = p_el.inverse()
    sig, dl = {}, {}
    for x in ("c", "u", "a"):
        X = L.gen(x)
        sig[x] = pinv * X * p_el
        dl[x] = theta * X - sig[x] * theta
    return sig, dl


def makeG(f, p, theta, name=None):
    """G(f,p,theta) = P(f, f/c)[b; sigma, delta] with sigma conjugation by p
    and delta the inner sigma-derivation of theta (given in the localization)."""
    f = cpoly(f)
    c = MPoly.var(C, "c")
    g = f.divide_exact(c)
    if g is None:
        raise ValueError(f"{f} is not divisible by c")
    p = cpoly(p)
    if f.divide_exact(p) is None and all(f.divide_exact(q) is None for q in factors_of(p)):
        raise ValueError(f"{p} is not a factor of {f}")
    P = makeP(f, g)
    facs = factors_of(f)
    L = P.tower.localized(facs + [q for q in factors_of(p) if q not in facs], name=f"{P.name}.loc")
    h = (c * g.diff("c"))
    consts = {"f": ptext(f), "g": ptext(g), "h": ptext(h)}
    b = L.generator_binding()
    b.update(consts)
    theta_el = theta if not isinstance(theta, str) else eval_expr(theta, b, L)
    theta_el = L.convert(theta_el) if theta_el.tower is not L else theta_el
    p_el = L.coerce(p)
    sig, dl = _inner_data(L, p_el, theta_el)
    for label, imgs in (("sigma", sig), ("delta", dl)):
        for x, e in imgs.items():
            _, s = clear_denominators(e)
            if not s.is_constant():
                raise ImageNotInP(f"{label}({x}) = {e} is not in P")
    tauP = GeneratorMap(L, L, {"c": "c", "u": "-u", "a": "u + a"}, "tau")
    res_u = dl["u"] - (tauP(dl["a"]) - dl["a"])
    if res_u:
        raise GJMAConditionFailed(
            f"delta(u) = tau(delta(a)) - delta(a) fails: delta(u) = {dl['u']}, delta(a) = {dl['a']}", res_u)
    res_c = dl["c"] - tauP(dl["c"])
    if res_c:
        raise GJMAConditionFailed(f"delta(c) = tau(delta(c)) fails: delta(c) = {dl['c']}", res_c)
    name = name or f"G({f},{p},{theta if isinstance(theta, str) else 'theta'})"
    sig_t = {x: str(e) for x, e in sig.items()}
    dl_t = {x: str(e) for x, e in dl.items()}
    skew = [("a", {}, {"c": ptext(f), "u": f"{ptext(g)}*u"}), ("b", sig_t, dl_t)]
    T = OreTower(("c", "u"), skew, name=name)
    GL = T.localized([q.rename(("c", "u")) for q in L.monoid.generators], name=f"{name}.loc")
    reports = [_require(check_tower_wellformed(T))]
    tau = GeneratorMap(T, T, {"c": "c", "u": "-u", "a": "u + a", "b": "b"}, "tau")
    inv_rep = check_involution(tau)
    if not inv_rep.passed:
        raise GJMAConditionFailed(f"tau does not extend with tau(b) = b: {inv_rep.details}", inv_rep.residual)
    reports.append(inv_rep)
    th = eval_expr(str(theta_el), GL.generator_binding(), GL)
    z = GL.coerce(p) * (GL.gen("b") - th)
    named = {"u": T.gen("u"), "theta": th, "phi": GL.coerce(p)}
    named["z"] = T.convert(z) if z.is_denominator_free() else z
    if "c" in [str(q) for q in L.monoid.generators]:
        named["v"] = GL.gen("c").inverse() * GL.gen("u")
    rels = ["a*c = c*a + f", "u*c = c*u", "a*u = u*a + g*u"]
    rels += [f"b*{x} = ({sig_t[x]})*b + ({dl_t[x]})" for x in ("c", "u", "a")]
    pres = Presentation.from_text(name, T.generators, rels, {"f": ptext(f), "g": ptext(g)})
    return AlgebraBundle(
        name, T, pres, named=named, tau=tau, alternates={"loc": GL, "P.loc": L},
        reports=reports, provenance="GJMA: inner sigma and delta over P(f, f/c)",
        data={"f": f, "g": g, "h": h, "p": p, "sigma": sig_t, "delta": dl_t, "P": P},
    )


GF_ABCD_PRINTED = [
    "a*c = c*a + f",
    "d*c = c*d + f",
    "d*a = (a - g)*d + g*(a - h)",
    "b*c = c*b + c*gamma",
    "b*a = (a + h)*b + (h - u)*a",
    "b*d = (d + h)*b + (h - u)*d",
]


def makeGf(f):
    f = cpoly(f)
    c = MPoly.var(C, "c")
    g = f.divide_exact(c)
    if g is None or g.degree() < 1:
        raise ValueError(f"{f} must be c*g with deg g >= 1")
    h = c * g.diff("c")
    F, G, H = ptext(f), ptext(g), ptext(h)
    theta = f"inv({G})*(a^2 + (u - {G})*a)"
    name = f"G_{{{f}}}"
    B = makeG(f, g, theta, name=name)
    T = B.tower
    b = T.generator_binding()
    b.update({"f": F, "g": G, "h": H, "gamma": f"{H} + u + 2*a"})
    reports = list(B.reports)

    # the closed forms of sigma and delta
    rep = CheckReport(f"closed forms {name}", True)
    sb = T.skew[1]
    expect = {
        ("sigma", "a"): "a + h", ("sigma", "c"): "c", ("sigma", "u"): "u",
        ("delta", "a"): "(h - u)*a", ("delta", "c"): "c*gamma", ("delta", "u"): "u*gamma",
    }
    for (kind, x), text in expect.items():
        got = (sb.sigma if kind == "sigma" else sb.delta)[x]
        want = eval_expr(text, b, T)
        if got != want:
            rep.fail(f"{kind}({x}) = {got}, expected {text}", got - want)
    if rep.passed:
        rep.note("sigma(a) = a + h; delta(c) = c gamma, delta(u) = u gamma, delta(a) = (h - u) a")
    reports.append(rep)

    from .analysis import innerAutoCheck

    reports.append(innerAutoCheck(T, "b", B.named["phi"]))

    # v-criterion: delta(c) = c u^-1 delta(u) after inverting u
    U = B.data["P"].tower.localized([c.rename(("c", "u")), MPoly.var(("c", "u"), "u")],
                                    name=f"{name}.P.cu")
    ub = U.generator_binding()
    dc, du = (eval_expr(str(sb.delta[x]), ub, U) for x in ("c", "u"))
    crit = U.gen("c") * U.gen("u").inverse() * du
    vrep = CheckReport(f"v-criterion {name}", dc == crit)
    if vrep.passed:
        vrep.note("delta(c) = c u^-1 delta(u) in the localization at c and u")
    else:
        vrep.fail(f"delta(c) - c u^-1 delta(u) = {dc - crit}", dc - crit)
    reports.append(vrep)

    z_printed = eval_expr("g*b + (g - u)*a - a^2", b, T)
    zrep = CheckReport(f"z formula {name}", z_printed == B.named["z"])
    if not zrep.passed:
        zrep.fail(f"p(b - theta) = {B.named['z']} differs from g b + (g - u) a - a^2", B.named["z"] - z_printed)
    reports.append(zrep)

    # standard-generator presentation
    abcd = OreTower(
        C,
        [
            ("a", {}, {"c": F}),
            ("d", {"a": f"a - {G}"}, {"c": F, "a": f"{G}*a"}),
            ("b", {"a": f"a + {H}", "d": f"d + {H}"},
             {"c": f"c*({H} + a + d)", "a": f"({H} - d + a)*a", "d": f"({H} + d - a)*d"}),
        ],
        name=f"{name}.abcd",
    )
    to_u = GeneratorMap(abcd, T, {"c": "c", "a": "a", "d": "u + a", "b": "b"}, "to_u")
    from_u = GeneratorMap(T, abcd, {"c": "c", "u": "d - a", "a": "a", "b": "b"}, "from_u")
    reports += [check_map(to_u), check_map(from_u), check_mutually_inverse(to_u, from_u)]
    tau_abcd = swap_tau(abcd, "a", "d")
    as_printed = Presentation.from_text(
        f"{name}.abcd (as printed)", abcd.generators, GF_ABCD_PRINTED,
        {"f": F, "g": G, "h": H, "gamma": f"{H} + a + d", "u": "d - a"},
    )
    printed = check_relations(as_printed, identity_map(abcd), f"printed abcd relations {name}")
    errata = [d for d in printed.details if d.startswith("relation")]
    corrected = Presentation.from_text(
        f"{name}.abcd", abcd.generators,
        [
            "a*c = c*a + f", "d*c = c*d + f", "d*a = (a - g)*d + g*a",
            "b*c = c*b + c*gamma", "b*a = (a + h)*b + (h - u)*a", "b*d = (d + h)*b + (h + u)*d",
        ],
        {"f": F, "g": G, "h": H, "gamma": f"{H} + a + d", "u": "d - a"},
    )
    B.presentations["abcd"] = corrected
    B.alternates["abcd"] = abcd
    B.maps.update({"to_u": to_u, "from_u": from_u, "tau_abcd": tau_abcd})
    B.reports = reports
    B.data.update(theta=theta, gamma=f"{H} + u + 2*a", abcd_errata=errata, printed_abcd=printed)
    B.provenance = "G_f = G(f, g, g^-1(a^2 + (u - g)a))"
    return B


# ---------------------------------------------------------------------------
# birational maps to Weyl algebras


def makeWeyl(params, invert=()):
    """A_1(k[params]) = k[params, y][x; d/dy], localized at ``invert``."""
    base = tuple(params) + ("y",)
    name = f"A1(k[{','.join(params)}])"
    t = OreTower(base, [("x", {}, {"y": 1})], name=name)
    return t.localized(list(invert), name=name) if invert else t


def makeISPEWeylMaps(literal=False):
    """The ISPE S over R = k[r] with ar = ra + r, dr = rd + r, da = (a - 1)d + a,
    and inverse maps Phi: S -> A_1(k[t]), Psi back, both in localizations.

    With ``literal`` the images are taken verbatim from the printed statement
    (Phi(a) = x f, Psi(x) = a f^-1); otherwise Phi(a) = y x f and
    Psi(x) = r^-1 a f^-1, which are the assignments that respect the relations.
    """
    S = OreTower(("r",), [("a", {}, {"r": "r"}), ("d", {"a": "a - 1"}, {"r": "r", "a": "a"})],
                 name="S(k[r])")
    tau = swap_tau(S, "a", "d")
    SL = S.localized(["r"], name="S(k[r]).loc")
    A = makeWeyl(("t",), invert=("t", "y"))
    f = "1"  # r^-1 delta_1(r)
    phi_a = f"x*{f}" if literal else f"y*x*{f}"
    Phi = GeneratorMap(SL, A, {"r": "inv(t)*y*t", "a": phi_a, "d": f"y*t + {phi_a}"}, "Phi")
    psi_x = f"a*inv({f})" if literal else f"inv(r)*a*inv({f})"
    Psi = GeneratorMap(A, SL, {"t": "inv(r)*(d - a)", "y": "r", "x": psi_x}, "Psi")
    return {"S": S, "tau": tau, "S.loc": SL, "A1": A, "Phi": Phi, "Psi": Psi}


def makeGJMAWeylMaps(f, literal=False):
    """Phi: G_f C^-1 -> Frac(A_1(k[s,t])) and Psi back, on generators.

    Printed: Phi(a) = x f(y), Phi(c) = y, Phi(v) = y t, Phi(z) = s and
    Psi(x) = a f(c)^-1, Psi(y) = c, Psi(t) = v, Psi(s) = z. The central v must
    go to a central element, so unless ``literal`` is set Phi(v) = t.
    """
    B = makeGf(f)
    GL = B.alternates["loc"]
    fy = B.data["f"].rename(C)
    F = ptext(str(fy).replace("c", "y"))
    G = ptext(str(B.data["g"]).replace("c", "y"))
    inv = [q.rename(C) for q in factors_of(B.data["f"])]
    A = makeWeyl(("s", "t"), invert=[parse_poly(str(q).replace("c", "y"), ("s", "t", "y")) for q in inv])
    phi_v = "y*t" if literal else "t"
    phi_u = f"y*{phi_v}"
    phi_a = f"x*{F}"
    Phi = GeneratorMap(GL, A, {
        "c": "y", "u": phi_u, "a": phi_a,
        "b": f"inv({G})*(s - ({G} - {phi_u})*{phi_a} + {phi_a}*{phi_a})",
    }, "Phi")
    Fc = ptext(B.data["f"])
    Psi = GeneratorMap(A, GL, {"x": f"a*inv({Fc})", "y": "c", "t": "inv(c)*u",
                               "s": str(B.named["z"])}, "Psi")
    z = GL.convert(B.named["z"]) if B.named["z"].tower is not GL else B.named["z"]
    return {"G": B, "G.loc": GL, "A1": A, "Phi": Phi, "Psi": Psi,
            "extra": [("v", B.named["v"]), ("z", z)]}
