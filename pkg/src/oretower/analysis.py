"""Structural analysis: bounded center search, normality and innerness
certificates, local reduction, inner powers, quotient checks, growth."""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import (
    FactorizationMismatch,
    MissingNormalityCertificate,
    NotInvertible,
    ResourceLimit,
)
from .exactnum import DenMonoid, Frac, MPoly, split_rational_roots
from .lang import GeneratorMap, check_map, eval_expr
from .linalg import nullspace, rref, solve
from .reports import CheckReport
from .tower import Element, commutator, monomial_count, random_element

MAX_ANSATZ = 20000

# ---------------------------------------------------------------------------
# certificate records


@dataclass
class LocalReductionCertificate:
    n: int
    m: list
    factors: list
    f: MPoly = None
    g: MPoly = None

    def verify(self):
        if self.f is None or self.f.is_constant():
            return self.g is None or self.g.is_zero()
        total = MPoly.zero(self.f.variables)
        for p, mi in zip(self.factors, self.m):
            total = total + self.f.divide_exact(p).scale(mi)
        return self.g == total.scale(Fraction(-1, self.n))

    def __str__(self):
        return f"n={self.n}, m={self.m}"


@dataclass
class InnernessCertificate:
    kind: str  # "automorphism" | "derivation"
    witness: Element
    var: str
    tower: object = None

    def verify(self):
        check = innerAutoCheck if self.kind == "automorphism" else innerDerCheck
        return check(self.tower, self.var, self.witness).passed

    def __str__(self):
        return f"{self.kind} witness {self.witness}"


@dataclass
class NormalityCertificate:
    element: Element
    cofactors: dict

    def verify(self):
        t = self.element.tower
        return all(t.gen(w) * self.element == self.element * y for w, y in self.cofactors.items())

    def __str__(self):
        return ", ".join(f"{w}->{y}" for w, y in self.cofactors.items())


@dataclass
class CenterBasis:
    tower: object
    skew_bound: int
    coeff_bound: int
    basis: list = field(default_factory=list)
    ansatz_size: int = 0

    def same_span(self, others):
        """Whether span(basis) equals span(others) (elements of the same tower)."""
        return same_span(self.basis, others)

    def __str__(self):
        inner = ", ".join(str(b) for b in self.basis)
        return (f"center within (skew<={self.skew_bound}, coeff<={self.coeff_bound}) "
                f"= span{{{inner}}}")


# ---------------------------------------------------------------------------
# linearization helpers


def _coeff_ansatz(t, bound, with_dens=True):
    """Independent coefficient fractions: monomials of degree <= bound over
    monoid products of total exponent <= bound."""
    m = t.monoid
    nb = len(t.base)
    nums = [e for d in range(bound + 1) for e in _exps(nb, d)]
    dens = [(0,) * len(m)]
    if with_dens and len(m):
        dens = [e for d in range(bound + 1) for e in _exps(len(m), d)]
    cands = []
    seen = set()
    for den in dens:
        for num in nums:
            f = Frac._reduced(MPoly.monomial(t.base, num), den, m)
            if f not in seen:
                seen.add(f)
                cands.append(f)
    if len(m) and with_dens:
        # fractions over several generators may be dependent: keep a basis
        top = tuple(max(f.den[i] for f in cands) for i in range(len(m)))
        D = m.product(top)
        keep, rows = [], []
        for f in cands:
            num = f.num * D.divide_exact(f.den_poly())
            row = dict(num.terms)
            if len(rref(rows + [row], 0)[1]) > len(rows):
                rows.append(row)
                keep.append(f)
        cands = keep
    return cands


def _exps(n, d):
    """Exponent tuples of length n and total degree exactly d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for i in range(d, -1, -1):
        for rest in _exps(n - 1, d - i):
            yield (i,) + rest


def ansatz(t, skew_bound, coeff_bound, with_dens=True, total_bound=None):
    """PBW monomials (coefficient * skew word) within the bounds, ordered by
    skew degree then coefficient."""
    coeffs = _coeff_ansatz(t, coeff_bound, with_dens)
    size = len(coeffs) * sum(1 for d in range(skew_bound + 1) for _ in _exps(t.n, d))
    if size > MAX_ANSATZ:
        raise ResourceLimit(f"ansatz of {size} monomials exceeds the limit {MAX_ANSATZ}")
    out = []
    for d in range(skew_bound + 1):
        for sk in sorted(_exps(t.n, d), reverse=True):
            for f in coeffs:
                if total_bound is not None and d + f.num.degree() > total_bound:
                    continue
                out.append(Element(t, {sk: f}))
    return out


def _linearize(elements):
    """Coordinates of elements over a common left denominator."""
    if not elements:
        return []
    t = elements[0].tower
    m = t.monoid
    top = [0] * len(m)
    for e in elements:
        for f in e.terms.values():
            top = [max(a, b) for a, b in zip(top, f.den)]
    D = m.product(tuple(top))
    out = []
    for e in elements:
        vec = {}
        for sk, f in e.terms.items():
            num = f.num * D.divide_exact(f.den_poly())
            for be, v in num.terms.items():
                vec[(sk, be)] = v
        out.append(vec)
    return out


def _columns_to_rows(vecs):
    """Transpose: list of column vectors keyed by coordinate -> sparse rows."""
    rows = {}
    for j, vec in enumerate(vecs):
        for key, v in vec.items():
            rows.setdefault(key, {})[j] = v
    return [rows[k] for k in sorted(rows, key=repr)]


def same_span(xs, ys):
    """Exact comparison of the rational spans of two element lists."""
    xs, ys = list(xs), list(ys)
    if not xs and not ys:
        return True
    t = (xs or ys)[0].tower
    xs = [t.convert(x) for x in xs]
    ys = [t.convert(y) for y in ys]
    vecs = _linearize(xs + ys)
    keys = {}
    rows = []
    for vec in vecs:
        rows.append({keys.setdefault(k, len(keys)): v for k, v in vec.items()})
    r_all = len(rref(rows, len(keys))[1])
    r_x = len(rref(rows[: len(xs)], len(keys))[1])
    r_y = len(rref(rows[len(xs):], len(keys))[1])
    return r_all == r_x == r_y


# ---------------------------------------------------------------------------
# centrality and the center


def centralizerCheck(x, gens=None):
    t = x.tower
    rep = CheckReport(f"central {x}", True)
    for w in gens or t.generators:
        com = commutator(x, t.gen(w))
        if com:
            rep.fail(f"[x, {w}] = {com}", com)
            break
    if rep.passed:
        rep.note(f"commutes with {', '.join(gens or t.generators)}")
    return rep


def centerSearch(t, skew_bound, coeff_bound):
    if skew_bound < 0 or coeff_bound < 0:
        raise ValueError("bounds must be nonnegative")
    basis_in = ansatz(t, skew_bound, coeff_bound)
    n = len(basis_in)
    rows = []
    for w in t.generators:
        W = t.gen(w)
        vecs = _linearize([e * W - W * e for e in basis_in])
        rows.extend(_columns_to_rows(vecs))
    null = nullspace(rows, n)
    # canonical form: pivots on the highest ansatz monomials
    flipped = [{n - 1 - j: v for j, v in vec.items()} for vec in null]
    prows, pcols = rref(flipped, n)
    basis = []
    for prow in sorted(prows, key=lambda r: -min(r)):
        e = t.zero()
        for j, v in prow.items():
            e = e + basis_in[n - 1 - j] * v
        basis.append(e)
    return CenterBasis(t, skew_bound, coeff_bound, basis, n)


def centerSearchReport(t, skew_bound, coeff_bound, expected=None):
    cb = centerSearch(t, skew_bound, coeff_bound)
    rep = CheckReport(f"center-search {t.name} ({skew_bound},{coeff_bound})", True)
    rep.note(str(cb))
    rep.data["basis"] = [str(b) for b in cb.basis]
    rep.data["ansatz"] = cb.ansatz_size
    for b in cb.basis:
        cr = centralizerCheck(b)
        if not cr.passed:
            rep.fail(f"basis element {b} is not central: {cr.details[0]}", cr.residual)
    if expected is not None and not cb.same_span(expected):
        rep.fail(f"expected span{{{', '.join(str(e) for e in expected)}}}")
    return rep


# ---------------------------------------------------------------------------
# normality


def normalityCertSearch(x, deg_bound=2):
    """Cofactors y_w with w x = x y_w for every generator w, or None."""
    if x.is_zero():
        raise ValueError("zero is not a normal element")
    t = x.tower
    basis_in = ansatz(t, deg_bound, deg_bound)
    cof = {}
    for w in t.generators:
        W = t.gen(w)
        target = W * x
        vecs = _linearize([x * e for e in basis_in] + [target])
        keys = {}
        cols = []
        for vec in vecs:
            cols.append({keys.setdefault(k, len(keys)): v for k, v in vec.items()})
        rows = [dict() for _ in keys]
        for j, col in enumerate(cols[:-1]):
            for i, v in col.items():
                rows[i][j] = v
        rhs = [cols[-1].get(i, 0) for i in range(len(keys))]
        sol = solve(rows, rhs, len(basis_in))
        if sol is None:
            return None
        y = t.zero()
        for j, v in sol.items():
            y = y + basis_in[j] * v
        cof[w] = y
    cert = NormalityCertificate(x, cof)
    assert cert.verify()
    return cert


def normalReport(x, deg_bound=2):
    rep = CheckReport(f"normal {x}", True)
    cert = normalityCertSearch(x, deg_bound)
    if cert is None:
        return rep.fail(f"no cofactors within degree {deg_bound}")
    rep.note(f"cofactors: {cert}")
    rep.data["cofactors"] = {w: str(y) for w, y in cert.cofactors.items()}
    rep.data["certificate"] = cert
    return rep


# ---------------------------------------------------------------------------
# innerness


def _localize_for(t, polys):
    extra = []
    for p in polys:
        if p.is_constant() or t.monoid.contains(p):
            continue
        used = {v for e in p.terms for v, k in zip(p.variables, e) if k}
        if len(used) == 1:
            (v,) = used
            uni = MPoly((v,), {(e[p.variables.index(v)],): cf for e, cf in p.terms.items()})
            extra += [q.rename((v,)).rename(t.base) for q in split_rational_roots(uni)]
        else:
            extra.append(p.monic()[1])
    return t.localized(extra) if extra else t


def _lower(t, var):
    k = t.skew_names.index(var)
    return t.base + t.skew_names[:k], t.skew[k]


def innerAutoCheck(t, var, phi):
    """phi^-1 r phi = sigma_var(r) for every generator r below var."""
    if not phi.is_base():
        raise NotInvertible(f"{phi} is not a unit of the coefficient ring")
    L = phi.tower
    if any(f.num.is_zero() for f in phi.terms.values()):
        raise NotInvertible("zero is not invertible")
    frac = phi.as_frac()
    if not L.monoid.contains(frac.num):
        L = _localize_for(L, [frac.num])
        phi = L.convert(phi)
    lower, sv = _lower(L, var)
    src = _lower(t, var)[1]
    inv = phi.inverse()
    rep = CheckReport(f"inner-auto sigma_{var} by {phi}", True)
    for r in lower:
        got = inv * L.gen(r) * phi
        want = L.convert(src.sigma[r])
        if got != want:
            rep.fail(f"phi^-1 {r} phi = {got}, but sigma_{var}({r}) = {want}", got - want)
    if rep.passed:
        rep.note(f"conjugation by {phi} reproduces sigma_{var} on {', '.join(lower)}")
        rep.data["certificate"] = InnernessCertificate("automorphism", phi, var, t)
    return rep


def innerDerCheck(t, var, theta):
    """theta r - sigma(r) theta = delta_var(r) for every generator r below var."""
    L = theta.tower
    lower, _ = _lower(L, var)
    src = _lower(t, var)[1]
    rep = CheckReport(f"inner-der delta_{var} by {theta}", True)
    for r in lower:
        got = theta * L.gen(r) - L.convert(src.sigma[r]) * theta
        want = L.convert(src.delta[r])
        if got != want:
            rep.fail(f"theta {r} - sigma({r}) theta = {got}, but delta_{var}({r}) = {want}", got - want)
    if rep.passed:
        rep.note(f"theta reproduces delta_{var} on {', '.join(lower)}")
        rep.data["certificate"] = InnernessCertificate("derivation", theta, var, t)
    return rep


# ---------------------------------------------------------------------------
# local reduction and inner powers


def _as_c(p):
    from .zoo import cpoly

    return cpoly(p)


def localReduction(f, factors, g):
    """Certificate g = -(1/n) sum m_i f/p_i, or None."""
    f, g = _as_c(f), _as_c(g)
    factors = [_as_c(p).monic()[1] for p in factors]
    if f.is_zero():
        raise FactorizationMismatch("f must be nonzero")
    if f.is_constant():
        if factors:
            raise FactorizationMismatch("a constant f has no factors")
        return LocalReductionCertificate(1, [], [], f, g) if g.is_zero() else None
    try:
        dec = DenMonoid(f.variables, factors).decompose(f)
    except ValueError as exc:
        raise FactorizationMismatch(str(exc))
    if dec is None or not all(dec[1]):
        raise FactorizationMismatch(
            f"factors {[str(p) for p in factors]} do not multiply to {f} up to scalar")
    cof = [f.divide_exact(p) for p in factors]
    monos = sorted({e for q in cof + [g] for e in q.terms})
    rows = [{i: q.terms.get(e, 0) for i, q in enumerate(cof) if q.terms.get(e, 0)} for e in monos]
    rhs = [g.terms.get(e, 0) for e in monos]
    sol = solve(rows, rhs, len(cof))
    if sol is None:
        return None
    lam = [Fraction(sol.get(i, 0)) for i in range(len(cof))]
    n = lcm(*(x.denominator for x in lam)) if lam else 1
    m = [int(-x * n) for x in lam]
    cert = LocalReductionCertificate(n, m, factors, f, g)
    assert cert.verify()
    return cert


def localReductionReport(f, factors, g, expect=None):
    cert = localReduction(f, factors, g)
    rep = CheckReport(f"local-reduction f={_as_c(f)} g={_as_c(g)}", True)
    rep.data["certificate"] = cert
    rep.data["is_local_reduction"] = cert is not None
    rep.note(f"certificate {cert}" if cert else "g is not in the span of the cofactors f/p_i")
    if expect is not None and expect != (cert is not None):
        rep.fail(f"expected {'a certificate' if expect else 'no certificate'}")
    return rep


def innerPowerScan(t, var, maxN=4, exp_bound=4, factors=None):
    """Search n <= maxN and eta = prod p_i^m_i, |m_i| <= exp_bound, with
    eta^-1 r eta = sigma^n(r) on the generators below var."""
    gens = list(factors) if factors is not None else list(t.monoid.generators)
    L = t.localized(gens) if gens else t
    lower, sv = _lower(L, var)
    plist = [L.coerce(p) for p in L.monoid.generators]
    rep = CheckReport(f"inner-power-scan {t.name} sigma_{var}", True)
    powers = {r: L.gen(r) for r in lower}
    exps = sorted(itertools.product(range(-exp_bound, exp_bound + 1), repeat=len(plist)),
                  key=lambda m: (sum(map(abs, m)), m))
    for n in range(1, maxN + 1):
        powers = {r: L.apply_sigma(var, e) for r, e in powers.items()}
        for m in exps:
            eta = L.one()
            for p, k in zip(plist, m):
                eta = eta * (p ** k if k >= 0 else p.inverse() ** (-k))
            inv = eta.inverse()
            if all(inv * L.gen(r) * eta == powers[r] for r in lower):
                rep.data.update(inner=True, n=n, m=list(m), eta=str(eta))
                rep.note(f"sigma^{n} is conjugation by eta = {eta} (m = {list(m)})")
                return rep
    rep.data.update(inner=False)
    rep.note(f"no witness for n <= {maxN}, |m_i| <= {exp_bound}")
    return rep


# ---------------------------------------------------------------------------
# quotients


def _total_degree(e):
    return max((sum(sk) + f.num.degree() for sk, f in e.terms.items()), default=0)


def idealMember(y, gens, bound=None):
    """Whether y lies in sum x_i T, searched with cofactors of total degree <= bound."""
    if y.is_zero():
        return True
    t = y.tower
    bound = bound if bound is not None else _total_degree(y) + 2
    basis_in = ansatz(t, bound, bound, with_dens=False, total_bound=bound)
    prods = [x * e for x in gens for e in basis_in]
    vecs = _linearize(prods + [y])
    keys = {}
    cols = [{keys.setdefault(k, len(keys)): v for k, v in vec.items()} for vec in vecs]
    rows = [dict() for _ in keys]
    for j, col in enumerate(cols[:-1]):
        for i, v in col.items():
            rows[i][j] = v
    rhs = [cols[-1].get(i, 0) for i in range(len(keys))]
    return solve(rows, rhs, len(prods)) is not None


def quotientCheck(t, ideal, claimed, forward, backward, bound=None):
    """t/(ideal) is presented by ``claimed`` via forward: t -> B and backward: B -> t."""
    certs = []
    for x in ideal:
        if not isinstance(x, NormalityCertificate):
            raise MissingNormalityCertificate(f"ideal generator {x} lacks a normality certificate")
        if not x.verify():
            raise MissingNormalityCertificate(f"certificate for {x.element} does not verify")
        certs.append(x)
    xs = [c.element for c in certs]
    rep = CheckReport(
        f"quotient {t.name}/({', '.join(str(x) for x in xs)}) = {claimed.name or forward.target.name}", True)
    hom = check_map(forward)
    for d in hom.details if not hom.passed else ():
        rep.fail(f"forward: {d}", hom.residual)
    for x in xs:
        img = forward(x)
        if img:
            rep.fail(f"forward({x}) = {img} is not 0", img)
    binding = dict(backward.images)
    for k, v in claimed.constants.items():
        binding.setdefault(k, v)
    for i, rel in enumerate(claimed.relations):
        res = eval_expr(rel, binding, t)
        if not idealMember(res, xs, bound):
            rep.fail(f"backward: relation {claimed.relation_text(i)!r} leaves residual {res} outside the ideal", res)
    for g in t.generators:
        diff = backward(forward(t.gen(g))) - t.gen(g)
        if not idealMember(diff, xs, bound):
            rep.fail(f"backward(forward({g})) - {g} = {diff} is not in the ideal", diff)
    B = forward.target
    for g in B.generators:
        back = forward(backward.images[g])
        if back != B.gen(g):
            rep.fail(f"forward(backward({g})) = {back}", back - B.gen(g))
    if rep.passed:
        rep.note(f"maps are mutually inverse modulo the ideal; {len(claimed.relations)} relation(s) checked")
    return rep


# ---------------------------------------------------------------------------
# automorphisms, growth, engine properties


def automorphismInstance(t, assignments, scaled=None, name="pi"):
    """Relations under an assignment; ``scaled`` maps an expression text to a
    scalar lambda and additionally checks pi(expr) = lambda * expr."""
    m = GeneratorMap.from_texts(t, t, assignments, name)
    rep = check_map(m)
    rep.name = f"automorphism {name} on {t.name}"
    for text, lam in (scaled or {}).items():
        e = eval_expr(text, t.generator_binding(), t)
        got = m(e)
        if got != e * Fraction(lam):
            rep.fail(f"{name}({text}) = {got}, expected {lam}*({text})", got - e * Fraction(lam))
        else:
            rep.note(f"{name}({text}) = {lam}*({text})")
    return rep


def growthReport(t, N, expect_degree=None):
    counts, d = monomial_count(t, N)
    rep = CheckReport(f"growth {t.name} N={N}", True)
    rep.data.update(counts=counts, degree=d)
    rep.note(f"counts {counts}; fitted degree {d}")
    if expect_degree is not None and d != expect_degree:
        rep.fail(f"fitted degree {d}, expected {expect_degree}")
    return rep


def associativityCheck(t, trials=300, seed=0, **kw):
    rng = random.Random(seed)
    rep = CheckReport(f"associativity {t.name} x{trials}", True)
    for i in range(trials):
        x, y, z = (random_element(t, rng, **kw) for _ in range(3))
        lhs, rhs = (x * y) * z, x * (y * z)
        if lhs != rhs:
            rep.fail(f"trial {i}: (xy)z - x(yz) = {lhs - rhs} for x={x}, y={y}, z={z}", lhs - rhs)
            break
    if rep.passed:
        rep.note(f"{trials} seeded triples associate (seed {seed})")
    return rep


def sigmaDeltaCheck(t, trials=200, seed=0, **kw):
    """sigma multiplicative and delta sigma-Leibniz on random pairs below each skew variable."""
    rng = random.Random(seed)
    rep = CheckReport(f"sigma-delta laws {t.name} x{trials}", True)
    for k, sv in enumerate(t.skew):
        low = _truncate(t, k)
        for i in range(trials):
            x, y = random_element(low, rng, **kw), random_element(low, rng, **kw)
            x, y = _embed(t, x), _embed(t, y)
            sx, sy = t.apply_sigma(sv.name, x), t.apply_sigma(sv.name, y)
            dxy = t.apply_delta(sv.name, x * y)
            if t.apply_sigma(sv.name, x * y) != sx * sy:
                rep.fail(f"sigma_{sv.name} not multiplicative on x={x}, y={y}")
                return rep
            leib = sx * t.apply_delta(sv.name, y) + t.apply_delta(sv.name, x) * y
            if dxy != leib:
                rep.fail(f"delta_{sv.name} Leibniz fails on x={x}, y={y}", dxy - leib)
                return rep
    rep.note(f"{trials} pairs per skew variable (seed {seed})")
    return rep


def _truncate(t, k):
    """The subtower below skew level k (shares no state with t)."""
    from .tower import OreTower

    skew = []
    for sv in t.skew[:k]:
        skew.append((sv.name, {g: str(e) for g, e in sv.sigma.items()},
                     {g: str(e) for g, e in sv.delta.items()}))
    return OreTower(t.base, skew, monoid=list(t.monoid.generators), name=f"{t.name}<{k}")


def _embed(t, e):
    n = t.n
    return Element(t, {sk + (0,) * (n - len(sk)): f.with_monoid(t.monoid) for sk, f in e.terms.items()})
