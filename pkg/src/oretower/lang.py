"""Expression grammar for noncommutative ring elements, presented algebras,
generator maps, and the homomorphism / involution / inverse-pair checks.

Grammar (whitespace insignificant, no implicit multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := name | rational | '(' expr ')' | 'inv(' atom ')'

A rational literal is ``123`` or ``3/4`` (no spaces around the slash).
Names may contain dots, so ``A.z`` can refer to a named element of bundle A.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotInvertible, ParseError, UnboundName
from .exactnum import MPoly
from .reports import CheckReport
from .tower import Element, OreTower, map_element

# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Add:
    terms: tuple  # of (sign, Expr) with sign in {+1, -1}


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Inv:
    atom: object


def to_text(e):
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Add):
        out = []
        for i, (sign, t) in enumerate(e.terms):
            body = to_text(t)
            if isinstance(t, Add):
                body = f"({body})"
            if i == 0:
                out.append(body if sign > 0 else f"-{body}")
            else:
                out.append(f" {'+' if sign > 0 else '-'} {body}")
        return "".join(out)
    if isinstance(e, Mul):
        return "*".join(f"({to_text(f)})" if isinstance(f, Add) else to_text(f) for f in e.factors)
    if isinstance(e, Pow):
        b = to_text(e.base)
        if not isinstance(e.base, (Name, Inv)):
            b = f"({b})"
        return f"{b}^{e.exp}"
    if isinstance(e, Inv):
        return f"inv({to_text(e.atom)})"
    raise TypeError(e)


def free_names(e):
    if isinstance(e, Name):
        return {e.id}
    if isinstance(e, Add):
        return set().union(*(free_names(t) for _, t in e.terms))
    if isinstance(e, Mul):
        return set().union(*(free_names(f) for f in e.factors))
    if isinstance(e, Pow):
        return free_names(e.base)
    if isinstance(e, Inv):
        return free_names(e.atom)
    return set()


# ---------------------------------------------------------------------------
# tokenizer / parser

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_.']*)|(?P<op>[-+*^()=])"
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            for i, ch in enumerate(m.group(), start=pos):
                if ch == "\n":
                    line, line_start = line + 1, i + 1
        else:
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("end", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok.line, tok.col)

    def expect(self, text):
        t = self.peek()
        if t.text != text or t.kind == "end":
            raise self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return self.take()

    def expr(self):
        terms = []
        sign = 1
        if self.peek().text in "+-" and self.peek().kind == "op":
            sign = -1 if self.take().text == "-" else 1
        terms.append((sign, self.term()))
        while self.peek().kind == "op" and self.peek().text in "+-":
            sign = -1 if self.take().text == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek().text == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            t = self.peek()
            if t.kind != "num" or "/" in t.text:
                raise self.error("exponent must be a nonnegative integer")
            self.take()
            return Pow(base, int(t.text))
        return base

    def atom(self):
        t = self.peek()
        if t.kind == "num":
            self.take()
            return Num(Fraction(t.text))
        if t.kind == "name":
            self.take()
            if t.text == "inv" and self.peek().text == "(":
                self.take()
                inner = self.atom()
                self.expect(")")
                return Inv(inner)
            return Name(t.text)
        if t.text == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"expected an operand, found {t.text or 'end of input'!r}")


def parse(text):
    """Parse an expression; raises ParseError with line and column."""
    p = _Parser(text)
    e = p.expr()
    if p.peek().kind != "end":
        raise p.error(f"unexpected {p.peek().text!r}")
    return e


def parse_relation(text):
    """Parse ``lhs = rhs`` (or a bare expression asserted = 0) to lhs - rhs."""
    p = _Parser(text)
    lhs = p.expr()
    if p.peek().text == "=":
        p.take()
        rhs = p.expr()
        if p.peek().kind != "end":
            raise p.error(f"unexpected {p.peek().text!r}")
        return Add(((1, lhs), (-1, rhs)))
    if p.peek().kind != "end":
        raise p.error(f"unexpected {p.peek().text!r}")
    return lhs


# ---------------------------------------------------------------------------
# evaluation


def eval_expr(e, binding, tower):
    """Evaluate an Expr in ``tower``. Binding values are Elements, or Exprs /
    texts evaluated on first use (bound constants such as h or gamma)."""
    if isinstance(e, str):
        e = parse(e)
    cache = {}
    active = set()

    def lookup(name):
        if name in cache:
            return cache[name]
        if name not in binding:
            raise UnboundName(f"unbound name {name!r}")
        v = binding[name]
        if not isinstance(v, Element):
            if name in active:
                raise UnboundName(f"cyclic definition of {name!r}")
            active.add(name)
            v = ev(parse(v) if isinstance(v, str) else v)
            active.discard(name)
        elif v.tower is not tower:
            v = tower.convert(v)
        cache[name] = v
        return v

    def ev(x):
        if isinstance(x, Num):
            return tower.scalar(x.value)
        if isinstance(x, Name):
            return lookup(x.id)
        if isinstance(x, Add):
            acc = tower.zero()
            for sign, t in x.terms:
                v = ev(t)
                acc = acc + v if sign > 0 else acc - v
            return acc
        if isinstance(x, Mul):
            acc = ev(x.factors[0])
            for f in x.factors[1:]:
                acc = acc * ev(f)
            return acc
        if isinstance(x, Pow):
            return ev(x.base) ** x.exp
        if isinstance(x, Inv):
            v = ev(x.atom)
            if not v.is_base():
                raise NotInvertible(f"inv({to_text(x.atom)}): {v} is not a coefficient")
            return v.inverse()
        raise TypeError(x)

    return ev(e)


def parse_poly(text, variables, constants=None):
    """Parse a commutative polynomial in the given variables; ``constants``
    maps extra names to MPoly values."""
    variables = tuple(variables)
    constants = constants or {}

    def ev(x):
        if isinstance(x, Num):
            return MPoly.const(variables, x.value)
        if isinstance(x, Name):
            if x.id in constants and x.id not in variables:
                return constants[x.id].rename(variables)
            if x.id not in variables:
                raise UnboundName(f"unbound name {x.id!r} (variables: {', '.join(variables)})")
            return MPoly.var(variables, x.id)
        if isinstance(x, Add):
            acc = MPoly.zero(variables)
            for sign, t in x.terms:
                acc = acc + ev(t) if sign > 0 else acc - ev(t)
            return acc
        if isinstance(x, Mul):
            acc = ev(x.factors[0])
            for f in x.factors[1:]:
                acc = acc * ev(f)
            return acc
        if isinstance(x, Pow):
            return ev(x.base) ** x.exp
        if isinstance(x, Inv):
            v = ev(x.atom)
            if not v.is_constant() or not v.constant_value():
                raise NotInvertible(f"inv({to_text(x.atom)}) is not a polynomial")
            return MPoly.const(variables, Fraction(1) / v.constant_value())
        raise TypeError(x)

    return ev(parse(text) if isinstance(text, str) else text)


# ---------------------------------------------------------------------------
# presentations and maps


@dataclass
class Presentation:
    generators: tuple
    relations: list
    constants: dict = field(default_factory=dict)
    name: str = ""
    texts: list = field(default_factory=list)

    @classmethod
    def from_text(cls, name, generators, relations, constants=None):
        rels = [parse_relation(r) for r in relations]
        consts = {k: parse(v) if isinstance(v, str) else v for k, v in (constants or {}).items()}
        pres = cls(tuple(generators), rels, consts, name, list(relations))
        allowed = set(pres.generators) | set(consts)
        for r, text in zip(rels, relations):
            extra = free_names(r) - allowed
            if extra:
                raise UnboundName(f"relation {text!r} uses undeclared names {sorted(extra)}")
        return pres

    def relation_text(self, i):
        return self.texts[i] if i < len(self.texts) else to_text(self.relations[i])


def tower_presentation(tower):
    """The defining relations of a tower, as a Presentation over its generators."""
    rels = []
    base = tower.base
    for i in range(len(base)):
        for j in range(i + 1, len(base)):
            rels.append(f"{base[j]}*{base[i]} - {base[i]}*{base[j]}")
    for sv in tower.skew:
        for r in base + tower.skew_names[: tower.skew_names.index(sv.name)]:
            rels.append(f"{sv.name}*{r} - ({sv.sigma[r]})*{sv.name} - ({sv.delta[r]})")
    return Presentation.from_text(tower.name, tower.generators, rels)


@dataclass
class GeneratorMap:
    source: object  # OreTower or Presentation
    target: OreTower
    images: dict
    name: str = "map"

    def __post_init__(self):
        gens = self.source_generators()
        missing = [g for g in gens if g not in self.images]
        if missing:
            raise UnboundName(f"map {self.name}: no image for {missing}")
        self.images = {g: self._coerce(v) for g, v in self.images.items()}

    def _coerce(self, v):
        if isinstance(v, Element):
            return self.target.convert(v) if v.tower is not self.target else v
        return eval_expr(v, self.target.generator_binding(), self.target)

    @classmethod
    def from_texts(cls, source, target, images, name="map", binding=None):
        b = target.generator_binding()
        if binding:
            b.update(binding)
        imgs = {g: eval_expr(t, b, target) if isinstance(t, str) else t for g, t in images.items()}
        return cls(source, target, imgs, name)

    def source_generators(self):
        return self.source.generators

    def source_presentation(self):
        if isinstance(self.source, Presentation):
            return self.source
        return tower_presentation(self.source)

    def __call__(self, e):
        if isinstance(self.source, OreTower):
            e = self.source.convert(e) if e.tower is not self.source else e
        return map_element(e, self.images, self.target)

    def compose(self, first):
        """self o first."""
        return GeneratorMap(first.source, self.target,
                            {g: self(img) for g, img in first.images.items()},
                            f"{self.name}o{first.name}")


def identity_map(tower, name="id"):
    return GeneratorMap(tower, tower, tower.generator_binding(), name)


def check_relations(pres, m, name=None):
    """Every relation of ``pres`` maps to 0 under ``m``."""
    rep = CheckReport(name or f"relations {pres.name or 'P'} under {m.name}", True)
    binding = dict(m.images)
    for k, expr in pres.constants.items():
        binding.setdefault(k, expr)
    residuals = []
    for i, rel in enumerate(pres.relations):
        res = eval_expr(rel, binding, m.target)
        residuals.append(res)
        if res:
            rep.fail(f"relation {pres.relation_text(i)!r} has residual {res}", res)
    rep.data["relations"] = len(pres.relations)
    rep.data["residuals"] = [str(r) for r in residuals]
    if rep.passed:
        rep.note(f"{len(pres.relations)} relation(s) reduce to 0")
    return rep


def check_map(m, pres=None):
    return check_relations(pres or m.source_presentation(), m)


def check_involution(m, pres=None):
    """m is an endomorphism respecting the relations with m o m = id on generators."""
    if not isinstance(m.source, OreTower) or m.source is not m.target:
        raise ValueError("involution check needs a map from a tower to itself")
    rep = CheckReport(f"involution {m.name} on {m.target.name}", True)
    hom = check_map(m, pres)
    if not hom.passed:
        for d in hom.details:
            rep.fail(d, hom.residual)
    t = m.target
    for g in t.generators:
        back = m(m.images[g])
        if back != t.gen(g):
            rep.fail(f"{m.name}({m.name}({g})) = {back}, expected {g}", back - t.gen(g))
    if rep.passed:
        rep.note(f"homomorphism on {hom.data['relations']} relations; squares to the identity")
    return rep


def check_mutually_inverse(f, g, extra_source=(), extra_target=()):
    """g o f = id on f's source generators and f o g = id on g's source
    generators (plus any extra elements supplied)."""
    rep = CheckReport(f"inverse-pair {f.name}/{g.name}", True)
    A, B = f.source, g.source
    for name in A.generators:
        back = g(f.images[name])
        if back != A.gen(name):
            rep.fail(f"{g.name}({f.name}({name})) = {back}", back - A.gen(name))
    for name in B.generators:
        back = f(g.images[name])
        if back != B.gen(name):
            rep.fail(f"{f.name}({g.name}({name})) = {back}", back - B.gen(name))
    for label, x in extra_source:
        back = g(f(x))
        if back != x:
            rep.fail(f"{g.name}({f.name}({label})) = {back}, expected {x}", back - x)
    for label, y in extra_target:
        back = f(g(y))
        if back != y:
            rep.fail(f"{f.name}({g.name}({label})) = {back}, expected {y}", back - y)
    if rep.passed:
        rep.note("composites are the identity on generators; birational equivalence verified on generators")
    return rep


def check_ispe(tower, tau):
    """Checks for a two-step extension R[a; s1, d1][d; s2, d2] with tau swapping a, d."""
    if tower.n != 2:
        raise ValueError(f"ISPE check needs exactly two skew variables, {tower.name} has {tower.n}")
    a, d = tower.skew_names
    rep = CheckReport(f"ispe {tower.name}", True)
    for r in tower.base:
        if tau.images[r] != tower.gen(r):
            rep.fail(f"tau does not fix base generator {r}")
    if tau.images[a] != tower.gen(d) or tau.images[d] != tower.gen(a):
        rep.fail(f"tau does not swap {a} and {d}")
    inv = check_involution(tau)
    if not inv.passed:
        for msg in inv.details:
            rep.fail(msg, inv.residual)
    A = tower.gen(a)
    s2a = tower.skew[1].sigma[a]
    d2a = tower.skew[1].delta[a]
    u_normal = d2a == A * A - s2a * A
    rep.data["u_normal"] = u_normal
    rep.note(f"u = {d} - {a} is {'normal' if u_normal else 'not normal'}: "
             f"delta_2({a}) = {d2a}, {a}^2 - sigma_2({a}){a} = {A * A - s2a * A}")
    # hypotheses of the birational-equivalence criterion
    low = tower.skew[0]
    sigma1_id = all(low.sigma[r] == tower.gen(r) for r in tower.base)
    loc = tower.localized(tower.base and [MPoly.var(tower.base, r) for r in tower.base])
    ratios = [loc.gen(r).inverse() * loc.convert(low.delta[r]) for r in tower.base]
    equal_ratios = all(x == ratios[0] for x in ratios)
    U = loc.gen(d) - loc.gen(a)
    commutes = all(
        loc.gen(a) * (loc.gen(r).inverse() * U) == (loc.gen(r).inverse() * U) * loc.gen(a)
        for r in tower.base
    )
    hyp = sigma1_id and u_normal and equal_ratios and commutes
    rep.data.update(sigma1_identity=sigma1_id, equal_log_derivatives=equal_ratios,
                    a_commutes_with_r_inv_u=commutes, birational_hypotheses=hyp)
    rep.note(f"birational hypotheses: sigma_1 = id {sigma1_id}, equal r^-1 delta_1(r) {equal_ratios}, "
             f"a commutes with r^-1 u {commutes}")
    return rep
