"""Exact commutative arithmetic: rationals, multivariate polynomials and
fractions whose denominators live in a declared multiplicative monoid.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing here ever
touches a float.
"""

from fractions import Fraction
from functools import reduce
from math import lcm

from .errors import DenominatorNotInMonoid, NotInvertible

Rational = Fraction


def _q(x):
    """Coerce to an exact rational, keeping ints as ints."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"not an exact rational: {x!r}")


def _grlex_key(exp):
    return (sum(exp), exp)


def _fmt_rational(q):
    return str(q)


class MPoly:
    """Commutative polynomial over Q in a fixed, ordered tuple of variables.

    ``terms`` maps exponent tuples to nonzero rationals. Instances are treated
    as immutable.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exp, cf in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.variables}")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent in polynomial")
            cf = _q(cf)
            if cf:
                clean[exp] = clean.get(exp, 0) + cf
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def const(cls, variables, value):
        variables = tuple(variables)
        value = _q(value)
        return cls._raw(variables, {(0,) * len(variables): value} if value else {})

    @classmethod
    def one(cls, variables):
        return cls.const(variables, 1)

    @classmethod
    def var(cls, variables, name, power=1):
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = power
        return cls._raw(variables, {tuple(exp): 1})

    @classmethod
    def monomial(cls, variables, exp, coeff=1):
        coeff = _q(coeff)
        return cls._raw(tuple(variables), {tuple(exp): coeff} if coeff else {})

    # predicates ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * len(self.variables), 0)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def leading(self):
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # arithmetic ---------------------------------------------------------
    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.variables, other)
        self._check(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for exp, cf in other.terms.items():
            v = out.get(exp, 0) + cf
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return MPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        k = _q(k)
        if not k:
            return MPoly._raw(self.variables, {})
        if k == 1:
            return self
        return MPoly._raw(self.variables, {e: _q(c * k) for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        if not self.terms or not other.terms:
            return MPoly._raw(self.variables, {})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MPoly._raw(self.variables, {e: _q(c) for e, c in out.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def monic(self):
        """Return (lc, p/lc)."""
        if not self.terms:
            raise ZeroDivisionError("monic of zero polynomial")
        _, lc = self.leading()
        return lc, self.scale(Fraction(1) / lc)

    def diff(self, name):
        i = self.variables.index(name)
        out = {}
        for exp, cf in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = _q(cf * exp[i])
        return MPoly._raw(self.variables, out)

    def divide_exact(self, q):
        """Exact quotient self / q, or None when q does not divide self."""
        self._check(q)
        if not q.terms:
            raise ZeroDivisionError("division by zero polynomial")
        qe, qc = q.leading()
        if len(q.terms) == 1:
            out = {}
            for exp, cf in self.terms.items():
                e = tuple(a - b for a, b in zip(exp, qe))
                if any(x < 0 for x in e):
                    return None
                out[e] = _q(Fraction(cf) / qc)
            return MPoly._raw(self.variables, out)
        rem = dict(self.terms)
        quo = {}
        while rem:
            re = max(rem, key=_grlex_key)
            e = tuple(a - b for a, b in zip(re, qe))
            if any(x < 0 for x in e):
                return None
            k = _q(Fraction(rem[re]) / qc)
            quo[e] = k
            for exp, cf in q.terms.items():
                t = tuple(a + b for a, b in zip(exp, e))
                v = rem.get(t, 0) - k * cf
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MPoly._raw(self.variables, quo)

    def substitute(self, images, one, zero=None):
        """Evaluate with ``images[i]`` standing for variable i.

        ``images`` may be any ring elements supporting ``+``, ``*`` and scalar
        multiplication; ``one`` is the unit of that ring. Variables are
        multiplied in declaration order.
        """
        acc = zero if zero is not None else one * 0
        powers = [dict() for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = one if k == 0 else pw(i, k - 1) * images[i]
            return cache[k]

        for exp, cf in self.sorted_terms():
            term = None
            for i, k in enumerate(exp):
                if k:
                    term = pw(i, k) if term is None else term * pw(i, k)
            if term is None:
                term = one
            acc = acc + term * cf
        return acc

    def rename(self, variables):
        """Re-embed into a larger (or reordered) variable tuple by name."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = [variables.index(v) for v in self.variables]
        out = {}
        for exp, cf in self.terms.items():
            e = [0] * len(variables)
            for i, k in zip(idx, exp):
                e[i] = k
            out[tuple(e)] = cf
        return MPoly._raw(variables, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, cf in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, exp) if k
            )
            parts.append(_join_coeff(cf, mono))
        return _join_signed(parts)

    def __repr__(self):
        return f"MPoly({self})"


def _join_coeff(cf, mono):
    """Render coefficient*monomial with an explicit leading sign."""
    sign = "-" if cf < 0 else "+"
    a = abs(cf)
    if not mono:
        return sign, _fmt_rational(a)
    if a == 1:
        return sign, mono
    return sign, f"{_fmt_rational(a)}*{mono}"


def _join_signed(parts):
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def poly_arith(p, q, op):
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_divide_check(p, q):
    return p.divide_exact(q)


class DenMonoid:
    """Multiplicative monoid generated by monic, pairwise distinct polynomials."""

    __slots__ = ("variables", "generators", "_pow_cache")

    def __init__(self, variables, generators=()):
        self.variables = tuple(variables)
        gens = []
        for g in generators:
            if not isinstance(g, MPoly):
                raise TypeError("monoid generators must be MPoly")
            g = g.rename(self.variables)
            if g.is_constant():
                raise ValueError(f"monoid generator {g} is a scalar")
            _, g = g.monic()
            if g in gens:
                raise ValueError(f"monoid generators must be pairwise non-associate: {g}")
            gens.append(g)
        self.generators = tuple(gens)
        self._pow_cache = {}

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, DenMonoid) and (self.variables, self.generators) == (
            other.variables,
            other.generators,
        )

    def __hash__(self):
        return hash((self.variables, self.generators))

    def index(self, p):
        _, p = p.monic()
        return self.generators.index(p)

    def gen_power(self, i, k):
        key = (i, k)
        if key not in self._pow_cache:
            self._pow_cache[key] = self.generators[i] ** k
        return self._pow_cache[key]

    def product(self, exps):
        out = MPoly.one(self.variables)
        for i, k in enumerate(exps):
            if k:
                out = out * self.gen_power(i, k)
        return out

    def decompose(self, p):
        """Write p = scalar * prod(gen_i^e_i); return (scalar, exps) or None."""
        if not p.terms:
            return None
        exps = [0] * len(self.generators)
        rest = p
        for i, g in enumerate(self.generators):
            while not rest.is_constant():
                w = rest.divide_exact(g)
                if w is None:
                    break
                rest = w
                exps[i] += 1
        if not rest.is_constant():
            return None
        return rest.constant_value(), tuple(exps)

    def contains(self, p):
        return self.decompose(p) is not None

    def extended(self, more):
        gens = list(self.generators)
        for g in more:
            g = g.rename(self.variables)
            _, g = g.monic()
            if g not in gens:
                gens.append(g)
        return DenMonoid(self.variables, gens)


class Frac:
    """num / prod(gen_i^den_i) with the numerator coprime to every used generator."""

    __slots__ = ("num", "den", "monoid", "_hash")

    def __init__(self, num, den, monoid):
        self.num = num
        self.den = den if num.terms else (0,) * len(den)
        self.monoid = monoid
        self._hash = None

    @classmethod
    def from_poly(cls, p, monoid):
        return cls(p.rename(monoid.variables), (0,) * len(monoid.generators), monoid)

    @classmethod
    def const(cls, value, monoid):
        return cls(MPoly.const(monoid.variables, value), (0,) * len(monoid.generators), monoid)

    @classmethod
    def zero(cls, monoid):
        return cls.const(0, monoid)

    @classmethod
    def one(cls, monoid):
        return cls.const(1, monoid)

    @classmethod
    def var(cls, name, monoid):
        return cls.from_poly(MPoly.var(monoid.variables, name), monoid)

    @classmethod
    def _reduced(cls, num, den, monoid):
        if not num.terms:
            return cls(num, (0,) * len(den), monoid)
        if any(den):
            den = list(den)
            for i, k in enumerate(den):
                g = monoid.generators[i]
                while den[i]:
                    w = num.divide_exact(g)
                    if w is None:
                        break
                    num = w
                    den[i] -= 1
            den = tuple(den)
        return cls(num, den, monoid)

    # predicates
    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_poly(self):
        return not any(self.den)

    def is_constant(self):
        return self.is_poly() and self.num.is_constant()

    def constant_value(self):
        return self.num.constant_value()

    def den_poly(self):
        return self.monoid.product(self.den)

    # arithmetic
    def _lift(self, other):
        if isinstance(other, Frac):
            if other.monoid is not self.monoid and other.monoid != self.monoid:
                raise ValueError("Frac monoid mismatch")
            return other
        if isinstance(other, MPoly):
            return Frac.from_poly(other, self.monoid)
        return Frac.const(other, self.monoid)

    def __add__(self, other):
        other = self._lift(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return Frac._reduced(self.num + other.num, self.den, self.monoid)
        top = tuple(max(a, b) for a, b in zip(self.den, other.den))
        m = self.monoid
        n1 = self.num * m.product(tuple(t - a for t, a in zip(top, self.den)))
        n2 = other.num * m.product(tuple(t - b for t, b in zip(top, other.den)))
        return Frac._reduced(n1 + n2, top, m)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den, self.monoid)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Frac.zero(self.monoid)
            return Frac(self.num.scale(other), self.den, self.monoid)
        other = self._lift(other)
        if not self.num.terms or not other.num.terms:
            return Frac.zero(self.monoid)
        num = self.num * other.num
        if not any(self.den) and not any(other.den):
            return Frac(num, self.den, self.monoid)
        den = tuple(a + b for a, b in zip(self.den, other.den))
        return Frac._reduced(num, den, self.monoid)

    __rmul__ = __mul__

    def inverse(self):
        dec = self.monoid.decompose(self.num)
        if dec is None:
            raise NotInvertible(f"{self} is not a unit of the localized base")
        scalar, exps = dec
        num = self.monoid.product(self.den).scale(Fraction(1) / scalar)
        return Frac._reduced(num, exps, self.monoid)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Frac.one(self.monoid)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Frac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, MPoly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def cross_equal(self, other):
        """Equality by cross multiplication (independent of normalization)."""
        return self.num * other.den_poly() == other.num * self.den_poly()

    def with_monoid(self, monoid):
        """Re-express over another monoid containing all generators used here."""
        if monoid is self.monoid:
            return self
        num = self.num.rename(monoid.variables)
        den = [0] * len(monoid.generators)
        for i, k in enumerate(self.den):
            if k:
                g = self.monoid.generators[i].rename(monoid.variables)
                try:
                    den[monoid.generators.index(g)] = k
                except ValueError:
                    raise DenominatorNotInMonoid(f"{g} is not a generator of the target monoid")
        return Frac._reduced(num, tuple(den), monoid)

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        dens = []
        for g, k in zip(self.monoid.generators, self.den):
            if not k:
                continue
            atom = f"inv({g})" if len(g.terms) == 1 and g.degree() == 1 else f"inv(({g}))"
            dens.append(atom if k == 1 else f"{atom}^{k}")
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return "*".join([num] + dens)

    def __repr__(self):
        return f"Frac({self})"


def frac_normalize(num, den, monoid):
    """Build the normalized fraction num/den, checking den lies in the monoid."""
    if not den.terms:
        raise ZeroDivisionError("zero denominator")
    dec = monoid.decompose(den.rename(monoid.variables))
    if dec is None:
        raise DenominatorNotInMonoid(f"{den} is not in the monoid generated by "
                                     f"{[str(g) for g in monoid.generators]}")
    scalar, exps = dec
    return Frac._reduced(num.rename(monoid.variables).scale(Fraction(1) / scalar), exps, monoid)


class CoeffMapSpec:
    """Endomorphism or (sigma-)derivation of the localized commutative base,
    given by its values on the base variables."""

    def __init__(self, kind, images, monoid, sigma=None):
        if kind not in ("endomorphism", "derivation"):
            raise ValueError(kind)
        self.kind = kind
        self.monoid = monoid
        self.images = {}
        for name in monoid.variables:
            img = images.get(name)
            if img is None:
                img = Frac.var(name, monoid) if kind == "endomorphism" else Frac.zero(monoid)
            elif not isinstance(img, Frac):
                img = Frac.from_poly(img, monoid) if isinstance(img, MPoly) else Frac.const(img, monoid)
            self.images[name] = img
        if kind == "derivation" and sigma is None:
            sigma = CoeffMapSpec("endomorphism", {}, monoid)
        self.sigma = sigma
        self._mono_cache = {}
        if kind == "endomorphism":
            for g in monoid.generators:
                img = self._apply_poly(g)
                if not img.is_zero() and not monoid.contains(img.num):
                    raise DenominatorNotInMonoid(f"endomorphism sends {g} to {img}, outside the monoid")

    def _apply_poly(self, p):
        if self.kind == "endomorphism":
            imgs = [self.images[v] for v in self.monoid.variables]
            return p.substitute(imgs, Frac.one(self.monoid), Frac.zero(self.monoid))
        out = Frac.zero(self.monoid)
        for exp, cf in p.terms.items():
            out = out + self._delta_monomial(exp) * cf
        return out

    def _delta_monomial(self, exp):
        if exp in self._mono_cache:
            return self._mono_cache[exp]
        m = self.monoid
        if not any(exp):
            res = Frac.zero(m)
        else:
            i = next(j for j, k in enumerate(exp) if k)
            rest = list(exp)
            rest[i] -= 1
            rest = tuple(rest)
            x = Frac.var(m.variables[i], m)
            # delta(x * r) = sigma(x) delta(r) + delta(x) r
            res = self.sigma.apply(x) * self._delta_monomial(rest) + self.images[m.variables[i]] * Frac(
                MPoly.monomial(m.variables, rest), (0,) * len(m.generators), m
            )
        self._mono_cache[exp] = res
        return res

    def apply(self, x):
        if not isinstance(x, Frac):
            x = Frac.from_poly(x, self.monoid) if isinstance(x, MPoly) else Frac.const(x, self.monoid)
        if self.kind == "endomorphism":
            num = self._apply_poly(x.num)
            if x.is_poly():
                return num
            return num * self._apply_poly(x.den_poly()).inverse()
        top = self._apply_poly(x.num)
        if x.is_poly():
            return top
        s = Frac.from_poly(x.den_poly(), self.monoid)
        r_over_s = x
        # delta(r/s) = sigma(s)^{-1} (delta(r) - delta(s) * r/s)
        return self.sigma.apply(s).inverse() * (top - self._apply_poly(s.num) * r_over_s)


def apply_coeff_map(spec, x):
    return spec.apply(x)


def split_rational_roots(f):
    """Split a univariate polynomial into monic linear factors (from its
    rational roots) and one leftover cofactor; returns the distinct monic
    factors. The leftover is treated as irreducible without proof."""
    if len(f.variables) != 1:
        raise ValueError("split_rational_roots expects a univariate polynomial")
    if f.is_constant():
        return []
    (x,) = f.variables
    factors = []
    rest = f.monic()[1]
    while rest.degree() >= 1:
        root = _rational_root(rest)
        if root is None:
            break
        lin = MPoly.var(f.variables, x) - root
        while True:
            w = rest.divide_exact(lin)
            if w is None:
                break
            rest = w
        factors.append(lin)
    if rest.degree() >= 1:
        factors.append(rest.monic()[1])
    return factors


def _rational_root(p):
    """A rational root of a univariate monic p, or None."""
    coeffs = [p.terms.get((k,), 0) for k in range(p.degree() + 1)]
    if coeffs[0] == 0:
        return 0
    den = reduce(lcm, (Fraction(c).denominator for c in coeffs), 1)
    ints = [int(Fraction(c) * den) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        return [d for d in range(1, n + 1) if n % d == 0]

    for num in divisors(a0):
        for dd in divisors(an):
            for cand in (Fraction(num, dd), Fraction(-num, dd)):
                if sum(c * cand**k for k, c in enumerate(coeffs)) == 0:
                    return _q(cand)
    return None
