"""Reference implementation used only by the tests.

Algebras are given by letters in a fixed order and rules ``YX -> rhs`` for
out-of-order adjacent pairs, with right-hand sides typed as text and parsed
by sympy (noncommutative symbols). Normal forms come from naive word
rewriting, and centers from sympy's exact nullspace. Nothing here imports
the package under test.
"""

from fractions import Fraction
from functools import lru_cache

import sympy


class WordAlgebra:
    """``letters`` in PBW order; ``rules`` maps 'Y X' (Y after X) to text.

    An optional ``inverse`` maps a letter name (e.g. 'ci') to the letter it
    inverts; adjacent inverse pairs cancel.
    """

    def __init__(self, letters, rules, inverse=None):
        self.letters = tuple(letters)
        self.rank = {x: i for i, x in enumerate(self.letters)}
        self.syms = {x: sympy.Symbol(x, commutative=False) for x in self.letters}
        self.inverse = dict(inverse or {})
        self.rules = {}
        for key, text in rules.items():
            y, x = key.split()
            self.rules[(y, x)] = self.parse(text)
        self._nf = lru_cache(maxsize=None)(self._normal_word)

    # -- text -> word polynomial ----------------------------------------
    def parse(self, text):
        expr = sympy.sympify(text.replace("^", "**"), locals=self.syms)
        return self.from_sympy(sympy.expand(expr))

    def from_sympy(self, expr):
        out = {}
        for term in sympy.Add.make_args(expr):
            if term == 0:
                continue
            coeff, word = Fraction(1), []
            for f in sympy.Mul.make_args(term):
                if f.is_commutative:
                    r = sympy.Rational(f)
                    coeff *= Fraction(int(r.p), int(r.q))
                else:
                    base, exp = f.as_base_exp()
                    word.extend([str(base)] * int(exp))
            key = tuple(word)
            out[key] = out.get(key, 0) + coeff
        return {k: v for k, v in out.items() if v}

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def add(x, y, scale=1):
        out = dict(x)
        for k, v in y.items():
            out[k] = out.get(k, 0) + scale * v
        return {k: v for k, v in out.items() if v}

    def mul(self, x, y):
        out = {}
        for k1, v1 in x.items():
            for k2, v2 in y.items():
                for k, v in self._nf(k1 + k2).items():
                    out[k] = out.get(k, 0) + v * v1 * v2
        return {k: v for k, v in out.items() if v}

    def normal(self, x):
        return self.mul(x, {(): Fraction(1)})

    def _normal_word(self, word):
        for i in range(len(word) - 1):
            y, x = word[i], word[i + 1]
            if self.inverse.get(y) == x or self.inverse.get(x) == y:
                return self._expand(word[:i], {(): Fraction(1)}, word[i + 2:])
            if self.rank[y] > self.rank[x]:
                return self._expand(word[:i], self.rules[(y, x)], word[i + 2:])
        return {word: Fraction(1)}

    def _expand(self, pre, mid, post):
        out = {}
        for k, v in mid.items():
            for k2, v2 in self._nf(pre + k + post).items():
                out[k2] = out.get(k2, 0) + v * v2
        return {k: v for k, v in out.items() if v}

    def element(self, text):
        return self.normal(self.parse(text))

    def commutator(self, x, y):
        return self.add(self.mul(x, y), self.mul(y, x), -1)

    # -- exponent vectors -------------------------------------------------
    def exponents(self, word, order):
        """Exponent vector over ``order``; an inverse letter counts -1 for
        the letter it inverts."""
        vec = [0] * len(order)
        for ch in word:
            if ch in self.inverse:
                vec[order.index(self.inverse[ch])] -= 1
            else:
                vec[order.index(ch)] += 1
        return tuple(vec)


def center_span(alg, ansatz_words, generators, order):
    """RREF basis (list of {exponent vector: Fraction}) of the elements of
    span(ansatz) commuting with every generator, computed with sympy."""
    cols = [alg.normal({w: Fraction(1)}) for w in ansatz_words]
    rows = {}
    for g in generators:
        gw = {(g,): Fraction(1)}
        for j, col in enumerate(cols):
            for k, v in alg.commutator(col, gw).items():
                rows.setdefault((g, k), {})[j] = v
    keys = sorted(rows, key=str)
    M = sympy.Matrix(len(keys), len(cols), lambda i, j: sympy.Rational(str(rows[keys[i]].get(j, 0))))
    null = M.nullspace() if keys else [sympy.eye(len(cols))[:, j] for j in range(len(cols))]
    elems = []
    for vec in null:
        e = {}
        for j, v in enumerate(vec):
            if v != 0:
                e = alg.add(e, cols[j], Fraction(int(v.p), int(v.q)))
        elems.append({alg.exponents(k, order): v for k, v in e.items()})
    return canonical_span(elems)


def canonical_span(elems):
    """Reduced row-echelon basis of a list of {monomial: Fraction}, as a list
    of sorted (monomial, Fraction) pairs. Equal spans give equal output."""
    monos = sorted({m for e in elems for m in e}, reverse=True)
    if not monos:
        return []
    M = sympy.Matrix(len(elems), len(monos),
                     lambda i, j: sympy.Rational(str(elems[i].get(monos[j], 0))))
    R, pivots = M.rref()
    out = []
    for i in range(len(pivots)):
        row = [(monos[j], Fraction(int(R[i, j].p), int(R[i, j].q))) for j in range(len(monos)) if R[i, j] != 0]
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# the algebras, with relations typed from their printed presentations


def jordan_plane_c2():
    return WordAlgebra("ca", {"a c": "c*a + c^2"})


def mq2(q):
    q = sympy.Rational(q)
    return WordAlgebra(
        ["c", "a", "d", "b"],
        {
            "a c": f"{q}*c*a",
            "d c": f"{q}*c*d",
            "d a": "a*d",
            "b c": f"c*b + ({q} - 1/({q}))*a*d",
            "b a": f"{q}*a*b",
            "b d": f"{q}*d*b",
        },
    )


def mj2_abcd():
    return WordAlgebra(
        ["c", "a", "d", "b"],
        {
            "a c": "c*a + c^2",
            "d c": "c*d + c^2",
            "d a": "a*d - c*d + c*a",
            "b c": "c*b + c*a + c*d + c^2",
            "b d": "d*b + c*b + c*d - a*d + d^2",
            "b a": "a*b + c*b + c*d - a*d + a^2",
        },
    )


def mj2_u():
    return WordAlgebra(
        ["c", "u", "a", "b"],
        {
            "u c": "c*u",
            "a c": "c*a + c^2",
            "a u": "u*a + c*u",  # from ua = au - cu
            "b c": "c*b + c*(2*a + u + c)",
            "b u": "u*b + u*(2*a + u + c)",
            "b a": "(a + c)*b + (c - u)*a",
        },
    )


def p_c2_c_localized():
    """P(c^2, c) over k[c, c^-1, u]: ac = ca + c^2, au = ua + cu."""
    return WordAlgebra(
        ["c", "ci", "u", "a"],
        {
            "u c": "c*u",
            "u ci": "ci*u",
            "a c": "c*a + c^2",
            "a ci": "ci*a - ci*c^2*ci",
            "a u": "u*a + c*u",
        },
        inverse={"ci": "c"},
    )
