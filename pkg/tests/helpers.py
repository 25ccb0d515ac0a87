"""Bridges between engine elements and the oracle's exponent dictionaries."""

import json
from fractions import Fraction
from pathlib import Path

from tests.oracles import naive

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def fixture(name):
    return json.loads((FIXTURES / name).read_text())


def engine_terms(e, order):
    """{exponent vector over ``order``: Fraction}; a monoid denominator that
    is a single base variable counts as a negative exponent."""
    t = e.tower
    out = {}
    for sk, f in e.terms.items():
        den = [0] * len(t.base)
        for p, k in zip(t.monoid.generators, f.den):
            if k:
                (name,) = [v for v in t.base if p == type(p).var(t.base, v)]
                den[t.base.index(name)] += k
        for bexp, cf in f.num.terms.items():
            exps = dict(zip(t.base, [a - b for a, b in zip(bexp, den)]))
            exps.update(zip(t.skew_names, sk))
            key = tuple(exps.get(x, 0) for x in order)
            out[key] = out.get(key, 0) + cf
    return {k: v for k, v in out.items() if v}


def engine_span(elements, order):
    return naive.canonical_span([engine_terms(e, order) for e in elements])


def load_span(rows):
    return [[(tuple(m), Fraction(v)) for m, v in row] for row in rows]


def oracle_terms(alg, text, order):
    return {alg.exponents(k, order): v for k, v in alg.element(text).items()}
