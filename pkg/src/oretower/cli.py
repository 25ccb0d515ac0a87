"""Batch runner for task files: declarations followed by ``check`` lines,
reported in TAP style.

    oretower tasks.txt
    oretower --suite paper-quick --format=structured
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import zoo
from .analysis import (
    associativityCheck,
    automorphismInstance,
    centerSearchReport,
    centralizerCheck,
    growthReport,
    innerAutoCheck,
    innerDerCheck,
    innerPowerScan,
    localReductionReport,
    normalityCertSearch,
    normalReport,
    quotientCheck,
    sigmaDeltaCheck,
)
from .errors import MissingNormalityCertificate, OreTowerError, ParseError
from .lang import (
    GeneratorMap,
    Presentation,
    check_involution,
    check_ispe,
    check_map,
    check_mutually_inverse,
    check_relations,
    eval_expr,
    identity_map,
    parse,
    tower_presentation,
)
from .reports import CheckReport, merge
from .tower import OreTower, check_tower_wellformed

DEFAULT_BOUNDS = {"skew": 2, "coeff": 2}


class TaskError(Exception):
    """A declaration or check that cannot be parsed or evaluated."""

    def __init__(self, message, line=0, col=1):
        super().__init__(message)
        self.line = line
        self.col = col


def _weyl_bundle_4():
    d = zoo.makeISPEWeylMaps()
    return zoo.AlgebraBundle(
        "ISPEWeylMaps", d["S.loc"], tower_presentation(d["S"]), tau=d["tau"],
        alternates={"S": d["S"], "A1": d["A1"]}, maps={"Phi": d["Phi"], "Psi": d["Psi"]},
        provenance="S(k[r]) localized at r and A_1(k[t]) localized at t, y",
    )


def _weyl_bundle_7(f):
    d = zoo.makeGJMAWeylMaps(f)
    G = d["G"]
    named = {"v": d["extra"][0][1], "z": d["extra"][1][1]}
    return zoo.AlgebraBundle(
        f"GJMAWeylMaps({f})", d["G.loc"], G.presentation, named=named,
        alternates={"G": G.tower, "A1": d["A1"]}, maps={"Phi": d["Phi"], "Psi": d["Psi"]},
        provenance=f"{G.name} localized and A_1(k[s,t]) localized",
    )


ZOO = {
    "Rf": zoo.makeRf,
    "Oq": zoo.makeQuantumPlane,
    "AW": zoo.makeQuantumWeyl,
    "P": zoo.makeP,
    "Mq2": zoo.makeMq2,
    "MJ2": zoo.makeMJ2,
    "G": zoo.makeG,
    "Gf": zoo.makeGf,
    "ISPEnegWeyl": zoo.makeISPEnegWeyl,
    "ISPEplane": zoo.makeISPEQuantumPlane,
    "ISPEWeylMaps": _weyl_bundle_4,
    "GJMAWeylMaps": _weyl_bundle_7,
}


@dataclass
class Outcome:
    index: int
    description: str
    status: str  # PASS, FAIL or ERROR
    report: CheckReport = None
    error: str = ""
    line: int = 0

    def tap(self):
        head = f"{'ok' if self.status == 'PASS' else 'not ok'} {self.index} - {self.description}"
        lines = [head]
        if self.status == "ERROR":
            lines.append(f"  # error: {self.error}")
            return lines
        r = self.report
        for d in r.details:
            lines.append(f"  # {d}")
        if self.status == "FAIL":
            res = "" if r.residual is None else str(r.residual)
            lines.append(f"  # residual: {res or 'none'}")
        return lines

    def as_dict(self):
        out = {"index": self.index, "description": self.description, "status": self.status,
               "line": self.line}
        if self.report is not None:
            rd = self.report.as_dict()
            out.update(name=rd["name"], details=rd["details"], residual=rd["residual"],
                       data=rd["data"])
        if self.error:
            out["error"] = self.error
        return out


# ---------------------------------------------------------------------------
# text helpers


def split_top(text, sep):
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


def split_kv(text):
    out = {}
    for item in split_top(text, ","):
        if "=" not in item:
            raise TaskError(f"expected name=value, found {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise TaskError(f"{what} must be an integer, found {text!r}") from None


# ---------------------------------------------------------------------------
# the interpreter


@dataclass
class Session:
    bounds: dict = field(default_factory=lambda: dict(DEFAULT_BOUNDS))
    seed: int = 0
    params: list = field(default_factory=list)
    invertible: list = field(default_factory=list)
    base: tuple = ("c",)
    monoid: list = field(default_factory=list)
    polys: dict = field(default_factory=dict)
    towers: dict = field(default_factory=dict)
    bundles: dict = field(default_factory=dict)
    elems: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    outcomes: list = field(default_factory=list)
    _inline: dict = field(default_factory=dict)

    # -- lookup -------------------------------------------------------------
    def substitute_polys(self, text):
        if not self.polys:
            return text
        return re.sub(r"[A-Za-z_][A-Za-z0-9_.']*",
                      lambda m: f"({self.polys[m.group()]})" if m.group() in self.polys else m.group(),
                      text)

    def build_zoo(self, call):
        m = re.fullmatch(r"([A-Za-z_]\w*)\s*(?:\((.*)\))?", call.strip())
        if not m or m.group(1) not in ZOO:
            raise TaskError(f"unknown zoo constructor {call!r}; known: {', '.join(ZOO)}")
        args = [self.substitute_polys(a) for a in split_top(m.group(2) or "", ",")]
        key = (m.group(1), tuple(args))
        if key not in self._inline:
            try:
                self._inline[key] = ZOO[m.group(1)](*args)
            except TypeError as exc:
                raise TaskError(f"{m.group(1)}: {exc}") from None
        return self._inline[key]

    def bundle(self, ref):
        if ref in self.bundles:
            return self.bundles[ref]
        if ref.split("(")[0] in ZOO:
            return self.build_zoo(ref)
        raise TaskError(f"unknown algebra {ref!r}")

    def _split_ref(self, ref):
        """'A.loc' -> (bundle A, 'loc'); longest declared prefix wins."""
        if "(" in ref:
            close = ref.rindex(")")
            head, rest = ref[: close + 1], ref[close + 2:]
            return self.bundle(head), rest
        parts = ref.split(".")
        for i in range(len(parts) - 1, 0, -1):
            head = ".".join(parts[:i])
            if head in self.bundles or head in ZOO:
                return self.bundle(head), ".".join(parts[i:])
        return None, None

    def tower(self, ref):
        if ref in self.towers:
            return self.towers[ref]
        if ref in self.bundles or ref in ZOO or (ref.endswith(")") and ref.split("(")[0] in ZOO):
            return self.bundle(ref).tower
        b, rest = self._split_ref(ref)
        if b is not None and rest in b.alternates:
            return b.alternates[rest]
        raise TaskError(f"unknown tower {ref!r}")

    def generator_map(self, ref, bundle_ref=None):
        if ref in self.maps:
            return self.maps[ref]
        if bundle_ref is not None:
            b = self.bundle(bundle_ref)
            if ref == "tau" and b.tau is not None:
                return b.tau
            if ref in b.maps:
                return b.maps[ref]
        b, rest = self._split_ref(ref)
        if b is not None:
            if rest == "tau" and b.tau is not None:
                return b.tau
            if rest in b.maps:
                return b.maps[rest]
        raise TaskError(f"unknown map {ref!r}")

    def binding(self, t):
        b = t.generator_binding()
        for name, text in self.polys.items():
            b.setdefault(name, text)

        def add(name, e):
            if e.tower is t:
                b[name] = e
            elif e.tower.generators == t.generators:
                try:
                    b[name] = t.convert(e)
                except OreTowerError:
                    pass
            elif set(e.tower.generators) <= set(t.generators):
                b[name] = str(e)  # reparsed lazily, only if used

        for name, e in self.elems.items():
            add(name, e)
        for bname, bun in list(self.bundles.items()) + [(k, v) for k, v in self._inline_names()]:
            for k, e in bun.named.items():
                add(f"{bname}.{k}", e)
        return b

    def _inline_names(self):
        for (ctor, args), bun in self._inline.items():
            yield (f"{ctor}({','.join(args)})" if args else ctor), bun

    def element(self, text, t):
        try:
            return eval_expr(parse(text), self.binding(t), t)
        except ParseError as exc:
            raise TaskError(f"in {text!r}: {exc}") from None

    # -- declarations -------------------------------------------------------
    def declare(self, stmt):
        kw, _, rest = stmt.partition(" ")
        rest = rest.strip()
        if kw == "param":
            words = rest.split()
            if not words or len(words) > 2 or (len(words) == 2 and words[1] != "invertible"):
                raise TaskError("usage: param <name> [invertible]")
            self.params.append(words[0])
            if len(words) == 2:
                self.invertible.append(words[0])
        elif kw == "base":
            if not rest:
                raise TaskError("usage: base <v1> <v2> ...")
            self.base = tuple(rest.split())
        elif kw == "monoid":
            self.monoid = [self.substitute_polys(p) for p in rest.split()]
        elif kw == "poly":
            name, expr = self._assignment(rest, "poly <name> = <expr>")
            parse(expr)
            self.polys[name] = expr
        elif kw == "tower":
            name, body = self._assignment(rest, "tower <name> = <var>: sigma(x)=..., delta(x)=...; ...",
                                          allow_empty=True)
            self.towers[name] = self._build_tower(name, body)
        elif kw == "zoo":
            name, call = self._assignment(rest, "zoo <name> = <ctor>(args)")
            self.bundles[name] = self.build_zoo(call)
        elif kw == "elem":
            name, body = self._assignment(rest, "elem <name> = <expr> in <tower>")
            expr, t = self._in(body)
            self.elems[name] = self.element(expr, self.tower(t))
        elif kw == "map":
            m = re.fullmatch(r"(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s+with\s+(.+)", rest)
            if not m:
                raise TaskError("usage: map <name> : <src> -> <dst> with <gen>=<expr>, ...")
            name, src, dst, imgs = m.groups()
            S, T = self.tower(src), self.tower(dst)
            b = self.binding(T)
            images = {k: eval_expr(parse(v), b, T) for k, v in split_kv(imgs).items()}
            self.maps[name] = GeneratorMap(S, T, images, name)
        else:
            raise TaskError(f"unknown statement {kw!r}")

    @staticmethod
    def _assignment(rest, usage, allow_empty=False):
        m = re.fullmatch(r"([A-Za-z_][\w.]*)\s*=\s*(.*)", rest)
        if m and not m.group(2).strip() and not allow_empty:
            m = None
        if not m:
            raise TaskError(f"usage: {usage}")
        return m.group(1), m.group(2).strip()

    @staticmethod
    def _in(body):
        m = re.fullmatch(r"(.+?)\s+in\s+(\S+)", body)
        if not m:
            raise TaskError("expected '<expr> in <tower>'")
        return m.group(1), m.group(2)

    def _build_tower(self, name, body):
        skew = []
        for part in split_top(body, ";"):
            var, _, maps = part.partition(":")
            var = var.strip()
            if not re.fullmatch(r"[A-Za-z_]\w*", var):
                raise TaskError(f"bad skew variable name {var!r}")
            sigma, delta = {}, {}
            for item in split_top(maps, ","):
                m = re.fullmatch(r"(sigma|delta)\(\s*(\w+)\s*\)\s*=\s*(.+)", item)
                if not m:
                    raise TaskError(f"expected sigma(x)=<expr> or delta(x)=<expr>, found {item!r}")
                (sigma if m.group(1) == "sigma" else delta)[m.group(2)] = self.substitute_polys(m.group(3))
            skew.append((var, sigma, delta))
        base = tuple(self.base) + tuple(p for p in self.params if p not in self.base)
        monoid = list(self.monoid) + [p for p in self.invertible if p not in self.monoid]
        return OreTower(base, skew, monoid=monoid, name=name)

    # -- checks -------------------------------------------------------------
    def check(self, text):
        kind, _, rest = text.partition(" ")
        rest = rest.strip()
        fn = getattr(self, "_check_" + kind.replace("-", "_"), None)
        if fn is None:
            raise TaskError(f"unknown check kind {kind!r}")
        return fn(rest)

    def _check_relations(self, rest):
        ref, _, rels = rest.partition(" with ")
        ref = ref.strip()
        if rels:
            t = self.tower(ref)
            texts = split_top(rels, ";")
            consts = dict(self.polys)
            pres = Presentation.from_text(ref, t.generators, texts, consts)
            return check_relations(pres, identity_map(t), f"relations {ref}")
        try:
            return check_map(self.generator_map(ref))
        except TaskError:
            pass
        if ref in self.towers:
            return check_tower_wellformed(self.towers[ref])
        b, alt = self._split_ref(ref)
        if b is not None and alt in b.presentations:
            return check_relations(b.presentations[alt], identity_map(b.alternates[alt]), f"relations {ref}")
        return merge(f"relations {ref}", self.bundle(ref).self_check())

    def _check_central(self, rest):
        expr, t = self._in(rest)
        return centralizerCheck(self.element(expr, self.tower(t)))

    def _check_involution(self, rest):
        m = re.fullmatch(r"(\S+)(?:\s+on\s+(\S+))?", rest)
        if not m:
            raise TaskError("usage: check involution <map> [on <algebra>]")
        return check_involution(self.generator_map(m.group(1), m.group(2)))

    def _check_inverse_pair(self, rest):
        head, _, extra = rest.partition(" with ")
        words = head.split()
        if len(words) != 2:
            raise TaskError("usage: check inverse-pair <f> <g> [with <expr>; ...]")
        f, g = (self.generator_map(w) for w in words)
        xs = [(x, self.element(x, f.source)) for x in split_top(extra, ";")]
        return check_mutually_inverse(f, g, extra_source=xs)

    def _inner(self, rest, fn):
        m = re.fullmatch(r"(\w+)\s+in\s+(\S+)\s+by\s+(.+)", rest)
        if not m:
            raise TaskError("usage: check inner-auto|inner-der <var> in <tower> by <expr>")
        t = self.tower(m.group(2))
        if m.group(1) not in t.skew_names:
            raise TaskError(f"{m.group(1)!r} is not a skew variable of {t.name}")
        return fn(t, m.group(1), self.element(m.group(3), t))

    def _check_inner_auto(self, rest):
        return self._inner(rest, innerAutoCheck)

    def _check_inner_der(self, rest):
        return self._inner(rest, innerDerCheck)

    @staticmethod
    def _expect(rest, choices):
        m = re.fullmatch(r"(.*?)(?:\s+expect\s+(\w+))?", rest)
        exp = m.group(2)
        if exp is not None and exp not in choices:
            raise TaskError(f"expect must be one of {', '.join(choices)}")
        return m.group(1), exp

    def _check_normal(self, rest):
        rest, exp = self._expect(rest, ("normal", "none"))
        m = re.fullmatch(r"(.+?)\s+in\s+(\S+)(?:\s+bound\s+(\d+))?", rest)
        if not m:
            raise TaskError("usage: check normal <expr> in <tower> [bound n] [expect none]")
        bound = int(m.group(3)) if m.group(3) else self.bounds["skew"]
        rep = normalReport(self.element(m.group(1), self.tower(m.group(2))), bound)
        if exp == "none":
            found = rep.passed
            rep = CheckReport(f"not normal {m.group(1)} (bound {bound})", not found, rep.details)
            if found:
                rep.details.insert(0, "a normality certificate exists")
        return rep

    def _check_local_reduction(self, rest):
        rest, exp = self._expect(rest, ("yes", "no"))
        kv = split_kv(rest)
        if set(kv) - {"f", "g"} or "f" not in kv or "g" not in kv:
            raise TaskError("usage: check local-reduction f=<poly>, g=<poly> [expect yes|no]")
        f, g = (zoo.cpoly(self.substitute_polys(kv[k])) for k in ("f", "g"))
        return localReductionReport(f, zoo.factors_of(f), g, None if exp is None else exp == "yes")

    def _check_center_search(self, rest):
        head, _, expected = rest.partition(" expect ")
        words = head.split()
        if not words:
            raise TaskError("usage: check center-search <tower> [skew=n] [coeff=m] [expect e1; e2]")
        t = self.tower(words[0])
        bounds = dict(self.bounds)
        for w in words[1:]:
            k, _, v = w.partition("=")
            if k not in bounds:
                raise TaskError(f"unknown bound {k!r}")
            bounds[k] = _int(v, k)
        exp = [self.element(e, t) for e in split_top(expected, ";")] if expected else None
        return centerSearchReport(t, bounds["skew"], bounds["coeff"], exp)

    def _check_growth(self, rest):
        words = rest.split()
        if not words:
            raise TaskError("usage: check growth <tower> N=<n> [degree=<d>]")
        kv = dict(w.split("=", 1) for w in words[1:] if "=" in w)
        return growthReport(self.tower(words[0]), _int(kv.get("N", "8"), "N"),
                            _int(kv["degree"], "degree") if "degree" in kv else None)

    def _check_quotient(self, rest):
        m = re.fullmatch(r"(\S+)\s+by\s+(.+?)\s+is\s+(\S+)\s+via\s+(\S+)\s+(\S+)", rest)
        if not m:
            raise TaskError("usage: check quotient <tower> by <x>; ... is <algebra> via <forward> <backward>")
        t = self.tower(m.group(1))
        certs = []
        for x in split_top(m.group(2), ";"):
            cert = normalityCertSearch(self.element(x, t), self.bounds["skew"])
            if cert is None:
                raise MissingNormalityCertificate(f"{x} has no normality certificate within the bounds")
            certs.append(cert)
        claimed = m.group(3)
        if claimed in self.towers:
            pres = tower_presentation(self.towers[claimed])
        else:
            pres = self.bundle(claimed).presentation
        fwd, bwd = self.generator_map(m.group(4)), self.generator_map(m.group(5))
        return quotientCheck(t, certs, pres, fwd, bwd)

    def _check_ispe(self, rest):
        m = re.fullmatch(r"(\S+)(?:\s+with\s+(\S+))?", rest)
        if not m:
            raise TaskError("usage: check ispe <algebra> [with <involution>]")
        if m.group(2):
            return check_ispe(self.tower(m.group(1)), self.generator_map(m.group(2)))
        b = self.bundle(m.group(1))
        return check_ispe(b.tower, b.tau)

    def _check_tower_wellformed(self, rest):
        return check_tower_wellformed(self.tower(rest))

    def _check_inner_power_scan(self, rest):
        rest, exp = self._expect(rest, ("inner", "none"))
        m = re.fullmatch(r"(\w+)\s+in\s+(\S+)((?:\s+\w+=\d+)*)", rest)
        if not m:
            raise TaskError("usage: check inner-power-scan <var> in <tower> [maxN=n] [exp=m] [expect inner|none]")
        kv = {k: _int(v, k) for k, v in (w.split("=") for w in m.group(3).split())}
        t = self.tower(m.group(2))
        if m.group(1) not in t.skew_names:
            raise TaskError(f"{m.group(1)!r} is not a skew variable of {t.name}")
        rep = innerPowerScan(t, m.group(1), kv.get("maxN", 4), kv.get("exp", 4))
        if exp is not None and rep.data["inner"] != (exp == "inner"):
            rep.fail(f"expected {'a witness' if exp == 'inner' else 'no witness'}")
        return rep

    # extras beyond the core list
    def _check_identity(self, rest):
        lhs_rhs, t = self._in(rest)
        t = self.tower(t)
        lhs, sep, rhs = lhs_rhs.partition("=")
        if not sep:
            raise TaskError("usage: check identity <expr> = <expr> in <tower>")
        diff = self.element(lhs, t) - self.element(rhs, t)
        rep = CheckReport(f"identity {lhs.strip()} = {rhs.strip()}", True)
        if diff:
            rep.fail(f"difference {diff}", diff)
        return rep

    def _check_associativity(self, rest):
        words = rest.split()
        kv = dict(w.split("=", 1) for w in words[1:])
        return associativityCheck(self.tower(words[0]), _int(kv.get("trials", "300"), "trials"), self.seed)

    def _check_sigma_delta(self, rest):
        words = rest.split()
        kv = dict(w.split("=", 1) for w in words[1:])
        return sigmaDeltaCheck(self.tower(words[0]), _int(kv.get("trials", "200"), "trials"), self.seed)

    def _check_automorphism(self, rest):
        m = re.fullmatch(r"(\S+)\s+with\s+(.+?)(?:\s+scales\s+(.+?)\s+by\s+(\S+))?", rest)
        if not m:
            raise TaskError("usage: check automorphism <tower> with g=<expr>, ... [scales <expr> by <lambda>]")
        t = self.tower(m.group(1))
        scaled = {m.group(3): Fraction(m.group(4))} if m.group(3) else None
        return automorphismInstance(t, split_kv(m.group(2)), scaled)

    def _check_identical(self, rest):
        words = rest.split()
        if len(words) != 2:
            raise TaskError("usage: check identical <tower> <tower>")
        t1, t2 = (self.tower(w) for w in words)
        rep = CheckReport(f"identical {t1.name} {t2.name}", zoo.towers_identical(t1, t2))
        if rep.passed:
            rep.note("same generators and the same sigma/delta images")
        else:
            rep.fail(f"generators or sigma/delta images differ: {t1.generators} vs {t2.generators}")
        return rep

    def _check_construction(self, rest):
        b = self.bundle(rest)
        return merge(f"construction {b.name}", b.reports)


# ---------------------------------------------------------------------------
# driver


def run_text(text, session=None):
    """Execute a task file. Declaration errors raise TaskError with a line
    number; check errors are recorded as ERROR outcomes."""
    s = session or Session()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stmt = raw.split("#", 1)[0].strip()
        if not stmt:
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        if stmt.startswith("check "):
            body = stmt[len("check "):].strip()
            idx = len(s.outcomes) + 1
            try:
                rep = s.check(body)
                s.outcomes.append(Outcome(idx, body, "PASS" if rep.passed else "FAIL", rep, line=lineno))
            except (TaskError, OreTowerError, ValueError, ZeroDivisionError, KeyError) as exc:
                s.outcomes.append(Outcome(idx, body, "ERROR", error=f"line {lineno}: {exc}", line=lineno))
            continue
        try:
            s.declare(stmt)
        except TaskError as exc:
            raise TaskError(str(exc), lineno, col) from None
        except ParseError as exc:
            raise TaskError(str(exc), lineno, col) from None
        except (OreTowerError, ValueError, ZeroDivisionError, KeyError) as exc:
            raise TaskError(f"{type(exc).__name__}: {exc}", lineno, col) from None
    return s


def summary(outcomes):
    counts = {k: sum(o.status == k for o in outcomes) for k in ("PASS", "FAIL", "ERROR")}
    return counts["PASS"], counts["FAIL"], counts["ERROR"]


def render(outcomes, fmt="plain"):
    p, f, e = summary(outcomes)
    if fmt == "structured":
        doc = {"checks": [o.as_dict() for o in outcomes],
               "summary": {"passed": p, "failed": f, "errored": e}}
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"1..{len(outcomes)}"]
    for o in outcomes:
        lines.extend(o.tap())
    lines.append(f"# passed {p} / failed {f} / errored {e}")
    return "\n".join(lines) + "\n"


def exit_code(outcomes):
    _, f, e = summary(outcomes)
    return 2 if e else 1 if f else 0


def _bounds(text):
    out = dict(DEFAULT_BOUNDS)
    try:
        for k, v in (item.split("=") for item in text.split(",")):
            if k.strip() not in out:
                raise ValueError(k)
            out[k.strip()] = int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected skew=<n>,coeff=<m>, got {text!r}") from None
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(prog="oretower", description="Run algebra task files and report in TAP form.")
    ap.add_argument("taskfile", nargs="?", help="task file ('-' for standard input)")
    ap.add_argument("--format", choices=("plain", "structured"), default="plain")
    ap.add_argument("--bounds", type=_bounds, default=dict(DEFAULT_BOUNDS), metavar="skew=N,coeff=M")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--suite", help="built-in suite: paper-all or paper-quick")
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if (args.taskfile is None) == (args.suite is None):
        print("oretower: give exactly one of a task file or --suite", file=sys.stderr)
        return 2
    if args.suite is not None:
        from .suite import SUITES

        if args.suite not in SUITES:
            print(f"oretower: unknown suite {args.suite!r} (known: {', '.join(SUITES)})", file=sys.stderr)
            return 2
        source, text = f"suite {args.suite}", SUITES[args.suite]()
    else:
        source = args.taskfile
        try:
            text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
        except OSError as exc:
            print(f"oretower: {exc}", file=sys.stderr)
            return 2
    session = Session(bounds=args.bounds, seed=args.seed)
    try:
        run_text(text, session)
    except TaskError as exc:
        print(f"{source}:{exc.line}:{exc.col}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(session.outcomes, args.format))
    return exit_code(session.outcomes)


if __name__ == "__main__":
    sys.exit(main())
