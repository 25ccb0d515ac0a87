"""Built-in task suites covering the full acceptance matrix.

Each suite is plain task-file text, so ``oretower --suite NAME`` and
``oretower FILE`` go through exactly the same interpreter.
"""

GF = ("c^2", "c^3", "c^3 + c^2")
P_CASES = (("c^2", "c"), ("c^3", "c^2"), ("c", "1"), ("1", "0"))
SCAN_CASES = (("c^2", "c", "yes"), ("c^2", "1", "no"), ("c^3", "c^2", "yes"), ("c^3", "c", "no"))


def _zoo():
    lines = ["# algebras", "zoo M2 = Mq2(2)", "zoo M3 = Mq2(3)", "zoo J = MJ2"]
    for i, f in enumerate(GF):
        lines.append(f"zoo G{i} = Gf({f})")
    for i, (f, g) in enumerate(P_CASES):
        lines.append(f"zoo P{i} = P({f},{g})")
    lines += [
        "zoo W1 = ISPEnegWeyl(c^3)",
        "zoo W2 = ISPEnegWeyl(c^2 + 1)",
        "zoo Q1 = ISPEplane(2,commute,0)",
        "zoo Q2 = ISPEplane(-1,anti,c)",
        "zoo R = Rf(c^2)",
        "zoo E = G(c,c,-(1/2*u + a))",
    ]
    return lines


def _relations():
    lines = ["# zoo self-consistency"]
    names = ["M2", "M3", "J", "J.u"] + [f"G{i}" for i in range(len(GF))]
    names += [f"P{i}" for i in range(len(P_CASES))] + ["P0.ispe", "W1", "W2", "Q1", "Q2", "R", "E"]
    lines += [f"check relations {n}" for n in names]
    lines += [f"check construction P{i}" for i in range(len(P_CASES))]
    lines += ["check construction J"]
    return lines


def _central():
    lines = ["# centrality"]
    lines += [f"check central G{i}.z in G{i}" for i in range(len(GF))]
    lines += ["check central M2.detq in M2", "check central M3.detq in M3",
              "check central 2*(c*b + c*a) + u*c in E", "check central E.z in E",
              "check central J.detJ in J", "check central J.z in J.u"]
    lines += [f"check central P{i}.v in P{i}.loc" for i in (0, 1)]
    return lines


def _determinant():
    return [
        "# Jordanian determinant under u = d - a",
        "check identity a*d - c*b - c*d + (c*b + (c - (d - a))*a - a^2) = 0 in J",
        "check identity a*(u + a) - c*b - c*(u + a) = -(c*b + (c - u)*a - a^2) in J.u",
    ]


def _involutions():
    lines = ["# involutions"]
    for n in ["M2", "M3", "J"] + [f"G{i}" for i in range(len(GF))] + ["W1", "W2", "Q1", "Q2", "E"]:
        lines.append(f"check involution tau on {n}")
    lines += ["check involution tau_u on J"]
    lines += [f"check ispe {n}" for n in ("W1", "W2", "Q1", "Q2")]
    lines += ["check ispe P0.ispe with P0.tau_ispe"]
    return lines


def _birational():
    lines = ["# birational maps to Weyl algebras", "zoo S = ISPEWeylMaps",
             "check relations S.Phi", "check relations S.Psi", "check inverse-pair S.Phi S.Psi"]
    for i, f in enumerate(("c^2", "c^3")):
        lines += [
            f"zoo B{i} = GJMAWeylMaps({f})",
            f"check relations B{i}.Phi",
            f"check relations B{i}.Psi",
            f"check inverse-pair B{i}.Phi B{i}.Psi with B{i}.v; B{i}.z",
        ]
    return lines


def _gjma():
    lines = ["# GJMA construction"]
    lines += [f"check construction G{i}" for i in range(len(GF))]
    lines += [f"check tower-wellformed G{i}" for i in range(len(GF))]
    lines += [f"check relations G{i}.abcd" for i in range(len(GF))]
    lines += ["check identical G0 J.u", "check inner-auto b in G0 by c",
              "check inner-der d in P0.ispe by a"]
    return lines


def _centers(quick):
    if quick:
        return [
            "# bounded center searches",
            "check center-search R skew=3 coeff=3 expect 1",
            "check center-search G0 skew=2 coeff=2 expect 1; G0.z",
            "check center-search M2 skew=2 coeff=2 expect 1; M2.detq",
            "check center-search P0.loc skew=2 coeff=2 expect 1; P0.v; P0.v^2",
        ]
    return [
        "# bounded center searches",
        "check center-search R skew=4 coeff=4 expect 1",
        "check center-search G0 skew=2 coeff=3 expect 1; G0.z",
        "check center-search M2 skew=2 coeff=2 expect 1; M2.detq",
        "check center-search P0.loc skew=3 coeff=3 expect 1; P0.v; P0.v^2; P0.v^3",
    ]


def _normality():
    return [
        "# normal elements",
        "check normal u in P0",
        "check normal c in P0",
        "check normal c in G0",
        "check normal a in P0 expect none",
    ]


def _local_reduction():
    lines = ["# local reduction against inner powers of sigma_u"]
    for f, g, ans in SCAN_CASES:
        lines.append(f"check local-reduction f={f}, g={g} expect {ans}")
        lines.append(f"check inner-power-scan u in P({f},{g}).pres1.loc maxN=3 "
                     f"expect {'inner' if ans == 'yes' else 'none'}")
    lines += ["check local-reduction f=1, g=0 expect yes",
              "check inner-power-scan u in P3.pres1 maxN=2 expect inner"]
    return lines


def _growth(quick):
    n1, n2 = (6, 5) if quick else (10, 8)
    return ["# growth", f"check growth P0 N={n1} degree=3", f"check growth G0 N={n2} degree=4"]


def _quotients():
    return [
        "# quotients of P(c^2,c)",
        "map qu_f : P0 -> R with c=c, a=a, u=0",
        "map qu_b : R -> P0 with c=c, a=a",
        "check quotient P0 by u is R via qu_f qu_b",
        "base a u",
        "tower KAU =",
        "map qc_f : P0 -> KAU with c=0, a=a, u=u",
        "map qc_b : KAU -> P0 with a=a, u=u",
        "check quotient P0 by c is KAU via qc_f qc_b",
        "map quc_f : P0 -> R with c=c, a=a, u=c",
        "map quc_b : R -> P0 with c=c, a=a",
        "check quotient P0 by u - c is R via quc_f quc_b",
        "base c",
    ]


def _automorphisms():
    return [
        "# automorphism instances",
        "check automorphism P0 with a=2*a, c=2*c, u=3*u+5*c scales c by 2",
        "check automorphism R with a=a-c, c=c",
        "zoo A1 = Rf(1)",
        "check automorphism A1 with a=a-(c^3+1), c=c",
    ]


def _engine(quick):
    trials, pairs = (40, 25) if quick else (300, 200)
    towers = ["M2", "J", "J.u", "G0", "G2", "P0", "P0.loc", "P0.ispe", "W1", "Q2", "R", "E"]
    lines = ["# engine soundness"]
    lines += [f"check associativity {t} trials={trials}" for t in towers]
    lines += [f"check sigma-delta {t} trials={pairs}" for t in towers]
    lines += [f"check tower-wellformed {t}" for t in towers if "." not in t or t == "J.u"]
    for n in range(1, 11):
        lines.append(f"check identity a*c^{n} = c^{n}*a + {n}*c^{n + 1} in R")
    return lines


def build(quick=False):
    parts = [
        _zoo(), _relations(), _central(), _determinant(), _involutions(), _birational(),
        _gjma(), _centers(quick), _normality(), _local_reduction(), _growth(quick),
        _quotients(), _automorphisms(), _engine(quick),
    ]
    return "\n".join(line for part in parts for line in part) + "\n"


SUITES = {
    "paper-all": lambda: build(quick=False),
    "paper-quick": lambda: build(quick=True),
}
