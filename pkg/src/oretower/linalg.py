"""Exact Gaussian elimination over Q on sparse rows.

Rows are dicts ``{column: rational}``; columns are integers ``0..ncols-1``.
Pivot columns are chosen left to right, so the reduced row-echelon form and
the nullspace basis derived from it are deterministic.
"""

from fractions import Fraction


def _clean(row):
    return {j: v for j, v in row.items() if v}


def rref(rows, ncols):
    """Reduced row-echelon form. Returns (pivot_rows, pivot_cols) with
    ``pivot_rows[i][pivot_cols[i]] == 1``."""
    pivots = {}  # col -> row
    for raw in rows:
        row = _clean(raw)
        # eliminate existing pivots
        for col in sorted(row):
            if col in pivots and col in row:
                f = row[col]
                for j, v in pivots[col].items():
                    nv = row.get(j, 0) - f * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        if not row:
            continue
        lead = min(row)
        inv = Fraction(1) / row[lead]
        row = {j: v * inv for j, v in row.items()}
        # back-substitute into existing pivot rows
        for col, prow in pivots.items():
            f = prow.get(lead)
            if f:
                for j, v in row.items():
                    nv = prow.get(j, 0) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        pivots[lead] = row
    cols = sorted(pivots)
    return [pivots[c] for c in cols], cols


def nullspace(rows, ncols):
    """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
    prows, pcols = rref(rows, ncols)
    pset = set(pcols)
    basis = []
    for free in range(ncols):
        if free in pset:
            continue
        vec = {free: Fraction(1)}
        for prow, pc in zip(prows, pcols):
            v = prow.get(free)
            if v:
                vec[pc] = -v
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols):
    """One solution x of rows . x = rhs (free variables set to 0), or None."""
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = Fraction(b)
        aug.append(r)
    prows, pcols = rref(aug, ncols + 1)
    if ncols in pcols:
        return None
    x = {}
    for prow, pc in zip(prows, pcols):
        v = prow.get(ncols, 0)
        if v:
            x[pc] = v
    return x


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])
