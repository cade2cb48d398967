"""Exact linear algebra over Q on dense row-major matrices.

Matrices are plain lists of rows.  Elimination runs on integer rows (each
row is scaled to clear denominators and kept primitive by dividing out its
content), and pivots are normalized to 1 in a final division pass.
"""

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row):
    den = 1
    for c in row:
        if c:
            den = lcm(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in row]


def _primitive(row):
    g = 0
    for c in row:
        if c:
            g = gcd(g, c)
            if g == 1:
                return row
    if g > 1:
        return [c // g for c in row]
    return row


def _shape(M, ncols):
    if ncols is None:
        if not M:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(M[0])
    for row in M:
        if len(row) != ncols:
            raise ValueError("inconsistent row lengths")
    return ncols


def rref(M, ncols=None):
    """Reduced row echelon form of ``M``.

    Returns ``(R, pivots)`` where ``R`` has the same shape as ``M`` with
    Fraction entries and ``pivots`` lists the pivot columns in order.
    """
    ncols = _shape(M, ncols)
    rows = [_primitive(_integer_row(r)) for r in M]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        pv = piv_row[c]
        for k in range(len(rows)):
            if k == r:
                continue
            f = rows[k][c]
            if f:
                rows[k] = _primitive([pv * a - f * b for a, b in zip(rows[k], piv_row)])
        pivots.append(c)
        r += 1
    out = []
    for k, row in enumerate(rows):
        if k < len(pivots):
            pv = row[pivots[k]]
            out.append([Fraction(a, pv) for a in row])
        else:
            out.append([Fraction(0)] * ncols)
    return out, pivots


def rank(M, ncols=None):
    return len(rref(M, ncols)[1])


def kernel_basis(M, ncols=None):
    """Basis of the right null space ``{v : M v = 0}``.

    One vector per free column, in increasing order of that column; every
    vector is supported on columns up to its free column and is scaled so
    that its first nonzero entry is 1.
    """
    ncols = _shape(M, ncols)
    if not M:
        R, pivots = [], []
    else:
        R, pivots = rref(M, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            if p < f:
                v[p] = -R[row][f]
        lead = next(c for c in v if c)
        basis.append([c / lead for c in v])
    return basis


def solve(M, rhs, ncols=None):
    """One solution ``v`` of ``M v = rhs``, or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    ncols = _shape(M, ncols)
    if len(rhs) != len(M):
        raise ValueError("right-hand side has the wrong length")
    if not M:
        return [Fraction(0)] * ncols
    aug = [list(row) + [b] for row, b in zip(M, rhs)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    v = [Fraction(0)] * ncols
    for row, p in enumerate(pivots):
        v[p] = R[row][ncols]
    return v


def mat_vec(M, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M]
