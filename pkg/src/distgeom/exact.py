"""Exact linear algebra over the rationals.

Fraction-free (Bareiss) elimination keeps every intermediate quantity an
exact rational, so the determinants, ranks, kernel vectors and definiteness
verdicts computed here are certificates rather than floating-point
judgements.  Inputs are plain nested sequences of int/Fraction scalars.
"""

from __future__ import annotations

import math
from fractions import Fraction

VERDICT_PD = "positive-definite"
VERDICT_PSD = "positive-semidefinite"
VERDICT_INDEFINITE = "indefinite"


def _exact_div(num, den):
    # Bareiss quotients are exact by construction; keep ints as ints.
    if isinstance(num, int) and isinstance(den, int):
        quot, rem = divmod(num, den)
        if rem == 0:
            return quot
        return Fraction(num, den)
    return Fraction(num) / den


def det(rows) -> int | Fraction:
    """Determinant of a square rational matrix by fraction-free elimination."""
    m = [list(row) for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(pivot * row_i[j] - lead * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if sign < 0 else m[n - 1][n - 1]


def rank(rows) -> int:
    """Exact rank via row echelon reduction over the rationals."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    nrows = len(m)
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][col]
        for i in range(r + 1, nrows):
            factor = Fraction(m[i][col]) / pivot
            if factor == 0:
                continue
            row = m[i]
            top = m[r]
            for j in range(col, ncols):
                row[j] = row[j] - factor * top[j]
        r += 1
        if r == nrows:
            break
    return r


def _primitive(vec):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    denom_lcm = 1
    for v in vec:
        denom_lcm = denom_lcm * Fraction(v).denominator // math.gcd(
            denom_lcm, Fraction(v).denominator
        )
    ints = [int(Fraction(v) * denom_lcm) for v in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints


def nullspace_vector(rows):
    """One nonzero kernel vector of a square rational matrix, or None.

    The vector is normalized to coprime integer entries with the first
    nonzero entry positive, so results are deterministic.
    """
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("nullspace_vector requires a square matrix")
    pivot_cols = []
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, n) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][col]
        m[r] = [v / pivot for v in m[r]]
        for i in range(n):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
    if r == n:
        return None
    free_col = next(c for c in range(n) if c not in pivot_cols)
    vec = [Fraction(0)] * n
    vec[free_col] = Fraction(1)
    for row_idx, col in enumerate(pivot_cols):
        vec[col] = -m[row_idx][free_col]
    return _primitive(vec)


def psd_verdict(rows) -> tuple[str, int]:
    """Exact definiteness of a symmetric rational matrix.

    Repeatedly pivots on a strictly positive diagonal entry and forms the
    Schur complement: the matrix is positive semidefinite exactly when no
    negative diagonal ever appears and every all-zero-diagonal remainder is
    the zero matrix.  Returns (verdict, rank); for semidefinite matrices the
    rank equals the number of positive pivots.
    """
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("psd_verdict requires a square matrix")
    active = list(range(n))
    positive_pivots = 0
    while active:
        if any(m[i][i] < 0 for i in active):
            return VERDICT_INDEFINITE, rank(rows)
        pivot = next((i for i in active if m[i][i] > 0), None)
        if pivot is None:
            # Zero diagonal throughout: semidefinite only if nothing is left.
            if any(m[i][j] != 0 for i in active for j in active):
                return VERDICT_INDEFINITE, rank(rows)
            break
        positive_pivots += 1
        active.remove(pivot)
        d = m[pivot][pivot]
        for i in active:
            if m[i][pivot] == 0:
                continue
            factor = m[i][pivot] / d
            for j in active:
                m[i][j] -= factor * m[pivot][j]
    if positive_pivots == n:
        return VERDICT_PD, n
    return VERDICT_PSD, positive_pivots
