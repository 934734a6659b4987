"""Pure-Python integer kernels for the exact solvers.

A kernel row is ``(coeffs, rhs, trail, tden)``: the inequality
``coeffs . x <= rhs`` over integers, plus a nonnegative-combination audit
trail ``trail / tden`` (integer numerators over a positive denominator)
expressing the row as a combination of the rows the elimination started
from. Rows are kept gcd-reduced so coefficient growth stays bounded.

The compiled twin of this module is ``polarlp._kernels_c``; both expose the
same functions with identical results, and ``polarlp.kernels`` picks one at
import time.
"""

from fractions import Fraction
from math import gcd

from .errors import RowLimitExceeded

BACKEND = "python"


def reduce_row(coeffs, rhs, trail, tden):
    """Canonicalize a row; returns None when the row is vacuous (0 <= rhs>=0)."""
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g == 0 and rhs >= 0:
        return None
    g = gcd(g, rhs)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs //= g
        tden *= g
    tg = tden
    for t in trail:
        tg = gcd(tg, t)
    if tg > 1:
        trail = tuple(t // tg for t in trail)
        tden //= tg
    return coeffs, rhs, trail, tden


def eliminate(rows, j, limit):
    """One Fourier-Motzkin step: project variable `j` out of `rows`.

    Rows with zero coefficient on `j` pass through; every (positive,
    negative) pair is combined with positive multipliers that cancel
    coefficient `j`. Duplicate coefficient vectors keep the smallest
    right-hand side. Contradiction rows (all-zero coefficients, negative
    rhs) are kept; vacuous rows are dropped.
    """
    zero = []
    pos = []
    neg = []
    for row in rows:
        cj = row[0][j]
        if cj == 0:
            zero.append(row)
        elif cj > 0:
            pos.append(row)
        else:
            neg.append(row)

    out = {}

    def push(coeffs, rhs, trail, tden):
        cur = out.get(coeffs)
        if cur is None or rhs < cur[0]:
            out[coeffs] = (rhs, trail, tden)

    for coeffs, rhs, trail, tden in zero:
        push(coeffs, rhs, trail, tden)

    for pc, prhs, pt, ptd in pos:
        lp = pc[j]
        for nc, nrhs, nt, ntd in neg:
            ln = -nc[j]
            coeffs = tuple(lp * b + ln * a for a, b in zip(pc, nc))
            rhs = lp * nrhs + ln * prhs
            trail = tuple(lp * tb * ptd + ln * ta * ntd for ta, tb in zip(pt, nt))
            red = reduce_row(coeffs, rhs, trail, ptd * ntd)
            if red is not None:
                push(*red)
                if len(out) > limit:
                    raise RowLimitExceeded(
                        f"elimination exceeded {limit} rows; raise the limit "
                        f"or reformulate the instance"
                    )
    return [(c, v[0], v[1], v[2]) for c, v in out.items()]


def dot_int(a, b):
    total = 0
    for x, y in zip(a, b):
        total += x * y
    return total


def solve_square(mat, rhs):
    """Solve an n x n integer system exactly.

    Returns ``(nums, den)`` with den > 0 such that x_k = nums[k]/den, or
    None when the matrix is singular. Fraction-free (Bareiss) forward
    elimination keeps intermediate entries integral.
    """
    n = len(mat)
    a = [list(mat[i]) + [rhs[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv < 0:
            return None
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for jj in range(k + 1, n + 1):
                row_i[jj] = (pk * row_i[jj] - aik * row_k[jj]) // prev
            row_i[k] = 0
        prev = pk
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = Fraction(a[k][n])
        for jj in range(k + 1, n):
            s -= a[k][jj] * x[jj]
        x[k] = s / a[k][k]
    den = 1
    for f in x:
        den = den * f.denominator // gcd(den, f.denominator)
    nums = tuple(int(f * den) for f in x)
    return nums, den


def first_violation(rows, xnum, xden):
    """Index of the first row with coeffs.x > rhs at x = xnum/xden, else -1."""
    for i, (coeffs, rhs) in enumerate(rows):
        s = 0
        for c, v in zip(coeffs, xnum):
            s += c * v
        if s > rhs * xden:
            return i
    return -1
