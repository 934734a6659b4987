# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled integer kernels; behavioural twin of polarlp._kernels_py.

Coefficients are arbitrary-precision Python ints (Fourier-Motzkin products
overflow any fixed width), so the win over the pure build comes from
removing interpreter loop and call overhead around the object arithmetic,
not from native integer math.
"""

from fractions import Fraction
from math import gcd

from polarlp.errors import RowLimitExceeded

BACKEND = "cython"


def reduce_row(tuple coeffs, rhs, tuple trail, tden):
    """Canonicalize a row; returns None when the row is vacuous (0 <= rhs>=0)."""
    cdef Py_ssize_t k, n = len(coeffs)
    g = 0
    for k in range(n):
        g = gcd(g, coeffs[k])
    if g == 0 and rhs >= 0:
        return None
    g = gcd(g, rhs)
    if g > 1:
        coeffs = tuple([c // g for c in coeffs])
        rhs = rhs // g
        tden = tden * g
    tg = tden
    cdef Py_ssize_t m = len(trail)
    for k in range(m):
        tg = gcd(tg, trail[k])
    if tg > 1:
        trail = tuple([t // tg for t in trail])
        tden = tden // tg
    return coeffs, rhs, trail, tden


def eliminate(list rows, Py_ssize_t j, Py_ssize_t limit):
    """One Fourier-Motzkin step: project variable `j` out of `rows`.

    Same contract as the pure-Python twin: pass-through of zero rows,
    positive pair combinations, gcd reduction, duplicate keys keep the
    smallest right-hand side, vacuous rows dropped, contradictions kept.
    """
    cdef list zero = [], pos = [], neg = []
    cdef Py_ssize_t k, n
    for row in rows:
        cj = (<tuple> row)[0][j]
        if cj == 0:
            zero.append(row)
        elif cj > 0:
            pos.append(row)
        else:
            neg.append(row)

    cdef dict out = {}
    for row in zero:
        coeffs = (<tuple> row)[0]
        rhs = (<tuple> row)[1]
        cur = out.get(coeffs)
        if cur is None or rhs < (<tuple> cur)[0]:
            out[coeffs] = ((<tuple> row)[1], (<tuple> row)[2], (<tuple> row)[3])

    cdef tuple pc, nc, pt, nt
    cdef list buf, tbuf
    for prow in pos:
        pc = (<tuple> prow)[0]
        prhs = (<tuple> prow)[1]
        pt = (<tuple> prow)[2]
        ptd = (<tuple> prow)[3]
        lp = pc[j]
        n = len(pc)
        for nrow in neg:
            nc = (<tuple> nrow)[0]
            nrhs = (<tuple> nrow)[1]
            nt = (<tuple> nrow)[2]
            ntd = (<tuple> nrow)[3]
            ln = -nc[j]
            buf = [None] * n
            for k in range(n):
                buf[k] = lp * nc[k] + ln * pc[k]
            rhs = lp * nrhs + ln * prhs
            tbuf = [None] * len(pt)
            for k in range(len(pt)):
                tbuf[k] = lp * nt[k] * ptd + ln * pt[k] * ntd
            red = reduce_row(tuple(buf), rhs, tuple(tbuf), ptd * ntd)
            if red is not None:
                coeffs = (<tuple> red)[0]
                rrhs = (<tuple> red)[1]
                cur = out.get(coeffs)
                if cur is None or rrhs < (<tuple> cur)[0]:
                    out[coeffs] = (rrhs, (<tuple> red)[2], (<tuple> red)[3])
                if len(out) > limit:
                    raise RowLimitExceeded(
                        f"elimination exceeded {limit} rows; raise the limit "
                        f"or reformulate the instance"
                    )
    return [(c, v[0], v[1], v[2]) for c, v in out.items()]


def dot_int(a, b):
    cdef Py_ssize_t k, n = len(a)
    total = 0
    for k in range(n):
        total += a[k] * b[k]
    return total


def solve_square(list mat, rhs):
    """Solve an n x n integer system exactly; (nums, den>0) or None if singular."""
    cdef Py_ssize_t n = len(mat)
    cdef Py_ssize_t i, k, jj, piv
    cdef list a = [list(mat[i]) + [rhs[i]] for i in range(n)]
    cdef list row_i, row_k
    prev = 1
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if (<list> a[i])[k] != 0:
                piv = i
                break
        if piv < 0:
            return None
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        row_k = <list> a[k]
        pk = row_k[k]
        for i in range(k + 1, n):
            row_i = <list> a[i]
            aik = row_i[k]
            for jj in range(k + 1, n + 1):
                row_i[jj] = (pk * row_i[jj] - aik * row_k[jj]) // prev
            row_i[k] = 0
        prev = pk
    cdef list x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        row_k = <list> a[k]
        s = Fraction(row_k[n])
        for jj in range(k + 1, n):
            s -= row_k[jj] * x[jj]
        x[k] = s / row_k[k]
    den = 1
    for f in x:
        den = den * f.denominator // gcd(den, f.denominator)
    nums = tuple([int(f * den) for f in x])
    return nums, den


def first_violation(list rows, xnum, xden):
    """Index of the first row with coeffs.x > rhs at x = xnum/xden, else -1."""
    cdef Py_ssize_t i, k, n, m = len(rows)
    cdef tuple coeffs
    for i in range(m):
        coeffs = (<tuple> rows[i])[0]
        rhs = (<tuple> rows[i])[1]
        n = len(coeffs)
        s = 0
        for k in range(n):
            s += coeffs[k] * xnum[k]
        if s > rhs * xden:
            return i
    return -1
