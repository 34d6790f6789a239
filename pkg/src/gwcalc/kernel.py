"""
Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction` throughout (canonical after every
operation).  Integer matrices are plain lists of lists of ints; rational
matrices are lists of lists of anything ``Fraction`` accepts.
"""
from fractions import Fraction
from math import comb

__all__ = [
    "Rational",
    "binomial",
    "smith_normal_form",
    "rational_row_reduce",
    "matmul",
    "identity",
    "det",
]

Rational = Fraction


def binomial(p, q):
    """
    Truncated binomial coefficient.

    Returns C(p, q) for 0 <= q <= p and 0 in every other case, including
    negative upper index.  The summation formulas for the intersection
    numbers rely on this convention to zero out-of-range terms, so the
    usual extension to negative ``p`` is deliberately not used.

        >>> binomial(4, 2), binomial(3, -1), binomial(-2, 1)
        (6, 0, 0)
    """
    if q < 0 or p < 0 or q > p:
        return 0
    return comb(p, q)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)]
            for row in a]


def det(m):
    """Exact determinant by fraction-valued elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return sign * result


def smith_normal_form(m):
    """
    Smith normal form of an integer matrix.

    Returns ``(D, U, V)`` with ``U @ m @ V == D``, ``U`` and ``V`` unimodular,
    ``D`` diagonal with non-negative entries each dividing the next.  The
    pivot at every stage is an entry of minimal absolute value in the
    remaining block.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    for s in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(s, rows):
                for j in range(s, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return a, u, v
            swap_rows(s, pivot[0])
            swap_cols(s, pivot[1])
            p = a[s][s]
            clean = True
            for i in range(s + 1, rows):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // p))
                    clean = clean and a[i][s] == 0
            for j in range(s + 1, cols):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // p))
                    clean = clean and a[s][j] == 0
            if not clean:
                continue
            # divisibility: fold an offending row into row s and retry
            bad = next((i for i in range(s + 1, rows)
                        for j in range(s + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(s, bad, 1)
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            u[s] = [-x for x in u[s]]
    return a, u, v


def rational_row_reduce(m, ncols=None):
    """
    Reduced row echelon form over the rationals.

    Returns ``(rref, rank, kernel, pivots)``: the nonzero rows of the RREF,
    its rank, a basis of the right kernel (one vector per free column, with
    a 1 in that column), and the pivot column indices.  Pivots are chosen as
    the first nonzero entry scanning columns left to right, so the output is
    a function of the input alone.
    """
    a = [[Fraction(x) for x in row] for row in m]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    rref = a[:r]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in zip(rref, pivots):
            vec[pc] = -row[f]
        kernel.append(vec)
    return rref, r, kernel, pivots
