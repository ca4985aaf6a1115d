"""Exact rational linear algebra over fractions.Fraction.

Everything here is dense, list-of-lists, and exact; no floats anywhere.
Matrices are small (the largest degree-n basis we row-reduce has n! rows
with n <= 5), so there is no pivoting strategy beyond "first nonzero".

The scalar type is the stdlib Fraction: always in lowest terms, positive
denominator, canonical zero Fraction(0).  Its str() form is exactly the
"num/den" wire format ("num" alone when the denominator is 1).
"""

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce ints / "num/den" strings / Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rat(x: Fraction) -> str:
    return str(rat(x))


def mat(rows):
    """Copy a matrix into Fraction entries, checking rectangularity."""
    out = [[rat(v) for v in row] for row in rows]
    if out:
        w = len(out[0])
        assert all(len(row) == w for row in out), "ragged matrix"
    return out


def zeros(r: int, c: int):
    return [[ZERO] * c for _ in range(r)]


def identity(n: int):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_mul(a, b):
    assert not a or not b or len(a[0]) == len(b), "shape mismatch"
    if not a or not b:
        return [[ZERO] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO)
             for j in range(cols)] for i in range(len(a))]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivots) where R is a new matrix and pivots the list of
    pivot column indices.  The input is not modified.
    """
    a = mat(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        pv = a[r][c]
        a[r] = [v / pv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def row_space_basis(m):
    """Independent rows spanning the row space, in rref form."""
    r, pivots = rref(m)
    return r[: len(pivots)]


def nullspace(m, cols=None):
    """Basis of {x : m x = 0} as a list of length-`cols` vectors."""
    if not m:
        assert cols is not None, "need column count for an empty matrix"
        return [[ONE if j == i else ZERO for j in range(cols)] for i in range(cols)]
    cols = len(m[0])
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(m, b):
    """One exact solution x of m x = b, or None if inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    aug = [list(map(rat, m[i])) + [rat(b[i])] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][cols]
    return x


def inverse(m):
    """Exact inverse of a square matrix; raises on singular input."""
    n = len(m)
    assert all(len(row) == n for row in m), "not square"
    aug = [list(map(rat, m[i])) + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in r[:n]]


def subspace_intersection(a, b):
    """Rows spanning (row space of a) ∩ (row space of b).

    a and b must have the same column count.  Uses the kernel trick: a
    combination x·a lies in both spaces iff (x, y) solves x·a - y·b = 0.
    """
    if not a or not b:
        return []
    assert len(a[0]) == len(b[0]), "ambient dimension mismatch"
    ra = row_space_basis(a)
    rb = row_space_basis(b)
    if not ra or not rb:
        return []
    stacked = transpose([row[:] for row in ra] + [[-v for v in row] for row in rb])
    combos = nullspace(stacked)
    vecs = []
    for x in combos:
        v = [sum((x[i] * ra[i][j] for i in range(len(ra))), ZERO)
             for j in range(len(ra[0]))]
        vecs.append(v)
    return row_space_basis(vecs) if vecs else []


def in_row_space(m, v) -> bool:
    if not m:
        return all(rat(x) == 0 for x in v)
    return rank(m) == rank(m + [list(v)])
