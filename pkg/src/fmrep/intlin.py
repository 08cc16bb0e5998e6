"""Exact integer linear algebra: row Hermite normal form, integer
kernels and integer solvability.

Matrices are lists of lists of Python ints (arbitrary precision), never
mutated by these functions.  Lattices are always handed around as
canonical HNF bases so that lattice equality is matrix equality.

HNF convention (row-style): U * A = H with U unimodular; pivots are
positive, entries above a pivot are reduced into [0, pivot), zero rows
sit at the bottom.
"""

from __future__ import annotations

from fractions import Fraction


def hermite_normal_form(A):
    """Return (H, U) with U unimodular and U*A = H in canonical row HNF.

    Pivot selection inside a column picks the entry of least absolute
    value, which keeps intermediate growth moderate.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(row) for row in A]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        while True:
            rows = [i for i in range(r, m) if H[i][c]]
            if not rows:
                break
            piv = min(rows, key=lambda i: (abs(H[i][c]), i))
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                U[r], U[piv] = U[piv], U[r]
            if len(rows) == 1:
                break
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    if q:
                        _row_sub(H[i], H[r], q)
                        _row_sub(U[i], U[r], q)
        if H[r][c] if r < m else 0:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    _row_sub(H[i], H[r], q)
                    _row_sub(U[i], U[r], q)
            r += 1
            if r == m:
                break
    return H, U


def _row_sub(row, other, q):
    for j in range(len(row)):
        row[j] -= q * other[j]


def nonzero_rows(H):
    return [row for row in H if any(row)]


def integer_kernel(A):
    """Canonical HNF basis of the left kernel {x in Z^m : x*A = 0}.

    The basis spans the full (saturated) kernel lattice: any integer
    vector annihilating A is an integer combination of the rows.
    """
    H, U = hermite_normal_form(A)
    rows = [U[i] for i in range(len(H)) if not any(H[i])]
    if not rows:
        return []
    K, _ = hermite_normal_form(rows)
    return nonzero_rows(K)


def solve_integer(A, b):
    """Some integer x with x*A = b, or None when no such x exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if len(b) != n:
        raise ValueError("dimension mismatch")
    H, U = hermite_normal_form(A)
    residual = list(b)
    coeff = [0] * m
    for i in range(m):
        piv = next((c for c in range(n) if H[i][c]), None)
        if piv is None:
            break
        q, rem = divmod(residual[piv], H[i][piv])
        if rem:
            return None
        if q:
            coeff[i] = q
            _row_sub(residual, H[i], q)
    if any(residual):
        return None
    x = [0] * m
    for i, q in enumerate(coeff):
        if q:
            for j in range(m):
                x[j] += q * U[i][j]
    return x


def lattice_contains(basis_rows, v):
    """Whether v lies in the integer row span of basis_rows."""
    if not basis_rows:
        return not any(v)
    return solve_integer(basis_rows, v) is not None


def lattice_coordinates(basis_rows, v):
    """Integer coordinates of v over basis_rows, or None."""
    return solve_integer(basis_rows, v)


def lattices_equal(rows_a, rows_b):
    """Whether two row sets span the same integer lattice."""
    Ha = nonzero_rows(hermite_normal_form(rows_a)[0]) if rows_a else []
    Hb = nonzero_rows(hermite_normal_form(rows_b)[0]) if rows_b else []
    return Ha == Hb


def rank(A):
    """Rank over Q, computed exactly."""
    if not A:
        return 0
    M = [[Fraction(x) for x in row] for row in A]
    m, n = len(M), len(M[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def is_unimodular(U):
    return abs(_det(U)) == 1


def _det(A):
    """Determinant by fraction-free elimination (Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def det(A):
    return _det(A)
