"""Exact irreducible character tables of small groups.

The table is computed by Dixon's method: the class-multiplication
matrices are simultaneously diagonalized over a prime field F_l with
l = 1 (mod exponent) and l > 2*sqrt(|S|), and the eigenvector data is
lifted to exact cyclotomic values through discrete logarithms against a
fixed primitive root.  No numerical linear algebra is involved.

Row order is canonical: by degree, then lexicographically on the
serialized values, so multiplicity vectors are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .cyclonum import Cyclotomic, from_rational, zeta
from .permcore import (
    CapExceeded,
    PermGroup,
    class_partition,
    conjugate,
    identity,
    inverse,
    mul,
    perm_order,
)

SIZE_CAP = 10**4


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters of S: rows = characters, columns = classes."""

    group: PermGroup
    classes: tuple  # ConjClass, canonical order (identity first)
    chars: tuple  # tuple of rows, each a tuple of Cyclotomic
    degrees: tuple  # chars[i][0] as plain integers
    exponent: int

    @property
    def class_count(self):
        return len(self.classes)

    @property
    def irr_count(self):
        return len(self.chars)

    @property
    def trivial_index(self):
        one = from_rational(1)
        for i, row in enumerate(self.chars):
            if all(v == one for v in row):
                return i
        raise AssertionError("no trivial character")

    def trivial_vector(self):
        v = [0] * self.irr_count
        v[self.trivial_index] = 1
        return tuple(v)

    def regular_vector(self):
        """Multiplicities of the regular representation: the degrees."""
        return tuple(self.degrees)

    def dimension_of(self, mult):
        return sum(m * d for m, d in zip(mult, self.degrees))


def character_table(S: PermGroup) -> CharacterTable:
    if S.order > SIZE_CAP:
        raise CapExceeded(f"group order {S.order} exceeds table cap {SIZE_CAP}")
    classes, lookup = class_partition(S)
    k = len(classes)
    reps = [c.representative for c in classes]
    sizes = [c.size for c in classes]
    exponent = 1
    for c in classes:
        exponent = _lcm(exponent, c.element_order)

    ell = _dixon_prime(exponent, S.order)
    class_elements = _class_elements(S, lookup, k)
    inv_class = [lookup[inverse(r)] for r in reps]

    # class multiplication matrices: (A_i)[j][m] = #{x in C_i : x^-1 z_m in C_j}
    mats = []
    for i in range(k):
        A = [[0] * k for _ in range(k)]
        for m in range(k):
            z = reps[m]
            for x in class_elements[i]:
                A[lookup[mul(inverse(x), z)]][m] += 1
        mats.append(A)

    omegas = _split_eigenvectors(mats, ell, k)
    assert len(omegas) == k

    g = _primitive_root(ell)
    z_e = pow(g, (ell - 1) // exponent, ell)
    inv_sizes = [pow(s % ell, ell - 2, ell) for s in sizes]
    order_of = [c.element_order for c in classes]
    power_class = [
        [lookup[_perm_power(reps[j], t)] for t in range(order_of[j])] for j in range(k)
    ]

    rows = []
    for v in omegas:
        inv_v0 = pow(v[0], ell - 2, ell)
        v = [x * inv_v0 % ell for x in v]
        s = sum(v[j] * v[inv_class[j]] * inv_sizes[j] for j in range(k)) % ell
        rhs = S.order * pow(s, ell - 2, ell) % ell
        degree = next(d for d in range(1, isqrt(S.order) + 1) if d * d % ell == rhs)
        chi_mod = [degree * v[j] * inv_sizes[j] % ell for j in range(k)]
        row = []
        for j in range(k):
            o = order_of[j]
            z_o = pow(z_e, exponent // o, ell)
            inv_o = pow(o, ell - 2, ell)
            value = from_rational(0)
            total = 0
            for m_exp in range(o):
                n_m = (
                    sum(
                        chi_mod[power_class[j][t]] * pow(z_o, -m_exp * t % (ell - 1), ell)
                        for t in range(o)
                    )
                    * inv_o
                    % ell
                )
                assert n_m <= degree, "eigenvalue multiplicity lift out of range"
                total += n_m
                if n_m:
                    value = value + n_m * zeta(o, m_exp)
            assert total == degree
            row.append(value)
        assert row[0] == degree
        rows.append(row)

    assert sum(r[0].rational_value() ** 2 for r in rows) == S.order
    rows.sort(key=lambda r: (r[0].rational_value(), tuple(str(v) for v in r)))
    table = CharacterTable(
        group=S,
        classes=tuple(classes),
        chars=tuple(tuple(r) for r in rows),
        degrees=tuple(int(r[0].rational_value()) for r in rows),
        exponent=exponent,
    )
    return table


def character_of(mult, table: CharacterTable):
    """Character vector of an integer combination of the irreducibles."""
    if len(mult) != table.irr_count:
        raise ValueError("multiplicity vector length mismatch")
    out = [from_rational(0)] * table.class_count
    for m, row in zip(mult, table.chars):
        if m:
            out = [acc + m * v for acc, v in zip(out, row)]
    return out


def inner_product(a, b, table: CharacterTable) -> Cyclotomic:
    """(1/|S|) * sum over classes of |C| * a(C) * conj(b(C))."""
    if len(a) != table.class_count or len(b) != table.class_count:
        raise ValueError("character vector length mismatch")
    total = from_rational(0)
    for cls, x, y in zip(table.classes, a, b):
        total = total + cls.size * (x * y.conjugate())
    return total * _fraction_inverse(table.group.order)


def _fraction_inverse(n):
    from fractions import Fraction

    return Fraction(1, n)


def export_table(table: CharacterTable) -> dict:
    """JSON-ready table: class data in cycle notation, values as E(n)^k."""
    from .permcore import format_perm

    return {
        "group_order": table.group.order,
        "exponent": table.exponent,
        "classes": [
            {
                "representative": format_perm(c.representative),
                "size": c.size,
                "element_order": c.element_order,
            }
            for c in table.classes
        ],
        "degrees": list(table.degrees),
        "characters": [[str(v) for v in row] for row in table.chars],
    }


# ------------------------------------------------------------ internals


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


def _class_elements(S, lookup, k):
    out = [[] for _ in range(k)]
    for x in sorted(lookup):
        out[lookup[x]].append(x)
    return out


def _perm_power(p, t):
    q = identity(len(p))
    for _ in range(t):
        q = mul(q, p)
    return q


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _dixon_prime(exponent, order):
    bound = 2 * isqrt(order)
    ell = exponent + 1
    while not (_is_prime(ell) and ell > bound):
        ell += exponent
    return ell


def _primitive_root(ell):
    factors = []
    m = ell - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // f, ell) != 1 for f in factors):
            return g
    raise AssertionError


def _rref_mod(rows, ell):
    """Reduced row echelon form mod ell; returns (rows, pivot_cols)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(len(rows[0]) if rows else 0):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % ell), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], ell - 2, ell)
        rows[r] = [x * inv % ell for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % ell:
                f = rows[i][c]
                rows[i] = [(x - f * y) % ell for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _left_nullspace_mod(M, ell):
    """Basis of {y : y*M = 0 mod ell} for square M, via RREF of M^T."""
    n = len(M)
    Mt = [[M[j][i] % ell for j in range(n)] for i in range(n)]
    rref, pivots = _rref_mod(Mt, ell)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        y = [0] * n
        y[fc] = 1
        for row, pc in zip(rref, pivots):
            y[pc] = (-row[fc]) % ell
        basis.append(y)
    return basis


def _split_eigenvectors(mats, ell, k):
    """Common eigenvectors (up to scale) of the class matrices over F_ell."""
    full = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    spaces = [(_rref_mod(full, ell))]
    for idx in range(1, k):
        A = mats[idx]
        if all(len(rows) == 1 for rows, _ in spaces):
            break
        new_spaces = []
        for rows, pivots in spaces:
            dim = len(rows)
            if dim == 1:
                new_spaces.append((rows, pivots))
                continue
            # restriction X: A * b_t = sum_s X[t][s] * b_s
            X = []
            for b in rows:
                img = [sum(A[r][c] * b[c] for c in range(k)) % ell for r in range(k)]
                coords = [0] * dim
                for t, pc in enumerate(pivots):
                    coords[t] = img[pc]
                    if coords[t]:
                        img = [(x - coords[t] * y) % ell for x, y in zip(img, rows[t])]
                assert not any(img), "class matrix does not preserve eigenspace"
                X.append(coords)
            for lam in range(ell):
                shifted = [
                    [(X[t][s] - (lam if t == s else 0)) % ell for s in range(dim)]
                    for t in range(dim)
                ]
                ys = _left_nullspace_mod(shifted, ell)
                if not ys:
                    continue
                sub = [
                    [sum(y[t] * rows[t][c] for t in range(dim)) % ell for c in range(k)]
                    for y in ys
                ]
                new_spaces.append(_rref_mod(sub, ell))
        spaces = new_spaces
    assert all(len(rows) == 1 for rows, _ in spaces), "splitting incomplete"
    vecs = sorted(rows[0] for rows, _ in spaces)
    return vecs
