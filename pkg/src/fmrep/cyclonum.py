"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored over the power basis 1, z, ..., z^(phi(n)-1) of
Q(zeta_n), i.e. canonically reduced modulo the cyclotomic polynomial
Phi_n, and the conductor n is always minimal for the element.  That
makes the representation unique, so equality is plain coordinate
equality.  Coefficients are exact rationals; no floating point enters
the arithmetic (floats appear only in the complex-evaluation sanity
helper).

Common-conductor lifting for mixed arithmetic uses the lcm of the two
conductors, never a fixed global conductor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyclotomic",
    "zeta",
    "from_rational",
    "rational_coordinates",
    "from_coordinates",
    "euler_phi",
    "cyclotomic_polynomial",
]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first (integers, monic)."""
    # x^n - 1 divided by Phi_d for all proper divisors d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert not any(num)
    return out


def _reduce_mod_phi(coeffs, n):
    """Reduce a coefficient list (exponents of zeta_n) modulo Phi_n."""
    phi = euler_phi(n)
    poly = list(cyclotomic_polynomial(n))
    coeffs = list(coeffs)
    if len(coeffs) < phi:
        coeffs += [Fraction(0)] * (phi - len(coeffs))
    for i in range(len(coeffs) - 1, phi - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(len(poly) - 1):
                coeffs[i - len(poly) + 1 + j] -= c * poly[j]
        coeffs.pop()
    return coeffs


@lru_cache(maxsize=None)
def _descent_matrix(n: int, m: int):
    """Rows: power-basis coordinates over zeta_n of zeta_m^i, i < phi(m)."""
    step = n // m
    rows = []
    for i in range(euler_phi(m)):
        coeffs = [Fraction(0)] * (step * i + 1)
        coeffs[step * i] = Fraction(1)
        rows.append(tuple(_reduce_mod_phi(coeffs, n)))
    return rows


def _solve_linear(rows, target):
    """Solve sum_i x_i * rows[i] = target exactly; None when unsolvable."""
    k = len(rows)
    width = len(target)
    aug = [[Fraction(r) for r in row] + [Fraction(0)] * k for row in rows]
    for i in range(k):
        aug[i][width + i] = Fraction(1)
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, k) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(k):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == k:
            break
    t = [Fraction(x) for x in target]
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        coef = t[c]
        if coef:
            for j in range(width):
                t[j] -= coef * aug[i][j]
            for j in range(k):
                sol[j] += coef * aug[i][width + j]
    if any(t):
        return None
    return sol


class Cyclotomic:
    """An element of some Q(zeta_n), canonically reduced.

    Do not call the constructor with unreduced data; use zeta(),
    from_rational() or the arithmetic operators.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs, _reduced=False):
        if not _reduced:
            coeffs = _reduce_mod_phi(coeffs, n)
            n, coeffs = _canonicalize(n, coeffs)
        self.n = n
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    # -- basics -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return self.n == 1

    def rational_value(self):
        if self.n != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self):
        return self.n == 1 and self.coeffs[0].denominator == 1

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, n):
        """Coefficient list of self over the power basis of zeta_n."""
        assert n % self.n == 0
        if n == self.n:
            return list(self.coeffs)
        step = n // self.n
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[step * i] = c
        return _reduce_mod_phi(coeffs, n)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        n = self.n * other.n // gcd(self.n, other.n)
        a, b = self._lift(n), other._lift(n)
        return Cyclotomic(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs], _reduced=True)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [c * other for c in self.coeffs], _reduced=True)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        n = self.n * other.n // gcd(self.n, other.n)
        a, b = self._lift(n), other._lift(n)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(n, prod)

    __rmul__ = __mul__

    def galois(self, t):
        """Image under zeta_n -> zeta_n^t; t must be coprime to the conductor."""
        if self.n == 1:
            return self
        if gcd(t, self.n) != 1:
            raise ValueError(f"galois exponent {t} not coprime to {self.n}")
        t %= self.n
        coeffs = [Fraction(0)] * self.n
        for i, c in enumerate(self.coeffs):
            coeffs[(i * t) % self.n] += c
        return Cyclotomic(self.n, coeffs)

    def conjugate(self):
        """Complex conjugation zeta_n^k -> zeta_n^(n-k)."""
        if self.n <= 2:
            return self
        return self.galois(self.n - 1)

    def trace(self):
        """Sum over all Galois conjugates; an exact rational."""
        total = from_rational(0)
        for t in range(1, self.n + 1):
            if gcd(t, self.n) == 1:
                total = total + self.galois(t)
        return total.rational_value()

    def to_complex(self):
        """Float evaluation; sanity oracle only, never used by core code."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    # -- display ------------------------------------------------------------

    def __str__(self):
        if self.n == 1:
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append((c, str(abs(c))))
            else:
                mono = f"E({self.n})^{i}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
                parts.append((c, mono))
        out = ""
        for sign_src, text in parts:
            if not out:
                out = ("-" if sign_src < 0 else "") + text
            else:
                out += (" - " if sign_src < 0 else " + ") + text
        return out or "0"

    def __repr__(self):
        return f"Cyclotomic({self})"


def _canonicalize(n, coeffs):
    """Minimal-conductor form of a reduced coefficient list."""
    coeffs = [Fraction(c) for c in coeffs]
    while True:
        if n == 1:
            return n, coeffs
        for p in _prime_divisors_cached(n):
            m = n // p
            rows = _descent_matrix(n, m)
            sol = _solve_linear(rows, coeffs)
            if sol is not None:
                n, coeffs = m, sol
                break
        else:
            return n, coeffs


@lru_cache(maxsize=None)
def _prime_divisors_cached(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def zeta(n, k=1):
    """The root of unity e^(2 pi i k / n), canonically reduced."""
    if n < 1:
        raise ValueError("conductor must be positive")
    k %= n
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return Cyclotomic(n, coeffs)


def from_rational(x):
    return Cyclotomic(1, [Fraction(x)], _reduced=True)


def rational_coordinates(a, n):
    """Coordinates of `a` over the power basis of Z[zeta_n].

    The conductor of `a` must divide n.  Reassembling the coordinates
    with from_coordinates() reproduces `a` exactly.
    """
    if n % a.n != 0:
        raise ValueError(f"conductor {a.n} does not divide {n}")
    coeffs = a._lift(n)
    phi = euler_phi(n)
    return list(coeffs) + [Fraction(0)] * (phi - len(coeffs))


def from_coordinates(coords, n):
    return Cyclotomic(n, list(coords))
