"""Exact arithmetic in cyclotomic fields.

A :class:`Scalar` is an element of Q(zeta_n) stored in the power basis
``1, z, ..., z^(phi(n)-1)`` reduced modulo the n-th cyclotomic polynomial.
Binary operations lift both operands to the lcm of their conductors, so
results may carry a conductor larger than necessary; :func:`canonicalize`
returns the unique representative of minimal conductor.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = ["Scalar", "E", "canonicalize", "sqrt_rational", "as_scalar"]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divmod_exact(num, den):
    # integer polynomials, lowest degree first, monic divisor
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + len(den) - 1]
        out[k] = q
        if q:
            for j, d in enumerate(den):
                num[k + j] -= q * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def phi(n):
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n):
    """Reduction of z^k for 0 <= k < 2n into the power basis of Q(zeta_n)."""
    deg = phi(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(2 * n):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for j in range(deg):
                nxt[j] -= top * poly[j]
        cur = nxt
    return tuple(rows)


def _zero_vec(n):
    return (Fraction(0),) * phi(n)


def _add_scaled(acc, row, coeff):
    for j, r in enumerate(row):
        if r:
            acc[j] += coeff * r


@lru_cache(maxsize=4096)
def _lift_rows(n, m):
    """Images of z_n^k (k < phi(n)) inside Q(zeta_m), for n | m."""
    step = m // n
    table = _power_table(m)
    return tuple(table[(k * step) % m] for k in range(phi(n)))


class Scalar:
    """Element of the cyclotomic field Q(zeta_n)."""

    __slots__ = ("n", "c", "_canon", "_hash")

    def __init__(self, n, coeffs):
        self.n = n
        self.c = coeffs
        self._canon = None
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def rational(cls, q):
        return cls(1, (Fraction(q),))

    @classmethod
    def root_of_unity(cls, n, k=1):
        if n <= 0:
            raise ValueError("conductor must be positive")
        k %= n
        row = _power_table(n)[k]
        return cls(n, tuple(Fraction(r) for r in row))

    # coercion -----------------------------------------------------------
    def _lift(self, m):
        if m == self.n:
            return self.c
        if self.n == 1:
            out = [Fraction(0)] * phi(m)
            out[0] = self.c[0]
            return tuple(out)
        acc = [Fraction(0)] * phi(m)
        for coeff, row in zip(self.c, _lift_rows(self.n, m)):
            if coeff:
                _add_scaled(acc, row, coeff)
        return tuple(acc)

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar(1, (Fraction(other),))
        return NotImplemented

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.n == 1 and self.n == 1:
            return Scalar(1, (self.c[0] + other.c[0],))
        if other.n == 1:
            c = list(self.c)
            c[0] += other.c[0]
            return Scalar(self.n, tuple(c))
        if self.n == 1:
            return other.__add__(self)
        m = self.n * other.n // math.gcd(self.n, other.n)
        a, b = self._lift(m), other._lift(m)
        return Scalar(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.n, tuple(-x for x in self.c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.n == 1:
            q = other.c[0]
            if q == 1:
                return self
            return Scalar(self.n, tuple(x * q for x in self.c))
        if self.n == 1:
            return other.__mul__(self)
        m = self.n * other.n // math.gcd(self.n, other.n)
        a, b = self._lift(m), other._lift(m)
        deg = phi(m)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:deg]
        table = _power_table(m)
        for k in range(deg, 2 * deg - 1):
            if prod[k]:
                _add_scaled(out, table[k], prod[k])
        return Scalar(m, tuple(out))

    __rmul__ = __mul__

    def galois(self, k):
        """Image under the automorphism z -> z^k (k coprime to the conductor)."""
        if self.n == 1:
            return self
        if math.gcd(k, self.n) != 1:
            small = canonicalize(self)
            if small.n == self.n:
                raise ValueError(f"{k} is not coprime to the conductor {self.n}")
            return small.galois(k)
        k %= self.n
        table = _power_table(self.n)
        acc = [Fraction(0)] * phi(self.n)
        for j, coeff in enumerate(self.c):
            if coeff:
                _add_scaled(acc, table[(j * k) % self.n], coeff)
        return Scalar(self.n, tuple(acc))

    def conjugate(self):
        return self.galois(-1)

    def norm(self):
        """Field norm down to Q, as a Fraction."""
        if self.n == 1:
            return self.c[0]
        prod = self
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        return prod.rational_value()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if phi(self.n) == 1:
            return Scalar(1, (1 / self.c[0],))
        co = None
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                g = self.galois(k)
                co = g if co is None else co * g
        nrm = (self * co).rational_value()
        return co * (1 / nrm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.n == 1:
            return self * (1 / other.c[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # predicates ---------------------------------------------------------
    def is_zero(self):
        return not any(self.c)

    def is_rational(self):
        return self.canonical().n == 1

    def rational_value(self):
        s = self.canonical()
        if s.n != 1:
            raise ValueError(f"{self} is not rational")
        return s.c[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        if self.n == other.n:
            return self.c == other.c
        m = self.n * other.n // math.gcd(self.n, other.n)
        return self._lift(m) == other._lift(m)

    def __hash__(self):
        if self._hash is None:
            s = self.canonical()
            self._hash = hash((s.n, s.c))
        return self._hash

    # canonical form -----------------------------------------------------
    def canonical(self):
        if self._canon is None:
            self._canon = _canonicalize(self)
        return self._canon

    def __complex__(self):
        z = cmath.exp(2j * math.pi / self.n)
        return complex(sum(float(c) * z**k for k, c in enumerate(self.c) if c))

    def to_complex(self):
        return complex(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


def _candidate_conductors(n):
    return [m for m in _divisors(n) if m % 4 != 2]


def _canonicalize(x):
    if x.n == 1:
        return x
    n = x.n
    for m in _candidate_conductors(n):
        if m == n:
            break
        # membership: fixed by every automorphism that is trivial on Q(zeta_m)
        if all(
            x.galois(k) == x
            for k in range(1, n)
            if math.gcd(k, n) == 1 and k % m == 1
        ):
            coords = _solve_down(x, m)
            if coords is not None:
                s = Scalar(m, coords)
                s._canon = s
                return s
    target = n if n % 4 != 2 else n // 2
    if target != n:
        coords = _solve_down(x, target)
        s = Scalar(target, coords)
        s._canon = s
        return s
    x._canon = x
    return x


def _solve_down(x, m):
    """Coordinates of x in Q(zeta_m) (x known to lie there)."""
    rows = _lift_rows(m, x.n)  # phi(m) vectors of length phi(n)
    k = len(rows)
    # least-squares-free exact solve: Gaussian elimination on the transposed system
    mat = [[Fraction(rows[j][i]) for j in range(k)] + [x.c[i]] for i in range(phi(x.n))]
    piv_cols = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(mat)):
        if mat[i][k]:
            return None
    sol = [Fraction(0)] * k
    for i, col in enumerate(piv_cols):
        sol[col] = mat[i][k]
    return tuple(sol)


def canonicalize(x):
    """Minimal-conductor representative of ``x``."""
    return as_scalar(x).canonical()


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar.rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def E(n):
    """Primitive n-th root of unity exp(2 pi i / n)."""
    return Scalar.root_of_unity(n, 1)


def _fmt_fraction(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    s = x.canonical()
    if s.n == 1:
        return _fmt_fraction(s.c[0])
    parts = []
    for k, q in enumerate(s.c):
        if not q:
            continue
        mono = "1" if k == 0 else (f"E({s.n})" if k == 1 else f"E({s.n})^{k}")
        if k == 0:
            term = _fmt_fraction(abs(q))
        elif abs(q) == 1:
            term = mono
        else:
            term = f"{_fmt_fraction(abs(q))}*{mono}"
        parts.append(("-" if q < 0 else "+", term))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += sign + term
    return out


def _squarefree_split(n):
    square, free = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        square *= p ** (e // 2)
        if e % 2:
            free *= p
        p += 1
    return square, free * n


@lru_cache(maxsize=None)
def _sqrt_prime(p):
    if p == 2:
        return E(8) - E(8) ** 3
    z = E(p)
    g = Scalar.rational(0)
    for k in range(1, p):
        leg = pow(k, (p - 1) // 2, p)
        g = g + (z ** k if leg == 1 else -(z ** k))
    if p % 4 == 1:
        return g
    return -E(4) * g


def sqrt_rational(q):
    """Positive square root of a non-negative rational, as a Scalar."""
    q = Fraction(q)
    if q < 0:
        return E(4) * sqrt_rational(-q)
    if q == 0:
        return Scalar.rational(0)
    num = q.numerator * q.denominator
    square, free = _squarefree_split(num)
    root = Scalar.rational(Fraction(square, q.denominator))
    p = 2
    rest = free
    while rest > 1:
        if rest % p == 0:
            root = root * _sqrt_prime(p)
            rest //= p
        p += 1
    return root
