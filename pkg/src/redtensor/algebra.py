"""Exact splitting of finite-dimensional semisimple algebras.

Idempotents are produced by factoring minimal polynomials of pseudo-random
elements over a cyclotomic field (norm-and-gcd factorisation, with sympy
doing the work over Q) and lifting the coprime factors through the Chinese
remainder theorem.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
import sympy

from . import linalg
from .cyclotomic import Scalar, as_scalar, canonicalize
from .errors import IncompleteDecomposition
from .linalg import EXACT

ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)

# extra conductors tried when a minimal polynomial will not split
_EXTENSIONS = (1, 3, 4, 8, 5, 12, 16, 7, 24, 9, 20, 15)


# ---------------------------------------------------------------------------
# polynomials: coefficient lists, lowest degree first


def _trim(p):
    p = list(p)
    while p and as_scalar(p[-1]).is_zero():
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)])


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def poly_divmod(p, q):
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim(p)
    out = [ZERO] * max(len(r) - len(q) + 1, 0)
    lead = q[-1].inverse()
    while len(r) >= len(q):
        k = len(r) - len(q)
        c = r[-1] * lead
        out[k] = c
        for i, b in enumerate(q):
            r[i + k] = r[i + k] - c * b
        r = _trim(r[:-1])
    return _trim(out), r


def monic(p):
    p = _trim(p)
    if not p:
        return p
    inv = p[-1].inverse()
    return [c * inv for c in p]


def poly_gcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return monic(p)


def poly_xgcd(p, q):
    """(g, s, t) with s p + t q = g monic."""
    r0, r1 = _trim(p), _trim(q)
    s0, s1, t0, t1 = [ONE], [], [], [ONE]
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(quo, t1))
    inv = r0[-1].inverse()
    return [c * inv for c in r0], [c * inv for c in s0], [c * inv for c in t0]


def poly_shift(p, s):
    """p(x + s)."""
    out = []
    for c in reversed(p):
        out = poly_add(poly_mul(out, [s, ONE]), [c])
    return out


def poly_conductor(p):
    n = 1
    for c in p:
        m = canonicalize(c).n
        n = n * m // math.gcd(n, m)
    return n


def _to_sympy(p, x):
    coeffs = []
    for c in reversed(p):
        q = c.rational_value()
        coeffs.append(sympy.Rational(q.numerator, q.denominator))
    return sympy.Poly(coeffs, x, domain="QQ")


def _from_sympy(P):
    coeffs = [Scalar.rational(Fraction(int(c.p), int(c.q))) for c in reversed(P.all_coeffs())]
    return monic(coeffs)


def _norm(p, n):
    out = [ONE]
    for k in range(1, max(n, 2)):
        if math.gcd(k, n) == 1:
            out = poly_mul(out, [c.galois(k) for c in p])
    return out


def factor(p, n=None):
    """Monic irreducible factors of a squarefree polynomial over Q(zeta_n)."""
    p = monic(p)
    if len(p) <= 2:
        return [p]
    base = poly_conductor(p)
    n = base if n is None else n * base // math.gcd(n, base)
    x = sympy.Symbol("x")
    if n == 1:
        _, facs = _to_sympy(p, x).factor_list()
        return [_from_sympy(f) for f, _ in facs]
    alpha = Scalar.root_of_unity(n)
    for s in range(0, 30):
        g = poly_shift(p, alpha * (-s)) if s else p
        N = _to_sympy(_norm(g, n), x)
        if sympy.degree(sympy.gcd(N, N.diff(x)), x) == 0:
            break
    else:  # pragma: no cover - every squarefree input has a good shift
        raise IncompleteDecomposition("no squarefree norm found while factoring")
    out = []
    for h, _ in N.factor_list()[1]:
        d = poly_gcd(g, _from_sympy(h))
        if len(d) > 1:
            out.append(poly_shift(d, alpha * s) if s else d)
    return out


# ---------------------------------------------------------------------------
# algebras


class FiniteAlgebra:
    """Associative unital algebra given by left-multiplication matrices.

    ``left[i]`` is the matrix of ``v -> b_i * v`` in the basis b.
    """

    def __init__(self, left, unit):
        self.left = left
        self.dim = len(left)
        self.unit = unit

    @classmethod
    def from_vectors(cls, vectors, product, unit_vector):
        """Algebra spanned by linearly independent vectors.

        ``product(i, j)`` returns the vector of b_i * b_j.
        """
        m = len(vectors)
        B = np.array(vectors, dtype=object).T if m else EXACT.zeros((0, 0))
        coords = _Coordinates(B)
        left = [EXACT.zeros((m, m)) for _ in range(m)]
        for i in range(m):
            for j in range(m):
                left[i][:, j] = coords(product(i, j))
        return cls(left, coords(unit_vector))

    def lmat(self, a):
        out = EXACT.zeros((self.dim, self.dim))
        for c, L in zip(a, self.left):
            if not c.is_zero():
                out = out + L * c
        return out

    def mul(self, a, b):
        return linalg.matmul(EXACT, self.lmat(a), b[:, None])[:, 0]

    def rmat(self, a):
        out = EXACT.zeros((self.dim, self.dim))
        for j, L in enumerate(self.left):
            out[:, j] = linalg.matmul(EXACT, L, a[:, None])[:, 0]
        return out

    def corner(self, e):
        """Matrix of b -> e b e (its image is the corner algebra eAe)."""
        return linalg.matmul(EXACT, self.lmat(e), self.rmat(e))

    def minimal_polynomial(self, x, e):
        """Minimal polynomial of x inside the corner with unit e."""
        L = self.lmat(x)
        powers = [e]
        while True:
            nxt = linalg.matmul(EXACT, L, powers[-1][:, None])[:, 0]
            M = np.array(powers, dtype=object).T
            sol = linalg.solve(EXACT, M, nxt)
            if sol is not None:
                return [-c for c in sol] + [ONE]
            powers.append(nxt)

    def evaluate(self, p, x, e):
        L = self.lmat(x)
        v = np.array([ZERO] * self.dim, dtype=object)
        for c in reversed(p):
            v = linalg.matmul(EXACT, L, v[:, None])[:, 0] + e * c
        return v

    def centre_basis(self):
        """Basis of the centre as coordinate vectors."""
        m = self.dim
        rows = []
        for j in range(m):
            # [b_j, z] = 0 for z = sum t_i b_i:  sum t_i (b_j b_i - b_i b_j)
            comm = EXACT.zeros((m, m))
            for i in range(m):
                comm[:, i] = self.left[j][:, i] - self.left[i][:, j]
            rows.append(comm)
        big = np.concatenate(rows, axis=0) if rows else EXACT.zeros((0, m))
        ns = linalg.nullspace(EXACT, big)
        return [ns[:, k] for k in range(ns.shape[1])]

    # splitting ------------------------------------------------------------
    def _split(self, x, e, n):
        """Coprime CRT idempotents from the minimal polynomial of x, or None."""
        f = self.minimal_polynomial(x, e)
        if len(f) <= 2:
            return None
        facs = None
        for ext in _EXTENSIONS:
            facs = factor(f, n * ext // math.gcd(n, ext))
            if len(facs) > 1:
                break
        if len(facs) <= 1:
            return None
        out = []
        for p in facs:
            q = poly_divmod(f, p)[0]
            _, s, _ = poly_xgcd(q, p)
            out.append(self.evaluate(poly_mul(s, q), x, e))
        return out

    def _refine(self, e, elements, rng, n, tries):
        """Split e into idempotents using candidate elements then random ones."""
        Q = self.corner(e)
        if linalg.rank(EXACT, Q) == 1:
            return [e]
        for _ in range(tries):
            if elements:
                x = linalg.matmul(EXACT, Q, elements.pop(0)[:, None])[:, 0]
            else:
                r = np.array([Scalar.rational(rng.randint(-4, 4)) for _ in range(self.dim)], dtype=object)
                x = linalg.matmul(EXACT, Q, r[:, None])[:, 0]
            parts = self._split(x, e, n)
            if parts:
                out = []
                for p in parts:
                    out.extend(self._refine(p, list(elements), rng, n, tries))
                return out
        return [e]

    def central_idempotents(self, seed=0, tries=12):
        """Primitive central idempotents."""
        n = self._conductor()
        rng = random.Random(seed)
        centre = self.centre_basis()
        out = []
        for e in self._refine_commutative(self.unit, centre, rng, n, tries):
            out.append(e)
        return out

    def _refine_commutative(self, e, centre, rng, n, tries):
        sub = [self.mul(e, z) for z in centre]
        if linalg.rank(EXACT, np.array(sub, dtype=object).T) <= 1:
            return [e]
        for _ in range(tries):
            x = sum((z * Scalar.rational(rng.randint(-4, 4)) for z in sub), np.array([ZERO] * self.dim, dtype=object))
            parts = self._split(x, e, n)
            if parts:
                out = []
                for p in parts:
                    out.extend(self._refine_commutative(p, centre, rng, n, tries))
                return out
        raise IncompleteDecomposition("could not split the centre of an endomorphism algebra")

    def primitive_idempotents(self, seed=0, tries=12):
        """Orthogonal primitive idempotents summing to the unit.

        Returns a list of (idempotent, block) where ``block`` numbers the
        central component the idempotent belongs to.
        """
        n = self._conductor()
        rng = random.Random(seed)
        out = []
        for b, c in enumerate(self.central_idempotents(seed, tries)):
            for e in self._refine(c, [], rng, n, tries):
                if linalg.rank(EXACT, self.corner(e)) != 1:
                    raise IncompleteDecomposition("a matrix block resisted splitting over cyclotomic fields")
                out.append((e, b))
        return out

    def _conductor(self):
        n = 1
        for L in self.left:
            for v in L.flat:
                if not v.is_zero():
                    m = canonicalize(v).n
                    n = n * m // math.gcd(n, m)
        return n


class _Coordinates:
    """Coordinates with respect to independent columns of B."""

    def __init__(self, B):
        self.B = B
        if B.shape[1] == 0:
            self.rows, self.inv = [], EXACT.zeros((0, 0))
            return
        _, pivots = linalg.rref(EXACT, B.T.copy())
        self.rows = list(pivots)
        self.inv = linalg.inverse(EXACT, B[self.rows, :])

    def __call__(self, v):
        v = np.asarray(v, dtype=object)
        if not self.rows:
            return np.array([], dtype=object)
        c = linalg.matmul(EXACT, self.inv, v[self.rows][:, None])[:, 0]
        return c
