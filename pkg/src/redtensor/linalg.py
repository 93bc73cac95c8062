"""Dense linear algebra over an exact cyclotomic field or over complex doubles.

Matrices are numpy arrays: ``dtype=object`` holding :class:`Scalar` entries in
exact mode, ``complex128`` in float mode.  A :class:`Field` bundles the
element-level operations so the same elimination code serves both modes.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import Scalar, as_scalar

ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)


class Field:
    exact = True

    def zeros(self, shape):
        raise NotImplementedError

    def eye(self, n):
        m = self.zeros((n, n))
        for i in range(n):
            m[i, i] = self.one
        return m


class ExactField(Field):
    """The cyclotomic numbers; equality is decided exactly."""

    exact = True
    zero = ZERO
    one = ONE
    name = "exact"

    def zeros(self, shape):
        return np.full(shape, ZERO, dtype=object)

    def convert(self, x):
        return as_scalar(x)

    def is_zero(self, x):
        return x.is_zero() if isinstance(x, Scalar) else x == 0

    def array(self, rows):
        rows = [[as_scalar(v) for v in row] for row in rows]
        if not rows:
            return self.zeros((0, 0))
        out = self.zeros((len(rows), len(rows[0])))
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                out[i, j] = v
        return out

    def conj(self, x):
        return x.conjugate()

    def to_complex(self, x):
        return complex(x)

    def __repr__(self):
        return "ExactField()"


class FloatField(Field):
    """Complex doubles compared with an absolute tolerance."""

    exact = False
    zero = 0j
    one = 1 + 0j
    name = "float"

    def __init__(self, tol=1e-9):
        self.tol = tol

    def zeros(self, shape):
        return np.zeros(shape, dtype=complex)

    def convert(self, x):
        return complex(x)

    def is_zero(self, x):
        return abs(x) <= self.tol

    def array(self, rows):
        return np.array([[complex(v) for v in row] for row in rows], dtype=complex).reshape(
            len(rows), len(rows[0]) if rows else 0
        )

    def conj(self, x):
        return x.conjugate()

    def to_complex(self, x):
        return complex(x)

    def __repr__(self):
        return f"FloatField(tol={self.tol})"


EXACT = ExactField()


def matmul(field, a, b):
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return field.zeros((a.shape[0], b.shape[1]))
    if not field.exact:
        return a @ b
    # structure maps are mostly zeros, and every exact product allocates
    rows = [[(j, y) for j, y in enumerate(row) if not y.is_zero()] for row in b]
    out = field.zeros((a.shape[0], b.shape[1]))
    for i, arow in enumerate(a):
        acc = {}
        for k, x in enumerate(arow):
            if x.is_zero():
                continue
            for j, y in rows[k]:
                t = x * y
                acc[j] = acc[j] + t if j in acc else t
        for j, v in acc.items():
            out[i, j] = v
    return out


def is_zero_matrix(field, m):
    if field.exact:
        return all(x.is_zero() for x in m.flat)
    return bool(np.all(np.abs(m) <= field.tol)) if m.size else True


def matrices_equal(field, a, b):
    if a.shape != b.shape:
        return False
    if field.exact:
        return all(x == y for x, y in zip(a.flat, b.flat))
    return bool(np.all(np.abs(a - b) <= field.tol)) if a.size else True


def first_nonzero(field, m):
    for x in m.flat:
        if not field.is_zero(x):
            return x
    return field.zero


def _pivot_row(field, m, col, start):
    if field.exact:
        for i in range(start, m.shape[0]):
            if not m[i, col].is_zero():
                return i
        return None
    best, best_val = None, field.tol
    for i in range(start, m.shape[0]):
        v = abs(m[i, col])
        if v > best_val:
            best, best_val = i, v
    return best


def rref(field, m):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = m.copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = _pivot_row(field, m, c, r)
        if p is None:
            continue
        if p != r:
            m[[r, p]] = m[[p, r]]
        inv = 1 / m[r, c]
        m[r] = m[r] * inv
        for i in range(rows):
            if i != r and not field.is_zero(m[i, c]):
                m[i] = m[i] - m[i, c] * m[r]
        if not field.exact:
            m[r, c] = 1
            m[np.abs(m) <= field.tol * 1e-3] = 0
        pivots.append(c)
        r += 1
    return m, pivots


def rank(field, m):
    if m.size == 0:
        return 0
    return len(rref(field, m)[1])


def nullspace(field, m):
    """Basis of {x : m x = 0} as the columns of the returned matrix."""
    rows, cols = m.shape
    if cols == 0:
        return field.zeros((0, 0))
    if rows == 0:
        return field.eye(cols)
    red, pivots = rref(field, m)
    free = [c for c in range(cols) if c not in pivots]
    out = field.zeros((cols, len(free)))
    for k, f in enumerate(free):
        out[f, k] = field.one
        for i, p in enumerate(pivots):
            out[p, k] = -red[i, f]
    return out


def column_space(field, m):
    """Independent columns spanning the column space (a basis)."""
    if m.size == 0:
        return field.zeros((m.shape[0], 0))
    _, pivots = rref(field, m)
    return m[:, pivots]


def solve(field, a, b):
    """A solution x of a x = b, or None when inconsistent."""
    rows, cols = a.shape
    aug = np.concatenate([a, b], axis=1) if b.ndim == 2 else np.concatenate([a, b[:, None]], axis=1)
    red, pivots = rref(field, aug)
    if any(p >= cols for p in pivots):
        return None
    k = aug.shape[1] - cols
    x = field.zeros((cols, k))
    for i, p in enumerate(pivots):
        x[p] = red[i, cols:]
    return x if b.ndim == 2 else x[:, 0]


def inverse(field, m):
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(field, m, field.eye(n))
    if x is None or rank(field, m) < n:
        raise ZeroDivisionError("singular matrix")
    return x


def trace(field, m):
    out = field.zero
    for i in range(min(m.shape)):
        out = out + m[i, i]
    return out


def convert_matrix(field, m):
    out = field.zeros(m.shape)
    for idx, v in np.ndenumerate(m):
        out[idx] = field.convert(v)
    return out
