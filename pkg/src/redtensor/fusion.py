"""Skeletal fusion-category data, axiom checks and modular data.

Conventions
-----------
F-symbols act on splitting trees: the basis vector ``((a b)_e c)_d`` with
vertex indices (mu, nu) equals ``sum_f F[a,b,c,d,e,f,mu,nu,kappa,lam]``
times ``(a (b c)_f)_d`` with indices (kappa, lam).

``R[a,b,c,mu,nu]`` is the braiding a⊗b -> b⊗c with a passing over b,
sending the vertex mu of ``a b -> c`` to ``sum_nu R * (vertex nu of b a -> c)``.
The monodromy of a with b is ``R[b][a] ∘ R[a][b]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .cyclotomic import Scalar, as_scalar, sqrt_rational
from .errors import MissingSymbol, UnknownLabel, ZeroGlobalDimension
from . import linalg
from .linalg import EXACT

__all__ = [
    "FusionCategory",
    "ObjectExpr",
    "ModularData",
    "Violation",
    "ValidationReport",
    "validate",
    "twists_from_R",
    "modular_data_balancing",
    "mueger_centre",
    "monodromy_matrix",
]


class ObjectExpr:
    """Formal direct sum of simple objects with multiplicities."""

    __slots__ = ("mult",)

    def __init__(self, mult=None):
        self.mult = {k: v for k, v in (mult or {}).items() if v}

    @classmethod
    def simple(cls, label):
        return cls({label: 1})

    def __add__(self, other):
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return ObjectExpr(out)

    def __eq__(self, other):
        return isinstance(other, ObjectExpr) and self.mult == other.mult

    def __hash__(self):
        return hash(frozenset(self.mult.items()))

    def __bool__(self):
        return bool(self.mult)

    def items(self):
        return self.mult.items()

    def get(self, label):
        return self.mult.get(label, 0)

    def format(self, order=None):
        if not self.mult:
            return "0"
        keys = sorted(self.mult, key=(order.index if order else str))
        return " + ".join(k if self.mult[k] == 1 else f"{k}^{self.mult[k]}" for k in keys)

    def __repr__(self):
        return f"ObjectExpr({self.format()})"


@dataclass
class FusionCategory:
    name: str
    labels: tuple
    unit: str
    dual: dict
    N: dict  # (a, b) -> {c: multiplicity}
    F: dict  # (a, b, c, d, e, f, mu, nu, kappa, lam) -> Scalar
    R: dict | None = None  # (a, b, c, mu, nu) -> Scalar
    dims: dict = field(default_factory=dict)
    twists: dict | None = None

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self._index = {a: i for i, a in enumerate(self.labels)}

    # fusion ring --------------------------------------------------------
    def check_label(self, a):
        if a not in self._index:
            raise UnknownLabel(f"unknown label {a!r} in category {self.name}")
        return a

    def index(self, a):
        return self._index[a]

    def Nabc(self, a, b, c):
        return self.N.get((a, b), {}).get(c, 0)

    def fusion(self, a, b):
        """Channels of a⊗b in label order, with multiplicities."""
        row = self.N.get((a, b), {})
        return [(c, row[c]) for c in self.labels if row.get(c)]

    @property
    def braided(self):
        return self.R is not None

    @cached_property
    def symmetric(self):
        if not self.braided:
            return False
        for a in self.labels:
            for b in self.labels:
                for c, m in self.fusion(a, b):
                    mono = monodromy_matrix(self, a, b, c)
                    if not linalg.matrices_equal(EXACT, mono, EXACT.eye(m)):
                        return False
        return True

    @property
    def rank(self):
        return len(self.labels)

    def global_dim(self):
        total = Scalar.rational(0)
        for a in self.labels:
            total = total + self.dims[a] * self.dims[a]
        return total

    def is_multiplicity_free(self):
        return all(m <= 1 for row in self.N.values() for m in row.values())

    def tensor_expr(self, x, y):
        out = {}
        for a, m in x.items():
            for b, n in y.items():
                for c, k in self.fusion(a, b):
                    out[c] = out.get(c, 0) + m * n * k
        return ObjectExpr(out)

    # symbol access ------------------------------------------------------
    def f_symbol(self, a, b, c, d, e, f, mu=0, nu=0, kappa=0, lam=0):
        key = (a, b, c, d, e, f, mu, nu, kappa, lam)
        try:
            return self.F[key]
        except KeyError:
            raise MissingSymbol("F", key) from None

    def r_symbol(self, a, b, c, mu=0, nu=0):
        if self.R is None:
            raise MissingSymbol("R", (a, b, c, mu, nu))
        key = (a, b, c, mu, nu)
        try:
            return self.R[key]
        except KeyError:
            raise MissingSymbol("R", key) from None

    def r_matrix(self, a, b, c):
        m = self.Nabc(a, b, c)
        out = EXACT.zeros((m, m))
        for mu in range(m):
            for nu in range(m):
                out[mu, nu] = self.r_symbol(a, b, c, mu, nu)
        return out

    def __repr__(self):
        return f"FusionCategory({self.name!r}, labels={list(self.labels)})"


def monodromy_matrix(C, a, b, c):
    """Matrix of R[b][a]∘R[a][b] on the multiplicity space of a b -> c."""
    return C.r_matrix(a, b, c) @ C.r_matrix(b, a, c) if C.Nabc(a, b, c) else EXACT.zeros((0, 0))


# ---------------------------------------------------------------------------
# validation


@dataclass
class Violation:
    axiom: str
    labels: tuple
    residual: object

    def __str__(self):
        return f"{self.axiom} {' '.join(map(str, self.labels))} residual={self.residual}"


@dataclass
class ValidationReport:
    category: str
    checked: dict = field(default_factory=dict)  # axiom -> number of instances
    violations: list = field(default_factory=list)

    def __bool__(self):
        return bool(self.violations)

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def ok(self, axiom=None):
        if axiom is None:
            return not self.violations
        return not any(v.axiom == axiom for v in self.violations)

    def lines(self):
        return [str(v) for v in self.violations]

    def summary(self):
        parts = []
        for axiom in ("pentagon", "hexagon"):
            if axiom in self.checked:
                parts.append(f"{axiom} {'OK' if self.ok(axiom) else 'FAIL'}")
        for axiom in dict.fromkeys(v.axiom for v in self.violations):
            if axiom not in ("pentagon", "hexagon"):
                parts.append(f"{axiom} FAIL")
        return " ".join(parts)


def _real_positive(x):
    z = complex(x)
    return as_scalar(x) == as_scalar(x).conjugate() and z.real > 0


def validate(C, field=EXACT):
    """Exhaustively check the fusion-category axioms on skeletal data."""
    from .diagram import Engine  # local import: the engine depends on this module

    report = ValidationReport(C.name)

    def fail(axiom, labels, residual):
        report.violations.append(Violation(axiom, tuple(labels), residual))

    def count(axiom):
        report.checked[axiom] = report.checked.get(axiom, 0) + 1

    u = C.unit
    labels = C.labels
    # unit and duality
    for a in labels:
        for b in labels:
            count("unit")
            want = 1 if a == b else 0
            if C.Nabc(u, a, b) != want or C.Nabc(a, u, b) != want:
                fail("unit", (a, b), C.Nabc(u, a, b) - want)
        count("duality")
        ad = C.dual.get(a)
        if ad is None or C.dual.get(ad) != a:
            fail("duality", (a,), "dual-not-involutive")
        elif C.Nabc(a, ad, u) != 1:
            fail("duality", (a, ad), C.Nabc(a, ad, u) - 1)
    # dimensions
    for a in labels:
        if a not in C.dims:
            raise MissingSymbol("dim", (a,))
        count("dims")
        if not _real_positive(C.dims[a]):
            fail("dims", (a,), C.dims[a])
        for b in labels:
            lhs = C.dims[a] * C.dims[b]
            rhs = Scalar.rational(0)
            for c, m in C.fusion(a, b):
                rhs = rhs + m * C.dims[c]
            count("dims")
            if lhs != rhs:
                fail("dims", (a, b), lhs - rhs)
    if report.violations:
        return report

    eng = Engine(C, field)
    # normalisation of symbols touching the unit
    for (a, b, c, d, e, f, *_), val in C.F.items():
        if u in (a, b, c):
            count("unit")
            if val != 1:
                fail("unit", ("F", a, b, c, d, e, f), val - 1)
    # F- and R-matrices must be invertible before anything is inverted
    for a in labels:
        for b in labels:
            for c in labels:
                for d in labels:
                    ridx, cols, fm = eng.fmatrix(a, b, c, d)
                    if not cols and not ridx:
                        continue
                    count("invertibility")
                    if len(cols) != len(ridx) or linalg.rank(field, fm) < len(cols):
                        fail("invertibility", ("F", a, b, c, d), "singular")
            if C.braided:
                for c, m in C.fusion(a, b):
                    count("invertibility")
                    if linalg.rank(field, eng.rmatrix(a, b, c)) < m:
                        fail("invertibility", ("R", a, b, c), "singular")
    if report.violations:
        return report
    # pentagon
    for a in labels:
        for b in labels:
            for c in labels:
                for d in labels:
                    count("pentagon")
                    for chan, res in eng.pentagon_defect(a, b, c, d).items():
                        fail("pentagon", (a, b, c, d, chan), res)
    # pivotal / spherical structure
    for a in labels:
        count("spherical")
        loop = eng.left_loop(a)
        if not _field_eq(field, loop, C.dims[a]):
            fail("spherical", (a,), loop - field.convert(C.dims[a]))
    if C.braided:
        for a in labels:
            for b in labels:
                for c in labels:
                    count("hexagon")
                    for which, (chan, res) in eng.hexagon_defects(a, b, c):
                        fail("hexagon", (which, a, b, c, chan), res)
        if C.twists is not None:
            th = twists_from_R(C)
            for a in labels:
                count("twist")
                if th[a] != C.twists[a]:
                    fail("twist", (a,), th[a] - C.twists[a])
    return report


def _field_eq(field, x, y):
    return field.is_zero(field.convert(x) - field.convert(y))


# ---------------------------------------------------------------------------
# ribbon and modular data


def twists_from_R(C):
    """theta_a = d_a^-1 sum_c d_c tr R^{aa}_c."""
    out = {}
    for a in C.labels:
        total = Scalar.rational(0)
        for c, m in C.fusion(a, a):
            tr = linalg.trace(EXACT, C.r_matrix(a, a, c))
            total = total + C.dims[c] * tr
        out[a] = total / C.dims[a]
    return out


@dataclass
class ModularData:
    labels: tuple
    S: np.ndarray
    T: list
    gauss_sum: object
    central_charge: Fraction | None
    modular: bool
    global_dim: object

    @property
    def rank(self):
        return len(self.labels)


def central_charge_of(gauss, global_dim):
    """Phase of the Gauss sum as a rational number mod 8, or None."""
    g = as_scalar(gauss)
    if g.is_zero():
        return None
    z = complex(g)
    turns = math.atan2(z.imag, z.real) / (2 * math.pi)
    c = Fraction(turns * 8).limit_denominator(10_000) % 8
    # exact confirmation: gauss = |gauss| * exp(2 pi i c / 8)
    unit = Scalar.root_of_unity(8 * c.denominator, c.numerator)
    mod2 = g * g.conjugate()
    ratio = g / unit
    if ratio != ratio.conjugate() or complex(ratio).real <= 0 or ratio * ratio != mod2:
        return None
    return c


def exact_sqrt(x):
    x = as_scalar(x)
    if not x.is_rational():
        raise ValueError(f"square root of the irrational global dimension {x} is not supported")
    return sqrt_rational(x.rational_value())


def modular_data_balancing(C, labels=None, N=None, dims=None, twists=None, dual=None):
    """S and T from the balancing formula on a braided fusion ring.

    The optional arguments let callers supply a fusion ring that has no
    F/R data (for instance a computed reduced product).
    """
    labels = tuple(labels if labels is not None else C.labels)
    if N is None:
        def N(a, b, c):
            return C.Nabc(a, b, c)
    dims = dims if dims is not None else C.dims
    twists = twists if twists is not None else (C.twists or twists_from_R(C))
    dual = dual if dual is not None else C.dual
    dim = Scalar.rational(0)
    for a in labels:
        dim = dim + dims[a] * dims[a]
    if dim.is_zero():
        raise ZeroGlobalDimension("global dimension vanishes")
    D = exact_sqrt(dim)
    n = len(labels)
    S = EXACT.zeros((n, n))
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            total = Scalar.rational(0)
            for c in labels:
                m = N(a, dual[b], c)
                if m:
                    total = total + m * dims[c] * twists[c]
            S[i, j] = total / (twists[a] * twists[b] * D)
    gauss = Scalar.rational(0)
    for a in labels:
        gauss = gauss + dims[a] * dims[a] * twists[a]
    modular = linalg.rank(EXACT, S) == n
    charge = central_charge_of(gauss, dim) if modular else None
    return ModularData(labels, S, [twists[a] for a in labels], gauss, charge, modular, dim)


def mueger_centre(C):
    """Labels whose monodromy with every simple is trivial."""
    out = []
    for c in C.labels:
        if all(
            linalg.matrices_equal(EXACT, monodromy_matrix(C, c, b, e), EXACT.eye(m))
            for b in C.labels
            for e, m in C.fusion(c, b)
        ):
            out.append(c)
    return out


def perron_frobenius_dims(labels, N):
    """Exact Perron-Frobenius dimensions of a fusion ring.

    The dimension of each simple is the largest real root of the minimal
    polynomial of its fusion matrix; quadratic and rational roots are
    expressed as cyclotomic numbers.
    """
    import sympy

    x = sympy.Symbol("x")
    n = len(labels)
    out = {}
    for a in labels:
        mat = sympy.Matrix(n, n, lambda i, j: N(a, labels[j], labels[i]))
        poly = sympy.Poly(mat.charpoly(x).as_expr(), x)
        numeric = max(np.linalg.eigvals(np.array(mat.tolist(), dtype=float)).real)
        best = None
        for fac, _ in sympy.factor_list(poly.as_expr())[1]:
            fp = sympy.Poly(fac, x)
            roots = [complex(r) for r in sympy.Poly(fp).nroots()]
            if any(abs(r - numeric) < 1e-8 for r in roots):
                best = fp
                break
        out[a] = _algebraic_to_scalar(best, numeric)
    return out


def _algebraic_to_scalar(poly, numeric):
    coeffs = [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]
    lead = coeffs[0]
    coeffs = [c / lead for c in coeffs]
    if len(coeffs) == 2:
        return Scalar.rational(-coeffs[1])
    if len(coeffs) == 3:
        b, c = coeffs[1], coeffs[2]
        disc = b * b - 4 * c
        root = sqrt_rational(disc) if disc >= 0 else None
        if root is not None:
            for sign in (1, -1):
                cand = (Scalar.rational(-b) + sign * root) / 2
                if abs(complex(cand) - numeric) < 1e-8:
                    return cand
    raise ValueError(f"dimension with minimal polynomial {poly} is not supported")
