"""Built-in category data and the line-oriented category file format.

File grammar (one directive per line, ``#`` starts a comment)::

    category <name>
    simples <l1> <l2> ...
    unit <l>
    dual <l>=<l> ...
    fusion <a> <b> -> <c>[+<c>...]
    dim <a> = <scalar>
    twist <a> = <scalar>
    F <a> <b> <c> <d> : <e>-><f> [mu nu kappa lam] = <scalar>
    R <a> <b> : <c> [mu nu] = <scalar>
    include <A-name> : <a>-><objectexpr> ...
    S <a> <b> = <scalar>
    halfbraiding <z> <x> <c> = <row>;<row>...

Scalars use rationals, ``E(n)`` and ``+ - * / ^``.  Multiplicity indices
in F/R lines are optional and default to 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .cyclotomic import E, Scalar, format_scalar, sqrt_rational
from .errors import CategorySyntaxError, SemanticError, UnknownName
from .fusion import FusionCategory, ObjectExpr, monodromy_matrix, twists_from_R
from . import linalg
from .linalg import EXACT

__all__ = [
    "CatalogEntry",
    "Inclusion",
    "builtin",
    "builtin_names",
    "load",
    "parse_category_file",
    "serialize_category_file",
    "parse_scalar",
    "verify_inclusion",
    "check_strict",
    "deligne",
]

ONE = Scalar.rational(1)
LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass
class Inclusion:
    """A braided inclusion A ⊂ C given on simples."""

    A: FusionCategory
    C: FusionCategory
    object_map: dict  # label of A -> ObjectExpr in C

    def image(self, a):
        return self.object_map[a]

    def simple_image(self, a):
        """The simple label of C that a maps to (inclusions in the catalog are on simples)."""
        expr = self.object_map[a]
        (lab, m), = expr.items()
        if m != 1:
            raise SemanticError(f"{a} does not map to a simple object")
        return lab

    @property
    def is_simple(self):
        return all(sum(e.mult.values()) == 1 for e in self.object_map.values())

    def __repr__(self):
        return f"Inclusion({self.A.name} ⊂ {self.C.name})"


@dataclass
class CatalogEntry:
    name: str
    category: FusionCategory
    inclusions: dict = field(default_factory=dict)  # A-name -> {a: ObjectExpr}
    S: dict | None = None  # (a, b) -> Scalar, for result files without F/R
    halfbraidings: list = field(default_factory=list)  # (z, x, c, matrix)

    def inclusion(self, A):
        """The declared inclusion of the symmetric category A (a FusionCategory)."""
        if A.name == "Vec" and A.rank == 1:
            return Inclusion(A, self.category, {A.unit: ObjectExpr.simple(self.category.unit)})
        omap = self.inclusions.get(A.name)
        if omap is None:
            raise UnknownName(f"{self.name} declares no inclusion of {A.name}")
        return Inclusion(A, self.category, dict(omap))


# ---------------------------------------------------------------------------
# scalar expressions


class _ScalarParser:
    def __init__(self, text, line=0, col0=1):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def error(self, msg):
        raise CategorySyntaxError(msg, self.line, self.col0 + self.pos)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self):
        self.peek()
        m = re.match(r"\d+", self.text[self.pos :])
        if not m:
            self.error("expected an integer")
        self.pos += m.end()
        return int(m.group())

    def expr(self):
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            val = self.term() * sign
        else:
            val = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    self.error("division by zero")
                val = val / rhs
        return val

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            k = sign * self.integer()
            if k < 0 and base.is_zero():
                self.error("negative power of zero")
            base = base ** k
        return base

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            val = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return val
        if ch == "E":
            self.pos += 1
            if self.peek() != "(":
                self.error("expected '(' after E")
            self.pos += 1
            n = self.integer()
            if n <= 0:
                self.error("E(n) needs n > 0")
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return E(n)
        if ch.isdigit():
            return Scalar.rational(self.integer())
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of expression")

    def parse(self):
        val = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return val


def parse_scalar(text, line=0, col=1):
    """Parse a scalar expression such as ``E(16)^-1`` or ``1/2*E(8)``."""
    return _ScalarParser(text, line, col).parse().canonical()


# ---------------------------------------------------------------------------
# helpers for building data


def _fusion_list(N, labels, a, b):
    row = N.get((a, b), {})
    return [c for c in labels if row.get(c)]


def admissible_f_keys(labels, N):
    """All (a,b,c,d,e,f,mu,nu,kappa,lam) with nonzero vertex spaces."""
    out = []
    for a in labels:
        for b in labels:
            for c in labels:
                for e in _fusion_list(N, labels, a, b):
                    for d in _fusion_list(N, labels, e, c):
                        for f in _fusion_list(N, labels, b, c):
                            if not N.get((a, f), {}).get(d):
                                continue
                            for mu in range(N[(a, b)][e]):
                                for nu in range(N[(e, c)][d]):
                                    for ka in range(N[(b, c)][f]):
                                        for la in range(N[(a, f)][d]):
                                            out.append((a, b, c, d, e, f, mu, nu, ka, la))
    out.sort(key=lambda k: _label_key(labels, k))
    return out


def admissible_r_keys(labels, N):
    out = []
    for a in labels:
        for b in labels:
            for c in _fusion_list(N, labels, a, b):
                m = N[(a, b)][c]
                for mu in range(m):
                    for nu in range(m):
                        out.append((a, b, c, mu, nu))
    return out


def _label_key(labels, key):
    idx = {l: i for i, l in enumerate(labels)}
    return tuple(idx[x] if isinstance(x, str) else x for x in key)


def abelian(name, elements, omega, rfun, labels=None):
    """Pointed category on a finite abelian group given by tuples mod orders.

    ``elements`` maps label -> group element; omega(g, h, k) and rfun(g, h)
    give the F- and R-symbols.
    """
    labels = tuple(labels or elements)
    back = {v: k for k, v in elements.items()}
    orders = _orders(elements.values())

    def add(g, h):
        return tuple((x + y) % n for x, y, n in zip(g, h, orders))

    def neg(g):
        return tuple((-x) % n for x, n in zip(g, orders))

    N = {}
    for a in labels:
        for b in labels:
            N[(a, b)] = {back[add(elements[a], elements[b])]: 1}
    dual = {a: back[neg(elements[a])] for a in labels}
    unit = back[tuple(0 for _ in orders)]
    F = {}
    for a in labels:
        for b in labels:
            for c in labels:
                g, h, k = elements[a], elements[b], elements[c]
                e, f = back[add(g, h)], back[add(h, k)]
                d = back[add(add(g, h), k)]
                F[(a, b, c, d, e, f, 0, 0, 0, 0)] = Scalar.rational(1) * omega(g, h, k)
    R = None
    if rfun is not None:
        R = {}
        for a in labels:
            for b in labels:
                c = back[add(elements[a], elements[b])]
                R[(a, b, c, 0, 0)] = Scalar.rational(1) * rfun(elements[a], elements[b])
    C = FusionCategory(name, labels, unit, dual, N, F, R, {a: ONE for a in labels})
    if R is not None:
        C.twists = twists_from_R(C)
    return C


def _orders(elements):
    elements = list(elements)
    n = len(elements[0])
    # each coordinate's order is one more than its largest value in a full group listing
    return tuple(max(e[i] for e in elements) + 1 for i in range(n))


def _one(*_):
    return 1


# ---------------------------------------------------------------------------
# the built-in categories


def _vec():
    return abelian("Vec", {"1": (0,)}, _one, _one)


def _repz2():
    return abelian("RepZ2", {"1": (0,), "chi": (1,)}, _one, _one)


def _svec():
    return abelian("sVec", {"1": (0,), "f": (1,)}, _one, lambda g, h: -1 if g[0] and h[0] else 1)


def _repz3():
    return abelian("RepZ3", {"1": (0,), "w": (1,), "wb": (2,)}, _one, _one)


def _semion():
    return abelian(
        "Semion",
        {"1": (0,), "s": (1,)},
        lambda g, h, k: -1 if g[0] and h[0] and k[0] else 1,
        lambda g, h: E(4) if g[0] and h[0] else 1,
    )


def _double_semion():
    def omega(g, h, k):
        return (-1) ** (g[0] * h[0] * k[0] + g[1] * h[1] * k[1])

    def r(g, h):
        return E(4) ** (g[0] * h[0]) * E(4) ** (3 * g[1] * h[1])

    return abelian("DoubleSemion", {"1": (0, 0), "s": (1, 0), "sb": (0, 1), "b": (1, 1)}, omega, r)


def _toric_code(name="ToricCode"):
    return abelian(
        name,
        {"1": (0, 0), "e": (1, 0), "m": (0, 1), "f": (1, 1)},
        _one,
        lambda g, h: (-1) ** (g[1] * h[0]),
    )


def ising(nu=1):
    """Ising-type category with central charge nu/2; nu odd mod 16."""
    nu %= 16
    if nu % 2 == 0:
        raise UnknownName(f"Ising({nu}) needs odd nu")
    labels = ("1", "psi", "sigma")
    N = {}
    for x in labels:
        N[("1", x)] = {x: 1}
        N[(x, "1")] = {x: 1}
    N[("psi", "psi")] = {"1": 1}
    N[("psi", "sigma")] = {"sigma": 1}
    N[("sigma", "psi")] = {"sigma": 1}
    N[("sigma", "sigma")] = {"1": 1, "psi": 1}
    kappa = -1 if ((nu * nu - 1) // 8) % 2 else 1
    r2 = sqrt_rational(2)
    F = {}
    for key in admissible_f_keys(labels, N):
        a, b, c, d, e, f = key[:6]
        val = ONE
        if (a, b, c, d) == ("sigma",) * 4:
            val = kappa / r2 * (-1 if (e, f) == ("psi", "psi") else 1)
        elif (a, b, c, d) in (("sigma", "psi", "sigma", "psi"), ("psi", "sigma", "psi", "sigma")):
            val = -ONE
        F[key] = val.canonical()
    R = {k: ONE for k in admissible_r_keys(labels, N)}
    R[("psi", "psi", "1", 0, 0)] = -ONE
    R[("sigma", "sigma", "1", 0, 0)] = (kappa * E(16) ** (-nu)).canonical()
    R[("sigma", "sigma", "psi", 0, 0)] = (kappa * E(16) ** (3 * nu)).canonical()
    R[("sigma", "psi", "sigma", 0, 0)] = (E(4) ** (-nu)).canonical()
    R[("psi", "sigma", "sigma", 0, 0)] = (E(4) ** (-nu)).canonical()
    dims = {"1": ONE, "psi": ONE, "sigma": r2}
    C = FusionCategory(f"Ising{nu}", labels, "1", {x: x for x in labels}, N, F, R, dims)
    C.twists = {"1": ONE, "psi": -ONE, "sigma": (E(16) ** nu).canonical()}
    return C


def _reps3():
    text = resources.files("redtensor.data").joinpath("RepS3.cat").read_text()
    return parse_category_file(text)


def _inc(**kw):
    return {a: ObjectExpr.simple(c) for a, c in kw.items()}


def _entry(name):
    if name == "Vec":
        return CatalogEntry("Vec", _vec())
    if name == "RepZ2":
        return CatalogEntry("RepZ2", _repz2(), {"RepZ2": {"1": ObjectExpr.simple("1"), "chi": ObjectExpr.simple("chi")}})
    if name == "sVec":
        return CatalogEntry("sVec", _svec(), {"sVec": {"1": ObjectExpr.simple("1"), "f": ObjectExpr.simple("f")}})
    if name == "RepZ3":
        return CatalogEntry("RepZ3", _repz3())
    if name == "RepS3":
        return _reps3()
    if name == "Semion":
        return CatalogEntry("Semion", _semion())
    if name == "DoubleSemion":
        return CatalogEntry("DoubleSemion", _double_semion(), {"RepZ2": {"1": ObjectExpr.simple("1"), "chi": ObjectExpr.simple("b")}})
    if name == "ToricCode":
        # ToricCode is the centre of RepZ2 (charge e) and also of sVec (fermion f)
        return CatalogEntry(
            "ToricCode",
            _toric_code(),
            {
                "RepZ2": {"1": ObjectExpr.simple("1"), "chi": ObjectExpr.simple("e")},
                "sVec": {"1": ObjectExpr.simple("1"), "f": ObjectExpr.simple("f")},
            },
        )
    if name == "ZsVec":
        return CatalogEntry(
            "ZsVec", _toric_code("ZsVec"), {"sVec": {"1": ObjectExpr.simple("1"), "f": ObjectExpr.simple("f")}}
        )
    m = re.fullmatch(r"Ising\(?(\d+)?\)?", name)
    if m:
        nu = int(m.group(1) or 1)
        C = ising(nu)
        return CatalogEntry(
            C.name, C, {"sVec": {"1": ObjectExpr.simple("1"), "f": ObjectExpr.simple("psi")}}
        )
    raise UnknownName(f"unknown builtin category {name!r}")


_ALIASES = {"ZRepZ2": "ToricCode", "TC": "ToricCode", "DS": "DoubleSemion", "Z(RepZ2)": "ToricCode", "Z(sVec)": "ZsVec"}

_CACHE = {}


def builtin_names():
    return ["Vec", "sVec", "RepZ2", "RepZ3", "RepS3", "Semion", "ToricCode", "DoubleSemion", "ZsVec"] + [
        f"Ising{nu}" for nu in range(1, 16, 2)
    ]


def builtin(name):
    """A built-in catalog entry by name, e.g. ``Ising1``, ``Ising(15)``, ``RepZ2``."""
    name = _ALIASES.get(name, name)
    got = _CACHE.get(name)
    if got is None:
        got = _entry(name)
        _CACHE[name] = got
    return got


def load(spec):
    """Resolve ``builtin:<name>`` or a path to a category file."""
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:") :])
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UnknownName(f"cannot read category {spec!r}: {exc.strerror}") from None
    return parse_category_file(text)


# ---------------------------------------------------------------------------
# inclusions


def check_strict(inc):
    """Problems with reading A's F- and R-symbols off C along the inclusion."""
    A, C = inc.A, inc.C
    if not inc.is_simple:
        return ["inclusion does not send simples to simples"]
    m = {a: inc.simple_image(a) for a in A.labels}
    out = []
    if len(set(m.values())) != len(m):
        out.append("inclusion is not injective on simples")
    for key, v in A.F.items():
        img = tuple(m[x] for x in key[:6]) + tuple(key[6:])
        if C.F.get(img, Scalar.rational(0)) != v:
            out.append("F-symbol " + " ".join(key[:6]) + " differs from its image")
    for key, v in (A.R or {}).items():
        img = tuple(m[x] for x in key[:3]) + tuple(key[3:])
        if (C.R or {}).get(img, Scalar.rational(0)) != v:
            out.append("R-symbol " + " ".join(key[:3]) + " differs from its image")
    return out


def verify_inclusion(inc):
    """List of problems with a braided inclusion A ⊂ C (empty when valid)."""
    A, C = inc.A, inc.C
    problems = []
    if set(inc.object_map) != set(A.labels):
        problems.append("object map does not cover the simples of A")
        return problems
    if inc.object_map[A.unit] != ObjectExpr.simple(C.unit):
        problems.append("unit is not sent to the unit")
    for a in A.labels:
        for lab in inc.object_map[a].mult:
            if lab not in C.labels:
                problems.append(f"{a} maps to unknown label {lab}")
    if problems:
        return problems
    for a in A.labels:
        for b in A.labels:
            lhs = C.tensor_expr(inc.object_map[a], inc.object_map[b])
            rhs = ObjectExpr()
            for c, m in A.fusion(a, b):
                for _ in range(m):
                    rhs = rhs + inc.object_map[c]
            if lhs != rhs:
                problems.append(f"fusion {a} {b} is not preserved")
    if inc.is_simple:
        for a in A.labels:
            x = inc.simple_image(a)
            if A.dims[a] != C.dims[x]:
                problems.append(f"dimension of {a} is not preserved")
            for b in A.labels:
                y = inc.simple_image(b)
                for c, m in C.fusion(x, y):
                    mono = monodromy_matrix(C, x, y, c)
                    if not linalg.matrices_equal(EXACT, mono, EXACT.eye(m)):
                        problems.append(f"monodromy of {x} and {y} is not trivial")
        if A.braided and C.braided:
            for a in A.labels:
                if (A.twists or twists_from_R(A))[a] != (C.twists or twists_from_R(C))[inc.simple_image(a)]:
                    problems.append(f"twist of {a} is not preserved")
        problems.extend(check_strict(inc))
    return problems


# ---------------------------------------------------------------------------
# Deligne products


def deligne(C, D, name=None, sep="."):
    """C ⊠ D with labels ``c.d``; the unit is relabelled ``1``."""

    def lab(c, d):
        if c == C.unit and d == D.unit:
            return "1"
        return f"{c}{sep}{d}"

    pairs = [(c, d) for c in C.labels for d in D.labels]
    labels = tuple(lab(c, d) for c, d in pairs)
    N = {}
    for c1, d1 in pairs:
        for c2, d2 in pairs:
            row = {}
            for c, m in C.fusion(c1, c2):
                for d, n in D.fusion(d1, d2):
                    row[lab(c, d)] = m * n
            N[(lab(c1, d1), lab(c2, d2))] = row
    F = {}
    for k1, v1 in C.F.items():
        for k2, v2 in D.F.items():
            a, b, c, d, e, f = (lab(x, y) for x, y in zip(k1[:6], k2[:6]))
            idx = tuple(
                i * D.N[(k2[j0], k2[j1])][k2[j2]] + i2
                for i, i2, (j0, j1, j2) in zip(
                    k1[6:], k2[6:], ((0, 1, 4), (4, 2, 3), (1, 2, 5), (0, 5, 3))
                )
            )
            F[(a, b, c, d, e, f) + idx] = (v1 * v2).canonical()
    R = None
    if C.braided and D.braided:
        R = {}
        for k1, v1 in C.R.items():
            for k2, v2 in D.R.items():
                a, b, c = (lab(x, y) for x, y in zip(k1[:3], k2[:3]))
                m2 = D.N[(k2[0], k2[1])][k2[2]]
                R[(a, b, c, k1[3] * m2 + k2[3], k1[4] * m2 + k2[4])] = (v1 * v2).canonical()
    dims = {lab(c, d): (C.dims[c] * D.dims[d]).canonical() for c, d in pairs}
    dual = {lab(c, d): lab(C.dual[c], D.dual[d]) for c, d in pairs}
    out = FusionCategory(name or f"{C.name}x{D.name}", labels, "1", dual, N, F, R, dims)
    if C.twists is not None and D.twists is not None:
        out.twists = {lab(c, d): (C.twists[c] * D.twists[d]).canonical() for c, d in pairs}
    return out


# ---------------------------------------------------------------------------
# file format


def _tokens(line):
    return line.split()


def parse_category_file(text):
    """Parse the category file format into a :class:`CatalogEntry`."""
    name = None
    labels = None
    unit = None
    dual = {}
    N = {}
    dims = {}
    twists = {}
    F = {}
    R = {}
    S = {}
    inclusions = {}
    halfbraidings = []
    seen_fusion = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        toks = line.split()
        head = toks[0]

        def col_of(tok_index):
            # 1-based column of the tok_index-th token
            pos = indent
            for i, t in enumerate(toks):
                pos = line.index(t, pos)
                if i == tok_index:
                    return pos + 1
                pos += len(t)
            return len(line) + 1

        def err(msg, tok_index=0):
            raise CategorySyntaxError(msg, lineno, col_of(tok_index))

        def need_label(tok, i):
            if not LABEL_RE.match(tok):
                err(f"bad label {tok!r}", i)
            if labels is not None and tok not in labels:
                raise SemanticError(f"line {lineno}: unknown label {tok!r}")
            return tok

        def scalar_after_eq():
            if "=" not in line:
                err("expected '='", len(toks))
            pos = line.index("=")
            expr = line[pos + 1 :]
            if not expr.strip():
                err("missing scalar after '='", len(toks))
            return parse_scalar(expr, lineno, pos + 2)

        if head == "category":
            if len(toks) != 2:
                err("expected 'category <name>'")
            name = toks[1]
        elif head == "simples":
            if len(toks) < 2:
                err("expected at least one simple")
            for i, t in enumerate(toks[1:], start=1):
                if not LABEL_RE.match(t):
                    err(f"bad label {t!r}", i)
            if len(set(toks[1:])) != len(toks) - 1:
                raise SemanticError(f"line {lineno}: repeated simple label")
            labels = tuple(toks[1:])
        elif labels is None:
            err("'simples' must come before other directives")
        elif head == "unit":
            if len(toks) != 2:
                err("expected 'unit <label>'")
            unit = need_label(toks[1], 1)
        elif head == "dual":
            for i, t in enumerate(toks[1:], start=1):
                if t.count("=") != 1:
                    err("expected <label>=<label>", i)
                a, b = t.split("=")
                need_label(a, i)
                need_label(b, i)
                dual[a] = b
        elif head == "fusion":
            if len(toks) != 5 or toks[3] != "->":
                err("expected 'fusion <a> <b> -> <c>[+<c>...]'")
            a, b = need_label(toks[1], 1), need_label(toks[2], 2)
            row = {}
            for c in toks[4].split("+"):
                need_label(c, 4)
                row[c] = row.get(c, 0) + 1
            if (a, b) in N:
                raise SemanticError(f"line {lineno}: duplicate fusion {a} {b}")
            N[(a, b)] = row
            seen_fusion = True
        elif head in ("dim", "twist"):
            if len(toks) < 4 or toks[2] != "=":
                err(f"expected '{head} <a> = <scalar>'")
            a = need_label(toks[1], 1)
            (dims if head == "dim" else twists)[a] = scalar_after_eq()
        elif head == "F":
            m = re.fullmatch(
                r"F\s+(\S+)\s+(\S+)\s+(\S+)\s+(\S+)\s*:\s*(\S+?)->(\S+?)(?:\s*\[\s*(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s*\])?\s*=(.*)",
                line.strip(),
            )
            if not m:
                err("expected 'F <a> <b> <c> <d> : <e>-><f> = <scalar>'")
            labs = [need_label(x, i + 1) for i, x in enumerate(m.groups()[:6])]
            idx = tuple(int(x) if x is not None else 0 for x in m.groups()[6:10])
            key = tuple(labs) + idx
            if key in F:
                raise SemanticError(f"line {lineno}: duplicate F entry {' '.join(map(str, key))}")
            F[key] = scalar_after_eq()
        elif head == "R":
            m = re.fullmatch(
                r"R\s+(\S+)\s+(\S+)\s*:\s*(\S+?)(?:\s*\[\s*(\d+)\s+(\d+)\s*\])?\s*=(.*)", line.strip()
            )
            if not m:
                err("expected 'R <a> <b> : <c> = <scalar>'")
            labs = [need_label(x, i + 1) for i, x in enumerate(m.groups()[:3])]
            idx = tuple(int(x) if x is not None else 0 for x in m.groups()[3:5])
            key = tuple(labs) + idx
            if key in R:
                raise SemanticError(f"line {lineno}: duplicate R entry {' '.join(map(str, key))}")
            R[key] = scalar_after_eq()
        elif head == "S":
            if len(toks) < 5 or toks[3] != "=":
                err("expected 'S <a> <b> = <scalar>'")
            S[(need_label(toks[1], 1), need_label(toks[2], 2))] = scalar_after_eq()
        elif head == "include":
            if len(toks) < 3 or toks[2] != ":":
                err("expected 'include <A-name> : <a>-><objectexpr> ...'")
            omap = {}
            for i, t in enumerate(toks[3:], start=3):
                if "->" not in t:
                    err("expected <a>-><objectexpr>", i)
                a, rhs = t.split("->", 1)
                if not LABEL_RE.match(a):
                    err(f"bad label {a!r}", i)
                mult = {}
                for part in rhs.split("+"):
                    lab, _, power = part.partition("^")
                    need_label(lab, i)
                    mult[lab] = mult.get(lab, 0) + (int(power) if power.isdigit() else 1)
                omap[a] = ObjectExpr(mult)
            inclusions[toks[1]] = omap
        elif head == "halfbraiding":
            if len(toks) < 6 or toks[4] != "=":
                err("expected 'halfbraiding <z> <x> <c> = <rows>'")
            body = line.split("=", 1)[1]
            rows = [[parse_scalar(v, lineno) for v in row.split(",")] for row in body.split(";")]
            halfbraidings.append((toks[1], toks[2], toks[3], rows))
        else:
            err(f"unknown directive {head!r}")
    if name is None:
        raise SemanticError("missing 'category' line")
    if labels is None:
        raise SemanticError("missing 'simples' line")
    if unit is None:
        raise SemanticError("missing 'unit' line")
    dual.setdefault(unit, unit)
    for a in labels:
        if a not in dual:
            raise SemanticError(f"missing dual of {a}")
    if not seen_fusion:
        raise SemanticError("missing fusion rules")
    for a in labels:
        if a not in dims:
            raise SemanticError(f"missing dim {a}")
    for a in labels:
        for b in labels:
            N.setdefault((a, b), {})
    has_symbols = bool(F) or bool(R)
    if has_symbols or not S:
        for key in admissible_f_keys(labels, N):
            if key not in F:
                raise SemanticError(f"missing F entry {' '.join(map(str, key))}")
        extra = set(F) - set(admissible_f_keys(labels, N))
        if extra:
            raise SemanticError(f"F entry for non-admissible tuple {' '.join(map(str, sorted(extra)[0]))}")
    if R:
        for key in admissible_r_keys(labels, N):
            if key not in R:
                raise SemanticError(f"missing R entry {' '.join(map(str, key))}")
    C = FusionCategory(name, labels, unit, dual, N, F, R or None, dims, twists or None)
    return CatalogEntry(name, C, inclusions, S or None, halfbraidings)


def _fmt(x):
    return format_scalar(x)


def serialize_category_file(entry, symbols=True):
    """Canonical text of a catalog entry; ``symbols=False`` omits F and R."""
    C = entry.category
    out = [f"category {entry.name}", "simples " + " ".join(C.labels), f"unit {C.unit}"]
    out.append("dual " + " ".join(f"{a}={C.dual[a]}" for a in C.labels))
    for a in C.labels:
        for b in C.labels:
            chans = C.fusion(a, b)
            if chans:
                out.append(f"fusion {a} {b} -> " + "+".join(c for c, m in chans for _ in range(m)))
    for a in C.labels:
        out.append(f"dim {a} = {_fmt(C.dims[a])}")
    if C.twists is not None:
        for a in C.labels:
            out.append(f"twist {a} = {_fmt(C.twists[a])}")
    mult_free = C.is_multiplicity_free()
    if symbols and C.F:
        for key in admissible_f_keys(C.labels, C.N):
            a, b, c, d, e, f = key[:6]
            idx = "" if mult_free else " [" + " ".join(map(str, key[6:])) + "]"
            out.append(f"F {a} {b} {c} {d} : {e}->{f}{idx} = {_fmt(C.F[key])}")
    if symbols and C.R:
        for key in admissible_r_keys(C.labels, C.N):
            a, b, c = key[:3]
            idx = "" if mult_free else " [" + " ".join(map(str, key[3:])) + "]"
            out.append(f"R {a} {b} : {c}{idx} = {_fmt(C.R[key])}")
    if entry.S:
        for a in C.labels:
            for b in C.labels:
                out.append(f"S {a} {b} = {_fmt(entry.S[(a, b)])}")
    for A_name in sorted(entry.inclusions):
        omap = entry.inclusions[A_name]
        parts = []
        for a in omap:
            expr = omap[a]
            rhs = "+".join(k if m == 1 else f"{k}^{m}" for k, m in sorted(expr.items(), key=lambda t: C.index(t[0])))
            parts.append(f"{a}->{rhs}")
        out.append(f"include {A_name} : " + " ".join(parts))
    for z, x, c, rows in entry.halfbraidings:
        body = ";".join(",".join(_fmt(v) for v in row) for row in rows)
        out.append(f"halfbraiding {z} {x} {c} = {body}")
    return "\n".join(out) + "\n"
