"""The Drinfeld centre of a symmetric fusion category, computed exactly.

An object of the centre is an engine object X of A together with one matrix
``beta[x]: x⊗X -> X⊗x`` for every simple x.  Simples are found by splitting
endomorphism algebras of induced objects ``I(V) = ⊕_x (x*⊗V)⊗x``; every
simple of the centre is a summand of some ``I(a)``.

Two tensor products are provided: the convolution product ``tensor_c`` with
the consecutive half-braiding, and the symmetric product ``tensor_s`` cut out
of ``Φz1⊗Φz2`` by the idempotent of :func:`pi_idempotent`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import FiniteAlgebra
from .cyclotomic import Scalar
from .diagram import Engine, SimpleObj, SumObj, TensorObj
from .errors import HalfBraidingViolation, IncompleteDecomposition, NonProjection, NotIdempotent
from .fusion import modular_data_balancing

__all__ = [
    "CentreObject",
    "CentreCategory",
    "half_braiding_space",
    "centre_simples",
    "induction",
    "tensor_c",
    "unit_s",
    "pi_idempotent",
    "tensor_s",
    "split_idempotent",
    "hom_basis",
    "hom_dim",
    "image_object",
    "tensor_s_object",
    "symmetric_object",
    "direct_sum",
    "twist_of",
    "unitor_s",
    "counit_s",
    "comultiplication_s",
]


class CentreObject:
    """An object of A with a half-braiding."""

    def __init__(self, eng, underlying, beta, name=None):
        self.eng = eng
        self.underlying = underlying
        self.beta = beta
        self.name = name
        self._beta_at = {}

    @property
    def ambient(self):
        return self.eng.C

    def content(self):
        return self.eng.content(self.underlying)

    def dim(self):
        return self.eng.total_dim(self.underlying)

    def beta_at(self, W):
        """The half-braiding against an arbitrary engine object W."""
        if isinstance(W, SimpleObj):
            return self.beta[W.label]
        got = self._beta_at.get(W)
        if got is not None:
            return got
        eng, X = self.eng, self.underlying
        idX = eng.identity(X)
        out = eng.zero(TensorObj(W, X), TensorObj(X, W))
        for c, keys in eng.blocks(W).items():
            for t in range(len(keys)):
                inc, proj = _unit_vectors(eng, W, c, t)
                out = out + eng.tensor(idX, inc) @ self.beta[c] @ eng.tensor(proj, idX)
        self._beta_at[W] = out
        return out

    def violations(self):
        """Failures of the half-braiding axioms, as readable strings."""
        eng, X = self.eng, self.underlying
        C = eng.C
        out = []
        idX = eng.identity(X)
        for x in C.labels:
            b = self.beta[x]
            for c, blk in b.blocks.items():
                if blk.shape[0] != blk.shape[1] or linalg.rank(eng.field, blk) < blk.shape[0]:
                    out.append(f"beta[{x}] not invertible at {c}")
        one = eng.rho_inv(X) @ eng.lam(X)
        if not self.beta[C.unit].equals(one):
            out.append("beta at the unit is not the unitor")
        for y, z in itertools.product(C.labels, repeat=2):
            Y, Z = SimpleObj(y), SimpleObj(z)
            for w, m in C.fusion(y, z):
                for mu in range(m):
                    sp = eng.split(y, z, w, mu)
                    lhs = eng.tensor(idX, sp) @ self.beta[w]
                    rhs = (
                        eng.associator(X, Y, Z)
                        @ eng.tensor(self.beta[y], eng.identity(Z))
                        @ eng.associator_inv(Y, X, Z)
                        @ eng.tensor(eng.identity(Y), self.beta[z])
                        @ eng.associator(Y, Z, X)
                        @ eng.tensor(sp, idX)
                    )
                    if not lhs.equals(rhs):
                        out.append(f"multiplicativity fails for {y} {z} -> {w}")
        return out

    def check(self):
        bad = self.violations()
        if bad:
            raise HalfBraidingViolation("; ".join(bad[:5]))
        return self

    def restrict(self, inc, proj, name=None):
        """Half-braiding transported to a retract (inc: Y -> X, proj: X -> Y)."""
        eng = self.eng
        Y = inc.src
        beta = {}
        for x in eng.C.labels:
            idx = eng.identity(SimpleObj(x))
            beta[x] = eng.tensor(proj, idx) @ self.beta[x] @ eng.tensor(idx, inc)
        return CentreObject(eng, Y, beta, name)

    def __repr__(self):
        label = self.name or "?"
        return f"CentreObject({label}: {self.underlying!r})"


def _unit_vectors(eng, W, c, t):
    """Inclusion c -> W of the t-th basis tree and the dual projection."""
    n = eng.dim(W, c)
    col = eng.field.zeros((n, 1))
    col[t, 0] = eng.field.one
    inc = eng.morphism(SimpleObj(c), W, {c: col})
    proj = eng.morphism(W, SimpleObj(c), {c: col.T.copy()})
    return inc, proj


def _engine(A, eng=None):
    if eng is not None:
        return eng
    if isinstance(A, Engine):
        return A
    return Engine(A)


# ---------------------------------------------------------------------------
# homs in the centre


def _constraint_matrix(z1, z2, basis):
    eng = z1.eng
    cols = []
    for f in basis:
        parts = []
        for y in eng.C.labels:
            idy = eng.identity(SimpleObj(y))
            diff = eng.tensor(f, idy) @ z1.beta[y] - z2.beta[y] @ eng.tensor(idy, f)
            parts.extend(diff.flat())
        cols.append(parts)
    return np.array(cols, dtype=object).T if cols else eng.field.zeros((0, 0))


def hom_basis(z1, z2):
    """Basis of Hom_Z(z1, z2) as engine morphisms."""
    eng = z1.eng
    X1, X2 = z1.underlying, z2.underlying
    basis = eng.hom_basis(X1, X2)
    if not basis:
        return []
    M = _constraint_matrix(z1, z2, basis)
    ns = linalg.nullspace(eng.field, M)
    return [eng.from_vector(X1, X2, ns[:, k]) for k in range(ns.shape[1])]


def hom_dim(z1, z2):
    eng = z1.eng
    basis = eng.hom_basis(z1.underlying, z2.underlying)
    if not basis:
        return 0
    M = _constraint_matrix(z1, z2, basis)
    return len(basis) - linalg.rank(eng.field, M)


# ---------------------------------------------------------------------------
# constructions


def symmetric_object(eng, X, name=None):
    """X with the half-braiding given by the symmetry of A."""
    beta = {}
    for x in eng.C.labels:
        beta[x] = eng.braiding(SimpleObj(x), X)
    return CentreObject(eng, X, beta, name)


def _u(eng, y, x, xp, mu):
    """y⊗x* -> x'* built from a vertex x'⊗y -> x."""
    C = eng.C
    Y, Xd, Xp, Xpd, Xo = (SimpleObj(l) for l in (y, C.dual[x], xp, C.dual[xp], x))
    i = eng.identity
    m = eng.tensor(eng.lam_inv(Y), i(Xd))
    m = eng.tensor(eng.tensor(eng.coev_r(xp), i(Y)), i(Xd)) @ m
    m = eng.tensor(eng.associator(Xpd, Xp, Y), i(Xd)) @ m
    m = eng.tensor(eng.tensor(i(Xpd), eng.vertex(xp, y, x, mu)), i(Xd)) @ m
    m = eng.associator(Xpd, Xo, Xd) @ m
    m = eng.tensor(i(Xpd), eng.ev_r(x)) @ m
    return eng.rho(Xpd) @ m


def _induction_term(eng, V, y, x, xp, mu):
    """y⊗((x*V)x) -> ((x'*V)x')⊗y."""
    C = eng.C
    Y, Xd, Xo, Xp, Xpd = (SimpleObj(l) for l in (y, C.dual[x], x, xp, C.dual[xp]))
    i = eng.identity
    XdV, XpdV = TensorObj(Xd, V), TensorObj(Xpd, V)
    m = eng.associator_inv(Y, XdV, Xo)
    m = eng.tensor(eng.associator_inv(Y, Xd, V), i(Xo)) @ m
    m = eng.tensor(eng.tensor(_u(eng, y, x, xp, mu), i(V)), i(Xo)) @ m
    m = eng.tensor(i(XpdV), eng.split(xp, y, x, mu)) @ m
    return eng.associator_inv(XpdV, Xp, Y) @ m


def induction(A, V=None, eng=None, name=None):
    """The induced object I(V) = ⊕_x (x*⊗V)⊗x with its canonical half-braiding."""
    eng = _engine(A, eng)
    C = eng.C
    V = eng.unit if V is None else V
    parts = [TensorObj(TensorObj(SimpleObj(C.dual[x]), V), SimpleObj(x)) for x in C.labels]
    X = SumObj(parts)
    terms = {}
    for y in C.labels:
        idy = eng.identity(SimpleObj(y))
        for k, x in enumerate(C.labels):
            for kp, xp in enumerate(C.labels):
                for mu in range(C.Nabc(xp, y, x)):
                    t = _induction_term(eng, V, y, x, xp, mu)
                    full = eng.tensor(eng.inclusion(X, kp), idy) @ t @ eng.tensor(idy, eng.projection(X, k))
                    terms.setdefault(y, []).append((x, xp, full))
    dims = C.dims
    # the normalisation of the mixing weights is fixed by multiplicativity
    for power in (0, 1, -1):
        beta = {}
        for y in C.labels:
            acc = eng.zero(TensorObj(SimpleObj(y), X), TensorObj(X, SimpleObj(y)))
            for x, xp, full in terms[y]:
                w = (dims[x] / dims[xp]) ** power if power else Scalar.rational(1)
                acc = acc + full.scale(w)
            beta[y] = acc
        z = CentreObject(eng, X, beta, name)
        if not z.violations():
            return z
    raise HalfBraidingViolation("no normalisation of the induced half-braiding is multiplicative")


def tensor_c(z1, z2, name=None):
    """Convolution product: tensor in A with the consecutive half-braiding."""
    eng = z1.eng
    X, Y = z1.underlying, z2.underlying
    beta = {}
    for x in eng.C.labels:
        S = SimpleObj(x)
        m = eng.associator_inv(S, X, Y)
        m = eng.tensor(z1.beta[x], eng.identity(Y)) @ m
        m = eng.associator(X, S, Y) @ m
        m = eng.tensor(eng.identity(X), z2.beta[x]) @ m
        m = eng.associator_inv(X, Y, S) @ m
        beta[x] = m
    return CentreObject(eng, TensorObj(X, Y), beta, name)


def _mixed_half_braiding(z1, z2):
    """Symmetry past Φz1 followed by the half-braiding of z2."""
    eng = z1.eng
    X, Y = z1.underlying, z2.underlying
    beta = {}
    for x in eng.C.labels:
        S = SimpleObj(x)
        m = eng.associator_inv(S, X, Y)
        m = eng.tensor(eng.braiding(S, X), eng.identity(Y)) @ m
        m = eng.associator(X, S, Y) @ m
        m = eng.tensor(eng.identity(X), z2.beta[x]) @ m
        m = eng.associator_inv(X, Y, S) @ m
        beta[x] = m
    return CentreObject(eng, TensorObj(X, Y), beta)


def unit_s(A, eng=None):
    """The unit I_s of the symmetric product; underlying object ⊕ i*⊗i."""
    return induction(A, eng=eng, name="I_s")


def unitor_s(z, Is=None):
    """I_s⊗Φz -> Φz: each i is carried around z by (s∘β^z_i)⁻¹, then capped with i*.

    The summand of i is weighted by d_i.  Restricted to the image of Π this
    is the left unitor of ⊗_s; on a neutral z it is the counit tensored with
    the identity.
    """
    eng = z.eng
    C = eng.C
    Is = Is or induction(C, eng=eng, name="I_s")
    Z = z.underlying
    idn = eng.identity
    out = eng.zero(TensorObj(Is.underlying, Z), Z)
    for k, i in enumerate(C.labels):
        I, Id = SimpleObj(i), SimpleObj(C.dual[i])
        fwd = eng.braiding(Z, I) @ z.beta[i]
        loop = eng.morphism(fwd.tgt, fwd.src, {c: linalg.inverse(eng.field, b) for c, b in fwd.blocks.items()})
        m = eng.tensor(eng.tensor(eng.rho(Id), idn(I)), idn(Z))
        m = eng.associator(Id, I, Z) @ m
        m = eng.tensor(idn(Id), loop) @ m
        m = eng.associator_inv(Id, I, Z) @ m
        m = eng.lam(Z) @ eng.tensor(eng.ev(i), idn(Z)) @ m
        out = out + (m @ eng.tensor(eng.projection(Is.underlying, k), idn(Z))).scale(C.dims[i])
    return out


def counit_s(Is):
    """The Z(A)-morphism I_s -> 1 capping the summand i*⊗i with weight d_i."""
    eng = Is.eng
    C = eng.C
    U = Is.underlying
    out = eng.zero(U, eng.unit)
    for k, i in enumerate(C.labels):
        I, Id = SimpleObj(i), SimpleObj(C.dual[i])
        cap = eng.ev(i) @ eng.tensor(eng.rho(Id), eng.identity(I))
        out = out + (cap @ eng.projection(U, k)).scale(C.dims[i])
    return out


def comultiplication_s(Is):
    """Δ: I_s -> I_s⊗I_s, a coevaluation inserted between i* and i, weighted 1/d_i.

    A Z(A)-morphism into the ⊗_c square of I_s, counital for
    :func:`counit_s` on both sides.
    """
    eng = Is.eng
    C = eng.C
    U = Is.underlying
    idn = eng.identity
    out = eng.zero(U, TensorObj(U, U))
    for k, i in enumerate(C.labels):
        I, Id = SimpleObj(i), SimpleObj(C.dual[i])
        back = eng.tensor(eng.rho_inv(Id), idn(I))
        m = eng.tensor(eng.rho(Id), idn(I))
        m = eng.tensor(idn(Id), eng.lam_inv(I)) @ m
        m = eng.tensor(idn(Id), eng.tensor(eng.coev(i), idn(I))) @ m
        m = eng.tensor(idn(Id), eng.associator(I, Id, I)) @ m
        m = eng.associator_inv(Id, I, TensorObj(Id, I)) @ m
        m = eng.tensor(back, back) @ m
        term = eng.tensor(eng.inclusion(U, k), eng.inclusion(U, k)) @ m @ eng.projection(U, k)
        out = out + term.scale(1 / C.dims[i])
    return out


# ---------------------------------------------------------------------------
# the idempotent Π


def _loop_operator(eng, z1, z2, i):
    """Partial trace over i of the cloaking move of i around Φz1⊗Φz2."""
    C = eng.C
    X, Y = z1.underlying, z2.underlying
    I, Id = SimpleObj(i), SimpleObj(C.dual[i])
    XY = TensorObj(X, Y)
    idn = eng.identity
    DX = eng.braiding(X, I) @ z1.beta[i]
    DY = eng.braiding(Y, I) @ z2.beta[i]
    DYinv = eng.morphism(DY.tgt, DY.src, {c: linalg.inverse(eng.field, b) for c, b in DY.blocks.items()})
    E = eng.associator_inv(I, X, Y)
    E = eng.tensor(eng.braiding(I, X), idn(Y)) @ E
    E = eng.associator(X, I, Y) @ E
    E = eng.tensor(idn(X), DYinv) @ E
    E = eng.associator_inv(X, I, Y) @ E
    E = eng.tensor(eng.braiding(X, I), idn(Y)) @ E
    E = eng.tensor(DX, idn(Y)) @ E
    E = eng.associator(I, X, Y) @ E
    L = eng.lam_inv(XY)
    L = eng.tensor(eng.coev_r(i), idn(XY)) @ L
    L = eng.associator(Id, I, XY) @ L
    L = eng.tensor(idn(Id), E) @ L
    L = eng.associator_inv(Id, I, XY) @ L
    L = eng.tensor(eng.ev(i), idn(XY)) @ L
    return eng.lam(XY) @ L


def pi_idempotent(z1, z2):
    """The normalised projection of Φz1⊗Φz2 onto Φ(z1⊗_s z2).

    The loops are weighted by the quantum dimension of the looping strand
    and the overall scalar is fixed by P∘P = λP.
    """
    eng = z1.eng
    C = eng.C
    P = None
    for i in C.labels:
        term = _loop_operator(eng, z1, z2, i).scale(C.dims[i])
        P = term if P is None else P + term
    P2 = P @ P
    lam = None
    for c in C.labels:
        a, b = P2.block(c), P.block(c)
        for idx, v in np.ndenumerate(b):
            if not eng.field.is_zero(v):
                lam = a[idx] / v
                break
        if lam is not None:
            break
    if lam is None:
        if not P2.is_zero():
            raise NonProjection("P vanishes but P∘P does not")
        return P
    if not P2.equals(P.scale(lam)):
        raise NonProjection("P∘P is not a scalar multiple of P")
    return P.scale(1 / lam)


def image_object(E):
    """Split an idempotent engine endomorphism: returns (Y, inc, proj)."""
    eng = E.eng
    C = eng.C
    X = E.src
    field = eng.field
    incs, projs, parts = {}, {}, []
    for c in C.labels:
        n = eng.dim(X, c)
        if not n:
            continue
        M = E.block(c)
        im = linalg.column_space(field, M)
        r = im.shape[1]
        if not r:
            continue
        ker = linalg.nullspace(field, M)
        T = np.concatenate([im, ker], axis=1)
        Tinv = linalg.inverse(field, T)
        incs[c] = im
        projs[c] = Tinv[:r, :]
        parts.extend([c] * r)
    if len(parts) == 1:
        Y = SimpleObj(parts[0])
    else:
        Y = SumObj([SimpleObj(c) for c in parts])
    return Y, eng.morphism(Y, X, incs), eng.morphism(X, Y, projs)


def split_idempotent(e, ambient=None, seed=0):
    """Primitive idempotents refining e, each with its inclusion and projection.

    ``ambient`` is the CentreObject the endomorphism e lives on; without it
    the splitting happens in A.  Returns a list of (idempotent, inc, proj).
    """
    eng = e.eng
    if e.src != e.tgt:
        raise NotIdempotent("not an endomorphism")
    if not (e @ e).equals(e):
        raise NotIdempotent("e∘e differs from e")
    if ambient is None:
        X = e.src
        basis = [f for f in eng.hom_basis(X, X)]
    else:
        basis = hom_basis(ambient, ambient)
    # corner algebra e End e
    corner = [e @ b @ e for b in basis]
    vecs, kept = [], []
    for b in corner:
        v = eng.to_vector(b)
        trial = np.array(vecs + [v], dtype=object).T
        if linalg.rank(eng.field, trial) == len(vecs) + 1:
            vecs.append(v)
            kept.append(b)
    if not kept:
        return []
    alg = FiniteAlgebra.from_vectors(vecs, lambda i, j: eng.to_vector(kept[i] @ kept[j]), eng.to_vector(e))
    out = []
    for coords, _ in alg.primitive_idempotents(seed):
        f = kept[0].scale(0)
        for c, b in zip(coords, kept):
            if not c.is_zero():
                f = f + b.scale(c)
        Y, inc, proj = image_object(f)
        out.append((f, inc, proj))
    return out


# ---------------------------------------------------------------------------
# the centre as a category


@dataclass
class CentreCategory:
    ambient: object
    simples: list
    eng: object
    seed: int = 0
    N: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)
    twists: dict = field(default_factory=dict)
    dual: dict = field(default_factory=dict)
    modular: object = None
    unit: str = "z0"

    @property
    def labels(self):
        return tuple(z.name for z in self.simples)

    def simple(self, name):
        for z in self.simples:
            if z.name == name:
                return z
        raise KeyError(name)

    def Nabc(self, a, b, c):
        return self.N.get((a, b, c), 0)

    def decompose(self, z):
        """Multiplicities of the simples in a centre object."""
        out = {}
        for s in self.simples:
            m = hom_dim(s, z)
            if m:
                out[s.name] = m
        return out

    def global_dim(self):
        total = Scalar.rational(0)
        for a in self.labels:
            total = total + self.dims[a] * self.dims[a]
        return total

    def image_of(self, a):
        """The simple carrying the symmetric half-braiding on the simple a of A."""
        target = symmetric_object(self.eng, SimpleObj(a))
        for s in self.simples:
            if hom_dim(target, s):
                return s.name
        raise KeyError(a)


def twist_of(z):
    """θ with c_{z,z} traced and divided by the dimension."""
    eng = z.eng
    return eng.trace(z.beta_at(z.underlying)) / z.dim()


def _fingerprint(z):
    content = z.content()
    return tuple(content.get(c, 0) for c in z.eng.C.labels)


def _sort_key(eng, z, twist):
    return (
        complex(z.dim()).real,
        tuple(-m for m in _fingerprint(z)),
        twist != 1,
        str(twist),
    )


def centre_simples(A, seed=0, eng=None):
    """All simple objects of Z(A), with fusion rules and modular data."""
    eng = _engine(A, eng)
    C = eng.C
    found = []
    for a in C.labels:
        Ia = induction(C, SimpleObj(a), eng=eng)
        ident = eng.identity(Ia.underlying)
        for f, inc, proj in split_idempotent(ident, Ia, seed):
            cand = Ia.restrict(inc, proj)
            fp = _fingerprint(cand)
            if any(_fingerprint(s) == fp and hom_dim(cand, s) for s in found):
                continue
            found.append(cand)
    twists = [twist_of(z) for z in found]
    unit_fp = tuple(1 if c == C.unit else 0 for c in C.labels)
    order = sorted(
        range(len(found)),
        key=lambda k: (
            0 if (_fingerprint(found[k]) == unit_fp and twists[k] == 1 and _is_trivial(found[k])) else 1,
            _sort_key(eng, found[k], twists[k]),
        ),
    )
    simples = []
    for new, k in enumerate(order):
        z = found[k]
        z.name = f"z{new}"
        simples.append(z)
    cat = CentreCategory(C, simples, eng, seed)
    cat.unit = simples[0].name
    cat.dims = {z.name: z.dim() for z in simples}
    cat.twists = {z.name: twists[k] for z, k in zip(simples, order)}
    total = cat.global_dim()
    if total != C.global_dim() ** 2:
        raise IncompleteDecomposition(f"centre has dimension {total}, expected {C.global_dim() ** 2}")
    for zi in simples:
        for zj in simples:
            prod = tensor_c(zi, zj)
            for zk in simples:
                m = hom_dim(prod, zk)
                if m:
                    cat.N[(zi.name, zj.name, zk.name)] = m
    for zi in simples:
        for zj in simples:
            if cat.Nabc(zi.name, zj.name, cat.unit):
                cat.dual[zi.name] = zj.name
    cat.modular = modular_data_balancing(
        None, cat.labels, cat.Nabc, cat.dims, cat.twists, cat.dual
    )
    return cat


def _is_trivial(z):
    eng = z.eng
    return all(z.beta[x].equals(eng.braiding(SimpleObj(x), z.underlying)) for x in eng.C.labels)


def half_braiding_space(a, A, eng=None, cat=None):
    """Every half-braiding on the object a, up to isomorphism, as CentreObjects.

    The half-braidings are enumerated as sums of centre simples whose
    underlying objects add up to a, then transported onto a itself.
    """
    eng = _engine(A, eng)
    C = eng.C
    if isinstance(a, str):
        a = SimpleObj(a)
    cat = cat or centre_simples(C, eng=eng)
    want = eng.content(a)
    contents = [eng.content(z.underlying) for z in cat.simples]

    def search(k, remaining, chosen):
        if not any(remaining.values()):
            yield list(chosen)
            return
        if k == len(contents):
            return
        c = contents[k]
        top = min((remaining.get(l, 0) // m for l, m in c.items()), default=0)
        for mult in range(top, -1, -1):
            rem = {l: remaining.get(l, 0) - mult * c.get(l, 0) for l in set(remaining) | set(c)}
            yield from search(k + 1, rem, chosen + [k] * mult)

    out = []
    for combo in search(0, dict(want), []):
        parts = [cat.simples[k] for k in combo]
        z = direct_sum(eng, parts)
        iso = _content_iso(eng, z.underlying, a)
        inv = _content_iso(eng, a, z.underlying)
        moved = z.restrict(inv, iso, "+".join(p.name for p in parts))
        out.append(moved)
    return out


def _content_iso(eng, X, Y):
    blocks = {}
    for c, keys in eng.blocks(X).items():
        blocks[c] = eng.field.eye(len(keys))
    return eng.morphism(X, Y, blocks)


def direct_sum(eng, zs, name=None):
    X = SumObj([z.underlying for z in zs])
    beta = {}
    for x in eng.C.labels:
        S = SimpleObj(x)
        ids = eng.identity(S)
        acc = eng.zero(TensorObj(S, X), TensorObj(X, S))
        for k, z in enumerate(zs):
            acc = acc + eng.tensor(eng.inclusion(X, k), ids) @ z.beta[x] @ eng.tensor(ids, eng.projection(X, k))
        beta[x] = acc
    return CentreObject(eng, X, beta, name)


def tensor_s(z1, z2, cat=None, seed=0):
    """Decomposition of z1⊗_s z2 into simples, as (CentreObject, multiplicity).

    With a CentreCategory the summands are the catalogued simples; without
    one they are the split images themselves.
    """
    P = pi_idempotent(z1, z2)
    if P.is_zero():
        return []
    Y, inc, proj = image_object(P)
    img = _mixed_half_braiding(z1, z2).restrict(inc, proj)
    if cat is not None:
        out = []
        for s in cat.simples:
            m = hom_dim(s, img)
            if m:
                out.append((s, m))
        return out
    pieces = []
    for f, i2, p2 in split_idempotent(eng_identity(img), img, seed):
        pieces.append(img.restrict(i2, p2))
    out = []
    for p in pieces:
        for k, (q, m) in enumerate(out):
            if _fingerprint(q) == _fingerprint(p) and hom_dim(p, q):
                out[k] = (q, m + 1)
                break
        else:
            out.append((p, 1))
    return out


def tensor_s_object(z1, z2):
    """The image of Π as a single centre object (with the mixed half-braiding)."""
    P = pi_idempotent(z1, z2)
    Y, inc, proj = image_object(P)
    return _mixed_half_braiding(z1, z2).restrict(inc, proj), inc, proj


def eng_identity(z):
    return z.eng.identity(z.underlying)
