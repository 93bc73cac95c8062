"""Exact evaluation of string diagrams in a skeletal fusion category.

Objects are nested tensor products and direct sums of simples.  Every object
carries, for each simple channel c, an ordered basis of splitting trees
``c -> object``; a morphism is a family of matrices, one per channel, whose
column k is the image of the k-th basis tree of the source.

Basis order of ``X ⊗ Y`` at channel e: keys ``(a, i, b, j, mu)`` enumerated
with the channel a of X most significant (in label order), then the index i
inside X's a-block, then b, j and finally the vertex multiplicity mu of
``a b -> e``.  For a word ``[w1, ..., wn]`` (left comb) this orders trees
lexicographically by their intermediate labels read from the top vertex down,
then by multiplicity indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DiagramSyntaxError, NotEndomorphism, TypeMismatch, UnknownLabel
from .linalg import EXACT

__all__ = [
    "SimpleObj",
    "TensorObj",
    "SumObj",
    "Engine",
    "Morphism",
    "HomSpace",
    "Id",
    "Compose",
    "Tensor",
    "Braid",
    "Ev",
    "Coev",
    "Prim",
    "parse_diagram",
    "format_diagram",
    "hom_space",
    "evaluate",
    "trace",
]


# ---------------------------------------------------------------------------
# objects


class Obj:
    __slots__ = ("_h",)

    def __hash__(self):
        return self._h

    def __matmul__(self, other):
        return TensorObj(self, other)


class SimpleObj(Obj):
    __slots__ = ("label",)

    def __init__(self, label):
        self.label = label
        self._h = hash(("s", label))

    __hash__ = Obj.__hash__

    def __eq__(self, other):
        return isinstance(other, SimpleObj) and other.label == self.label

    def __repr__(self):
        return str(self.label)


class TensorObj(Obj):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._h = hash(("t", left._h, right._h))

    __hash__ = Obj.__hash__

    def __eq__(self, other):
        return (
            isinstance(other, TensorObj)
            and other._h == self._h
            and other.left == self.left
            and other.right == self.right
        )

    def __repr__(self):
        return f"({self.left!r} {self.right!r})"


class SumObj(Obj):
    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)
        self._h = hash(("d", self.parts))

    __hash__ = Obj.__hash__

    def __eq__(self, other):
        return isinstance(other, SumObj) and other._h == self._h and other.parts == self.parts

    def __repr__(self):
        return "(" + " ⊕ ".join(map(repr, self.parts)) + ")" if self.parts else "0"


# ---------------------------------------------------------------------------
# morphisms


class Morphism:
    """A morphism src -> tgt as one matrix per simple channel."""

    __slots__ = ("eng", "src", "tgt", "blocks")

    def __init__(self, eng, src, tgt, blocks):
        self.eng = eng
        self.src = src
        self.tgt = tgt
        self.blocks = blocks

    def block(self, c):
        b = self.blocks.get(c)
        if b is None:
            return self.eng.field.zeros((self.eng.dim(self.tgt, c), self.eng.dim(self.src, c)))
        return b

    def channels(self):
        return [c for c in self.eng.C.labels if c in self.blocks]

    def __matmul__(self, other):
        """self ∘ other."""
        if other.tgt != self.src:
            raise TypeMismatch(f"cannot compose {other.src}->{other.tgt} with {self.src}->{self.tgt}")
        eng = self.eng
        blocks = {}
        for c, b in other.blocks.items():
            a = self.blocks.get(c)
            if a is not None:
                blocks[c] = linalg.matmul(eng.field, a, b)
        return Morphism(eng, other.src, self.tgt, blocks)

    def then(self, other):
        return other @ self

    def _combine(self, other, op):
        if other.src != self.src or other.tgt != self.tgt:
            raise TypeMismatch("adding morphisms with different types")
        blocks = {}
        for c in set(self.blocks) | set(other.blocks):
            blocks[c] = op(self.block(c), other.block(c))
        return Morphism(self.eng, self.src, self.tgt, blocks)

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def __neg__(self):
        return Morphism(self.eng, self.src, self.tgt, {c: -b for c, b in self.blocks.items()})

    def scale(self, s):
        s = self.eng.field.convert(s)
        return Morphism(self.eng, self.src, self.tgt, {c: b * s for c, b in self.blocks.items()})

    def tensor(self, other):
        return self.eng.tensor(self, other)

    def is_zero(self):
        return all(linalg.is_zero_matrix(self.eng.field, b) for b in self.blocks.values())

    def equals(self, other):
        return (self - other).is_zero()

    def scalar(self):
        """The value of an endomorphism of a simple object."""
        chans = [c for c in self.eng.C.labels if self.eng.dim(self.src, c)]
        if len(chans) != 1 or self.eng.dim(self.src, chans[0]) != 1 or self.src != self.tgt:
            raise ValueError("not an endomorphism of a simple object")
        return self.block(chans[0])[0, 0]

    def flat(self):
        """Entries in hom-space basis order (channel, target index, source index)."""
        out = []
        for c in self.eng.C.labels:
            b = self.block(c)
            out.extend(b.flat)
        return out

    def __repr__(self):
        return f"Morphism({self.src!r} -> {self.tgt!r})"


@dataclass
class HomSpace:
    source: tuple
    target: tuple
    basis: list  # (channel, source tree index, target tree index)

    @property
    def dim(self):
        return len(self.basis)


# ---------------------------------------------------------------------------
# the engine


class Engine:
    """Skeletal evaluation context for one category and one number field."""

    def __init__(self, C, field=EXACT):
        self.C = C
        self.field = field
        self._blocks = {}
        self._index = {}
        self._tpos = {}
        self._cache = {}
        self._fmats = {}
        self.unit = SimpleObj(C.unit)

    # basis bookkeeping ----------------------------------------------------
    def blocks(self, X):
        got = self._blocks.get(X)
        if got is not None:
            return got
        C = self.C
        if isinstance(X, SimpleObj):
            if X.label not in C._index:
                raise UnknownLabel(f"unknown label {X.label!r} in category {C.name}")
            out = {X.label: [()]}
        elif isinstance(X, TensorObj):
            lb, rb = self.blocks(X.left), self.blocks(X.right)
            out = {}
            for a in C.labels:
                na = len(lb.get(a, ()))
                if not na:
                    continue
                for i in range(na):
                    for b in C.labels:
                        nb = len(rb.get(b, ()))
                        if not nb:
                            continue
                        for e, m in C.fusion(a, b):
                            lst = out.setdefault(e, [])
                            for j in range(nb):
                                for mu in range(m):
                                    lst.append((a, i, b, j, mu))
            # keys above were generated e-interleaved; restore the documented order
            for e in out:
                out[e].sort(key=lambda k: (C._index[k[0]], k[1], C._index[k[2]], k[3], k[4]))
        elif isinstance(X, SumObj):
            out = {}
            for k, part in enumerate(X.parts):
                for c, keys in self.blocks(part).items():
                    lst = out.setdefault(c, [])
                    lst.extend((k, i) for i in range(len(keys)))
            for c in out:
                out[c].sort(key=lambda t: t)
        else:
            raise TypeError(f"not an object: {X!r}")
        out = {c: v for c, v in out.items() if v}
        self._blocks[X] = out
        return out

    def index(self, X):
        got = self._index.get(X)
        if got is None:
            got = {c: {k: p for p, k in enumerate(keys)} for c, keys in self.blocks(X).items()}
            self._index[X] = got
        return got

    def dim(self, X, c):
        return len(self.blocks(X).get(c, ()))

    def total_dim(self, X):
        """Quantum dimension of X."""
        out = self.field.zero
        for c, keys in self.blocks(X).items():
            out = out + self.field.convert(self.C.dims[c]) * len(keys)
        return out

    def content(self, X):
        """Multiplicity of each simple in X."""
        return {c: len(k) for c, k in self.blocks(X).items()}

    def _tensor_positions(self, X):
        """Positions inside X = L⊗R grouped by (e, a, b, mu), ordered i-major."""
        got = self._tpos.get(X)
        if got is not None:
            return got
        out = {}
        for e, keys in self.blocks(X).items():
            for p, (a, i, b, j, mu) in enumerate(keys):
                out.setdefault((e, a, b, mu), []).append(p)
        out = {k: np.array(v, dtype=int) for k, v in out.items()}
        self._tpos[X] = out
        return out

    # constructors ---------------------------------------------------------
    def morphism(self, src, tgt, blocks):
        return Morphism(self, src, tgt, blocks)

    def zero(self, src, tgt):
        return Morphism(self, src, tgt, {})

    def identity(self, X):
        return Morphism(self, X, X, {c: self.field.eye(len(k)) for c, k in self.blocks(X).items()})

    def word(self, labels):
        labels = list(labels)
        if not labels:
            return self.unit
        obj = SimpleObj(labels[0])
        for w in labels[1:]:
            obj = TensorObj(obj, SimpleObj(w))
        self.blocks(obj)
        return obj

    # F and R ----------------------------------------------------------------
    def fmatrix(self, a, b, c, d):
        key = (a, b, c, d)
        got = self._fmats.get(key)
        if got is not None:
            return got
        C = self.C
        rows = [(e, mu, nu) for e, m1 in C.fusion(a, b) for mu in range(m1) for nu in range(C.Nabc(e, c, d))]
        cols = [(f, ka, la) for f, m1 in C.fusion(b, c) for ka in range(m1) for la in range(C.Nabc(a, f, d))]
        mat = self.field.zeros((len(rows), len(cols)))
        for r, (e, mu, nu) in enumerate(rows):
            for s, (f, ka, la) in enumerate(cols):
                mat[r, s] = self.field.convert(C.f_symbol(a, b, c, d, e, f, mu, nu, ka, la))
        got = ({k: i for i, k in enumerate(rows)}, cols, mat)
        self._fmats[key] = got
        return got

    def rmatrix(self, a, b, c):
        key = ("R", a, b, c)
        got = self._cache.get(key)
        if got is None:
            got = linalg.convert_matrix(self.field, self.C.r_matrix(a, b, c))
            self._cache[key] = got
        return got

    def rmatrix_inv(self, a, b, c):
        key = ("Ri", a, b, c)
        got = self._cache.get(key)
        if got is None:
            got = linalg.inverse(self.field, self.rmatrix(a, b, c))
            self._cache[key] = got
        return got

    # structural morphisms ---------------------------------------------------
    def associator(self, X, Y, Z):
        """(X⊗Y)⊗Z -> X⊗(Y⊗Z)."""
        key = ("a", X, Y, Z)
        got = self._cache.get(key)
        if got is not None:
            return got
        XY, YZ = TensorObj(X, Y), TensorObj(Y, Z)
        src, tgt = TensorObj(XY, Z), TensorObj(X, YZ)
        sb = self.blocks(src)
        tidx, yzidx = self.index(tgt), self.index(YZ)
        xyb = self.blocks(XY)
        blocks = {}
        for d, keys in sb.items():
            mat = self.field.zeros((self.dim(tgt, d), len(keys)))
            for spos, (e, p, c, k, nu) in enumerate(keys):
                a, i, b, j, mu = xyb[e][p]
                ridx, cols, fm = self.fmatrix(a, b, c, d)
                r = ridx[(e, mu, nu)]
                for s, (f, ka, la) in enumerate(cols):
                    val = fm[r, s]
                    if self.field.is_zero(val):
                        continue
                    q = yzidx[f][(b, j, c, k, ka)]
                    mat[tidx[d][(a, i, f, q, la)], spos] = val
            blocks[d] = mat
        got = Morphism(self, src, tgt, blocks)
        self._cache[key] = got
        return got

    def associator_inv(self, X, Y, Z):
        """X⊗(Y⊗Z) -> (X⊗Y)⊗Z."""
        key = ("ai", X, Y, Z)
        got = self._cache.get(key)
        if got is None:
            fwd = self.associator(X, Y, Z)
            got = Morphism(
                self, fwd.tgt, fwd.src, {c: linalg.inverse(self.field, b) for c, b in fwd.blocks.items()}
            )
            self._cache[key] = got
        return got

    def braiding(self, X, Y):
        """c_{X,Y}: X⊗Y -> Y⊗X, X passing over Y."""
        key = ("b", X, Y)
        got = self._cache.get(key)
        if got is not None:
            return got
        src, tgt = TensorObj(X, Y), TensorObj(Y, X)
        tidx = self.index(tgt)
        blocks = {}
        for e, keys in self.blocks(src).items():
            mat = self.field.zeros((len(keys), len(keys)))
            for spos, (a, i, b, j, mu) in enumerate(keys):
                R = self.rmatrix(a, b, e)
                for nu in range(R.shape[1]):
                    val = R[mu, nu]
                    if not self.field.is_zero(val):
                        mat[tidx[e][(b, j, a, i, nu)], spos] = val
            blocks[e] = mat
        got = Morphism(self, src, tgt, blocks)
        self._cache[key] = got
        return got

    def braiding_inv(self, X, Y):
        """Inverse of c_{X,Y}: Y⊗X -> X⊗Y."""
        key = ("bi", X, Y)
        got = self._cache.get(key)
        if got is not None:
            return got
        src, tgt = TensorObj(Y, X), TensorObj(X, Y)
        tidx = self.index(tgt)
        blocks = {}
        for e, keys in self.blocks(src).items():
            mat = self.field.zeros((len(keys), len(keys)))
            for spos, (b, j, a, i, nu) in enumerate(keys):
                Ri = self.rmatrix_inv(a, b, e)
                for mu in range(Ri.shape[1]):
                    val = Ri[nu, mu]
                    if not self.field.is_zero(val):
                        mat[tidx[e][(a, i, b, j, mu)], spos] = val
            blocks[e] = mat
        got = Morphism(self, src, tgt, blocks)
        self._cache[key] = got
        return got

    def lam(self, X):
        """1⊗X -> X."""
        src = TensorObj(self.unit, X)
        blocks = {}
        for c, keys in self.blocks(src).items():
            mat = self.field.zeros((self.dim(X, c), len(keys)))
            for spos, (_, _, b, j, _) in enumerate(keys):
                mat[j, spos] = self.field.one
            blocks[c] = mat
        return Morphism(self, src, X, blocks)

    def lam_inv(self, X):
        f = self.lam(X)
        return Morphism(self, X, f.src, {c: b.T.copy() for c, b in f.blocks.items()})

    def rho(self, X):
        """X⊗1 -> X."""
        src = TensorObj(X, self.unit)
        blocks = {}
        for c, keys in self.blocks(src).items():
            mat = self.field.zeros((self.dim(X, c), len(keys)))
            for spos, (_, i, _, _, _) in enumerate(keys):
                mat[i, spos] = self.field.one
            blocks[c] = mat
        return Morphism(self, src, X, blocks)

    def rho_inv(self, X):
        f = self.rho(X)
        return Morphism(self, X, f.src, {c: b.T.copy() for c, b in f.blocks.items()})

    def vertex(self, a, b, c, mu=0):
        """Fusion vertex a⊗b -> c (dual to the splitting basis vector mu)."""
        src = TensorObj(SimpleObj(a), SimpleObj(b))
        keys = self.blocks(src).get(c, [])
        mat = self.field.zeros((1, len(keys)))
        mat[0, self.index(src)[c][(a, 0, b, 0, mu)]] = self.field.one
        return Morphism(self, src, SimpleObj(c), {c: mat})

    def split(self, a, b, c, mu=0):
        """Splitting vertex c -> a⊗b."""
        v = self.vertex(a, b, c, mu)
        return Morphism(self, v.tgt, v.src, {c: v.blocks[c].T.copy()})

    def _cup_cap(self, kind, a):
        C = self.C
        ad = C.dual[a]
        u = self.field.one
        if kind in ("ev", "ev_r"):
            left, right = (ad, a) if kind == "ev" else (a, ad)
            src = TensorObj(SimpleObj(left), SimpleObj(right))
            mat = self.field.zeros((1, self.dim(src, C.unit)))
            mat[0, 0] = u
            return Morphism(self, src, self.unit, {C.unit: mat})
        left, right = (a, ad) if kind == "coev" else (ad, a)
        tgt = TensorObj(SimpleObj(left), SimpleObj(right))
        mat = self.field.zeros((self.dim(tgt, C.unit), 1))
        mat[0, 0] = u
        return Morphism(self, self.unit, tgt, {C.unit: mat})

    def coev(self, a):
        """1 -> a⊗a*."""
        return self._cup_cap("coev", a)

    def ev_r(self, a):
        """a⊗a* -> 1, normalised so that ev_r ∘ coev = d_a."""
        return self._cup_cap("ev_r", a).scale(self.C.dims[a])

    def _zigzag_scalar(self, a, which):
        A, Ad = SimpleObj(a), SimpleObj(self.C.dual[a])
        if which == "ev":
            # (id_a ⊗ ev) ∘ α ∘ (coev ⊗ id_a), with the raw cap
            cap = self._cup_cap("ev", a)
            m = (
                self.rho(A)
                @ self.tensor(self.identity(A), cap)
                @ self.associator(A, Ad, A)
                @ self.tensor(self.coev(a), self.identity(A))
                @ self.lam_inv(A)
            )
        else:
            cup = self._cup_cap("coev_r", a)
            m = (
                self.lam(A)
                @ self.tensor(self.ev_r(a), self.identity(A))
                @ self.associator_inv(A, Ad, A)
                @ self.tensor(self.identity(A), cup)
                @ self.rho_inv(A)
            )
        return m.scalar()

    def ev(self, a):
        """a*⊗a -> 1, fixed by the zig-zag identity with :meth:`coev`."""
        key = ("ev", a)
        got = self._cache.get(key)
        if got is None:
            got = self._cup_cap("ev", a).scale(1 / self._zigzag_scalar(a, "ev"))
            self._cache[key] = got
        return got

    def coev_r(self, a):
        """1 -> a*⊗a, fixed by the zig-zag identity with :meth:`ev_r`."""
        key = ("coev_r", a)
        got = self._cache.get(key)
        if got is None:
            got = self._cup_cap("coev_r", a).scale(1 / self._zigzag_scalar(a, "coev_r"))
            self._cache[key] = got
        return got

    def left_loop(self, a):
        return (self.ev(a) @ self.coev_r(a)).scalar()

    # sums -------------------------------------------------------------------
    def inclusion(self, S, k):
        part = S.parts[k]
        sidx = self.index(S)
        blocks = {}
        for c, keys in self.blocks(part).items():
            mat = self.field.zeros((self.dim(S, c), len(keys)))
            for i in range(len(keys)):
                mat[sidx[c][(k, i)], i] = self.field.one
            blocks[c] = mat
        return Morphism(self, part, S, blocks)

    def projection(self, S, k):
        inc = self.inclusion(S, k)
        return Morphism(self, S, inc.src, {c: b.T.copy() for c, b in inc.blocks.items()})

    def direct_sum_map(self, src, tgt, entries):
        """Morphism between SumObjs from a dict (i, j) -> morphism part_j -> part_i."""
        out = self.zero(src, tgt)
        for (i, j), f in entries.items():
            out = out + self.inclusion(tgt, i) @ f @ self.projection(src, j)
        return out

    # tensor product of morphisms ------------------------------------------
    def tensor(self, f, g):
        src, tgt = TensorObj(f.src, g.src), TensorObj(f.tgt, g.tgt)
        spos, tpos = self._tensor_positions(src), self._tensor_positions(tgt)
        blocks = {}
        for (e, a, b, mu), cols in spos.items():
            rows = tpos.get((e, a, b, mu))
            if rows is None:
                continue
            fa, gb = f.blocks.get(a), g.blocks.get(b)
            if fa is None or gb is None:
                continue
            kr = np.multiply.outer(fa, gb).transpose(0, 2, 1, 3).reshape(
                fa.shape[0] * gb.shape[0], fa.shape[1] * gb.shape[1]
            )
            mat = blocks.get(e)
            if mat is None:
                mat = self.field.zeros((self.dim(tgt, e), self.dim(src, e)))
                blocks[e] = mat
            mat[np.ix_(rows, cols)] = kr
        return Morphism(self, src, tgt, blocks)

    def rebracket(self, w1, w2):
        """word(w1)⊗word(w2) -> word(w1 + w2)."""
        w1, w2 = tuple(w1), tuple(w2)
        key = ("rb", w1, w2)
        got = self._cache.get(key)
        if got is not None:
            return got
        X, Y = self.word(w1), self.word(w2)
        if not w2:
            got = self.rho(X)
        elif not w1:
            got = self.lam(Y)
        elif len(w2) == 1:
            got = self.identity(TensorObj(X, Y))
        else:
            head, last = w2[:-1], w2[-1]
            W = SimpleObj(last)
            got = (
                self.tensor(self.rebracket(w1, head), self.identity(W))
                @ self.associator_inv(X, self.word(head), W)
            )
        self._cache[key] = got
        return got

    def rebracket_inv(self, w1, w2):
        f = self.rebracket(w1, w2)
        return Morphism(self, f.tgt, f.src, {c: linalg.inverse(self.field, b) for c, b in f.blocks.items()})

    # traces -------------------------------------------------------------------
    def trace(self, f):
        if f.src != f.tgt:
            raise NotEndomorphism(f"trace of a non-endomorphism {f.src!r} -> {f.tgt!r}")
        out = self.field.zero
        for c, b in f.blocks.items():
            out = out + self.field.convert(self.C.dims[c]) * linalg.trace(self.field, b)
        return out

    # axiom defects ----------------------------------------------------------
    def _defects(self, lhs, rhs):
        out = {}
        for c in self.C.labels:
            diff = lhs.block(c) - rhs.block(c)
            if not linalg.is_zero_matrix(self.field, diff):
                out[c] = linalg.first_nonzero(self.field, diff)
        return out

    def pentagon_defect(self, a, b, c, d):
        A, B, Cc, D = (SimpleObj(x) for x in (a, b, c, d))
        lhs = self.associator(A, B, TensorObj(Cc, D)) @ self.associator(TensorObj(A, B), Cc, D)
        rhs = (
            self.tensor(self.identity(A), self.associator(B, Cc, D))
            @ self.associator(A, TensorObj(B, Cc), D)
            @ self.tensor(self.associator(A, B, Cc), self.identity(D))
        )
        return self._defects(lhs, rhs)

    def hexagon_defects(self, a, b, c):
        A, B, Cc = SimpleObj(a), SimpleObj(b), SimpleObj(c)
        i = self.identity
        lhs1 = self.associator(B, Cc, A) @ self.braiding(A, TensorObj(B, Cc)) @ self.associator(A, B, Cc)
        rhs1 = (
            self.tensor(i(B), self.braiding(A, Cc))
            @ self.associator(B, A, Cc)
            @ self.tensor(self.braiding(A, B), i(Cc))
        )
        lhs2 = (
            self.associator_inv(Cc, A, B)
            @ self.braiding(TensorObj(A, B), Cc)
            @ self.associator_inv(A, B, Cc)
        )
        rhs2 = (
            self.tensor(self.braiding(A, Cc), i(B))
            @ self.associator_inv(A, Cc, B)
            @ self.tensor(i(A), self.braiding(B, Cc))
        )
        out = [("1", item) for item in self._defects(lhs1, rhs1).items()]
        out += [("2", item) for item in self._defects(lhs2, rhs2).items()]
        return out

    # hom spaces ---------------------------------------------------------------
    def hom_space(self, src, tgt):
        X, Y = self.word(src), self.word(tgt)
        basis = []
        for c in self.C.labels:
            for s in range(self.dim(X, c)):
                for t in range(self.dim(Y, c)):
                    basis.append((c, s, t))
        return HomSpace(tuple(src), tuple(tgt), basis)

    def hom_dim(self, X, Y):
        bx, by = self.blocks(X), self.blocks(Y)
        return sum(len(k) * len(by.get(c, ())) for c, k in bx.items())

    def hom_basis(self, X, Y):
        """Elementary matrix units spanning Hom(X, Y), in hom-space order."""
        out = []
        for c in self.C.labels:
            ns, nt = self.dim(X, c), self.dim(Y, c)
            for t in range(nt):
                for s in range(ns):
                    mat = self.field.zeros((nt, ns))
                    mat[t, s] = self.field.one
                    out.append(Morphism(self, X, Y, {c: mat}))
        return out

    def to_vector(self, f):
        return np.array(f.flat(), dtype=object if self.field.exact else complex)

    def from_vector(self, X, Y, vec):
        blocks = {}
        pos = 0
        for c in self.C.labels:
            ns, nt = self.dim(X, c), self.dim(Y, c)
            if ns and nt:
                blocks[c] = np.array(vec[pos : pos + ns * nt]).reshape(nt, ns)
            pos += ns * nt
        return Morphism(self, X, Y, blocks)


# ---------------------------------------------------------------------------
# diagram terms


@dataclass(frozen=True)
class Id:
    word: tuple


@dataclass(frozen=True)
class Compose:
    first: object
    second: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Braid:
    a: str
    b: str
    sign: int = 1


@dataclass(frozen=True)
class Ev:
    label: str


@dataclass(frozen=True)
class Coev:
    label: str


@dataclass(frozen=True)
class Prim:
    name: str


def term_type(t, C, prims=None):
    """(source word, target word) of a diagram term."""
    if isinstance(t, Id):
        return tuple(t.word), tuple(t.word)
    if isinstance(t, Braid):
        return ((t.a, t.b), (t.b, t.a)) if t.sign > 0 else ((t.b, t.a), (t.a, t.b))
    if isinstance(t, Ev):
        return (C.dual[t.label], t.label), ()
    if isinstance(t, Coev):
        return (), (t.label, C.dual[t.label])
    if isinstance(t, Prim):
        f = (prims or {}).get(t.name)
        if f is None:
            raise TypeMismatch(f"unknown primitive {t.name!r}", t)
        return tuple(f[0]), tuple(f[1])
    if isinstance(t, Compose):
        s1, t1 = term_type(t.first, C, prims)
        s2, t2 = term_type(t.second, C, prims)
        if t1 != s2:
            raise TypeMismatch(
                f"composition mismatch: {' '.join(t1) or '1'} vs {' '.join(s2) or '1'}", t
            )
        return s1, t2
    if isinstance(t, Tensor):
        s1, t1 = term_type(t.left, C, prims)
        s2, t2 = term_type(t.right, C, prims)
        return s1 + s2, t1 + t2
    raise TypeError(f"not a diagram term: {t!r}")


def evaluate(t, C_or_engine, prims=None):
    """Evaluate a term to a morphism between left-comb word objects.

    ``prims`` maps primitive names to ``(source word, target word, Morphism)``.
    """
    eng = C_or_engine if isinstance(C_or_engine, Engine) else Engine(C_or_engine)
    term_type(t, eng.C, prims)
    return _eval(t, eng, prims or {})


def _eval(t, eng, prims):
    if isinstance(t, Id):
        return eng.identity(eng.word(t.word))
    if isinstance(t, Braid):
        A, B = SimpleObj(t.a), SimpleObj(t.b)
        return eng.braiding(A, B) if t.sign > 0 else eng.braiding_inv(A, B)
    if isinstance(t, Ev):
        return eng.ev(t.label)
    if isinstance(t, Coev):
        return eng.coev(t.label)
    if isinstance(t, Prim):
        return prims[t.name][2]
    if isinstance(t, Compose):
        return _eval(t.second, eng, prims) @ _eval(t.first, eng, prims)
    if isinstance(t, Tensor):
        s1, t1 = term_type(t.left, eng.C, prims)
        s2, t2 = term_type(t.right, eng.C, prims)
        f, g = _eval(t.left, eng, prims), _eval(t.right, eng, prims)
        return eng.rebracket(t1, t2) @ eng.tensor(f, g) @ eng.rebracket_inv(s1, s2)
    raise TypeError(f"not a diagram term: {t!r}")


def hom_space(src, tgt, C):
    for w in list(src) + list(tgt):
        C.check_label(w)
    return Engine(C).hom_space(src, tgt)


def trace(m):
    return m.eng.trace(m)


# ---------------------------------------------------------------------------
# the diagram language


_KEYWORDS = ("braid~", "braid", "coev", "ev", "id", "prim")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg, pos=None):
        line, col = self.where(pos)
        raise DiagramSyntaxError(msg, line, col)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def ident(self, what="label"):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {what}, found {found}")
        return self.text[start : self.pos]

    def terms(self):
        t = self.term()
        while self.peek() == ";":
            self.pos += 1
            t = Compose(t, self.term())
        return t

    def term(self):
        t = self.factor()
        while self.peek() == "*":
            self.pos += 1
            t = Tensor(t, self.factor())
        return t

    def factor(self):
        self.skip()
        if self.peek() == "(":
            self.pos += 1
            t = self.terms()
            self.expect(")")
            return t
        start = self.pos
        for kw in _KEYWORDS:
            if self.text.startswith(kw, self.pos):
                end = self.pos + len(kw)
                nxt = self.text[end] if end < len(self.text) else ""
                if kw != "braid~" and (nxt.isalnum() or nxt == "_" or nxt == "~"):
                    continue
                self.pos = end
                break
        else:
            if self.pos >= len(self.text):
                self.error("expected a diagram term, found end of input")
            self.error(f"expected a diagram term, found {self.text[self.pos]!r}")
        self.expect("(")
        if kw == "id":
            word = [self.ident()]
            while self.peek() == ",":
                self.pos += 1
                word.append(self.ident())
            self.expect(")")
            return Id(tuple(word))
        if kw in ("braid", "braid~"):
            a = self.ident()
            self.expect(",")
            b = self.ident()
            self.expect(")")
            return Braid(a, b, 1 if kw == "braid" else -1)
        name = self.ident("name" if kw == "prim" else "label")
        self.expect(")")
        del start
        return {"ev": Ev, "coev": Coev, "prim": Prim}[kw](name)


def parse_diagram(text):
    """Parse the diagram language into a term tree."""
    p = _Parser(text)
    t = p.terms()
    p.skip()
    if p.pos != len(text):
        p.error(f"unexpected {text[p.pos]!r}")
    return t


def format_diagram(t):
    """Canonical text of a term; inverse to :func:`parse_diagram`."""
    if isinstance(t, Id):
        if not t.word:
            raise ValueError("the empty identity has no textual form")
        return f"id({','.join(t.word)})"
    if isinstance(t, Braid):
        return f"{'braid' if t.sign > 0 else 'braid~'}({t.a},{t.b})"
    if isinstance(t, Ev):
        return f"ev({t.label})"
    if isinstance(t, Coev):
        return f"coev({t.label})"
    if isinstance(t, Prim):
        return f"prim({t.name})"
    if isinstance(t, Compose):
        right = format_diagram(t.second)
        if isinstance(t.second, Compose):
            right = f"({right})"
        return f"{format_diagram(t.first)} ; {right}"
    if isinstance(t, Tensor):
        left, right = format_diagram(t.left), format_diagram(t.right)
        if isinstance(t.left, Compose):
            left = f"({left})"
        if isinstance(t.right, (Compose, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not a diagram term: {t!r}")
