"""Generate skeletal data for Rep(S3) from explicit irreducible representations.

Splitting maps V_c -> V_a ⊗ V_b are found as intertwiner nullspaces; F and R
are read off by expanding one tree basis in the other.  Everything is exact
over Q, so the output needs no cyclotomic numbers.

    python3 tests/oracles/gen_reps3.py > src/redtensor/data/RepS3.cat
"""

import itertools
import sys

import sympy as sp

LABELS = ("1", "sgn", "rho")
ROT = {"1": sp.Matrix([[1]]), "sgn": sp.Matrix([[1]]), "rho": sp.Matrix([[0, -1], [1, -1]])}
REF = {"1": sp.Matrix([[1]]), "sgn": sp.Matrix([[-1]]), "rho": sp.Matrix([[0, 1], [1, 0]])}
DIM = {a: ROT[a].shape[0] for a in LABELS}


def kron(x, y):
    return sp.kronecker_product(x, y)


def splitting(a, b, c):
    """Intertwiner V_c -> V_a ⊗ V_b, or None."""
    if a == "1":
        return sp.eye(DIM[b]) if b == c else None
    if b == "1":
        return sp.eye(DIM[a]) if a == c else None
    n, m = DIM[a] * DIM[b], DIM[c]
    xs = sp.symbols(f"x0:{n * m}")
    X = sp.Matrix(n, m, xs)
    eqs = []
    for g in (ROT, REF):
        eqs.extend(kron(g[a], g[b]) * X - X * g[c])
    sol = sp.linsolve(eqs, xs)
    (vec,) = sol
    free = sorted(set().union(*(v.free_symbols for v in vec)), key=str)
    if not free:
        return None
    assert len(free) == 1, "multiplicity-free expected"
    mat = sp.Matrix(n, m, [v.subs(free[0], 1) for v in vec])
    return mat


def swap(a, b):
    """V_a ⊗ V_b -> V_b ⊗ V_a."""
    da, db = DIM[a], DIM[b]
    P = sp.zeros(da * db, da * db)
    for i in range(da):
        for j in range(db):
            P[j * da + i, i * db + j] = 1
    return P


def main():
    phi = {}
    for a, b, c in itertools.product(LABELS, repeat=3):
        s = splitting(a, b, c)
        if s is not None:
            phi[(a, b, c)] = s

    def channels(a, b):
        return [c for c in LABELS if (a, b, c) in phi]

    out = ["# Rep(S3) from explicit irreps; generated by tests/oracles/gen_reps3.py", "category RepS3"]
    out.append("simples " + " ".join(LABELS))
    out.append("unit 1")
    out.append("dual " + " ".join(f"{a}={a}" for a in LABELS))
    for a, b in itertools.product(LABELS, repeat=2):
        out.append(f"fusion {a} {b} -> " + "+".join(channels(a, b)))
    for a in LABELS:
        out.append(f"dim {a} = {DIM[a]}")
    for a in LABELS:
        out.append(f"twist {a} = 1")
    for a, b, c in itertools.product(LABELS, repeat=3):
        for d in LABELS:
            lhs = [(e, kron(phi[(a, b, e)], sp.eye(DIM[c])) * phi[(e, c, d)])
                   for e in channels(a, b) if (e, c, d) in phi]
            rhs = [(f, kron(sp.eye(DIM[a]), phi[(b, c, f)]) * phi[(a, f, d)])
                   for f in channels(b, c) if (a, f, d) in phi]
            if not lhs:
                continue
            basis = sp.Matrix.hstack(*[m.reshape(m.rows * m.cols, 1) for _, m in rhs])
            for e, m in lhs:
                coeffs = basis.solve_least_squares(m.reshape(m.rows * m.cols, 1))
                assert basis * coeffs == m.reshape(m.rows * m.cols, 1)
                for (f, _), val in zip(rhs, coeffs):
                    out.append(f"F {a} {b} {c} {d} : {e}->{f} = {sp.nsimplify(val)}")
    for a, b in itertools.product(LABELS, repeat=2):
        for c in channels(a, b):
            lhs = swap(a, b) * phi[(a, b, c)]
            rhs = phi[(b, a, c)]
            col = rhs.reshape(rhs.rows * rhs.cols, 1)
            val = col.solve_least_squares(lhs.reshape(lhs.rows * lhs.cols, 1))[0]
            assert val * rhs == lhs
            out.append(f"R {a} {b} : {c} = {sp.nsimplify(val)}")
    out.append("include RepS3 : " + " ".join(f"{a}->{a}" for a in LABELS))
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
