"""Centre oracles, computed without the package.

Z(RepZ2): the half-braiding equations on 1 and chi are solved by hand
(sympy), giving four simples; S comes from the double braiding of the
solutions and T from the self-braiding.

Z(Rep G) for G = Z2, Z3, S3: simples are pairs (conjugacy class, irrep of
the centraliser), found by brute force over permutations.  Dimensions are
|class| * dim(irrep) and twists are chi(g)/dim(irrep), recorded in turns.

    python3 tests/oracles/gen_centre.py > tests/fixtures/centre.json
"""

import itertools
import json
from fractions import Fraction

import sympy as sp


def repz2_by_hand():
    # beta_chi on the underlying object: a scalar b with b*b = beta_1 = 1
    b = sp.Symbol("b")
    sols = sorted(int(s) for s in sp.solve(sp.Eq(b * b, 1), b))
    simples = [(x, s) for x in ("1", "chi") for s in sols]

    def half(z, y):
        x, s = z
        return s if y == "chi" else 1

    def mono(z1, z2):
        return half(z1, z2[0]) * half(z2, z1[0])

    twist = {z: (z[1] if z[0] == "chi" else 1) for z in simples}
    S = [[sp.Rational(mono(z1, z2), 2) for z2 in simples] for z1 in simples]
    return {
        "simples": [f"{x}:{s}" for x, s in simples],
        "T": [int(twist[z]) for z in simples],
        "S": [[str(v) for v in row] for row in S],
        "fusion_group": "Z2xZ2",
    }


def perms(n):
    return list(itertools.permutations(range(n)))


def mul(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def generated(gens):
    e = tuple(range(len(gens[0])))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = mul(g, h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return sorted(seen)


def order(g):
    e = tuple(range(len(g)))
    k, x = 1, g
    while x != e:
        x, k = mul(x, g), k + 1
    return k


def irrep_dims(group):
    """Dimensions of irreps: k classes, squares summing to |G|, one of them 1."""
    k = len(classes(group))
    n = len(group)
    for combo in itertools.combinations_with_replacement(range(1, n + 1), k):
        if sum(d * d for d in combo) == n and 1 in combo and all(n % d == 0 for d in combo):
            return sorted(combo)
    raise ValueError("no dimension vector")


def classes(group):
    left = set(group)
    out = []
    for g in group:
        if g in left:
            cls = {mul(mul(h, g), inv(h)) for h in group}
            out.append(sorted(cls))
            left -= cls
    return out


def double(group):
    rows = []
    for cls in classes(group):
        g = cls[0]
        cent = [h for h in group if mul(h, g) == mul(g, h)]
        abelian = all(mul(a, b) == mul(b, a) for a in cent for b in cent)
        if len(cls) == 1 and g == tuple(range(len(g))):
            # identity class: irreps of G, every twist trivial
            for d in irrep_dims(group):
                rows.append((len(cls) * d, Fraction(0)))
            continue
        if not abelian:
            raise ValueError("non-identity class with nonabelian centraliser")
        # abelian centraliser: cyclic here; characters send a generator to a root of unity
        n = len(cent)
        gens = [h for h in cent if order(h) == n]
        if not gens:
            raise ValueError("centraliser is not cyclic")
        c = gens[0]
        k = next(k for k in range(n) if _power(c, k) == g)
        for j in range(n):
            rows.append((len(cls), Fraction(j * k, n) % 1))
    return rows


def _power(g, k):
    x = tuple(range(len(g)))
    for _ in range(k):
        x = mul(x, g)
    return x


GROUPS = {
    "RepZ2": generated([(1, 0)]),
    "RepZ3": generated([(1, 2, 0)]),
    "RepS3": generated([(1, 0, 2), (1, 2, 0)]),
}


def main():
    out = {"RepZ2_by_hand": repz2_by_hand(), "doubles": {}}
    for name, G in GROUPS.items():
        rows = double(G)
        out["doubles"][name] = {
            "rank": len(rows),
            "global_dim": sum(d * d for d, _ in rows),
            "simples": sorted([d, str(t)] for d, t in rows),
        }
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
