"""Reduced products over a rank-two A, predicted by condensing a simple current.

With A = {1, j} inside both C and D, the product is modelled as the local
modules of the algebra 1 + J, J = j⊠j, in the Deligne product C⊠D:

* local simples are pairs x with trivial monodromy against J, read off the
  twists as θ(x⊗J) = θ(x)θ(J);
* free J-orbits {x, x⊗J} give one simple of dimension d(x);
* fixed points x⊗J = x split into two simples of dimension d(x)/2.

Twists are kept in turns, dimensions as floats.  Input tables are typed in
by hand from the standard data of each theory.

    python3 tests/oracles/gen_condensation.py > tests/fixtures/condensation.json
"""

import itertools
import json
import math
from fractions import Fraction

SQ2 = math.sqrt(2)


def abelian(labels, twists, mult):
    return {"labels": labels, "dims": {a: 1.0 for a in labels}, "twists": twists, "mult": mult}


def z2xz2(names):
    # labels as pairs of bits
    def mult(a, b):
        x, y = names[a], names[b]
        s = ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)
        return [k for k, v in names.items() if v == s]

    return mult


TC = abelian(
    ["1", "e", "m", "f"],
    {"1": Fraction(0), "e": Fraction(0), "m": Fraction(0), "f": Fraction(1, 2)},
    z2xz2({"1": (0, 0), "e": (1, 0), "m": (0, 1), "f": (1, 1)}),
)
DS = abelian(
    ["1", "s", "sb", "b"],
    {"1": Fraction(0), "s": Fraction(1, 4), "sb": Fraction(3, 4), "b": Fraction(0)},
    z2xz2({"1": (0, 0), "s": (1, 0), "sb": (0, 1), "b": (1, 1)}),
)
SVEC = abelian(["1", "f"], {"1": Fraction(0), "f": Fraction(1, 2)}, lambda a, b: ["1" if a == b else "f"])


def ising(nu):
    table = {
        ("1", "1"): ["1"], ("1", "psi"): ["psi"], ("1", "sigma"): ["sigma"],
        ("psi", "psi"): ["1"], ("psi", "sigma"): ["sigma"], ("sigma", "sigma"): ["1", "psi"],
    }

    def mult(a, b):
        return table.get((a, b)) or table[(b, a)]

    return {
        "labels": ["1", "psi", "sigma"],
        "dims": {"1": 1.0, "psi": 1.0, "sigma": SQ2},
        "twists": {"1": Fraction(0), "psi": Fraction(1, 2), "sigma": Fraction(nu, 16)},
        "mult": mult,
    }


def condense(C, jc, D, jd):
    def twist(x):
        return (C["twists"][x[0]] + D["twists"][x[1]]) % 1

    def times_j(x):
        (a,) = C["mult"](x[0], jc)
        (b,) = D["mult"](x[1], jd)
        return (a, b)

    J = (jc, jd)
    assert twist(J) == 0, "J must be a boson"
    pairs = list(itertools.product(C["labels"], D["labels"]))
    local = []
    for x in pairs:
        y = times_j(x)
        if (twist(y) - twist(x) - twist(J)) % 1 == 0:
            local.append(x)
    seen, simples = set(), []
    for x in local:
        if x in seen:
            continue
        y = times_j(x)
        seen |= {x, y}
        d = C["dims"][x[0]] * D["dims"][x[1]]
        if y == x:
            simples += [(x, d / 2, twist(x)), (x, d / 2, twist(x))]
        else:
            simples.append((x, d, twist(x)))
    return simples


CASES = {
    "ToricCode*ToricCode/RepZ2": (TC, "e", TC, "e"),
    "ToricCode*DoubleSemion/RepZ2": (TC, "e", DS, "b"),
    "DoubleSemion*DoubleSemion/RepZ2": (DS, "b", DS, "b"),
    "Ising1*Ising1/sVec": (ising(1), "psi", ising(1), "psi"),
    "Ising1*Ising15/sVec": (ising(1), "psi", ising(15), "psi"),
    "Ising1*sVec/sVec": (ising(1), "psi", SVEC, "f"),
    "ZsVec*Ising1/sVec": (TC, "f", ising(1), "psi"),
}


def main():
    out = {}
    for name, (C, jc, D, jd) in CASES.items():
        simples = condense(C, jc, D, jd)
        out[name] = {
            "rank": len(simples),
            "global_dim": round(sum(d * d for _, d, _ in simples), 10),
            "simples": sorted([round(d, 10), str(t)] for _, d, t in simples),
            "ambients": sorted("⊠".join(x) for x, _, _ in simples),
        }
    print(json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False))


if __name__ == "__main__":
    main()
