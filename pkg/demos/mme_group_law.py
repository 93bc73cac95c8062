"""Multiplication table of the minimal modular extensions of RepZ2.

Each extension is a catalog category containing RepZ2; the product of two of
them is their reduced tensor product, recognised again inside the catalog.
"""

from redtensor.catalog import builtin
from redtensor.redprod import category_data, find_equivalence, mme_pair

NAMES = ["ToricCode", "DoubleSemion"]


def recognise(rp):
    for name in NAMES:
        if find_equivalence(rp.data, category_data(builtin(name).category)):
            return name
    return "?"


def main():
    A = builtin("RepZ2").category
    incs = {n: builtin(n).inclusion(A) for n in NAMES}
    width = max(map(len, NAMES))
    print(" " * width, *(n.ljust(width) for n in NAMES))
    for a in NAMES:
        row = [recognise(mme_pair(incs[a], incs[b])).ljust(width) for b in NAMES]
        print(a.ljust(width), *row)


if __name__ == "__main__":
    main()
