"""Ising(1) times Ising(nu) over sVec for every odd nu.

Prints rank, global dimension and central charge of each product; the
central charges add mod 8, so nu = 15 lands on the twisted double of sVec.
Each run takes around twenty seconds.
"""

import sys

from redtensor.catalog import builtin
from redtensor.fusion import modular_data_balancing
from redtensor.redprod import mme_pair


def main(nus):
    A = builtin("sVec").category
    left = builtin("Ising1").inclusion(A)
    c1 = modular_data_balancing(left.C).central_charge
    for nu in nus:
        right = builtin(f"Ising{nu}").inclusion(A)
        rp = mme_pair(left, right)
        c2 = modular_data_balancing(right.C).central_charge
        print(f"Ising{nu}: rank {rp.rank} dim {rp.data.global_dim()} "
              f"c = {rp.modular.central_charge} (inputs {c1} + {c2})")


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or range(1, 16, 2))
