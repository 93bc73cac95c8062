import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from redtensor import linalg
from redtensor.algebra import FiniteAlgebra, factor, poly_mul
from redtensor.cyclotomic import Scalar
from redtensor.linalg import EXACT

ONE = Scalar.rational(1)


def R(q):
    return Scalar.rational(q)


def test_x2_plus_1_splits_over_gaussian_numbers():
    facs = factor([R(1), R(0), R(1)], 4)
    assert sorted(len(f) for f in facs) == [2, 2]


def test_x2_minus_2_splits_over_q_zeta8():
    facs = factor([R(-2), R(0), R(1)], 8)
    assert len(facs) == 2
    roots = [-f[0] for f in facs]
    assert all(r * r == 2 for r in roots)


def test_x2_plus_1_is_irreducible_over_q():
    assert len(factor([R(1), R(0), R(1)], 1)) == 1


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4, unique=True))
@settings(max_examples=40, deadline=None)
def test_distinct_rational_roots_factor_completely(roots):
    p = [ONE]
    for r in roots:
        p = poly_mul(p, [R(-r), ONE])
    facs = factor(p)
    assert all(len(f) == 2 for f in facs)
    assert sorted(int(str(-f[0])) for f in facs) == sorted(roots)


def group_algebra_z3():
    """Q[Z/3] in the basis 1, g, g²; left multiplication by g^k cycles."""
    left = []
    for k in range(3):
        L = EXACT.zeros((3, 3))
        for j in range(3):
            L[(j + k) % 3, j] = ONE
        left.append(L)
    unit = np.array([ONE, R(0), R(0)], dtype=object)
    return FiniteAlgebra(left, unit)


def test_central_idempotents_of_a_commutative_algebra():
    # rational structure constants; splitting needs the extension by E(3)
    alg = group_algebra_z3()
    idems = alg.central_idempotents(seed=0)
    assert len(idems) == 3
    total = sum(idems, np.array([R(0)] * 3, dtype=object))
    assert all(x == y for x, y in zip(total, alg.unit))
    for e in idems:
        assert all(x == y for x, y in zip(alg.mul(e, e), e))


def test_matrix_algebra_has_one_block():
    # M_2(Q): basis e11, e12, e21, e22
    def mult(i, j):
        a, b = divmod(i, 2)
        c, d = divmod(j, 2)
        v = [R(0)] * 4
        if b == c:
            v[2 * a + d] = ONE
        return v

    basis = [[ONE if k == i else R(0) for k in range(4)] for i in range(4)]
    alg = FiniteAlgebra.from_vectors(basis, mult, [ONE, R(0), R(0), ONE])
    assert len(alg.central_idempotents()) == 1
    prims = alg.primitive_idempotents()
    assert len(prims) == 2
    for e, _ in prims:
        assert linalg.rank(EXACT, alg.corner(e)) == 1
