import itertools

import pytest

from redtensor.catalog import builtin, builtin_names
from redtensor.cyclotomic import E
from redtensor.fusion import modular_data_balancing, mueger_centre, perron_frobenius_dims, validate
from redtensor.linalg import FloatField


@pytest.mark.parametrize("name", builtin_names())
def test_exact_and_float_validation_agree(name):
    C = builtin(name).category
    assert not validate(C)
    assert not validate(C, FloatField(1e-9))


def test_corrupted_f_symbol_is_caught():
    C = builtin("Ising1").category
    key = next(k for k in C.F if k[:6] == ("psi", "sigma", "psi", "sigma", "sigma", "sigma"))
    saved = C.F[key]
    try:
        C.F[key] = -saved
        report = validate(C)
        assert not report.ok("pentagon")
        assert "pentagon FAIL" in report.summary()
    finally:
        C.F[key] = saved
    assert not validate(C)


@pytest.mark.parametrize("nu", range(1, 16, 2))
def test_ising_central_charges(nu):
    md = modular_data_balancing(builtin(f"Ising{nu}").category)
    assert md.modular
    assert md.central_charge * 2 == nu


def test_symmetric_categories_are_transparent():
    for name in ("Vec", "sVec", "RepZ2", "RepZ3", "RepS3"):
        C = builtin(name).category
        assert C.symmetric
        assert mueger_centre(C) == list(C.labels)
    for name in ("ToricCode", "DoubleSemion", "Ising1", "Semion"):
        C = builtin(name).category
        assert not C.symmetric
        assert mueger_centre(C) == [C.unit]


def test_perron_frobenius_on_ising():
    C = builtin("Ising1").category
    dims = perron_frobenius_dims(C.labels, C.Nabc)
    assert dims["sigma"] * dims["sigma"] == 2
    assert dims["psi"] == 1


@pytest.mark.parametrize("name", ["ToricCode", "DoubleSemion", "Ising3", "Semion"])
def test_verlinde(name):
    C = builtin(name).category
    md = modular_data_balancing(C)
    S = md.S
    n = len(C.labels)
    # S is unitary and symmetric
    for i, j in itertools.product(range(n), repeat=2):
        assert S[i, j] == S[j, i]
        assert sum((S[i, k] * S[j, k].conjugate() for k in range(n)), 0 * S[0, 0]) == (1 if i == j else 0)
    for a, b, c in itertools.product(range(n), repeat=3):
        total = sum((S[a, k] * S[b, k] * S[c, k].conjugate() / S[0, k] for k in range(n)), 0 * S[0, 0])
        assert total == C.Nabc(C.labels[a], C.labels[b], C.labels[c])


def test_semion_twist():
    md = modular_data_balancing(builtin("Semion").category)
    assert md.T == [1, E(4)]
