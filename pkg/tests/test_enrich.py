import itertools

import pytest

from helpers import inc
from redtensor.centre import centre_simples, hom_dim
from redtensor.diagram import SimpleObj, TensorObj
from redtensor.enrich import (
    Enrichment,
    check_compose_za,
    check_crossed_tensor,
    check_hom_half_braiding,
    check_interchange,
    check_pi_tensoring,
    check_tensor_beta,
    check_unit_triangle,
    commutant,
)

CASES = [("ToricCode", "RepZ2"), ("DoubleSemion", "RepZ2"), ("Ising1", "sVec")]


@pytest.fixture(scope="module", params=CASES, ids=lambda p: f"{p[0]}/{p[1]}")
def enr(request):
    return Enrichment(inc(*request.param))


def pairs(enr):
    return list(itertools.product(enr.C.labels, repeat=2))


def test_hom_objects_carry_half_braidings(enr):
    assert all(check_hom_half_braiding(enr, *p) for p in pairs(enr))


def test_hom_dimensions_add_up(enr):
    # Hom_A(a, C̲(c,c')) = Hom_C(ι(a)⊗c, c')
    for c, cp in pairs(enr):
        H = enr.hom(c, cp)
        for a in enr.A.labels:
            src = TensorObj(enr.push_obj(SimpleObj(a)), enr.obj(c))
            assert H.degree_dim(a) == enr.engC.hom_dim(src, enr.obj(cp))


def test_composition_is_a_z_morphism(enr):
    L = enr.C.labels
    for t in itertools.product(L, repeat=3):
        assert check_compose_za(enr, *t)


def test_crossed_tensor_and_interchange(enr):
    ps = pairs(enr)
    assert all(check_crossed_tensor(enr, p, q) for p in ps for q in ps)
    assert all(check_tensor_beta(enr, p, q) for p in ps for q in ps)
    triples = list(itertools.product(enr.C.labels, repeat=3))[:8]
    assert all(check_interchange(enr, s, t) for s in triples for t in triples)


def test_unit_triangles(enr):
    assert all(check_unit_triangle(enr, *p) for p in pairs(enr))


def test_identity_is_a_z_morphism(enr):
    for c in enr.C.labels:
        enr.identity_za(c)


def test_pi_tensoring_represents_hom(enr):
    z = centre_simples(enr.A, eng=enr.engA)
    for s in z.simples:
        for c in enr.C.labels:
            assert check_pi_tensoring(enr, s, c), (s.name, c)


def test_commutant_is_the_neutral_part(enr):
    assert commutant(enr.inc) == enr.neutral_labels()


def test_round_trip_with_multiplicities():
    enr = Enrichment(inc("Ising1", "sVec"))
    eng = enr.engC
    X = eng.word(("sigma", "sigma"))
    H = enr.hom(X, X)
    assert hom_dim(enr.I_s, H.half_braiding) == eng.hom_dim(X, X) == 2


def test_expected_commutants():
    assert commutant(inc("ToricCode", "RepZ2")) == ["1", "e"]
    assert commutant(inc("Ising1", "sVec")) == ["1", "psi"]
