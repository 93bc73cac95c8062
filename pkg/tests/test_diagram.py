import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redtensor.catalog import builtin
from redtensor.diagram import Engine, SimpleObj, TensorObj, evaluate, format_diagram, parse_diagram
from redtensor.errors import DiagramSyntaxError, TypeMismatch


@pytest.fixture(scope="module")
def ising():
    return Engine(builtin("Ising1").category)


def test_braiding_inverse(ising):
    for a, b in itertools.product(ising.C.labels, repeat=2):
        A, B = SimpleObj(a), SimpleObj(b)
        assert (ising.braiding_inv(A, B) @ ising.braiding(A, B)).equals(ising.identity(TensorObj(A, B)))


def test_zigzag(ising):
    for a in ising.C.labels:
        A, Ad = SimpleObj(a), SimpleObj(ising.C.dual[a])
        # a -> a a* a -> a through coev then ev on the right pair
        m = ising.tensor(ising.coev(a), ising.identity(A)) @ ising.lam_inv(A)
        m = ising.associator(A, Ad, A) @ m
        m = ising.tensor(ising.identity(A), ising.ev(a)) @ m
        m = ising.rho(A) @ m
        assert m.equals(ising.identity(A))


def test_pentagon_and_hexagon_defects_vanish(ising):
    labels = ising.C.labels
    for q in itertools.product(labels, repeat=4):
        assert not ising.pentagon_defect(*q)
    for t in itertools.product(labels, repeat=3):
        assert not ising.hexagon_defects(*t)


def test_twist_from_trace(ising):
    C = ising.C
    for a in C.labels:
        A = SimpleObj(a)
        # closing up the self-braiding of a gives θ_a d_a
        assert ising.trace(ising.braiding(A, A)) == C.twists[a] * C.dims[a]


def test_parse_and_evaluate():
    C = builtin("ToricCode").category
    t = parse_diagram("braid(e,m) ; braid~(e,m)")
    m = evaluate(t, C)
    assert m.equals(Engine(C).identity(TensorObj(SimpleObj("e"), SimpleObj("m"))))
    full = parse_diagram("braid(e,m) ; braid(m,e)")
    mono = evaluate(full, C)
    # e and m fuse to f only, so the double braiding is the scalar -1
    assert mono.equals(-Engine(C).identity(TensorObj(SimpleObj("e"), SimpleObj("m"))))


def test_type_errors():
    C = builtin("ToricCode").category
    with pytest.raises(TypeMismatch):
        evaluate(parse_diagram("braid(e,m) ; id(e,m)"), C)
    with pytest.raises(DiagramSyntaxError):
        parse_diagram("braid(e,")


terms = st.recursive(
    st.one_of(
        st.builds(lambda a: f"id({a})", st.sampled_from(["1", "psi", "sigma"])),
        st.builds(lambda a, b: f"braid({a},{b})", st.sampled_from(["psi", "sigma"]), st.sampled_from(["psi", "sigma"])),
        st.builds(lambda a: f"ev({a})", st.sampled_from(["psi", "sigma"])),
    ),
    lambda inner: st.builds(lambda x, y: f"({x} * {y})", inner, inner),
    max_leaves=4,
)


@given(terms)
@settings(max_examples=60, deadline=None)
def test_format_parse_round_trip(text):
    t = parse_diagram(text)
    assert parse_diagram(format_diagram(t)) == t
