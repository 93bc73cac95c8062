import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redtensor.catalog import (
    CatalogEntry,
    builtin,
    builtin_names,
    load,
    parse_category_file,
    serialize_category_file,
    verify_inclusion,
)
from redtensor.cyclotomic import E, Scalar
from redtensor.errors import CategorySyntaxError, SemanticError, UnknownName
from redtensor.fusion import FusionCategory, ObjectExpr


@pytest.mark.parametrize("name", builtin_names())
def test_round_trip_is_stable(name):
    text = serialize_category_file(builtin(name))
    again = serialize_category_file(parse_category_file(text))
    assert again == text


def test_aliases():
    assert builtin("TC") is builtin("ToricCode")
    assert builtin("DS") is builtin("DoubleSemion")
    assert builtin("Ising(15)").category.name == builtin("Ising15").category.name


def test_unknown_name():
    with pytest.raises(UnknownName):
        builtin("Fibonacci")
    with pytest.raises(UnknownName):
        load("/nonexistent/file.cat")


def test_ising_symbols():
    C = builtin("Ising1").category
    half = C.f_symbol("sigma", "sigma", "sigma", "sigma", "1", "1")
    assert half * half == Scalar.rational(1) / 2
    assert half == (E(8) - E(8) ** 3) / 2
    assert C.r_symbol("sigma", "sigma", "1") == E(16) ** 15


def test_double_semion_twists():
    C = builtin("DoubleSemion").category
    assert [C.twists[a] for a in C.labels] == [1, E(4), -E(4), 1]


def test_missing_f_entry_is_named():
    text = serialize_category_file(builtin("RepZ2"))
    lines = [l for l in text.splitlines() if not l.startswith("F chi chi chi chi")]
    with pytest.raises(SemanticError, match="missing F entry chi chi chi chi"):
        parse_category_file("\n".join(lines))


@pytest.mark.parametrize(
    "text,line",
    [
        ("category X\nsimples 1\nunit 1\nfusion 1 1 -> 1\ndim 1 = E(\n", 5),
        ("category X\nsimples 1 a-b\n", 2),
        ("category X\nbogus directive\n", 2),
    ],
)
def test_syntax_errors_carry_positions(text, line):
    with pytest.raises((CategorySyntaxError, SemanticError)) as info:
        parse_category_file(text)
    if isinstance(info.value, CategorySyntaxError):
        assert f"line {line}" in str(info.value) or getattr(info.value, "line", line) == line


def test_declared_inclusions_verify():
    for name in builtin_names():
        entry = builtin(name)
        for A_name in entry.inclusions:
            inc = entry.inclusion(builtin(A_name).category)
            assert verify_inclusion(inc) == [], (name, A_name)


def test_bad_inclusion_is_reported():
    # the semion has nontrivial self-monodromy, so it cannot carry RepZ2
    entry = builtin("DoubleSemion")
    bad = CatalogEntry(entry.name, entry.category, {"RepZ2": {"1": ObjectExpr.simple("1"), "chi": ObjectExpr.simple("s")}})
    problems = verify_inclusion(bad.inclusion(builtin("RepZ2").category))
    assert problems


labels = st.lists(st.from_regex(r"[a-z][a-z0-9_]{0,4}", fullmatch=True), min_size=1, max_size=4, unique=True)


@given(labels, st.lists(st.sampled_from([1, 2, 3, 4, 8, 16]), min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_parser_accepts_serializer_output(names, conductors):
    # a Z/n-like fusion ring on arbitrary labels with S data and no F/R
    names = ["u"] + [n for n in names if n != "u"]
    n = len(names)
    N = {(a, b): {names[(i + j) % n]: 1} for i, a in enumerate(names) for j, b in enumerate(names)}
    dual = {a: names[(-i) % n] for i, a in enumerate(names)}
    twists = {a: E(conductors[i % 4]) ** i for i, a in enumerate(names)}
    C = FusionCategory("Rand", names, "u", dual, N, {}, None, {a: Scalar.rational(1) for a in names}, twists)
    S = {(a, b): E(conductors[(i + j) % 4]) for i, a in enumerate(names) for j, b in enumerate(names)}
    text = serialize_category_file(CatalogEntry("Rand", C, {}, S))
    back = parse_category_file(text)
    assert serialize_category_file(back) == text
