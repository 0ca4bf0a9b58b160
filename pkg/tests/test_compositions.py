"""Argument-string parsing, rendering, duality, convergence."""

import pytest
from hypothesis import given, strategies as st

from polyzeta.compositions import (
    Composition,
    DomainError,
    ParseError,
    dual,
    is_convergent,
    parse,
    render,
)


def test_parse_flat():
    spec = parse("3,1,-2")
    comp = spec.expansion()
    assert [(a.magnitude, a.barred) for a in comp] == [(3, False), (1, False), (2, True)]
    assert comp.depth == 3
    assert comp.weight == 6


def test_parse_periodic():
    spec = parse("2,{1,3}^2")
    assert render(spec.prefix) == "2"
    assert render(spec.period) == "1,3"
    assert spec.reps == 2
    assert render(spec.expansion()) == "2,1,3,1,3"


def test_parse_empty():
    assert parse("").expansion().depth == 0


def test_parse_zero_rep():
    assert render(parse("3,{1,3}^0").expansion()) == "3"


@pytest.mark.parametrize(
    "text",
    ["0", "3,", ",3", "3 1", "{1,3}", "{}^2", "{1,3}^-1", "{1,3}^2,4", "3,{1,3", "x"],
)
def test_parse_errors(text):
    with pytest.raises((ParseError, DomainError)):
        parse(text)


def test_render_roundtrip_explicit():
    comp = Composition.of(3, -1, 2)
    assert parse(render(comp)).expansion() == comp


@given(st.lists(st.integers(min_value=-9, max_value=9).filter(lambda v: v != 0), max_size=8))
def test_render_parse_roundtrip(values):
    comp = Composition.of(*values)
    assert parse(render(comp)).expansion() == comp


def test_dual_known_pairs():
    assert render(dual(Composition.of(3))) == "2,1"
    assert render(dual(Composition.of(2))) == "2"
    assert render(dual(Composition.of(3, 1, 3, 1))) == "3,1,3,1"
    assert render(dual(Composition.of(2, 1, 3, 1))) == "3,1,3"


@given(
    st.lists(st.integers(min_value=1, max_value=6), min_size=0, max_size=6).filter(
        lambda v: not v or v[0] >= 2
    )
)
def test_dual_involution(values):
    comp = Composition.of(*values)
    assert dual(dual(comp)) == comp


def test_dual_preserves_weight():
    comp = Composition.of(4, 2, 1, 1)
    assert dual(comp).weight == comp.weight


def test_dual_rejects_inadmissible():
    with pytest.raises(DomainError):
        dual(Composition.of(1, 2))
    with pytest.raises(DomainError):
        dual(Composition.of(-2, 1))


def test_convergence():
    assert is_convergent(Composition.of(2, 1), at_x_equals_one=True)
    assert is_convergent(Composition.of(-1), at_x_equals_one=True)
    assert not is_convergent(Composition.of(1, 1), at_x_equals_one=True)
    assert is_convergent(Composition.of(1, 1), at_x_equals_one=False)
