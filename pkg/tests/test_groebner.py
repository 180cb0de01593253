from __future__ import annotations

import pytest
from hypothesis import given, settings

from reeskit.errors import IndexOutOfRange, NotInDelta
from reeskit.generators import delta_data, minimal_generators
from reeskit.graph import augment, build_graph
from reeskit.groebner import (
    auxiliary_element,
    colon_ideal_gens,
    colon_ideal_gens_bruteforce,
    groebner_basis,
    iota,
    minimalize_monomials,
)
from reeskit.monomial import divide, lcm

from conftest import EX1, TINY, m, params


def test_basis_15_13_9_6():
    gb = groebner_basis(EX1)
    assert gb.r == 5
    assert [str(gb.lt(i)) for i in range(6)] == [
        "T1^13*X0", "T0^6*X1", "T1^7*X1", "T1*X1^2", "T0^3*X1^3", "X1^5",
    ]
    assert str(gb.elements[0]) == "T1^13*X0 - T0^15*X2"


def test_tiny_basis():
    gb = groebner_basis(TINY)
    assert [str(gb.lt(i)) for i in range(4)] == ["T1^2*X0", "T0*X1", "T1*X1", "X1^2"]


def test_exports():
    gb = groebner_basis(TINY)
    assert gb.to_text().splitlines()[0] == "T1^2*X0 - T0^2*X2"
    assert gb.to_json()[0]["lead"] == [0, 2, 1, 0, 0]
    assert gb.to_cas().startswith("{T1^2*X0 - T0^2*X2, ")


@settings(max_examples=200, deadline=None)
@given(params())
def test_g0_and_minimality(p):
    gb = groebner_basis(p)
    assert gb.elements[0] == auxiliary_element(p)
    assert list(gb.elements[1:]) == [g.binomial for g in minimal_generators(p)]
    lts = [gb.lt(i) for i in range(gb.r + 1)]
    assert not any(a.divides(b) for i, a in enumerate(lts) for j, b in enumerate(lts) if i != j)


def test_colon_examples():
    gb = groebner_basis(EX1)
    assert colon_ideal_gens(gb, 0).generators == (m("X1"),)
    assert colon_ideal_gens(gb, 1).generators == (m("T1^7"), m("T1*X1"), m("X1^2"))
    assert colon_ideal_gens(gb, 4).generators == (m("X1^2"),)
    assert colon_ideal_gens_bruteforce(gb, 2).generators[0].x1 == 1
    assert colon_ideal_gens_bruteforce(groebner_basis(TINY), 0).generators == (m("X1"),)
    with pytest.raises(IndexOutOfRange):
        colon_ideal_gens(gb, 5)
    with pytest.raises(IndexOutOfRange):
        colon_ideal_gens_bruteforce(gb, -1)


def test_iota():
    dd = delta_data(EX1)
    assert [iota(dd, d) for d in (2, 3, 5)] == [3, 4, 5]
    with pytest.raises(NotInDelta):
        iota(dd, 4)
    assert iota(delta_data(TINY), 2) == 3


def test_minimalize_monomials():
    assert minimalize_monomials([m("X1^2"), m("T1*X1"), m("T1*X1^3"), m("X1^2")]) == [m("T1*X1"), m("X1^2")]


@settings(max_examples=300, deadline=None)
@given(params())
def test_closed_form_matches_definition(p):
    gb = groebner_basis(p)
    dd = delta_data(p)
    for j in range(gb.r):
        closed = colon_ideal_gens(gb, j, dd).generators
        assert closed == colon_ideal_gens_bruteforce(gb, j).generators
        degrees = [g.x1 for g in closed]
        assert degrees == sorted(set(degrees))


@settings(max_examples=200, deadline=None)
@given(params())
def test_edges_are_colon_generators(p):
    gb = groebner_basis(p)
    g = augment(build_graph(minimal_generators(p)))
    for j in range(gb.r):
        colon = set(colon_ideal_gens(gb, j).generators)
        for k in range(j + 1, gb.r + 1):
            q = divide(lcm(gb.lt(j), gb.lt(k)), gb.lt(j))
            assert ((j, k) in g.edges) == (q in colon)
