from __future__ import annotations

import pytest
from hypothesis import given, settings

from reeskit.errors import AlreadyMinimal
from reeskit.generators import minimal_generators
from reeskit.graph import augment, build_graph
from reeskit.groebner import groebner_basis
from reeskit.resolution import (
    Betti,
    FreeResolution,
    MonomialMatrix,
    Term,
    betti_numbers,
    build_resolution,
    first_syzygies,
    matrix_cas,
    matrix_json,
    matrix_text,
    minimal_resolution,
    minimalize,
    resolution_cas,
    second_syzygies,
    verify_complex,
)

from conftest import EX1, EX2, TINY, m, params


def _syz(p):
    gb = groebner_basis(p)
    g = augment(build_graph(minimal_generators(p)))
    return gb, g, dict(zip(g.edges, first_syzygies(gb, g))), dict(zip(g.triangles, second_syzygies(gb, g)))


def test_first_syzygy_examples():
    _, _, s1, _ = _syz(EX1)
    assert s1[1, 2].entries == {1: Term(1, m("T1^7")), 2: Term(-1, m("T0^6")), 0: Term(1, m("1"))}
    assert s1[1, 3].entries == {1: Term(1, m("T1*X1")), 3: Term(-1, m("T0^6")), 2: Term(1, m("X0"))}
    assert s1[0, 2].entries == {0: Term(1, m("X1")), 2: Term(-1, m("T1^6*X0")), 1: Term(1, m("T0^9*X2"))}


def test_second_syzygy_example():
    _, _, _, s2 = _syz(EX1)
    assert s2[1, 3, 4].entries == {
        (1, 3): Term(1, m("X1")),
        (1, 4): Term(-1, m("T1")),
        (3, 4): Term(1, m("T0^3")),
        (2, 3): Term(-1, m("X0")),
    }
    assert list(_syz(TINY)[3]) == [(1, 2, 3)]


def test_ranks():
    assert build_resolution(EX1).ranks == (6, 8, 3)
    assert build_resolution(TINY).ranks == (4, 4, 1)
    assert build_resolution(EX2).ranks == (7, 10, 4)
    assert minimal_resolution(EX1).ranks == (5, 6, 2)
    assert minimal_resolution(TINY).ranks == (3, 2, 0)
    with pytest.raises(AlreadyMinimal):
        minimalize(minimal_resolution(EX1))


def test_betti():
    assert betti_numbers(EX1) == Betti(5, 6, 2, 2)
    assert betti_numbers(TINY) == Betti(3, 2, 0, 1)
    assert betti_numbers(EX2) == Betti(6, 8, 3, 2)
    assert str(betti_numbers(EX2)) == "β0=6 β1=8 β2=3 pd=2"


def test_complex_example():
    res = build_resolution(EX1)
    rep = verify_complex(res)
    assert rep.ok and rep.products_checked == 8 + 3 * 6


def _flip(mat: MonomialMatrix, key) -> MonomialMatrix:
    entries = dict(mat.entries)
    t = entries[key]
    entries[key] = Term(-t.coeff, t.mono)
    return MonomialMatrix(mat.row_labels, mat.col_labels, entries)


def test_sign_flip_is_detected():
    res = build_resolution(EX1)
    bad = FreeResolution(res.phi0, res.phi1, _flip(res.phi2, ((1, 3), (1, 3, 4))), res.minimal)
    rep = verify_complex(bad)
    assert not rep.ok
    assert all("phi1*phi2" in where for where, _ in rep.residuals)
    bad = FreeResolution(res.phi0, _flip(res.phi1, (0, (0, 2))), res.phi2, res.minimal)
    assert not verify_complex(bad).ok


def test_exports():
    res = minimal_resolution(TINY)
    assert matrix_text(res.phi1).splitlines() == [
        "   (1,3)  (2,3)",
        "1     X1     X2",
        "2     X0     X1",
        "3    -T0    -T1",
    ]
    js = matrix_json(res.phi1)
    assert js["entries"][0] == {"row": 1, "col": [1, 3], "sign": 1, "monomial": "X1"}
    assert matrix_cas(res.phi1) == "matrix{{X1,X2},{X0,X1},{-T0,-T1}}"
    assert matrix_cas(res.phi2) == "map(S^2,S^0,0)"
    assert "phi0 = matrix{{T0*X1-T1*X0,T1*X1-T0*X2,X1^2-X0*X2}};" in resolution_cas(res)


@settings(max_examples=150, deadline=None)
@given(params())
def test_complexes_and_minimality(p):
    res = build_resolution(p)
    r = len(minimal_generators(p))
    assert res.ranks == (r + 1, 2 * r - 2, r - 2)
    assert verify_complex(res).ok
    mres = minimalize(res)
    assert verify_complex(mres).ok
    assert not mres.phi1.constant_entries() and not mres.phi2.constant_entries()
    b = betti_numbers(p)
    assert mres.ranks == (b.b0, b.b1, b.b2) == (r, 2 * (r - 2), max(r - 3, 0))
    assert b.pd == (2 if r > 3 else 1)
    # the only unit entries of the non-minimal complex are the ones minimalization removes
    assert set(res.phi1.constant_entries()) == {(0, (1, 2))}
    assert set(res.phi2.constant_entries()) == {((0, 2), (1, 2, 3))}
