from fractions import Fraction

import pytest

import oracles as o
from assocop import combinatorics as cb
from assocop.algebra import (F, M, EchelonBasis, LinearCombo, convolve, dumps, loads, rank,
                             to_f_basis, to_m_basis)
from assocop.combinatorics import SubsetLabel


def S(*terms, basis="F"):
    return LinearCombo("S", basis, terms)


def test_m_expansion_in_f():
    assert to_f_basis(M((4, 1, 2, 3))) == S(
        ((4, 1, 2, 3), 1), ((4, 1, 3, 2), -1), ((4, 2, 1, 3), -1), ((4, 3, 2, 1), 1))


def test_subset_m_expansion():
    got = to_f_basis(M(SubsetLabel(4, (1,))))
    want = LinearCombo("Q", "F", [(SubsetLabel(4, (1,)), 1), (SubsetLabel(4, (1, 2)), -1),
                                  (SubsetLabel(4, (1, 3)), -1), (SubsetLabel(4, (1, 2, 3)), 1)])
    assert got == want


def test_top_element_is_self_dual():
    assert to_m_basis(F((3, 2, 1))) == M((3, 2, 1))
    assert to_f_basis(M((3, 2, 1))) == F((3, 2, 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_basis_change_matches_oracle(n):
    for s in o.perms(n):
        assert dict(to_f_basis(M(s)).items()) == o.m_to_f(n, s)
        assert dict(to_m_basis(F(s)).items()) == o.f_to_m(n, {s: 1})


@pytest.mark.parametrize("family,n", [("S", 4), ("Q", 5), ("Y", 4)])
def test_basis_change_round_trip(family, n):
    from assocop.order import poset
    for x in poset(family, n).elements:
        assert to_m_basis(to_f_basis(M(x, family))) == M(x, family)
        assert to_f_basis(to_m_basis(F(x, family))) == F(x, family)


def test_linear_operations():
    x = F((1, 2)) + F((2, 1)) * 3
    assert x.coefficient_of((2, 1)) == 3
    assert not (x - x)
    assert len(x) == 2
    assert -x == x * -1
    assert repr(F((1, 2)) - F((2, 1))) == "F_(1,2) - F_(2,1)"
    with pytest.raises(ValueError):
        F((1, 2)) + M((1, 2))


def test_inhomogeneous_combination_has_no_degree():
    x = F((1,)) + F((1, 2))
    with pytest.raises(ValueError):
        x.degree


def test_convolution():
    theta2 = F((1, 2)) - F((2, 1))
    assert convolve(theta2, theta2) == theta2 * 2
    assert convolve(F((1, 2)), F((2, 1))) == F((2, 1))
    assert convolve(F((2, 3, 1)), F((2, 3, 1))) == F((3, 1, 2))
    with pytest.raises(ValueError):
        convolve(F(SubsetLabel(2)), F(SubsetLabel(2)))


def test_convolution_matches_oracle_product():
    for a in o.perms(3):
        for b in o.perms(3):
            assert convolve(F(a), F(b)) == F(o.compose_perm(a, b))


def test_json_round_trip():
    for x in [F((2, 3, 1)) * Fraction(1, 2) - F((1, 2, 3)),
              M(SubsetLabel(4, (1, 3))) * -2,
              M(cb.parse_tree("((o o) o)")) + M(cb.parse_tree("(o (o o))"))]:
        assert loads(dumps(x)) == x


def test_json_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        loads('{"family": "S", "basis": "F", "degree": 3, "terms": [{"index": [2, 1], "coeff": 1}]}')


def test_echelon_basis_against_rational_rank():
    vecs = [to_f_basis(M(s)).items() for s in cb.permutations(3)]
    vecs = [dict(v) for v in vecs]
    vecs += [{k: 2 * c for k, c in vecs[0].items()}]
    vecs += [{k: vecs[1].get(k, 0) - vecs[2].get(k, 0) for k in set(vecs[1]) | set(vecs[2])}]
    assert rank(vecs, key=repr) == o.rational_rank(vecs) == 6
    E = EchelonBasis(key=repr)
    assert E.add({"a": 1, "b": 2})
    assert not E.add({"a": 3, "b": 6})
    assert E.contains({"a": -1, "b": -2})
    assert not E.contains({"a": 1})
    assert E.add({"b": 1})
    assert E.contains({"a": 1}) and len(E) == 2
