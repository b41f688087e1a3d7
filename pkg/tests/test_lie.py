import itertools
import math

import pytest

import oracles as o
from assocop import lie
from assocop.algebra import F, M, convolve, to_f_basis, to_m_basis


def test_bracket_examples():
    assert lie.bracket_f(F((1,)), F((1,))) == F((1, 2)) - F((2, 1))
    assert lie.bracket_f(F((1, 2)), F((1,))) == F((1, 2, 3)) - F((2, 3, 1))
    assert lie.bracket_m(M((1,)), M((1,))) == M((1, 2))
    assert to_f_basis(M((1, 2))) == lie.M12


def test_bracket_forms_agree_on_mixed_combinations():
    x = F((2, 1)) * 3 - F((1, 2))
    y = to_f_basis(M((1, 3, 2))) + F((2, 3, 1))
    assert lie.bracket_via_operad(x, y) == lie.bracket_f(x, y)
    assert to_f_basis(lie.bracket_m(to_m_basis(x), to_m_basis(y))) == lie.bracket_f(x, y)


def test_bracket_form_report():
    rep = lie.check_bracket_forms(5)
    assert rep.ok and rep.checked > 0


def test_twisted_lie_identities():
    rep = lie.twisted_lie_check(5)
    assert rep.ok and rep.checked > 0


def test_dynkin_small_cases():
    assert lie.dynkin_nested(1) == F((1,))
    assert lie.dynkin_m(1) == M((1,))
    assert lie.dynkin_m(2) == M((1, 2))
    assert lie.dynkin_m(3) == M((1, 2, 3)) + M((1, 3, 2))
    with pytest.raises(ValueError):
        lie.dynkin_nested(0)


@pytest.mark.parametrize("n", range(1, 7))
def test_dynkin_in_m_basis(n):
    theta = lie.dynkin_m(n)
    assert to_m_basis(lie.dynkin_nested(n)) == theta
    assert all(s[0] == 1 for s in theta.support())
    assert len(theta) == math.factorial(n - 1)


def test_commutator_words():
    assert lie.nested_commutator_words(1) == {(1,): 1}
    assert lie.nested_commutator_words(2) == {(1, 2): 1, (2, 1): -1}
    assert lie.nested_commutator_words(3) == {(1, 2, 3): 1, (2, 1, 3): -1, (3, 1, 2): -1, (3, 2, 1): 1}
    for n in range(1, 6):
        assert lie.nested_commutator_words(n) == o.commutator_words(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_dynkin_acts_as_nested_commutator(n):
    assert lie.dynkin_word_check(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_dynkin_quasi_idempotent(n):
    assert lie.dynkin_is_quasi_idempotent(n)
    theta = lie.dynkin_nested(n)
    assert convolve(theta, theta) == theta * n


@pytest.mark.parametrize("n", range(1, 6))
def test_lie_dimension(n):
    basis = lie.lie_span(n)
    assert len(basis) == lie.expected_lie_dimension(n) == math.factorial(n - 1)
    rows = [dict(b.items()) for b in basis]
    assert o.rational_rank(rows) == len(rows)


def test_lie_span_membership():
    assert lie.in_lie_span(lie.dynkin_nested(4))
    assert lie.in_lie_span(lie.bracket_f(lie.M12, F((1,))))
    assert lie.in_lie_span(lie.bracket_f(F((1,)), lie.M12))
    assert not lie.in_lie_span(F((1, 2, 3)))
    assert not lie.in_lie_span(lie.bracket_f(F((1, 2)), F((1,))))
    for a, b in itertools.product(lie.lie_span(2), lie.lie_span(2)):
        assert lie.in_lie_span(lie.bracket_f(a, b))
