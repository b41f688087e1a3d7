import itertools

import pytest

import oracles as o
from assocop import combinatorics as cb
from assocop import operads as op
from assocop.algebra import F, M, LinearCombo, to_f_basis
from assocop.order import weak_leq

SIGMA5, TAU5 = (5, 8, 2, 4, 6, 1, 7, 3), (2, 4, 3, 1)


def small_triples(max_total):
    for N in range(1, max_total + 1):
        for n in range(1, N + 1):
            m = N + 1 - n
            for sigma, tau in itertools.product(cb.permutations(n), cb.permutations(m)):
                for i in range(1, n + 1):
                    yield sigma, tau, i


def test_insert_b_examples():
    assert op.insert_b((2, 3, 1, 4), (2, 3, 1), 2) == (2, 4, 5, 3, 1, 6)
    assert op.insert_b(SIGMA5, TAU5, 5) == (5, 11, 2, 4, 7, 9, 8, 6, 1, 10, 3)
    assert op.insert_b((3, 1, 2), (1,), 2) == (3, 1, 2)
    with pytest.raises(op.CompositionError):
        op.insert_b((1, 2), (1,), 3)


def test_insert_b_is_matrix_insertion():
    for sigma, tau, i in small_triples(6):
        assert op.insert_b(sigma, tau, i) == o.insert_matrix(sigma, tau, i)


def test_top_t_examples():
    assert op.top_t((1, 2, 3), (2, 1), 2) == (3, 4, 1, 2)
    assert op.top_t((3, 1, 2), (1,), 2) == (3, 1, 2)
    # the weak-order maximum of the fiber over (SIGMA5, TAU5)
    top = op.top_t(SIGMA5, TAU5, 5)
    assert top == (9, 11, 2, 8, 6, 10, 7, 4, 1, 5, 3)
    assert op.project_p(top, 8, 4, 5) == (SIGMA5, TAU5)
    assert weak_leq(op.insert_b(SIGMA5, TAU5, 5), top)


def test_insertion_profile():
    p = op.insertion_profile(SIGMA5, TAU5, 5)
    assert (p.sigma_i, p.eta_i, p.k_sigma, p.l_sigma) == (6, 9, 2, 1)
    assert (p.A1b, p.A1t, p.A3b, p.A3t) == ({2}, {11}, {1, 3}, set())
    for sigma, tau, i in small_triples(6):
        assert op.insertion_profile(sigma, tau, i).check()


# weak-order bottom, top and size of P_i fibers, frozen from the brute-force oracle
FROZEN_FIBERS = [
    ((1, 2), (2, 1), 2, (1, 3, 2), (2, 3, 1), 2),
    ((2, 1), (2, 1), 1, (3, 2, 1), (3, 2, 1), 1),
    ((1, 3, 2), (2, 1), 2, (1, 4, 3, 2), (1, 4, 3, 2), 1),
    ((2, 3, 1), (1, 2), 3, (3, 4, 1, 2), (3, 4, 1, 2), 1),
    ((1, 2), (2, 3, 1), 2, (1, 3, 4, 2), (3, 2, 4, 1), 3),
    ((3, 1, 2), (1, 3, 2), 2, (5, 1, 3, 2, 4), (5, 1, 4, 3, 2), 3),
    ((2, 1, 3), (2, 1), 2, (3, 2, 1, 4), (3, 2, 1, 4), 1),
    ((2, 1), (3, 1, 2), 1, (4, 2, 3, 1), (4, 2, 3, 1), 1),
    ((1, 2, 3), (2, 1), 2, (1, 3, 2, 4), (3, 4, 1, 2), 5),
]


@pytest.mark.parametrize("sigma,tau,i,bottom,top,size", FROZEN_FIBERS)
def test_frozen_fibers(sigma, tau, i, bottom, top, size):
    assert op.insert_b(sigma, tau, i) == bottom
    assert op.top_t(sigma, tau, i) == top
    n, m = len(sigma), len(tau)
    members = [r for r in cb.permutations(n + m - 1) if op.project_p(r, n, m, i) == (sigma, tau)]
    assert len(members) == size


def test_fibers_match_bruteforce_support():
    for sigma, tau, i in small_triples(4):
        bottom, top, supp = o.fiber_top_bottom(sigma, tau, i)
        assert op.insert_b(sigma, tau, i) == bottom
        assert op.top_t(sigma, tau, i) == top
        assert sorted(op.weak_interval(bottom, top)) == supp


def test_five_term_composition():
    got = op.compose_as_m(M((1, 2, 3)), M((2, 1)), 2)
    want = LinearCombo("S", "M", [((1, 3, 2, 4), 1), ((1, 4, 2, 3), 1), ((2, 3, 1, 4), 1),
                                  ((2, 4, 1, 3), 1), ((3, 4, 1, 2), 1)])
    assert got == want
    assert op.compose_as_m(M((1, 2)), M((2, 1)), 2) == M((1, 3, 2)) + M((2, 3, 1))


def test_project_p():
    for rho in [(1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)]:
        assert op.project_p(rho, 3, 2, 2) == ((1, 2, 3), (2, 1))
    assert op.project_p((2, 1, 3), 3, 1, 2) == ((2, 1, 3), (1,))


def test_b_closure():
    assert op.b_closure((3, 4, 1, 2), 3, 2, 2) == (1, 3, 2, 4)
    assert op.b_closure((1, 3, 2, 4), 3, 2, 2) == (1, 3, 2, 4)
    for N in range(2, 6):
        for n in range(1, N + 1):
            m = N + 1 - n
            for rho in cb.permutations(N):
                for i in range(1, n + 1):
                    b = op.b_closure(rho, n, m, i)
                    assert op.b_closure(b, n, m, i) == b
                    assert weak_leq(b, rho)


def test_inversion_oracles():
    for sigma, tau, i in small_triples(5):
        n, m = len(sigma), len(tau)
        bottom, top = op.insert_b(sigma, tau, i), op.top_t(sigma, tau, i)
        assert op.oracle_k(sigma, tau, i) == cb.inversion_set(top) - cb.inversion_set(bottom)
        assert op.oracle_j(bottom, n, m, i) == frozenset()
    for N in range(2, 6):
        for n in range(1, N + 1):
            m = N + 1 - n
            for rho in cb.permutations(N):
                for i in range(1, n + 1):
                    b = op.b_closure(rho, n, m, i)
                    assert op.oracle_j(rho, n, m, i) == cb.inversion_set(rho) - cb.inversion_set(b)


def test_top_is_not_order_preserving():
    S3, S2 = cb.permutations(3), cb.permutations(2)
    found = False
    for (s1, t1), (s2, t2) in itertools.product(itertools.product(S3, S2), repeat=2):
        if weak_leq(s1, s2) and weak_leq(t1, t2):
            for i in range(1, 4):
                if not weak_leq(op.top_t(s1, t1, i), op.top_t(s2, t2, i)):
                    found = True
    assert found


@pytest.mark.parametrize("N", range(2, 5))
def test_compose_as_m_matches_bruteforce(N):
    for n in range(1, N + 1):
        m = N + 1 - n
        for sigma, tau in itertools.product(o.perms(n), o.perms(m)):
            for i in range(1, n + 1):
                got = op.compose_as_m(M(sigma), M(tau), i)
                assert dict(got.items()) == o.compose_m_bruteforce(sigma, tau, i)


def test_compose_f_examples_and_units():
    assert op.compose_as_f(F((2, 3, 1, 4)), F((2, 3, 1)), 2) == F((2, 4, 5, 3, 1, 6))
    for s in cb.permutations(3):
        for i in range(1, 4):
            assert op.compose_as_f(F(s), F((1,)), i) == F(s)
            assert op.compose_as_m(M(s), M((1,)), i) == M(s)
        assert op.compose_as_f(F((1,)), F(s), 1) == F(s)
    assert op.unit("S") == F((1,))


def test_compose_dispatches_across_bases():
    x, y = M((1, 2)), F((2, 1))
    assert to_f_basis(op.compose(x, y, 1)) == op.compose_as_f(to_f_basis(x), y, 1)


def test_right_action():
    assert op.right_action(F((1, 2, 3)), (1, 2, 3)) == F((1, 2, 3))
    assert op.right_action(F((1, 2, 3)), (2, 3, 1)) == F((2, 3, 1))
    x = F((2, 1, 3)) - F((3, 1, 2))
    for a, b in itertools.product(cb.permutations(3), repeat=2):
        lhs = op.right_action(op.right_action(x, a), b)
        assert lhs == op.right_action(x, cb.group_product(a, b))


def test_axiom_checkers_pass_at_small_degree():
    for family in ("S", "Q", "Y"):
        rep = op.check_operad_axioms(family, 4)
        assert rep.ok, rep.failures
        assert rep.checked > 0
    rep = op.check_equivariance(((2, 2),))
    assert rep.ok and rep.checked == 2 * 2 * 2 * 2 * 2
    assert str(rep).startswith("PASS")
