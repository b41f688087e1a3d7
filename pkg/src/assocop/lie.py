"""
Twisted Lie structure on the permutation family and Dynkin's element.

``{F_s, F_t} = F_{s/t} - F_{s\\t}``; on the M basis the bracket is a sum over
all (n, m)-shuffles except the longest one.
"""
from __future__ import annotations

import itertools
import math

from . import combinatorics as cb
from .algebra import EchelonBasis, LinearCombo, convolve, sort_key, to_f_basis, to_m_basis
from .config import LIMITS
from .operads import Report, compose_as_f, right_action


def _F(sigma) -> LinearCombo:
    return LinearCombo.single("S", "F", sigma)


def _M(sigma) -> LinearCombo:
    return LinearCombo.single("S", "M", sigma)


M12 = LinearCombo("S", "F", {(1, 2): 1, (2, 1): -1})


def bracket_f(x: LinearCombo, y: LinearCombo) -> LinearCombo:
    """
    >>> bracket_f(_F((1,)), _F((1,)))
    F_(1,2) - F_(2,1)
    """
    out: dict = {}
    for s, cs in to_f_basis(x).items():
        for t, ct in to_f_basis(y).items():
            a, b = cb.over(s, t), cb.under(s, t)
            out[a] = out.get(a, 0) + cs * ct
            out[b] = out.get(b, 0) - cs * ct
    return LinearCombo("S", "F", out)


def bracket_via_operad(x: LinearCombo, y: LinearCombo) -> LinearCombo:
    """``(M_12 o_2 y) o_1 x``, computed in the F basis."""
    x, y = to_f_basis(x), to_f_basis(y)
    if not x or not y:
        return LinearCombo("S", "F")
    return compose_as_f(compose_as_f(M12, y, 2), x, 1)


def bracket_m(x: LinearCombo, y: LinearCombo) -> LinearCombo:
    """
    ``{M_s, M_t}`` as the sum of ``M_{z.(s/t)}`` over shuffles z other than Z_{n,m}.

    >>> bracket_m(_M((1,)), _M((1,)))
    M_(1,2)
    """
    out: dict = {}
    for s, cs in to_m_basis(x).items():
        for t, ct in to_m_basis(y).items():
            n, m = len(s), len(t)
            z_top = cb.z_max(n, m)
            st = cb.over(s, t)
            for z in cb.shuffles(n, m):
                if z == z_top:
                    continue
                r = cb.group_product(z, st)
                out[r] = out.get(r, 0) + cs * ct
    return LinearCombo("S", "M", out)


def check_bracket_forms(max_total: int) -> Report:
    """Operadic form and M-basis form against the defining bracket."""
    rep = Report(f"bracket forms up to degree {max_total}")
    for n in range(1, max_total):
        for m in range(1, max_total - n + 1):
            for s, t in itertools.product(cb.permutations(n), cb.permutations(m)):
                rep.record(bracket_f(_F(s), _F(t)) == bracket_via_operad(_F(s), _F(t)),
                           ("operadic", s, t))
                rep.record(to_f_basis(bracket_m(_M(s), _M(t))) == bracket_f(_M(s), _M(t)),
                           ("M basis", s, t))
    return rep


def twisted_lie_check(max_degree: int) -> Report:
    """Twisted antisymmetry and Jacobi on all basis pairs and triples."""
    rep = Report(f"twisted Lie identities up to degree {max_degree}")
    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for s, t in itertools.product(cb.permutations(n), cb.permutations(m)):
                x, y = _F(s), _F(t)
                lhs = bracket_f(y, x)
                rhs = -right_action(bracket_f(x, y), cb.z_max(m, n))
                rep.record(lhs == rhs, ("antisymmetry", s, t))
    for n, m, p in itertools.product(range(1, max_degree + 1), repeat=3):
        if n + m + p > max_degree:
            continue
        for s, t, u in itertools.product(cb.permutations(n), cb.permutations(m),
                                         cb.permutations(p)):
            x, y, z = _F(s), _F(t), _F(u)
            total = (bracket_f(x, bracket_f(y, z))
                     + right_action(bracket_f(y, bracket_f(z, x)), cb.z_max(n, m + p))
                     + right_action(bracket_f(z, bracket_f(x, y)), cb.z_max(n + m, p)))
            rep.record(not total, ("jacobi", s, t, u))
    return rep


# -- Dynkin's element ----------------------------------------------------------

def dynkin_nested(n: int) -> LinearCombo:
    """Left-nested bracket ``{...{{F_1, F_1}, F_1}, ..., F_1}`` with n - 1 brackets."""
    if n < 1:
        raise ValueError("n must be positive")
    LIMITS.check(n)
    one = _F((1,))
    theta = one
    for _ in range(n - 1):
        theta = bracket_f(theta, one)
    return theta


def dynkin_m(n: int) -> LinearCombo:
    """
    >>> dynkin_m(3)
    M_(1,2,3) + M_(1,3,2)
    """
    if n < 1:
        raise ValueError("n must be positive")
    LIMITS.check(n)
    return LinearCombo("S", "M", {s: 1 for s in cb.permutations(n) if s[0] == 1})


def nested_commutator_words(n: int) -> dict:
    """Expansion of ``[...[[v1, v2], v3], ..., vn]`` in the free associative algebra."""
    c = {(1,): 1}
    for k in range(2, n + 1):
        nxt: dict = {}
        for w, a in c.items():
            nxt[w + (k,)] = nxt.get(w + (k,), 0) + a
            nxt[(k,) + w] = nxt.get((k,) + w, 0) - a
        c = {w: a for w, a in nxt.items() if a}
    return c


def dynkin_word_check(n: int) -> bool:
    theta = dynkin_nested(n)
    return cb.act_on_word(theta, range(1, n + 1)) == nested_commutator_words(n)


def dynkin_is_quasi_idempotent(n: int) -> bool:
    theta = dynkin_nested(n)
    return convolve(theta, theta) == n * theta


# -- the Lie operad as a generated subspace --------------------------------------

_SPANS: dict[int, EchelonBasis] = {}


def _vec(x: LinearCombo) -> dict:
    return dict(to_f_basis(x).items())


def _span(n: int) -> EchelonBasis:
    if n in _SPANS:
        return _SPANS[n]
    LIMITS.check(n)
    key = lambda s: sort_key("S", s)  # noqa: E731
    basis = EchelonBasis(key)
    if n == 1:
        basis.add({(1,): 1})
    elif n == 2:
        basis.add(_vec(M12))
    else:
        # insertions of lower-degree members into each other
        for p in range(2, n):
            q = n + 1 - p
            lower_p = [LinearCombo("S", "F", r) for r in _span(p).rows.values()]
            lower_q = [LinearCombo("S", "F", r) for r in _span(q).rows.values()]
            for x, y in itertools.product(lower_p, lower_q):
                for i in range(1, p + 1):
                    basis.add(_vec(compose_as_f(x, y, i)))
    # then close under adjacent transpositions acting on the right
    gens = [tuple(list(range(1, k)) + [k + 1, k] + list(range(k + 2, n + 1)))
            for k in range(1, n)]
    frontier = list(basis.rows.values())
    while frontier:
        fresh = []
        for row in frontier:
            for g in gens:
                v = _vec(right_action(LinearCombo("S", "F", row), g))
                if basis.add(v):
                    fresh.append(v)
        frontier = fresh
    _SPANS[n] = basis
    return basis


def lie_span(n: int) -> list[LinearCombo]:
    """Echelonized basis of the degree-n component of the Lie operad (F basis)."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = _span(n).rows
    return [LinearCombo("S", "F", rows[p]) for p in sorted(rows, key=lambda s: sort_key("S", s))]


def in_lie_span(x: LinearCombo) -> bool:
    n = x.degree
    if n is None:
        return True
    return _span(n).contains(_vec(x))


def expected_lie_dimension(n: int) -> int:
    return math.factorial(n - 1)
