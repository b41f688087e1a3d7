"""
Coalgebra structure on the permutation family: the deconcatenation coproduct
(without counit), its iterates and the coradical filtration, the shifted
shuffle product, and the Hopf kernel of the descent map.
"""
from __future__ import annotations

import itertools

from . import combinatorics as cb
from .algebra import LinearCombo, rank, to_f_basis, to_m_basis
from .operads import (Report, compose_as_f, des_morphism, fibers, insertion_profile,
                      _check_slot)


class TensorCombo:
    """Integer combination of tensors of basis labels, keyed by label tuples."""

    __slots__ = ("basis", "_terms")

    def __init__(self, terms=(), basis: str = "F"):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            acc[key] = acc.get(key, 0) + c
        self.basis = basis
        self._terms = {k: c for k, c in acc.items() if c}

    def items(self):
        return self._terms.items()

    def __eq__(self, other):
        if not isinstance(other, TensorCombo):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __add__(self, other: TensorCombo) -> TensorCombo:
        return TensorCombo(list(self.items()) + list(other.items()), self.basis)

    def __sub__(self, other: TensorCombo) -> TensorCombo:
        return TensorCombo(list(self.items()) + [(k, -c) for k, c in other.items()], self.basis)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for key, c in sorted(self._terms.items()):
            t = " (x) ".join(f"{self.basis}_" + "".join(map(str, s)) for s in key)
            parts.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(parts)


def tensor(*factors: LinearCombo) -> TensorCombo:
    """Tensor product of F-basis combinations."""
    out: dict = {}
    fs = [to_f_basis(f) for f in factors]
    for combo in itertools.product(*(f.items() for f in fs)):
        key = tuple(s for s, _ in combo)
        c = 1
        for _, ci in combo:
            c *= ci
        out[key] = out.get(key, 0) + c
    return TensorCombo(out)


def _split(sigma):
    for p in range(1, len(sigma)):
        yield cb.standardize(sigma[:p]), cb.standardize(sigma[p:])


def coproduct(x: LinearCombo) -> TensorCombo:
    """
    Deconcatenation ``F_s -> sum_p F_{st(s_1..s_p)} (x) F_{st(s_p+1..s_n)}``.

    >>> coproduct(LinearCombo.single("S", "F", (2, 1)))
    F_1 (x) F_1
    """
    out: dict = {}
    for sigma, c in to_f_basis(x).items():
        for a, b in _split(sigma):
            out[(a, b)] = out.get((a, b), 0) + c
    return TensorCombo(out)


def _coproduct_first(t: TensorCombo) -> TensorCombo:
    # (Delta (x) id^k) on each term
    out: dict = {}
    for key, c in t.items():
        for a, b in _split(key[0]):
            k = (a, b) + key[1:]
            out[k] = out.get(k, 0) + c
    return TensorCombo(out)


def _coproduct_last(t: TensorCombo) -> TensorCombo:
    out: dict = {}
    for key, c in t.items():
        for a, b in _split(key[-1]):
            k = key[:-1] + (a, b)
            out[k] = out.get(k, 0) + c
    return TensorCombo(out)


def iterated_coproduct(x: LinearCombo, k: int) -> TensorCombo:
    if k < 1:
        raise ValueError("k must be at least 1")
    t = coproduct(x)
    for _ in range(k - 1):
        if not t:
            break
        t = _coproduct_first(t)
    return t


def filtration_degree(x: LinearCombo) -> int:
    """Least k with ``Delta^(k)(x) = 0`` (0 for x = 0)."""
    if not x:
        return 0
    t = coproduct(x)
    k = 1
    while t:
        t = _coproduct_first(t)
        k += 1
    return k


def filtration_degree_from_m(x: LinearCombo) -> int:
    """The same number read off the M-support: 1 + max number of global descents."""
    xm = to_m_basis(x)
    if not xm:
        return 0
    return 1 + max(len(cb.global_descents(s)) for s in xm.support())


def check_coassociativity(max_degree: int) -> Report:
    rep = Report(f"coassociativity up to degree {max_degree}")
    for n in range(1, max_degree + 1):
        for sigma in cb.permutations(n):
            d = coproduct(LinearCombo.single("S", "F", sigma))
            rep.record(_coproduct_first(d) == _coproduct_last(d), sigma)
    return rep


# -- the coproduct of a composition ------------------------------------------

def _F(sigma) -> LinearCombo:
    return LinearCombo.single("S", "F", sigma)


def coproduct_of_composition_rhs(sigma, tau, i: int) -> TensorCombo:
    """The three-sum expansion of ``Delta(F_sigma o_i F_tau)`` in terms of the factors."""
    n, m = len(sigma), len(tau)
    _check_slot(n, i)
    halves = lambda s, j: (cb.standardize(s[:j]), cb.standardize(s[j:]))  # noqa: E731
    total = TensorCombo()
    for j in range(1, i):
        a, b = halves(sigma, j)
        total = total + tensor(_F(a), compose_as_f(_F(b), _F(tau), i - j))
    for k in range(1, m):
        t1, t2 = halves(tau, k)
        s1 = cb.standardize(sigma[:i])
        s2 = cb.standardize(sigma[i - 1:])
        total = total + tensor(compose_as_f(_F(s1), _F(t1), i), compose_as_f(_F(s2), _F(t2), 1))
    for j in range(i, n):
        a, b = halves(sigma, j)
        total = total + tensor(compose_as_f(_F(a), _F(tau), i), _F(b))
    return total


def verify_coproduct_composition(sigma, tau, i: int) -> bool:
    lhs = coproduct(compose_as_f(_F(sigma), _F(tau), i))
    return lhs == coproduct_of_composition_rhs(sigma, tau, i)


# -- global descents of the fiber tops ---------------------------------------

def predicted_gdes_of_t(sigma, tau, i: int) -> cb.SubsetLabel:
    """Global descents of ``T_i(sigma, tau)`` predicted from sigma, tau and the A-sets."""
    n, m = len(sigma), len(tau)
    _check_slot(n, i)
    gs = cb.global_descents(sigma)
    out = {g for g in gs if g < i} | {g + m - 1 for g in gs if g >= i}
    if m > 1:
        p = insertion_profile(sigma, tau, i)
        if not p.A1b and not p.A3t:
            out |= {g + i - 1 for g in cb.global_descents(tau)}
    return cb.SubsetLabel(n + m - 1, tuple(sorted(out)))


def check_coradical(max_total: int) -> Report:
    """GDes bound on every fiber member, and the predicted GDes of every top."""
    rep = Report(f"coradical filtration up to degree {max_total}")
    for n, m, i in cb.iter_pairs(max_total):
        for fb in fibers(n, m, i):
            bound = len(cb.global_descents(fb.sigma)) + len(cb.global_descents(fb.tau))
            for rho in fb.members:
                rep.record(len(cb.global_descents(rho)) <= bound, ("bound", rho, n, m, i))
            rep.record(predicted_gdes_of_t(fb.sigma, fb.tau, i) == cb.global_descents(fb.top),
                       ("top", fb.sigma, fb.tau, i))
    return rep


def kernel_basis_matches(n: int, k: int) -> bool:
    """
    ``ker Delta^(k)`` on degree n equals the span of M_s with at most k-1 global
    descents: those lie in the kernel, and the kernel has exactly that dimension.
    """
    perms = cb.permutations(n)
    claimed = [s for s in perms if len(cb.global_descents(s)) <= k - 1]
    for s in claimed:
        if iterated_coproduct(LinearCombo.single("S", "M", s), k):
            return False
    images = []
    for s in perms:
        t = iterated_coproduct(_F(s), k)
        images.append(dict(t.items()))
    return len(perms) - rank(images) == len(claimed)


# -- shifted shuffle product and commutator -----------------------------------

def mr_product(x: LinearCombo, y: LinearCombo) -> LinearCombo:
    """
    Shifted shuffle product: ``F_s . F_t = sum_z F_{(s/t).z^-1}`` over (n, m)-shuffles z.

    This interleaves the positions of s and the shifted t, which is the form
    compatible with deconcatenation (see ``check_hopf_compatibility``).

    >>> mr_product(LinearCombo.single("S", "F", (1,)), LinearCombo.single("S", "F", (1,)))
    F_(1,2) + F_(2,1)
    """
    out: dict = {}
    for s, cs in to_f_basis(x).items():
        for t, ct in to_f_basis(y).items():
            st = cb.over(s, t)
            for z in cb.shuffles(len(s), len(t)):
                r = cb.group_product(st, cb.inverse(z))
                out[r] = out.get(r, 0) + cs * ct
    return LinearCombo("S", "F", out)


def commutator(x: LinearCombo, y: LinearCombo) -> LinearCombo:
    return mr_product(x, y) - mr_product(y, x)


def _with_units(x: LinearCombo) -> TensorCombo:
    # counital coproduct, the empty tuple standing for the unit
    t = coproduct(x)
    extra = []
    for s, c in to_f_basis(x).items():
        extra += [(((), s), c), ((s, ()), c)]
    return t + TensorCombo(extra)


def _product_with_unit(a, b, product) -> LinearCombo:
    if a == ():
        return _F(b) if b != () else None
    if b == ():
        return _F(a)
    return product(_F(a), _F(b))


def check_hopf_compatibility(max_total: int, product=None) -> Report:
    """
    ``Delta(xy) = Delta(x) Delta(y)`` on basis pairs, using the counital
    coproduct for the multiplication and comparing the non-counital parts.
    """
    product = product or mr_product
    rep = Report(f"product/coproduct compatibility up to degree {max_total}")
    for n in range(1, max_total):
        for m in range(1, max_total - n + 1):
            for s, t in itertools.product(cb.permutations(n), cb.permutations(m)):
                lhs = coproduct(product(_F(s), _F(t)))
                out: dict = {}
                for (a1, a2), ca in _with_units(_F(s)).items():
                    for (b1, b2), cb_ in _with_units(_F(t)).items():
                        left = _product_with_unit(a1, b1, product)
                        right = _product_with_unit(a2, b2, product)
                        if left is None or right is None:
                            continue  # lands in degree 0 on one side
                        for key, c in tensor(left, right).items():
                            out[key] = out.get(key, 0) + ca * cb_ * c
                rep.record(lhs == TensorCombo(out), (s, t))
    return rep


# -- Hopf kernel of the descent map --------------------------------------------

def hopf_kernel_member(x: LinearCombo) -> bool:
    """True iff the M-expansion of x avoids eventual identities."""
    return not any(cb.is_eventual_identity(s) for s in to_m_basis(x).support())


def hopf_kernel_basis(n: int) -> list:
    return [s for s in cb.permutations(n) if not cb.is_eventual_identity(s)]


def _kernel_image(x: LinearCombo) -> dict:
    """Coordinates of ``(D(x), (id (x) D) Delta(x))`` as one sparse vector."""
    vec: dict = {}
    for q, c in des_morphism(to_f_basis(x)).items():
        vec[("D", q)] = vec.get(("D", q), 0) + c
    for s, c in to_f_basis(x).items():
        for a, b in _split(s):
            key = ("DD", a, cb.descents(b))
            vec[key] = vec.get(key, 0) + c
    return {k: c for k, c in vec.items() if c}


def in_hopf_kernel_direct(x: LinearCombo) -> bool:
    """Membership computed straight from the definition."""
    return not _kernel_image(x)


def hopf_kernel_dimension_direct(n: int) -> int:
    perms = cb.permutations(n)
    images = [_kernel_image(_F(s)) for s in perms]
    return len(perms) - rank(images, key=repr)


def check_hopf_kernel_closure(max_total: int) -> Report:
    """If rho is an eventual identity then so is a coordinate of ``P_i(rho)``."""
    rep = Report(f"Hopf kernel closure up to degree {max_total}")
    for n, m, i in cb.iter_pairs(max_total):
        for fb in fibers(n, m, i):
            pred = cb.is_eventual_identity(fb.sigma) or cb.is_eventual_identity(fb.tau)
            for rho in fb.members:
                if cb.is_eventual_identity(rho):
                    rep.record(pred, (rho, n, m, i))
                else:
                    rep.record(True, None)
    return rep
