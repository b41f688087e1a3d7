"""
Partial compositions of the non-symmetric associative operad and its
quotients by descents (subsets) and by planar binary trees.

Index-level maps (``insert_b``, ``top_t``, ``project_p``, ``insert_subset``,
``insert_tree`` ...) work on single permutations, subsets or trees; the
``compose_*`` functions extend them bilinearly to :class:`LinearCombo`.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from . import combinatorics as cb
from .algebra import LinearCombo, to_f_basis, to_m_basis
from .order import poset, weak_leq


class CompositionError(ValueError):
    pass


def _check_slot(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise CompositionError(f"slot {i} out of range [1, {n}]")


def _check_degree(rho, n: int, m: int) -> None:
    if len(rho) != n + m - 1:
        raise CompositionError(f"expected degree {n + m - 1}, got {len(rho)}")


# -- the three maps B_i, T_i, P_i on permutations ---------------------------

@functools.lru_cache(maxsize=None)
def insert_b(sigma, tau, i: int):
    """
    Insert the matrix of tau at entry (sigma_i, i) of the matrix of sigma.

    >>> insert_b((2, 3, 1, 4), (2, 3, 1), 2)
    (2, 4, 5, 3, 1, 6)
    """
    n, m = len(sigma), len(tau)
    _check_slot(n, i)
    si = sigma[i - 1]
    a = [s if s < si else s + m - 1 for s in sigma]
    b = [t + si - 1 for t in tau]
    return tuple(a[:i - 1] + b + a[i:])


def blocks(rho, m: int, i: int):
    """The three position blocks: before the slot, the slot, after it."""
    return rho[:i - 1], rho[i - 1:i - 1 + m], rho[i - 1 + m:]


@dataclass(frozen=True)
class InsertionProfile:
    """How the values of B_i(sigma, tau) split around the inserted block."""

    n: int
    m: int
    i: int
    sigma_i: int
    eta_i: int
    k_sigma: int
    l_sigma: int
    A1b: frozenset
    A1t: frozenset
    A3b: frozenset
    A3t: frozenset
    L1: tuple
    L2: tuple
    L3: tuple

    def check(self) -> bool:
        s, e, k, l = self.sigma_i, self.eta_i, self.k_sigma, self.l_sigma
        ok = set(self.L1) == self.A1b | set(range(s - k, s)) | self.A1t
        ok &= set(self.L2) == set(range(s, e + 1))
        ok &= set(self.L3) == self.A3b | set(range(e + 1, e + l + 1)) | self.A3t
        ok &= all(a < s - k for a in self.A1b | self.A3b)
        ok &= all(a > e + l for a in self.A1t | self.A3t)
        return ok


def insertion_profile(sigma, tau, i: int) -> InsertionProfile:
    n, m = len(sigma), len(tau)
    _check_slot(n, i)
    L1, L2, L3 = blocks(insert_b(sigma, tau, i), m, i)
    s1, s3 = set(L1), set(L3)
    si = sigma[i - 1]
    eta = si + m - 1
    k = 0
    while si - k - 1 in s1:
        k += 1
    l = 0
    while eta + l + 1 in s3:
        l += 1
    return InsertionProfile(
        n=n, m=m, i=i, sigma_i=si, eta_i=eta, k_sigma=k, l_sigma=l,
        A1b=frozenset(a for a in s1 if a < si - k),
        A1t=frozenset(a for a in s1 if a > si),
        A3b=frozenset(a for a in s3 if a < eta),
        A3t=frozenset(a for a in s3 if a > eta + l),
        L1=L1, L2=L2, L3=L3,
    )


@functools.lru_cache(maxsize=None)
def top_t(sigma, tau, i: int):
    """
    Top element of the fiber of P_i over (sigma, tau).

    >>> top_t((5, 8, 2, 4, 6, 1, 7, 3), (2, 4, 3, 1), 5)
    (9, 11, 2, 8, 6, 10, 7, 4, 1, 5, 3)
    """
    _check_slot(len(sigma), i)
    if len(tau) == 1:
        return tuple(sigma)
    p = insertion_profile(sigma, tau, i)
    s, e, k, l = p.sigma_i, p.eta_i, p.k_sigma, p.l_sigma
    first = p.A1b | set(range(e + l - k, e + l)) | p.A1t
    middle = {s - k} | set(range(s - k + l + 1, e + l - k)) | {e + l}
    last = p.A3b | set(range(s - k + 1, s - k + l + 1)) | p.A3t
    return (cb.realize(cb.standardize(p.L1), first)
            + cb.realize(cb.standardize(p.L2), middle)
            + cb.realize(cb.standardize(p.L3), last))


@dataclass(frozen=True)
class FiberProfile:
    """Where the values of rho sit relative to the slot block [u, v]."""

    u_rho: int
    v_rho: int
    C1b: frozenset
    C1m: frozenset
    C1t: frozenset
    C3b: frozenset
    C3m: frozenset
    C3t: frozenset
    n1m: int = field(init=False)
    n3m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n1m", len(self.C1m))
        object.__setattr__(self, "n3m", len(self.C3m))

    def check(self, m: int) -> bool:
        u, v = self.u_rho, self.v_rho
        ok = all(c < u for c in self.C1b | self.C3b)
        ok &= all(u < c < v for c in self.C1m | self.C3m)
        ok &= all(c > v for c in self.C1t | self.C3t)
        return ok and v - u + 1 == m + self.n1m + self.n3m


def fiber_profile(rho, n: int, m: int, i: int) -> FiberProfile:
    _check_degree(rho, n, m)
    _check_slot(n, i)
    L1, L2, L3 = blocks(rho, m, i)
    u, v = min(L2), max(L2)

    def split(vals):
        return (frozenset(c for c in vals if c < u),
                frozenset(c for c in vals if u < c < v),
                frozenset(c for c in vals if c > v))

    return FiberProfile(u, v, *split(L1), *split(L3))


@functools.lru_cache(maxsize=None)
def b_closure(rho, n: int, m: int, i: int):
    """The bottom B_i(P_i(rho)) of the fiber containing rho."""
    _check_degree(rho, n, m)
    _check_slot(n, i)
    if m == 1:
        return tuple(rho)
    L1, L2, L3 = blocks(rho, m, i)
    f = fiber_profile(rho, n, m, i)
    u, v, n1, n3 = f.u_rho, f.v_rho, f.n1m, f.n3m
    first = f.C1b | set(range(u, u + n1)) | f.C1t
    middle = range(u + n1, v - n3 + 1)
    last = f.C3b | set(range(v - n3 + 1, v + 1)) | f.C3t
    return (cb.realize(cb.standardize(L1), first)
            + cb.realize(cb.standardize(L2), middle)
            + cb.realize(cb.standardize(L3), last))


@functools.lru_cache(maxsize=None)
def project_p(rho, n: int, m: int, i: int):
    """P_i: S_{n+m-1} -> S_n x S_m, whose fibers are weak-order intervals."""
    _check_degree(rho, n, m)
    _check_slot(n, i)
    if m == 1:
        return tuple(rho), (1,)
    f = fiber_profile(rho, n, m, i)
    L1, _, L3 = blocks(b_closure(rho, n, m, i), m, i)
    sigma = cb.standardize(L1 + (f.u_rho + f.n1m,) + L3)
    tau = cb.standardize(blocks(rho, m, i)[1])
    return sigma, tau


def _position_blocks(n: int, m: int, i: int):
    return (range(1, i), range(i, i + m), range(i + m, n + m))


def oracle_j(rho, n: int, m: int, i: int) -> frozenset:
    """Inversions of rho that B_i o P_i removes (empty when m == 1)."""
    _check_degree(rho, n, m)
    _check_slot(n, i)
    if m == 1:
        return frozenset()
    I1, I2, I3 = _position_blocks(n, m, i)
    L2 = [rho[p - 1] for p in I2]
    u, v = min(L2), max(L2)
    I1r = [p for p in I1 if u < rho[p - 1] < v]
    I3r = [p for p in I3 if u < rho[p - 1] < v]
    inv = cb.inversion_set(rho)
    cand = set(itertools.product(I1r, I2)) | set(itertools.product(I2, I3r)) \
        | set(itertools.product(I1r, I3r))
    return frozenset(inv & cand)


def oracle_k(sigma, tau, i: int) -> frozenset:
    """Pairs that T_i adds on top of the inversions of B_i (empty when m == 1)."""
    n, m = len(sigma), len(tau)
    _check_slot(n, i)
    if m == 1:
        return frozenset()
    p = insertion_profile(sigma, tau, i)
    beta = insert_b(sigma, tau, i)
    I1, I2, I3 = _position_blocks(n, m, i)
    s, e, k, l = p.sigma_i, p.eta_i, p.k_sigma, p.l_sigma
    I1s = [a for a in I1 if s - k <= beta[a - 1] <= s - 1]
    I3s = [b for b in I3 if e + 1 <= beta[b - 1] <= e + l]
    out = {(a, b) for a in I1s for b in I2 if beta[b - 1] < e}
    out |= {(a, b) for a in I2 for b in I3s if s < beta[a - 1]}
    out |= set(itertools.product(I1s, I3s))
    return frozenset(out)


@dataclass(frozen=True)
class Fiber:
    sigma: tuple
    tau: tuple
    bottom: tuple
    top: tuple
    members: tuple


def fibers(n: int, m: int, i: int) -> list[Fiber]:
    """The fibers of P_i over S_n x S_m, in lexicographic order of (sigma, tau)."""
    _check_slot(n, i)
    groups: dict = {}
    for rho in poset("S", n + m - 1).elements:
        groups.setdefault(project_p(rho, n, m, i), []).append(rho)
    out = []
    for (sigma, tau), members in sorted(groups.items()):
        out.append(Fiber(sigma, tau, insert_b(sigma, tau, i), top_t(sigma, tau, i),
                         tuple(sorted(members))))
    return out


# -- compositions on the permutation family ---------------------------------

def _homogeneous_degree(x: LinearCombo) -> int:
    d = x.degree
    if d is None:
        raise CompositionError("cannot read the arity of the zero element")
    return d


def _require(x: LinearCombo, family: str, basis: str | None = None) -> None:
    if x.family != family or (basis is not None and x.basis != basis):
        want = f"{family}/{basis}" if basis else family
        raise CompositionError(f"expected a {want} combination, got {x.family}/{x.basis}")


def _bilinear(x: LinearCombo, y: LinearCombo, i: int, basis: str, term) -> LinearCombo:
    family = x.family
    if not x or not y:
        return LinearCombo(family, basis)
    n = _homogeneous_degree(x)
    _homogeneous_degree(y)
    _check_slot(n, i)
    out: dict = {}
    for a, ca in x.items():
        for b, cb_ in y.items():
            for r, c in term(a, b):
                out[r] = out.get(r, 0) + ca * cb_ * c
    return LinearCombo(family, basis, out)


def compose_as_f(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    """``F_sigma o_i F_tau = F_{B_i(sigma, tau)}``."""
    _require(x, "S", "F")
    _require(y, "S", "F")
    return _bilinear(x, y, i, "F", lambda a, b: ((insert_b(a, b, i), 1),))


def weak_interval(bottom, top) -> list:
    return poset("S", len(bottom)).interval(bottom, top)


def compose_as_m(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    """``M_sigma o_i M_tau`` = sum of M_rho over the weak interval [B_i, T_i]."""
    _require(x, "S", "M")
    _require(y, "S", "M")
    return _bilinear(x, y, i, "M", lambda a, b: (
        (r, 1) for r in weak_interval(insert_b(a, b, i), top_t(a, b, i))))


def right_action(x: LinearCombo, tau) -> LinearCombo:
    """``F_sigma . tau = F_{sigma.tau}``, result in the basis of x."""
    _require(x, "S")
    xf = to_f_basis(x)
    out = LinearCombo("S", "F", {cb.group_product(s, tau): c for s, c in xf.items()})
    return to_m_basis(out) if x.basis == "M" else out


# -- quotient by descents ---------------------------------------------------

def insert_subset(s: cb.SubsetLabel, t: cb.SubsetLabel, i: int) -> cb.SubsetLabel:
    """
    >>> insert_subset(cb.SubsetLabel(3, (2,)), cb.SubsetLabel(2, (1,)), 2)
    SubsetLabel(4, {2, 3})
    """
    n, m = s.n, t.n
    _check_slot(n, i)
    members = [a for a in s if a < i] + [b + i - 1 for b in t] + [a + m - 1 for a in s if a >= i]
    return cb.SubsetLabel(n + m - 1, tuple(members))


def compose_q_f(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    _require(x, "Q", "F")
    _require(y, "Q", "F")
    return _bilinear(x, y, i, "F", lambda a, b: ((insert_subset(a, b, i), 1),))


def compose_q_m(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    """Same single-term rule as the F basis."""
    _require(x, "Q", "M")
    _require(y, "Q", "M")
    return _bilinear(x, y, i, "M", lambda a, b: ((insert_subset(a, b, i), 1),))


def compose_composition(alpha, beta, i: int) -> tuple[int, ...]:
    """
    Partial composition of compositions, through partial sums.

    >>> compose_composition((2, 1), (3,), 1)
    (4, 1)
    """
    alpha, beta = tuple(alpha), tuple(beta)
    n, m = sum(alpha), sum(beta)
    _check_slot(n, i)
    partial = (0,) + tuple(itertools.accumulate(alpha))
    ell = next(p for p in range(len(alpha)) if partial[p] < i <= partial[p + 1])
    head, tail = alpha[:ell], alpha[ell + 1:]
    if len(beta) == 1:
        return head + (alpha[ell] + m - 1,) + tail
    first = beta[0] + i - 1 - partial[ell]
    last = beta[-1] + partial[ell + 1] - i
    return head + (first,) + beta[1:-1] + (last,) + tail


def insert_binary(eps: str, delta: str, i: int) -> str:
    """Splice delta into eps just before position i."""
    _check_slot(len(eps) + 1, i)
    return eps[:i - 1] + delta + eps[i - 1:]


def des_morphism(x: LinearCombo) -> LinearCombo:
    """D: F_sigma -> F_Des(sigma); on M, M_sigma -> M_Des(sigma) if sigma is closed."""
    _require(x, "S")
    out: dict = {}
    for sigma, c in x.items():
        if x.basis == "M" and not cb.is_closed(sigma):
            continue
        d = cb.descents(sigma)
        out[d] = out.get(d, 0) + c
    return LinearCombo("Q", x.basis, out)


# -- quotient by planar binary trees ----------------------------------------

@functools.lru_cache(maxsize=None)
def insert_tree(s, t, i: int):
    """B_i on trees, recursing through the root decomposition of s."""
    n = cb.tree_degree(s)
    if cb.tree_degree(t) < 1:
        raise CompositionError("cannot insert a tree of degree 0")
    _check_slot(n, i)
    s_l, s_r = s
    j = cb.tree_degree(s_l) + 1
    if j < i:
        return (s_l, insert_tree(s_r, t, i - j))
    if j > i:
        return (insert_tree(s_l, t, i), s_r)
    t_l, t_r = t
    return (cb.over_tree(s_l, t_l), cb.under_tree(t_r, s_r))


@functools.lru_cache(maxsize=None)
def gamma_max(t):
    """Weak-order maximum of the fiber of lambda over t (a 132-avoiding permutation)."""
    if t == cb.LEAF:
        return ()
    left, right = t
    q = cb.tree_degree(right)
    n = cb.tree_degree(t)
    return tuple(v + q for v in gamma_max(left)) + (n,) + gamma_max(right)


@functools.lru_cache(maxsize=None)
def _lambda_fiber_max(n: int) -> dict:
    best: dict = {}
    for sigma in poset("S", n).elements:
        t = cb.lambda_tree(sigma)
        cur = best.get(t)
        if cur is None or cb.inversion_mask(sigma).bit_count() > cb.inversion_mask(cur).bit_count():
            best[t] = sigma
    for t, top in best.items():
        if not all(weak_leq(s, top) for s in poset("S", n).elements if cb.lambda_tree(s) == t):
            raise AssertionError(f"lambda fiber over {cb.tree_to_str(t)} has no maximum")
    return best


def gamma_max_scan(t):
    """Same as :func:`gamma_max`, found by scanning S_n."""
    return _lambda_fiber_max(cb.tree_degree(t))[t]


@functools.lru_cache(maxsize=None)
def rho_tree(tau):
    """The Tamari-largest tree r with gamma(r) <= tau."""
    n = len(tau)
    Y = poset("Y", n)
    below = [r for r in Y.elements if weak_leq(gamma_max(r), tau)]
    tops = [r for r in below if all(Y.leq(s, r) for s in below)]
    if len(tops) != 1:
        raise AssertionError(f"no unique maximum below {tau}")
    return tops[0]


def project_tree(r, n: int, m: int, i: int):
    sigma, tau = project_p(gamma_max(r), n, m, i)
    return cb.lambda_tree(sigma), cb.lambda_tree(tau)


def top_tree(s, t, i: int):
    return rho_tree(top_t(gamma_max(s), gamma_max(t), i))


def compose_y_f(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    _require(x, "Y", "F")
    _require(y, "Y", "F")
    return _bilinear(x, y, i, "F", lambda a, b: ((insert_tree(a, b, i), 1),))


def compose_y_m(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    """Sum of M_r over the Tamari interval [B_i(s, t), T_i(s, t)]."""
    _require(x, "Y", "M")
    _require(y, "Y", "M")

    def term(a, b):
        bottom = insert_tree(a, b, i)
        Y = poset("Y", cb.tree_degree(bottom))
        return ((r, 1) for r in Y.interval(bottom, top_tree(a, b, i)))

    return _bilinear(x, y, i, "M", term)


def lambda_morphism(x: LinearCombo) -> LinearCombo:
    """Lambda: F_sigma -> F_lambda(sigma); on M, zero unless sigma avoids 132."""
    _require(x, "S")
    out: dict = {}
    for sigma, c in x.items():
        if x.basis == "M" and not cb.is_132_avoiding(sigma):
            continue
        t = cb.lambda_tree(sigma)
        out[t] = out.get(t, 0) + c
    return LinearCombo("Y", x.basis, out)


def l_morphism(x: LinearCombo) -> LinearCombo:
    """L: F_t -> F_L(t).  M-basis input is routed through F and back."""
    _require(x, "Y")
    xf = to_f_basis(x)
    out: dict = {}
    for t, c in xf.items():
        s = cb.leaf_label_set(t)
        out[s] = out.get(s, 0) + c
    res = LinearCombo("Q", "F", out)
    return to_m_basis(res) if x.basis == "M" else res


# -- dispatch ----------------------------------------------------------------

_COMPOSE = {
    ("S", "F"): compose_as_f, ("S", "M"): compose_as_m,
    ("Q", "F"): compose_q_f, ("Q", "M"): compose_q_m,
    ("Y", "F"): compose_y_f, ("Y", "M"): compose_y_m,
}


def compose(x: LinearCombo, y: LinearCombo, i: int) -> LinearCombo:
    """``x o_i y`` in the family and basis shared by x and y."""
    if x.family != y.family:
        raise CompositionError("operands come from different families")
    if x.basis != y.basis:
        y = to_m_basis(y) if x.basis == "M" else to_f_basis(y)
    return _COMPOSE[x.family, x.basis](x, y, i)


def unit(family: str, basis: str = "F") -> LinearCombo:
    idx = {"S": (1,), "Q": cb.SubsetLabel(1), "Y": cb.Y}[family]
    return LinearCombo.single(family, basis, idx)


def basis_indices(family: str, n: int) -> list:
    return list(poset(family, n).elements)


# -- axiom checkers -----------------------------------------------------------

@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, detail) -> None:
        self.checked += 1
        if not passed and len(self.failures) < 50:
            self.failures.append(detail)

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} instances, {len(self.failures)} failures"


def check_operad_axioms(family: str, max_total_degree: int, basis: str = "F") -> Report:
    """Associativity (both forms) and unit laws on all basis elements."""
    rep = Report(f"operad axioms {family}/{basis} up to degree {max_total_degree}")

    def el(idx):
        return LinearCombo.single(family, basis, idx)

    one = unit(family, basis)
    for n in range(1, max_total_degree + 1):
        for a in basis_indices(family, n):
            x = el(a)
            for i in range(1, n + 1):
                rep.record(compose(x, one, i) == x, ("right unit", a, i))
            rep.record(compose(one, x, 1) == x, ("left unit", a))
    for n, m, l in itertools.product(range(1, max_total_degree + 1), repeat=3):
        if n + m + l - 2 > max_total_degree:
            continue
        for a, b, c in itertools.product(basis_indices(family, n), basis_indices(family, m),
                                         basis_indices(family, l)):
            x, y, z = el(a), el(b), el(c)
            for i in range(1, n + 1):
                xy = compose(x, y, i)
                for j in range(i + 1, n + 1):
                    lhs = compose(xy, z, j + m - 1)
                    rhs = compose(compose(x, z, j), y, i)
                    rep.record(lhs == rhs, ("sequential", a, b, c, i, j))
                for j in range(1, m + 1):
                    lhs = compose(xy, z, i + j - 1)
                    rhs = compose(x, compose(y, z, j), i)
                    rep.record(lhs == rhs, ("nested", a, b, c, i, j))
    return rep


def check_equivariance(degree_pairs=((2, 2), (3, 2), (2, 3))) -> Report:
    """``(x.sigma) o_i (y.tau) = (x o_{sigma(i)} y) . B_i(sigma, tau)`` on F_alpha, F_beta."""
    rep = Report(f"equivariance for {list(degree_pairs)}")
    for n, m in degree_pairs:
        Sn, Sm = cb.permutations(n), cb.permutations(m)
        for alpha, beta, sigma, tau in itertools.product(Sn, Sm, Sn, Sm):
            x = LinearCombo.single("S", "F", alpha)
            y = LinearCombo.single("S", "F", beta)
            for i in range(1, n + 1):
                lhs = compose_as_f(right_action(x, sigma), right_action(y, tau), i)
                rhs = right_action(compose_as_f(x, y, sigma[i - 1]), insert_b(sigma, tau, i))
                rep.record(lhs == rhs, (alpha, beta, sigma, tau, i))
    return rep

