"""
Exhaustive verification suites, one per family of identities.

Each suite expands into independent tasks (usually one per ``(n, m, i)``);
tasks run sequentially or on a process pool and their reports are merged in
task order, so the output does not depend on scheduling.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace

from . import combinatorics as cb
from . import hopf, lie
from . import operads as op
from .algebra import LinearCombo, to_f_basis, to_m_basis
from .order import poset, tamari_leq, weak_leq


@dataclass(frozen=True)
class Bounds:
    """Largest degree swept by each family of checks."""

    operad_m: int = 6
    connection: int = 6
    axioms: int = 6
    coradical: int = 6
    kernel_of_iterates: int = 5
    coproduct_composition: int = 5
    descent: int = 7
    subsets: int = 8
    closed: int = 6
    trees: int = 5
    tree_projection: int = 6
    hopf_kernel: int = 6
    bracket: int = 5
    dynkin_forms: int = 7
    dynkin_small: int = 5
    fibers: int = 6

    def capped(self, d: int) -> Bounds:
        return replace(self, **{f.name: min(getattr(self, f.name), d) for f in fields(self)})


def _S(basis, s):
    return LinearCombo.single("S", basis, s)


def _pairs(n, m):
    return itertools.product(cb.permutations(n), cb.permutations(m))


# -- per-instance tasks (module level so they pickle) ----------------------------

def task_operad_m(n, m, i) -> op.Report:
    rep = op.Report(f"M-basis composition ({n},{m},{i})")
    for s, t in _pairs(n, m):
        lhs = to_f_basis(op.compose_as_m(_S("M", s), _S("M", t), i))
        rhs = op.compose_as_f(to_f_basis(_S("M", s)), to_f_basis(_S("M", t)), i)
        rep.record(lhs == rhs, (s, t, i))
    return rep


def _pair_leq(p, q) -> bool:
    return weak_leq(p[0], q[0]) and weak_leq(p[1], q[1])


def task_connection(n, m, i) -> op.Report:
    rep = op.Report(f"B/T/P connection ({n},{m},{i})")
    N = n + m - 1
    PN, Pn, Pm = poset("S", N), poset("S", n), poset("S", m)
    for s, t in _pairs(n, m):
        b, top = op.insert_b(s, t, i), op.top_t(s, t, i)
        rep.record(op.project_p(b, n, m, i) == (s, t), ("P.B", s, t))
        rep.record(op.project_p(top, n, m, i) == (s, t), ("P.T", s, t))
        k = op.oracle_k(s, t, i)
        rep.record(cb.inversion_set(top) == cb.inversion_set(b) | k, ("inversionK", s, t))
    # B order-preserving, on covers of the product order
    for (x, y) in Pn.hasse_covers():
        for t in Pm.elements:
            rep.record(weak_leq(op.insert_b(x, t, i), op.insert_b(y, t, i)), ("B mono", x, y, t))
    for (x, y) in Pm.hasse_covers():
        for s in Pn.elements:
            rep.record(weak_leq(op.insert_b(s, x, i), op.insert_b(s, y, i)), ("B mono", s, x, y))
    proj = {rho: op.project_p(rho, n, m, i) for rho in PN.elements}
    for x, y in PN.hasse_covers():
        rep.record(_pair_leq(proj[x], proj[y]), ("P mono", x, y))
        bx, by = op.insert_b(*proj[x], i), op.insert_b(*proj[y], i)
        rep.record(weak_leq(bx, by), ("bottoms mono", x, y))
    image = {op.insert_b(s, t, i): (s, t) for s, t in _pairs(n, m)}
    for rho in PN.elements:
        s, t = proj[rho]
        rep.record(weak_leq(op.insert_b(s, t, i), rho) and weak_leq(rho, op.top_t(s, t, i)),
                   ("B.P <= id <= T.P", rho))
        if m > 1:
            j = op.oracle_j(rho, n, m, i)
            rep.record(cb.inversion_set(op.b_closure(rho, n, m, i)) == cb.inversion_set(rho) - j,
                       ("inversionJ", rho))
        # adjunction: {(a, b) : B(a, b) <= rho} == {(a, b) <= P(rho)}
        left = {image[y] for y in PN.down_set(rho) if y in image}
        right = set(itertools.product(Pn.down_set(s), Pm.down_set(t)))
        rep.record(left == right, ("adjunction", rho))
    return rep


def task_fibers(n, m, i) -> op.Report:
    rep = op.Report(f"fiber intervals ({n},{m},{i})")
    fbs = op.fibers(n, m, i)
    rep.record(len(fbs) == len(cb.permutations(n)) * len(cb.permutations(m)), ("count", n, m, i))
    seen = 0
    for fb in fbs:
        seen += len(fb.members)
        rep.record(tuple(sorted(op.weak_interval(fb.bottom, fb.top))) == fb.members,
                   ("interval", fb.sigma, fb.tau))
    rep.record(seen == len(poset("S", n + m - 1)), ("partition", n, m, i))
    return rep


def task_coradical(n, m, i) -> op.Report:
    rep = op.Report(f"global descents in fibers ({n},{m},{i})")
    for fb in op.fibers(n, m, i):
        bound = len(cb.global_descents(fb.sigma)) + len(cb.global_descents(fb.tau))
        for rho in fb.members:
            rep.record(len(cb.global_descents(rho)) <= bound, ("bound", rho))
        rep.record(hopf.predicted_gdes_of_t(fb.sigma, fb.tau, i) == cb.global_descents(fb.top),
                   ("predicted", fb.sigma, fb.tau))
    return rep


def task_coproduct_composition(n, m, i) -> op.Report:
    rep = op.Report(f"coproduct of compositions ({n},{m},{i})")
    for s, t in _pairs(n, m):
        rep.record(hopf.verify_coproduct_composition(s, t, i), (s, t, i))
    return rep


def task_kernel_of_iterates(n) -> op.Report:
    rep = op.Report(f"kernel of iterated coproducts, degree {n}")
    for k in range(1, n + 1):
        rep.record(hopf.kernel_basis_matches(n, k), (n, k))
    for s in cb.permutations(n):
        x = _S("M", s)
        rep.record(hopf.filtration_degree(x) == hopf.filtration_degree_from_m(x), s)
    return rep


def task_descent(n, m, i) -> op.Report:
    rep = op.Report(f"descents of insertions ({n},{m},{i})")
    for s, t in _pairs(n, m):
        lhs = cb.descents(op.insert_b(s, t, i))
        rep.record(lhs == op.insert_subset(cb.descents(s), cb.descents(t), i), (s, t, i))
    return rep


def task_subsets(n, m, i) -> op.Report:
    rep = op.Report(f"subset compositions ({n},{m},{i})")
    for a, b in itertools.product(cb.subsets(n), cb.subsets(m)):
        ins = op.insert_subset(a, b, i)
        rep.record(len(ins) == len(a) + len(b), ("grading", a, b))
        Ma, Mb = LinearCombo.single("Q", "M", a), LinearCombo.single("Q", "M", b)
        mm = op.compose_q_m(Ma, Mb, i)
        rep.record(mm == LinearCombo.single("Q", "M", ins), ("single term", a, b))
        rep.record(to_f_basis(mm) == op.compose_q_f(to_f_basis(Ma), to_f_basis(Mb), i),
                   ("basis change", a, b))
        Fa, Fb = LinearCombo.single("Q", "F", a), LinearCombo.single("Q", "F", b)
        rep.record(dict(op.compose_q_f(Fa, Fb, i).items()) == dict(mm.items()),
                   ("F -> M automorphism", a, b))
        alpha, beta = cb.subset_to_composition(a), cb.subset_to_composition(b)
        rep.record(cb.composition_to_subset(op.compose_composition(alpha, beta, i)) == ins,
                   ("compositions", a, b))
        bits = op.insert_binary(cb.subset_to_binary(a), cb.subset_to_binary(b), i)
        rep.record(cb.binary_to_subset(bits) == ins, ("binary strings", a, b))
    return rep


def task_closed(n, m, i) -> op.Report:
    rep = op.Report(f"closed permutations in fibers ({n},{m},{i})")
    for fb in op.fibers(n, m, i):
        closed = [r for r in fb.members if cb.is_closed(r)]
        both = cb.is_closed(fb.sigma) and cb.is_closed(fb.tau)
        rep.record(len(closed) == (1 if both else 0), (fb.sigma, fb.tau))
        if both:
            want = op.insert_subset(cb.descents(fb.sigma), cb.descents(fb.tau), i)
            rep.record(cb.descents(closed[0]) == want, ("descent set", fb.sigma, fb.tau))
    return rep


def task_trees(n, m, i) -> op.Report:
    rep = op.Report(f"tree compositions ({n},{m},{i})")
    for s, t in _pairs(n, m):
        lhs = cb.lambda_tree(op.insert_b(s, t, i))
        rep.record(lhs == op.insert_tree(cb.lambda_tree(s), cb.lambda_tree(t), i), ("lambda", s, t))
    for a, b in itertools.product(cb.trees(n), cb.trees(m)):
        rep.record(op.project_tree(op.insert_tree(a, b, i), n, m, i) == (a, b), ("P.B", a, b))
        Ma, Mb = LinearCombo.single("Y", "M", a), LinearCombo.single("Y", "M", b)
        lhs = to_f_basis(op.compose_y_m(Ma, Mb, i))
        rhs = op.compose_y_f(to_f_basis(Ma), to_f_basis(Mb), i)
        rep.record(lhs == rhs, ("M basis", a, b))
    return rep


def task_tree_projection(n, m, i) -> op.Report:
    rep = op.Report(f"132-avoidance through P ({n},{m},{i})")
    for rho in cb.permutations(n + m - 1):
        if cb.is_132_avoiding(rho):
            s, t = op.project_p(rho, n, m, i)
            rep.record(cb.is_132_avoiding(s) and cb.is_132_avoiding(t), rho)
    return rep


def task_tree_maps(n) -> op.Report:
    rep = op.Report(f"tree maps in degree {n}")
    perms, ts = cb.permutations(n), cb.trees(n)
    for t in ts:
        g = op.gamma_max(t)
        rep.record(g == op.gamma_max_scan(t), ("gamma", t))
        rep.record(cb.lambda_tree(g) == t, ("lambda.gamma", t))
        rep.record(cb.is_132_avoiding(g), ("132", t))
    rep.record(sorted(op.gamma_max(t) for t in ts) == [s for s in perms if cb.is_132_avoiding(s)],
               ("image of gamma", n))
    for s in perms:
        Fs, Ms = _S("F", s), _S("M", s)
        rep.record(op.l_morphism(op.lambda_morphism(Fs)) == op.des_morphism(Fs), ("D = L.Lambda", s))
        rep.record(cb.leaf_label_set(cb.lambda_tree(s)) == cb.descents(s), ("Des = L.lambda", s))
        via_f = to_m_basis(op.lambda_morphism(to_f_basis(Ms)))
        rep.record(via_f == op.lambda_morphism(Ms), ("Lambda on M", s))
        rt = op.rho_tree(s)
        lam = cb.lambda_tree(s)
        for r in ts:
            g = op.gamma_max(r)
            rep.record(weak_leq(s, g) == tamari_leq(lam, r), ("galois lower", s, r))
            rep.record(weak_leq(g, s) == tamari_leq(r, rt), ("galois upper", s, r))
    return rep


def task_hopf_kernel(n, m, i) -> op.Report:
    rep = op.Report(f"Hopf kernel closure ({n},{m},{i})")
    for fb in op.fibers(n, m, i):
        ok = cb.is_eventual_identity(fb.sigma) or cb.is_eventual_identity(fb.tau)
        for rho in fb.members:
            if cb.is_eventual_identity(rho):
                rep.record(ok, rho)
    return rep


def task_hopf_kernel_direct(n) -> op.Report:
    rep = op.Report(f"Hopf kernel from its definition, degree {n}")
    basis = hopf.hopf_kernel_basis(n)
    rep.record(hopf.hopf_kernel_dimension_direct(n) == len(basis), ("dimension", n))
    for s in basis:
        rep.record(hopf.in_hopf_kernel_direct(_S("M", s)), s)
    return rep


def task_bracket(max_total) -> op.Report:
    rep = lie.check_bracket_forms(max_total)
    tw = lie.twisted_lie_check(max_total)
    rep.checked += tw.checked
    rep.failures += tw.failures
    for n in range(1, max_total):
        for m in range(1, max_total - n + 1):
            for s, t in _pairs(n, m):
                out = lie.bracket_m(_S("M", s), _S("M", t))
                bound = len(cb.global_descents(s)) + len(cb.global_descents(t))
                rep.record(all(len(cb.global_descents(r)) <= bound for r in out.support()),
                           ("filtration", s, t))
                if not cb.global_descents(s) and not cb.global_descents(t):
                    c = hopf.commutator(_S("M", s), _S("M", t))
                    rep.record(hopf.filtration_degree(c) <= 1, ("commutator primitive", s, t))
    return rep


def task_dynkin(n, small: bool) -> op.Report:
    rep = op.Report(f"Dynkin element, degree {n}")
    theta_m = lie.dynkin_m(n)
    rep.record(to_m_basis(lie.dynkin_nested(n)) == theta_m, ("nested = M form", n))
    supp = theta_m.support()
    rep.record(all(s[0] == 1 and not cb.global_descents(s) for s in supp), ("fixes 1", n))
    rep.record(len(supp) == lie.expected_lie_dimension(n), ("support size", n))
    if small:
        rep.record(lie.dynkin_word_check(n), ("word action", n))
        rep.record(lie.dynkin_is_quasi_idempotent(n), ("idempotency", n))
        span = lie.lie_span(n)
        rep.record(len(span) == lie.expected_lie_dimension(n), ("dim L_n", n))
        rep.record(lie.in_lie_span(lie.dynkin_nested(n)), ("theta in L_n", n))
        rep.record(all(hopf.filtration_degree(x) == 1 for x in span), ("L_n primitive", n))
    return rep


def task_axioms(family, d) -> op.Report:
    return op.check_operad_axioms(family, d)


def task_equivariance(n, m) -> op.Report:
    return op.check_equivariance(((n, m),))


def task_hopf_misc() -> op.Report:
    rep = hopf.check_coassociativity(5)
    extra = hopf.check_hopf_compatibility(4)
    rep.checked += extra.checked
    rep.failures += extra.failures
    return rep


# -- suite table ---------------------------------------------------------------------

def _triples(d):
    return list(cb.iter_pairs(d))


def _plan(name: str, b: Bounds) -> list[tuple]:
    if name == "operad-m":
        return [(task_operad_m, t) for t in _triples(b.operad_m)]
    if name == "connection":
        return [(task_connection, t) for t in _triples(b.connection)]
    if name == "fibers":
        return [(task_fibers, t) for t in _triples(b.fibers)]
    if name == "axioms":
        return [(task_axioms, (f, b.axioms if f != "Q" else b.subsets)) for f in ("S", "Q", "Y")]
    if name == "equivariance":
        return [(task_equivariance, p) for p in ((2, 2), (3, 2), (2, 3))]
    if name == "coradical":
        return ([(task_coradical, t) for t in _triples(b.coradical)]
                + [(task_coproduct_composition, t) for t in _triples(b.coproduct_composition)]
                + [(task_kernel_of_iterates, (n,)) for n in range(1, b.kernel_of_iterates + 1)]
                + [(task_hopf_misc, ())])
    if name == "quotients":
        return ([(task_descent, t) for t in _triples(b.descent)]
                + [(task_subsets, t) for t in _triples(b.subsets)]
                + [(task_closed, t) for t in _triples(b.closed)]
                + [(task_trees, t) for t in _triples(b.trees)]
                + [(task_tree_projection, t) for t in _triples(b.tree_projection)]
                + [(task_tree_maps, (n,)) for n in range(1, b.trees + 1)])
    if name == "hopf-kernel":
        return ([(task_hopf_kernel, t) for t in _triples(b.hopf_kernel)]
                + [(task_hopf_kernel_direct, (n,)) for n in range(1, min(b.hopf_kernel, 5) + 1)])
    if name == "dynkin":
        return ([(task_bracket, (b.bracket,))]
                + [(task_dynkin, (n, n <= b.dynkin_small)) for n in range(1, b.dynkin_forms + 1)])
    raise KeyError(name)


SUITES = ("operad-m", "connection", "fibers", "axioms", "equivariance", "coradical",
          "quotients", "hopf-kernel", "dynkin")


def _run(task):
    fn, args = task
    return fn(*args)


def run_suite(name: str, bounds: Bounds | None = None, jobs: int = 1) -> op.Report:
    """Run every task of a suite; the merged report lists failures in task order."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    tasks = _plan(name, bounds or Bounds())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run, tasks))
    else:
        reports = [_run(t) for t in tasks]
    merged = op.Report(name)
    for r in reports:
        merged.checked += r.checked
        for f in r.failures:
            merged.failures.append((r.name, f))
    return merged
