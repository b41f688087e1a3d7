"""
Acceptance criteria 1-9.  Each test records a PASS/FAIL line that is printed in
the terminal summary; run this file directly to see only those lines.
"""
import re
import sys

import pytest

from assocop import cli
from assocop import combinatorics as cb
from assocop import hopf
from assocop import operads as op
from assocop.algebra import F, M, LinearCombo, to_f_basis
from assocop.combinatorics import SubsetLabel
from assocop.suites import Bounds, run_suite

BOUNDS = Bounds()


def conclude(log, k, checks):
    """checks: list of (name, passed, detail); records and asserts the criterion."""
    bad = [(name, detail) for name, passed, detail in checks if not passed]
    if bad:
        summary = "; ".join(f"{name}: {detail}" for name, detail in bad)
    else:
        summary = "; ".join(name.removeprefix("PASS ") for name, _, _ in checks)
    log[k] = (not bad, summary)
    assert not bad, summary


def suite_check(name):
    rep = run_suite(name, BOUNDS)
    return (str(rep), rep.ok, rep.failures[:3])


def test_criterion_1_worked_examples(acceptance_log):
    sigma, tau = (5, 8, 2, 4, 6, 1, 7, 3), (2, 4, 3, 1)
    b2 = op.insert_b((2, 3, 1, 4), (2, 3, 1), 2)
    b5 = op.insert_b(sigma, tau, 5)
    t5 = op.top_t(sigma, tau, 5)
    want_t5 = (8, 11, 2, 9, 6, 10, 7, 4, 1, 5, 3)
    five = op.compose_as_m(M((1, 2, 3)), M((2, 1)), 2)
    five_want = LinearCombo("S", "M", [((1, 3, 2, 4), 1), ((1, 4, 2, 3), 1), ((2, 3, 1, 4), 1),
                                       ((2, 4, 1, 3), 1), ((3, 4, 1, 2), 1)])
    q = op.compose(M(SubsetLabel(3)), M(SubsetLabel(2, (1,))), 2)
    m4123 = to_f_basis(M((4, 1, 2, 3)))
    m4123_want = F((4, 1, 2, 3)) - F((4, 1, 3, 2)) - F((4, 2, 1, 3)) + F((4, 3, 2, 1))
    m1 = to_f_basis(M(SubsetLabel(4, (1,))))
    m1_want = LinearCombo("Q", "F", [(SubsetLabel(4, (1,)), 1), (SubsetLabel(4, (1, 2)), -1),
                                     (SubsetLabel(4, (1, 3)), -1), (SubsetLabel(4, (1, 2, 3)), 1)])
    conclude(acceptance_log, 1, [
        ("B_2", b2 == (2, 4, 5, 3, 1, 6), b2),
        ("B_5", b5 == (5, 11, 2, 4, 7, 9, 8, 6, 1, 10, 3), b5),
        ("T_5", t5 == want_t5,
         f"computed {t5}, expected {want_t5}; the expected value projects to "
         f"{op.project_p(want_t5, 8, 4, 5)}, outside the fiber over (sigma, tau)"),
        ("five-term M composition", five == five_want, five),
        ("subset M composition", q == M(SubsetLabel(4, (2,))), q),
        ("M_(4,1,2,3) expansion", m4123 == m4123_want, m4123),
        ("M_{1} expansion", m1 == m1_want, m1),
    ])


def test_criterion_2_m_basis_composition(acceptance_log):
    conclude(acceptance_log, 2, [suite_check("operad-m")])


def test_criterion_3_connection(acceptance_log):
    conclude(acceptance_log, 3, [suite_check("connection"), suite_check("fibers")])


def test_criterion_4_operad_axioms(acceptance_log):
    checks = [suite_check("equivariance")]
    for family in ("S", "Q", "Y"):
        rep = op.check_operad_axioms(family, 6)
        checks.append((str(rep), rep.ok, rep.failures[:3]))
    conclude(acceptance_log, 4, checks)


def test_criterion_5_coradical(acceptance_log):
    conclude(acceptance_log, 5, [suite_check("coradical")])


def test_criterion_6_quotients(acceptance_log):
    closed = [r for r in op.weak_interval((1, 3, 4, 2), op.top_t((1, 2), (2, 3, 1), 2))
              if cb.is_closed(r)]
    conclude(acceptance_log, 6, [
        suite_check("quotients"),
        ("closed instance", closed == [(2, 3, 4, 1)], closed),
    ])


def test_criterion_7_hopf_kernel(acceptance_log):
    basis = hopf.hopf_kernel_basis(3)
    conclude(acceptance_log, 7, [
        suite_check("hopf-kernel"),
        ("K_3 basis", basis == [(1, 3, 2), (2, 1, 3)], basis),
        ("dim K_3", hopf.hopf_kernel_dimension_direct(3) == 2, hopf.hopf_kernel_dimension_direct(3)),
    ])


def test_criterion_8_lie_and_dynkin(acceptance_log):
    conclude(acceptance_log, 8, [suite_check("dynkin")])


DOT_EDGE = re.compile(r'^  "[^"]+" -> "[^"]+"( \[style=bold, penwidth=3\])?;$')
DOT_NODE = re.compile(r'^  "[^"]+";$')


def dot_is_valid(text):
    lines = text.rstrip("\n").split("\n")
    if not (lines[0].startswith("digraph ") and lines[0].endswith("{") and lines[-1] == "}"):
        return False
    body = lines[3:-1]
    nodes = {l.strip()[:-1] for l in body if DOT_NODE.match(l)}
    for l in body:
        if DOT_NODE.match(l):
            continue
        if not DOT_EDGE.match(l):
            return False
        a, b = l.split(" [")[0].rstrip(";").strip().split(" -> ")
        if a not in nodes or b not in nodes:
            return False
    return True


def test_criterion_9_fiber_figure(acceptance_log):
    fbs = op.fibers(3, 2, 1)
    ends = all(fb.bottom == op.insert_b(fb.sigma, fb.tau, 1) and fb.top == op.top_t(fb.sigma, fb.tau, 1)
               and fb.bottom == fb.members[0] for fb in fbs)
    intervals = all(tuple(sorted(op.weak_interval(fb.bottom, fb.top))) == fb.members for fb in fbs)
    covered = sorted(r for fb in fbs for r in fb.members) == sorted(cb.permutations(4))
    dot_a, dot_b = cli.fibers_dot(3, 2, 1), cli.fibers_dot(3, 2, 1)
    conclude(acceptance_log, 9, [
        ("12 fibers", len(fbs) == 12, len(fbs)),
        ("bottoms and tops", ends, None),
        ("fibers are intervals", intervals, None),
        ("partition of S_4", covered, None),
        ("DOT valid", dot_is_valid(dot_a), None),
        ("DOT deterministic", dot_a == dot_b, None),
    ])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "--tb=no", "-p", "no:cacheprovider"]))
