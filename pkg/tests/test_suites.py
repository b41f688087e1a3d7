import pytest

from assocop.suites import SUITES, Bounds, run_suite


@pytest.mark.parametrize("name", SUITES)
def test_suites_pass_at_small_bounds(name):
    rep = run_suite(name, Bounds().capped(4))
    assert rep.ok, rep.failures
    assert rep.checked > 0


def test_parallel_run_matches_serial():
    b = Bounds().capped(4)
    a, c = run_suite("connection", b, jobs=1), run_suite("connection", b, jobs=2)
    assert (a.checked, a.failures) == (c.checked, c.failures)


def test_capping_never_raises_a_bound():
    b = Bounds().capped(5)
    assert b.subsets == 5 and b.kernel_of_iterates == 5
    assert Bounds().capped(20) == Bounds()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
