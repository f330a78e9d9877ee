import pytest

from rank2roots import RealRoot, System, grid_systems, run
from rank2roots.verify import (
    FULL_SETS,
    SUITES,
    divisibility_suite,
    expand_window,
    staircase_suite,
    subsystems_suite,
    sums_suite,
)

from helpers import GRID6


class TestGrid:
    def test_grid_systems_order(self):
        assert grid_systems(6) == [
            System(2, 2),
            System(4, 1),
            System(5, 1),
            System(3, 2),
            System(6, 1),
        ]

    def test_grid_systems_min_b(self):
        assert grid_systems(8, min_b=2) == [System(2, 2), System(3, 2), System(4, 2)]


class TestExpandWindow:
    def test_full_sets_cover_the_window(self):
        got = expand_window(FULL_SETS, 2)
        assert len(got) == 4 * 5
        assert RealRoot("LL", -2) in got and RealRoot("SL", 2) in got


class TestSuites:
    @pytest.mark.parametrize("a,b", GRID6)
    def test_staircase_passes(self, a, b):
        rep = staircase_suite(System(a, b), 12)
        assert rep.ok, rep.counterexample

    @pytest.mark.parametrize("a,b", GRID6)
    def test_divisibility_passes(self, a, b):
        rep = divisibility_suite(System(a, b), 8)
        assert rep.ok, rep.counterexample

    @pytest.mark.parametrize("a,b", [(5, 1), (3, 2), (2, 2)])
    def test_sums_passes_off_the_exception(self, a, b):
        rep = sums_suite(System(a, b), 10)
        assert rep.ok, rep.counterexample

    def test_sums_reports_the_affine_exception(self):
        rep = sums_suite(System(4, 1), 10)
        assert not rep.ok
        assert rep.counterexample == "neighbor set mismatch for sign=1 alpha_1"

    @pytest.mark.parametrize("a,b", GRID6)
    def test_subsystems_passes(self, a, b):
        rep = subsystems_suite(System(a, b), 10, seed=7, sets=15)
        assert rep.ok, rep.counterexample

    def test_report_fields(self):
        rep = staircase_suite(System(5, 1), 5)
        assert rep.suite == "staircase"
        assert (rep.a, rep.b) == (5, 1)
        assert rep.checks > 0
        assert rep.counterexample is None


class TestRun:
    def test_run_all_suites_single_system(self):
        reports = run(
            suites=list(SUITES),
            systems=[System(3, 2)],
            bound=8,
            seed=3,
            sets=5,
        )
        assert [r.suite for r in reports] == list(SUITES)
        assert all(r.ok for r in reports)

    def test_run_parallel_matches_serial(self):
        kw = dict(
            suites=["staircase", "divisibility"],
            systems=grid_systems(6),
            bound=6,
            seed=1,
            sets=3,
        )
        assert run(threads=2, **kw) == run(threads=1, **kw)

    def test_run_seed_determinism(self):
        kw = dict(suites=["subsystems"], systems=[System(5, 1)], bound=8, sets=10)
        assert run(seed=11, **kw) == run(seed=11, **kw)
