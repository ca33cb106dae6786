"""Tests pour la suite d'invariants."""

import pytest

from sun_coherent.errors import DimensionError, VerificationError
from sun_coherent.models.enums import SuiteModule
from sun_coherent.verification import SuiteTolerances, require_all, run_suite


class TestRunSuite:
    """Exécution complète sur de petites configurations."""

    @pytest.mark.parametrize(("n", "N"), [(2, 1), (3, 2)])
    def test_passes(self, n: int, N: int) -> None:
        report = run_suite(n, N, seed=5, draws=2)
        assert report.passed, [check.name for check in report.failures()]
        assert require_all(report) is report

    def test_su3_includes_displacement_lift(self) -> None:
        names = [check.name for check in run_suite(3, 1, seed=1, draws=1).checks]
        assert "displacement_lift" in names
        assert "right_factor_fixes_highest_weight" in names

    def test_grid_refinements_included(self) -> None:
        names = [check.name for check in run_suite(3, 2, seed=1, draws=1).checks]
        assert "volume_grid_refinement" in names
        assert "unity_grid_refinement" in names

    def test_su2_skips_su3_only_checks(self) -> None:
        names = [check.name for check in run_suite(2, 1, seed=1, draws=1).checks]
        assert "displacement_lift" not in names
        assert "right_factor_fixes_highest_weight" not in names

    def test_deterministic(self) -> None:
        first = run_suite(3, 1, seed=11, draws=2)
        second = run_suite(3, 1, seed=11, draws=2)
        assert first.model_dump() == second.model_dump()

    def test_module_order(self) -> None:
        report = run_suite(2, 1, seed=0, draws=1)
        modules = [check.module for check in report.checks]
        order = list(SuiteModule)
        assert modules == sorted(modules, key=order.index)

    def test_module_selection(self) -> None:
        report = run_suite(2, 1, seed=0, draws=1, modules=[SuiteModule.GENERATORS])
        assert {check.module for check in report.checks} == {SuiteModule.GENERATORS}
        assert len(report.checks) == 5

    def test_settings_fallback(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SUN_COHERENT_DRAWS", "1")
        monkeypatch.setenv("SUN_COHERENT_SEED", "42")
        report = run_suite(2, 0, modules=[SuiteModule.GENERATORS])
        assert (report.seed, report.draws) == (42, 1)

    @pytest.mark.parametrize(("n", "N"), [(1, 1), (3, -1)])
    def test_invalid(self, n: int, N: int) -> None:
        with pytest.raises(DimensionError):
            run_suite(n, N, seed=0, draws=1)


class TestRequireAll:
    """Échec explicite avec la liste des invariants."""

    def test_tiny_tolerance_fails(self) -> None:
        tolerances = SuiteTolerances(reconstruction=1e-300, algebra=1e-300)
        report = run_suite(
            2, 1, seed=0, draws=2, tolerances=tolerances, modules=[SuiteModule.GENERATORS]
        )
        assert not report.passed
        with pytest.raises(VerificationError, match="en échec") as excinfo:
            require_all(report)
        assert len(excinfo.value.errors) == len(report.failures()) > 0

    def test_tolerances_from_settings(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SUN_COHERENT_ALGEBRA_TOL", "1e-9")
        tolerances = SuiteTolerances.from_settings(reconstruction=1e-6)
        assert tolerances == SuiteTolerances(reconstruction=1e-6, algebra=1e-9)
