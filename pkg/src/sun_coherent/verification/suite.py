"""Suite d'invariants exécutée par la commande `verify`.

FR: Chaque module contribue une liste de CheckResult (écart maximal mesuré
    contre tolérance). Les tirages aléatoires proviennent d'un générateur
    numpy initialisé par la graine : même configuration, même rapport.
EN: Each module contributes CheckResults (max deviation vs tolerance);
    random draws come from a seeded numpy generator.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass

import numpy as np

from sun_coherent.conf import get_float_setting, get_int_setting
from sun_coherent.errors import DimensionError, VerificationError
from sun_coherent.fundamental import (
    angles_to_tree,
    build_group_element,
    coherent_state_fund,
    decompose,
    displacement_factors,
    displacement_lambda,
    embed_block,
    embedding_slope,
    gauss_reconstruction_deviation,
    haar_random_su,
    measure_density,
    metric_diag,
    metric_quadratic_form,
    middle_matrix,
    random_angles,
    su2_matrix,
    unitarity_deviation,
)
from sun_coherent.generators import (
    elementary_matrix,
    herm_exp,
    hermiticity_deviation,
    lambda_set,
    trace_orthonormality_deviation,
    verify_beta_theta_commutators,
)
from sun_coherent.models.angles import HALF_PI, TWO_PI, DisplacementParameters
from sun_coherent.models.enums import SuiteModule
from sun_coherent.models.reports import CheckResult, VerificationReport
from sun_coherent.models.trees import DecompositionTree
from sun_coherent.quadrature import (
    build_grid,
    coset_volume,
    default_grid,
    offdiagonal_max,
    phase_moment,
    resolution_of_unity,
    unity_refinement_gap,
    volume_exact,
    xi_moment,
    xi_moment_exact,
)
from sun_coherent.symrep import (
    angles_to_stereo,
    basis,
    cartan_op,
    coherent_state,
    direct_overlap,
    ladder_op,
    lift_generator,
    lift_unitary,
    lowering_op,
    overlap_closed,
    raising_op,
    stereographic_state,
    tensor_power_oracle,
)

logger = logging.getLogger(__name__)

# Pas et tolérance du contrôle de la métrique par différences finies
FD_STEP = 1e-4
FD_TOL = 1e-5

# Plus grand moment polaire contrôlé, et ordre de la règle associée
MAX_XI_MOMENT = 12
XI_MOMENT_ORDER = 7

# Taille maximale d'une grille doublée pour le contrôle de raffinement
MAX_REFINED_POINTS = 2_000_000

# Marge polaire des tirages pour la carte stéréographique
STEREO_MARGIN = 0.05

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


@dataclass(frozen=True)
class SuiteTolerances:
    """Tolérances : reconstruction/unité et identités algébriques."""

    reconstruction: float
    algebra: float

    @classmethod
    def from_settings(
        cls, reconstruction: float | None = None, algebra: float | None = None
    ) -> SuiteTolerances:
        """Valeurs explicites, sinon RECONSTRUCTION_TOL / ALGEBRA_TOL."""
        return cls(
            reconstruction=(
                reconstruction
                if reconstruction is not None
                else get_float_setting("RECONSTRUCTION_TOL")
            ),
            algebra=algebra if algebra is not None else get_float_setting("ALGEBRA_TOL"),
        )


@dataclass
class _Context:
    n: int
    N: int
    draws: int
    rng: np.random.Generator
    tol: SuiteTolerances


def _result(
    name: str,
    module: SuiteModule,
    deviations: Iterable[float],
    tolerance: float,
    detail: str | None = None,
) -> CheckResult:
    worst = max((float(d) for d in deviations), default=0.0)
    return CheckResult(
        name=name, module=module, deviation=worst, tolerance=tolerance, detail=detail
    )


def _gap(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def _random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (z + z.conj().T)


def _random_displacement(n: int, rng: np.random.Generator) -> DisplacementParameters:
    extra = (
        {"xi1": rng.uniform(0.0, HALF_PI), "phi1": rng.uniform(0.0, TWO_PI)}
        if n == 4
        else {}
    )
    return DisplacementParameters(
        n=n,
        alpha=rng.uniform(0.0, TWO_PI),
        beta=-rng.uniform(0.0, HALF_PI),
        gamma=rng.uniform(0.0, TWO_PI),
        theta=rng.uniform(0.0, HALF_PI),
        phi=rng.uniform(0.0, TWO_PI),
        **extra,
    )


def _generator_checks(ctx: _Context) -> list[CheckResult]:
    module = SuiteModule.GENERATORS
    gens = lambda_set(ctx.n)
    pauli = lambda_set(2)
    group_law = []
    for _ in range(ctx.draws):
        h = _random_hermitian(ctx.n, ctx.rng)
        s, t = ctx.rng.uniform(-2.0, 2.0, size=2)
        product = herm_exp(h, s) @ herm_exp(h, t)
        group_law.append(_gap(product, herm_exp(h, s + t)))
    return [
        _result(
            "lambda_hermitian_traceless", module, [hermiticity_deviation(gens)], ctx.tol.algebra
        ),
        _result(
            "lambda_trace_orthonormality",
            module,
            [trace_orthonormality_deviation(gens)],
            ctx.tol.algebra,
        ),
        _result(
            "pauli_recovery",
            module,
            (_gap(a, b) for a, b in zip(pauli.matrices, _PAULI, strict=True)),
            ctx.tol.algebra,
        ),
        _result(
            "beta_theta_commutators",
            module,
            [verify_beta_theta_commutators(ctx.n).max_deviation],
            ctx.tol.algebra,
        ),
        _result(
            "herm_exp_group_law",
            module,
            group_law,
            ctx.tol.reconstruction,
            f"{ctx.draws} matrices hermitiennes aléatoires",
        ),
    ]


def _fundamental_checks(ctx: _Context) -> list[CheckResult]:
    module = SuiteModule.FUNDAMENTAL
    n, rng = ctx.n, ctx.rng
    norms, columns, fixed, round_trips, unitarity = [], [], [], [], []
    slopes, densities, gauss, su3, su4 = [], [], [], [], []
    highest = np.zeros(n, dtype=np.complex128)
    highest[0] = 1.0

    for _ in range(ctx.draws):
        angles = random_angles(n, rng)
        state = coherent_state_fund(angles).amplitudes
        norms.append(abs(float(np.linalg.norm(state)) - 1.0))

        right = decompose(haar_random_su(n - 1, rng)) if n >= 3 else None
        element = build_group_element(angles_to_tree(angles, right=right))
        columns.append(_gap(element[:, 0], state))
        unitarity.append(unitarity_deviation(element))
        if right is not None:
            identity_left = DecompositionTree.identity(n - 1)
            only_right = DecompositionTree(left=identity_left, right=right)
            moved = build_group_element(only_right) @ highest
            fixed.append(_gap(moved, highest))

        u = haar_random_su(n, rng)
        round_trips.append(_gap(build_group_element(decompose(u)), u))

        direction = rng.standard_normal(2 * n - 1)
        slope = embedding_slope(angles, direction, FD_STEP)
        slopes.append(abs(slope - metric_quadratic_form(angles, direction)))
        densities.append(
            abs(measure_density(angles) - math.sqrt(math.prod(metric_diag(angles))))
        )

        theta = rng.uniform(0.0, HALF_PI - 0.1)
        phi1, phi2 = rng.uniform(0.0, TWO_PI, size=2)
        gauss.append(gauss_reconstruction_deviation(theta, phi1, phi2))

        params3 = _random_displacement(3, rng)
        matrix3 = displacement_lambda(params3)
        a3, b3, g3 = params3.alpha, params3.beta, params3.gamma
        left = embed_block(su2_matrix(-b3, a3 + g3, g3 - a3), 3, 1)
        su3.extend(
            [
                _gap(matrix3[:, 0], coherent_state_fund(params3.to_angles()).amplitudes),
                _gap(matrix3, left @ middle_matrix(3, params3.theta, params3.phi)),
                _gap(matrix3, displacement_lambda(params3, expanded=True)),
            ]
        )
        params4 = _random_displacement(4, rng)
        matrix4 = displacement_lambda(params4)
        su4.extend(
            [
                _gap(matrix4[:, 0], coherent_state_fund(params4.to_angles()).amplitudes),
                _gap(matrix4, displacement_lambda(params4, expanded=True)),
            ]
        )

    detail = f"{ctx.draws} tirages, n={n}"
    results = [
        _result("fundamental_state_norm", module, norms, ctx.tol.algebra, detail),
        _result("first_column_is_coherent_state", module, columns, ctx.tol.reconstruction, detail),
        _result("group_element_unitarity", module, unitarity, ctx.tol.reconstruction, detail),
    ]
    if fixed:
        results.append(
            _result("right_factor_fixes_highest_weight", module, fixed, ctx.tol.algebra, detail)
        )
    results += [
        _result("decompose_round_trip", module, round_trips, ctx.tol.reconstruction, detail),
        _result("metric_finite_difference", module, slopes, FD_TOL, f"pas {FD_STEP:g}"),
        _result("measure_density_sqrt_metric", module, densities, ctx.tol.algebra, detail),
        _result("gauss_reconstruction", module, gauss, ctx.tol.algebra),
        _result("displacement_su3", module, su3, ctx.tol.algebra),
        _result("displacement_su4", module, su4, ctx.tol.algebra),
    ]
    return results


def _rep_commutator_deviation(n: int, N: int) -> float:
    indices = range(1, n + 1)
    ops = {(h, j): ladder_op(n, N, h, j) for h in indices for j in indices}
    worst = 0.0
    for (h, j), left in ops.items():
        for (k, m), right in ops.items():
            expected = ops[(h, m)].scaled(1.0 if j == k else 0.0).plus(
                ops[(k, j)].scaled(-1.0 if m == h else 0.0)
            )
            worst = max(worst, left.commutator(right).max_abs_difference(expected))
    return worst


def _cartan_formula_deviation(n: int, N: int) -> float:
    occupations = basis(n, N).occupations()
    worst = 0.0
    for h in range(1, n):
        expected = math.sqrt(2.0 / (h * (h + 1))) * (
            occupations[:, :h].sum(axis=1) - h * occupations[:, h]
        )
        diagonal = cartan_op(n, N, h).to_dense()
        worst = max(worst, float(np.max(np.abs(diagonal - np.diag(expected)))))
    return worst


def _symrep_checks(ctx: _Context) -> list[CheckResult]:
    module = SuiteModule.SYMREP
    n, N, rng = ctx.n, ctx.N, ctx.rng
    norms, oracle, stereo, closed, power, self_overlap = [], [], [], [], [], []
    for _ in range(ctx.draws):
        angles = random_angles(n, rng)
        other = random_angles(n, rng)
        state = coherent_state(n, N, angles)
        norms.append(abs(state.norm() - 1.0))
        oracle.append(state.max_abs_difference(tensor_power_oracle(n, N, angles)))
        bounded = random_angles(n, rng, margin=STEREO_MARGIN)
        stereo.append(
            coherent_state(n, N, bounded).max_abs_difference(
                stereographic_state(n, N, angles_to_stereo(bounded))
            )
        )
        value = overlap_closed(angles, other, N)
        closed.append(abs(value - direct_overlap(angles, other, N)))
        power.append(abs(value - overlap_closed(angles, other, 1) ** N))
        self_overlap.append(abs(overlap_closed(angles, angles, N) - 1.0))

    pairs = [(h, j) for h in range(1, n + 1) for j in range(h + 1, n + 1)]
    highest = np.zeros(len(basis(n, N)), dtype=np.complex128)
    highest[0] = 1.0
    adjoint = [
        raising_op(n, N, h, j).adjoint().max_abs_difference(lowering_op(n, N, j, h))
        for h, j in pairs
    ]
    annihilation = [
        float(np.max(np.abs(raising_op(n, N, h, j).apply(highest)))) for h, j in pairs
    ]
    lift = [
        lift_generator(n, N, elementary_matrix(h, j, n)).max_abs_difference(ladder_op(n, N, h, j))
        for h in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    detail = f"{ctx.draws} tirages, n={n}, N={N}"
    results = [
        _result("rep_state_norm", module, norms, ctx.tol.algebra, detail),
        _result("tensor_power_oracle", module, oracle, ctx.tol.algebra, detail),
        _result("stereographic_state", module, stereo, ctx.tol.algebra, detail),
        _result("overlap_closed_vs_direct", module, closed, ctx.tol.algebra, detail),
        _result("overlap_power_law", module, power, ctx.tol.algebra, detail),
        _result("self_overlap", module, self_overlap, ctx.tol.algebra, detail),
        _result("ladder_adjointness", module, adjoint, ctx.tol.algebra),
        _result("highest_weight_annihilation", module, annihilation, ctx.tol.algebra),
        _result("lift_consistency", module, lift, ctx.tol.algebra),
        _result("cartan_formula", module, [_cartan_formula_deviation(n, N)], ctx.tol.algebra),
        _result("rep_commutators", module, [_rep_commutator_deviation(n, N)], ctx.tol.algebra),
    ]
    if n == 3:
        lifted = []
        start = np.zeros(len(basis(3, N)), dtype=np.complex128)
        start[0] = 1.0
        for _ in range(ctx.draws):
            params = _random_displacement(3, rng)
            factors = [(f.generator, f.parameter) for f in displacement_factors(params)]
            image = lift_unitary(3, N, factors) @ start
            expected = coherent_state(3, N, params.to_angles()).amplitudes
            lifted.append(_gap(image, expected))
        results.append(
            _result("displacement_lift", module, lifted, ctx.tol.reconstruction, detail)
        )
    return results


def _quadrature_checks(ctx: _Context) -> list[CheckResult]:
    module = SuiteModule.QUADRATURE
    n, N = ctx.n, ctx.N
    volume_grid = default_grid(n, 0)
    volume = coset_volume(n, volume_grid)
    unity_grid = default_grid(n, N)
    matrix = resolution_of_unity(n, N, unity_grid)
    residual = float(np.max(np.abs(matrix - np.eye(matrix.shape[0]))))
    grid_detail = f"P={unity_grid.polar_order}, Q={unity_grid.phase_order}"

    results = [
        _result("coset_volume", module, [abs(volume - volume_exact(n))], ctx.tol.reconstruction),
        _result("resolution_of_unity", module, [residual], ctx.tol.reconstruction, grid_detail),
        _result(
            "unity_offdiagonal", module, [offdiagonal_max(matrix)], ctx.tol.algebra, grid_detail
        ),
        _result(
            "phase_moments",
            module,
            (abs(phase_moment(k, 2 * N + 1)) for k in range(-2 * N, 2 * N + 1) if k),
            ctx.tol.algebra,
            f"Q={2 * N + 1}",
        ),
        _result(
            "xi_moments",
            module,
            (
                abs(xi_moment(m, k, XI_MOMENT_ORDER) - xi_moment_exact(m, k))
                for m in range(MAX_XI_MOMENT + 1)
                for k in range(m + 1)
            ),
            ctx.tol.algebra,
            f"m ≤ {MAX_XI_MOMENT}, P={XI_MOMENT_ORDER}",
        ),
    ]

    refined = build_grid(n, 2 * volume_grid.polar_order, 2 * volume_grid.phase_order)
    if refined.size <= MAX_REFINED_POINTS:
        results.append(
            _result(
                "volume_grid_refinement",
                module,
                [abs(coset_volume(n, refined) - volume)],
                ctx.tol.algebra,
            )
        )
    else:
        logger.info("Raffinement du volume ignoré : %d points", refined.size)

    # Grille doublée : taille multipliée par 2^(2n-1)
    refined_unity_size = unity_grid.size * 2 ** (2 * n - 1)
    if refined_unity_size <= MAX_REFINED_POINTS:
        results.append(
            _result(
                "unity_grid_refinement",
                module,
                [unity_refinement_gap(n, N, unity_grid)],
                ctx.tol.algebra,
                grid_detail,
            )
        )
    else:
        logger.info("Raffinement de l'unité ignoré : %d points", refined_unity_size)
    return results


_MODULE_CHECKS: dict[SuiteModule, Callable[[_Context], list[CheckResult]]] = {
    SuiteModule.GENERATORS: _generator_checks,
    SuiteModule.FUNDAMENTAL: _fundamental_checks,
    SuiteModule.SYMREP: _symrep_checks,
    SuiteModule.QUADRATURE: _quadrature_checks,
}


def run_suite(
    n: int,
    N: int,
    seed: int | None = None,
    draws: int | None = None,
    tolerances: SuiteTolerances | None = None,
    modules: Iterable[SuiteModule] | None = None,
) -> VerificationReport:
    """Exécute tous les invariants pour (n, N) et retourne le rapport.

    FR: seed et draws retombent sur les paramètres SEED et DRAWS. L'ordre
        des contrôles est fixe (générateurs, fondamentale, symétrique,
        quadrature).
    EN: seed and draws default to the SEED and DRAWS settings; check order
        is fixed.
    """
    if n < 2 or N < 0:
        msg = f"Suite de vérification : n ≥ 2 et N ≥ 0 exigés (n={n}, N={N})"
        raise DimensionError(msg)
    seed = seed if seed is not None else get_int_setting("SEED")
    draws = draws if draws is not None else get_int_setting("DRAWS")
    selected = list(modules) if modules is not None else list(SuiteModule)
    ctx = _Context(
        n=n,
        N=N,
        draws=draws,
        rng=np.random.default_rng(seed),
        tol=tolerances or SuiteTolerances.from_settings(),
    )
    logger.info("Suite de vérification : n=%d, N=%d, graine %d, %d tirages", n, N, seed, draws)
    checks: list[CheckResult] = []
    for module in SuiteModule:
        if module in selected:
            checks.extend(_MODULE_CHECKS[module](ctx))
    report = VerificationReport(n=n, N=N, seed=seed, draws=draws, checks=checks)
    logger.info(
        "Suite terminée : %d contrôles, %d en échec", len(checks), len(report.failures())
    )
    return report


def require_all(report: VerificationReport) -> VerificationReport:
    """Lève VerificationError si un invariant a échoué.

    Raises:
        VerificationError: Avec la liste des invariants en échec et leur écart.
    """
    failures = report.failures()
    if failures:
        errors = [
            f"{check.module.value}.{check.name} : "
            f"écart {check.deviation:.3e} > {check.tolerance:.1e}"
            for check in failures
        ]
        msg = f"{len(failures)} invariant(s) en échec pour n={report.n}, N={report.N}"
        raise VerificationError(msg, errors=errors)
    return report
