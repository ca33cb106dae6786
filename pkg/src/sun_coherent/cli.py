"""Interface en ligne de commande `sun-coherent`.

FR: Sous-commandes state, decompose, overlap, volume, unity-check,
    generators dump et verify. Sortie JSON canonique (clés triées) sur
    stdout ou dans un fichier ; journalisation sur stderr. Codes de sortie :
    0 succès, 1 vérification en échec, 2 entrée invalide.
EN: Subcommands state, decompose, overlap, volume, unity-check,
    generators dump and verify. Exit codes: 0 success, 1 failed
    verification, 2 malformed input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from sun_coherent import __version__
from sun_coherent.conf import get_setting, resolve_output_path
from sun_coherent.errors import DimensionError, SUNError, VerificationError
from sun_coherent.fundamental import (
    bloch_vector,
    build_group_element,
    coherent_state_fund,
    decompose,
    half_angle,
    phase_fixed_state,
)
from sun_coherent.generators import lambda_set
from sun_coherent.models.angles import AngleCoordinates
from sun_coherent.models.enums import AngleConvention, Command, OutputFormat
from sun_coherent.models.reports import OverlapReport
from sun_coherent.models.run import RunConfig
from sun_coherent.quadrature import build_grid, default_grid, unity_check, volume_report
from sun_coherent.symrep import basis, coherent_state, direct_overlap, overlap_closed
from sun_coherent.utils.serialization import (
    complex_pair,
    dumps,
    encode_matrix,
    encode_vector,
    load_angles,
    load_matrix,
    to_csv,
    write_output,
)
from sun_coherent.verification import SuiteTolerances, require_all, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_BAD_INPUT = 2


@dataclass(frozen=True)
class RunOutcome:
    """Code de sortie, rapport JSON et table plate (CSV) d'une commande."""

    status: int
    payload: Any
    rows: list[dict[str, Any]] = field(default_factory=list)

    def render(self, fmt: OutputFormat) -> str:
        if fmt is OutputFormat.CSV:
            return to_csv(self.rows)
        return dumps(self.payload)


def _required[T](value: T | None, name: str) -> T:
    if value is None:
        msg = f"Paramètre manquant : {name}"
        raise ValueError(msg)
    return value


def _require_n(angles: AngleCoordinates, n: int, label: str) -> None:
    if angles.n != n:
        msg = f"{label} : angles de SU({angles.n}) fournis pour --n {n}"
        raise DimensionError(msg)


def _run_state(config: RunConfig) -> RunOutcome:
    n, N = _required(config.n, "n"), config.N
    angles = load_angles(_required(config.angles, "angles"))
    _require_n(angles, n, "state")

    fundamental = coherent_state_fund(angles).amplitudes
    amplitudes = fundamental if N == 1 else coherent_state(n, N, angles).amplitudes
    payload: dict[str, Any] = {
        "n": n,
        "N": N,
        "angles": angles.model_dump(),
        "phase_fixed": config.phase_fixed,
    }
    if config.phase_fixed:
        fixed = phase_fixed_state(angles)
        index = fixed.phase_index if fixed.phase_index is not None else 0
        rotation = fixed.amplitudes[index] / fundamental[index]
        amplitudes = amplitudes * rotation**N
        payload["phase_index"] = index
        payload["pole_fallback"] = fixed.pole_fallback
    if n == 2:
        payload["polar_angle"] = {
            AngleConvention.PARAMETER.value: angles.xi[0],
            AngleConvention.HALF_ANGLE.value: half_angle(angles),
        }
        if config.phase_fixed:
            payload["bloch_vector"] = list(bloch_vector(angles))

    states = basis(n, N).states
    payload["basis"] = [list(state) for state in states]
    payload["amplitudes"] = encode_vector(amplitudes)
    rows = [
        {"occupation": " ".join(map(str, state)), "re": z.real, "im": z.imag}
        for state, z in zip(states, np.asarray(amplitudes), strict=True)
    ]
    return RunOutcome(EXIT_OK, payload, rows)


def _run_decompose(config: RunConfig) -> RunOutcome:
    matrix = load_matrix(_required(config.matrix, "matrix"))
    tree = decompose(matrix, tol=config.decompose_tol)
    error = float(np.max(np.abs(build_group_element(tree) - matrix)))
    payload = {"n": tree.n, "tree": tree.model_dump(), "reconstruction_error": error}
    return RunOutcome(EXIT_OK, payload)


def _run_overlap(config: RunConfig) -> RunOutcome:
    n = _required(config.n, "n")
    angles_a = load_angles(_required(config.angles, "angles"))
    angles_b = load_angles(_required(config.angles_b, "angles_b"))
    _require_n(angles_a, n, "overlap (A)")
    _require_n(angles_b, n, "overlap (B)")
    closed = overlap_closed(angles_a, angles_b, config.N)
    direct = direct_overlap(angles_a, angles_b, config.N)
    report = OverlapReport(
        n=n,
        N=config.N,
        closed_form=(closed.real, closed.imag),
        direct=(direct.real, direct.imag),
        delta=abs(closed - direct),
    )
    row = {
        "n": report.n,
        "N": report.N,
        "closed_re": closed.real,
        "closed_im": closed.imag,
        "direct_re": direct.real,
        "direct_im": direct.imag,
        "delta": report.delta,
    }
    return RunOutcome(EXIT_OK, report.model_dump(mode="json"), [row])


def _grid_orders(config: RunConfig, N: int) -> tuple[int, int]:
    reference = default_grid(_required(config.n, "n"), N)
    return (
        config.polar_order or reference.polar_order,
        config.phase_order or reference.phase_order,
    )


def _run_volume(config: RunConfig) -> RunOutcome:
    n = _required(config.n, "n")
    P, Q = _grid_orders(config, 0)
    report = volume_report(n, build_grid(n, P, Q))
    return RunOutcome(EXIT_OK, report.model_dump(mode="json"), [report.model_dump()])


def _run_unity_check(config: RunConfig) -> RunOutcome:
    n = _required(config.n, "n")
    P, Q = _grid_orders(config, config.N)
    report = unity_check(n, config.N, build_grid(n, P, Q))
    return RunOutcome(EXIT_OK, report.model_dump(mode="json"), [report.model_dump()])


def _run_generators(config: RunConfig) -> RunOutcome:
    gens = lambda_set(_required(config.n, "n"))
    payload = [
        {"label": str(label), "matrix": encode_matrix(matrix)}
        for label, matrix in zip(gens.labels, gens.matrices, strict=True)
    ]
    rows = [
        {"label": str(label), "row": r + 1, "col": c + 1, "re": z[0], "im": z[1]}
        for label, matrix in zip(gens.labels, gens.matrices, strict=True)
        for (r, c), value in np.ndenumerate(matrix)
        for z in [complex_pair(value)]
    ]
    return RunOutcome(EXIT_OK, payload, rows)


def _run_verify(config: RunConfig) -> RunOutcome:
    report = run_suite(
        _required(config.n, "n"),
        config.N,
        seed=config.seed,
        draws=config.draws,
        tolerances=SuiteTolerances.from_settings(config.reconstruction_tol, config.algebra_tol),
    )
    status = EXIT_OK
    try:
        require_all(report)
    except VerificationError as exc:
        status = EXIT_VERIFICATION_FAILED
        logger.error("%s", exc)
        for error in exc.errors:
            logger.error("  - %s", error)
    rows = [
        {
            "module": check.module.value,
            "name": check.name,
            "deviation": check.deviation,
            "tolerance": check.tolerance,
            "passed": check.passed,
        }
        for check in report.checks
    ]
    return RunOutcome(status, report.model_dump(mode="json"), rows)


_HANDLERS: dict[Command, Callable[[RunConfig], RunOutcome]] = {
    Command.STATE: _run_state,
    Command.DECOMPOSE: _run_decompose,
    Command.OVERLAP: _run_overlap,
    Command.VOLUME: _run_volume,
    Command.UNITY_CHECK: _run_unity_check,
    Command.GENERATORS: _run_generators,
    Command.VERIFY: _run_verify,
}


def run(config: RunConfig) -> RunOutcome:
    """Exécute une commande configurée.

    Raises:
        SUNError: Entrée incohérente (dimensions, pôles, matrice hors SU(n)).
        OSError: Fichier d'entrée illisible.
        ValueError: JSON ou angles invalides (dont pydantic.ValidationError).
    """
    logger.info("Commande %s", config.command.value)
    return _HANDLERS[config.command](config)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", default=None, help="Fichier de sortie (défaut : stdout)")
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Format de sortie (défaut : json)",
    )


def build_parser() -> argparse.ArgumentParser:
    """Analyseur d'arguments de la CLI."""
    parser = argparse.ArgumentParser(
        prog="sun-coherent",
        description="États cohérents généralisés de SU(n) : construction et vérification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    state = sub.add_parser(Command.STATE.value, help="État cohérent en un point")
    state.add_argument("--n", type=int, required=True)
    state.add_argument("--angles", required=True, help="JSON {xi, phi}, fichier ou « - »")
    state.add_argument("--rep", dest="N", type=int, default=1, help="Taille N (défaut : 1)")
    state.add_argument("--phase-fixed", action="store_true")

    dec = sub.add_parser(Command.DECOMPOSE.value, help="Décomposition L·M·R d'une matrice")
    dec.add_argument("--matrix", required=True, help="Matrice JSON, fichier ou « - »")
    dec.add_argument("--tol", dest="decompose_tol", type=float, default=1e-8)

    overlap = sub.add_parser(Command.OVERLAP.value, help="Recouvrement de deux états")
    overlap.add_argument("--n", type=int, required=True)
    overlap.add_argument("--N", type=int, default=1)
    overlap.add_argument("--anglesA", dest="angles", required=True)
    overlap.add_argument("--anglesB", dest="angles_b", required=True)

    volume = sub.add_parser(Command.VOLUME.value, help="Volume de l'espace quotient")
    volume.add_argument("--n", type=int, required=True)

    unity = sub.add_parser(Command.UNITY_CHECK.value, help="Résolution de l'unité")
    unity.add_argument("--n", type=int, required=True)
    unity.add_argument("--N", type=int, default=1)

    for grid_parser in (volume, unity):
        grid_parser.add_argument("--polar-order", type=int, default=None)
        grid_parser.add_argument("--phase-order", type=int, default=None)

    gens = sub.add_parser(Command.GENERATORS.value, help="Base λ de SU(n)")
    gens.add_argument("action", choices=["dump"])
    gens.add_argument("--n", type=int, required=True)

    verify = sub.add_parser(Command.VERIFY.value, help="Suite complète d'invariants")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--N", type=int, default=1)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--draws", type=int, default=None)
    verify.add_argument("--reconstruction-tol", type=float, default=None)
    verify.add_argument("--algebra-tol", type=float, default=None)

    for subparser in (state, dec, overlap, volume, unity, gens, verify):
        _add_common(subparser)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Construit la RunConfig à partir des arguments analysés."""
    values = {key: value for key, value in vars(args).items() if key != "action"}
    return RunConfig.model_validate(values)


def _configure_logging() -> None:
    level = str(get_setting("LOG_LEVEL")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Point d'entrée de la console `sun-coherent`."""
    args = build_parser().parse_args(argv)
    _configure_logging()
    try:
        config = config_from_args(args)
        outcome = run(config)
        write_output(outcome.render(config.format), resolve_output_path(config.output))
    except (SUNError, ValueError, OSError) as exc:
        sys.stderr.write(f"[erreur] {exc}\n")
        return EXIT_BAD_INPUT
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
