"""États cohérents de la représentation symétrique T^N_n.

FR: Développement imbriqué en coefficients η, oracle indépendant par
    puissance tensorielle symétrique, forme stéréographique et recouvrement
    en forme close.
EN: Nested η expansion, symmetric tensor-power oracle, stereographic form
    and closed-form overlap.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import comb, factorial

from sun_coherent.errors import DimensionError, IndexRangeError, PoleError
from sun_coherent.fundamental.states import coherent_state_fund
from sun_coherent.models.angles import AngleCoordinates
from sun_coherent.symrep.basis import OccupationBasis, OccupationVector, basis

logger = logging.getLogger(__name__)

# cos ξ sous ce seuil : ζ = tan ξ diverge
POLE_TOL = 1e-12


@dataclass(frozen=True)
class RepCoherentState:
    """Vecteur d'amplitudes sur une base d'occupation."""

    basis: OccupationBasis
    amplitudes: NDArray[np.complex128]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def amplitude(self, state: OccupationVector) -> complex:
        """Amplitude sur |m₁, …, m_n⟩."""
        return complex(self.amplitudes[self.basis.index(state)])

    def max_abs_difference(self, other: RepCoherentState) -> float:
        return float(np.max(np.abs(self.amplitudes - other.amplitudes)))


@dataclass(frozen=True)
class StereoCoordinates:
    """Phase globale φ₀ et coordonnées ζ₀…ζ_{n-2}."""

    global_phase: float
    zeta: NDArray[np.complex128]

    @property
    def n(self) -> int:
        return int(self.zeta.shape[0]) + 1


def _check_rep(n: int, N: int, angles: AngleCoordinates) -> OccupationBasis:
    if angles.n != n:
        msg = f"Angles de SU({angles.n}) fournis pour SU({n})"
        raise DimensionError(msg)
    return basis(n, N)


def eta_coeff(N: int, j: int, phiA: float, phiB: float, theta: float) -> complex:
    """η^N_j = e^{ijφ_B} e^{i(N-j)φ_A} sin^j θ cos^{N-j} θ √C(N, j).

    Raises:
        IndexRangeError: Si j sort de [0, N].
    """
    if not 0 <= j <= N:
        msg = f"Coefficient η : 0 ≤ j ≤ N exigé (j={j}, N={N})"
        raise IndexRangeError(msg)
    binomial = comb(N, j, exact=True)
    modulus = math.sin(theta) ** j * math.cos(theta) ** (N - j) * math.sqrt(binomial)
    return cmath.exp(1j * (j * phiB + (N - j) * phiA)) * modulus


def _eta_array(
    total: NDArray[np.int64],
    j: NDArray[np.int64],
    phiA: NDArray[np.float64],
    phiB: NDArray[np.float64] | float,
    theta: NDArray[np.float64],
) -> NDArray[np.complex128]:
    """η vectorisé : (dim,) indices × (M,) points → (M, dim)."""
    binomials = np.sqrt(comb(total, j))
    a, b = phiA[:, None], np.asarray(phiB)[..., None]
    t = theta[:, None]
    result: NDArray[np.complex128] = (
        np.exp(1j * (j * b + (total - j) * a))
        * np.sin(t) ** j
        * np.cos(t) ** (total - j)
        * binomials
    )
    return result


def coherent_amplitudes(
    occ_basis: OccupationBasis, xi: ArrayLike, phi: ArrayLike
) -> NDArray[np.complex128]:
    """Amplitudes de |n^N_n⟩ en M points : xi (M, n-1), phi (M, n) → (M, dim).

    FR: Produit niveau par niveau η^{j_k}_{j_{k+1}}(φ_k, 0, ξ_k), le dernier
        niveau recevant φ_B = φ_{n-1}.
    EN: Level-by-level product of η factors; the last level takes
        φ_B = φ_{n-1}.
    """
    n = occ_basis.n
    phi_arr = np.atleast_2d(np.asarray(phi, dtype=np.float64))
    points = phi_arr.shape[0]
    xi_arr = np.asarray(xi, dtype=np.float64).reshape(points, n - 1)
    if n == 1:
        return np.exp(1j * occ_basis.N * phi_arr[:, :1]).astype(np.complex128)

    totals = occ_basis.running_totals()
    result = np.ones((points, len(occ_basis)), dtype=np.complex128)
    for k in range(n - 1):
        phi_b: NDArray[np.float64] | float = phi_arr[:, n - 1] if k == n - 2 else 0.0
        result *= _eta_array(
            totals[:, k], totals[:, k + 1], phi_arr[:, k], phi_b, xi_arr[:, k]
        )
    return result


def coherent_state(n: int, N: int, angles: AngleCoordinates) -> RepCoherentState:
    """État cohérent |n^N_n⟩ par le développement imbriqué en coefficients η."""
    occ_basis = _check_rep(n, N, angles)
    amplitudes = coherent_amplitudes(occ_basis, angles.xi_array(), angles.phi_array())[0]
    return RepCoherentState(basis=occ_basis, amplitudes=amplitudes)


def tensor_power_oracle(n: int, N: int, angles: AngleCoordinates) -> RepCoherentState:
    """Oracle : amplitude √(N!/∏ m_k!) ∏ c_k^{m_k}, c = état fondamental."""
    occ_basis = _check_rep(n, N, angles)
    c = coherent_state_fund(angles).amplitudes
    numerator = factorial(N, exact=True)
    amplitudes = np.empty(len(occ_basis), dtype=np.complex128)
    for position, state in enumerate(occ_basis.states):
        denominator = math.prod(factorial(m, exact=True) for m in state)
        monomial = np.prod(c ** np.asarray(state))
        amplitudes[position] = math.sqrt(numerator // denominator) * monomial
    return RepCoherentState(basis=occ_basis, amplitudes=amplitudes)


def angles_to_stereo(angles: AngleCoordinates) -> StereoCoordinates:
    """ζ_k = e^{i(φ_{k+1}-φ_k)} tan ξ_k, phase globale φ₀.

    Raises:
        PoleError: Si un ξ_k vaut π/2.
    """
    xi, phi = angles.xi_array(), angles.phi_array()
    cosines = np.cos(xi)
    poles = np.flatnonzero(np.abs(cosines) <= POLE_TOL)
    if poles.size:
        msg = f"Carte stéréographique indéfinie : ξ_{int(poles[0])} = π/2"
        raise PoleError(msg)
    zeta = np.exp(1j * np.diff(phi)) * np.tan(xi)
    return StereoCoordinates(global_phase=float(phi[0]), zeta=zeta.astype(np.complex128))


def stereographic_state(n: int, N: int, stereo: StereoCoordinates) -> RepCoherentState:
    """e^{iNφ₀} ∏_k (1+|ζ_k|²)^{-j_k/2} ζ_k^{j_{k+1}} √C(j_k, j_{k+1}), j₀ = N."""
    if stereo.n != n:
        msg = f"{stereo.n - 1} coordonnées ζ fournies pour SU({n})"
        raise DimensionError(msg)
    occ_basis = basis(n, N)
    totals = occ_basis.running_totals()
    amplitudes = np.full(len(occ_basis), cmath.exp(1j * N * stereo.global_phase))
    for k, zeta in enumerate(stereo.zeta):
        incoming, outgoing = totals[:, k], totals[:, k + 1]
        amplitudes = amplitudes * (
            (1.0 + abs(zeta) ** 2) ** (-incoming / 2.0)
            * zeta**outgoing
            * np.sqrt(comb(incoming, outgoing))
        )
    return RepCoherentState(basis=occ_basis, amplitudes=amplitudes.astype(np.complex128))


def stereo_to_angles(stereo: StereoCoordinates) -> AngleCoordinates:
    """Carte inverse : ξ_k = arctan|ζ_k|, φ_{k+1} = φ_k + arg ζ_k."""
    xi = np.arctan(np.abs(stereo.zeta))
    phi = stereo.global_phase + np.concatenate(([0.0], np.cumsum(np.angle(stereo.zeta))))
    return AngleCoordinates(xi=xi.tolist(), phi=phi.tolist())


def overlap_closed(
    angles_a: AngleCoordinates, angles_b: AngleCoordinates, N: int
) -> complex:
    """⟨A|B⟩ en forme close pour la représentation T^N_n.

    FR: (e^{i(φ_{n-1}-φ′_{n-1})} ∏_k sin ξ_k sin ξ′_k
        + Σ_m e^{i(φ_m-φ′_m)} cos ξ_m cos ξ′_m ∏_{k<m} sin ξ_k sin ξ′_k)^N,
        les angles primés étant ceux de A (le bra).
    EN: Closed-form overlap; A carries the primed (bra) angles.

    Raises:
        DimensionError: Si A et B n'ont pas le même n, ou si N < 0.
    """
    if angles_a.n != angles_b.n:
        msg = f"Recouvrement entre SU({angles_a.n}) et SU({angles_b.n}) impossible"
        raise DimensionError(msg)
    if N < 0:
        msg = f"Taille de représentation négative : N={N}"
        raise DimensionError(msg)
    xi_p, phi_p = angles_a.xi, angles_a.phi
    xi, phi = angles_b.xi, angles_b.phi
    total = 0j
    running = 1.0
    for m in range(angles_b.n - 1):
        cosines = math.cos(xi[m]) * math.cos(xi_p[m])
        total += cmath.exp(1j * (phi[m] - phi_p[m])) * cosines * running
        running *= math.sin(xi[m]) * math.sin(xi_p[m])
    total += cmath.exp(1j * (phi[-1] - phi_p[-1])) * running
    return total**N


def direct_overlap(
    angles_a: AngleCoordinates, angles_b: AngleCoordinates, N: int
) -> complex:
    """⟨A|B⟩ par produit scalaire des amplitudes de coherent_state."""
    if angles_a.n != angles_b.n:
        msg = f"Recouvrement entre SU({angles_a.n}) et SU({angles_b.n}) impossible"
        raise DimensionError(msg)
    bra = coherent_state(angles_a.n, N, angles_a)
    ket = coherent_state(angles_b.n, N, angles_b)
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))
