"""Closed-form two-spin (N = 2) results: spectrum, ground vectors, concurrence.

For two spins the single-mode blocks are at most 3 x 3, so the full spectrum
is available analytically: the block of excitation number lambda >= 1 reduces
to a depressed cubic solved by the trigonometric method, giving

    E(lambda) = lambda + lambda*r - (2/3) sqrt(3 alpha) cos((pi - phi)/3)

with alpha = (4 lambda + 2) kappa^2 + r^2 and
phi = arccos(3 sqrt(3) kappa^2 r / alpha^(3/2)).  These expressions are the
analytic ground truth against which the generic numeric pipeline is checked,
and double as a fast path.

Sign convention: with kappa > 0 the off-diagonal block entries are positive
and the lowest eigenvector alternates sign with photon number; the amplitude
functions a0, a(lambda), b(lambda) below are the positive-gauge magnitudes,
and stored eigenvectors carry the alternating signs so they match numeric
eigenvectors up to an overall sign.  Photon-trace populations are unaffected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DegenerateCouplingError, DomainError

__all__ = [
    "ClosedFormAuxiliaries",
    "ClosedFormEigenvector",
    "auxiliaries",
    "energy_closed",
    "eigenvector_closed",
    "c0_closed",
    "clambda_closed",
    "clambda_resonant",
]

_ACOS_SLACK = 1e-12


def _check_rk(r: float, kappa: float) -> tuple[float, float]:
    r = float(r)
    kappa = float(kappa)
    if not r > -1.0:
        raise DomainError(f"detuning must be > -1 (got {r})")
    if not kappa >= 0.0:
        raise DomainError(f"coupling must be >= 0 (got {kappa})")
    return r, kappa


def _check_lam(lam, minimum: int) -> int:
    lam_f = float(lam)
    if abs(lam_f - round(lam_f)) > 1e-9:
        raise DomainError(f"excitation number must be an integer for N = 2 (got {lam})")
    lam_i = int(round(lam_f))
    if lam_i < minimum:
        raise DomainError(f"excitation number must be >= {minimum} (got {lam})")
    return lam_i


@dataclass(frozen=True)
class ClosedFormAuxiliaries:
    """Cubic-root auxiliaries for the lambda >= 1 block of the two-spin model."""

    alpha: float
    phi: float
    theta: float
    zeta: float
    tau: int


def auxiliaries(lam, r: float, kappa: float) -> ClosedFormAuxiliaries:
    """Auxiliary quantities alpha, phi, theta = (pi - phi)/3, zeta = cos(theta).

    Defined for lambda >= 1.  The arccos argument satisfies
    |arg| <= 1/(1 + 2 lambda) analytically; it is asserted to be within
    rounding of [-1, 1] and clamped before taking the branch in [0, pi].
    """
    lam_i = _check_lam(lam, 1)
    r, kappa = _check_rk(r, kappa)
    tau = 1 + 2 * lam_i
    alpha = (4.0 * lam_i + 2.0) * kappa * kappa + r * r
    if alpha == 0.0:
        raise DegenerateCouplingError(
            "auxiliary angles are undefined at kappa = 0, r = 0 (the block vanishes)"
        )
    arg = 3.0 * math.sqrt(3.0) * kappa * kappa * r / alpha**1.5
    if abs(arg) > 1.0 + _ACOS_SLACK:
        raise ContractError(f"arccos argument {arg} escapes [-1, 1] beyond rounding")
    phi = math.acos(min(1.0, max(-1.0, arg)))
    theta = (math.pi - phi) / 3.0
    return ClosedFormAuxiliaries(alpha=alpha, phi=phi, theta=theta, zeta=math.cos(theta), tau=tau)


def energy_closed(lam, r: float, kappa: float) -> float:
    """Total ground energy of the excitation-lambda block, N = 2, single mode.

    E(-1) = -1 for all couplings; E(0) = (r - sqrt(8 kappa^2 + r^2))/2; for
    lambda >= 1 the trigonometric cubic root.  At the fully degenerate point
    kappa = r = 0 the block vanishes and E(lambda) = lambda.
    """
    lam_i = _check_lam(lam, -1)
    r, kappa = _check_rk(r, kappa)
    if lam_i == -1:
        return -1.0
    if lam_i == 0:
        return 0.5 * (r - math.sqrt(8.0 * kappa * kappa + r * r))
    if kappa == 0.0 and r == 0.0:
        return float(lam_i)
    aux = auxiliaries(lam_i, r, kappa)
    return lam_i + lam_i * r - (2.0 / 3.0) * math.sqrt(3.0 * aux.alpha) * aux.zeta


@dataclass(frozen=True)
class ClosedFormEigenvector:
    """Unnormalized block-ground eigenvector of the two-spin model.

    ``amplitudes`` are ordered by ascending photon number (n = 0, 1 for
    lambda = 0; n = lambda-1, lambda, lambda+1 for lambda >= 1) and carry the
    positive-coupling sign alternation.  ``norm`` is their Euclidean norm.
    """

    lam: int
    amplitudes: np.ndarray
    norm: float

    def normalized(self) -> np.ndarray:
        return self.amplitudes / self.norm


def eigenvector_closed(lam, r: float, kappa: float) -> ClosedFormEigenvector:
    """Closed-form lowest eigenvector of the lambda block (N = 2, kappa > 0)."""
    lam_i = _check_lam(lam, 0)
    r, kappa = _check_rk(r, kappa)
    if kappa == 0.0:
        raise DegenerateCouplingError("eigenvector undefined at kappa = 0 (block is diagonal)")
    if lam_i == 0:
        a0 = (r + math.sqrt(8.0 * kappa * kappa + r * r)) / (2.0 * math.sqrt(2.0) * kappa)
        amps = np.array([a0, -1.0])
    else:
        aux = auxiliaries(lam_i, r, kappa)
        u = (2.0 / 3.0) * math.sqrt(3.0 * aux.alpha) * aux.zeta
        a = -math.sqrt(1.0 + lam_i) / math.sqrt(lam_i) + u * (r + u) / (
            2.0 * math.sqrt(lam_i * (1.0 + lam_i)) * kappa * kappa
        )
        b = (r + u) / (math.sqrt(2.0 * (1.0 + lam_i)) * kappa)
        amps = np.array([a, -b, 1.0])
    return ClosedFormEigenvector(lam=lam_i, amplitudes=amps, norm=float(np.linalg.norm(amps)))


def c0_closed(r: float, kappa: float) -> float:
    """Ground-state concurrence of the lambda = 0 block (N = 2, kappa > 0)."""
    r, kappa = _check_rk(r, kappa)
    if kappa == 0.0:
        raise DomainError("concurrence formula requires kappa > 0")
    root = math.sqrt(8.0 * kappa * kappa + r * r)
    return (r + root) ** 2 / (2.0 * (8.0 * kappa * kappa + r * (r + root)))


def clambda_closed(lam, r: float, kappa: float) -> float:
    """Ground-state concurrence of the lambda >= 1 block (N = 2, kappa > 0).

    Evaluated as written and clamped below at zero; the clamp is what creates
    the non-analytic points of the concurrence away from any level crossing.
    """
    lam_i = _check_lam(lam, 1)
    r, kappa = _check_rk(r, kappa)
    if kappa == 0.0:
        raise DomainError("concurrence formula requires kappa > 0")
    aux = auxiliaries(lam_i, r, kappa)
    alpha, zeta = aux.alpha, aux.zeta
    k2 = kappa * kappa
    sq3a = math.sqrt(3.0 * alpha)
    sl = math.sqrt(lam_i)
    sl1 = math.sqrt(1.0 + lam_i)
    num = (
        3.0
        * sl
        * k2
        * (
            3.0 * (4.0 * sl1**3 * k2 + sl * r * r)
            - 4.0 * sq3a * (sl1 - sl) * r * zeta
            - 4.0 * alpha * (2.0 * sl1 - sl) * zeta * zeta
        )
    )
    den = (
        9.0 * k2 * (2.0 * (1.0 + 2.0 * lam_i) * (1.0 + lam_i) * k2 + lam_i * r * r)
        - 12.0 * sq3a * k2 * r * zeta
        - 6.0 * alpha * (2.0 * (2.0 + lam_i) * k2 - r * r) * zeta * zeta
        + 8.0 * alpha**1.5 * zeta**3 * (math.sqrt(3.0) * r + math.sqrt(alpha) * zeta)
    )
    return max(0.0, num / den)


def clambda_resonant(lam) -> float:
    """On-resonance (r = 0) concurrence of the lambda block; kappa-independent."""
    lam_i = _check_lam(lam, 0)
    return (math.sqrt(1.0 + lam_i) - math.sqrt(lam_i)) ** 2 / (2.0 * (1.0 + 2.0 * lam_i))
