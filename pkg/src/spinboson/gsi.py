"""Ground-state resolution across excitation blocks and level-crossing search.

The ground state at fixed coupling is the minimum over excitation numbers of
the per-block ground energies E(lambda) = lambda + min eig of the block.  As
the coupling grows the minimizer jumps from lambda to lambda + 1 at critical
couplings (ground-state instabilities); these are located by bisection on the
energy gap f(kappa) = E(lambda+1) - E(lambda), which starts positive near
kappa = 0 and changes sign exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eig import lowest_eigenpair
from .errors import CertificationError, DomainError, NoCrossingError, SearchFailureError
from .model import ExcitationBlock, ModelParams, build_block

__all__ = [
    "GroundStateSolution",
    "CriticalCoupling",
    "block_ground_energy",
    "ground_state_at",
    "find_critical_coupling",
    "first_critical_analytic",
    "gsi_sequence",
    "crossings_in_range",
    "PhaseDiagram",
    "phase_diagram",
    "ConditionCheck",
    "GsiCertification",
    "certify_sequential_gsi",
    "DetuningOrdering",
    "verify_detuning_ordering",
]

# kappa values where the sign of the energy gap is probed / bracketed
_KAPPA_EPS = 1e-8
_KAPPA_CAP = 2.0**16
_TIE_TOL = 1e-12

# scan control for ground_state_at: stop after this many consecutive
# per-block energy increases, then this many extra guard blocks
_UPTURN_RUN = 3
_UPTURN_MARGIN = 5
_MAX_BLOCKS = 3000


@dataclass(frozen=True)
class GroundStateSolution:
    """Global ground state: winning block, total energy, unit amplitudes."""

    two_lambda_star: int
    energy: float
    amplitudes: np.ndarray
    block: ExcitationBlock

    @property
    def lambda_star(self) -> float:
        return self.two_lambda_star / 2.0


@dataclass(frozen=True)
class CriticalCoupling:
    """A level crossing E(lambda) = E(lambda+1) at coupling kappa_tilde."""

    two_lambda_from: int
    kappa_tilde: float
    residual: float

    @property
    def lambda_from(self) -> float:
        return self.two_lambda_from / 2.0

    @property
    def lambda_to(self) -> float:
        return self.two_lambda_from / 2.0 + 1.0


def block_ground_energy(params: ModelParams, lam) -> float:
    """Total energy lambda + min eig of the excitation-lambda block."""
    block = build_block(params, lam)
    return block.two_lambda / 2.0 + lowest_eigenpair(block.matrix)[0]


def ground_state_at(params: ModelParams, kappa: float | None = None, axis: str = "auto") -> GroundStateSolution:
    """Resolve the global ground state by scanning excitation blocks upward.

    The scan starts at lambda = -N/2 and stops once the per-block energy has
    risen for three consecutive blocks (the block minima are unimodal in
    lambda) plus a five-block guard margin.  Exact ties within 1e-12 resolve
    to the smaller excitation number.

    Parameters
    ----------
    params : ModelParams
    kappa : float, optional
        If given, replaces the coupling on ``axis`` first.
    axis : str
        Coupling axis passed to ``ModelParams.with_coupling``.
    """
    if kappa is not None:
        params = params.with_coupling(kappa, axis)
    best_two_lam = None
    best_energy = math.inf
    prev_energy = math.inf
    run = 0
    margin_left = None
    two_lam = params.min_two_lambda
    for _ in range(_MAX_BLOCKS):
        lam = two_lam / 2.0
        energy = block_ground_energy(params, lam)
        if energy < best_energy - _TIE_TOL:
            best_energy = energy
            best_two_lam = two_lam
        run = run + 1 if energy > prev_energy else 0
        prev_energy = energy
        if margin_left is None and run >= _UPTURN_RUN:
            margin_left = _UPTURN_MARGIN
        elif margin_left is not None:
            margin_left -= 1
            if margin_left <= 0:
                break
        two_lam += 2
    else:
        raise SearchFailureError(
            f"per-block energies kept decreasing after {_MAX_BLOCKS} blocks; "
            "ground-state scan aborted"
        )
    block = build_block(params, best_two_lam / 2.0)
    value, vector = lowest_eigenpair(block.matrix)
    return GroundStateSolution(
        two_lambda_star=best_two_lam,
        energy=best_two_lam / 2.0 + value,
        amplitudes=vector,
        block=block,
    )


def _gap(params: ModelParams, two_lam_from: int, kappa: float, axis: str) -> float:
    at = params.with_coupling(kappa, axis)
    return block_ground_energy(at, two_lam_from / 2.0 + 1.0) - block_ground_energy(
        at, two_lam_from / 2.0
    )


def find_critical_coupling(
    params: ModelParams,
    lambda_from,
    axis: str = "auto",
    kappa_tol: float = 1e-12,
) -> CriticalCoupling:
    """Locate the crossing E(lambda_from) = E(lambda_from + 1) by bisection.

    The gap is positive as kappa -> 0+ and negative at large kappa; the
    bracket starts at [1e-8, 1] and doubles its upper end until the sign
    flips.  Bisection is used deliberately: the per-block minima can swap
    interior character, kinking the gap's derivative, and bisection does not
    care.

    Raises
    ------
    NoCrossingError
        If the gap is already negative at kappa -> 0+ (the lower block never
        becomes the ground state on this axis) or no sign change is found
        before kappa = 2**16.
    """
    two_lam = 2 * params.n_spins * 0  # placeholder for readability
    del two_lam
    from .model import _as_two_lambda  # local import to reuse validation

    two_lam_from = _as_two_lambda(params, lambda_from)
    lo = _KAPPA_EPS
    f_lo = _gap(params, two_lam_from, lo, axis)
    if f_lo <= 0.0:
        raise NoCrossingError(
            f"energy gap is non-positive already at kappa = {lo}; block "
            f"lambda = {two_lam_from / 2} never hosts the ground state on this axis"
        )
    hi = 1.0
    f_hi = _gap(params, two_lam_from, hi, axis)
    while f_hi > 0.0:
        lo, f_lo = hi, f_hi
        hi *= 2.0
        if hi > _KAPPA_CAP:
            raise NoCrossingError(
                f"no sign change of the energy gap up to kappa = {_KAPPA_CAP}"
            )
        f_hi = _gap(params, two_lam_from, hi, axis)
    while hi - lo > kappa_tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = _gap(params, two_lam_from, mid, axis)
        if f_mid > 0.0:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    kappa_tilde = 0.5 * (lo + hi)
    residual = abs(_gap(params, two_lam_from, kappa_tilde, axis))
    return CriticalCoupling(two_lambda_from=two_lam_from, kappa_tilde=kappa_tilde, residual=residual)


def first_critical_analytic(n_spins: int, r: float) -> float:
    """First critical coupling sqrt((1 + r)/N) for any N and detuning r."""
    if n_spins < 1:
        raise DomainError(f"n_spins must be >= 1 (got {n_spins})")
    r = float(r)
    if not r > -1.0:
        raise DomainError(f"detuning must be > -1 (got {r})")
    return math.sqrt((1.0 + r) / n_spins)


def gsi_sequence(params: ModelParams, lambda_max, axis: str = "auto") -> list[CriticalCoupling]:
    """Successive crossings for lambda = -N/2 ... lambda_max, strictly increasing.

    If early blocks never host the ground state on the chosen axis (possible
    in the two-mode model with a strong fixed second coupling), the missing
    leading crossings are skipped and the sequence starts at the observed
    first crossing.  A missing crossing after the sequence has started, or a
    non-increasing pair, raises CertificationError.
    """
    from .model import _as_two_lambda

    two_lam_max = _as_two_lambda(params, lambda_max)
    crossings: list[CriticalCoupling] = []
    for two_lam in range(params.min_two_lambda, two_lam_max + 1, 2):
        try:
            crossing = find_critical_coupling(params, two_lam / 2.0, axis=axis)
        except NoCrossingError:
            if crossings:
                raise CertificationError(
                    f"crossing sequence broke after lambda = {crossings[-1].lambda_from}: "
                    f"no crossing found for lambda = {two_lam / 2}"
                )
            continue
        if crossings and crossing.kappa_tilde <= crossings[-1].kappa_tilde + _TIE_TOL:
            raise CertificationError(
                "critical couplings are not strictly increasing: "
                f"kappa({crossings[-1].lambda_from}) = {crossings[-1].kappa_tilde} vs "
                f"kappa({crossing.lambda_from}) = {crossing.kappa_tilde}"
            )
        crossings.append(crossing)
    return crossings


def crossings_in_range(
    params: ModelParams,
    kappa_lo: float,
    kappa_hi: float,
    axis: str = "auto",
    max_blocks: int = 200,
) -> list[CriticalCoupling]:
    """All crossings with kappa_tilde inside [kappa_lo, kappa_hi]."""
    found: list[CriticalCoupling] = []
    started = False
    two_lam = params.min_two_lambda
    for _ in range(max_blocks):
        try:
            crossing = find_critical_coupling(params, two_lam / 2.0, axis=axis)
        except NoCrossingError:
            if started:
                break
            two_lam += 2
            continue
        started = True
        if crossing.kappa_tilde > kappa_hi:
            break
        if crossing.kappa_tilde >= kappa_lo:
            found.append(crossing)
        two_lam += 2
    return found


@dataclass(frozen=True)
class PhaseDiagram:
    """Boundary curves kappa_tilde(lambda; r) of the ground-state phase diagram."""

    n_spins: int
    r_values: tuple[float, ...]
    crossings: tuple[tuple[CriticalCoupling, ...], ...]

    def boundary(self, lambda_from) -> np.ndarray:
        """kappa_tilde of the lambda_from -> lambda_from + 1 boundary per r (NaN if absent)."""
        two_lam = int(round(2 * float(lambda_from)))
        out = np.full(len(self.r_values), np.nan)
        for i, row in enumerate(self.crossings):
            for crossing in row:
                if crossing.two_lambda_from == two_lam:
                    out[i] = crossing.kappa_tilde
                    break
        return out


def phase_diagram(n_spins: int, r_grid, lambda_max) -> PhaseDiagram:
    """Crossing sequences of the single-mode model over a detuning grid."""
    r_values = tuple(float(r) for r in r_grid)
    rows = []
    for r in r_values:
        params = ModelParams(n_spins=n_spins, detuning_r=r)
        rows.append(tuple(gsi_sequence(params, lambda_max)))
    return PhaseDiagram(n_spins=n_spins, r_values=r_values, crossings=tuple(rows))


@dataclass(frozen=True)
class ConditionCheck:
    """One numeric certification entry."""

    condition: str
    two_lambda: int
    passed: bool
    detail: str

    @property
    def lam(self) -> float:
        return self.two_lambda / 2.0


@dataclass(frozen=True)
class GsiCertification:
    """Per-lambda, per-condition report of the sequential-crossing structure."""

    r: float
    checks: tuple[ConditionCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[ConditionCheck]:
        return [c for c in self.checks if not c.passed]


def certify_sequential_gsi(
    r: float,
    lambda_max,
    n_spins: int = 2,
    kappa_points: int = 400,
) -> GsiCertification:
    """Numerically certify the sequential level-crossing structure.

    Checks, per excitation number up to lambda_max:

    * per-block energies decrease monotonically with coupling (all blocks
      above the lowest, whose energy is constant);
    * the gap E(lambda+1) - E(lambda) decreases monotonically and changes
      sign exactly once on the sampled range;
    * at each crossing the next block is still strictly higher,
      E(lambda+2) > E(lambda+1), which forces the crossings into a strictly
      increasing sequence.

    Failures are recorded as report entries, not raised.
    """
    params = ModelParams(n_spins=n_spins, detuning_r=float(r))
    from .model import _as_two_lambda

    two_lam_max = _as_two_lambda(params, lambda_max)
    sequence = gsi_sequence(params, two_lam_max / 2.0)
    kappa_hi = 1.3 * max(c.kappa_tilde for c in sequence)
    kappas = np.linspace(kappa_hi / kappa_points, kappa_hi, kappa_points)

    two_lams = list(range(params.min_two_lambda, two_lam_max + 5, 2))
    energies = {}
    for two_lam in two_lams:
        energies[two_lam] = np.array(
            [block_ground_energy(params.with_coupling(float(k)), two_lam / 2.0) for k in kappas]
        )

    checks: list[ConditionCheck] = []
    scale = max(1.0, max(float(np.max(np.abs(e))) for e in energies.values()))
    mono_tol = 1e-12 * scale

    for two_lam in two_lams:
        if two_lam == params.min_two_lambda:
            continue  # lowest block: constant energy, exempt by construction
        rises = np.diff(energies[two_lam])
        worst = float(np.max(rises)) if rises.size else 0.0
        checks.append(
            ConditionCheck(
                condition="monotone_energy",
                two_lambda=two_lam,
                passed=worst <= mono_tol,
                detail=f"max energy increase {worst:.3e} over {kappa_points} points",
            )
        )

    for two_lam in range(params.min_two_lambda, two_lam_max + 1, 2):
        gap = energies[two_lam + 2] - energies[two_lam]
        rises = np.diff(gap)
        monotone = float(np.max(rises)) <= mono_tol
        signs = np.sign(gap[np.abs(gap) > 1e-13])
        flips = int(np.count_nonzero(np.diff(signs)))
        checks.append(
            ConditionCheck(
                condition="single_crossing",
                two_lambda=two_lam,
                passed=monotone and flips == 1,
                detail=f"gap monotone: {monotone}, sign changes: {flips}",
            )
        )

    for crossing in sequence:
        at = params.with_coupling(crossing.kappa_tilde)
        upper = block_ground_energy(at, crossing.lambda_from + 2.0)
        lower = block_ground_energy(at, crossing.lambda_from + 1.0)
        margin = upper - lower
        checks.append(
            ConditionCheck(
                condition="gap_at_crossing",
                two_lambda=crossing.two_lambda_from,
                passed=margin > 1e-9,
                detail=f"E(lambda+2) - E(lambda+1) = {margin:.6e} at kappa = {crossing.kappa_tilde:.6f}",
            )
        )

    for earlier, later in zip(sequence, sequence[1:]):
        checks.append(
            ConditionCheck(
                condition="increasing_crossings",
                two_lambda=earlier.two_lambda_from,
                passed=later.kappa_tilde > earlier.kappa_tilde + _TIE_TOL,
                detail=f"{earlier.kappa_tilde:.10f} -> {later.kappa_tilde:.10f}",
            )
        )

    return GsiCertification(r=float(r), checks=tuple(checks))


@dataclass(frozen=True)
class DetuningOrdering:
    """Critical couplings of one crossing at negative, zero, positive detuning."""

    crossing_index: int
    kappa_negative: float
    kappa_zero: float
    kappa_positive: float

    @property
    def strictly_increasing(self) -> bool:
        return self.kappa_negative < self.kappa_zero < self.kappa_positive


def verify_detuning_ordering(
    n_spins: int,
    crossing_index: int,
    r_negative: float,
    r_positive: float,
) -> DetuningOrdering:
    """Compare the i-th critical coupling across detunings (i = 1 is the first).

    Red detuning lowers every critical coupling, blue detuning raises it; the
    report carries the three values and whether they are strictly ordered.
    """
    if crossing_index < 1:
        raise DomainError("crossing_index counts from 1")
    if not (float(r_negative) < 0.0 < float(r_positive)):
        raise DomainError("expected r_negative < 0 < r_positive")
    lam_from = -n_spins / 2.0 + (crossing_index - 1)
    values = []
    for r in (r_negative, 0.0, r_positive):
        params = ModelParams(n_spins=n_spins, detuning_r=float(r))
        values.append(find_critical_coupling(params, lam_from).kappa_tilde)
    return DetuningOrdering(
        crossing_index=crossing_index,
        kappa_negative=values[0],
        kappa_zero=values[1],
        kappa_positive=values[2],
    )
