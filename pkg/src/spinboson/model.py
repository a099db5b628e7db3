"""Conserved-excitation blocks of the spin-boson interaction Hamiltonian.

N spins of level splitting 1 (all energies in units of the spin splitting,
hbar = 1) couple to one or two boson modes.  The full Hamiltonian splits as
H = H0 + HI with H0 = Jz + sum of photon number operators; H0 and HI commute,
so HI is block diagonal over the eigenvalues lambda of H0 (the excitation
number, lambda = m + n for one mode, lambda = m + n_a + n_b for two).  Each
block is a small real symmetric matrix built here exactly; total energies are
E = lambda + h with h an eigenvalue of the block.

Only the maximal spin sector j = N/2 is represented; it contains the ground
state.  Couplings are taken real and nonnegative (a phase on the mode
operators removes any complex phase without changing the spectrum).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError

__all__ = [
    "SecondMode",
    "ModelParams",
    "BlockBasisState",
    "ExcitationBlock",
    "build_single_mode_block",
    "build_two_mode_block",
    "build_block",
    "block_dimension",
]


def _check_detuning(name: str, value: float) -> float:
    value = float(value)
    if not value > -1.0:
        raise DomainError(f"{name} must be > -1 (got {value})")
    return value


def _check_coupling(name: str, value: float) -> float:
    value = float(value)
    if not value >= 0.0:
        raise DomainError(f"{name} must be >= 0 (got {value})")
    return value


@dataclass(frozen=True)
class SecondMode:
    """Detuning and coupling of an optional second boson mode."""

    detuning_rb: float
    coupling_kappa_b: float

    def __post_init__(self):
        _check_detuning("detuning_rb", self.detuning_rb)
        _check_coupling("coupling_kappa_b", self.coupling_kappa_b)


@dataclass(frozen=True)
class ModelParams:
    """Model parameters, all dimensionless (energies in units of the spin splitting).

    Single-mode model: ``detuning_r`` is the mode detuning r = omega/omega0 - 1
    and ``coupling_kappa`` the coupling kappa = g/omega0.

    Two-mode model (``second_mode`` set): ``coupling_kappa`` is the mode-a
    coupling, ``first_mode_detuning_ra`` the mode-a detuning (0 by default,
    i.e. mode a on resonance), and the second mode carries (r_b, kappa_b).
    ``detuning_r`` is ignored in that case.
    """

    n_spins: int
    detuning_r: float = 0.0
    coupling_kappa: float = 0.0
    second_mode: SecondMode | None = None
    first_mode_detuning_ra: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n_spins, (int, np.integer)) or self.n_spins < 1:
            raise DomainError(f"n_spins must be a positive integer (got {self.n_spins!r})")
        object.__setattr__(self, "n_spins", int(self.n_spins))
        _check_detuning("detuning_r", self.detuning_r)
        _check_detuning("first_mode_detuning_ra", self.first_mode_detuning_ra)
        _check_coupling("coupling_kappa", self.coupling_kappa)

    @property
    def is_two_mode(self) -> bool:
        return self.second_mode is not None

    @property
    def two_j(self) -> int:
        """Twice the total spin; j = N/2 exactly."""
        return self.n_spins

    @property
    def min_two_lambda(self) -> int:
        """Twice the smallest excitation number, lambda_min = -N/2."""
        return -self.n_spins

    def with_coupling(self, kappa: float, axis: str = "auto") -> "ModelParams":
        """Return a copy with the coupling on the given axis replaced.

        axis:
            "auto"  -- single-mode coupling, or both couplings tied
                       (kappa_a = kappa_b = kappa) for a two-mode model;
            "tied"  -- both couplings of a two-mode model;
            "a"     -- first-mode coupling only;
            "b"     -- second-mode coupling only.
        """
        kappa = _check_coupling("kappa", kappa)
        if axis == "auto":
            axis = "tied" if self.is_two_mode else "a"
        if axis == "a":
            return replace(self, coupling_kappa=kappa)
        if axis == "tied":
            if not self.is_two_mode:
                return replace(self, coupling_kappa=kappa)
            second = replace(self.second_mode, coupling_kappa_b=kappa)
            return replace(self, coupling_kappa=kappa, second_mode=second)
        if axis == "b":
            if not self.is_two_mode:
                raise DomainError("coupling axis 'b' requires a two-mode model")
            second = replace(self.second_mode, coupling_kappa_b=kappa)
            return replace(self, second_mode=second)
        raise DomainError(f"unknown coupling axis {axis!r}")


@dataclass(frozen=True)
class BlockBasisState:
    """One basis ket |j, m>|n...> of an excitation block.

    The spin projection is stored as ``two_m = 2m`` so that half-integer m
    (odd N) stays exact.
    """

    two_m: int
    photon_numbers: tuple[int, ...]

    @property
    def m(self) -> float:
        return self.two_m / 2.0

    @property
    def total_photons(self) -> int:
        return sum(self.photon_numbers)


@dataclass(frozen=True)
class ExcitationBlock:
    """The interaction Hamiltonian restricted to one excitation number.

    ``two_lambda = 2*lambda`` keeps half-integer excitation numbers exact.
    ``matrix`` is real symmetric; for the single-mode model it is tridiagonal.
    """

    two_lambda: int
    basis: tuple[BlockBasisState, ...]
    matrix: np.ndarray

    @property
    def lam(self) -> float:
        return self.two_lambda / 2.0

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _as_two_lambda(params: ModelParams, lam) -> int:
    """Validate an excitation number against the block structure; return 2*lambda."""
    two_lam = 2.0 * float(lam)
    rounded = round(two_lam)
    if abs(two_lam - rounded) > 1e-9:
        raise DomainError(f"excitation number must be integer or half-integer (got {lam})")
    rounded = int(rounded)
    if (rounded + params.n_spins) % 2 != 0:
        raise DomainError(
            f"excitation number {lam} incompatible with N = {params.n_spins}: "
            f"lambda + N/2 must be a nonnegative integer"
        )
    if rounded < params.min_two_lambda:
        raise DomainError(
            f"excitation number {lam} below the minimum -N/2 = {-params.n_spins / 2}"
        )
    return rounded


def _ladder_factor(two_j: int, two_m: int) -> float:
    # j(j+1) - m(m-1) = (j+m)(j-m+1), evaluated in integer arithmetic via 2m
    return ((two_j + two_m) * (two_j - two_m + 2)) / 4.0


def build_single_mode_block(params: ModelParams, lam) -> ExcitationBlock:
    """Build the excitation block of the single-mode model.

    The basis is ordered by ascending photon number, which makes the matrix
    tridiagonal with diagonal n*r and off-diagonal
    kappa * sqrt(n+1) * sqrt(j(j+1) - m(m-1)) between photon numbers n, n+1.

    Parameters
    ----------
    params : ModelParams
        Must describe a single-mode model.
    lam : int or half-integer
        Excitation number, >= -N/2 and congruent to N/2 mod 1.
    """
    if params.is_two_mode:
        raise DomainError("single-mode block requested for a two-mode model")
    two_lam = _as_two_lambda(params, lam)
    two_j = params.two_j
    r = params.detuning_r
    kappa = params.coupling_kappa

    # m descends from min(j, lambda) to -j as n = lambda - m ascends
    two_m_top = min(two_j, two_lam)
    basis = []
    for two_m in range(two_m_top, -two_j - 2, -2):
        n = (two_lam - two_m) // 2
        basis.append(BlockBasisState(two_m=two_m, photon_numbers=(n,)))

    dim = len(basis)
    mat = np.zeros((dim, dim))
    for k, state in enumerate(basis):
        n = state.photon_numbers[0]
        mat[k, k] = n * r
        if k + 1 < dim:
            elem = kappa * math.sqrt(n + 1) * math.sqrt(_ladder_factor(two_j, state.two_m))
            mat[k, k + 1] = elem
            mat[k + 1, k] = elem
    return ExcitationBlock(two_lambda=two_lam, basis=tuple(basis), matrix=mat)


def build_two_mode_block(params: ModelParams, lam) -> ExcitationBlock:
    """Build the excitation block of the two-mode model.

    Basis states |j, m>|n_a, n_b> with m + n_a + n_b = lambda, ordered by
    descending m and, within an m sector, ascending n_b.  Diagonal entries are
    r_a*n_a + r_b*n_b; each mode contributes ladder elements
    kappa_x * sqrt(n_x) * sqrt(j(j+1) - m(m+1)) linking (m, n_x) to
    (m+1, n_x - 1).
    """
    if not params.is_two_mode:
        raise DomainError("two-mode block requested for a single-mode model")
    two_lam = _as_two_lambda(params, lam)
    two_j = params.two_j
    ra = params.first_mode_detuning_ra
    rb = params.second_mode.detuning_rb
    ka = params.coupling_kappa
    kb = params.second_mode.coupling_kappa_b

    basis = []
    index = {}
    two_m_top = min(two_j, two_lam)
    for two_m in range(two_m_top, -two_j - 2, -2):
        n_total = (two_lam - two_m) // 2
        for n_b in range(n_total + 1):
            n_a = n_total - n_b
            index[(two_m, n_a, n_b)] = len(basis)
            basis.append(BlockBasisState(two_m=two_m, photon_numbers=(n_a, n_b)))

    dim = len(basis)
    mat = np.zeros((dim, dim))
    for i, state in enumerate(basis):
        n_a, n_b = state.photon_numbers
        mat[i, i] = ra * n_a + rb * n_b
        raising = math.sqrt(_ladder_factor(two_j, state.two_m + 2))
        if n_a > 0 and (state.two_m + 2, n_a - 1, n_b) in index:
            j = index[(state.two_m + 2, n_a - 1, n_b)]
            elem = ka * math.sqrt(n_a) * raising
            mat[i, j] = elem
            mat[j, i] = elem
        if n_b > 0 and (state.two_m + 2, n_a, n_b - 1) in index:
            j = index[(state.two_m + 2, n_a, n_b - 1)]
            elem = kb * math.sqrt(n_b) * raising
            mat[i, j] = elem
            mat[j, i] = elem
    return ExcitationBlock(two_lambda=two_lam, basis=tuple(basis), matrix=mat)


def build_block(params: ModelParams, lam) -> ExcitationBlock:
    """Build the excitation block appropriate for the model (one or two modes)."""
    if params.is_two_mode:
        return build_two_mode_block(params, lam)
    return build_single_mode_block(params, lam)


def block_dimension(params: ModelParams, lam) -> int:
    """Dimension of the excitation block, without building its matrix."""
    two_lam = _as_two_lambda(params, lam)
    two_j = params.two_j
    two_m_top = min(two_j, two_lam)
    n_m = (two_m_top + two_j) // 2 + 1
    if not params.is_two_mode:
        return n_m
    # each m sector holds lambda - m + 1 photon splittings
    return sum((two_lam - two_m) // 2 + 1 for two_m in range(two_m_top, -two_j - 2, -2))
