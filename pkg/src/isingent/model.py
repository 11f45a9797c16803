"""Ising-chain Hamiltonians in the lab and rotating frames.

Units: hbar = 1, energies in units of J, times in 1/J. The chain is open
(nearest-neighbour ZZ coupling between spins n and n+1, n < N).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from isingent.hilbert import ComplexMatrix, lift


@dataclass(frozen=True)
class AllDrive:
    """Resonant transverse field of amplitude ``omega1`` on every spin."""


@dataclass(frozen=True)
class SelectiveDrive:
    """Transverse field on spins ``m`` and ``n`` only.

    ``omega_x`` is shared by both spins unless ``omega_x_n`` gives the second
    spin its own amplitude.
    """

    m: int
    n: int
    omega_x: float
    omega_x_n: float | None = None

    @property
    def amplitudes(self) -> tuple[float, float]:
        return self.omega_x, self.omega_x if self.omega_x_n is None else self.omega_x_n


Drive = Union[AllDrive, SelectiveDrive]


@dataclass(frozen=True)
class SpinChainConfig:
    n_spins: int
    J: float = 1.0
    omega1: float = 0.15
    omega0: float | None = None
    drive: Drive = field(default_factory=AllDrive)

    def __post_init__(self):
        if self.n_spins < 1:
            raise ValueError(f"n_spins must be >= 1, got {self.n_spins}")
        if not self.J >= 0:
            raise ValueError(f"J must be non-negative, got {self.J}")
        if self.omega1 < 0:
            raise ValueError(f"omega1 must be non-negative, got {self.omega1}")
        if self.omega0 is not None and not self.omega0 > 0:
            raise ValueError(f"omega0 must be positive, got {self.omega0}")
        if isinstance(self.drive, SelectiveDrive):
            d = self.drive
            if not 1 <= d.m < d.n <= self.n_spins:
                raise ValueError(
                    f"selective drive needs 1 <= m < n <= N, got m={d.m}, n={d.n}, N={self.n_spins}"
                )


@dataclass(frozen=True)
class Hamiltonian:
    matrix: ComplexMatrix
    frame: Literal["rotating", "lab"] = "rotating"
    t: float | None = None

    @property
    def n_spins(self) -> int:
        return self.matrix.shape[0].bit_length() - 1


def zz_coupling(n_spins: int, J: float) -> ComplexMatrix:
    """``J * sum_n I_n^z I_{n+1}^z`` for an open chain."""
    dim = 2**n_spins
    h = np.zeros((dim, dim), dtype=np.complex128)
    for n in range(1, n_spins):
        h += lift("Z", n, n_spins) @ lift("Z", n + 1, n_spins)
    return J * h


def total_spin(kind: str, n_spins: int, sites=None) -> ComplexMatrix:
    sites = range(1, n_spins + 1) if sites is None else sites
    dim = 2**n_spins
    out = np.zeros((dim, dim), dtype=np.complex128)
    for n in sites:
        out += lift(kind, n, n_spins)
    return out


def build_h_rot(config: SpinChainConfig) -> Hamiltonian:
    if not isinstance(config.drive, AllDrive):
        raise ValueError("build_h_rot requires the all-spin drive; use build_h_sel")
    n = config.n_spins
    h = config.omega1 * total_spin("X", n) + zz_coupling(n, config.J)
    return Hamiltonian(h.real.astype(np.complex128))


def build_h_sel(config: SpinChainConfig) -> Hamiltonian:
    drive = config.drive
    if not isinstance(drive, SelectiveDrive):
        raise ValueError("build_h_sel requires a SelectiveDrive")
    n = config.n_spins
    wm, wn = drive.amplitudes
    h = wm * lift("X", drive.m, n) + wn * lift("X", drive.n, n) + zz_coupling(n, config.J)
    return Hamiltonian(h.real.astype(np.complex128))


def build_hamiltonian(config: SpinChainConfig) -> Hamiltonian:
    """Rotating-frame Hamiltonian for whichever drive ``config`` carries."""
    if isinstance(config.drive, SelectiveDrive):
        return build_h_sel(config)
    return build_h_rot(config)


def _require_omega0(config: SpinChainConfig) -> float:
    if config.omega0 is None:
        raise ValueError("the lab frame needs omega0")
    return config.omega0


def lab_parts(config: SpinChainConfig) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Split the lab Hamiltonian as ``static + cos(omega0 t) * drive``."""
    omega0 = _require_omega0(config)
    n = config.n_spins
    if isinstance(config.drive, SelectiveDrive):
        wm, wn = config.drive.amplitudes
        transverse = wm * lift("X", config.drive.m, n) + wn * lift("X", config.drive.n, n)
    else:
        transverse = config.omega1 * total_spin("X", n)
    static = omega0 * total_spin("Z", n) + zz_coupling(n, config.J)
    return static, 2.0 * transverse


def build_h_lab(config: SpinChainConfig, t: float) -> Hamiltonian:
    """Lab-frame Hamiltonian at time ``t``: Zeeman + linearly polarised drive + ZZ."""
    if not np.isfinite(t):
        raise ValueError(f"time must be finite, got {t}")
    static, drive = lab_parts(config)
    return Hamiltonian(static + np.cos(config.omega0 * t) * drive, frame="lab", t=t)


def rotating_frame_unitary(t: float, config: SpinChainConfig) -> ComplexMatrix:
    """``exp(-i t omega0 sum_n I_n^z)``; diagonal in the computational basis."""
    omega0 = _require_omega0(config)
    mz = np.real(np.diag(total_spin("Z", config.n_spins)))
    return np.diag(np.exp(-1j * t * omega0 * mz))


def to_rotating_frame(rho_lab: np.ndarray, t: float, config: SpinChainConfig) -> ComplexMatrix:
    omega0 = _require_omega0(config)
    mz = np.real(np.diag(total_spin("Z", config.n_spins)))
    phase = np.exp(-1j * t * omega0 * mz)
    # U rho U^dagger with diagonal U is an elementwise phase.
    return phase[:, None] * np.asarray(rho_lab) * phase.conj()[None, :]
