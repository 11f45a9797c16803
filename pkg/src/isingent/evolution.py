"""Unitary propagation of density matrices.

Two engines:

* :func:`evolve` / :func:`iter_evolve` for a time-independent Hamiltonian,
  exact at every grid point from a single eigendecomposition.
* :func:`evolve_lab` / :func:`iter_evolve_lab` for the driven lab-frame
  Hamiltonian, by midpoint piecewise-constant unitary steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from isingent.hilbert import ComplexMatrix, SpectralDecomposition, dagger, hermitian_eig
from isingent.model import Hamiltonian, SpinChainConfig, lab_parts
from isingent.states import check_density_matrix


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid ``t_start + k * dt`` for ``k < count``, times in 1/J."""

    t_start: float = 0.0
    t_end: float = 40.0
    dt: float = 0.01

    def __post_init__(self):
        if not (np.isfinite(self.t_start) and np.isfinite(self.t_end)):
            raise ValueError("grid bounds must be finite")
        if not self.t_end > self.t_start:
            raise ValueError(f"t_end ({self.t_end}) must exceed t_start ({self.t_start})")
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")

    @property
    def count(self) -> int:
        # Slack absorbs representation error, e.g. 40 / 0.01 = 4000.0000000000005.
        return math.floor((self.t_end - self.t_start) / self.dt + 1e-9) + 1

    @property
    def times(self) -> NDArray[np.float64]:
        return self.t_start + self.dt * np.arange(self.count)


@dataclass(frozen=True)
class Trajectory:
    grid: TimeGrid
    states: NDArray[np.complex128]  # (count, dim, dim)

    def __len__(self) -> int:
        return self.states.shape[0]

    def __getitem__(self, k: int) -> ComplexMatrix:
        return self.states[k]

    @property
    def times(self) -> NDArray[np.float64]:
        return self.grid.times


def _matrix(h: Hamiltonian | np.ndarray) -> np.ndarray:
    if isinstance(h, Hamiltonian):
        if h.frame != "rotating":
            raise ValueError("evolve needs a time-independent (rotating-frame) Hamiltonian")
        return h.matrix
    return np.asarray(h)


def iter_evolve(
    h: Hamiltonian | np.ndarray,
    rho0: np.ndarray,
    grid: TimeGrid,
    eig: SpectralDecomposition | None = None,
) -> Iterator[tuple[float, ComplexMatrix]]:
    """Yield ``(t, rho(t))`` for every grid point.

    ``rho0`` is the state at ``grid.t_start``. The propagation is done in the
    eigenbasis of ``h``, where it reduces to an elementwise phase.
    """
    rho0 = np.asarray(rho0, dtype=np.complex128)
    check_density_matrix(rho0)
    if eig is None:
        eig = hermitian_eig(_matrix(h))
    v = eig.eigenvectors
    v_dag = dagger(v)
    rho_eig = v_dag @ rho0 @ v
    for k, t in enumerate(grid.times):
        if k == 0:
            yield float(t), rho0.copy()
            continue
        phase = eig.phases(k * grid.dt)
        yield float(t), v @ (phase[:, None] * rho_eig * phase.conj()[None, :]) @ v_dag


def evolve(h: Hamiltonian | np.ndarray, rho0: np.ndarray, grid: TimeGrid) -> Trajectory:
    states = np.empty((grid.count,) + np.shape(rho0), dtype=np.complex128)
    for k, (_, rho) in enumerate(iter_evolve(h, rho0, grid)):
        states[k] = rho
    return Trajectory(grid, states)


def max_lab_substep(config: SpinChainConfig) -> float:
    if config.omega0 is None:
        raise ValueError("the lab frame needs omega0")
    coupling_limit = 0.01 / config.J if config.J > 0 else math.inf
    return min(coupling_limit, 0.02 * 2 * math.pi / config.omega0)


def iter_evolve_lab(
    config: SpinChainConfig,
    rho0: np.ndarray,
    grid: TimeGrid,
    substep: float | None = None,
) -> Iterator[tuple[float, ComplexMatrix]]:
    """Yield lab-frame ``(t, rho(t))`` at grid points.

    Each grid interval is split into equal substeps no longer than
    ``substep``; over each substep the Hamiltonian is frozen at its midpoint
    value and exponentiated exactly.
    """
    limit = max_lab_substep(config)
    if substep is None:
        substep = limit
    if not 0 < substep <= limit * (1 + 1e-12):
        raise ValueError(f"substep {substep} violates 0 < substep <= {limit:.6g}")
    rho = np.asarray(rho0, dtype=np.complex128)
    check_density_matrix(rho)
    static, drive = lab_parts(config)
    n_sub = max(1, math.ceil(grid.dt / substep - 1e-9))
    delta = grid.dt / n_sub
    yield float(grid.t_start), rho.copy()
    for k in range(1, grid.count):
        t0 = grid.t_start + (k - 1) * grid.dt
        for j in range(n_sub):
            t_mid = t0 + (j + 0.5) * delta
            h = static + np.cos(config.omega0 * t_mid) * drive
            u = hermitian_eig(h).propagator(delta)
            rho = u @ rho @ dagger(u)
        yield float(grid.t_start + k * grid.dt), rho


def evolve_lab(
    config: SpinChainConfig,
    rho0: np.ndarray,
    grid: TimeGrid,
    substep: float | None = None,
) -> Trajectory:
    states = np.empty((grid.count,) + np.shape(rho0), dtype=np.complex128)
    for k, (_, rho) in enumerate(iter_evolve_lab(config, rho0, grid, substep)):
        states[k] = rho
    return Trajectory(grid, states)
