"""Polarization, two-spin reduced states and Wootters concurrence."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from isingent.hilbert import ComplexMatrix, NumericalValidityError, lift, n_spins_of

# Spin-flip matrix sigma_y (x) sigma_y in (|00>, |01>, |10>, |11>).
Q_MATRIX = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=np.float64,
)

IMAG_RESIDUAL_ATOL = 1e-10
R_EIGEN_ATOL = 1e-8


@dataclass(frozen=True)
class ReducedDensityMatrix:
    """State of spins ``pair = (m, n)``; first tensor slot is spin ``m``."""

    matrix: ComplexMatrix
    pair: tuple[int, int]


@dataclass(frozen=True)
class ConcurrenceInternals:
    q_matrix: NDArray[np.float64]
    rho_tilde: ComplexMatrix
    r_matrix: ComplexMatrix
    r_eigenvalues: NDArray[np.complex128]
    lambdas: NDArray[np.float64]  # descending
    concurrence: float


def _spin_sites(n_spins: int, *sites: int) -> None:
    for s in sites:
        if not 1 <= s <= n_spins:
            raise ValueError(f"spin index {s} out of range [1, {n_spins}]")


@lru_cache(maxsize=None)
def _z_diagonal(n: int, n_spins: int) -> NDArray[np.float64]:
    return np.real(np.diag(lift("Z", n, n_spins)))


def polarization(rho: np.ndarray, n: int) -> float:
    """``Tr(rho I_n^z)``."""
    rho = np.asarray(rho)
    n_spins = n_spins_of(rho)
    _spin_sites(n_spins, n)
    value = np.dot(np.diag(rho), _z_diagonal(n, n_spins))
    if abs(value.imag) > IMAG_RESIDUAL_ATOL:
        raise NumericalValidityError(f"polarization has imaginary residual {value.imag:.2e}")
    return float(value.real)


@lru_cache(maxsize=None)
def _pair_index_map(n_spins: int, m: int, n: int) -> NDArray[np.intp]:
    """Full basis index for each (pair state, environment configuration).

    Row ``2*a + b`` holds spin m = a, spin n = b; columns enumerate the
    ``2**(N-2)`` configurations of the remaining spins.
    """
    env_sites = [s for s in range(1, n_spins + 1) if s not in (m, n)]
    n_env = 2 ** len(env_sites)
    idx = np.zeros((4, n_env), dtype=np.intp)
    for pair_state in range(4):
        a, b = pair_state >> 1, pair_state & 1
        for env in range(n_env):
            k = (a << (n_spins - m)) | (b << (n_spins - n))
            for j, site in enumerate(env_sites):
                bit = (env >> (len(env_sites) - 1 - j)) & 1
                k |= bit << (n_spins - site)
            idx[pair_state, env] = k
    idx.setflags(write=False)
    return idx


def reduced_dm(rho: np.ndarray, m: int, n: int) -> ReducedDensityMatrix:
    """Trace out every spin except ``m`` and ``n`` (``m < n``)."""
    rho = np.asarray(rho)
    n_spins = n_spins_of(rho)
    if m == n:
        raise ValueError("reduced_dm needs two distinct spins")
    if m > n:
        raise ValueError(f"reduced_dm expects m < n, got ({m}, {n})")
    _spin_sites(n_spins, m, n)
    idx = _pair_index_map(n_spins, m, n)
    block = rho[idx[:, None, :], idx[None, :, :]].sum(axis=-1)
    return ReducedDensityMatrix(block, (m, n))


def spin_flip(rho2: np.ndarray) -> ComplexMatrix:
    """``Q rho* Q`` with conjugation in the computational basis."""
    return Q_MATRIX @ np.conj(rho2) @ Q_MATRIX


def _psd_sqrt(rho2: np.ndarray) -> ComplexMatrix:
    e, v = np.linalg.eigh(0.5 * (rho2 + rho2.conj().T))
    return (v * np.sqrt(np.clip(e, 0.0, None))) @ v.conj().T


def concurrence_internals(rdm: ReducedDensityMatrix | np.ndarray) -> ConcurrenceInternals:
    rho2 = np.asarray(rdm.matrix if isinstance(rdm, ReducedDensityMatrix) else rdm)
    if rho2.shape != (4, 4):
        raise ValueError(f"concurrence needs a 4x4 matrix, got {rho2.shape}")
    rho_tilde = spin_flip(rho2)
    r = rho2 @ rho_tilde
    w = np.linalg.eigvals(r)
    if np.max(np.abs(w.imag)) > R_EIGEN_ATOL or np.min(w.real) < -R_EIGEN_ATOL:
        raise NumericalValidityError(f"R eigenvalues {w} are not real non-negative; invalid two-spin state")
    # The square roots of eig(R) are the singular values of sqrt(rho) Q sqrt(rho)*.
    # The SVD gets small ones to machine precision; sqrt(eig) would only get ~1e-8.
    s = _psd_sqrt(rho2)
    lambdas = np.linalg.svd(s @ Q_MATRIX @ s.conj(), compute_uv=False)
    lambdas = np.sort(lambdas)[::-1]
    c = min(1.0, max(0.0, float(lambdas[0] - lambdas[1:].sum())))
    return ConcurrenceInternals(Q_MATRIX, rho_tilde, r, w, lambdas, c)


def concurrence(rdm: ReducedDensityMatrix | np.ndarray) -> float:
    return concurrence_internals(rdm).concurrence


def concurrence_pair(rho: np.ndarray, m: int, n: int) -> float:
    if m > n:
        m, n = n, m
    return concurrence(reduced_dm(rho, m, n))
