"""Dense operator algebra on the N-spin Hilbert space.

Basis convention used everywhere in the package: basis index ``k`` in
``[0, 2**N)`` stores spin ``n`` (1-based) in bit ``N - n`` of ``k``, so spin 1
is the most significant bit. Bit value 1 is ``|1>`` (spin up, I^z = +1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np
from numpy.typing import NDArray

ComplexMatrix = NDArray[np.complex128]

HERMITIAN_ATOL = 1e-12

_SITE_OPERATORS = {
    "X": np.array([[0.0, 0.5], [0.5, 0.0]], dtype=np.complex128),
    "Z": np.array([[-0.5, 0.0], [0.0, 0.5]], dtype=np.complex128),
}


class NumericalValidityError(ArithmeticError):
    """A numerical result violated a validity tolerance."""


def site_operator(kind: str) -> ComplexMatrix:
    """Spin-1/2 angular momentum projection ``I^x`` or ``I^z`` in the (|0>, |1>) basis."""
    try:
        return _SITE_OPERATORS[kind.upper()].copy()
    except KeyError:
        raise ValueError(f"unknown site operator kind {kind!r}; expected 'X' or 'Z'") from None


def _as_operator(op: str | np.ndarray) -> np.ndarray:
    return site_operator(op) if isinstance(op, str) else np.asarray(op)


def lift(op: str | np.ndarray, site: int, n_spins: int) -> ComplexMatrix:
    """Embed a single-spin operator at ``site`` (1-based) of an ``n_spins`` chain."""
    if n_spins < 1:
        raise ValueError(f"n_spins must be >= 1, got {n_spins}")
    if not 1 <= site <= n_spins:
        raise ValueError(f"site {site} out of range [1, {n_spins}]")
    op = _as_operator(op)
    left = np.eye(2 ** (site - 1))
    right = np.eye(2 ** (n_spins - site))
    return np.kron(np.kron(left, op), right).astype(np.complex128)


def kron_all(factors) -> ComplexMatrix:
    return reduce(np.kron, factors, np.ones((1, 1), dtype=np.complex128))


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def hermiticity_error(a: np.ndarray) -> float:
    return float(np.max(np.abs(a - dagger(a)))) if a.size else 0.0


def check_hermitian(a: np.ndarray, atol: float = HERMITIAN_ATOL) -> None:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericalValidityError("matrix has non-finite entries")
    err = hermiticity_error(a)
    if err > atol:
        raise ValueError(f"matrix is not Hermitian: max |A - A^dagger| = {err:.3e} > {atol:.1e}")


def n_spins_of(a: np.ndarray) -> int:
    dim = a.shape[0]
    n = dim.bit_length() - 1
    if dim < 2 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    return n


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenpairs of a Hermitian matrix, ``H = V diag(e) V^dagger``.

    ``eigenvalues`` are ascending; ``eigenvectors`` holds them column-wise.
    """

    eigenvalues: NDArray[np.float64]
    eigenvectors: ComplexMatrix

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> ComplexMatrix:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ dagger(v)

    def phases(self, t: float) -> NDArray[np.complex128]:
        return np.exp(-1j * self.eigenvalues * t)

    def propagator(self, t: float) -> ComplexMatrix:
        return propagator(self, t)


def hermitian_eig(h: np.ndarray, atol: float = HERMITIAN_ATOL) -> SpectralDecomposition:
    h = np.asarray(h, dtype=np.complex128)
    check_hermitian(h, atol)
    # eigh only reads one triangle; symmetrise so both halves count.
    e, v = np.linalg.eigh(0.5 * (h + dagger(h)))
    return SpectralDecomposition(eigenvalues=e, eigenvectors=v)


def propagator(eig: SpectralDecomposition, t: float) -> ComplexMatrix:
    """``U(t) = exp(-i H t)`` from the spectral decomposition of ``H``."""
    if not np.isfinite(t):
        raise ValueError(f"time must be finite, got {t}")
    v = eig.eigenvectors
    return (v * eig.phases(t)) @ dagger(v)


def unitarity_error(u: np.ndarray) -> float:
    return float(np.max(np.abs(dagger(u) @ u - np.eye(u.shape[0]))))
