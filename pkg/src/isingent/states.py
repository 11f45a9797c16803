"""Initial density matrices.

Pseudopure states are represented by their pure part only. The scaled
identity part is invisible to every observable and invariant under unitary
evolution, so dropping it leaves all dynamics unchanged.
"""

from __future__ import annotations

import numpy as np

from isingent.hilbert import ComplexMatrix, NumericalValidityError, hermiticity_error, kron_all
from isingent.model import total_spin

UP = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=np.complex128)
DOWN = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=np.complex128)

# Two-spin singlet-like block in (|00>, |01>, |10>, |11>).
BELL_BLOCK = 0.5 * np.array(
    [
        [0, 0, 0, 0],
        [0, 1, -1, 0],
        [0, -1, 1, 0],
        [0, 0, 0, 0],
    ],
    dtype=np.complex128,
)


def basis_projector(index: int, n_spins: int) -> ComplexMatrix:
    dim = 2**n_spins
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for {n_spins} spins")
    rho = np.zeros((dim, dim), dtype=np.complex128)
    rho[index, index] = 1.0
    return rho


def bitstring_index(bits: str) -> int:
    """Basis index of a product state written spin 1 first, e.g. ``'011'``."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"expected a non-empty string of 0/1, got {bits!r}")
    return int(bits, 2)


def all_up(n_spins: int) -> ComplexMatrix:
    if n_spins < 1:
        raise ValueError(f"n_spins must be >= 1, got {n_spins}")
    return basis_projector(2**n_spins - 1, n_spins)


def first_down(n_spins: int) -> ComplexMatrix:
    if n_spins < 2:
        raise ValueError(f"first_down needs at least 2 spins, got {n_spins}")
    return basis_projector(2 ** (n_spins - 1) - 1, n_spins)


def bell12(n_spins: int) -> ComplexMatrix:
    """Spins 1, 2 in the entangled block, the rest up."""
    if n_spins < 2:
        raise ValueError(f"bell12 needs at least 2 spins, got {n_spins}")
    return kron_all([BELL_BLOCK] + [UP] * (n_spins - 2))


def thermal_deviation(n_spins: int) -> ComplexMatrix:
    """High-temperature equilibrium deviation ``sum_n I_n^z``.

    Traceless, so not a density matrix; kept for NMR-style bookkeeping.
    """
    if n_spins < 1:
        raise ValueError(f"n_spins must be >= 1, got {n_spins}")
    return total_spin("Z", n_spins)


INITIAL_STATES = {
    "all-up": all_up,
    "first-down": first_down,
    "bell12": bell12,
}


def initial_state(name: str, n_spins: int) -> ComplexMatrix:
    try:
        factory = INITIAL_STATES[name]
    except KeyError:
        raise ValueError(f"unknown initial state {name!r}; choose from {sorted(INITIAL_STATES)}") from None
    return factory(n_spins)


def density_matrix_errors(rho: np.ndarray) -> dict[str, float]:
    """Deviations from the density-matrix axioms: Hermiticity, unit trace, positivity."""
    herm = hermiticity_error(rho)
    evals = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    return {
        "hermiticity": herm,
        "trace": float(abs(np.trace(rho) - 1.0)),
        "min_eigenvalue": float(evals[0]),
        "purity": float(np.real(np.vdot(rho, rho))),
    }


def check_density_matrix(rho: np.ndarray, atol: float = 1e-12, eig_atol: float = 1e-10) -> None:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise NumericalValidityError("density matrix has non-finite entries")
    errs = density_matrix_errors(rho)
    if errs["hermiticity"] > atol:
        raise ValueError(f"density matrix not Hermitian ({errs['hermiticity']:.2e})")
    if errs["trace"] > atol:
        raise ValueError(f"density matrix trace deviates from 1 by {errs['trace']:.2e}")
    if errs["min_eigenvalue"] < -eig_atol:
        raise ValueError(f"density matrix has negative eigenvalue {errs['min_eigenvalue']:.2e}")
