"""CNOT-cascade picture of the spin-flip wave."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from isingent.hilbert import ComplexMatrix
from isingent.observables import polarization


@dataclass(frozen=True)
class GateUnitary:
    matrix: ComplexMatrix
    gates: tuple[tuple[int, int], ...]  # (control, target), in order of application

    @property
    def n_spins(self) -> int:
        return self.matrix.shape[0].bit_length() - 1

    def apply_to_index(self, index: int) -> int:
        """Image of a computational basis state under the permutation."""
        return int(np.argmax(np.abs(self.matrix[:, index])))


def cnot(control: int, target: int, n_spins: int) -> GateUnitary:
    """Flip ``target`` on basis states whose ``control`` bit is 1."""
    if control == target:
        raise ValueError("control and target must differ")
    for s in (control, target):
        if not 1 <= s <= n_spins:
            raise ValueError(f"qubit index {s} out of range [1, {n_spins}]")
    dim = 2**n_spins
    c_bit = 1 << (n_spins - control)
    t_bit = 1 << (n_spins - target)
    k = np.arange(dim)
    image = np.where(k & c_bit, k ^ t_bit, k)
    u = np.zeros((dim, dim), dtype=np.complex128)
    u[image, k] = 1.0
    return GateUnitary(u, ((control, target),))


def domino_unitary(n_spins: int) -> GateUnitary:
    """``CNOT_{N-1,N} ... CNOT_{2,3} CNOT_{1,2}``; ``CNOT_{1,2}`` acts first."""
    if n_spins < 2:
        raise ValueError(f"the domino cascade needs at least 2 spins, got {n_spins}")
    u = np.eye(2**n_spins, dtype=np.complex128)
    gates = []
    for m in range(1, n_spins):
        g = cnot(m, m + 1, n_spins)
        u = g.matrix @ u
        gates.extend(g.gates)
    return GateUnitary(u, tuple(gates))


def total_polarization(rho: np.ndarray) -> float:
    n_spins = rho.shape[0].bit_length() - 1
    return sum(polarization(rho, n) for n in range(1, n_spins + 1))


def apply(gate: GateUnitary, rho: np.ndarray) -> ComplexMatrix:
    u = gate.matrix
    return u @ rho @ u.conj().T


def amplifier_gain(rho: np.ndarray, gate: GateUnitary | None = None) -> float:
    """Change in total polarization produced by the cascade."""
    gate = domino_unitary(rho.shape[0].bit_length() - 1) if gate is None else gate
    return total_polarization(apply(gate, rho)) - total_polarization(rho)
