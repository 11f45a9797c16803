"""Exact simulation of entanglement dynamics in driven Ising spin-1/2 chains."""

from isingent.domino import GateUnitary, amplifier_gain, cnot, domino_unitary, total_polarization
from isingent.evolution import TimeGrid, Trajectory, evolve, evolve_lab, iter_evolve, iter_evolve_lab
from isingent.hilbert import (
    NumericalValidityError,
    SpectralDecomposition,
    hermitian_eig,
    lift,
    propagator,
    site_operator,
)
from isingent.model import (
    AllDrive,
    Hamiltonian,
    SelectiveDrive,
    SpinChainConfig,
    build_h_lab,
    build_h_rot,
    build_h_sel,
    build_hamiltonian,
    to_rotating_frame,
)
from isingent.observables import (
    ReducedDensityMatrix,
    concurrence,
    concurrence_internals,
    concurrence_pair,
    polarization,
    reduced_dm,
)
from isingent.states import all_up, bell12, first_down, initial_state, thermal_deviation

__version__ = "0.1.0"
