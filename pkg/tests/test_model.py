import numpy as np
import pytest

from isingent.hilbert import commutator, hermiticity_error, lift
from isingent.model import (
    SelectiveDrive,
    SpinChainConfig,
    build_h_lab,
    build_h_rot,
    build_h_sel,
    rotating_frame_unitary,
    to_rotating_frame,
)

from oracles import ising_hamiltonian, random_density_matrix


def test_h_rot_pure_coupling():
    h = build_h_rot(SpinChainConfig(2, J=1.0, omega1=0.0)).matrix
    np.testing.assert_array_equal(h, np.diag([0.25, -0.25, -0.25, 0.25]))


def test_h_rot_pure_transverse():
    h = build_h_rot(SpinChainConfig(2, J=0.0, omega1=0.15)).matrix
    for a in range(4):
        for b in range(4):
            hamming = bin(a ^ b).count("1")
            assert h[a, b] == (0.075 if hamming == 1 else 0.0)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_h_rot_matches_bit_rule_oracle(n):
    h = build_h_rot(SpinChainConfig(n, J=1.0, omega1=0.15)).matrix
    ref = ising_hamiltonian(n, 1.0, {s: 0.15 for s in range(1, n + 1)})
    assert np.max(np.abs(h - ref)) < 1e-15


def test_h_rot_is_real_symmetric():
    h = build_h_rot(SpinChainConfig(5, omega1=0.37)).matrix
    assert np.max(np.abs(h.imag)) < 1e-14
    assert hermiticity_error(h) < 1e-14


def test_h_rot_rejects_selective_drive():
    with pytest.raises(ValueError):
        build_h_rot(SpinChainConfig(3, drive=SelectiveDrive(1, 2, 0.3)))


def test_h_sel_entries():
    h = build_h_sel(SpinChainConfig(3, drive=SelectiveDrive(1, 2, 0.35))).matrix
    assert h[0b000, 0b100] == pytest.approx(0.175)
    for k in range(8):
        assert h[k, k ^ 0b001] == 0


def test_h_sel_n4_oracle_and_diagonal():
    cfg = SpinChainConfig(4, drive=SelectiveDrive(2, 3, 0.15))
    h = build_h_sel(cfg).matrix
    assert hermiticity_error(h) < 1e-14
    zz = build_h_rot(SpinChainConfig(4, omega1=0.0)).matrix
    np.testing.assert_array_equal(np.diag(h), np.diag(zz))
    ref = ising_hamiltonian(4, 1.0, {2: 0.15, 3: 0.15})
    assert np.max(np.abs(h - ref)) < 1e-15


def test_h_sel_distinct_amplitudes():
    h = build_h_sel(SpinChainConfig(3, drive=SelectiveDrive(1, 3, 0.2, omega_x_n=0.4))).matrix
    ref = ising_hamiltonian(3, 1.0, {1: 0.2, 3: 0.4})
    assert np.max(np.abs(h - ref)) < 1e-15


def test_h_sel_equals_h_rot_for_two_spins():
    a = build_h_rot(SpinChainConfig(2, omega1=0.27)).matrix
    b = build_h_sel(SpinChainConfig(2, drive=SelectiveDrive(1, 2, 0.27))).matrix
    np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize(("n", "m"), [(3, 1), (4, 2), (5, 1), (5, 3), (6, 4)])
def test_undriven_spins_are_frozen(n, m):
    h = build_h_sel(SpinChainConfig(n, drive=SelectiveDrive(m, m + 1, 0.35))).matrix
    for k in range(1, n + 1):
        if k in (m, m + 1):
            continue
        assert np.max(np.abs(commutator(lift("Z", k, n), h))) < 1e-13


@pytest.mark.parametrize(("m", "n"), [(0, 1), (2, 2), (3, 2), (1, 5)])
def test_selective_drive_range(m, n):
    with pytest.raises(ValueError):
        SpinChainConfig(4, drive=SelectiveDrive(m, n, 0.1))


def test_h_lab_diagonal_when_drive_phase_vanishes():
    cfg = SpinChainConfig(3, omega1=0.15, omega0=100.0)
    t = np.pi / (2 * cfg.omega0)
    h = build_h_lab(cfg, t).matrix
    off = h - np.diag(np.diag(h))
    assert np.max(np.abs(off)) < 1e-15


def test_h_lab_single_spin():
    cfg = SpinChainConfig(1, omega1=0.15, omega0=7.0)
    h = build_h_lab(cfg, 0.0).matrix
    np.testing.assert_allclose(h, 7.0 * np.diag([-0.5, 0.5]) + 2 * 0.15 * np.array([[0, 0.5], [0.5, 0]]))


def test_h_lab_matches_oracle():
    cfg = SpinChainConfig(2, J=1.0, omega1=0.15, omega0=100.0)
    t = 0.01
    h = build_h_lab(cfg, t).matrix
    amp = 2 * 0.15 * np.cos(100.0 * t)
    ref = ising_hamiltonian(2, 1.0, {1: amp, 2: amp}, omega0=100.0)
    assert np.max(np.abs(h - ref)) < 1e-13
    assert hermiticity_error(h) < 1e-14


def test_h_lab_requires_omega0():
    with pytest.raises(ValueError):
        build_h_lab(SpinChainConfig(2), 0.0)


def test_rotating_frame_identity_at_zero(rng):
    cfg = SpinChainConfig(3, omega0=50.0)
    rho = random_density_matrix(rng, 8)
    np.testing.assert_array_equal(to_rotating_frame(rho, 0.0, cfg), rho)


def test_rotating_frame_leaves_diagonal_states(rng):
    cfg = SpinChainConfig(3, omega0=50.0)
    rho = np.diag(rng.dirichlet(np.ones(8))).astype(complex)
    np.testing.assert_allclose(to_rotating_frame(rho, 1.234, cfg), rho, atol=1e-15)


def test_rotating_frame_full_period_matches_phase_oracle(rng):
    n, w0 = 3, 50.0
    cfg = SpinChainConfig(n, omega0=w0)
    rho = random_density_matrix(rng, 8)
    t = 2 * np.pi / w0
    mz = np.array([sum(0.5 if (k >> (n - s)) & 1 else -0.5 for s in range(1, n + 1)) for k in range(8)])
    u = np.diag(np.exp(-1j * t * w0 * mz))
    expected = u @ rho @ u.conj().T
    out = to_rotating_frame(rho, t, cfg)
    np.testing.assert_allclose(out, expected, atol=1e-13)
    # total-Iz values differ by integers, so a full period is a global phase
    np.testing.assert_allclose(out, rho, atol=1e-12)
    np.testing.assert_allclose(rotating_frame_unitary(t, cfg), u, atol=1e-15)


def test_rotating_frame_preserves_trace_and_spectrum(rng):
    cfg = SpinChainConfig(3, omega0=31.0)
    rho = random_density_matrix(rng, 8)
    out = to_rotating_frame(rho, 0.77, cfg)
    assert abs(np.trace(out) - 1) < 1e-14
    np.testing.assert_allclose(np.linalg.eigvalsh(out), np.linalg.eigvalsh(rho), atol=1e-13)
