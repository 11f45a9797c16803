"""Independent reference computations used by the tests.

Nothing here imports the package: Hamiltonians are built from bit
manipulation rather than Kronecker products, time evolution is integrated
with classic RK4, partial traces go through ``einsum``.
"""

import numpy as np


def spin_z(k, site, n_spins):
    """I^z eigenvalue of ``site`` (1-based, spin 1 = MSB) in basis state ``k``."""
    return 0.5 if (k >> (n_spins - site)) & 1 else -0.5


def ising_hamiltonian(n_spins, J, amplitudes, omega0=0.0, drive_scale=1.0):
    """Bit-rule construction of sum_n [omega0 I^z_n + a_n I^x_n] + J sum I^z I^z.

    ``amplitudes`` maps site -> transverse amplitude a_n (I^x has matrix
    element 1/2 between states differing in that one bit).
    """
    dim = 2**n_spins
    h = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        zs = [spin_z(k, s, n_spins) for s in range(1, n_spins + 1)]
        h[k, k] = omega0 * sum(zs) + J * sum(zs[i] * zs[i + 1] for i in range(n_spins - 1))
        for site, a in amplitudes.items():
            flipped = k ^ (1 << (n_spins - site))
            h[flipped, k] += drive_scale * a * 0.5
    return h


def rk4_von_neumann(h, rho0, t_end, dt, sample_times):
    """Integrate d rho/dt = -i [H, rho] with fixed-step RK4; return states at ``sample_times``."""
    h = np.asarray(h, dtype=complex)
    rho = np.asarray(rho0, dtype=complex).copy()

    def f(r):
        return -1j * (h @ r - r @ h)

    n_steps = int(round(t_end / dt))
    wanted = {int(round(t / dt)): t for t in sample_times}
    out = {}
    if 0 in wanted:
        out[wanted[0]] = rho.copy()
    for step in range(1, n_steps + 1):
        k1 = f(rho)
        k2 = f(rho + 0.5 * dt * k1)
        k3 = f(rho + 0.5 * dt * k2)
        k4 = f(rho + dt * k3)
        rho = rho + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        if step in wanted:
            out[wanted[step]] = rho.copy()
    return [out[t] for t in sample_times]


def partial_trace_einsum(rho, keep, n_spins):
    """Reduced state of the sites in ``keep`` (1-based, ascending) via einsum."""
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    row = list(letters[:n_spins])
    col = list(letters[n_spins : 2 * n_spins])
    for s in range(1, n_spins + 1):
        if s not in keep:
            col[s - 1] = row[s - 1]
    out = "".join(row[s - 1] for s in keep) + "".join(col[s - 1] for s in keep)
    r = np.einsum("".join(row) + "".join(col) + "->" + out, rho.reshape([2] * (2 * n_spins)))
    d = 2 ** len(keep)
    return r.reshape(d, d)


def pure_concurrence(psi):
    """2 |ad - bc| for a|00> + b|01> + c|10> + d|11>."""
    a, b, c, d = psi
    return 2 * abs(a * d - b * c)


def werner_concurrence(p):
    return max(0.0, (3 * p - 1) / 2)


def random_density_matrix(rng, dim, rank=None):
    rank = dim if rank is None else rank
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
