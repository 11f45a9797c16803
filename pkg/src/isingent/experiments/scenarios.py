"""Scenario catalog and the streaming scenario runner.

Catalog entries live in ``catalog.json`` next to this module. Custom
catalogs use the same schema. Pair entries may refer to the chain length as
``"N"`` or ``"N-k"``, so one entry covers several chain lengths.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from isingent.evolution import TimeGrid, iter_evolve
from isingent.hilbert import hermitian_eig, unitarity_error
from isingent.model import AllDrive, SelectiveDrive, SpinChainConfig, build_hamiltonian
from isingent.observables import concurrence_pair, polarization
from isingent.states import density_matrix_errors, initial_state

from isingent.experiments.series import TimeSeries

SCENARIO_IDS = (
    "fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig3", "fig4",
    "fig5", "fig6ab", "fig6c", "fig7", "custom",
)  # fmt: skip


@dataclass(frozen=True)
class Scenario:
    id: str
    config: SpinChainConfig
    init: str
    pairs: tuple[tuple[int, int], ...]
    spins: tuple[int, ...]
    grid: TimeGrid = field(default_factory=TimeGrid)

    def __post_init__(self):
        if self.id not in SCENARIO_IDS:
            raise ValueError(f"unknown scenario id {self.id!r}")
        n = self.config.n_spins
        for m, k in self.pairs:
            if not 1 <= m < k <= n:
                raise ValueError(f"pair ({m}, {k}) invalid for a {n}-spin chain")
        for s in self.spins:
            if not 1 <= s <= n:
                raise ValueError(f"spin {s} invalid for a {n}-spin chain")

    @property
    def channel_names(self) -> list[str]:
        return [f"P_{s}" for s in self.spins] + [f"C_{m}_{n}" for m, n in self.pairs]

    @property
    def label(self) -> str:
        return f"{self.id}_N{self.config.n_spins}"


_N_EXPR = re.compile(r"^N(?:-(\d+))?$")


def _site(value, n_spins: int) -> int:
    if isinstance(value, int):
        return value
    match = _N_EXPR.match(str(value).replace(" ", ""))
    if not match:
        raise ValueError(f"cannot interpret spin index {value!r}")
    return n_spins - int(match.group(1) or 0)


def _drive(spec: dict) -> tuple[float, AllDrive | SelectiveDrive]:
    kind = spec.get("kind", "all")
    if kind == "all":
        return float(spec["omega1"]), AllDrive()
    if kind == "selective":
        return 0.0, SelectiveDrive(int(spec["m"]), int(spec["n"]), float(spec["omega_x"]), spec.get("omega_x_n"))
    raise ValueError(f"unknown drive kind {kind!r}")


def scenario_from_entry(scenario_id: str, entry: dict, n_spins: int) -> Scenario:
    omega1, drive = _drive(entry["drive"])
    config = SpinChainConfig(n_spins=n_spins, J=float(entry.get("J", 1.0)), omega1=omega1, drive=drive)
    pairs = tuple((_site(a, n_spins), _site(b, n_spins)) for a, b in entry["pairs"])
    spins = entry.get("spins", "all")
    spins = tuple(range(1, n_spins + 1)) if spins == "all" else tuple(_site(s, n_spins) for s in spins)
    grid = TimeGrid(float(entry.get("t_start", 0.0)), float(entry.get("t_end", 40.0)), float(entry.get("dt", 0.01)))
    return Scenario(scenario_id, config, entry["init"], pairs, spins, grid)


def load_catalog(path: str | Path | None = None) -> dict[str, dict]:
    if path is None:
        text = resources.files("isingent.experiments").joinpath("catalog.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)


def catalog_scenarios(name: str, n_spins: int | None = None, catalog: dict | None = None) -> list[Scenario]:
    """One :class:`Scenario` per chain length of catalog entry ``name``."""
    catalog = load_catalog() if catalog is None else catalog
    try:
        entry = catalog[name]
    except KeyError:
        raise ValueError(f"unknown scenario {name!r}; choose from {', '.join(sorted(catalog))}") from None
    scenario_id = name if name in SCENARIO_IDS else "custom"
    n_values = [n_spins] if n_spins is not None else entry["n_values"]
    return [scenario_from_entry(scenario_id, entry, n) for n in n_values]


def run_scenario(s: Scenario, validate: bool = False) -> TimeSeries:
    """Evolve the scenario's initial state and fold observables per grid point.

    States are not stored. With ``validate`` the worst deviations from the
    density-matrix axioms, purity drift and propagator unitarity over the
    whole trajectory are recorded in ``TimeSeries.diagnostics``.
    """
    h = build_hamiltonian(s.config)
    eig = hermitian_eig(h.matrix)
    rho0 = initial_state(s.init, s.config.n_spins)
    count = s.grid.count
    pol = {n: np.empty(count) for n in s.spins}
    conc = {p: np.empty(count) for p in s.pairs}
    diag = {"trace": 0.0, "hermiticity": 0.0, "min_eigenvalue": np.inf, "purity_drift": 0.0, "unitarity": 0.0}
    purity0 = float(np.real(np.vdot(rho0, rho0)))
    for k, (t, rho) in enumerate(iter_evolve(h, rho0, s.grid, eig=eig)):
        for n in s.spins:
            pol[n][k] = polarization(rho, n)
        for m, n in s.pairs:
            conc[(m, n)][k] = concurrence_pair(rho, m, n)
        if validate:
            errs = density_matrix_errors(rho)
            diag["trace"] = max(diag["trace"], errs["trace"])
            diag["hermiticity"] = max(diag["hermiticity"], errs["hermiticity"])
            diag["min_eigenvalue"] = min(diag["min_eigenvalue"], errs["min_eigenvalue"])
            diag["purity_drift"] = max(diag["purity_drift"], abs(errs["purity"] - purity0))
            elapsed = t - s.grid.t_start
            diag["unitarity"] = max(diag["unitarity"], unitarity_error(eig.propagator(elapsed)))
    channels = {f"P_{n}": pol[n] for n in s.spins}
    channels.update({f"C_{m}_{n}": conc[(m, n)] for m, n in s.pairs})
    return TimeSeries(s.grid, channels, diag if validate else {})


def run_scenarios(scenarios: list[Scenario], jobs: int = 1, validate: bool = False) -> list[TimeSeries]:
    """Run independent scenarios, optionally on a thread pool; order is preserved."""
    if jobs <= 1:
        return [run_scenario(s, validate) for s in scenarios]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda s: run_scenario(s, validate), scenarios))
