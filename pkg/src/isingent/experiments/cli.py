"""Command-line entry point: ``isingent {simulate,scenario,peaks,domino}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from isingent.domino import amplifier_gain, domino_unitary
from isingent.evolution import TimeGrid
from isingent.hilbert import NumericalValidityError
from isingent.model import AllDrive, SelectiveDrive, SpinChainConfig
from isingent.states import basis_projector, bitstring_index

from isingent.experiments.scenarios import Scenario, catalog_scenarios, load_catalog, run_scenario
from isingent.experiments.series import atomic_write, emit, emit_svg, find_peaks, read_csv

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for item in filter(None, (p.strip() for p in text.split(","))):
        try:
            a, b = (int(x) for x in item.split("-"))
        except ValueError:
            raise UsageError(f"bad pair {item!r}; expected e.g. '1-2'") from None
        pairs.append((min(a, b), max(a, b)))
    return tuple(pairs)


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="isingent", description="Entanglement dynamics in driven Ising spin chains")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sim = sub.add_parser("simulate", help="run one custom configuration")
    sim.add_argument("--n", type=int, required=True)
    sim.add_argument("--j", type=float, default=1.0)
    sim.add_argument("--omega1", type=float, default=0.15)
    sim.add_argument("--drive", default="all", help="'all' or 'm,n' for a selective pair")
    sim.add_argument("--omega-x", type=float, default=None)
    sim.add_argument("--init", choices=["all-up", "first-down", "bell12"], default="all-up")
    sim.add_argument("--t-max", type=float, default=40.0)
    sim.add_argument("--dt", type=float, default=0.01)
    sim.add_argument("--pairs", default="1-2")
    sim.add_argument("--spins", default=None, help="comma list; default all spins")
    sim.add_argument("--format", choices=["csv", "json"], default="csv")
    sim.add_argument("--out", required=True)
    sim.add_argument("--svg", default=None)

    sc = sub.add_parser("scenario", help="run a catalog scenario")
    sc.add_argument("name")
    sc.add_argument("--n", type=int, default=None)
    sc.add_argument("--out-dir", required=True)
    sc.add_argument("--catalog", default=None, help="alternative catalog JSON")
    sc.add_argument("--format", choices=["csv", "json"], default="csv")

    pk = sub.add_parser("peaks", help="list local maxima of one CSV channel")
    pk.add_argument("--in", dest="input", required=True)
    pk.add_argument("--channel", required=True)
    pk.add_argument("--min-height", type=float, default=0.0)

    dm = sub.add_parser("domino", help="apply the CNOT cascade to a basis state")
    dm.add_argument("--n", type=int, required=True)
    dm.add_argument("--seed-state", required=True, help="bitstring, spin 1 first")
    return p


def _simulate(args) -> None:
    if args.drive == "all":
        drive, omega1 = AllDrive(), args.omega1
    else:
        sites = _parse_ints(args.drive)
        if len(sites) != 2:
            raise UsageError(f"--drive must be 'all' or 'm,n', got {args.drive!r}")
        m, n = sorted(sites)
        omega_x = args.omega_x if args.omega_x is not None else args.omega1
        drive, omega1 = SelectiveDrive(m, n, omega_x), 0.0
    config = SpinChainConfig(n_spins=args.n, J=args.j, omega1=omega1, drive=drive)
    spins = _parse_ints(args.spins) if args.spins else tuple(range(1, args.n + 1))
    scenario = Scenario(
        "custom", config, args.init, _parse_pairs(args.pairs), spins, TimeGrid(0.0, args.t_max, args.dt)
    )
    series = run_scenario(scenario)
    emit(series, args.format, args.out)
    if args.svg:
        emit_svg(series, list(series.channels), args.svg, title=scenario.label)


def _scenario(args) -> None:
    catalog = load_catalog(args.catalog)
    out_dir = Path(args.out_dir)
    summary = {}
    for s in catalog_scenarios(args.name, args.n, catalog):
        series = run_scenario(s)
        emit(series, args.format, out_dir / f"{s.label}.{args.format}")
        c_names = [c for c in series.channels if c.startswith("C_")]
        p_names = [c for c in series.channels if c.startswith("P_")]
        emit_svg(series, c_names, out_dir / f"{s.label}_concurrence.svg", title=s.label)
        emit_svg(series, p_names, out_dir / f"{s.label}_polarization.svg", title=s.label)
        summary[s.label] = {c: [p.as_dict() for p in find_peaks(series, c, 1e-6)[:5]] for c in c_names}
    atomic_write(out_dir / f"{args.name}_peaks.json", json.dumps(summary, indent=2) + "\n")


def _peaks(args) -> None:
    series = read_csv(args.input)
    if args.channel not in series.channels:
        raise UsageError(f"unknown channel {args.channel!r}")
    print(json.dumps([p.as_dict() for p in find_peaks(series, args.channel, args.min_height)]))


def _domino(args) -> None:
    bits = args.seed_state
    if len(bits) != args.n:
        raise UsageError(f"seed state {bits!r} must have {args.n} bits")
    rho = basis_projector(bitstring_index(bits), args.n)
    gate = domino_unitary(args.n)
    final = gate.apply_to_index(bitstring_index(bits))
    gain = amplifier_gain(rho, gate)
    print(json.dumps({"final_state": format(final, f"0{args.n}b"), "gain": gain}))


_COMMANDS = {"simulate": _simulate, "scenario": _scenario, "peaks": _peaks, "domino": _domino}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except NumericalValidityError as exc:
        print(f"isingent: numerical validity failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (UsageError, ValueError, FileNotFoundError, KeyError) as exc:
        print(f"isingent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
