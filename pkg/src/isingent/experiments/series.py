"""Time series of observables: peak finding and CSV / JSON / SVG output."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from isingent.evolution import TimeGrid

CSV_FORMAT = "{:.12g}"


@dataclass
class TimeSeries:
    grid: TimeGrid
    channels: dict[str, NDArray[np.float64]]
    diagnostics: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for name, values in self.channels.items():
            if len(values) != self.grid.count:
                raise ValueError(f"channel {name!r} has {len(values)} samples, grid has {self.grid.count}")

    @property
    def times(self) -> NDArray[np.float64]:
        return self.grid.times

    def __getitem__(self, name: str) -> NDArray[np.float64]:
        try:
            return self.channels[name]
        except KeyError:
            raise KeyError(f"unknown channel {name!r}; available: {', '.join(self.channels)}") from None


@dataclass(frozen=True)
class Peak:
    t: float
    value: float
    index: int

    def as_dict(self) -> dict:
        return {"t": self.t, "value": self.value, "index": self.index}


def find_peaks(series: TimeSeries, channel: str, min_height: float = 0.0) -> list[Peak]:
    """Local maxima of ``channel`` above ``min_height``.

    A sample counts as a maximum when it rises strictly above its left
    neighbour and is not below its right one, so flat stretches give no peaks.
    Each maximum is refined with the parabola through it and its neighbours.
    """
    if min_height < 0:
        raise ValueError(f"min_height must be non-negative, got {min_height}")
    y = np.asarray(series[channel], dtype=float)
    dt = series.grid.dt
    t0 = series.grid.t_start
    peaks = []
    for i in range(1, len(y) - 1):
        if not (y[i] > y[i - 1] and y[i] >= y[i + 1] and y[i] > min_height):
            continue
        left, mid, right = y[i - 1], y[i], y[i + 1]
        curv = left - 2 * mid + right
        if curv < 0:
            shift = 0.5 * (left - right) / curv
            value = mid - 0.125 * (left - right) ** 2 / curv
        else:
            shift, value = 0.0, mid
        peaks.append(Peak(t=float(t0 + (i + shift) * dt), value=float(value), index=i))
    return peaks


def first_crossing(series: TimeSeries, channel: str, level: float) -> float:
    """Earliest grid time at which ``channel`` reaches ``level``; ``inf`` if never."""
    y = np.asarray(series[channel])
    hits = np.flatnonzero(y >= level)
    return float(series.times[hits[0]]) if hits.size else float("inf")


def atomic_write(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def to_csv(series: TimeSeries) -> str:
    names = list(series.channels)
    cols = [series.times] + [series.channels[n] for n in names]
    lines = [",".join(["t"] + names)]
    for row in zip(*cols):
        lines.append(",".join(CSV_FORMAT.format(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def to_json(series: TimeSeries) -> str:
    g = series.grid
    doc = {
        "grid": {"t_start": g.t_start, "t_end": g.t_end, "dt": g.dt},
        "channels": {name: [float(v) for v in vals] for name, vals in series.channels.items()},
    }
    return json.dumps(doc)


def emit(series: TimeSeries, fmt: str, path: str | os.PathLike) -> None:
    if fmt == "csv":
        text = to_csv(series)
    elif fmt == "json":
        text = to_json(series)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'json'")
    atomic_write(path, text)


def series_from_csv_text(text: str) -> TimeSeries:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][0] != "t":
        raise ValueError("CSV must start with a header whose first column is 't'")
    header, body = rows[0], rows[1:]
    data = np.array([[float(v) for v in row] for row in body], dtype=float).reshape(len(body), len(header))
    t = data[:, 0]
    if len(t) < 2:
        raise ValueError("need at least two samples to recover the time grid")
    dt = float(np.round(t[1] - t[0], 12))
    grid = TimeGrid(float(t[0]), float(t[-1]), dt)
    if grid.count != len(t):
        raise ValueError("CSV time column is not a uniform grid")
    return TimeSeries(grid, {name: data[:, j + 1] for j, name in enumerate(header[1:])})


def read_csv(path: str | os.PathLike) -> TimeSeries:
    return series_from_csv_text(Path(path).read_text())


def read_json(path: str | os.PathLike) -> TimeSeries:
    doc = json.loads(Path(path).read_text())
    g = doc["grid"]
    grid = TimeGrid(g["t_start"], g["t_end"], g["dt"])
    return TimeSeries(grid, {k: np.asarray(v, dtype=float) for k, v in doc["channels"].items()})


_PALETTE = ["#000000", "#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"]


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    span = hi - lo
    raw = span / n
    mag = 10 ** np.floor(np.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=raw)
    start = np.ceil(lo / step) * step
    return [float(v) for v in np.arange(start, hi + 1e-9 * span, step)]


def to_svg(series: TimeSeries, channels: list[str], title: str = "") -> str:
    if not channels:
        raise ValueError("emit_svg needs at least one channel")
    width, height = 720, 440
    left, right, top, bottom = 70, 170, 30, 50
    pw, ph = width - left - right, height - top - bottom
    t = series.times
    ys = [np.asarray(series[c], dtype=float) for c in channels]
    y_lo = min(float(y.min()) for y in ys)
    y_hi = max(float(y.max()) for y in ys)
    if y_hi - y_lo < 1e-12:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    t_lo, t_hi = float(t[0]), float(t[-1])

    def sx(v):
        return left + (v - t_lo) / (t_hi - t_lo) * pw

    def sy(v):
        return top + (y_hi - v) / (y_hi - y_lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{left + pw / 2:.2f}" y="18" text-anchor="middle">{title}</text>')
    out.append(
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#444444" stroke-width="1"/>'
    )
    for tv in _ticks(t_lo, t_hi):
        x = sx(tv)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="#444444"/>')
        out.append(f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle">{tv:g}</text>')
    for yv in _ticks(y_lo, y_hi):
        y = sy(yv)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="#444444"/>')
        out.append(f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end">{yv:.4g}</text>')
    out.append(f'<text x="{left + pw / 2:.2f}" y="{height - 10}" text-anchor="middle">Jt</text>')
    out.append(
        f'<text x="18" y="{top + ph / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {top + ph / 2:.2f})">value</text>'
    )
    for k, (name, y) in enumerate(zip(channels, ys)):
        color = _PALETTE[k % len(_PALETTE)]
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(t, y))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{pts}"/>')
    out.append('<g class="legend">')
    for k, name in enumerate(channels):
        color = _PALETTE[k % len(_PALETTE)]
        ly = top + 10 + 18 * k
        lx = left + pw + 15
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 24}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 30}" y="{ly + 4}">{name}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(series: TimeSeries, channels: list[str], path: str | os.PathLike, title: str = "") -> None:
    atomic_write(path, to_svg(series, channels, title))
