"""Figure rendering from sweep CSVs.

Consumes the sweep CSV contract of the spincarnot CLI (column list below)
and renders three figure types:

  fig2  work and net heats versus driving time for one hot temperature
  fig3  eta/eta_carnot versus driving time for all hot temperatures
  fig4  inner friction per unitary stroke, with coherence/population subpanels

Data is plotted exactly as read: no smoothing or interpolation, since the
non-monotone structure at intermediate driving times is meaningful.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

EXPECTED_COLUMNS = [
    "tau_ms", "t_hot_pev", "t_cold_pev",
    "q_ab", "q_cpc", "q_cd", "q_apa", "q_in", "q_out", "work",
    "eta", "eta_carnot", "lag",
    "srel_c", "srel_a", "coh_c", "pop_c", "coh_a", "pop_a", "mode",
]

# coherence + population must reproduce the relative entropy columns
SPLIT_RESIDUAL_TOL = 1e-8

FIGURES = ("fig2", "fig3", "fig4")


class SchemaError(ValueError):
    """The CSV does not match the documented sweep contract."""


@dataclass
class FigureSpec:
    input_csv: Path
    figure: str
    output_image: Path
    temps_to_plot: list[float] = field(default_factory=list)


@dataclass
class SweepRow:
    tau: float
    t_hot: float
    t_cold: float
    work: float
    q_in: float
    q_out: float
    eta: float | None
    eta_carnot: float
    srel_c: float
    srel_a: float
    coh_c: float
    pop_c: float
    coh_a: float
    pop_a: float


def _parse_optional(text: str) -> float | None:
    return None if text == "" else float(text)


def load_sweep(path: Path) -> list[SweepRow]:
    """Read and validate a sweep CSV; raises SchemaError on contract breaks."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in EXPECTED_COLUMNS if c not in header]
        if missing:
            raise SchemaError(f"missing column(s): {', '.join(missing)}")
        rows = []
        for rec in reader:
            rows.append(
                SweepRow(
                    tau=float(rec["tau_ms"]),
                    t_hot=float(rec["t_hot_pev"]),
                    t_cold=float(rec["t_cold_pev"]),
                    work=float(rec["work"]),
                    q_in=float(rec["q_in"]),
                    q_out=float(rec["q_out"]),
                    eta=_parse_optional(rec["eta"]),
                    eta_carnot=float(rec["eta_carnot"]),
                    srel_c=float(rec["srel_c"]),
                    srel_a=float(rec["srel_a"]),
                    coh_c=float(rec["coh_c"]),
                    pop_c=float(rec["pop_c"]),
                    coh_a=float(rec["coh_a"]),
                    pop_a=float(rec["pop_a"]),
                )
            )
    if not rows:
        raise SchemaError("CSV contains no data rows")
    return rows


def check_split_residuals(rows: list[SweepRow]) -> float:
    """Largest |srel - (coh + pop)| over both strokes; aborts rendering if large."""
    worst = 0.0
    for r in rows:
        worst = max(
            worst,
            abs(r.srel_c - (r.coh_c + r.pop_c)),
            abs(r.srel_a - (r.coh_a + r.pop_a)),
        )
    if worst > SPLIT_RESIDUAL_TOL:
        raise SchemaError(
            f"coherence/population split residual {worst:.3e} exceeds "
            f"{SPLIT_RESIDUAL_TOL:g}; refusing to plot inconsistent data"
        )
    return worst


def _select_temps(rows: list[SweepRow], requested: list[float]) -> list[float]:
    available = sorted({r.t_hot for r in rows})
    if not requested:
        return available
    selected = [t for t in available if any(abs(t - q) < 1e-9 for q in requested)]
    if not selected:
        raise SchemaError(
            f"no rows match requested hot temperatures {requested}; "
            f"available: {available}"
        )
    return selected


def _series(rows, t_hot):
    sub = sorted((r for r in rows if abs(r.t_hot - t_hot) < 1e-9),
                 key=lambda r: r.tau)
    if not sub:
        raise SchemaError(f"no rows at T_H = {t_hot}")
    return sub


def render_fig2(rows, temps, ax):
    t_hot = temps[0]
    sub = _series(rows, t_hot)
    taus = [r.tau for r in sub]
    ax.plot(taus, [r.work for r in sub], "-", label="work")
    ax.plot(taus, [r.q_in for r in sub], "--", label="q_in")
    ax.plot(taus, [r.q_out for r in sub], ":", label="q_out")
    ax.axhline(0.0, color="grey", lw=0.5)
    ax.set_xscale("log")
    ax.set_xlabel("driving time tau [ms]")
    ax.set_ylabel("energy per cycle [peV]")
    ax.set_title(f"work and net heats, T_H = {t_hot:g} peV")
    ax.legend()


def render_fig3(rows, temps, ax):
    styles = ("-", "--", "-.", ":")
    for t_hot, style in zip(temps, styles * 4):
        # undefined eta (q_in <= 0) and negative eta (work < 0) are outside
        # heat-engine operation; the ratio is only meaningful on [0, 1]
        sub = [r for r in _series(rows, t_hot)
               if r.eta is not None and r.eta >= 0.0]
        if not sub:
            continue
        ax.plot(
            [r.tau for r in sub],
            [r.eta / r.eta_carnot for r in sub],
            style,
            label=f"T_H = {t_hot:g} peV",
        )
    ax.set_xscale("log")
    ax.set_ylim(0.0, 1.05)
    ax.set_xlabel("driving time tau [ms]")
    ax.set_ylabel("eta / eta_carnot")
    ax.set_title("efficiency relative to the Carnot bound")
    ax.legend()


def render_fig4(rows, temps, fig):
    check_split_residuals(rows)
    axes = fig.subplots(2, 2)
    for col, (srel_attr, coh_attr, pop_attr, bath, name) in enumerate(
        (
            ("srel_c", "coh_c", "pop_c", "t_cold", "compression"),
            ("srel_a", "coh_a", "pop_a", "t_hot", "expansion"),
        )
    ):
        ax_fric, ax_split = axes[0][col], axes[1][col]
        for t_hot in temps:
            sub = _series(rows, t_hot)
            taus = [r.tau for r in sub]
            fric = [getattr(r, bath) * getattr(r, srel_attr) for r in sub]
            ax_fric.plot(taus, fric, label=f"T_H = {t_hot:g} peV")
        sub = _series(rows, temps[0])
        taus = [r.tau for r in sub]
        ax_split.plot(taus, [getattr(r, coh_attr) for r in sub], "-",
                      label="coherence")
        ax_split.plot(taus, [getattr(r, pop_attr) for r in sub], "--",
                      label="population")
        for ax in (ax_fric, ax_split):
            ax.set_xscale("log")
            ax.set_xlabel("driving time tau [ms]")
            ax.legend()
        ax_fric.set_ylabel("inner friction [peV]")
        ax_fric.set_title(f"{name} stroke")
        ax_split.set_ylabel(f"split at T_H = {temps[0]:g} [nats]")
    fig.tight_layout()


def render(spec: FigureSpec) -> Path:
    """Render the requested figure and write it to spec.output_image."""
    if spec.figure not in FIGURES:
        raise SchemaError(f"unknown figure {spec.figure!r}; expected {FIGURES}")
    rows = load_sweep(spec.input_csv)
    temps = _select_temps(rows, spec.temps_to_plot)
    fig = plt.figure(figsize=(10, 7) if spec.figure == "fig4" else (7, 5))
    try:
        if spec.figure == "fig2":
            render_fig2(rows, temps, fig.subplots())
        elif spec.figure == "fig3":
            render_fig3(rows, temps, fig.subplots())
        else:
            render_fig4(rows, temps, fig)
        fig.savefig(spec.output_image)
    finally:
        plt.close(fig)
    return spec.output_image
