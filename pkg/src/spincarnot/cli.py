"""Command-line front end: single-cycle reports, grid sweeps, self-checks.

Exit codes: 0 success, 1 runtime/physics error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from .cycle import (
    CycleParams,
    CycleReport,
    ENGINE,
    run_cycle,
)
from .driving import KERNEL_BACKEND
from .errors import ConsistencyError, ConvergenceError, DomainError
from .state import mean_energy

DEFAULT_TEMPS_HOT = (16.5, 21.5, 26.5, 33.5)

CSV_COLUMNS = [
    "tau_ms", "t_hot_pev", "t_cold_pev",
    "q_ab", "q_cpc", "q_cd", "q_apa", "q_in", "q_out", "work",
    "eta", "eta_carnot", "lag",
    "srel_c", "srel_a", "coh_c", "pop_c", "coh_a", "pop_a", "mode",
]


def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    return format(value, ".12g")


def log_spaced(lo: float, hi: float, count: int) -> list[float]:
    if count == 1:
        return [lo]
    step = (math.log(hi) - math.log(lo)) / (count - 1)
    return [math.exp(math.log(lo) + k * step) for k in range(count)]


def _report_row(report: CycleReport) -> list[str]:
    p = report.params
    s = report.strokes
    values = [
        p.tau, p.T_H, p.T_L,
        s["AB"].q, s["CpC"].q, s["CD"].q, s["ApA"].q,
        report.q_in, report.q_out, report.work,
        report.eta, report.eta_carnot, report.lag,
        report.srel_c, report.srel_a,
        report.coh_c, report.pop_c, report.coh_a, report.pop_a,
    ]
    return [_fmt(v) for v in values] + [report.mode]


def _print_report(report: CycleReport, out) -> None:
    p = report.params
    print(f"cycle parameters", file=out)
    print(f"  nu_B = {p.nu_B:g} kHz, nu_C = {p.nu_C:g} kHz "
          f"(derived), nu_D = {p.nu_D:g} kHz, nu_A = {p.nu_A:g} kHz (derived)",
          file=out)
    print(f"  T_H = {p.T_H:g} peV, T_L = {p.T_L:g} peV, tau = {p.tau:g} ms, "
          f"tol = {p.tol:g}", file=out)
    print("per-stroke heat / work [peV]", file=out)
    for label in ("AB", "BCp", "CpC", "CD", "DAp", "ApA"):
        s = report.strokes[label]
        print(f"  {label:>3}: q = {s.q:+.9f}  w = {s.w:+.9f}", file=out)
    print("cycle totals [peV]", file=out)
    print(f"  q_in  = {report.q_in:+.9f}", file=out)
    print(f"  q_out = {report.q_out:+.9f}", file=out)
    print(f"  work  = {report.work:+.9f}", file=out)
    eta = "undefined" if report.eta is None else f"{report.eta:.9f}"
    lag = "undefined" if report.lag is None else f"{report.lag:.9f}"
    print("performance", file=out)
    print(f"  eta        = {eta}", file=out)
    print(f"  eta_carnot = {report.eta_carnot:.9f}", file=out)
    print(f"  lag        = {lag}", file=out)
    print(f"  mode       = {report.mode}", file=out)
    print("friction diagnostics", file=out)
    print(f"  fric_comp = {report.fric_comp:.9f} peV  "
          f"(srel_C = {report.srel_c:.9f} nats = coh {report.coh_c:.9f} "
          f"+ pop {report.pop_c:.9f})", file=out)
    print(f"  fric_exp  = {report.fric_exp:.9f} peV  "
          f"(srel_A = {report.srel_a:.9f} nats = coh {report.coh_a:.9f} "
          f"+ pop {report.pop_a:.9f})", file=out)


def _add_shared_flags(p: argparse.ArgumentParser, sweep: bool = False) -> None:
    p.add_argument("--nu-b", type=float, default=3.6, help="kHz (default 3.6)")
    p.add_argument("--nu-d", type=float, default=2.0, help="kHz (default 2.0)")
    p.add_argument("--t-cold", type=float, default=6.6, help="peV (default 6.6)")
    if sweep:
        p.add_argument("--t-hot", type=str,
                       default=",".join(str(t) for t in DEFAULT_TEMPS_HOT),
                       help="comma list of peV (default 16.5,21.5,26.5,33.5)")
    else:
        p.add_argument("--t-hot", type=float, default=16.5,
                       help="peV (default 16.5)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="propagation tolerance (default 1e-10)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincarnot",
        description="Six-stroke irreversible Carnot cycle on a driven spin-1/2",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cycle = sub.add_parser("cycle", help="run one cycle and print a report")
    _add_shared_flags(p_cycle)
    p_cycle.add_argument("--tau", type=float, required=True,
                         help="driving time per adiabatic stroke, ms")

    p_sweep = sub.add_parser("sweep", help="grid sweep over tau x T_H, CSV out")
    _add_shared_flags(p_sweep, sweep=True)
    p_sweep.add_argument("--tau-min", type=float, default=0.01)
    p_sweep.add_argument("--tau-max", type=float, default=2.0)
    p_sweep.add_argument("--tau-count", type=int, default=64)
    p_sweep.add_argument("--out", type=str, default="-",
                         help="CSV path (default standard output)")

    p_check = sub.add_parser("check", help="run invariant self-checks")
    _add_shared_flags(p_check, sweep=True)
    p_check.add_argument("--tau-min", type=float, default=1e-3)
    p_check.add_argument("--tau-max", type=float, default=10.0)
    p_check.add_argument("--tau-count", type=int, default=40)
    p_check.add_argument("--perturb", type=float, default=0.0,
                         help="inject a heat bias (negative control)")
    return parser


def _parse_temps(parser: argparse.ArgumentParser, text: str) -> list[float]:
    try:
        temps = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        parser.error(f"invalid --t-hot list: {text!r}")
    if not temps:
        parser.error("--t-hot list is empty")
    return temps


def _validate_base(parser, args, t_hot: float, tau: float | None) -> None:
    if args.nu_b <= 0 or args.nu_d <= 0:
        parser.error("frequencies must be positive")
    if args.t_cold <= 0 or t_hot <= args.t_cold:
        parser.error("need t-hot > t-cold > 0")
    if tau is not None and tau <= 0:
        parser.error("tau must be > 0")
    if not (0 < args.tol < 1):
        parser.error("tol must be in (0, 1)")


def cmd_cycle(parser, args) -> int:
    _validate_base(parser, args, args.t_hot, args.tau)
    params = CycleParams(args.nu_b, args.nu_d, args.t_cold, args.t_hot,
                         args.tau, args.tol)
    report = run_cycle(params)
    _print_report(report, sys.stdout)
    return 0


def _sweep_reports(args, temps, taus):
    for t_hot in temps:
        for tau in taus:
            yield run_cycle(
                CycleParams(args.nu_b, args.nu_d, args.t_cold, t_hot,
                            tau, args.tol)
            )


def cmd_sweep(parser, args) -> int:
    temps = _parse_temps(parser, args.t_hot)
    for t in temps:
        _validate_base(parser, args, t, None)
    if args.tau_min <= 0 or args.tau_max < args.tau_min or args.tau_count < 1:
        parser.error("need 0 < tau-min <= tau-max and tau-count >= 1")
    taus = log_spaced(args.tau_min, args.tau_max, args.tau_count)
    temps = sorted(temps)

    rows = ([_report_row(r)]
            for r in _sweep_reports(args, temps, taus))
    if args.out == "-":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for chunk in rows:
            writer.writerows(chunk)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for chunk in rows:
                writer.writerows(chunk)
    return 0


def cmd_check(parser, args) -> int:
    temps = _parse_temps(parser, args.t_hot)
    for t in temps:
        _validate_base(parser, args, t, None)
    taus = log_spaced(args.tau_min, args.tau_max, args.tau_count)

    residuals = {
        "friction identity |T*S_rel + q_relax| [peV]": 0.0,
        "efficiency lag identity |eta - (eta_C - lag)|": 0.0,
        "coherence split |srel - (coh + pop)| [nats]": 0.0,
        "first law per stroke |dU - (q + w)| [peV]": 0.0,
        "cycle closure |sum dU| [peV]": 0.0,
        "relaxation heat positivity max(q_relax)": 0.0,
        "hot-relaxation energy ordering": 0.0,
    }
    tolerances = [1e-8, 1e-8, 1e-10, 1e-10, 1e-9, 1e-12, 1e-12]

    for t_hot in sorted(temps):
        for tau in taus:
            p = CycleParams(args.nu_b, args.nu_d, args.t_cold, t_hot,
                            tau, args.tol)
            r = run_cycle(p)
            q_cpc = r.strokes["CpC"].q + args.perturb
            residuals["friction identity |T*S_rel + q_relax| [peV]"] = max(
                residuals["friction identity |T*S_rel + q_relax| [peV]"],
                abs(p.T_L * r.srel_c + q_cpc),
                abs(p.T_H * r.srel_a + r.strokes["ApA"].q),
            )
            if r.eta is not None and r.lag is not None:
                residuals["efficiency lag identity |eta - (eta_C - lag)|"] = max(
                    residuals["efficiency lag identity |eta - (eta_C - lag)|"],
                    abs(r.eta - (r.eta_carnot - r.lag)),
                )
            residuals["coherence split |srel - (coh + pop)| [nats]"] = max(
                residuals["coherence split |srel - (coh + pop)| [nats]"],
                abs(r.srel_c - (r.coh_c + r.pop_c)),
                abs(r.srel_a - (r.coh_a + r.pop_a)),
            )
            du_sum = 0.0
            for s in r.strokes.values():
                residuals["first law per stroke |dU - (q + w)| [peV]"] = max(
                    residuals["first law per stroke |dU - (q + w)| [peV]"],
                    abs(s.delta_u - (s.q + s.w)),
                )
                du_sum += s.delta_u
            residuals["cycle closure |sum dU| [peV]"] = max(
                residuals["cycle closure |sum dU| [peV]"], abs(du_sum)
            )
            residuals["relaxation heat positivity max(q_relax)"] = max(
                residuals["relaxation heat positivity max(q_relax)"],
                q_cpc, r.strokes["ApA"].q,
            )
            apa = r.strokes["ApA"]
            ordering = mean_energy(apa.h_in, apa.state_out) - mean_energy(
                apa.h_in, apa.state_in
            )
            residuals["hot-relaxation energy ordering"] = max(
                residuals["hot-relaxation energy ordering"], ordering
            )

    ok = True
    for (name, value), tol in zip(residuals.items(), tolerances):
        status = "ok" if value <= tol else "FAIL"
        if value > tol:
            ok = False
        print(f"{status:>4}  {name}: {value:.3e} (tol {tol:g})")
    print(f"kernel backend: {KERNEL_BACKEND}")
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"cycle": cmd_cycle, "sweep": cmd_sweep, "check": cmd_check}
    try:
        return handlers[args.command](parser, args)
    except (DomainError, ConvergenceError, ConsistencyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
