"""Experiment runner producing deterministic CSV/JSON artifacts.

Four subcommands: page-curve, fidelity-sweep, qaoa, scaling.  Output is
byte-identical across runs with the same flags and seed, except for one
isolated timestamp metadata line.  The full resolved configuration is
embedded in every artifact.  Exit codes: 0 success, 2 usage error,
1 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

from .entropy import page_entropy, page_experiment
from .qaoa import run_ensemble, scaling_sweep

PAGE_CAP = 14
QAOA_CAP = 16


class UsageError(Exception):
    pass


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_rows(args, columns, rows, meta=None) -> None:
    config = {key: value for key, value in sorted(vars(args).items())
              if key not in ("handler", "out", "plot_script")
              and not key.startswith("_")}
    config["out"] = str(args.out)
    out = Path(args.out)
    if args.format == "json":
        payload = {
            "config": config,
            "meta": meta or {},
            "columns": list(columns),
            "rows": [list(row) for row in rows],
            "timestamp": _timestamp(),
        }
        out.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    lines = [f"# config={json.dumps(config, sort_keys=True)}"]
    if meta:
        lines.append(f"# meta={json.dumps(meta, sort_keys=True)}")
    lines.append(f"# timestamp={_timestamp()}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_format_cell(cell) for cell in row))
    out.write_text("\n".join(lines) + "\n")


_PLOT_TEMPLATE = """\
#!/usr/bin/env python3
# Re-plot {command} results from {csv_path}.
import numpy as np
import matplotlib.pyplot as plt

data = np.genfromtxt({csv_path!r}, delimiter=",", names=True, comments="#")
{body}
plt.tight_layout()
plt.savefig({png_path!r}, dpi=150)
print("wrote", {png_path!r})
"""

_PLOT_BODIES = {
    "page-curve": """\
plt.errorbar(data["n_a"], data["mean_entropy_nats"], yerr=data["stderr"],
             fmt="o", label="simulated")
plt.plot(data["n_a"], data["page_entropy_nats"], "-", label="analytical")
plt.xlabel("partition size")
plt.ylabel("entropy (nats)")
plt.legend()""",
    "fidelity-sweep": """\
for n in np.unique(data["N"]):
    rows = data[data["N"] == n]
    plt.plot(rows["chi"], rows["fidelity"], "o-", label=f"N={int(n)}")
plt.xscale("log", base=2)
plt.xlabel("bond cap")
plt.ylabel("fidelity")
plt.legend()""",
    "qaoa": """\
for chi in np.unique(data["chi"]):
    rows = data[data["chi"] == chi]
    plt.errorbar(rows["p"], rows["mean_energy"], yerr=rows["stderr_energy"],
                 fmt="o-", label=f"chi={int(chi)}")
plt.xlabel("depth")
plt.ylabel("mean energy")
plt.legend()""",
    "scaling": """\
for n in np.unique(data["N"]):
    rows = data[data["N"] == n]
    plt.plot(rows["lnchi_over_n"], rows["s_over_n"], "o-", label=f"N={int(n)}")
plt.xlabel("ln(chi)/N")
plt.ylabel("S/N")
plt.legend()""",
}


def _maybe_write_plot_script(args, command: str) -> None:
    if not getattr(args, "plot_script", None):
        return
    if args.format != "csv":
        raise UsageError("--plot-script requires --format csv")
    script = _PLOT_TEMPLATE.format(
        command=command,
        csv_path=str(args.out),
        png_path=str(Path(args.out).with_suffix(".png")),
        body=_PLOT_BODIES[command],
    )
    Path(args.plot_script).write_text(script)


def _check_even(n: int) -> None:
    if n % 2 != 0:
        raise UsageError("even qubit count required")


def _check_cap(n: int, cap: int, unsafe: bool) -> None:
    if n > cap and not unsafe:
        raise UsageError(
            f"qubit count {n} exceeds the default cap {cap}; "
            f"pass --unsafe to override")


def _cmd_page_curve(args) -> int:
    _check_even(args.qubits)
    _check_cap(args.qubits, PAGE_CAP, args.unsafe)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.samples == 1:
        print("warning: --samples 1 makes every stderr exactly 0",
              file=sys.stderr)
    per_bond, record = page_experiment(args.qubits, args.bond_dim,
                                       args.samples, args.seed,
                                       cap=max(20, args.qubits))
    rows = []
    for bond, stats in enumerate(per_bond, start=1):
        smaller = min(bond, args.qubits - bond)
        larger = args.qubits - smaller
        analytical = page_entropy(smaller, larger)
        rows.append((bond, bond, stats.mean, stats.stderr, analytical,
                     abs(stats.mean - analytical)))
    meta = {"qubits": args.qubits, "bond_dim": args.bond_dim,
            "samples": args.samples, "seed": args.seed,
            "fidelity": record.f_sim}
    _write_rows(args, ("bond_index", "n_a", "mean_entropy_nats", "stderr",
                       "page_entropy_nats", "abs_error"), rows, meta)
    _maybe_write_plot_script(args, "page-curve")
    return 0


def _cmd_fidelity_sweep(args) -> int:
    for n in args.qubits_list:
        _check_even(n)
        _check_cap(n, PAGE_CAP, args.unsafe)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    rows = []
    for n in args.qubits_list:
        for chi in args.bond_dims:
            per_bond, record = page_experiment(n, chi, args.samples,
                                               args.seed, cap=max(20, n))
            midpoint_mean = per_bond[n // 2 - 1].mean
            rows.append((n, chi, midpoint_mean / (n * math.log(2.0)),
                         record.f_sim))
    _write_rows(args, ("N", "chi", "normalized_entropy", "fidelity"), rows)
    _maybe_write_plot_script(args, "fidelity-sweep")
    return 0


def _cmd_qaoa(args) -> int:
    _check_even(args.qubits)
    _check_cap(args.qubits, QAOA_CAP, args.unsafe)
    if args.depth_max < 1:
        raise UsageError("--depth-max must be >= 1")
    if args.graphs < 1:
        raise UsageError("--graphs must be >= 1")
    rows = []
    for depth in range(1, args.depth_max + 1):
        for chi in args.bond_dims:
            result = run_ensemble(args.qubits, depth, chi, args.graphs,
                                  args.seed)
            rows.append((args.qubits, depth, chi,
                         result.mean_energy, result.stderr_energy,
                         result.mean_midpoint_entropy,
                         result.stderr_midpoint_entropy,
                         result.mean_avg_entropy,
                         result.mean_stddev_entropy))
    _write_rows(args, ("N", "p", "chi", "mean_energy", "stderr_energy",
                       "mean_midpoint_entropy", "stderr_entropy",
                       "avg_entropy", "stddev_entropy"), rows)
    _maybe_write_plot_script(args, "qaoa")
    return 0


def _cmd_scaling(args) -> int:
    for n in args.qubits_list:
        _check_even(n)
        _check_cap(n, QAOA_CAP, args.unsafe)
    records = scaling_sweep(args.qubits_list, args.bond_dims, depth=1,
                            seed=args.seed)
    rows = [(r.n_qubits, r.chi, r.s_over_n, r.lnchi_over_n, r.e_min,
             r.e_opt, r.ratio) for r in records]
    _write_rows(args, ("N", "chi", "s_over_n", "lnchi_over_n", "e_min",
                       "e_opt", "ratio"), rows)
    _maybe_write_plot_script(args, "scaling")
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0,
                        help="master seed, recorded in the output")
    parser.add_argument("--out", required=True, help="output file path")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (csv is canonical)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap; results are seed-deterministic "
                             "for any value")
    parser.add_argument("--unsafe", action="store_true",
                        help="lift the default qubit-count caps")
    parser.add_argument("--plot-script", default=None,
                        help="also write a standalone plotting script here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpsqvm",
        description="MPS quantum-circuit simulation experiments")
    commands = parser.add_subparsers(dest="command", required=True)

    page = commands.add_parser(
        "page-curve", help="entropy profile of random states vs theory")
    page.add_argument("--qubits", type=int, required=True)
    page.add_argument("--bond-dim", type=int, required=True)
    page.add_argument("--samples", type=int, required=True)
    _add_common(page)
    page.set_defaults(handler=_cmd_page_curve)

    sweep = commands.add_parser(
        "fidelity-sweep", help="fidelity across qubit counts and bond caps")
    sweep.add_argument("--qubits-list", type=int, nargs="+", required=True)
    sweep.add_argument("--bond-dims", type=int, nargs="+", required=True)
    sweep.add_argument("--samples", type=int, required=True)
    _add_common(sweep)
    sweep.set_defaults(handler=_cmd_fidelity_sweep)

    qaoa = commands.add_parser(
        "qaoa", help="MaxCut ensembles across depth and bond caps")
    qaoa.add_argument("--qubits", type=int, required=True)
    qaoa.add_argument("--depth-max", type=int, required=True)
    qaoa.add_argument("--bond-dims", type=int, nargs="+", required=True)
    qaoa.add_argument("--graphs", type=int, default=25)
    _add_common(qaoa)
    qaoa.set_defaults(handler=_cmd_qaoa)

    scaling = commands.add_parser(
        "scaling", help="entropy and energy collapse coordinates")
    scaling.add_argument("--qubits-list", type=int, nargs="+", required=True)
    scaling.add_argument("--bond-dims", type=int, nargs="+", required=True)
    _add_common(scaling)
    scaling.set_defaults(handler=_cmd_scaling)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_info:
        return int(exit_info.code or 0)
    try:
        return args.handler(args)
    except UsageError as usage:
        print(f"error: {usage}", file=sys.stderr)
        return 2
    except Exception as failure:
        print(f"runtime failure: {failure}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
