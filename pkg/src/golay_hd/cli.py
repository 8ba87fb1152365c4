"""Command-line access to the analytic curves, simulator and verification suite.

Exit status is 0 on success, 1 when a verification check fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import replace
from fractions import Fraction

import numpy as np

from golay_hd import analysis, montecarlo, verify
from golay_hd.core import GENERATOR_POLY, ContractError, build_g23, build_g24

DEFAULT_GRID = "0:12:0.25"
SIM_COLUMNS = (
    "decoder",
    "ebno_db",
    "p",
    "trials",
    "codeword_errors",
    "info_bit_errors",
    "sys_errors_per_cw_error",
    "cwer",
    "cwer_low",
    "cwer_high",
    "ber",
    "ber_low",
    "ber_high",
    "cwer_analytic",
)


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (float, np.floating)):
        return "nan" if math.isnan(v) else format(float(v), ".12g")
    return str(v)


def parse_grid(text: str) -> np.ndarray:
    """Parse ``start:stop:step`` (inclusive of stop) into an array of dB values."""
    try:
        start, stop, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like start:stop:step, got {text!r}")
    if step <= 0 or stop < start or not all(map(math.isfinite, (start, stop, step))):
        raise argparse.ArgumentTypeError(f"grid needs step > 0 and stop >= start, got {text!r}")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(n), 12)


def parse_p_list(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--p expects comma-separated numbers, got {text!r}")
    if not vals or any(not 0 < v <= 0.5 for v in vals):
        raise argparse.ArgumentTypeError("--p values must lie in (0, 0.5]")
    return vals


def parse_count(text: str) -> int:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a count, got {text!r}")
    if v < 1 or v != int(v):
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(v)


def parse_seed(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _write_csv(out, meta: list[str], columns, rows) -> None:
    for line in meta:
        out.write(f"# {line}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(row[c]) for c in columns])


def _json_default(v):
    if isinstance(v, Fraction):
        return {"fraction": f"{v.numerator}/{v.denominator}", "value": float(v)}
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    raise TypeError(type(v).__name__)


def _write_json(out, obj) -> None:
    json.dump(obj, out, indent=2, sort_keys=True, default=_json_default)
    out.write("\n")


def _code_meta() -> list[str]:
    return [
        f"generator_polynomial=0x{GENERATOR_POLY:03x} (x^11+x^10+x^6+x^5+x^4+x^2+1)",
        "layout=info 0..11, G23 parity 12..22, overall parity 23",
    ]


def cmd_curves(args, out) -> int:
    table = analysis.curve_table(args.grid)
    beta = analysis.agreement_ber_factor()
    cols = analysis.CURVE_COLUMNS
    rows = [{c: table[c][i] for c in cols} for i in range(len(table["ebno_db"]))]
    if args.format == "json":
        _write_json(out, {"agreement_beta": beta, "columns": list(cols), "rows": rows})
        return 0
    meta = [
        "golay-hd analytic curves",
        *_code_meta(),
        f"agreement_beta={fmt(beta)} ({float(beta):.12g})",
        f"ber_columns=high-SNR approximations; ber_approx_valid=0 below "
        f"{analysis.BER_VALID_ABOVE_DB:g} dB",
    ]
    _write_csv(out, meta, cols, rows)
    return 0


def _sim_rows(config, results):
    rows = []
    for r in results:
        row = r.row()
        row["decoder"] = config.decoder
        if config.decoder == "ml23":
            row["cwer_analytic"] = analysis.cwer_g23(r.p)
        elif config.decoder == "passthrough":
            row["cwer_analytic"] = None
        else:
            row["cwer_analytic"] = analysis.cwer_g24(r.p)
        rows.append(row)
    return rows


def cmd_simulate(args, out) -> int:
    if args.grid is None and args.p is None:
        args.grid = parse_grid(DEFAULT_GRID)
    config = montecarlo.SimConfig(
        decoder=args.decoder,
        grid=tuple(args.grid) if args.grid is not None else (),
        p_values=tuple(args.p or ()),
        seed=args.seed,
        min_codeword_errors=args.min_errors,
        max_trials=args.max_trials,
        all_zero=args.all_zero,
        workers=args.workers,
    )
    rows = _sim_rows(config, montecarlo.run_curve(config))
    meta = {
        "decoder": config.decoder,
        "variant": config.variant,
        "seed": config.seed,
        "generator": montecarlo.GENERATOR,
        "chunk_size": config.chunk_size,
        "min_codeword_errors": config.min_codeword_errors,
        "max_trials": config.max_trials,
        "transmit": "all-zero codeword" if config.all_zero else "random information words",
    }
    if args.format == "json":
        _write_json(out, {"metadata": meta, "rows": rows})
    else:
        lines = ["golay-hd simulation", *_code_meta()]
        lines += [f"{k}={v}" for k, v in meta.items()]
        _write_csv(out, lines, SIM_COLUMNS, rows)
    return 0


def _corrupted(codebook):
    cw = codebook.codewords.copy()
    cw[1] ^= 1 << 20
    cw.setflags(write=False)
    return replace(codebook, codewords=cw)


def cmd_verify(args, out) -> int:
    g23, g24 = build_g23(), build_g24()
    if args.corrupt_codebook:
        g23, g24 = _corrupted(g23), _corrupted(g24)
    only = [n for chunk in args.only or () for n in chunk.split(",") if n]
    try:
        reports = verify.run_all(only or None, g23, g24)
    except KeyError as exc:
        print(f"golay-hd verify: {exc.args[0]}", file=sys.stderr)
        return 2
    ok = all(r.passed for r in reports)
    if args.format == "json":
        _write_json(out, {"passed": ok, "checks": [r.to_dict() for r in reports]})
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        out.write(f"{'ALL PASSED' if ok else 'FAILED: ' + ', '.join(r.name for r in reports if not r.passed)}\n")
    return 0 if ok else 1


def cmd_figures(args, out) -> int:
    _write_json(out, analysis.derived_figures(target_ber=args.target_ber))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golay-hd",
        description="Hard-decision ML decoding of the Golay codes G23 and G24.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curves", help="analytic CWER/BER curves as CSV")
    p.add_argument("--grid", type=parse_grid, default=DEFAULT_GRID,
                   help="Eb/N0 grid start:stop:step in dB (default %(default)s)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("simulate", help="Monte Carlo CWER/BER estimates")
    p.add_argument("--decoder", required=True, choices=tuple(montecarlo.DECODERS))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--grid", type=parse_grid, help="Eb/N0 grid start:stop:step in dB")
    g.add_argument("--p", type=parse_p_list, help="comma-separated crossover probabilities")
    p.add_argument("--seed", type=parse_seed, default=0)
    p.add_argument("--min-errors", type=parse_count, default=100)
    p.add_argument("--max-trials", type=parse_count, default=10**8)
    p.add_argument("--workers", type=parse_count, default=1,
                   help="threads per point; output does not depend on it")
    p.add_argument("--all-zero", action="store_true",
                   help="transmit the all-zero codeword instead of random words")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="exhaustive combinatorial checks")
    p.add_argument("--only", action="append",
                   help=f"run only these checks ({', '.join(verify.CHECKS)})")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--corrupt-codebook", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", help="derived figures of merit as JSON")
    p.add_argument("--target-ber", type=float, default=1e-6)
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ContractError as exc:
        parser.exit(2, f"golay-hd {args.command}: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
