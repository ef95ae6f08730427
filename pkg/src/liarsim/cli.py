"""Command line surface.

Subcommands: ``count`` (paradoxical configurations), ``state`` (unreasoned
superposition as JSON), ``trace`` (hypothesis probability CSV), ``check-dim``
(minimal dimension audit) and ``verify`` (full invariant suite).

Exit codes: 0 on success, 1 for any domain or usage error, 2 when a
verification style command finds a failing check.  Every run is
deterministic given its arguments, and trace/state outputs echo the
resolved run manifest in their header so a rerun can be reproduced from
the artifact alone.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from .audit import AUDIT_BOUND, Contradiction, report_to_json, verify_minimality
from .config import (
    Configuration,
    config_from_json,
    count_paradoxical,
    eight_liar,
    one_liar,
    simple_liar,
)
from .errors import LiarSimError, OutOfRange
from .evolution import probability_trace, time_grid, trace_to_csv
from .statespace import build_initial_state, state_to_json
from .verify import all_passed, run_verification

DEFAULT_PRECISION = 12
PRECISION_ENV = "LIARSIM_PRECISION"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for verification
    # failures here, so downgrade usage problems to the domain error code.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunManifest:
    """Resolved settings of one run, echoed into the output header."""

    command: str
    fields: tuple[tuple[str, str], ...]

    def lines(self) -> tuple[str, ...]:
        pairs = (("command", self.command),) + self.fields
        return tuple(f"{k}={v}" for k, v in pairs)

    def mapping(self) -> dict[str, str]:
        return {"command": self.command, **{k: v for k, v in self.fields}}


def resolve_config(spec: str) -> Configuration:
    """Accept a named configuration, inline JSON, or a JSON file path.

    Names: ``one-liar``, ``eight-liar``, ``simple:<m>`` (single negation).
    """
    text = spec.strip()
    if text == "one-liar":
        return one_liar()
    if text == "eight-liar":
        return eight_liar()
    if text.startswith("simple:"):
        return simple_liar(int(text.split(":", 1)[1]))
    if text.startswith("{"):
        return config_from_json(text)
    with open(spec, encoding="utf-8") as fh:
        return config_from_json(fh.read())


def parse_start(text: str) -> tuple[int, bool]:
    """Parse the initial measurement, e.g. ``1:T`` or ``3:F``."""
    try:
        sentence, value = text.split(":")
        if value.upper() not in ("T", "F"):
            raise ValueError(value)
        return int(sentence), value.upper() == "T"
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected <sentence>:<T|F>, got {text!r}"
        ) from None


def parse_time_scale(text: str) -> float:
    """Output time units per reasoning step: a float, ``pi`` or ``pi/<d>``."""
    t = text.strip().lower()
    try:
        if t == "pi":
            return math.pi
        if t.startswith("pi/"):
            return math.pi / float(t[3:])
        return float(t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a number, pi or pi/<d>, got {text!r}"
        ) from None


def parse_sentences(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated sentence numbers, got {text!r}"
        ) from None


def output_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        p = int(raw)
    except ValueError:
        raise OutOfRange(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if not 1 <= p <= 17:
        raise OutOfRange(f"{PRECISION_ENV} must be in 1..17, got {p}")
    return p


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_count(args) -> int:
    print(count_paradoxical(args.m))
    return 0


def cmd_state(args) -> int:
    config = resolve_config(args.config)
    state = build_initial_state(config)
    manifest = RunManifest("state", (("config", args.config),))
    _write(args.out, state_to_json(state, extra={"manifest": manifest.mapping()}) + "\n")
    return 0


def _gnuplot_script(csv_path: str, sentences: tuple[int, ...]) -> str:
    lines = [
        f"# companion plot for {csv_path}",
        "set datafile separator ','",
        "set xlabel 'time'",
        "set ylabel 'probability'",
        "set yrange [-0.02:1.02]",
        "set key outside right",
    ]
    plots = []
    for i in sentences:
        plots.append(
            f"'{csv_path}' using 1:($2 == {i} ? $3 : 1/0) with lines"
            f" title 'sentence {i} true'"
        )
        plots.append(
            f"'{csv_path}' using 1:($2 == {i} ? $4 : 1/0) with lines"
            f" title 'sentence {i} false'"
        )
    lines.append("plot \\")
    lines.append(", \\\n".join("  " + p for p in plots))
    return "\n".join(lines) + "\n"


def cmd_trace(args) -> int:
    config = resolve_config(args.config)
    if args.gnuplot and (args.out is None or args.out == "-"):
        raise OutOfRange("--gnuplot needs --out so the script can name the data file")
    t_max = args.t_max if args.t_max is not None else 2.0 * (2 * config.m) * args.time_scale
    sentences = args.sentences or tuple(range(1, config.m + 1))
    precision = output_precision()
    times = time_grid(t_max, args.dt)
    rows = probability_trace(
        config,
        args.start,
        times,
        sentences=sentences,
        time_scale=args.time_scale,
        renormalize=not args.raw_collapse,
    )
    manifest = RunManifest(
        "trace",
        (
            ("config", args.config),
            ("start", f"{args.start[0]}:{'T' if args.start[1] else 'F'}"),
            ("t_max", f"{t_max:.12g}"),
            ("dt", f"{args.dt:.12g}"),
            ("time_scale", f"{args.time_scale:.12g}"),
            ("renormalize", "off" if args.raw_collapse else "on"),
            ("sentences", ",".join(str(i) for i in sentences)),
            ("precision", str(precision)),
        ),
    )
    _write(args.out, trace_to_csv(rows, header_lines=manifest.lines(), precision=precision))
    if args.gnuplot:
        _write(args.gnuplot, _gnuplot_script(args.out, sentences))
    return 0


def cmd_check_dim(args) -> int:
    report = verify_minimality(args.m)
    print(f"minimal dimension audit, m = {args.m}")
    print(f"--- n = {2 * args.m}: expect a unique solution ---")
    for line in report.satisfiable.transcript:
        print(f"  {line}")
    print(f"--- n = {2 * args.m - 1}: expect a contradiction ---")
    for line in report.contradiction.transcript:
        print(f"  {line}")
    if isinstance(report.contradiction, Contradiction):
        w = report.contradiction.witness
        print("witness facts:")
        print(f"  1. {w.nonzero_amplitude}")
        print(f"  2. {w.unit_coefficient}")
        print(f"  3. {w.violated_zero_product}")
    print(report_to_json(report))
    return 0 if report.passed else 2


def cmd_verify(args) -> int:
    results = run_verification(args.m_max)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {status}  {r.detail}")
    if all_passed(results):
        print(f"{len(results)} checks passed")
        return 0
    failed = sum(1 for r in results if not r.passed)
    print(f"{failed} of {len(results)} checks FAILED")
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="liarsim",
        description="simulate truth-value dynamics of paradoxical liar cycles",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count paradoxical configurations of size m")
    p.add_argument("--m", type=int, required=True, help="number of sentences")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("state", help="write the unreasoned superposition state")
    p.add_argument(
        "--config",
        required=True,
        help="JSON file, inline JSON, or one-liar | eight-liar | simple:<m>",
    )
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("trace", help="write hypothesis probability traces as CSV")
    p.add_argument("--config", required=True, help="as for the state command")
    p.add_argument(
        "--start",
        type=parse_start,
        default=(1, True),
        help="initial measurement <sentence>:<T|F> (default 1:T)",
    )
    p.add_argument("--t-max", type=float, help="last time (default two full cycles)")
    p.add_argument("--dt", type=float, default=0.05, help="time step (default 0.05)")
    p.add_argument(
        "--time-scale",
        type=parse_time_scale,
        default=1.0,
        help="output time units per reasoning step: number, pi or pi/<d>",
    )
    p.add_argument(
        "--sentences",
        type=parse_sentences,
        help="comma-separated sentences to trace (default all)",
    )
    p.add_argument(
        "--raw-collapse",
        action="store_true",
        help="skip renormalization after the initial measurement",
    )
    p.add_argument("--gnuplot", help="also write a companion gnuplot script here")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("check-dim", help="audit the minimal per-sentence dimension")
    p.add_argument("--m", type=int, required=True, help=f"2..{AUDIT_BOUND}")
    p.set_defaults(func=cmd_check_dim)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--m-max", type=int, default=8, help="largest size exercised")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LiarSimError as exc:
        print(f"liarsim: error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"liarsim: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
