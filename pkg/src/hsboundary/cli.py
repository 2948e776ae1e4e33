"""Command-line interface: ``hsboundary {classify,profile,kostant,weyl-dump,sweep}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .errors import HSBoundaryError
from .kostant import decompositions, levi_weight, parallel_condition
from .lattice import HighestWeight
from .profiles import (
    cusp_restriction,
    double_degeneration_profile,
    hb_cusp_profile,
    klingen_profile,
    perverse_bounds,
    siegel_profile,
)
from .sweep import DEFAULT_SWEEP_CAP, CrossCheckMismatch, SweepSpec, checked_report, format_rows, sweep_rows
from .weyl import FACTORS, KLINGEN, SIEGEL, STRATUM_NAMES, dot_action, dot_offset, kostant_set

EXIT_INPUT = 2
EXIT_MISMATCH = 3

_STRATA = {"siegel": SIEGEL, "klingen": KLINGEN}


class InputError(Exception):
    pass


def load_lambda(arg: str) -> HighestWeight:
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {arg!r}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}") from None
    return HighestWeight.from_json(obj)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _formula(code: int) -> str:
    m, off = FACTORS[code], dot_offset(code)
    parts = []
    for row, o in zip(m, off):
        j = 0 if row[0] else 1
        term = ("-" if row[j] < 0 else "") + ("k1", "k2")[j]
        if o:
            term += f"{o:+d}"
        parts.append(term)
    return f"({parts[0]}, {parts[1]})"


def cmd_classify(args) -> str:
    return _dump(checked_report(load_lambda(args.lam)).to_json())


def cmd_profile(args) -> str:
    lam = load_lambda(args.lam)
    makers = {
        "siegel": lambda: siegel_profile(lam),
        "klingen": lambda: klingen_profile(lam),
        "cusp": lambda: hb_cusp_profile(cusp_restriction(lam), lam.d),
        "double": lambda: double_degeneration_profile(lam),
    }
    if args.stratum:
        return _dump([e.to_json() for e in makers[args.stratum]()])
    out = {name: [e.to_json() for e in make()] for name, make in makers.items()}
    out["perverseBounds"] = {
        STRATUM_NAMES[s]: perverse_bounds(lam, s).to_json() for s in (SIEGEL, KLINGEN)
    }
    return _dump(out)


def _kostant_table(lam: HighestWeight, m: int) -> list:
    table = []
    for q in range(3 * lam.d + 1):
        rows = []
        for psi in decompositions(lam.d, q):
            levi = levi_weight(lam, psi, m)
            rows.append(
                {
                    "psi": psi.to_json(),
                    "levi": {"e1": list(levi.e1), "e2": list(levi.e2), "c": levi.c},
                    "hodgeWeight": levi.hodge_weight,
                    "kappa": parallel_condition(lam, psi, m),
                }
            )
        table.append({"q": q, "summands": rows})
    return table


def cmd_kostant(args) -> str:
    lam = load_lambda(args.lam)
    if args.stratum:
        return _dump(_kostant_table(lam, _STRATA[args.stratum]))
    return _dump({name: _kostant_table(lam, m) for name, m in _STRATA.items()})


def cmd_weyl_dump(args) -> str:
    m = _STRATA[args.stratum]
    lam = load_lambda(args.lam) if args.lam else None
    if lam is not None and lam.d != args.d:
        raise InputError(f"--lambda has d={lam.d} but --d is {args.d}")
    out = []
    for w in kostant_set(args.d, m, cap=args.cap):
        item = {
            "factors": w.describe(),
            "length": w.length,
            "levels": list(w.factor_lengths()),
            "inversionSet": [{"embedding": r.embedding, "root": list(r.coords)} for r in w.inversion_set()],
            "dotAction": [
                {
                    "matrix": [list(row) for row in FACTORS[f]],
                    "offset": list(dot_offset(f)),
                    "formula": _formula(f),
                }
                for f in w.factors
            ],
        }
        if lam is not None:
            item["image"] = dot_action(w, lam).to_json()
        out.append(item)
    return _dump(out)


def cmd_sweep(args) -> str:
    spec = SweepSpec(args.d, args.k_max, args.format)
    rows = sweep_rows(spec, workers=args.workers, cap=args.cap)
    return format_rows(rows, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsboundary",
        description="Boundary weights of genus-2 Hilbert-Siegel local systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def lam_arg(p, required=True):
        p.add_argument(
            "--lambda",
            dest="lam",
            required=required,
            metavar="JSON|FILE",
            help='weight as {"k1":[..],"k2":[..],"c":N} or a path to such a file',
        )

    p = sub.add_parser("classify", help="avoidance report for one weight")
    lam_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("profile", help="degeneration profiles for one weight")
    lam_arg(p)
    p.add_argument("--stratum", choices=("siegel", "klingen", "cusp", "double"))
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("kostant", help="Kostant summands, Levi weights and Hodge weights")
    lam_arg(p)
    p.add_argument("--stratum", choices=tuple(_STRATA))
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("weyl-dump", help="Kostant representatives with inversion sets")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--stratum", choices=tuple(_STRATA), required=True)
    lam_arg(p, required=False)
    p.add_argument("--cap", type=int, default=8**5, help="maximum Weyl group size")
    p.set_defaults(func=cmd_weyl_dump)

    p = sub.add_parser("sweep", help="classify every dominant weight on a grid")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cap", type=int, default=DEFAULT_SWEEP_CAP, help="maximum number of weights")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except CrossCheckMismatch as exc:
        print(f"error: CrossCheckMismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (HSBoundaryError, InputError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
