"""Command-line front end.

Subcommands: diagonals, census, bound, cauchy, shift, eval-web, bracket,
homfly, stable, report, stability.  Output is deterministic; JSON output is
available everywhere via --format json.  Exit codes: 0 success, 1 domain
error (irreducible web, enumeration cap, bad input values), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import bounds as bounds_mod
from . import census as census_mod
from . import stable as stable_mod
from . import webs as webs_mod
from .braid import BraidParseError, ColoredBraid, InfiniteBraidSpec, parse_braid
from .diagonals import find_diagonals
from .shifts import (
    fork_slide_shift,
    fork_twist_shift,
    ladder_slide_shift,
    ladder_twist_proof_composition,
    ladder_twist_shift,
    reidemeister_shift,
)

AZD = stable_mod.AZD
_AZD_ORDER = stable_mod._AZD_ORDER


class DomainError(RuntimeError):
    pass


def _load_braid(path: str) -> ColoredBraid | InfiniteBraidSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_braid(fh.read())
    except FileNotFoundError:
        raise DomainError(f"no such braid file: {path}") from None
    except BraidParseError as exc:
        raise DomainError(f"{path}: {exc}") from None


def _finite_braid(path: str) -> ColoredBraid:
    braid = _load_braid(path)
    if isinstance(braid, InfiniteBraidSpec):
        raise DomainError(f"{path}: expected a finite braid, found an infinite spec")
    return braid


def _spec(path: str) -> InfiniteBraidSpec:
    spec = _load_braid(path)
    if not isinstance(spec, InfiniteBraidSpec):
        raise DomainError(f"{path}: expected an infinite spec (tail= header)")
    return spec


def _emit(payload, fmt: str, text_render=None):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif text_render is not None:
        print(text_render(payload))
    else:
        print(payload)


def _enc_inf(value):
    return "inf" if value == math.inf else value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krtl",
        description="graded crossing-complex and braid-diagonal calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json", "tsv"), default=None)
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="enumeration cap override (also via KRTL_CAP)",
        )
        p.add_argument("--jobs", type=int, default=1, help="parallelism degree")

    p = sub.add_parser("diagonals", help="greedy diagonal decomposition as JSON")
    p.add_argument("braidfile")
    add_common(p)

    p = sub.add_parser("census", help="resolution census of a braid")
    p.add_argument("braidfile")
    p.add_argument("--patterns", action="store_true", help="zone-pattern table")
    add_common(p)

    p = sub.add_parser("bound", help="projection order bounds for one braid")
    p.add_argument("braidfile")
    add_common(p)

    p = sub.add_parser("cauchy", help="bound report along partial braids of a spec")
    p.add_argument("braidfile")
    p.add_argument("--ells", required=True, help="comma-separated lengths")
    add_common(p)

    p = sub.add_parser("shift", help="grading shift of a single move")
    p.add_argument(
        "move",
        choices=(
            "fork-slide",
            "fork-twist",
            "ladder-slide",
            "ladder-twist",
            "ladder-twist-proof",
            "reidemeister",
        ),
    )
    p.add_argument("args", nargs="*", help="move arguments")
    add_common(p)

    p = sub.add_parser("eval-web", help="evaluate an annular closed web")
    p.add_argument("web", help="n=<int> m=<int> N=<int|inf> rungs=(col:amount,...)")
    add_common(p)

    p = sub.add_parser("bracket", help="level-2 bracket of a braid closure")
    p.add_argument("braidfile")
    add_common(p)

    p = sub.add_parser("homfly", help="two-variable polynomial of a braid closure")
    p.add_argument("braidfile")
    add_common(p)

    p = sub.add_parser("stable", help="truncated stable algebra dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--qmin", type=int, required=True)
    add_common(p)

    p = sub.add_parser("report", help="partial-isomorphism report for a braid")
    p.add_argument("braidfile")
    p.add_argument("--qmin", type=int, default=-20)
    add_common(p)

    p = sub.add_parser("stability", help="torus stabilization of the oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", required=True, help="comma-separated twist counts")
    add_common(p)

    return parser


def _cap(ns, default):
    if ns.cap is not None:
        value = ns.cap
    else:
        env = os.environ.get("KRTL_CAP")
        value = int(env) if env else default
    if value <= 0:
        raise DomainError("cap must be positive")
    return value


def run(argv: list[str]) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    fmt = ns.format
    try:
        if ns.command == "diagonals":
            dec = find_diagonals(_finite_braid(ns.braidfile))
            _emit(dec.to_dict(), fmt or "json")

        elif ns.command == "census":
            braid = _finite_braid(ns.braidfile)
            census = census_mod.braid_census(braid)
            payload = {
                "objects": census.object_count,
                "poincare": census.poincare.to_text(),
            }
            if ns.patterns:
                dec = find_diagonals(braid)
                cap = _cap(ns, census_mod.DEFAULT_RESOLUTION_CAP)
                table = census_mod.resolve_nondiagonals(braid, dec, cap)
                payload["patterns"] = [
                    {"zones": sorted(zones), "count": count}
                    for zones, count in sorted(
                        table.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))
                    )
                ]
            if ns.patterns or (fmt or "text") == "json":
                _emit(payload, "json")
            else:
                print(f"objects: {payload['objects']}")
                print(f"poincare: {payload['poincare']}")

        elif ns.command == "bound":
            braid = _finite_braid(ns.braidfile)
            cap = _cap(ns, bounds_mod.DEFAULT_ENUMERATION_CAP)
            dec = find_diagonals(braid)
            outcome_F = bounds_mod.bound_F(braid, dec, cap)
            payload = {
                "y": dec.y,
                "z": dec.z,
                "bound_F": _enc_inf(outcome_F.value),
            }
            if outcome_F.note:
                payload["note_F"] = outcome_F.note
            if braid.word:
                payload["bound_g"] = _enc_inf(bounds_mod.bound_g(braid, dec, cap).value)
            _emit(payload, fmt or "json")

        elif ns.command == "cauchy":
            spec = _spec(ns.braidfile)
            ells = [int(x) for x in ns.ells.split(",") if x.strip()]
            cap = _cap(ns, bounds_mod.DEFAULT_ENUMERATION_CAP)
            report = bounds_mod.cauchy_report(spec, ells, cap)
            _emit(report.to_dict(), fmt or "json")

        elif ns.command == "shift":
            shift = _run_shift(ns.move, [int(x) if x != "inf" else math.inf for x in ns.args])
            if (fmt or "text") == "json":
                _emit(
                    {"t": shift.t_exp, "q": shift.q_exp, "a": shift.a_exp},
                    "json",
                )
            else:
                print(shift.monomial_text())

        elif ns.command == "eval-web":
            web, level = webs_mod.parse_web(ns.web)
            value = webs_mod.eval_closed_web(web, level)
            if (fmt or "text") == "json":
                _emit({"value": value.to_text()}, "json")
            else:
                print(value.to_text())

        elif ns.command == "bracket":
            braid = _finite_braid(ns.braidfile)
            if braid.level != 2:
                braid = ColoredBraid(n=braid.n, word=braid.word, m=braid.m, level=2)
            value = webs_mod.sl2_bracket(braid)
            if (fmt or "text") == "json":
                _emit({"value": value.to_text()}, "json")
            else:
                print(value.to_text())

        elif ns.command == "homfly":
            braid = _finite_braid(ns.braidfile)
            value = stable_mod.homfly_polynomial(braid)
            if (fmt or "text") == "json":
                _emit({"value": value.pretty(AZD, _AZD_ORDER)}, "json")
            else:
                print(value.pretty(AZD, _AZD_ORDER))

        elif ns.command == "stable":
            table = stable_mod.an_truncated_dims(ns.n, ns.y, ns.qmin)
            if (fmt or "tsv") == "json":
                _emit(
                    [
                        {"t": t, "q": q, "a": a, "dim": d}
                        for t, q, a, d in table.rows()
                    ],
                    "json",
                )
            else:
                sys.stdout.write(table.to_tsv())

        elif ns.command == "report":
            braid = _finite_braid(ns.braidfile)
            report = stable_mod.link_estimate_report(braid, ns.qmin)
            if (fmt or "json") == "json":
                _emit(report.to_dict(), "json")
            else:
                print(report.statement)
                sys.stdout.write(report.table.to_tsv())

        elif ns.command == "stability":
            ks = [int(x) for x in ns.k.split(",") if x.strip()]
            report = stable_mod.stability_check(ns.n, ks)
            _emit(report.to_dict(), fmt or "json")

        else:  # pragma: no cover
            parser.error(f"unknown command {ns.command}")
    except (
        DomainError,
        ValueError,
        webs_mod.IrreducibleWebError,
        bounds_mod.EnumerationCapError,
        census_mod.ResolutionSizeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _run_shift(move: str, args: list):
    if move == "fork-slide":
        if len(args) != 3:
            raise DomainError("fork-slide takes i j k")
        return fork_slide_shift(*args)
    if move == "fork-twist":
        if len(args) != 3:
            raise DomainError("fork-twist takes i j 3|4 (the twist variant)")
        i, j, variant = args
        return fork_twist_shift(i, j, f"T{variant}")
    if move == "ladder-slide":
        if len(args) != 4:
            raise DomainError("ladder-slide takes i j k l")
        return ladder_slide_shift(*args)
    if move == "ladder-twist":
        if len(args) != 3:
            raise DomainError("ladder-twist takes i j k")
        return ladder_twist_shift(*args)
    if move == "ladder-twist-proof":
        if len(args) != 3:
            raise DomainError("ladder-twist-proof takes i j k")
        return ladder_twist_proof_composition(*args)
    if move == "reidemeister":
        if len(args) != 3:
            raise DomainError("reidemeister takes R2|R1pos|R1neg encoded as 2|1|-1, i, N")
        code, i, N = args
        move_name = {2: "R2", 1: "R1pos", -1: "R1neg"}.get(code)
        if move_name is None:
            raise DomainError("first argument: 2 (R2), 1 (R1pos) or -1 (R1neg)")
        return reidemeister_shift(move_name, i, N)
    raise DomainError(f"unknown move {move}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
