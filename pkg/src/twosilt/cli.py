"""Command-line front end.

Subcommands: ``classify`` (counts and full element lists), ``hasse``
(mutation quiver as DOT), ``braid-nf`` (Garside normal form and Weyl
projection of a braid word), and ``oracle-verify`` (module-level
cross-validation report).

Exit codes: 0 success, 2 validation error, 3 cap exceeded, 4 invariant
failure.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import braid, dynkin, oracle, silt2, weyl
from .errors import CapExceededError, InvariantError, OracleCapError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4

_ORACLE_FAST = (("A", 1), ("A", 2), ("A", 3))
_ORACLE_SLOW = (("A", 4), ("D", 4))


def _build_graph(args) -> dynkin.DynkinGraph:
    return dynkin.build_dynkin(args.family, args.rank, args.labeling)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def cmd_classify(args) -> int:
    graph = _build_graph(args)
    folded = dynkin.fold(graph)
    group = weyl.enumerate_group(graph, cap=args.cap)
    n_tilt = len(group.iota_fixed_indices())
    if args.format == "json":
        _emit(json.dumps(silt2.classification_json(group), indent=2), args.out)
    else:
        _emit(f"2-silt: {group.order}, 2-tilt: {n_tilt}, folded: {folded}", args.out)
    return EXIT_OK


def cmd_hasse(args) -> int:
    graph = _build_graph(args)
    group = weyl.enumerate_group(graph, cap=args.cap)
    quiver = silt2.hasse(group, restrict_tilting=args.tilting)
    _emit(quiver.to_dot(), args.out)
    return EXIT_OK


def cmd_braid_nf(args) -> int:
    graph = _build_graph(args)
    system = braid.BraidSystem(graph, cap=args.cap)
    word = system.parse(args.word)
    nf = system.normal_form(word)
    projection = system.project_to_weyl(word)
    if args.format == "json":
        payload = {
            "word": list(word.letters),
            "normal_form": {
                "delta_power": nf.delta_power,
                "simples": [list(system.simple_word(s)) for s in nf.simples],
            },
            "projection": projection.to_json(),
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(f"{nf}\nprojection: {projection}", args.out)
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    graph = _build_graph(args)
    key = (graph.family, graph.rank)
    if key not in _ORACLE_FAST and not (args.slow and key in _ORACLE_SLOW):
        allowed = list(_ORACLE_FAST) + (list(_ORACLE_SLOW) if args.slow else [])
        raise OracleCapError(
            f"oracle verification for {graph} is beyond the cap "
            f"(allowed here: {', '.join(f + str(r) for f, r in allowed)}"
            + ("" if args.slow else "; pass --slow for A4 and D4") + ")"
        )
    report = oracle.verify(graph, with_stt=key in oracle.checks.STT_TYPES)
    _emit(json.dumps(report.to_json(), indent=2), args.out)
    return EXIT_OK if report.all_pass else EXIT_INVARIANT


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twosilt",
        description="two-term silting/tilting classification over preprojective algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cap_default=weyl.DEFAULT_CAP):
        p.add_argument("--family", required=True, choices=["A", "D", "E"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--labeling", default=dynkin.FIGURE1,
                       choices=[dynkin.FIGURE1, dynkin.LINEAR])
        p.add_argument("--cap", type=int, default=cap_default,
                       help="enumeration cap (number of group elements)")
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument("--format", default="text", choices=["text", "json", "dot"])

    p = sub.add_parser("classify", help="count and list two-term silting/tilting complexes")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hasse", help="mutation quiver as DOT")
    common(p)
    p.add_argument("--tilting", action="store_true", help="restrict to tilting complexes")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("braid-nf", help="Garside normal form of a braid word")
    common(p)
    p.add_argument("word", help="whitespace-separated signed generator indices, e.g. '1 2 -1'")
    p.set_defaults(func=cmd_braid_nf)

    p = sub.add_parser("oracle-verify", help="module-level cross-validation report")
    common(p)
    p.add_argument("--slow", action="store_true", help="allow the larger oracle types (A4, D4)")
    p.set_defaults(func=cmd_oracle_verify)
    return parser


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceededError, OracleCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
