"""Command line driver.

Subcommands::

    rpi check <file>                      parse and type-check a program
    rpi run <file> [--mode rel|vec|both] [--seed N] [--require-invertible]
                   [--alice N] [--matrix] [--output text|json]
    rpi matrix <file> <name>              denotation matrix of a definition
    rpi logic <file> --query "<goal>" [--union prolog|set|xor]
    rpi examples [name]                   list or print bundled programs

Exit codes: 0 on success, 1 on domain errors (typing, evaluation,
measurement), 2 on usage, parse, or name-resolution errors.  File
arguments fall back to bundled example names when no such path exists.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import examples as bundled
from .errors import AmbiguousType, ParseError, RpiError, UnknownName
from .gf2 import denote_rel, mat_str
from .logic import (
    UNION_MODES,
    apply_union_mode,
    format_answers,
    parse_goal,
    parse_program,
    solve,
)
from .parser import parse_rpi
from .printer import program_str, rel_str, set_str, type_str
from .rel import type_check_rel
from .runner import MODES, RunConfig, run

_USAGE_ERRORS = (ParseError, UnknownName)


def _read_source(path_text: str) -> str:
    path = Path(path_text)
    if path.exists():
        return path.read_text()
    try:
        return bundled.get(path.name)
    except KeyError:
        raise UnknownName(
            f"{path_text!r} is neither a file nor a bundled example"
        ) from None


def _cmd_check(args) -> int:
    text = _read_source(args.file)
    program = parse_rpi(text)
    if args.expand:
        print(program_str(program), end="")
        return 0
    for item in program.items:
        if item.kind == "type":
            print(f"type {item.name} = {type_str(item.value)}")
        elif item.kind == "comb":
            from .pi import infer_comb_type

            try:
                t = infer_comb_type(item.value, item.ann)
                print(f"comb {item.name} : {type_str(t.lhs)} <-> {type_str(t.rhs)}")
            except AmbiguousType:
                print(f"comb {item.name} : (polymorphic)")
        elif item.kind == "set":
            print(f"set {item.name} : S {type_str(item.value.elem_type, 4)}")
        else:
            try:
                rt = type_check_rel(item.value)
                print(f"rel {item.name} : {type_str(rt.dom, 4)} R {type_str(rt.cod, 4)}")
            except AmbiguousType:
                print(f"rel {item.name} : (polymorphic)")
    if program.main is not None:
        rt = type_check_rel(program.main.rel, dom=program.main.input.elem_type)
        print(f"main : {type_str(rt.dom, 4)} R {type_str(rt.cod, 4)}"
              f" on {set_str(program.main.input)}")
    print("ok")
    return 0


def _cmd_run(args) -> int:
    text = _read_source(args.file)
    overrides = {}
    if args.alice is not None:
        overrides["alice"] = f"alice{args.alice}"
    program = parse_rpi(text, overrides=overrides)
    config = RunConfig(
        mode=args.mode,
        seed=args.seed,
        require_invertible=args.require_invertible,
        show_matrix=args.matrix,
    )
    report = run(config, program)
    print(report.json() if args.output == "json" else report.text())
    return 0


def _cmd_matrix(args) -> int:
    text = _read_source(args.file)
    program = parse_rpi(text)
    item = program.find(args.name)
    if item.kind != "rel":
        raise RpiError(f"{args.name!r} is a {item.kind}, not a relation")
    m = denote_rel(item.value)
    if args.output == "json":
        print(json.dumps({"matrix": mat_str(m).split("\n")}, indent=2))
    else:
        print(mat_str(m))
    return 0


def _cmd_logic(args) -> int:
    text = _read_source(args.file)
    program = parse_program(text)
    goal = parse_goal(args.query)
    answers = apply_union_mode(solve(program, goal), args.union)
    if args.output == "json":
        payload = [
            {name: repr(term) for name, term in answer} for answer in answers
        ]
        print(json.dumps({"answers": payload}, indent=2))
    else:
        print(format_answers(answers))
    return 0


def _cmd_examples(args) -> int:
    registry = bundled.registry()
    if args.name is None:
        width = max(len(n) for n in registry)
        for name, (description, _) in registry.items():
            print(f"{name:<{width}}  {description}")
        return 0
    if args.name not in registry:
        raise UnknownName(f"no bundled example named {args.name!r}")
    print(registry[args.name][1], end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpi",
        description="run relation-language programs and logic queries",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and type-check a program")
    p.add_argument("file")
    p.add_argument("--expand", action="store_true",
                   help="print the resolved program instead of the summary")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("run", help="evaluate the main relation of a program")
    p.add_argument("file")
    p.add_argument("--mode", choices=MODES, default="both")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--require-invertible", action="store_true")
    p.add_argument("--alice", type=int, default=None,
                   help="redirect references to `alice` to `alice<N>`")
    p.add_argument("--matrix", action="store_true",
                   help="also print the denotation matrix of main")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("matrix", help="print the denotation matrix of a definition")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("logic", help="query a logic program")
    p.add_argument("file")
    p.add_argument("--query", required=True, help='a goal such as "q(X)"')
    p.add_argument("--union", choices=UNION_MODES, default="prolog")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_logic)

    p = sub.add_parser("examples", help="list or print bundled example programs")
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(func=_cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RpiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
