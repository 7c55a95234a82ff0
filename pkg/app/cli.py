"""
Command-line front end.

    python -m app.cli combine --worlds w,x,y,z --left "z | w | x y" --right "x z | y | w" --combinator stq
    python -m app.cli revise --atoms p,q --state "11 | 10 01 | 00" --input "!p" --op lex
    python -m app.cli check --postulate VAC --atoms p,q --state "11 | 10 01 | 00" --expect-fail
    python -m app.cli verify --theorem prop6 --size 4
    python -m app.cli demo triviality

Exit codes: 0 success or pass, 1 a counterexample where none was expected
(or none where one was), 2 usage or input errors.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from app.config import configure_logging
from app.errors import BeliefChangeError
from app.models.belief import BeliefState, ContractionOpId, RevisionOpId
from app.models.combinator import STQ, Combinator
from app.models.logic import Vocabulary, WorldSpace
from app.models.report import Counterexample, PostulateId
from app.services.change_ops import contract, revise
from app.services.combinators import check_property, combine
from app.services.formula_parser import parse_sentence
from app.services.postulates import (
    REVISION_OPS,
    check_postulate,
    find_triviality_witnesses,
    triviality_witness,
    vac_instance,
)
from app.services.semantics import models
from app.services.text_format import (
    counterexample_report,
    format_counterexample,
    format_report,
    format_tpo,
    parse_input,
    parse_tpo,
    resolve_space,
)
from app.services.verification import run_theorem

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


def _add_universe(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--atoms", help="propositional mode, e.g. p,q")
    group.add_argument("--worlds", help="abstract mode, e.g. w,x,y,z")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tqbc", description="TeamQueue belief-change toolkit")
    parser.add_argument("--log-level", default="", help="overrides TQBC_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("combine", help="combine two orders")
    _add_universe(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--combinator", default="stq", help="stq, right-biased or tq:<schedule>")

    p = commands.add_parser("revise", help="revise a state by an input")
    _add_universe(p)
    p.add_argument("--state", required=True)
    p.add_argument("--input", required=True, help="sentence, or a world set such as {x, z}")
    p.add_argument("--op", default="lex", help="natural, restrained or lex")

    p = commands.add_parser("contract", help="contract a state by an input")
    _add_universe(p)
    p.add_argument("--state", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--op", default="via-combi", help="via-combi, natural, lex or priority")
    p.add_argument("--revision", default="lex")
    p.add_argument("--combinator", default="stq")

    p = commands.add_parser("check", help="check a postulate or a combinator property")
    _add_universe(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--postulate")
    target.add_argument("--property")
    p.add_argument("--state", help="state for postulates")
    p.add_argument("--revision", default="lex")
    p.add_argument("--contraction", help="contraction operator for contraction postulates")
    p.add_argument("--combinator", default="stq")
    p.add_argument("--left", help="orders for combinator properties")
    p.add_argument("--right")
    p.add_argument("--combined")
    p.add_argument("--expect-fail", action="store_true", help="a counterexample is the expected outcome")
    p.add_argument("--json", action="store_true")

    p = commands.add_parser("verify", help="run an exhaustive theorem check")
    p.add_argument("--theorem", required=True)
    p.add_argument("--size", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")

    p = commands.add_parser("demo", help="narrated demonstrations")
    p.add_argument("name", choices=["triviality"])
    return parser


def _cmd_combine(args: argparse.Namespace, out) -> int:
    space = resolve_space(args.atoms, args.worlds)
    combinator = Combinator.parse(args.combinator)
    result = combine(parse_tpo(args.left, space), parse_tpo(args.right, space), combinator)
    print(format_tpo(result, space), file=out)
    return EXIT_OK


def _state(text: str, space: WorldSpace) -> BeliefState:
    return BeliefState(parse_tpo(text, space), space.vocabulary)


def _cmd_revise(args: argparse.Namespace, out) -> int:
    space = resolve_space(args.atoms, args.worlds)
    state = _state(args.state, space)
    result = revise(state, parse_input(args.input, space), args.op)
    print(format_tpo(result.order, space), file=out)
    return EXIT_OK


def _cmd_contract(args: argparse.Namespace, out) -> int:
    space = resolve_space(args.atoms, args.worlds)
    state = _state(args.state, space)
    op = ContractionOpId.parse(args.op, args.revision, args.combinator)
    result = contract(state, parse_input(args.input, space), op)
    print(format_tpo(result.order, space), file=out)
    return EXIT_OK


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise BeliefChangeError(f"missing {', '.join(missing)}")


def _emit_check(found: Optional[Counterexample], space: WorldSpace, expect_fail: bool, as_json: bool, out) -> int:
    report = None if found is None else counterexample_report(found, space)
    if as_json:
        print(json.dumps({"holds": found is None, "counterexample": report and report.model_dump()}, indent=2), file=out)
    elif report is None:
        print("holds", file=out)
    else:
        print(format_counterexample(report), file=out)
    return EXIT_OK if (found is not None) == expect_fail else EXIT_UNEXPECTED


def _cmd_check(args: argparse.Namespace, out) -> int:
    space = resolve_space(args.atoms, args.worlds)
    if args.property:
        _require(args, "left", "right", "combined")
        found = check_property(
            args.property,
            parse_tpo(args.left, space),
            parse_tpo(args.right, space),
            parse_tpo(args.combined, space),
        )
    else:
        _require(args, "state")
        postulate = PostulateId.parse(args.postulate)
        contraction = None
        if args.contraction:
            contraction = ContractionOpId.parse(args.contraction, args.revision, args.combinator)
        found = check_postulate(postulate, _state(args.state, space), args.revision, contraction)
    return _emit_check(found, space, args.expect_fail, args.json, out)


def _cmd_verify(args: argparse.Namespace, out) -> int:
    report = run_theorem(args.theorem, args.size)
    if args.json:
        print(report.model_dump_json(indent=2), file=out)
    else:
        print(format_report(report), file=out)
    if args.timing:
        print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_UNEXPECTED


def _cmd_demo(args: argparse.Namespace, out) -> int:
    vocabulary = Vocabulary(("p", "q"))
    space = vocabulary.space
    witness = triviality_witness(vocabulary)
    lines: List[str] = [
        f"state: {format_tpo(witness.order, space)}   (atoms p, q; worlds written as truth values of p q)",
        "  [Psi] = p & q",
    ]
    for op in REVISION_OPS:
        lines.append(f"  {op.value}: [Psi * !p] = !p & q and [Psi * (p <-> !q)] = p <-> !q")

    failures = 0
    for op in REVISION_OPS:
        contraction = ContractionOpId.parse("via-combi", op.value, STQ.token)
        found = check_postulate(PostulateId.EHI, witness, op, contraction)
        if found is None:
            failures += 1
            lines.append(f"EHI unexpectedly holds under {contraction.label}")
        else:
            lines.append(f"under {contraction.label}:")
            lines.append(format_counterexample(counterexample_report(found, space)))

    not_p = models(parse_sentence("!p", vocabulary), vocabulary)
    xor = models(parse_sentence("p <-> !q", vocabulary), vocabulary)
    found = vac_instance(witness, RevisionOpId.LEXICOGRAPHIC, not_p, xor)
    if found is None:
        failures += 1
        lines.append("VAC unexpectedly holds at A = !p, B = p <-> !q")
    else:
        lines.append(format_counterexample(counterexample_report(found, space)))

    count = len(find_triviality_witnesses(vocabulary))
    lines.append(f"{count} state(s) over p, q satisfy all three clauses")
    print("\n".join(lines), file=out)
    return EXIT_OK if failures == 0 else EXIT_UNEXPECTED


_COMMANDS = {
    "combine": _cmd_combine,
    "revise": _cmd_revise,
    "contract": _cmd_contract,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "demo": _cmd_demo,
}


def cli_main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.log_level)
    try:
        return _COMMANDS[args.command](args, out)
    except BeliefChangeError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
