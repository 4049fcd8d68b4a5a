"""Command-line front end.

Subcommands:
  eval              run a knowledge-base evaluation under one logic
  oracle verify     run the coset-oracle and law suites
  algebra selftest  run the event-algebra and implication-calculus suites
  lewis demo        show the gap between implication and conditioning

Exit codes: 0 success, 1 verification failure, 2 malformed input.
Identical inputs and seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .algebra import AtomSpace
from .coset import max_expand_atoms
from .engine import (
    KnowledgeBaseError,
    build_space,
    evaluate,
    load_kb,
    load_observation,
)
from .semantics import (
    PossibilityAssignment,
    ProbabilityMeasure,
    lewis_gap,
    measure_from_json,
)
from .verify import algebra_suites, golden_check, oracle_suites


class InputError(Exception):
    """Bad flags or malformed input files; exits with code 2."""


def format_grade(grade) -> str:
    return f"{float(grade):.12g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cea",
        description="Conditional event algebra: evaluation, verification, demos",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a knowledge base under one logic")
    p_eval.add_argument("--kb", required=True, help="knowledge base JSON file")
    p_eval.add_argument("--observe", required=True, help="observation JSON file")
    p_eval.add_argument("--aldp", required=True, choices=["cl", "fl", "pl", "cpl"],
                        help="logic: classical, fuzzy, probability, conditional probability")
    p_eval.add_argument("--query", help="diagnosis variable (default: first declared)")
    p_eval.add_argument("--measure", help='measure JSON file or "uniform" (pl, cpl)')
    p_eval.add_argument("--poss", help="possibility JSON file (fl)")
    p_eval.add_argument("--atom", help="joint assignment var=value,... (cl)")
    p_eval.add_argument("--format", choices=["text", "json"], default="text")
    p_eval.set_defaults(func=cmd_eval)

    p_oracle = sub.add_parser("oracle", help="oracle suites")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p_verify = oracle_sub.add_parser("verify", help="verify the calculus against cosets")
    p_verify.add_argument("--atoms", type=int, default=3)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=10000)
    p_verify.add_argument("--higher-order", action="store_true",
                          help="include the iterated-conditional suites")
    p_verify.add_argument("--golden", help="directory of recorded golden facts to re-check")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_oracle_verify)

    p_algebra = sub.add_parser("algebra", help="event algebra suites")
    algebra_sub = p_algebra.add_subparsers(dest="algebra_command", required=True)
    p_selftest = algebra_sub.add_parser("selftest", help="ring, lattice and implication laws")
    p_selftest.add_argument("--atoms", type=int, default=3)
    p_selftest.add_argument("--seed", type=int, default=0)
    p_selftest.add_argument("--samples", type=int, default=10000)
    p_selftest.add_argument("--format", choices=["text", "json"], default="text")
    p_selftest.set_defaults(func=cmd_algebra_selftest)

    p_lewis = sub.add_parser("lewis", help="implication vs conditioning")
    lewis_sub = p_lewis.add_subparsers(dest="lewis_command", required=True)
    p_demo = lewis_sub.add_parser("demo", help="construct a large implication/conditioning gap")
    p_demo.add_argument("--atoms", type=int, default=10)
    p_demo.add_argument("--format", choices=["text", "json"], default="text")
    p_demo.set_defaults(func=cmd_lewis_demo)

    return parser


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _parse_atom_assignment(text: str) -> dict[str, str]:
    assignment = {}
    for part in text.split(","):
        if "=" not in part:
            raise InputError(f"--atom entries must be var=value, got {part!r}")
        var, value = part.split("=", 1)
        assignment[var.strip()] = value.strip()
    return assignment


def cmd_eval(args) -> int:
    try:
        kb = load_kb(args.kb)
        grounding = build_space(kb)
        obs = load_observation(kb, args.observe)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load inputs: {exc}") from None

    query = args.query
    if query is None:
        diagnoses = kb.diagnosis_variables()
        if not diagnoses:
            raise InputError("knowledge base declares no diagnosis variable")
        query = diagnoses[0].name

    if args.aldp in ("pl", "cpl"):
        if not args.measure:
            raise InputError(f"--aldp {args.aldp} needs --measure")
        if args.measure == "uniform":
            sem_input = ProbabilityMeasure.uniform(grounding.space)
        else:
            sem_input = measure_from_json(
                grounding.space, _load_json_file(args.measure), grounding.atom_assignments
            )
    elif args.aldp == "fl":
        if not args.poss:
            raise InputError("--aldp fl needs --poss")
        sem_input = PossibilityAssignment.from_json(_load_json_file(args.poss))
    else:
        if not args.atom:
            raise InputError("--aldp cl needs --atom")
        sem_input = grounding.atom_of_assignment(_parse_atom_assignment(args.atom))

    rows = evaluate(grounding, obs, args.aldp, query, sem_input)

    if args.format == "json":
        results = []
        for row in rows:
            if row.error:
                results.append({"value": row.value, "error": row.error})
            else:
                results.append({"value": row.value, "grade": float(row.grade)})
        print(json.dumps({"query": query, "aldp": args.aldp, "results": results}))
    else:
        print(f"query {query} ({args.aldp})")
        for row in rows:
            if row.error:
                print(f"  {row.value}: {row.error}")
            else:
                print(f"  {row.value}: {format_grade(row.grade)}")
    return 0


def _check_atoms_bound(atoms: int) -> None:
    bound = max_expand_atoms()
    if atoms < 1:
        raise InputError("--atoms must be at least 1")
    if atoms > bound:
        raise InputError(
            f"--atoms {atoms} exceeds the expansion bound of {bound} "
            "(override with CEA_MAX_ATOMS)"
        )


def _emit_sections(title: str, sections, args, extra: dict) -> int:
    failed = [c for _, checks in sections for c in checks if not c.passed]
    if args.format == "json":
        payload = dict(extra)
        payload["command"] = title
        payload["passed"] = not failed
        payload["sections"] = [
            {
                "name": name,
                "checks": [
                    {"name": c.name, "passed": c.passed, "cases": c.cases,
                     "detail": c.detail}
                    for c in checks
                ],
            }
            for name, checks in sections
        ]
        print(json.dumps(payload))
    else:
        settings = " ".join(f"{k}={v}" for k, v in extra.items())
        print(f"{title}: {settings}")
        for name, checks in sections:
            print(f"[{name}]")
            for c in checks:
                status = "PASS" if c.passed else "FAIL"
                line = f"  {status} {c.name} ({c.cases} cases)"
                if c.detail:
                    line += f" -- {c.detail}"
                print(line)
        total = sum(len(checks) for _, checks in sections)
        if failed:
            print(f"{len(failed)} of {total} checks FAILED")
        else:
            print(f"all {total} checks passed")
    return 1 if failed else 0


def cmd_oracle_verify(args) -> int:
    _check_atoms_bound(args.atoms)
    if args.samples < 1:
        raise InputError("--samples must be positive")
    space = AtomSpace(args.atoms)
    exhaustive = args.atoms <= 3
    rng = None if exhaustive else random.Random(args.seed)
    sections = oracle_suites(space, rng, args.samples,
                             higher_order=args.higher_order, seed=args.seed)
    if args.golden:
        sections = sections + [("golden facts", golden_check(args.golden))]
    extra = {
        "atoms": args.atoms,
        "seed": args.seed,
        "samples": args.samples,
        "mode": "exhaustive" if exhaustive else "sampled",
    }
    return _emit_sections("oracle verify", sections, args, extra)


def cmd_algebra_selftest(args) -> int:
    _check_atoms_bound(args.atoms)
    if args.samples < 1:
        raise InputError("--samples must be positive")
    space = AtomSpace(args.atoms)
    exhaustive = args.atoms <= 4
    rng = None if exhaustive else random.Random(args.seed)
    sections = algebra_suites(space, rng, args.samples)
    extra = {
        "atoms": args.atoms,
        "seed": args.seed,
        "mode": "exhaustive" if exhaustive else "sampled",
    }
    return _emit_sections("algebra selftest", sections, args, extra)


def cmd_lewis_demo(args) -> int:
    if args.atoms < 2:
        raise InputError("--atoms must be at least 2")
    _check_atoms_bound(args.atoms)
    space = AtomSpace(args.atoms)
    p = ProbabilityMeasure.uniform(space)
    b = space.atom(0)
    a = space.zero
    p_imp, p_cond, gap = lewis_gap(p, a, b)
    if args.format == "json":
        print(json.dumps({
            "atoms": args.atoms,
            "p_implies": float(p_imp),
            "p_cond": float(p_cond),
            "gap": float(gap),
        }))
    else:
        print(f"atoms: {args.atoms}")
        print("measure: uniform, antecedent: one atom, consequent: empty")
        print(f"p(b => a): {format_grade(p_imp)}")
        print(f"p(a|b):    {format_grade(p_cond)}")
        print(f"gap:       {format_grade(gap)}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KnowledgeBaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
