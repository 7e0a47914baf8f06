"""Command-line interface.

Exit codes: 0 on success, 1 when a verification-style subcommand reports a
negative result (broken braid relations, no conjugator found), 2 on usage
or input errors.  With --json all machine output is a single JSON document
on stdout; otherwise output is human-readable cycle notation.

The environment variable BRAIDPERM_LIMIT overrides the default resource
limit used by coset enumeration and table searches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, conjugacy, cosets, reps, search
from .perm import Permutation, format_cycles

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


def _limit(args: argparse.Namespace) -> int:
    if args.limit is not None:
        return args.limit
    env = os.environ.get("BRAIDPERM_LIMIT")
    return int(env) if env else cosets.DEFAULT_LIMIT


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _load_json(text_or_path: str) -> dict:
    if text_or_path.strip().startswith("{"):
        return json.loads(text_or_path)
    with open(text_or_path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_rep(text_or_path: str) -> reps.BraidRep:
    return reps.BraidRep.from_json_dict(_load_json(text_or_path))


def _rep_lines(rep: reps.BraidRep) -> list[str]:
    lines = [f"strands {rep.strands}, degree {rep.degree}"]
    lines.extend(
        f"generator {i}: {format_cycles(g)}" for i, g in enumerate(rep.gens, start=1)
    )
    return lines


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.psi:
        rep = reps.interleaving_rep(args.m, args.k)
    elif args.mu:
        rep = reps.canonical_rep(args.k)
    elif args.model2k:
        rep = reps.model_2k(args.model2k, args.k)
    elif args.model:
        rep = reps.block_model_rep(reps.ModelParams.from_json_dict(_load_json(args.model)))
    else:
        raise ValueError("choose one of --psi, --mu, --model2k, --model")
    _emit(rep.to_json_dict(), args.json, _rep_lines(rep))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    rep = _load_rep(args.rep)
    report = reps.verify_braid_relations(rep)
    data = {"ok": report.ok, "failures": [list(f) for f in report.failures]}
    lines = ["braid relations: pass" if report.ok else "braid relations: FAIL"]
    lines.extend(f"  {kind} relation violated at ({i}, {j})" for kind, i, j in report.failures)
    _emit(data, args.json, lines)
    return 0 if report.ok else VERIFICATION_FAILURE


def _cmd_analyze(args: argparse.Namespace) -> int:
    rep = _load_rep(args.rep)
    data = analysis.analysis_report(rep)
    lines = [f"{key}: {value}" for key, value in data.items()]
    _emit(data, args.json, lines)
    return 0


def _cmd_normalize(args: argparse.Namespace) -> int:
    params = reps.ModelParams.from_json_dict(_load_json(args.model))
    normal = conjugacy.normalize_model(params)
    data = normal.to_json_dict()
    lines = [
        f"residue p = {normal.p}",
        f"conjugator: {format_cycles(normal.conjugator)}",
    ]
    _emit(data, args.json, lines)
    return 0


def _cmd_conjugate(args: argparse.Namespace) -> int:
    rep_a = _load_rep(args.rep_a)
    rep_b = _load_rep(args.rep_b)
    theta = conjugacy.find_conjugator(rep_a, rep_b)
    if theta is None:
        _emit({"conjugate": False, "conjugator": None}, args.json, ["not conjugate"])
        return VERIFICATION_FAILURE
    data = {"conjugate": True, "conjugator": theta.to_json_dict()}
    _emit(data, args.json, [f"conjugator: {format_cycles(theta)}"])
    return 0


def _cmd_derive(args: argparse.Namespace) -> int:
    if args.young2:
        rep = cosets.two_subset_action(args.k)
    else:
        base = _load_rep(args.rep)
        gens_data = _load_json(args.subgroup)
        if set(gens_data) != {"degree", "generators"}:
            raise ValueError("subgroup JSON needs keys degree, generators")
        gens = [
            Permutation.from_cycles(cycles, gens_data["degree"])
            for cycles in gens_data["generators"]
        ]
        space = cosets.coset_space(gens_data["degree"], gens, _limit(args))
        rep = cosets.derived_hom(base, space)
    _emit(rep.to_json_dict(), args.json, _rep_lines(rep))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    mode = "by_brute_force" if args.brute else "by_condition"
    tables, report = search.enumerate_t_tables(args.m, args.l, args.k, mode, _limit(args))
    data = {
        "count": len(tables),
        "tables": [params.to_json_dict() for params in tables],
        "report": report.to_json_dict(),
    }
    lines = [f"{len(tables)} valid offset tables ({mode})"]
    _emit(data, args.json, lines)
    return 0


def _cmd_standardize(args: argparse.Namespace) -> int:
    rep = _load_rep(args.rep)
    theta = search.standardize_supp2m(rep)
    _emit(theta.to_json_dict(), args.json, [f"conjugator: {format_cycles(theta)}"])
    return 0


def _cmd_census_m3(args: argparse.Namespace) -> int:
    report = search.verify_m3_standardness(args.k, args.trials, args.seed)
    data = report.to_json_dict()
    lines = [
        f"{report.passes}/{report.candidates} trials confirmed ({report.verdict})",
    ]
    lines.extend(f"  {c}" for c in report.counterexamples)
    _emit(data, args.json, lines)
    return 0 if report.verdict == "confirmed" else VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidperm",
        description="Construct, verify and classify permutation representations of braid groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")
        p.add_argument("--limit", type=int, default=None, help="resource limit override")

    p = sub.add_parser("construct", help="build a model rep")
    p.add_argument("--psi", action="store_true", help="interleaving model (needs --m, --k)")
    p.add_argument("--mu", action="store_true", help="canonical rep (needs --k)")
    p.add_argument("--model2k", type=int, choices=(1, 2, 3), help="classical degree-2k model")
    p.add_argument("--model", help="block-model params as JSON text or a file path")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--k", type=int, default=7)
    add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check the braid relations")
    p.add_argument("--rep", required=True, help="rep as JSON text or a file path")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="supports, goodness, transitivity, cyclicity")
    p.add_argument("--rep", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("normalize", help="normal form of a block model")
    p.add_argument("--model", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("conjugate", help="search for a conjugator between two reps")
    p.add_argument("--rep-a", required=True)
    p.add_argument("--rep-b", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("derive", help="rep induced on cosets of a subgroup")
    p.add_argument("--rep", help="base rep (JSON text or file path)")
    p.add_argument("--subgroup", help="subgroup generators as JSON")
    p.add_argument("--young2", action="store_true", help="2-subset action instead")
    p.add_argument("--k", type=int, default=4)
    add_common(p)
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("enumerate", help="enumerate valid offset tables")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="filter all tables by brute force")
    add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("standardize", help="conjugate a window-supported rep onto the model")
    p.add_argument("--rep", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_standardize)

    p = sub.add_parser("census-m3", help="degree-3k standardness round-trips")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=_cmd_census_m3)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
