"""Command-line front end.

Subcommands:
  check      arithmetic D_pi verdict for a simple group or a factor list
  brute      definitional D_pi / E_pi on a realized permutation group
  crosscheck sweep all pi within pi(G), compare criterion vs brute force
  split      sigma/tau split verdict under the split-Hall hypothesis
  tables     dump the embedded classification tables
  corpus     run the full cross-validation + structural sweep

Exit codes: 0 = success / true verdict, 1 = false verdict, 2 = error,
3 = crosscheck disagreement.  --json emits a versioned report (schema 1).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .arith import prime_set
from .catalog import facts, parse_group
from .composition import SplitHypothesis, decide_dpi_composite, parse_factors, wielandt_split
from .criterion import Verdict, decide_dpi_simple
from .permbrute import (
    BruteForceBoundError,
    HallReport,
    check_final_corollary,
    is_dpi_brute,
    maximal_pi_subgroups,
    realize,
)
from .tables import dump_tables

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_DISAGREE = 3

CORPUS_SIMPLE = (
    "Alt:5", "Alt:6",
    "Lie:A:2:4", "Lie:A:2:5", "Lie:A:2:7",
    "Lie:A:2:8", "Lie:A:2:9", "Lie:A:2:11",
)


def _parse_pi(text: str) -> frozenset[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse prime list {text!r}: {exc}") from None
    return prime_set(values)


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        report = {"schema": 1, **report}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _verdict_report(v: Verdict) -> dict:
    witness = None
    if v.witness is not None:
        witness = {
            "condition": v.witness.condition,
            "subcase": v.witness.subcase,
            "bindings": {k: val for k, val in sorted(v.witness.bindings.items())},
        }
    return {
        "group": v.group.spec(),
        "pi_effective": sorted(v.pi_effective),
        "dpi": v.dpi,
        "witness": witness,
    }


def _cmd_check(args) -> int:
    pi = _parse_pi(args.pi)
    if args.factors:
        cv = decide_dpi_composite(parse_factors(args.factors), pi)
        report = {
            "command": "check",
            "factors": args.factors,
            "pi": sorted(pi),
            "dpi": cv.dpi,
            "trace": [{"factor": f, "dpi": d, "witness": w} for f, d, w in cv.trace],
        }
        lines = [f"D_pi = {cv.dpi} for factors [{args.factors}], pi = {sorted(pi)}"]
        lines += [f"  {f}: {'true' if d else 'false'} ({w})" for f, d, w in cv.trace]
        _emit(report, args.json, lines)
        return EXIT_TRUE if cv.dpi else EXIT_FALSE
    gid = parse_group(args.group)
    v = decide_dpi_simple(gid, pi)
    report = {"command": "check", "pi": sorted(pi), **_verdict_report(v)}
    lines = [f"D_pi = {v.dpi} for {gid}, pi = {sorted(pi)}",
             f"  witness: {v.witness_text()}"]
    _emit(report, args.json, lines)
    return EXIT_TRUE if v.dpi else EXIT_FALSE


def _hall_report_dict(r: HallReport) -> dict:
    structural = None
    if r.structural is not None:
        structural = {
            "hall_solvable": r.structural["hall_solvable"],
            "nilpotent_factor_per_partition": [
                {"sigma": list(s), "tau": list(t), "holds": ok}
                for (s, t), ok in sorted(r.structural["nilpotent_factor_per_partition"].items())
            ],
        }
    return {
        "pi": sorted(r.pi),
        "pi_effective": sorted(r.pi_effective),
        "hall_order": r.hall_order,
        "epi": r.epi,
        "dpi": r.dpi,
        "maximal_classes": [
            {"order": c.order, "class_size": c.class_size}
            for c in r.maximal_classes
        ],
        "structural": structural,
    }


def _cmd_brute(args) -> int:
    pi = _parse_pi(args.pi)
    g = realize(args.group)
    r = maximal_pi_subgroups(g, pi)
    report = {"command": "brute", "group": args.group, **_hall_report_dict(r)}
    lines = [f"{g.name}: pi = {sorted(pi)}, hall_order = {r.hall_order}",
             f"  epi = {r.epi}, dpi = {r.dpi}"]
    for c in r.maximal_classes:
        lines.append(f"  maximal pi-class: order {c.order}, {c.class_size} conjugates")
    if r.structural is not None:
        lines.append(f"  hall_solvable = {r.structural['hall_solvable']}")
    _emit(report, args.json, lines)
    return EXIT_TRUE if r.dpi else EXIT_FALSE


def _crosscheck_group(spec: str) -> tuple[int, list[dict]]:
    gid = parse_group(spec)
    g = realize(gid)
    spectrum = sorted(facts(gid).spectrum)
    rows = []
    disagreements = 0
    for k in range(len(spectrum) + 1):
        for combo in itertools.combinations(spectrum, k):
            pi = frozenset(combo)
            brute = is_dpi_brute(g, pi)
            crit = decide_dpi_simple(gid, pi).dpi
            agree = brute == crit
            disagreements += 0 if agree else 1
            rows.append({"pi": sorted(pi), "brute": brute, "criterion": crit,
                         "agree": agree})
    return disagreements, rows


def _cmd_crosscheck(args) -> int:
    disagreements, rows = _crosscheck_group(args.group)
    report = {"command": "crosscheck", "group": args.group,
              "subsets_checked": len(rows), "disagreements": disagreements,
              "rows": rows}
    lines = [f"{args.group}: {len(rows)} subsets checked, "
             f"{disagreements} disagreements"]
    for row in rows:
        if not row["agree"]:
            lines.append(f"  DISAGREE pi={row['pi']}: brute={row['brute']}, "
                         f"criterion={row['criterion']}")
    _emit(report, args.json, lines)
    return EXIT_TRUE if disagreements == 0 else EXIT_DISAGREE


def _cmd_split(args) -> int:
    sigma = _parse_pi(args.sigma)
    tau = _parse_pi(args.tau)
    spec = parse_factors(args.factors if args.factors else args.group)
    hyp = SplitHypothesis(sigma=sigma, tau=tau, hall_split_assumed=True)
    cv = wielandt_split(spec, sigma, tau, hyp)
    report = {
        "command": "split",
        "sigma": sorted(sigma),
        "tau": sorted(tau),
        "dpi": cv.dpi,
        "conditional": cv.conditional,
        "condition_note": cv.condition_note,
        "trace": [{"factor": f, "dpi": d, "witness": w} for f, d, w in cv.trace],
    }
    lines = [f"D_(sigma u tau) = {cv.dpi} for sigma = {sorted(sigma)}, "
             f"tau = {sorted(tau)}"]
    if cv.conditional:
        lines.append(f"  {cv.condition_note}")
    lines += [f"  {f}: {'true' if d else 'false'} ({w})" for f, d, w in cv.trace]
    _emit(report, args.json, lines)
    return EXIT_TRUE if cv.dpi else EXIT_FALSE


def _cmd_tables(args) -> int:
    data = dump_tables()
    lines = []
    for key, rows in data.items():
        lines.append(f"{key}: {len(rows)} rows")
        for row in rows:
            lines.append(f"  {row['group']}: pi={row['pi']}  {row['structure']}")
    _emit({"command": "tables", **data}, args.json, lines)
    return EXIT_TRUE


def _cmd_corpus(args) -> int:
    """Criterion-vs-brute sweep plus the structural lemma sweep."""
    total_rows = 0
    total_disagreements = 0
    per_group = []
    structural_violations = 0
    for spec in CORPUS_SIMPLE:
        disagreements, rows = _crosscheck_group(spec)
        total_rows += len(rows)
        total_disagreements += disagreements
        per_group.append({"group": spec, "subsets": len(rows),
                          "disagreements": disagreements})
        gid = parse_group(spec)
        g = realize(gid)
        spectrum = sorted(facts(gid).spectrum)
        for k in range(2, len(spectrum) + 1):
            for combo in itertools.combinations(spectrum, k):
                pi = frozenset(combo)
                r = maximal_pi_subgroups(g, pi)
                if not (r.epi and r.structural is not None):
                    continue
                hypo = (not facts(gid).spectrum <= pi) and (2 not in pi or 3 not in pi)
                if hypo:
                    if not r.structural["hall_solvable"]:
                        structural_violations += 1
                    if not all(r.structural["nilpotent_factor_per_partition"].values()):
                        structural_violations += 1
                for (s, t), _ in r.structural["nilpotent_factor_per_partition"].items():
                    verdict = check_final_corollary(g, pi, frozenset(s), frozenset(t))
                    if verdict is False:
                        structural_violations += 1
    report = {
        "command": "corpus",
        "groups": per_group,
        "subsets_checked": total_rows,
        "disagreements": total_disagreements,
        "structural_violations": structural_violations,
    }
    lines = [f"{len(CORPUS_SIMPLE)} groups, {total_rows} subsets checked, "
             f"{total_disagreements} disagreements, "
             f"{structural_violations} structural violations"]
    lines += [f"  {pg['group']}: {pg['subsets']} subsets, "
              f"{pg['disagreements']} disagreements" for pg in per_group]
    _emit(report, args.json, lines)
    ok = total_disagreements == 0 and structural_violations == 0
    return EXIT_TRUE if ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylowpi",
        description="Decide and verify the Sylow pi-theorem (D_pi) for finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, group=False, factors=False, pi=False, sigma_tau=False):
        if group:
            p.add_argument("--group", help="group spec, e.g. Alt:5, Spor:M11, Lie:A:2:7")
        if factors:
            p.add_argument("--factors", help="composition factors, e.g. 'Alt:5,Cyclic:7'")
        if pi:
            p.add_argument("--pi", required=True, help="comma-separated primes")
        if sigma_tau:
            p.add_argument("--sigma", required=True, help="comma-separated primes")
            p.add_argument("--tau", required=True, help="comma-separated primes")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--max-order", type=int, default=None,
                       help="override the order-1000 lattice bound")

    add_common(sub.add_parser("check", help="arithmetic D_pi verdict"),
               group=True, factors=True, pi=True)
    add_common(sub.add_parser("brute", help="brute-force D_pi / E_pi"),
               group=True, pi=True)
    add_common(sub.add_parser("crosscheck", help="criterion vs brute sweep"),
               group=True)
    add_common(sub.add_parser("split", help="sigma/tau split verdict"),
               group=True, factors=True, sigma_tau=True)
    add_common(sub.add_parser("tables", help="dump embedded tables"))
    add_common(sub.add_parser("corpus", help="full cross-validation sweep"))
    return parser


_HANDLERS = {
    "check": _cmd_check,
    "brute": _cmd_brute,
    "crosscheck": _cmd_crosscheck,
    "split": _cmd_split,
    "tables": _cmd_tables,
    "corpus": _cmd_corpus,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_order", None):
        os.environ["DPI_CORPUS_BOUND"] = str(args.max_order)
    if args.command in ("check", "split") and not (getattr(args, "group", None)
                                                   or getattr(args, "factors", None)):
        print("error: one of --group / --factors is required", file=sys.stderr)
        return EXIT_ERROR
    if args.command in ("brute", "crosscheck") and not getattr(args, "group", None):
        print("error: --group is required", file=sys.stderr)
        return EXIT_ERROR
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, BruteForceBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
