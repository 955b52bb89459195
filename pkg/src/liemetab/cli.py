"""Command-line front end.

Subcommands:

* ``classify``: structural verdicts only (no group-ring computation).
* ``brute``: exhaustive group-ring verdicts (Lie metabelian scan plus the
  commutativity checks).
* ``validate``: classify + brute over the whole catalog and cross-check the
  structural verdicts against the computed ones.
* ``audit``: evaluate the ring-identity audits, hypothesis-gated.
* ``export``: write every catalog entry to a directory of group files.
* ``list``: catalog names and orders.

Reports are JSON documents on stdout (``--format table`` renders a human
summary); identical inputs and seeds produce byte-identical output.  Exit
codes: 0 success/agreement, 1 disagreement or audit failure, 2 input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import audits as audits_mod
from .brute import (
    DEFAULT_ORDER_BUDGET,
    BruteReport,
    BudgetExceeded,
    active_kernel,
    is_check_commutative,
    is_plus_commutative,
    is_plus_lie_metabelian,
)
from .catalog import catalog, catalog_group
from .classify import ConditionReport, theorem1_verdict
from .groupfile import ParseError, load_group, write_group
from .groups import Group, ValidationError

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class _InputError(Exception):
    pass


def _load_source(args) -> Group:
    if bool(args.name) == bool(args.file):
        raise _InputError("exactly one of --name or --file is required")
    try:
        if args.name:
            return catalog_group(args.name)
        return load_group(args.file)
    except KeyError as e:
        raise _InputError(str(e.args[0])) from e
    except (OSError, ParseError, ValidationError, ValueError) as e:
        raise _InputError(str(e)) from e


def _condition_dict(rep: ConditionReport) -> dict:
    witnesses = {
        key: {k: (list(v) if isinstance(v, tuple) else v) for k, v in val.items()}
        for key, val in rep.witnesses.items()
    }
    return {
        "c1": rep.c1,
        "c2": rep.c2,
        "c3": rep.c3,
        "c4": rep.c4,
        "verdict": rep.theorem1,
        "witnesses": witnesses,
    }


def _theorem2_dict(rep: ConditionReport) -> dict:
    return {
        "nonsquare_subgroup_abelian": rep.t2_1,
        "elementary_abelian_index2": rep.t2_2,
        "verdict": rep.theorem2,
    }


def _brute_dict(rep: BruteReport, plus_comm: bool, check_comm: bool) -> dict:
    return {
        "lie_metabelian": rep.lie_metabelian,
        "witness": list(rep.witness) if rep.witness else None,
        "bracket_count": rep.bracket_count,
        "deduped_bracket_count": rep.deduped_bracket_count,
        "plus_commutative": plus_comm,
        "check_commutative": check_comm,
    }


def _base_report(G: Group) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "group": G.name or "unnamed",
        "order": G.order,
    }


def _classify_report(G: Group) -> dict:
    rep = theorem1_verdict(G)
    out = _base_report(G)
    out["theorem1"] = _condition_dict(rep)
    out["theorem2"] = _theorem2_dict(rep)
    out["hamiltonian_2group"] = rep.hamiltonian_2group
    return out


def _brute_report(G: Group, budget: int) -> dict:
    rep = is_plus_lie_metabelian(G, budget=budget)
    out = _base_report(G)
    out["brute"] = _brute_dict(rep, is_plus_commutative(G), is_check_commutative(G))
    return out


def _audit_entry(report: audits_mod.AuditReport) -> dict:
    out = {
        "identity": report.identity_name,
        "status": "passed" if report.passed else "failed",
        "tuples_checked": report.tuples_checked,
        "counterexample": report.counterexample,
    }
    if report.details is not None:
        out["details"] = report.details
    return out


def _skipped_entry(identity: str, reason: str) -> dict:
    return {"identity": identity, "status": "skipped", "reason": reason}


def _run_audits(G: Group, which: str, sample_budget: int, seed: int, budget: int) -> list[dict]:
    entries: list[dict] = []

    def gated(identity: str, fn):
        try:
            entries.append(_audit_entry(fn()))
        except audits_mod.HypothesisViolated as e:
            entries.append(_skipped_entry(identity, str(e)))

    if which in ("eq1", "all"):
        entries.append(_audit_entry(audits_mod.audit_eq1_report(G)))
    if which in ("expansions", "all"):
        entries.append(_audit_entry(audits_mod.audit_bracket_expansions(G, sample_budget, seed)))
        entries.append(_audit_entry(audits_mod.audit_involutions_expansion(G, sample_budget, seed)))
    if which in ("eq2", "eq3", "all"):
        gated("eq2+eq3", lambda: audits_mod.audit_condition4_identities(G, sample_budget, seed))
    if which in ("cond3", "all"):
        gated("cond3", lambda: audits_mod.audit_condition3_formula(
            G, sample_budget=sample_budget, seed=seed))
    if which in ("lemmas", "all"):
        gated("lemmas", lambda: audits_mod.lemma_conformance(G, budget=budget))
    return entries


# -- rendering ---------------------------------------------------------------


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    print(_render_table(doc))


def _render_table(doc: dict) -> str:
    lines: list[str] = []
    if "reports" in doc:
        for rep in doc["reports"]:
            lines.append(_render_table(rep))
            lines.append("")
        lines.append(f"all_agree: {doc['all_agree']}")
        return "\n".join(lines)
    lines.append(f"group {doc['group']} (order {doc['order']})")
    if "theorem1" in doc:
        t1 = doc["theorem1"]
        conds = " ".join(f"c{i}={t1[f'c{i}']}" for i in range(1, 5))
        lines.append(f"  theorem1: {conds} -> {t1['verdict']}")
        t2 = doc["theorem2"]
        lines.append(
            "  theorem2: "
            f"K_abelian={t2['nonsquare_subgroup_abelian']} "
            f"elem_ab_index2={t2['elementary_abelian_index2']} -> {t2['verdict']}"
        )
        lines.append(f"  hamiltonian_2group: {doc['hamiltonian_2group']}")
    if "brute" in doc:
        b = doc["brute"]
        lines.append(
            f"  brute: lie_metabelian={b['lie_metabelian']} "
            f"witness={b['witness']} brackets={b['bracket_count']} "
            f"deduped={b['deduped_bracket_count']}"
        )
        lines.append(
            f"  brute: plus_commutative={b['plus_commutative']} "
            f"check_commutative={b['check_commutative']}"
        )
    if "agreement" in doc:
        lines.append(f"  agreement: {doc['agreement']}")
    for audit in doc.get("audits", ()):
        extra = ""
        if audit["status"] == "skipped":
            extra = f" ({audit['reason']})"
        elif audit["status"] == "failed":
            extra = f" counterexample={audit['counterexample']}"
        else:
            extra = f" ({audit['tuples_checked']} tuples)"
        lines.append(f"  audit {audit['identity']}: {audit['status']}{extra}")
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------------


def _cmd_classify(args) -> int:
    G = _load_source(args)
    _emit(_classify_report(G), args.format)
    return EXIT_OK


def _cmd_brute(args) -> int:
    G = _load_source(args)
    _emit(_brute_report(G, args.budget), args.format)
    return EXIT_OK


def _cmd_validate(args) -> int:
    reports = []
    all_agree = True
    for entry in catalog(args.max_order):
        G = entry.group
        rep = _classify_report(G)
        brute = is_plus_lie_metabelian(G, budget=args.budget)
        check_comm = is_check_commutative(G)
        rep["brute"] = _brute_dict(brute, is_plus_commutative(G), check_comm)
        agree = (
            rep["theorem1"]["verdict"] == brute.lie_metabelian
            and rep["theorem2"]["verdict"] == check_comm
        )
        rep["agreement"] = agree
        all_agree &= agree
        reports.append(rep)
    doc = {
        "schema": SCHEMA_VERSION,
        "seed": args.seed,
        "max_order": args.max_order,
        "kernel": active_kernel(),
        "reports": reports,
        "all_agree": all_agree,
    }
    _emit(doc, args.format)
    return EXIT_OK if all_agree else EXIT_DISAGREEMENT


def _cmd_audit(args) -> int:
    G = _load_source(args)
    entries = _run_audits(G, args.identity, args.sample_budget, args.seed, args.budget)
    doc = _base_report(G)
    doc["seed"] = args.seed
    doc["audits"] = entries
    _emit(doc, args.format)
    failed = any(e["status"] == "failed" for e in entries)
    return EXIT_DISAGREEMENT if failed else EXIT_OK


def _cmd_export(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in catalog(args.max_order):
        fname = entry.name.replace(":", "_").replace("^", "p") + ".group"
        write_group(entry.group, out / fname)
        written.append(fname)
    _emit({"schema": SCHEMA_VERSION, "directory": str(out), "files": written}, args.format)
    return EXIT_OK


def _cmd_list(args) -> int:
    rows = [
        {"name": e.name, "order": e.group.order, "construction": e.construction}
        for e in catalog(args.max_order)
    ]
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, "groups": rows}, indent=2, sort_keys=True))
    else:
        for row in rows:
            print(f"{row['name']:<10} order {row['order']:>3}  {row['construction']}")
    return EXIT_OK


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", help="catalog group name (see the list subcommand)")
    p.add_argument("--file", help="path to a .group file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liemetab",
        description="Decide and audit Lie metabelian symmetric elements of integral group rings.",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    # accept --format after the subcommand too; SUPPRESS keeps an unset
    # subcommand-level flag from clobbering the root-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural verdicts only", parents=[common])
    _add_source_args(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("brute", help="exhaustive group-ring verdicts", parents=[common])
    _add_source_args(p)
    p.add_argument("--budget", type=int, default=DEFAULT_ORDER_BUDGET,
                   help="maximum group order for the scan")
    p.set_defaults(fn=_cmd_brute)

    p = sub.add_parser("validate", parents=[common],
                       help="cross-validate structural vs brute verdicts on the catalog")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--budget", type=int, default=DEFAULT_ORDER_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("audit", help="run the ring-identity audits", parents=[common])
    _add_source_args(p)
    p.add_argument("--identity", default="all",
                   choices=("eq1", "eq2", "eq3", "expansions", "cond3", "lemmas", "all"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-budget", type=int, default=1000)
    p.add_argument("--budget", type=int, default=DEFAULT_ORDER_BUDGET)
    p.set_defaults(fn=_cmd_audit)

    p = sub.add_parser("export", parents=[common],
                       help="write the catalog to a directory of group files")
    p.add_argument("--out", required=True)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=_cmd_export)

    p = sub.add_parser("list", help="list catalog groups", parents=[common])
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=_cmd_list)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except _InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
