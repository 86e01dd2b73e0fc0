"""Command-line interface: run session files and emit task reports.

Exit codes: 0 all tasks pass, 1 an expectation failed, 2 parse or contract
error, 3 a resource cap was hit.  Text reports carry no timings and are
byte-for-byte reproducible; JSON reports add a per-task timing field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import groebner
from .artinrees import (check_mixed_intersection, check_reltype_transfer,
                        find_ar_table, find_reduction_element, h0_length,
                        multiplicity, reltype, reltype_modulo,
                        uniform_ar_bound, verify_example1, verify_example2)
from .coeff import QQ, PrimeField
from .errors import (ArckError, BoundUnavailableError, ContractError,
                     ResourceLimitError, SessionError, StructureError)
from .ideals import Ideal
from .session import Session, Task, parse_session, render_value

EXIT_PASS, EXIT_EXPECT, EXIT_CONTRACT, EXIT_RESOURCE = 0, 1, 2, 3
_SEVERITY = {"pass": EXIT_PASS, "expect-fail": EXIT_EXPECT,
             "contract-error": EXIT_CONTRACT, "resource-cap": EXIT_RESOURCE}


def _gens_strings(ideal: Ideal):
    return [str(g) for g in ideal.canonical_generators()]


def _expect_match(expected, actual) -> bool:
    return expected is None or expected == actual


def _run_op(task: Task, session: Session, seed):
    p = task.params
    op = p["op"]
    ideals = session.ideals
    if op in ("intersect", "sum", "product", "saturate"):
        I, J = ideals[p["I"]], ideals[p["J"]]
        result = {"intersect": I.intersect, "sum": I.__add__,
                  "product": I.__mul__, "saturate": I.saturate}[op](J)
        return {"generators": _gens_strings(result)}, [], True
    if op == "power":
        result = ideals[p["I"]].power(p["n"])
        return {"generators": _gens_strings(result)}, [], True
    if op == "colon":
        I = ideals[p["I"]]
        result = I.colon(ideals[p["J"]] if "J" in p else p["f"])
        return {"generators": _gens_strings(result)}, [], True
    if op == "member":
        answer = ideals[p["I"]].contains(p["f"])
        ok = _expect_match(p.get("expect"), answer)
        return {"member": answer}, [], ok
    if op == "equal":
        answer = ideals[p["I"]].equals(ideals[p["J"]])
        ok = _expect_match(p.get("expect"), answer)
        return {"equal": answer}, [], ok
    if op == "reduction":
        y = find_reduction_element(ideals[p["I"]], p["n"],
                                   attempts=p.get("attempts", 64),
                                   seed=p.get("seed", seed))
        found = y is not None
        ok = _expect_match(p.get("expect"), found)
        return {"found": found, "element": None if y is None else str(y)}, [], ok
    if op == "multiplicity":
        value = multiplicity(session.rings[p["ring"]])
        ok = _expect_match(p.get("expect"), value)
        return {"value": value}, [], ok
    if op == "h0length":
        value = h0_length(ideals[p["I"]])
        ok = _expect_match(p.get("expect"), value)
        return {"value": value}, [], ok
    raise ContractError(f"unhandled op {op!r}")


def _run_example(task: Task):
    p = task.params
    fieldk = PrimeField(p["char"]) if "char" in p else QQ
    verify = verify_example1 if task.kind == "example1" else verify_example2
    v = verify(p["n"], fieldk)
    verdict = {"n": v.n, "witness": str(v.witness),
               "in_intersection": v.in_intersection,
               "in_shifted_product": v.in_shifted_product,
               "identity_holds": v.identity_holds}
    ok = v.identity_holds
    expect = p.get("expect")
    if expect is not None:
        if "in" in expect:
            ok = ok and expect["in"] == v.in_intersection
        if "out" in expect:
            ok = ok and expect["out"] == v.in_shifted_product
    return verdict, [str(v.witness)], ok


def execute_task(task: Task, session: Session, threads=1, seed=None):
    p = task.params
    if task.kind == "gb":
        basis = [str(g) for g in session.ideals[p["ideal"]].groebner()]
        return {"basis": basis}, [], True
    if task.kind == "op":
        return _run_op(task, session, seed)
    if task.kind == "ar":
        rep = find_ar_table(session.ideals[p["I"]], session.ideals[p["J"]],
                            p["nmax"], threads=threads)
        verdict = {"minimal_h": {str(n): h for n, h in
                                 sorted(rep.minimal_h.items())},
                   "uniform_h": rep.uniform_h, "complete": rep.complete}
        witnesses = [f"n={n} h={h}: {w}"
                     for (n, h), w in sorted(rep.witnesses.items())]
        ok = rep.complete and _expect_match(p.get("expect_uniform"),
                                            rep.uniform_h)
        return verdict, witnesses, ok
    if task.kind == "reltype":
        I = session.ideals[p["I"]]
        rep = (reltype_modulo(I, session.ideals[p["J"]]) if "J" in p
               else reltype(I))
        verdict = {"reltype": rep.reltype,
                   "kernel": [str(g) for g in rep.kernel_basis]}
        ok = _expect_match(p.get("expect"), rep.reltype)
        return verdict, [str(g) for g in rep.certificate], ok
    if task.kind == "bound":
        try:
            value = uniform_ar_bound(session.rings[p["ring"]],
                                     session.ideals[p["J"]])
            verdict = {"bound": value}
            ok = _expect_match(p.get("expect"), value)
        except BoundUnavailableError as exc:
            verdict = {"bound": None, "reason": str(exc)}
            ok = "expect" not in p
        return verdict, [], ok
    if task.kind in ("example1", "example2"):
        return _run_example(task)
    if task.kind == "lemma-checks":
        if p["check"] == "intersection":
            holds = check_mixed_intersection(
                session.ideals[p["N1"]], session.ideals[p["N2"]],
                p["h"], p["n"])
            return {"holds": holds}, [], holds
        I, J = session.ideals[p["I"]], session.ideals[p["J"]]
        h = p.get("h")
        if h is None:
            h = reltype_modulo(I, J).reltype
        holds = check_reltype_transfer(I, J, h, p["nmax"])
        return {"holds": holds, "h": h}, [], holds
    raise ContractError(f"unhandled task kind {task.kind!r}")


def run_session(session: Session, *, json_mode=False, task_filter=None,
                threads=1, seed=None, out=None):
    """Execute the session's tasks in order; returns the process exit code."""
    out = out if out is not None else sys.stdout
    records = []
    exit_code = EXIT_PASS
    selected = list(enumerate(session.tasks, start=1))
    if task_filter is not None:
        selected = [(i, t) for i, t in selected if t.label(i) == task_filter]
        if not selected:
            print(f"error: no task named {task_filter!r}", file=sys.stderr)
            return EXIT_CONTRACT
    for idx, task in selected:
        t0 = time.perf_counter()
        try:
            verdict, witnesses, ok = execute_task(task, session,
                                                  threads=threads, seed=seed)
            status = "pass" if ok else "expect-fail"
        except ResourceLimitError as exc:
            verdict, witnesses, status = {"error": str(exc)}, [], "resource-cap"
        except (ContractError, StructureError, SessionError, ValueError,
                ZeroDivisionError) as exc:
            verdict, witnesses, status = {"error": str(exc)}, [], "contract-error"
        dt = time.perf_counter() - t0
        exit_code = max(exit_code, _SEVERITY[status])
        records.append({
            "task": task.kind,
            "name": task.label(idx),
            "inputs": {k: render_value(v) for k, v in task.params.items()},
            "verdict": verdict,
            "witnesses": witnesses,
            "status": status,
            "timings": {"seconds": round(dt, 6)},
        })
    if json_mode:
        print(json.dumps(records, indent=2), file=out)
    else:
        for rec in records:
            print(f"== {rec['name']} ({rec['task']})", file=out)
            for key, val in rec["inputs"].items():
                print(f"   in  {key} = {val}", file=out)
            for key, val in rec["verdict"].items():
                print(f"   out {key} = {_fmt(val)}", file=out)
            for w in rec["witnesses"]:
                print(f"   witness {w}", file=out)
            print(f"   status: {rec['status']}", file=out)
        counts = {}
        for rec in records:
            counts[rec["status"]] = counts.get(rec["status"], 0) + 1
        summary = ", ".join(f"{counts[s]} {s}" for s in
                            ("pass", "expect-fail", "contract-error",
                             "resource-cap") if s in counts)
        print(f"-- {len(records)} task(s): {summary or 'none'}", file=out)
    return exit_code


def _fmt(val):
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in val.items()) + "}"
    if isinstance(val, list):
        return "[" + ", ".join(_fmt(v) for v in val) + "]"
    if val is None:
        return "none"
    return str(val)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arck",
        description="Groebner-based Artin-Rees checks over exact fields")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a session file")
    run.add_argument("file", help="session file path")
    run.add_argument("--json", action="store_true",
                     help="emit one JSON object per task")
    run.add_argument("--task", metavar="NAME",
                     help="run only the named task")
    run.add_argument("--deg-cap", type=int, metavar="N",
                     help="abort any basis computation past total degree N")
    run.add_argument("--threads", type=int, default=1, metavar="N",
                     help="parallel cells inside ar tables")
    run.add_argument("--seed", type=int, metavar="N",
                     help="seed for reduction-element searches")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    try:
        session = parse_session(text)
    except SessionError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except ArckError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    previous_cap = None
    if args.deg_cap is not None:
        previous_cap = groebner.set_degree_cap(args.deg_cap)
    try:
        return run_session(session, json_mode=args.json, task_filter=args.task,
                           threads=args.threads, seed=args.seed)
    finally:
        if previous_cap is not None:
            groebner.set_degree_cap(previous_cap)


def console_main():  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
