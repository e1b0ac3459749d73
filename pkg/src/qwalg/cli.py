"""Command-line front end: ``python3 -m qwalg <command> ...``.

Exit codes: 0 when every requested check passes, 1 when some check fails
(the witness is printed), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import AlgebraError, FiniteAlgebra, MBEAlgebra, phi_to_mbe, psi_to_be
from .axioms import (CLASSES, CheckOutcome, ClassId, Status, check_axiom, parse_axiom_id,
                     parse_class_id)
from .center import center, check_commutation_equivalences
from .classify import classify, verify_meta_theorems
from .effect import build_effect, check_effect_axioms
from .fileio import load_file, to_text
from .fixtures import run_fixtures
from .search import (EnumerationConfig, SearchBudgetExceeded, enumerate_models,
                     find_counterexample, models_up_to)
from .terms import TermSyntaxError, UnboundVariable, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    model: str | None = None
    outcomes: list[dict] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    text: list[str] = field(default_factory=list)   # extra human-readable lines
    failed: bool = False
    bare: bool = False    # text output is just ``text`` (e.g. a converted file)

    def add(self, out: CheckOutcome, names: Sequence[str], label: str | None = None,
            counts_as_failure: bool = True) -> None:
        ident = label or (out.id.value if hasattr(out.id, "value") else str(out.id))
        witness = None
        if out.witness is not None:
            witness = {v: names[i] for v, i in zip(out.variables, out.witness)} \
                if len(out.variables) == len(out.witness) else [names[i] for i in out.witness]
        rec = {"id": ident, "status": out.status.value, "witness": witness}
        if out.failed is not None:
            rec["failed"] = out.failed.value
        if out.prereq is not None:
            rec["prereq"] = out.prereq.value
        if out.detail:
            rec["detail"] = out.detail
        self.outcomes.append(rec)
        if counts_as_failure and out.status is Status.FAIL:
            self.failed = True

    def render_text(self) -> str:
        if self.bare:
            return "\n".join(self.text)
        lines = [f"{self.command}: {self.model}" if self.model else self.command]
        for rec in self.outcomes:
            line = f"  {rec['status']:<13} {rec['id']}"
            if "failed" in rec:
                line += f" (fails {rec['failed']})"
            if "prereq" in rec:
                line += f" (needs {rec['prereq']})"
            w = rec["witness"]
            if w is not None:
                parts = [f"{k}={v}" for k, v in w.items()] if isinstance(w, dict) else w
                line += " at " + ", ".join(parts)
            if "detail" in rec:
                line += f": {rec['detail']}"
            lines.append(line)
        lines += self.text
        for k, v in self.counts.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)

    def as_json(self) -> str:
        return json.dumps({"command": self.command, "model": self.model,
                           "outcomes": self.outcomes, "counts": self.counts}, indent=2)


def _load(path: str):
    try:
        return load_file(path).algebra
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_be(path: str) -> FiniteAlgebra:
    a = _load(path)
    if isinstance(a, MBEAlgebra):
        try:
            return psi_to_be(a)
        except AlgebraError as exc:
            raise UsageError(str(exc)) from None
    return a


# --- commands ---------------------------------------------------------------------

def cmd_check(args, rep: Report) -> None:
    a = _load_be(args.file)
    ids = [parse_axiom_id(x) for x in args.axiom] or list(CLASSES[ClassId.INVOLUTIVE_BE])
    for ax in ids:
        rep.add(check_axiom(a, ax), a.names)


def cmd_classify(args, rep: Report) -> None:
    a = _load_be(args.file)
    r = classify(a)
    expected = {parse_class_id(c) for c in args.expect}
    for cid, out in r.outcomes.items():
        rep.add(out, a.names, counts_as_failure=cid in expected)
    rep.counts = {"leq_antisymmetric": r.leq_antisymmetric,
                  "implicative": r.implicative, "commutative": r.commutative}


def cmd_center(args, rep: Report) -> None:
    a = _load_be(args.file)
    res = center(a)
    rep.text.append("  center = {" + ", ".join(res.names(a)) + "}")
    for name, out in res.closure_report.items():
        rep.add(out, a.names, label=name)
    for ax, out in res.wajsberg_report.items():
        rep.add(out, a.names, label=f"{ax.value} on center")
    rep.add(check_commutation_equivalences(a), a.names)
    rep.counts = {"center_size": len(res.center), "size": a.size}


def cmd_effect(args, rep: Report) -> None:
    a = _load_be(args.file)
    try:
        p = build_effect(a)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    for out in check_effect_axioms(p).values():
        rep.add(out, a.names)
    rep.counts = {"defined_pairs": int(p.defined.sum())}


def cmd_refute(args, rep: Report) -> None:
    try:
        stmt = parse(args.statement)
    except (TermSyntaxError, UnboundVariable) as exc:
        raise UsageError(str(exc)) from None
    cex = find_counterexample(stmt, parse_class_id(args.cls), args.max_size, args.node_limit)
    rep.model = args.statement
    if cex is None:
        rep.text.append(f"  no counterexample up to size {args.max_size}")
        rep.counts = {"counterexamples": 0}
        return
    m = cex.model
    rep.outcomes.append({"id": args.statement, "status": Status.FAIL.value,
                         "witness": {k: m.names[v] for k, v in cex.assignment.items()}})
    rep.failed = True
    rep.text.append(f"  counterexample of size {m.size}:")
    rep.text += ["    " + line for line in to_text(m).splitlines()]
    rep.counts = {"counterexamples": 1, "size": m.size}


def cmd_enumerate(args, rep: Report) -> None:
    cfg = EnumerationConfig(args.size, parse_class_id(args.cls) if args.cls else None,
                            not args.no_iso, args.node_limit)
    models = list(enumerate_models(cfg))
    rep.counts = {"models": len(models)}
    if args.count_only:
        rep.bare = True
        rep.text.append(str(len(models)))
    else:
        for i, m in enumerate(models, start=1):
            rep.text.append(f"# model {i}")
            rep.text += to_text(m).splitlines()


def cmd_transform(args, rep: Report) -> None:
    a = _load(args.file)
    try:
        if args.to == "mbe":
            out = a if isinstance(a, MBEAlgebra) else phi_to_mbe(a)
        else:
            out = a if isinstance(a, FiniteAlgebra) else psi_to_be(a)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    text = to_text(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        rep.bare = True
        rep.text += text.splitlines()
    rep.counts = {"size": out.size}


def cmd_verify_theorems(args, rep: Report) -> None:
    models = models_up_to(args.size)
    if args.with_examples:
        from .bundled import all_examples
        models += list(all_examples().values())
    r = verify_meta_theorems(models)
    for name, hits in r.exercised.items():
        bad = [v for v in r.violations if v.theorem == name]
        rep.outcomes.append({"id": name, "status": "FAIL" if bad else "PASS",
                             "witness": None if not bad else [f"model #{bad[0].index}"]})
    rep.failed = not r.ok
    rep.text += [str(v) for v in r.violations]
    rep.counts = {"models": r.checked, "violations": len(r.violations)}


def cmd_fixtures(args, rep: Report) -> None:
    a = _load_be(args.file)
    results = run_fixtures(a, args.cls)
    total = 0
    for fx, outs in results:
        for i, out in enumerate(outs):
            label = fx.key if len(outs) == 1 else f"{fx.key}[{i}]"
            rep.add(out, a.names, label=f"{label}: {out.id}")
            total += 1
    rep.counts = {"statements": total,
                  "failed": sum(r["status"] == "FAIL" for r in rep.outcomes)}


# --- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured report on stdout")
    p = argparse.ArgumentParser(prog="qwalg", parents=[common],
                                description="Finite-model workbench for involutive BE algebras.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "check axioms (default: the involutive BE axioms)")
    sp.add_argument("file")
    sp.add_argument("--axiom", action="append", default=[], metavar="ID")
    sp = add("classify", cmd_classify, "decide membership in every class")
    sp.add_argument("file")
    sp.add_argument("--expect", action="append", default=[], metavar="CLASS",
                    help="exit 1 unless the model is in CLASS (repeatable)")
    sp = add("center", cmd_center, "commutative center and its subalgebra checks")
    sp.add_argument("file")
    sp = add("effect", cmd_effect, "partial-sum view and the effect-algebra axioms")
    sp.add_argument("file")
    sp = add("refute", cmd_refute, "search for a counterexample to a statement")
    sp.add_argument("statement")
    sp.add_argument("--class", dest="cls", default="involutive_be", metavar="ID")
    sp.add_argument("--max-size", type=int, default=4, metavar="N")
    sp.add_argument("--node-limit", type=int, default=None, metavar="K")
    sp = add("enumerate", cmd_enumerate, "list models of one size up to isomorphism")
    sp.add_argument("--size", type=int, required=True, metavar="N")
    sp.add_argument("--class", dest="cls", default=None, metavar="ID")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--no-iso", action="store_true", help="keep isomorphic copies")
    sp.add_argument("--node-limit", type=int, default=None, metavar="K")
    sp = add("transform", cmd_transform, "convert between -> and product signatures")
    sp.add_argument("file")
    sp.add_argument("--to", choices=("mbe", "be"), required=True)
    sp.add_argument("--output", "-o", default=None)
    sp = add("verify-theorems", cmd_verify_theorems, "check class relationships on all models")
    sp.add_argument("--size", type=int, required=True, metavar="N")
    sp.add_argument("--with-examples", action="store_true",
                    help="also include the bundled six-element examples")
    sp = add("fixtures", cmd_fixtures, "run the identity suites that apply to a model")
    sp.add_argument("file")
    sp.add_argument("--class", dest="cls", default=None, metavar="ID")
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    rep = Report(args.command, getattr(args, "file", None))
    try:
        args.func(args, rep)
    except (UsageError, AlgebraError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"qwalg {args.command}: error: {msg}", file=stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"qwalg {args.command}: {exc}", file=stderr)
        return EXIT_FAIL
    print(rep.as_json() if getattr(args, "json", False) else rep.render_text(), file=stdout)
    return EXIT_FAIL if rep.failed else EXIT_OK


def main() -> None:
    sys.exit(run())
