"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

All comparisons are exact.  Run standalone with ``python3 tests/test_acceptance.py``
or through pytest (the verdict lines go to the terminal either way).
"""
import io
import sys
import time

import numpy as np
import pytest

from qwalg import (AxiomId, ClassId, EnumerationConfig, all_examples, build_effect, center,
                   check_axiom, check_class, check_effect_axioms, enumerate_models,
                   models_up_to, phi_to_mbe, psi_to_be, verify_meta_theorems)
from qwalg.bundled import EXAMPLES, example_text
from qwalg.cli import run
from qwalg.fileio import dump_text, parse_text
from qwalg.fixtures import fixture_suite, hypothesis_classes
from qwalg.search import canonical_form, naive_canonical_forms
from qwalg.terms import check_statement

_EMIT = print


@pytest.fixture(autouse=True)
def _verdict_writer(request):
    global _EMIT
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        _EMIT = lambda line: reporter.write_line(line)   # noqa: E731
    yield
    _EMIT = print


def verdict(n: int, ok: bool, what: str, started: float, limit: float) -> None:
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < limit
    _EMIT(f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'}: {what} ({elapsed:.2f}s, limit {limit:g}s)")
    assert ok, what


def names(a, witness):
    return tuple(a.names[i] for i in witness)


def test_criterion_01_golden_classification():
    t0 = time.perf_counter()
    ex = all_examples()
    problems = []

    def expect(cond, msg):
        if not cond:
            problems.append(msg)

    a = ex["qw_noncommutative"]
    for c in ("QW", "PRE_W", "IOM", "META_W"):
        expect(check_class(a, c).passed, f"QW example not {c}")
    a = ex["prew_not_iom"]
    expect(check_class(a, "PRE_W").passed and check_class(a, "META_W").passed, "pre-W example")
    expect(not check_class(a, "IOM").passed, "pre-W example is IOM")
    expect(names(a, check_axiom(a, "QW2").witness) == ("a", "0", "b"), "QW2 witness")
    a = ex["iom_not_prew"]
    expect(check_class(a, "IOM").passed, "IOM example")
    expect(names(a, check_axiom(a, "QW1").witness) == ("d", "a"), "QW1 witness on IOM example")
    expect(names(a, check_axiom(a, "QW3").witness) == ("a", "d"), "QW3 witness on IOM example")
    a = ex["metaw_not_iom"]
    expect(check_class(a, "META_W").passed, "meta-W example")
    expect(names(a, check_axiom(a, "QW1").witness) == ("d", "a"), "QW1 witness on meta-W example")
    expect(names(a, check_axiom(a, "QW2").witness) == ("d", "0", "a"), "QW2 witness on meta-W example")
    verdict(1, not problems, "golden classification of the four examples"
            + (f" {problems}" if problems else ""), t0, 1)


def _printed_block(text: str, block: str) -> list[list[str]]:
    lines = text.splitlines()
    k = lines.index(f"table {block} :")
    return [row.split() for row in lines[k + 1:k + 7]]


def test_criterion_02_meet_cross_check():
    t0 = time.perf_counter()
    agree = 0
    for name in EXAMPLES:
        text = example_text(name)
        printed = _printed_block(text, "meet")
        imp_rows = _printed_block(text, "->")
        # rebuild the algebra from the implication block alone
        header = "\n".join(l for l in text.splitlines()
                           if l.split()[:1] in (["size"], ["elements"], ["unit"], ["zero"]))
        a = parse_text(header + "\ntable -> :\n" + "\n".join(" ".join(r) for r in imp_rows)
                       + "\n").algebra
        computed = [[a.names[v] for v in row] for row in a.ops.meet]
        agree += sum(p == c for pr, cr in zip(printed, computed) for p, c in zip(pr, cr))
    verdict(2, agree == 4 * 36, f"recomputed meet matches printed meet in {agree}/144 cells",
            t0, 1)


EQUIVALENCES = [
    ("QW <=> QW1 & QW2", lambda r: r["QW"] == (r["QW1"] and r["QW2"])),
    ("QW3 <=> QW3'", lambda r: r["QW3"] == r["QW3P"]),
    ("QW2 <=> QW2'", lambda r: r["QW2"] == r["QW2P"]),
    ("IOM <=> IOM' <=> IOM''", lambda r: r["IOM"] == r["IOMP"] == r["IOMPP"]),
    ("QW <=> Pqmv", lambda r: r["QW"] == r["PQMV"]),
    ("QW1 <=> Pmv", lambda r: r["QW1"] == r["PMV"]),
    ("QW2 <=> Pom", lambda r: r["QW2"] == r["POM"]),
    ("QW3 <=> Delta_m", lambda r: r["QW3"] == r["DELTA_M"]),
    ("Pimpl <=> m-Pimpl", lambda r: r["PIMPL"] == r["M_PIMPL"]),
]


def test_criterion_03_equivalent_forms():
    t0 = time.perf_counter()
    models = models_up_to(4)
    broken = []
    for a in models:
        r = {ax.value: check_axiom(a, ax).passed for ax in AxiomId}
        broken += [label for label, ok in EQUIVALENCES if not ok(r)]
    verdict(3, not broken and len(models) == 8,
            f"{len(EQUIVALENCES)} equivalences on {len(models)} models <= size 4"
            + (f", broken: {sorted(set(broken))}" if broken else ""), t0, 60)


def test_criterion_04_meta_theorems():
    t0 = time.perf_counter()
    models = models_up_to(4) + list(all_examples().values())
    rep = verify_meta_theorems(models)
    verdict(4, rep.ok, f"{len(rep.exercised)} class relationships on {rep.checked} models, "
            f"{len(rep.violations)} violations", t0, 120)


def test_criterion_05_identity_suites():
    t0 = time.perf_counter()
    pool = models_up_to(4) + list(all_examples().values())
    checked = failures = 0
    for cid in hypothesis_classes():
        members = [a for a in pool if check_class(a, cid).passed]
        for f in fixture_suite(cid):
            for s in f.statements:
                for a in members:
                    checked += 1
                    failures += not check_statement(a, s).passed
    verdict(5, failures == 0 and checked > 0,
            f"{checked} statement/model checks, {failures} failures", t0, 120)


def test_criterion_06_center():
    t0 = time.perf_counter()
    ex = all_examples()
    a = ex["iom_not_prew"]
    ok = center(a).names(a) == ("0", "1")
    iom = [m for m in models_up_to(4) if check_class(m, ClassId.IOM).passed]
    for m in iom:
        res = center(m)
        ok &= all(o.passed for o in res.closure_report.values())
        ok &= all(o.passed for o in res.wajsberg_report.values())
    verdict(6, ok and bool(iom), f"center of the IOM example is {{0, 1}}; closure and W1-W4 "
            f"on {len(iom)} IOM models <= size 4", t0, 60)


def test_criterion_07_effect_view():
    t0 = time.perf_counter()
    ex = all_examples()
    iom = [m for m in models_up_to(4) if check_class(m, ClassId.IOM).passed]
    ok = all(o.passed for m in [*iom, ex["iom_not_prew"]]
             for o in check_effect_axioms(build_effect(m)).values())
    a = ex["prew_not_iom"]
    e1 = check_effect_axioms(build_effect(a))["E1"]
    ok &= (not e1.passed) and names(a, e1.witness) == ("b", "d")
    verdict(7, ok, f"E1-E4 on {len(iom) + 1} IOM models; E1 fails on the pre-W example at (b, d)",
            t0, 10)


def test_criterion_08_oracle_equivalence():
    t0 = time.perf_counter()
    ok = True
    counts = {}
    for n in (2, 3):
        forms = {canonical_form(a) for a in enumerate_models(EnumerationConfig(n))}
        ok &= forms == naive_canonical_forms(n)
        counts[n] = len(forms)
    ok &= counts == {2: 1, 3: 1}
    verdict(8, ok, f"pruned search equals brute force at sizes 2 and 3 (classes {counts})",
            t0, 60)


def test_criterion_09_refutation():
    t0 = time.perf_counter()
    out1, out2 = io.StringIO(), io.StringIO()
    c1 = run(["refute", "x /\\ y = y /\\ x", "--class", "qw", "--max-size", "6"],
             stdout=out1, stderr=out1)
    c2 = run(["refute", "x -> 1 = 1", "--class", "be", "--max-size", "4"],
             stdout=out2, stderr=out2)
    ok = c1 == 1 and "counterexample of size" in out1.getvalue()
    ok &= c2 == 0 and "no counterexample" in out2.getvalue()
    verdict(9, ok, "meet commutativity refuted in QW; x -> 1 = 1 has no counterexample",
            t0, 600)


def test_criterion_10_round_trips():
    t0 = time.perf_counter()
    models = models_up_to(4)
    ok = all(np.array_equal(psi_to_be(phi_to_mbe(a)).imp, a.imp) for a in models)
    ok &= all(dump_text(parse_text(example_text(n))) == example_text(n) for n in EXAMPLES)
    verdict(10, ok, f"Psi(Phi(a)) = a on {len(models)} models; four files byte-stable", t0, 5)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
