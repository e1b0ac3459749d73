"""Full classification of one algebra, and model-by-model checks of the
relationships between the classes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .algebra import AlgebraError, FiniteAlgebra
from .axioms import CheckOutcome, ClassId, check_class, is_involutive_be, leq_antisymmetric
from .center import center_elements
from .terms import check_statement, parse

# (premise, conclusion) arrows that every report must respect
IMPLICATION_LATTICE: tuple[tuple[ClassId, ClassId], ...] = (
    (ClassId.QW, ClassId.PRE_W),
    (ClassId.QW, ClassId.IOM),
    (ClassId.PRE_W, ClassId.META_W),
    (ClassId.QW, ClassId.META_W),
    (ClassId.WAJSBERG, ClassId.QW),
    (ClassId.IOM_LATTICE, ClassId.IOM),
)
# implication-signature class and its product-signature counterpart
TERM_EQUIVALENT: tuple[tuple[ClassId, ClassId], ...] = (
    (ClassId.QW, ClassId.QMV),
    (ClassId.PRE_W, ClassId.PRE_MV),
    (ClassId.META_W, ClassId.META_MV),
    (ClassId.IOM, ClassId.OM_ALG),
)
_COLLAPSE_ON_IMPLICATIVE = (ClassId.IOM, ClassId.QW, ClassId.PRE_W)


class InconsistentReport(AssertionError):
    """A classification contradicted the class lattice: a bug in the checker."""


@dataclass(frozen=True)
class ClassificationReport:
    outcomes: dict[ClassId, CheckOutcome]
    leq_antisymmetric: bool
    implicative: bool
    commutative: bool

    def __getitem__(self, cid: ClassId | str) -> CheckOutcome:
        return self.outcomes[ClassId(cid) if not isinstance(cid, ClassId) else cid]

    def member_of(self) -> tuple[ClassId, ...]:
        return tuple(c for c, o in self.outcomes.items() if o.passed)

    def format(self, a: FiniteAlgebra) -> str:
        lines = []
        for cid, out in self.outcomes.items():
            mark = "yes" if out.passed else "no "
            line = f"  {mark} {cid.value}"
            if not out.passed:
                line += "  -- " + out.describe(a)
            lines.append(line)
        lines.append(f"  <= antisymmetric: {self.leq_antisymmetric}")
        return "\n".join(lines)


def lattice_violations(outcomes: dict[ClassId, CheckOutcome],
                       implicative: bool) -> list[str]:
    ok = {c: o.passed for c, o in outcomes.items()}
    bad = [f"{p.value} without {q.value}" for p, q in IMPLICATION_LATTICE if ok[p] and not ok[q]]
    bad += [f"{p.value} and {q.value} disagree" for p, q in TERM_EQUIVALENT if ok[p] != ok[q]]
    if implicative and len({ok[c] for c in _COLLAPSE_ON_IMPLICATIVE}) > 1:
        bad.append("IOM, QW and PRE_W disagree on an implicative model")
    return bad


def classify(a: FiniteAlgebra) -> ClassificationReport:
    outcomes = {cid: check_class(a, cid) for cid in ClassId}
    implicative = outcomes[ClassId.IMPLICATIVE].passed
    bad = lattice_violations(outcomes, implicative)
    if bad:
        raise InconsistentReport("; ".join(bad))
    return ClassificationReport(outcomes, leq_antisymmetric(a), implicative,
                                outcomes[ClassId.WAJSBERG].passed)


# --- model-by-model theorem checks -------------------------------------------------

_RESIDUAL_LEQQ = parse("x <=Q (x -> y) -> y")
_JOIN_IMP = parse("((x -> y) -> y) -> x = y -> x")


@dataclass(frozen=True)
class Violation:
    theorem: str
    index: int
    model: FiniteAlgebra

    def __str__(self):
        return f"model #{self.index}: {self.theorem}\n{self.model.imp}"


@dataclass
class MetaTheoremReport:
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    # how many models met each theorem's hypothesis (guards against vacuity)
    exercised: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _facts(a: FiniteAlgebra) -> dict[str, bool]:
    c = {cid: check_class(a, cid).passed for cid in ClassId}
    ops = a.ops
    return {
        "qw": c[ClassId.QW], "prew": c[ClassId.PRE_W], "metaw": c[ClassId.META_W],
        "iom": c[ClassId.IOM], "w": c[ClassId.WAJSBERG], "impl": c[ClassId.IMPLICATIVE],
        "antisym": leq_antisymmetric(a),
        "leq_eq_leqQ": bool(np.array_equal(ops.leq, ops.leqQ)),
        "leq_in_leqQ": bool((~ops.leq | ops.leqQ).all()),
        "join_residual": check_statement(a, _RESIDUAL_LEQQ).passed
        and check_statement(a, _JOIN_IMP).passed,
        "full_center": len(center_elements(a)) == a.size,
    }


# name -> (hypothesis, conclusion)
META_THEOREMS = {
    "pre-W implies meta-W": (lambda f: f["prew"], lambda f: f["metaw"]),
    "QW implies meta-W": (lambda f: f["qw"], lambda f: f["metaw"]),
    "in IOM: QW iff meta-W": (lambda f: f["iom"], lambda f: f["qw"] == f["metaw"]),
    "implicative: IOM, QW, pre-W coincide": (
        lambda f: f["impl"], lambda f: f["iom"] == f["qw"] == f["prew"]),
    "implicative: IOM implies meta-W": (
        lambda f: f["impl"] and f["iom"], lambda f: f["metaw"]),
    "Wajsberg implies QW, pre-W, IOM, meta-W": (
        lambda f: f["w"], lambda f: f["qw"] and f["prew"] and f["iom"] and f["metaw"]),
    "pre-W: Wajsberg iff <= antisymmetric": (
        lambda f: f["prew"], lambda f: f["w"] == f["antisym"]),
    "QW: Wajsberg iff <= antisymmetric": (
        lambda f: f["qw"], lambda f: f["w"] == f["antisym"]),
    "meta-W: Wajsberg iff <= antisymmetric": (
        lambda f: f["metaw"], lambda f: f["w"] == f["antisym"]),
    "pre-W: Wajsberg iff (x <= y implies x <=Q y)": (
        lambda f: f["prew"], lambda f: f["w"] == f["leq_in_leqQ"]),
    "IOM: Wajsberg iff both join-residual conditions": (
        lambda f: f["iom"], lambda f: f["w"] == f["join_residual"]),
    "Wajsberg: <= equals <=Q": (lambda f: f["w"], lambda f: f["leq_eq_leqQ"]),
    "QW: Wajsberg iff center is everything": (
        lambda f: f["qw"], lambda f: f["w"] == f["full_center"]),
}


def verify_meta_theorems(models: Iterable[FiniteAlgebra]) -> MetaTheoremReport:
    """Check every entry of :data:`META_THEOREMS` on each model.

    A theorem "holds" here only in the sense that none of the supplied models
    is a counterexample.  Every model must be an involutive BE algebra.
    """
    models = list(models)
    for i, a in enumerate(models):
        if not is_involutive_be(a):
            raise AlgebraError(f"model #{i} is not an involutive BE algebra:\n{a.imp}")
    report = MetaTheoremReport(exercised={name: 0 for name in META_THEOREMS})
    for i, a in enumerate(models):
        f = _facts(a)
        report.checked += 1
        for name, (hyp, concl) in META_THEOREMS.items():
            if hyp(f):
                report.exercised[name] += 1
                if not concl(f):
                    report.violations.append(Violation(name, i, a))
    return report
