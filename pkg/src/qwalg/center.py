"""Commuting elements and the commutative center."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import FiniteAlgebra
from .axioms import AxiomId, CheckOutcome, ClassId, Status, check_axiom, check_class


def commutes(a: FiniteAlgebra, x: int, y: int) -> bool:
    """``x \\/ y = y \\/ x``."""
    for v in (x, y):
        if not 0 <= v < a.size:
            raise IndexError(f"element index {v} out of range for size {a.size}")
    return bool(a.ops.join[x, y] == a.ops.join[y, x])


def commute_table(a: FiniteAlgebra) -> np.ndarray:
    j = a.ops.join
    return j == j.T


def center_elements(a: FiniteAlgebra) -> tuple[int, ...]:
    return tuple(int(x) for x in np.flatnonzero(commute_table(a).all(axis=1)))


@dataclass(frozen=True)
class CenterResult:
    commute_table: np.ndarray
    center: tuple[int, ...]
    closure_report: dict[str, CheckOutcome] = field(default_factory=dict)
    wajsberg_report: dict[AxiomId, CheckOutcome] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """No closure or W-axiom check failed (PREREQ_FAILED does not count as failure)."""
        outs = [*self.closure_report.values(), *self.wajsberg_report.values()]
        return all(o.status is not Status.FAIL for o in outs)

    def names(self, a: FiniteAlgebra) -> tuple[str, ...]:
        return a.name_of(self.center)


def _closed_unary(name, members, table) -> CheckOutcome:
    for x in members:
        if int(table[x]) not in members:
            return CheckOutcome(name, Status.FAIL, (x,), variables=("x",))
    return CheckOutcome(name, Status.PASS)


def _closed_binary(name, members, table) -> CheckOutcome:
    for x in sorted(members):
        for y in sorted(members):
            if int(table[x, y]) not in members:
                return CheckOutcome(name, Status.FAIL, (x, y), variables=("x", "y"))
    return CheckOutcome(name, Status.PASS)


def center(a: FiniteAlgebra) -> CenterResult:
    """Commutative center, with subalgebra checks when ``a`` is implicative-orthomodular.

    On other inputs the table and the set are still computed, but the closure
    and Wajsberg checks are reported as PREREQ_FAILED.
    """
    table = commute_table(a)
    members = center_elements(a)
    iom = check_class(a, ClassId.IOM)
    checks = ("contains 0", "contains 1", "closed under ->", "closed under *",
              "closed under \\/", "closed under /\\")
    if not iom.passed:
        closure = {c: CheckOutcome(c, Status.PREREQ_FAILED, prereq=iom.failed) for c in checks}
        w = {ax: CheckOutcome(ax, Status.PREREQ_FAILED, prereq=iom.failed)
             for ax in (AxiomId.W1, AxiomId.W2, AxiomId.W3, AxiomId.W4)}
        return CenterResult(table, members, closure, w)

    ms = set(members)
    ops = a.ops
    closure = {
        "contains 0": CheckOutcome("contains 0", Status.PASS if a.zero in ms else Status.FAIL,
                                   None if a.zero in ms else (a.zero,)),
        "contains 1": CheckOutcome("contains 1", Status.PASS if a.unit in ms else Status.FAIL,
                                   None if a.unit in ms else (a.unit,)),
        "closed under ->": _closed_binary("closed under ->", ms, a.imp),
        "closed under *": _closed_unary("closed under *", ms, ops.star),
        "closed under \\/": _closed_binary("closed under \\/", ms, ops.join),
        "closed under /\\": _closed_binary("closed under /\\", ms, ops.meet),
    }
    w_axioms = (AxiomId.W1, AxiomId.W2, AxiomId.W3, AxiomId.W4)
    if all(o.passed for o in closure.values()):
        sub = a.restrict(members)
        w = {}
        for ax in w_axioms:
            out = check_axiom(sub, ax)
            if out.witness is not None:
                # report in the parent's element indices
                out = CheckOutcome(out.id, out.status, tuple(members[i] for i in out.witness),
                                   variables=out.variables)
            w[ax] = out
    else:
        w = {ax: CheckOutcome(ax, Status.PREREQ_FAILED, detail="center not closed")
             for ax in w_axioms}
    return CenterResult(table, members, closure, w)


def commutation_conditions(a: FiniteAlgebra, x: int, y: int) -> tuple[bool, bool, bool]:
    """(joins commute, meets commute, ``(x -> y) -> (x /\\ y) = x``)."""
    ops = a.ops
    return (bool(ops.join[x, y] == ops.join[y, x]),
            bool(ops.meet[x, y] == ops.meet[y, x]),
            bool(a.imp[a.imp[x, y], ops.meet[x, y]] == x))


def check_commutation_equivalences(a: FiniteAlgebra) -> CheckOutcome:
    """The three commutation conditions agree on every pair (implicative-orthomodular input)."""
    name = "commutation equivalences"
    iom = check_class(a, ClassId.IOM)
    if not iom.passed:
        return CheckOutcome(name, Status.PREREQ_FAILED, prereq=iom.failed)
    ops = a.ops
    c1 = ops.join == ops.join.T
    c2 = ops.meet == ops.meet.T
    c3 = a.imp[a.imp, ops.meet] == np.arange(a.size)[:, None]
    bad = np.argwhere((c1 != c2) | (c2 != c3))
    if len(bad):
        x, y = (int(v) for v in bad[0])
        return CheckOutcome(name, Status.FAIL, (x, y), variables=("x", "y"),
                            detail="conditions (join, meet, residual) = "
                                   f"{commutation_conditions(a, x, y)}")
    return CheckOutcome(name, Status.PASS)
