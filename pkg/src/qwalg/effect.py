"""The partial-sum view of an involutive BE algebra and the effect-algebra axioms.

``x (+) y`` is defined when ``x <=Q y*`` and then equals ``x* -> y``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import FiniteAlgebra
from .axioms import CheckOutcome, Status, require_involutive

UNDEFINED = -1
EFFECT_AXIOMS = ("E1", "E2", "E3", "E4")


@dataclass(frozen=True)
class PartialOpTable:
    defined: np.ndarray          # bool, n x n
    value: np.ndarray            # int, n x n; UNDEFINED where not defined
    zero: int
    unit: int
    names: tuple[str, ...]

    def __post_init__(self):
        n = self.size
        if self.defined.shape != (n, n) or self.value.shape != (n, n):
            raise ValueError("defined/value tables must be n x n")
        if not np.array_equal(self.value != UNDEFINED, self.defined):
            raise ValueError("value must be present exactly where defined")

    @property
    def size(self) -> int:
        return len(self.names)

    def __call__(self, x: int, y: int) -> int | None:
        return int(self.value[x, y]) if self.defined[x, y] else None


def build_effect(a: FiniteAlgebra) -> PartialOpTable:
    """Partial ``(+)`` table of an involutive BE algebra (no axiom is assumed)."""
    require_involutive(a)
    ops = a.ops
    defined = ops.leqQ[:, ops.star]
    value = np.where(defined, ops.oplus_total, UNDEFINED)
    return PartialOpTable(defined, value, a.zero, a.unit, a.names)


def _e1(p: PartialOpTable) -> CheckOutcome:
    d, v = p.defined, p.value
    for x, y in np.argwhere(d):
        x, y = int(x), int(y)
        if not d[y, x]:
            return CheckOutcome("E1", Status.FAIL, (x, y), variables=("x", "y"),
                                detail="x (+) y defined but y (+) x undefined")
        if v[x, y] != v[y, x]:
            return CheckOutcome("E1", Status.FAIL, (x, y), variables=("x", "y"),
                                detail="both defined but unequal")
    return CheckOutcome("E1", Status.PASS)


def _e2(p: PartialOpTable) -> CheckOutcome:
    """If y(+)z and x(+)(y(+)z) exist then x(+)y and (x(+)y)(+)z exist and agree."""
    n, d, v = p.size, p.defined, p.value
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    yz = np.where(d[y, z], v[y, z], 0)
    guard = d[y, z] & d[x, yz]
    left_def = d[x, y] & np.broadcast_to(True, guard.shape)
    xy = np.where(d[x, y], v[x, y], 0)
    outer_def = left_def & d[xy, z]
    undefined = guard & ~outer_def
    unequal = guard & outer_def & (v[xy, z] != v[x, yz])
    bad = undefined | unequal
    if bad.any():
        w = tuple(int(i) for i in np.argwhere(bad)[0])
        kind = ("required sum undefined" if undefined[w]
                else "both sides defined but unequal")
        return CheckOutcome("E2", Status.FAIL, w, variables=("x", "y", "z"), detail=kind)
    return CheckOutcome("E2", Status.PASS)


def _e3(p: PartialOpTable) -> CheckOutcome:
    hits = p.defined & (p.value == p.unit)
    for x in range(p.size):
        ys = np.flatnonzero(hits[x])
        if len(ys) != 1:
            what = ("no y with x (+) y = 1" if len(ys) == 0 else
                    "several y with x (+) y = 1: " + ", ".join(p.names[i] for i in ys))
            return CheckOutcome("E3", Status.FAIL, (x,), variables=("x",), detail=what)
    return CheckOutcome("E3", Status.PASS)


def _e4(p: PartialOpTable) -> CheckOutcome:
    for x in range(p.size):
        if p.defined[x, p.unit] and x != p.zero:
            return CheckOutcome("E4", Status.FAIL, (x,), variables=("x",),
                                detail="x (+) 1 defined for x != 0")
    return CheckOutcome("E4", Status.PASS)


def check_effect_axioms(p: PartialOpTable) -> dict[str, CheckOutcome]:
    """E1 commutativity, E2 associativity, E3 orthosupplement, E4 zero-one law."""
    return {"E1": _e1(p), "E2": _e2(p), "E3": _e3(p), "E4": _e4(p)}


def orthosupplements(p: PartialOpTable) -> tuple[int, ...] | None:
    """The unique ``y`` with ``x (+) y = 1`` for each ``x``, or None if E3 fails."""
    hits = p.defined & (p.value == p.unit)
    if not (hits.sum(axis=1) == 1).all():
        return None
    return tuple(int(i) for i in hits.argmax(axis=1))
