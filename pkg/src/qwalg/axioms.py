"""The axiom catalogue, decided by exhaustive quantification.

Each axiom is evaluated over the full grid of assignments at once with numpy
broadcasting; the grid axes follow the order in which the variables occur in
the formula, so ``np.argwhere`` on the failure mask yields the
lexicographically least counterexample first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .algebra import AlgebraError, FiniteAlgebra


class AxiomId(str, enum.Enum):
    BE1 = "BE1"
    BE2 = "BE2"
    BE3 = "BE3"
    BE4 = "BE4"
    BOUNDED = "BOUNDED"
    INVOLUTIVE = "INVOLUTIVE"
    BCK1 = "BCK1"
    BCK4 = "BCK4"
    W1 = "W1"
    W2 = "W2"
    W3 = "W3"
    W4 = "W4"
    COMMUTATIVE = "COMMUTATIVE"
    PIMPL = "PIMPL"
    QW = "QW"
    QW1 = "QW1"
    QW2 = "QW2"
    QW2P = "QW2P"
    QW3 = "QW3"
    QW3P = "QW3P"
    IOM = "IOM"
    IOMP = "IOMP"
    IOMPP = "IOMPP"
    # product side, evaluated on the (.)-view
    PU = "PU"
    PCOMM = "PCOMM"
    PASS = "PASS"
    M_L = "M_L"
    M_RE = "M_RE"
    PQMV = "PQMV"
    PMV = "PMV"
    POM = "POM"
    DELTA_M = "DELTA_M"
    M_PIMPL = "M_PIMPL"
    G = "G"
    M_PABS_I = "M_PABS_I"
    # supplement algebra, with the total sum x (+) y = x* -> y
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S5 = "S5"
    S6 = "S6"
    S7 = "S7"

    def __str__(self):
        return self.value


class ClassId(str, enum.Enum):
    BE = "BE"
    BOUNDED_BE = "BOUNDED_BE"
    INVOLUTIVE_BE = "INVOLUTIVE_BE"
    BCK = "BCK"
    QW = "QW"
    PRE_W = "PRE_W"
    META_W = "META_W"
    IOM = "IOM"
    WAJSBERG = "WAJSBERG"
    IMPLICATIVE = "IMPLICATIVE"
    IOM_LATTICE = "IOM_LATTICE"
    QMV = "QMV"
    PRE_MV = "PRE_MV"
    META_MV = "META_MV"
    OM_ALG = "OM_ALG"
    OM_SOFTLATTICE = "OM_SOFTLATTICE"
    OM_WIDELATTICE = "OM_WIDELATTICE"

    def __str__(self):
        return self.value


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    PREREQ_FAILED = "PREREQ_FAILED"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one check.

    ``witness`` is present iff the status is FAIL.  For class checks ``failed``
    names the first conjunct that failed and the witness is that conjunct's.
    """

    id: AxiomId | ClassId | str
    status: Status
    witness: tuple[int, ...] | None = None
    prereq: AxiomId | None = None
    failed: AxiomId | None = None
    variables: tuple[str, ...] = ()
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def __bool__(self):
        return self.passed

    def describe(self, a: FiniteAlgebra | None = None) -> str:
        text = f"{self.id}: {self.status}"
        if self.failed is not None:
            text += f" ({self.failed})"
        if self.witness is not None:
            vals = a.name_of(self.witness) if a is not None else self.witness
            if self.variables:
                text += " at " + ", ".join(f"{v}={w}" for v, w in zip(self.variables, vals))
            else:
                text += f" at ({', '.join(map(str, vals))})"
        if self.prereq is not None:
            text += f" (needs {self.prereq})"
        if self.detail:
            text += f": {self.detail}"
        return text


class _Tables:
    """Everything an axiom formula may read, in broadcast-ready form."""

    def __init__(self, a: FiniteAlgebra):
        ops = a.ops
        self.n = a.size
        self.U = a.unit
        self.Z = a.zero
        self.I = a.imp
        self.s = ops.star
        self.J = ops.join
        self.M = ops.meet
        self.O = ops.oplus_total
        self._a = a

    def product_side(self) -> "_Tables":
        # (.)-view tables, rebuilt from the product and complement alone
        from .algebra import MBEAlgebra

        st = self.s
        m = MBEAlgebra(st[self.I[:, st]], st, self.U, self.Z, self._a.names)
        t = object.__new__(_Tables)
        t.n, t.U, t.s, t._a = self.n, self.U, m.star, self._a
        t.Z = int(m.star[m.unit])
        t.P = m.prod
        t.Om = m.oplus
        t.Jm = m.join
        t.Mm = m.meet
        return t


@dataclass(frozen=True)
class Axiom:
    id: AxiomId
    variables: tuple[str, ...]
    text: str
    holds: Callable[..., np.ndarray]
    product_side: bool = False


def _grid(n: int, k: int) -> list[np.ndarray]:
    axes = []
    for i in range(k):
        shape = [1] * k
        shape[i] = n
        axes.append(np.arange(n).reshape(shape))
    return axes


CATALOGUE: dict[AxiomId, Axiom] = {}


def _axiom(id_: AxiomId, variables: str, text: str, product_side: bool = False):
    def register(fn):
        CATALOGUE[id_] = Axiom(id_, tuple(variables.split()) if variables else (), text, fn,
                               product_side)
        return fn
    return register


_axiom(AxiomId.BE1, "x", "x -> x = 1")(lambda t, x: t.I[x, x] == t.U)
_axiom(AxiomId.BE2, "x", "x -> 1 = 1")(lambda t, x: t.I[x, t.U] == t.U)
_axiom(AxiomId.BE3, "x", "1 -> x = x")(lambda t, x: t.I[t.U, x] == x)
_axiom(AxiomId.BE4, "x y z", "x -> (y -> z) = y -> (x -> z)")(
    lambda t, x, y, z: t.I[x, t.I[y, z]] == t.I[y, t.I[x, z]])
_axiom(AxiomId.BOUNDED, "x", "0 -> x = 1")(lambda t, x: t.I[t.Z, x] == t.U)
_axiom(AxiomId.INVOLUTIVE, "x", "x** = x")(lambda t, x: t.s[t.s[x]] == x)
_axiom(AxiomId.BCK1, "x y z", "(x -> y) -> ((y -> z) -> (x -> z)) = 1")(
    lambda t, x, y, z: t.I[t.I[x, y], t.I[t.I[y, z], t.I[x, z]]] == t.U)
_axiom(AxiomId.BCK4, "x y", "x -> y = 1, y -> x = 1 |- x = y")(
    lambda t, x, y: ~((t.I[x, y] == t.U) & (t.I[y, x] == t.U)) | (x == y))
_axiom(AxiomId.W1, "x", "1 -> x = x")(lambda t, x: t.I[t.U, x] == x)
_axiom(AxiomId.W2, "y z x", "(y -> z) -> ((z -> x) -> (y -> x)) = 1")(
    lambda t, y, z, x: t.I[t.I[y, z], t.I[t.I[z, x], t.I[y, x]]] == t.U)
_axiom(AxiomId.W3, "x y", "(x -> y) -> y = (y -> x) -> x")(
    lambda t, x, y: t.I[t.I[x, y], y] == t.I[t.I[y, x], x])
_axiom(AxiomId.W4, "x y", "(x* -> y*) -> (y -> x) = 1")(
    lambda t, x, y: t.I[t.I[t.s[x], t.s[y]], t.I[y, x]] == t.U)
_axiom(AxiomId.COMMUTATIVE, "x y", "(x -> y) -> y = (y -> x) -> x")(
    lambda t, x, y: t.J[x, y] == t.J[y, x])
_axiom(AxiomId.PIMPL, "x y", "(x -> y) -> x = x")(lambda t, x, y: t.I[t.I[x, y], x] == x)
_axiom(AxiomId.QW, "x y z", "x -> ((x /\\ y) /\\ (z /\\ x)) = (x -> y) /\\ (x -> z)")(
    lambda t, x, y, z: t.I[x, t.M[t.M[x, y], t.M[z, x]]] == t.M[t.I[x, y], t.I[x, z]])
_axiom(AxiomId.QW1, "x y", "x -> (x /\\ y) = x -> y")(
    lambda t, x, y: t.I[x, t.M[x, y]] == t.I[x, y])
_axiom(AxiomId.QW2, "x y z", "x -> (y /\\ (z /\\ x)) = (x -> y) /\\ (x -> z)")(
    lambda t, x, y, z: t.I[x, t.M[y, t.M[z, x]]] == t.M[t.I[x, y], t.I[x, z]])


@_axiom(AxiomId.QW2P, "x y z", "x -> (y /\\ (x -> z)*) = (x -> y) /\\ (x -> (x -> z)*)")
def _qw2p(t, x, y, z):
    w = t.s[t.I[x, z]]
    return t.I[x, t.M[y, w]] == t.M[t.I[x, y], t.I[x, w]]


_axiom(AxiomId.QW3, "x y", "(x /\\ y) -> (y /\\ x) = 1")(
    lambda t, x, y: t.I[t.M[x, y], t.M[y, x]] == t.U)
_axiom(AxiomId.QW3P, "x y", "(x \\/ y) -> (y \\/ x) = 1")(
    lambda t, x, y: t.I[t.J[x, y], t.J[y, x]] == t.U)
_axiom(AxiomId.IOM, "x y", "x /\\ (x* -> y) = x")(lambda t, x, y: t.M[x, t.I[t.s[x], y]] == x)
_axiom(AxiomId.IOMP, "x y", "x /\\ (y -> x) = x")(lambda t, x, y: t.M[x, t.I[y, x]] == x)
_axiom(AxiomId.IOMPP, "x y", "x \\/ (x -> y)* = x")(
    lambda t, x, y: t.J[x, t.s[t.I[x, y]]] == x)

_axiom(AxiomId.S1, "x y", "x (+) y = y (+) x")(lambda t, x, y: t.O[x, y] == t.O[y, x])
_axiom(AxiomId.S2, "x y z", "x (+) (y (+) z) = (x (+) y) (+) z")(
    lambda t, x, y, z: t.O[x, t.O[y, z]] == t.O[t.O[x, y], z])
_axiom(AxiomId.S3, "x", "x (+) x* = 1")(lambda t, x: t.O[x, t.s[x]] == t.U)
_axiom(AxiomId.S4, "x", "x (+) 0 = x")(lambda t, x: t.O[x, t.Z] == x)
_axiom(AxiomId.S5, "x", "x** = x")(lambda t, x: t.s[t.s[x]] == x)
_axiom(AxiomId.S6, "", "0* = 1")(lambda t: np.asarray(t.s[t.Z] == t.U))
_axiom(AxiomId.S7, "x", "x (+) 1 = 1")(lambda t, x: t.O[x, t.U] == t.U)

_m = dict(product_side=True)
_axiom(AxiomId.PU, "x", "1 (.) x = x = x (.) 1", **_m)(
    lambda t, x: (t.P[t.U, x] == x) & (t.P[x, t.U] == x))
_axiom(AxiomId.PCOMM, "x y", "x (.) y = y (.) x", **_m)(lambda t, x, y: t.P[x, y] == t.P[y, x])
_axiom(AxiomId.PASS, "x y z", "x (.) (y (.) z) = (x (.) y) (.) z", **_m)(
    lambda t, x, y, z: t.P[x, t.P[y, z]] == t.P[t.P[x, y], z])
_axiom(AxiomId.M_L, "x", "x (.) 0 = 0", **_m)(lambda t, x: t.P[x, t.Z] == t.Z)
_axiom(AxiomId.M_RE, "x", "x (.) x* = 0", **_m)(lambda t, x: t.P[x, t.s[x]] == t.Z)


@_axiom(AxiomId.PQMV, "x y z",
        "x (.) ((x* \\/ y) \\/ (z \\/ x*)) = (x (.) y) \\/ (x (.) z)", **_m)
def _pqmv(t, x, y, z):
    xs = t.s[x]
    return t.P[x, t.Jm[t.Jm[xs, y], t.Jm[z, xs]]] == t.Jm[t.P[x, y], t.P[x, z]]


_axiom(AxiomId.PMV, "x y", "x (.) (x* \\/ y) = x (.) y", **_m)(
    lambda t, x, y: t.P[x, t.Jm[t.s[x], y]] == t.P[x, y])
_axiom(AxiomId.POM, "x y", "x \\/ (x (.) y) = x", **_m)(lambda t, x, y: t.Jm[x, t.P[x, y]] == x)
_axiom(AxiomId.DELTA_M, "x y", "(x /\\ y) (.) (y /\\ x)* = 0", **_m)(
    lambda t, x, y: t.P[t.Mm[x, y], t.s[t.Mm[y, x]]] == t.Z)
_axiom(AxiomId.M_PIMPL, "x y", "((x (.) y*)* (.) x*)* = x", **_m)(
    lambda t, x, y: t.s[t.P[t.s[t.P[x, t.s[y]]], t.s[x]]] == x)
_axiom(AxiomId.G, "x", "x (.) x = x", **_m)(lambda t, x: t.P[x, x] == x)
_axiom(AxiomId.M_PABS_I, "x y", "x (.) (x (+) x (+) x (+) y) = x", **_m)(
    lambda t, x, y: t.P[x, t.Om[t.Om[t.Om[x, x], x], y]] == x)

del _m
assert set(CATALOGUE) == set(AxiomId)


_INV_BASE = (AxiomId.BE1, AxiomId.BE2, AxiomId.BE3, AxiomId.BE4,
             AxiomId.BOUNDED, AxiomId.INVOLUTIVE)

CLASSES: dict[ClassId, tuple[AxiomId, ...]] = {
    ClassId.BE: _INV_BASE[:4],
    ClassId.BOUNDED_BE: _INV_BASE[:5],
    ClassId.INVOLUTIVE_BE: _INV_BASE,
    ClassId.BCK: _INV_BASE[:4] + (AxiomId.BCK1, AxiomId.BCK4),
    ClassId.QW: _INV_BASE + (AxiomId.QW1, AxiomId.QW2),
    ClassId.PRE_W: _INV_BASE + (AxiomId.QW1,),
    ClassId.META_W: _INV_BASE + (AxiomId.QW3,),
    ClassId.IOM: _INV_BASE + (AxiomId.QW2,),
    ClassId.WAJSBERG: _INV_BASE + (AxiomId.COMMUTATIVE,),
    ClassId.IMPLICATIVE: _INV_BASE + (AxiomId.PIMPL,),
    ClassId.IOM_LATTICE: _INV_BASE + (AxiomId.QW2, AxiomId.PIMPL),
    ClassId.QMV: _INV_BASE + (AxiomId.PQMV,),
    ClassId.PRE_MV: _INV_BASE + (AxiomId.PMV,),
    ClassId.META_MV: _INV_BASE + (AxiomId.DELTA_M,),
    ClassId.OM_ALG: _INV_BASE + (AxiomId.POM,),
    ClassId.OM_SOFTLATTICE: _INV_BASE + (AxiomId.POM, AxiomId.G),
    ClassId.OM_WIDELATTICE: _INV_BASE + (AxiomId.POM, AxiomId.M_PABS_I),
}

_CLASS_ALIASES = {
    "PREW": ClassId.PRE_W, "PRE-W": ClassId.PRE_W, "METAW": ClassId.META_W,
    "META-W": ClassId.META_W, "INVOLUTIVE": ClassId.INVOLUTIVE_BE, "IBE": ClassId.INVOLUTIVE_BE,
    "W": ClassId.WAJSBERG, "MV": ClassId.WAJSBERG, "OM": ClassId.OM_ALG,
    "PREMV": ClassId.PRE_MV, "METAMV": ClassId.META_MV,
}


def parse_axiom_id(text: str | AxiomId) -> AxiomId:
    if isinstance(text, AxiomId):
        return text
    key = text.strip().upper().replace("-", "_").replace("'", "P").replace("′", "P")
    try:
        return AxiomId(key)
    except ValueError:
        raise KeyError(f"unknown axiom id {text!r}") from None


def parse_class_id(text: str | ClassId) -> ClassId:
    if isinstance(text, ClassId):
        return text
    key = text.strip().upper()
    if key in _CLASS_ALIASES:
        return _CLASS_ALIASES[key]
    try:
        return ClassId(key.replace("-", "_"))
    except ValueError:
        raise KeyError(f"unknown class id {text!r}") from None


def _evaluate(axiom: Axiom, t: _Tables) -> np.ndarray:
    return np.broadcast_to(axiom.holds(t, *_grid(t.n, len(axiom.variables))),
                           (t.n,) * len(axiom.variables))


def check_axiom(a: FiniteAlgebra, axiom_id: AxiomId | str) -> CheckOutcome:
    """Decide one axiom; on failure return the least falsifying assignment."""
    axiom = CATALOGUE[parse_axiom_id(axiom_id)]
    t = _Tables(a)
    if axiom.product_side:
        if not bool(_evaluate(CATALOGUE[AxiomId.INVOLUTIVE], t).all()):
            return CheckOutcome(axiom.id, Status.PREREQ_FAILED, prereq=AxiomId.INVOLUTIVE,
                                variables=axiom.variables)
        t = t.product_side()
    holds = _evaluate(axiom, t)
    bad = np.argwhere(~holds)
    if len(bad) == 0:
        return CheckOutcome(axiom.id, Status.PASS, variables=axiom.variables)
    return CheckOutcome(axiom.id, Status.FAIL, tuple(int(v) for v in bad[0]),
                        variables=axiom.variables)


def holds_at(a: FiniteAlgebra, axiom_id: AxiomId | str, assignment: Iterable[int]) -> bool:
    """Evaluate one axiom at one assignment (used to re-check witnesses)."""
    axiom = CATALOGUE[parse_axiom_id(axiom_id)]
    t = _Tables(a)
    if axiom.product_side:
        t = t.product_side()
    return bool(axiom.holds(t, *(np.asarray(v) for v in assignment)))


def check_class(a: FiniteAlgebra, class_id: ClassId | str) -> CheckOutcome:
    """Membership as the conjunction of the class's axioms, first failure reported."""
    cid = parse_class_id(class_id)
    for axiom_id in CLASSES[cid]:
        out = check_axiom(a, axiom_id)
        if not out.passed:
            return CheckOutcome(cid, Status.FAIL, out.witness, out.prereq, axiom_id, out.variables)
    return CheckOutcome(cid, Status.PASS)


def is_involutive_be(a: FiniteAlgebra) -> bool:
    return check_class(a, ClassId.INVOLUTIVE_BE).passed


def require_involutive(a: FiniteAlgebra) -> None:
    out = check_class(a, ClassId.INVOLUTIVE_BE)
    if not out.passed:
        raise AlgebraError(f"not an involutive BE algebra: {out.describe(a)}")


def leq_antisymmetric(a: FiniteAlgebra) -> bool:
    return check_axiom(a, AxiomId.BCK4).passed
