"""Identity and quasi-identity suites, grouped by the class they assume.

Each :class:`Fixture` is one numbered item of a family; an item stating
several facts carries several statements.  Keys read ``family.item``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteAlgebra
from .axioms import CheckOutcome, ClassId, check_class, parse_class_id
from .terms import Statement, check_statement, parse


@dataclass(frozen=True)
class Fixture:
    key: str
    hypothesis: ClassId
    statements: tuple[Statement, ...]


_BE, _BND, _INV = ClassId.BE, ClassId.BOUNDED_BE, ClassId.INVOLUTIVE_BE
_IOM, _IMPL, _W = ClassId.IOM, ClassId.IMPLICATIVE, ClassId.WAJSBERG

# x and y commute: x \/ y = y \/ x
_C = "{0} \\/ {1} = {1} \\/ {0}"
_CXY, _CYZ, _CXZ = _C.format("x", "y"), _C.format("y", "z"), _C.format("x", "z")
_C3 = f"{_CXY}, {_CYZ}, {_CXZ} |- "

_RAW: list[tuple[str, ClassId, tuple[str, ...]]] = [
    # implication basics
    ("impl-basics.1", _BE, ("x -> (y -> x) = 1",)),
    ("impl-basics.2", _BE, ("x <= (x -> y) -> y",)),
    ("impl-basics.3", _BND, ("x -> y* = y -> x*",)),
    ("impl-basics.4", _BND, ("x <= x**",)),
    ("impl-basics.5", _INV, ("x* -> y = y* -> x",)),
    ("impl-basics.6", _INV, ("x* -> y* = y -> x",)),
    ("impl-basics.7", _INV, ("(x -> y)* -> z = x -> (y* -> z)",)),
    ("impl-basics.8", _INV, ("x -> (y -> z) = (x -> y*)* -> z",)),
    ("impl-basics.9", _INV, ("(x* -> y)* -> (x* -> y) = (x* -> x)* -> (y* -> y)",)),
    # meet, join and <=_Q on involutive BE algebras
    ("inv-lattice.1", _INV, ("x <=Q y |- x = y /\\ x", "x <=Q y |- y = x \\/ y")),
    ("inv-lattice.2", _INV, ("x <=Q x", "x <=Q y, y <=Q x |- x = y")),
    ("inv-lattice.3", _INV, ("x /\\ y = (x* \\/ y*)*", "x \\/ y = (x* /\\ y*)*")),
    ("inv-lattice.4", _INV, ("x <=Q y |- x <= y",)),
    ("inv-lattice.5", _INV, ("0 <=Q x", "x <=Q 1")),
    ("inv-lattice.6", _INV, ("0 /\\ x = 0", "x /\\ 0 = 0", "1 /\\ x = x", "x /\\ 1 = x")),
    ("inv-lattice.7", _INV, ("(x /\\ y) -> z = (y -> x) -> (y -> z)",)),
    ("inv-lattice.8", _INV, ("z -> (x \\/ y) = (x -> y) -> (z -> y)",)),
    ("inv-lattice.9", _INV, ("x /\\ y <= x", "x /\\ y <= y", "x <= x \\/ y", "y <= x \\/ y")),
    ("inv-lattice.10", _INV, ("x /\\ (y /\\ x) = y /\\ x", "x /\\ (x /\\ y) = x /\\ y")),
    ("inv-meet.1", _INV, ("x <=Q z, y <=Q z, z -> x = z -> y |- x = y",)),
    ("inv-meet.2", _INV, ("(x -> (y -> z)) -> x* = ((y -> z) /\\ x)*",)),
    ("inv-meet.3", _INV, ("x -> ((y -> x*)* \\/ z) = y \\/ (x -> z)",)),
    ("inv-meet.4", _INV, ("((y -> x) /\\ z) -> x = y \\/ (z -> x)",)),
    ("inv-meet.5", _INV, ("x <=Q y |- (y -> x) (*) y = x",)),
    ("inv-meet.6", _INV, ("x -> (z (*) y*) = ((z -> y) (*) x)*",)),
    ("inv-meet.7", _INV, ("(x \\/ y) /\\ y = y", "(x /\\ y) \\/ y = y")),
    ("inv-meet.8", _INV, ("z /\\ x = (x -> (x -> z)*)*",)),
    ("inv-meet.9", _INV, ("(x /\\ (y /\\ z))* = ((z -> x) /\\ (z -> y)) -> z*",)),
    ("inv-meet.10", _INV, ("(x /\\ y)* -> (y -> x)* = y \\/ (y -> x)*",)),
    # implicative-orthomodular algebras
    ("iom-absorb.1", _IOM, ("x /\\ (y \\/ x) = x", "x \\/ (y /\\ x) = x")),
    ("iom-absorb.2", _IOM, ("x <=Q y |- y \\/ x = y", "x <=Q y |- y* <=Q x*")),
    ("iom-absorb.3", _IOM, ("x <=Q y |- y -> z <=Q x -> z", "x <=Q y |- z -> x <=Q z -> y")),
    ("iom-absorb.4", _IOM, ("x <=Q y |- x /\\ z <=Q y /\\ z", "x <=Q y |- x \\/ z <=Q y \\/ z")),
    ("iom-absorb.5", _IOM, ("x /\\ ((y -> x) /\\ (z -> x)) = x",)),
    ("iom-absorb.6", _IOM, ("x \\/ ((y* -> x*)* \\/ (z* -> x*)*) = x",)),
    ("iom-absorb.7", _IOM, ("(x \\/ y) -> (x -> y)* = y*",)),
    ("iom-order.1", _IOM, ("(x -> y) \\/ y = x -> y",)),
    ("iom-order.2", _IOM, ("(x -> y) -> (y /\\ x) = x",)),
    ("iom-order.3", _IOM, ("x -> (y /\\ x) = x -> y",)),
    ("iom-order.4", _IOM, ("(z -> y) \\/ (z -> (x /\\ y)) = z -> y",)),
    ("iom-order.5", _IOM, ("(x -> y)* /\\ x = (x -> y)*",)),
    ("iom-order.6", _IOM, ("x <= y |- y /\\ x = x", "y /\\ x = x |- x <= y")),
    ("iom-order.7", _IOM, ("x <=Q y, y <= x |- x = y",)),
    ("iom-order.8", _IOM, ("x /\\ y <=Q y", "y <=Q x \\/ y")),
    ("iom-order.9", _IOM, ("(x \\/ y) -> y = x -> y",)),
    ("iom-order.10", _IOM, ("x /\\ y <=Q x -> y", "y /\\ x <=Q x -> y")),
    ("iom-meet.1", _IOM, ("(x /\\ y) /\\ y = x /\\ y",)),
    ("iom-meet.2", _IOM, ("x \\/ (y /\\ x) = x",)),
    ("iom-meet.3", _IOM, ("x /\\ (y \\/ x) = x",)),
    ("iom-meet.4", _IOM, ("x /\\ y <=Q y", "y <=Q x \\/ y")),
    ("iom-meet.5", _IOM, ("(x /\\ y) /\\ (y /\\ z) = (x /\\ y) /\\ z",)),
    ("iom-meet.6", _IOM, ("(x \\/ y) \\/ (y \\/ z) = (x \\/ y) \\/ z",)),
    ("iom-meet.7", _IOM, ("x <=Q y, y <=Q z |- x <=Q z",)),
    ("iom-meet.8", _IOM, ("(x -> y) \\/ (x -> (z /\\ y)) = x -> y",)),
    ("iom-meet.9", _IOM, ("(x -> y) \\/ ((z -> x) -> y) = x -> y",)),
    ("iom-meet.10", _IOM, ("(z /\\ x) -> (y /\\ x) = (z /\\ x) -> y",)),
    ("iom-meet.11", _IOM, ("z /\\ ((y* -> z) /\\ (x* -> y)) = z /\\ (x* -> y)",)),
    ("iom-meet.12", _IOM, ("x \\/ (x -> y)* = x",)),
    ("iom-meet.13", _IOM, ("(z \\/ x) -> (y \\/ x) = z -> (y \\/ x)",)),
    # involutive implicative BE algebras
    ("implicative.1", _IMPL, ("x* -> x = x", "x -> x* = x*")),
    ("implicative.2", _IMPL, ("x -> (x -> y) = x -> y",)),
    ("implicative.3", _IMPL, ("x -> (y -> x)* = x*",)),
    ("implicative.4", _IMPL, ("x -> (y -> x*) = y -> x*",)),
    ("implicative.5", _IMPL, ("(y -> x*) -> x = x",)),
    # Wajsberg algebras
    ("wajsberg.1", _W, ("x -> (x /\\ y) = x -> y", "x -> ((x /\\ y) /\\ x) = x -> y")),
    ("wajsberg.2", _W, ("x /\\ (x* -> y) = x",)),
    ("wajsberg.3", _W, ("(x -> y) -> (x /\\ y) = x",)),
    ("wajsberg.4", _W, ("(z /\\ x) -> (y /\\ x) = (z /\\ x) -> y",)),
    ("wajsberg.5", _W, ("(x -> y)* /\\ x = (x -> y)*",)),
    ("wajsberg.6", _W, ("(x /\\ y) /\\ y = x /\\ y",)),
    ("wajsberg.7", _W, ("x /\\ y <=Q y", "y <=Q x \\/ y")),
    ("wajsberg.8", _W, ("(x /\\ y) /\\ (y /\\ z) = (x /\\ y) /\\ z",)),
    ("wajsberg.9", _W, ("(x /\\ y) /\\ z = y /\\ (x /\\ z)",)),
    ("wajsberg.10", _W, ("x -> (y /\\ z) = (x -> y) /\\ (x -> z)",)),
    # commuting elements of implicative-orthomodular algebras
    ("commute-equiv", _IOM, (
        f"{_CXY} |- x /\\ y = y /\\ x",
        "x /\\ y = y /\\ x |- (x -> y) -> (x /\\ y) = x",
        f"(x -> y) -> (x /\\ y) = x |- {_CXY}",
    )),
    ("commute.1", _IOM, (f"{_CXY} |- x* \\/ y* = y* \\/ x*",)),
    ("commute.2", _IOM, (f"x <=Q y |- {_CXY}", f"y <=Q x |- {_CXY}")),
    ("commute.3", _IOM, ("(x /\\ y)* \\/ (x -> y)* = (x -> y)* \\/ (x /\\ y)*",)),
    ("commute-join-exchange", _IOM, (f"{_CXY}, {_CXZ} |- (x \\/ y) \\/ z = y \\/ (x \\/ z)",)),
    ("commute-triple.1", _IOM, (_C3 + "(x \\/ y) \\/ z = z \\/ (x \\/ y)",)),
    ("commute-triple.2", _IOM, (_C3 + "y \\/ z <=Q y \\/ (z \\/ x)",)),
    ("commute-join-imp-upper", _IOM, (f"{_CYZ} |- (y \\/ z) -> x <=Q (y -> x) /\\ (z -> x)",)),
    ("commute-join-imp-lower", _IOM, (_C3 + "(y -> x) /\\ (z -> x) <= (y \\/ z) -> x",)),
    ("commute-distrib.1", _IOM, (_C3 + "(y \\/ z) -> x = (y -> x) /\\ (z -> x)",)),
    ("commute-distrib.2", _IOM, (_C3 + "x -> (y /\\ z) = (x -> y) /\\ (x -> z)",)),
]

FIXTURES: tuple[Fixture, ...] = tuple(
    Fixture(key, hyp, tuple(parse(s) for s in stmts)) for key, hyp, stmts in _RAW)

assert len({f.key for f in FIXTURES}) == len(FIXTURES)


def fixture_suite(class_id: ClassId | str | None = None) -> list[Fixture]:
    """Fixtures assuming exactly ``class_id`` (all fixtures when ``None``)."""
    if class_id is None:
        return list(FIXTURES)
    cid = parse_class_id(class_id)
    return [f for f in FIXTURES if f.hypothesis is cid]


def fixture(key: str) -> Fixture:
    for f in FIXTURES:
        if f.key == key:
            return f
    raise KeyError(key)


def hypothesis_classes() -> list[ClassId]:
    seen: list[ClassId] = []
    for f in FIXTURES:
        if f.hypothesis not in seen:
            seen.append(f.hypothesis)
    return seen


def run_fixtures(a: FiniteAlgebra, class_id: ClassId | str | None = None
                 ) -> list[tuple[Fixture, list[CheckOutcome]]]:
    """Run the suites whose hypothesis ``a`` satisfies (or one named suite)."""
    if class_id is not None:
        classes = [parse_class_id(class_id)]
    else:
        classes = [c for c in hypothesis_classes() if check_class(a, c).passed]
    results = []
    for cid in classes:
        for f in fixture_suite(cid):
            results.append((f, [check_statement(a, s) for s in f.statements]))
    return results
