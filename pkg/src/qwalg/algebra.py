"""Finite algebras given by an implication Cayley table.

Elements are the indices ``0..n-1``; names are for presentation only.  Every
derived operation is computed once, eagerly, from the ``->`` table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np


class AlgebraError(ValueError):
    """Malformed table or unmet precondition."""


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.flags.writeable = False
    return arr


def _check_square(table: np.ndarray, n: int, label: str) -> None:
    if table.shape != (n, n):
        raise AlgebraError(f"{label} table has shape {table.shape}, expected ({n}, {n})")
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        i, j = bad[0]
        raise AlgebraError(f"{label} table cell ({i}, {j}) holds {table[i, j]}, outside [0, {n})")


def default_names(n: int) -> tuple[str, ...]:
    """``0, a, b, ..., 1`` with zero first and unit last, as the enumerator lays them out."""
    if n == 1:
        return ("1",)
    inner = [chr(ord("a") + k) if k < 26 else f"e{k}" for k in range(n - 2)]
    return ("0", *inner, "1")


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """An algebra ``(X, ->, 0, 1)`` on ``X = {0, ..., n-1}``.

    ``imp[x, y]`` is ``x -> y``.  No axiom is assumed; see :mod:`qwalg.axioms`.
    """

    imp: np.ndarray
    unit: int
    zero: int
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        imp = _frozen(self.imp)
        object.__setattr__(self, "imp", imp)
        if imp.ndim != 2 or imp.shape[0] == 0:
            raise AlgebraError("implication table must be a non-empty square table")
        n = imp.shape[0]
        _check_square(imp, n, "->")
        names = tuple(self.names) if self.names else default_names(n)
        if len(names) != n:
            raise AlgebraError(f"{len(names)} element names for {n} elements")
        if len(set(names)) != n:
            raise AlgebraError("element names must be distinct")
        object.__setattr__(self, "names", names)
        for label, v in (("unit", self.unit), ("zero", self.zero)):
            if not 0 <= v < n:
                raise AlgebraError(f"{label} index {v} out of range")
        if n > 1 and self.unit == self.zero:
            raise AlgebraError("unit and zero coincide in a non-trivial algebra")
        object.__setattr__(self, "unit", int(self.unit))
        object.__setattr__(self, "zero", int(self.zero))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str]], names: Sequence[str],
                  unit: str = "1", zero: str = "0") -> "FiniteAlgebra":
        """Build from a table written with element names, row ``i`` = left argument."""
        index = {name: i for i, name in enumerate(names)}
        try:
            imp = [[index[s] for s in row] for row in rows]
        except KeyError as exc:
            raise AlgebraError(f"unknown element {exc.args[0]!r}") from None
        return cls(imp, unit=index[unit], zero=index[zero], names=tuple(names))

    @property
    def size(self) -> int:
        return self.imp.shape[0]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (self.unit == other.unit and self.zero == other.zero
                and self.names == other.names and np.array_equal(self.imp, other.imp))

    def __hash__(self):
        return hash((self.unit, self.zero, self.names, self.imp.tobytes()))

    def __repr__(self):
        return f"FiniteAlgebra(size={self.size}, names={self.names}, unit={self.unit}, zero={self.zero})"

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"no element named {name!r}") from None

    def name_of(self, items) -> tuple[str, ...]:
        return tuple(self.names[int(i)] for i in items)

    @cached_property
    def ops(self) -> "DerivedOps":
        return derive_ops(self)

    def rename(self, names: Sequence[str]) -> "FiniteAlgebra":
        return FiniteAlgebra(self.imp, self.unit, self.zero, tuple(names))

    def restrict(self, elements: Sequence[int]) -> "FiniteAlgebra":
        """Subtable on ``elements`` (kept in input order); they must be closed under ``->``."""
        elements = sorted(int(e) for e in elements)
        pos = {e: k for k, e in enumerate(elements)}
        sub = self.imp[np.ix_(elements, elements)]
        try:
            table = [[pos[int(v)] for v in row] for row in sub]
        except KeyError:
            raise AlgebraError("subset is not closed under ->") from None
        if self.unit not in pos or self.zero not in pos:
            raise AlgebraError("subset must contain the constants")
        return FiniteAlgebra(table, pos[self.unit], pos[self.zero],
                             tuple(self.names[e] for e in elements))


@dataclass(frozen=True, eq=False)
class DerivedOps:
    star: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    odot: np.ndarray
    oplus_total: np.ndarray
    leq: np.ndarray
    leqQ: np.ndarray

    def table(self, name: str) -> np.ndarray:
        return getattr(self, name)


def derive_ops(a: FiniteAlgebra) -> DerivedOps:
    """Compute ``*``, join, meet, product, total sum, ``<=`` and ``<=_Q`` from ``->``.

    join(x, y) = (x -> y) -> y
    meet(x, y) = ((x* -> y*) -> y*)*
    odot(x, y) = (x -> y*)*
    oplus_total(x, y) = x* -> y
    """
    imp = a.imp
    n = a.size
    col = np.arange(n)[None, :]
    star = imp[:, a.zero]
    join = imp[imp, col]
    meet = star[join[star[:, None], star[None, :]]]
    odot = star[imp[:, star]]
    oplus = imp[star, :]
    leq = imp == a.unit
    leqQ = meet == np.arange(n)[:, None]
    return DerivedOps(*(_frozen(t) for t in (star, join, meet, odot, oplus)),
                      _frozen_bool(leq), _frozen_bool(leqQ))


def _frozen_bool(a) -> np.ndarray:
    arr = np.array(a, dtype=bool)
    arr.flags.writeable = False
    return arr


def _check_index(a, *items) -> None:
    for v in items:
        if not 0 <= v < a.size:
            raise IndexError(f"element index {v} out of range for size {a.size}")


def star(a: FiniteAlgebra, x: int) -> int:
    _check_index(a, x)
    return int(a.ops.star[x])


def join(a: FiniteAlgebra, x: int, y: int) -> int:
    _check_index(a, x, y)
    return int(a.ops.join[x, y])


def meet(a: FiniteAlgebra, x: int, y: int) -> int:
    _check_index(a, x, y)
    return int(a.ops.meet[x, y])


def odot(a: FiniteAlgebra, x: int, y: int) -> int:
    _check_index(a, x, y)
    return int(a.ops.odot[x, y])


def oplus_total(a: FiniteAlgebra, x: int, y: int) -> int:
    _check_index(a, x, y)
    return int(a.ops.oplus_total[x, y])


@dataclass(frozen=True, eq=False)
class MBEAlgebra:
    """An algebra ``(X, (.), *, 1)`` given by its product and complement tables."""

    prod: np.ndarray
    star: np.ndarray
    unit: int
    zero: int
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        prod = _frozen(self.prod)
        st = _frozen(self.star)
        object.__setattr__(self, "prod", prod)
        object.__setattr__(self, "star", st)
        if prod.ndim != 2 or prod.shape[0] == 0:
            raise AlgebraError("product table must be a non-empty square table")
        n = prod.shape[0]
        _check_square(prod, n, "product")
        if st.shape != (n,) or ((st < 0) | (st >= n)).any():
            raise AlgebraError("complement table must list one element per element")
        names = tuple(self.names) if self.names else default_names(n)
        if len(names) != n or len(set(names)) != n:
            raise AlgebraError("element names must be distinct, one per element")
        object.__setattr__(self, "names", names)
        for label, v in (("unit", self.unit), ("zero", self.zero)):
            if not 0 <= v < n:
                raise AlgebraError(f"{label} index {v} out of range")
        if n > 1 and self.unit == self.zero:
            raise AlgebraError("unit and zero coincide in a non-trivial algebra")

    @property
    def size(self) -> int:
        return self.prod.shape[0]

    def __eq__(self, other):
        if not isinstance(other, MBEAlgebra):
            return NotImplemented
        return (self.unit == other.unit and self.zero == other.zero and self.names == other.names
                and np.array_equal(self.prod, other.prod) and np.array_equal(self.star, other.star))

    def __hash__(self):
        return hash((self.unit, self.zero, self.names, self.prod.tobytes(), self.star.tobytes()))

    # Derived m-side operations, written in the product signature only.
    @cached_property
    def oplus(self) -> np.ndarray:
        s = self.star
        return _frozen(s[self.prod[s[:, None], s[None, :]]])

    @cached_property
    def join(self) -> np.ndarray:
        """``(x (.) y*) (+) y``."""
        n = self.size
        left = self.prod[:, self.star]
        return _frozen(self.oplus[left, np.arange(n)[None, :]])

    @cached_property
    def meet(self) -> np.ndarray:
        """``(x (+) y*) (.) y``."""
        n = self.size
        left = self.oplus[:, self.star]
        return _frozen(self.prod[left, np.arange(n)[None, :]])


def phi_to_mbe(a: FiniteAlgebra) -> MBEAlgebra:
    """Product view: ``x (.) y = (x -> y*)*``.  Refuses non-involutive input."""
    from .axioms import require_involutive

    require_involutive(a)
    st = a.ops.star
    prod = st[a.imp[:, st]]
    return MBEAlgebra(prod, st, a.unit, a.zero, a.names)


def psi_to_be(m: MBEAlgebra) -> FiniteAlgebra:
    """Implication view: ``x -> y = (x (.) y*)*``.  Requires ``**`` to be the identity."""
    st = m.star
    bad = np.flatnonzero(st[st] != np.arange(m.size))
    if len(bad):
        x = bad[0]
        raise AlgebraError(f"complement is not involutive: {m.names[x]}** = {m.names[st[st[x]]]}")
    if st[m.unit] != m.zero:
        raise AlgebraError("complement of the unit must be the zero")
    imp = st[m.prod[:, st]]
    return FiniteAlgebra(imp, m.unit, m.zero, m.names)
