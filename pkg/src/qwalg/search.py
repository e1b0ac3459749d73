"""Enumeration of finite involutive BE algebras and counterexample search.

Models are laid out with the zero at index 0 and the unit at index ``n - 1``.
The search assigns the free cells of the ``->`` table in row-major order and
propagates two constraints as soon as enough cells are known: the exchange law
``x -> (y -> z) = y -> (x -> z)`` and involutivity of ``x* = x -> 0``.  Cells
fixed by ``x -> x = 1``, ``x -> 1 = 1``, ``1 -> x = x`` and ``0 -> x = 1`` are
set up front and never branched on.  Class filters are applied to complete
models only.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .algebra import FiniteAlgebra
from .axioms import ClassId, check_class, parse_class_id
from .terms import Statement, check_statement, parse

# classes every enumerated model belongs to; no post-check needed
_TRIVIAL = {ClassId.BE, ClassId.BOUNDED_BE, ClassId.INVOLUTIVE_BE}


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out; ``partial`` holds the models found so far."""

    def __init__(self, nodes: int, partial: list):
        self.nodes = nodes
        self.partial = partial
        super().__init__(f"search node budget of {nodes} exhausted after "
                         f"{len(partial)} complete models")


@dataclass(frozen=True)
class EnumerationConfig:
    size: int
    class_filter: ClassId | str | None = None
    iso_reject: bool = True
    node_limit: int | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("size must be at least 1")
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be non-negative")
        if self.class_filter is not None:
            object.__setattr__(self, "class_filter", parse_class_id(self.class_filter))


# --- canonical forms -----------------------------------------------------------

def standard_layout(a: FiniteAlgebra) -> np.ndarray:
    """``a.imp`` relabelled so the zero is index 0 and the unit index n-1."""
    n = a.size
    if n == 1:
        return a.imp.copy()
    middle = [i for i in range(n) if i not in (a.zero, a.unit)]
    order = np.array([a.zero, *middle, a.unit])
    pos = np.empty(n, dtype=np.int64)
    pos[order] = np.arange(n)
    return pos[a.imp[np.ix_(order, order)]]


@lru_cache(maxsize=None)
def _middle_perms(n: int) -> np.ndarray:
    """All permutations of ``0..n-1`` that fix 0 and ``n-1``, as rows (new -> old)."""
    if n <= 2:
        return np.arange(n)[None, :]
    rows = [(0, *p, n - 1) for p in itertools.permutations(range(1, n - 1))]
    return np.array(rows, dtype=np.int64)


def canonical_table(table: np.ndarray) -> np.ndarray:
    """Least flattened relabelling of a standard-layout table."""
    n = table.shape[0]
    q = _middle_perms(n)
    p = np.argsort(q, axis=1)
    moved = table[q[:, :, None], q[:, None, :]]
    relabelled = p[np.arange(len(q))[:, None, None], moved].reshape(len(q), n * n)
    best = np.lexsort(relabelled.T[::-1])[0]
    return relabelled[best].reshape(n, n)


def canonical_form(a: FiniteAlgebra) -> tuple[int, ...]:
    """Flattened least ``->`` table over constant-fixing relabellings."""
    return tuple(int(v) for v in canonical_table(standard_layout(a)).ravel())


def canonical_algebra(a: FiniteAlgebra) -> FiniteAlgebra:
    return _from_flat(canonical_form(a), a.size)


def _from_flat(flat, n: int) -> FiniteAlgebra:
    table = np.array(flat, dtype=np.int64).reshape(n, n)
    return FiniteAlgebra(table, unit=n - 1, zero=0)


# --- the propagating search ------------------------------------------------------

class _Solver:
    def __init__(self, n: int, node_limit: int | None):
        self.n = n
        self.node_limit = node_limit
        self.nodes = 0
        self.T = [-1] * (n * n)
        self.trail: list[int] = []
        self.queue: list[int] = []
        u = n - 1
        for x in range(n):
            for y in range(n):
                if x == y or y == u or x == 0:
                    self._set(x, y, u)
                elif x == u:
                    self._set(x, y, y)
        self.free = [x * n + y for x in range(1, n - 1) for y in range(n)
                     if y != x and y != u]

    def _set(self, x: int, y: int, v: int) -> bool:
        c = x * self.n + y
        cur = self.T[c]
        if cur == v:
            return True
        if cur != -1:
            return False
        self.T[c] = v
        self.trail.append(c)
        self.queue.append(c)
        return True

    def _undo(self, mark: int) -> None:
        T, trail = self.T, self.trail
        while len(trail) > mark:
            T[trail.pop()] = -1
        self.queue.clear()

    def _triple(self, x: int, y: int, z: int) -> bool:
        n, T = self.n, self.T
        yz = T[y * n + z]
        xz = T[x * n + z]
        lhs = T[x * n + yz] if yz >= 0 else -1
        rhs = T[y * n + xz] if xz >= 0 else -1
        if lhs >= 0:
            if rhs >= 0:
                return lhs == rhs
            if xz >= 0:
                return self._set(y, xz, lhs)
        elif rhs >= 0 and yz >= 0:
            return self._set(x, yz, rhs)
        return True

    def propagate(self) -> bool:
        n, T, q = self.n, self.T, self.queue
        rng = range(n)
        while q:
            c = q.pop()
            p, r = divmod(c, n)
            v = T[c]
            if r == 0:
                # involution: p* = v forces v* = p
                if not self._set(v, 0, p):
                    return False
            for w in rng:
                if not (self._triple(w, p, r) and self._triple(p, w, r)):
                    return False
            for a in rng:
                for b in rng:
                    if not (self._triple(p, a, b) and self._triple(a, p, b)):
                        return False
        return True

    def solutions(self) -> Iterator[tuple[int, ...]]:
        if not self.propagate():
            return
        yield from self._search(0)

    def _search(self, k: int) -> Iterator[tuple[int, ...]]:
        free, T = self.free, self.T
        while k < len(free) and T[free[k]] != -1:
            k += 1
        if k == len(free):
            yield tuple(T)
            return
        c = free[k]
        x, y = divmod(c, self.n)
        for v in range(self.n):
            if y == 0 and v in (0, self.n - 1):
                continue
            self.nodes += 1
            if self.node_limit is not None and self.nodes > self.node_limit:
                raise _OutOfBudget
            mark = len(self.trail)
            if self._set(x, y, v) and self.propagate():
                yield from self._search(k + 1)
            self._undo(mark)


class _OutOfBudget(Exception):
    pass


def _raw_models(n: int, node_limit: int | None = None) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (0,)
        return
    yield from _Solver(n, node_limit).solutions()


@lru_cache(maxsize=None)
def _labelled(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(_raw_models(n)))


@lru_cache(maxsize=None)
def _canonical(n: int) -> tuple[tuple[int, ...], ...]:
    forms = {tuple(int(v) for v in canonical_table(np.array(t).reshape(n, n)).ravel())
             for t in _labelled(n)}
    return tuple(sorted(forms))


def _collect(cfg: EnumerationConfig) -> list[tuple[int, ...]]:
    n = cfg.size
    if cfg.node_limit is None:
        return list(_canonical(n) if cfg.iso_reject else _labelled(n))
    found: list[tuple[int, ...]] = []
    try:
        for t in _raw_models(n, cfg.node_limit):
            found.append(t)
    except _OutOfBudget:
        raise SearchBudgetExceeded(cfg.node_limit,
                                   [_from_flat(t, n) for t in sorted(found)]) from None
    if cfg.iso_reject:
        found = {tuple(int(v) for v in canonical_table(np.array(t).reshape(n, n)).ravel())
                 for t in found}
    return sorted(found)


def enumerate_models(cfg: EnumerationConfig) -> Iterator[FiniteAlgebra]:
    """Involutive BE algebras of ``cfg.size`` passing the filter, in sorted table order.

    With ``iso_reject`` each isomorphism class appears once, as its canonical
    representative.
    """
    for flat in _collect(cfg):
        a = _from_flat(flat, cfg.size)
        if cfg.class_filter is None or cfg.class_filter in _TRIVIAL \
                or check_class(a, cfg.class_filter).passed:
            yield a


# short public name; shadows the builtin only inside this module's namespace
enumerate = enumerate_models  # noqa: A001


def count(cfg: EnumerationConfig) -> int:
    return sum(1 for _ in enumerate_models(cfg))


def models_up_to(max_size: int, class_filter=None) -> list[FiniteAlgebra]:
    """All isomorphism classes of sizes ``1..max_size``, smallest first."""
    out = []
    for n in range(1, max_size + 1):
        out.extend(enumerate_models(EnumerationConfig(n, class_filter)))
    return out


@dataclass(frozen=True)
class Counterexample:
    model: FiniteAlgebra
    assignment: dict[str, int]

    def describe(self) -> str:
        vals = ", ".join(f"{k}={self.model.names[v]}" for k, v in self.assignment.items())
        return f"size {self.model.size} model, {vals}"


def find_counterexample(statement: Statement | str, class_id=ClassId.INVOLUTIVE_BE,
                        max_size: int = 4, node_limit: int | None = None
                        ) -> Counterexample | None:
    """Smallest, canonically least model of the class falsifying ``statement``."""
    s = parse(statement) if isinstance(statement, str) else statement
    for n in range(1, max_size + 1):
        cfg = EnumerationConfig(n, class_id, True, node_limit)
        for a in enumerate_models(cfg):
            out = check_statement(a, s)
            if not out.passed:
                return Counterexample(a, dict(zip(out.variables, out.witness)))
    return None


# --- the naive oracle ----------------------------------------------------------------

def naive_models(n: int) -> list[tuple[int, ...]]:
    """Brute force over every table with the cells fixed by x->x=1, x->1=1, 1->x=x.

    Independent of the propagating search: each candidate is filtered with the
    axiom checker.  Feasible for ``n <= 3``.
    """
    if n == 1:
        return [(0,)]
    u = n - 1
    fixed = {}
    for x in range(n):
        for y in range(n):
            if x == y or y == u:
                fixed[(x, y)] = u
            elif x == u:
                fixed[(x, y)] = y
    open_cells = [(x, y) for x in range(n) for y in range(n) if (x, y) not in fixed]
    found = []
    for values in itertools.product(range(n), repeat=len(open_cells)):
        table = np.empty((n, n), dtype=np.int64)
        for (x, y), v in fixed.items():
            table[x, y] = v
        for (x, y), v in zip(open_cells, values):
            table[x, y] = v
        a = FiniteAlgebra(table, unit=u, zero=0)
        if check_class(a, ClassId.INVOLUTIVE_BE).passed:
            found.append(tuple(int(v) for v in table.ravel()))
    return found


def naive_canonical_forms(n: int) -> set[tuple[int, ...]]:
    """Isomorphism classes of :func:`naive_models` by direct pairwise testing."""
    reps: list[np.ndarray] = []
    perms = [p for p in itertools.permutations(range(n))
             if n == 1 or (p[0] == 0 and p[-1] == n - 1)]
    for flat in naive_models(n):
        t = np.array(flat).reshape(n, n)
        if not any(_isomorphic(t, r, perms) for r in reps):
            reps.append(t)
    return {min(tuple(int(v) for v in _relabel(r, p).ravel()) for p in perms) for r in reps}


def _relabel(t: np.ndarray, p) -> np.ndarray:
    p = np.asarray(p)
    out = np.empty_like(t)
    out[np.ix_(p, p)] = p[t]
    return out


def _isomorphic(s: np.ndarray, t: np.ndarray, perms) -> bool:
    return any(np.array_equal(_relabel(s, p), t) for p in perms)


def permutation_count(n: int) -> int:
    return math.factorial(max(n - 2, 0)) if n > 1 else 1
