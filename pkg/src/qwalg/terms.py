"""Equational terms, identities and quasi-identities.

Concrete syntax::

    statement  := [atom {"," atom} "|-"] atom
    atom       := term ("=" | "<=" | "<=Q") term
    term       := mid ["->" term]                 # right associative, loosest
    mid        := postfix {op postfix}            # one operator per chain, left assoc.
    op         := "/\\" | "\\/" | "(*)" | "(+)"  # meet, join, product, sum
    postfix    := primary {"*"}
    primary    := var | "0" | "1" | "(" term ")" | fn "(" term ["," term] ")"

Mixing different mid-level operators in one chain needs parentheses.  Unicode
forms (``→ ⋒ ⊓ ⊔ ⊎ ⊙ ⊕ ≤ ≤Q ⊢``) and the word forms ``meet``, ``join``,
``odot``, ``oplus``, ``imp`` (infix or as functions) and ``star(t)`` are
accepted.  ``(+)`` is the total sum ``x* -> y``.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .algebra import FiniteAlgebra
from .axioms import CheckOutcome, Status


class Op(enum.Enum):
    IMP = "->"
    JOIN = "\\/"
    MEET = "/\\"
    ODOT = "(*)"
    OPLUS = "(+)"


class Rel(enum.Enum):
    EQ = "="
    LEQ = "<="
    LEQQ = "<=Q"


class TermSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, col
        super().__init__(f"line {line}, column {col}: {message}")


class UnboundVariable(KeyError):
    pass


@dataclass(frozen=True)
class Var:
    name: str
    pos: int | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1
    pos: int | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Star:
    arg: "Term"
    pos: int | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Bin:
    op: Op
    left: "Term"
    right: "Term"
    pos: int | None = field(default=None, compare=False, repr=False)


Term = Var | Const | Star | Bin


@dataclass(frozen=True)
class Atom:
    rel: Rel
    left: Term
    right: Term


@dataclass(frozen=True)
class Statement:
    premises: tuple[Atom, ...]
    conclusion: Atom

    def variables(self) -> list[str]:
        names: set[str] = set()
        for atom in (*self.premises, self.conclusion):
            names |= free_vars(atom.left) | free_vars(atom.right)
        return sorted(names)

    def __str__(self):
        return render(self)


def free_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Const):
        return set()
    if isinstance(t, Star):
        return free_vars(t.arg)
    return free_vars(t.left) | free_vars(t.right)


# --- lexer -----------------------------------------------------------------

_SYMBOLS = [
    ("|-", "TURNSTILE"), ("⊢", "TURNSTILE"),
    ("->", "IMP"), ("→", "IMP"),
    ("<=Q", "LEQQ"), ("≤_Q", "LEQQ"), ("≤Q", "LEQQ"), ("<=", "LEQ"), ("≤", "LEQ"),
    ("/\\", "MEET"), ("⋒", "MEET"), ("⊓", "MEET"),
    ("\\/", "JOIN"), ("⊔", "JOIN"), ("⊎", "JOIN"),
    ("(*)", "ODOT"), ("⊙", "ODOT"), ("(+)", "OPLUS"), ("⊕", "OPLUS"),
    ("=", "EQ"), ("*", "STAR"), ("(", "LP"), (")", "RP"), (",", "COMMA"),
]
_WORD_OPS = {"meet": "MEET", "join": "JOIN", "odot": "ODOT", "oplus": "OPLUS", "imp": "IMP"}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*'*")


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Token]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        for sym, kind in _SYMBOLS:
            if text.startswith(sym, i):
                toks.append(_Token(kind, sym, i))
                i += len(sym)
                break
        else:
            if ch in "01" and not (i + 1 < len(text) and (text[i + 1].isalnum())):
                toks.append(_Token("CONST", ch, i))
                i += 1
                continue
            m = _IDENT.match(text, i)
            if not m:
                raise TermSyntaxError(f"unknown token {ch!r}", text, i)
            word = m.group()
            if word == "star":
                toks.append(_Token("FSTAR", word, i))
            elif word in _WORD_OPS:
                toks.append(_Token("W" + _WORD_OPS[word], word, i))
            else:
                toks.append(_Token("VAR", word, i))
            i = m.end()
    toks.append(_Token("EOF", "", len(text)))
    return toks


_MID = {"MEET": Op.MEET, "JOIN": Op.JOIN, "ODOT": Op.ODOT, "OPLUS": Op.OPLUS}
_REL = {"EQ": Rel.EQ, "LEQ": Rel.LEQ, "LEQQ": Rel.LEQQ}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tok
        if kind is not None and tok.kind != kind:
            want = {"RP": "')'", "LP": "'('", "EOF": "end of input"}.get(kind, kind.lower())
            got = repr(tok.text) if tok.text else "end of input"
            self.error(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def error(self, msg: str, tok: _Token | None = None):
        raise TermSyntaxError(msg, self.text, (tok or self.tok).pos)

    def statement(self) -> Statement:
        atoms = [self.atom()]
        while self.tok.kind == "COMMA":
            self.take()
            atoms.append(self.atom())
        if self.tok.kind == "TURNSTILE":
            self.take()
            premises, conclusion = tuple(atoms), self.atom()
        else:
            if len(atoms) > 1:
                self.error("premises must be followed by '|-'")
            premises, conclusion = (), atoms[0]
        self.take("EOF")
        return Statement(premises, conclusion)

    def atom(self) -> Atom:
        left = self.term()
        if self.tok.kind not in _REL:
            self.error(f"expected '=', '<=' or '<=Q', found {self.tok.text or 'end of input'!r}")
        rel = _REL[self.take().kind]
        return Atom(rel, left, self.term())

    def term(self) -> Term:
        left = self.mid()
        if self.tok.kind in ("IMP", "WIMP"):
            tok = self.take()
            return Bin(Op.IMP, left, self.term(), tok.pos)
        return left

    def mid(self) -> Term:
        left = self.postfix()
        chain_op = None
        while True:
            kind = self.tok.kind.removeprefix("W")
            if kind not in _MID:
                return left
            op = _MID[kind]
            if chain_op is not None and op is not chain_op:
                self.error(f"mixing {chain_op.value!r} and {op.value!r} needs parentheses")
            chain_op = op
            tok = self.take()
            left = Bin(op, left, self.postfix(), tok.pos)

    def postfix(self) -> Term:
        t = self.primary()
        while self.tok.kind == "STAR":
            t = Star(t, self.take().pos)
        return t

    def primary(self) -> Term:
        tok = self.tok
        if tok.kind == "VAR":
            self.take()
            return Var(tok.text, tok.pos)
        if tok.kind == "CONST":
            self.take()
            return Const(int(tok.text), tok.pos)
        if tok.kind == "LP":
            self.take()
            t = self.term()
            self.take("RP")
            return t
        if tok.kind == "FSTAR":
            self.take()
            self.take("LP")
            t = self.term()
            self.take("RP")
            return Star(t, tok.pos)
        if tok.kind.startswith("W") and self.toks[self.i + 1].kind == "LP":
            self.take()
            self.take("LP")
            left = self.term()
            self.take("COMMA")
            right = self.term()
            self.take("RP")
            op = Op.IMP if tok.kind == "WIMP" else _MID[tok.kind[1:]]
            return Bin(op, left, right, tok.pos)
        self.error(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input")


def parse(text: str) -> Statement:
    return _Parser(text).statement()


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.take("EOF")
    return t


# --- rendering ---------------------------------------------------------------

def render_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Star):
        inner = render_term(t.arg)
        if isinstance(t.arg, Bin):
            inner = f"({inner})"
        return inner + "*"
    left, right = render_term(t.left), render_term(t.right)
    if t.op is Op.IMP:
        if isinstance(t.left, Bin) and t.left.op is Op.IMP:
            left = f"({left})"
        return f"{left} -> {right}"
    if isinstance(t.left, Bin) and t.left.op is not t.op:
        left = f"({left})"
    if isinstance(t.right, Bin):
        right = f"({right})"
    return f"{left} {t.op.value} {right}"


def render(s: Statement | Atom | Term) -> str:
    if isinstance(s, Statement):
        body = render(s.conclusion)
        if s.premises:
            return ", ".join(render(p) for p in s.premises) + " |- " + body
        return body
    if isinstance(s, Atom):
        return f"{render_term(s.left)} {s.rel.value} {render_term(s.right)}"
    return render_term(s)


# --- evaluation --------------------------------------------------------------

def _table(a: FiniteAlgebra, op: Op) -> np.ndarray:
    ops = a.ops
    return {Op.IMP: a.imp, Op.JOIN: ops.join, Op.MEET: ops.meet,
            Op.ODOT: ops.odot, Op.OPLUS: ops.oplus_total}[op]


def eval_term(a: FiniteAlgebra, t: Term, env: Mapping[str, int | np.ndarray]):
    """Value of ``t``; ``env`` values may be index arrays for vectorized evaluation."""
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name) from None
    if isinstance(t, Const):
        return a.unit if t.value == 1 else a.zero
    if isinstance(t, Star):
        return a.ops.star[eval_term(a, t.arg, env)]
    return _table(a, t.op)[eval_term(a, t.left, env), eval_term(a, t.right, env)]


def eval(a: FiniteAlgebra, t: Term | str, env: Mapping[str, int]) -> int:  # noqa: A001
    if isinstance(t, str):
        t = parse_term(t)
    return int(eval_term(a, t, env))


def eval_atom(a: FiniteAlgebra, atom: Atom, env):
    lhs = eval_term(a, atom.left, env)
    rhs = eval_term(a, atom.right, env)
    if atom.rel is Rel.EQ:
        return np.equal(lhs, rhs)
    if atom.rel is Rel.LEQ:
        return a.ops.leq[lhs, rhs]
    return a.ops.leqQ[lhs, rhs]


def check_statement(a: FiniteAlgebra, s: Statement | str) -> CheckOutcome:
    """PASS iff every assignment meeting the premises meets the conclusion.

    Variables are ordered by name and the least failing assignment is reported.
    """
    if isinstance(s, str):
        s = parse(s)
    names = s.variables()
    k, n = len(names), a.size
    env = {}
    for i, name in enumerate(names):
        shape = [1] * k
        shape[i] = n
        env[name] = np.arange(n).reshape(shape)
    ok = np.broadcast_to(eval_atom(a, s.conclusion, env), (n,) * k)
    for p in s.premises:
        ok = ok | ~np.broadcast_to(eval_atom(a, p, env), (n,) * k)
    bad = np.argwhere(~ok)
    label = render(s)
    if len(bad) == 0:
        return CheckOutcome(label, Status.PASS, variables=tuple(names))
    return CheckOutcome(label, Status.FAIL, tuple(int(v) for v in bad[0]),
                        variables=tuple(names))


def iter_assignments(a: FiniteAlgebra, names: list[str]):
    for values in itertools.product(range(a.size), repeat=len(names)):
        yield dict(zip(names, values))
