"""The ``.alg`` text format.

::

    # comments run to end of line
    size 6
    elements 0 a b c d 1
    unit 1
    zero 0
    table -> :
    1 1 1 1 1 1
    d 1 c 1 1 1
    ...
    table meet :      # optional, cross-checked against the recomputed table
    ...

Row ``i`` of a binary table holds the results with ``e_i`` as left argument.
Optional ``meet``, ``join`` and ``star`` blocks must agree with the tables
recomputed from ``->``.  A file carrying ``table odot :`` and ``table star :``
instead of ``->`` describes a product-signature algebra.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraError, FiniteAlgebra, MBEAlgebra, phi_to_mbe

BINARY_BLOCKS = ("->", "odot", "meet", "join")
UNARY_BLOCKS = ("star",)
_SAVE_ORDER = ("->", "odot", "star", "meet", "join")


class AlgebraFileError(AlgebraError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str = "<text>"):
        self.line = line
        self.column = column
        self.source = source
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


@dataclass
class AlgebraFile:
    """Parsed contents of one file.

    ``algebra`` is a :class:`FiniteAlgebra`, or an :class:`MBEAlgebra` when the
    file gives a product table.  ``blocks`` lists the table blocks present, in
    file order.
    """

    algebra: FiniteAlgebra | MBEAlgebra
    blocks: tuple[str, ...] = ("->",)
    comments: tuple[str, ...] = ()
    source: str = "<text>"
    positions: dict = field(default_factory=dict)


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[list[_Tok]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for piece in body.split():
            col = body.index(piece, col)
            toks.append(_Tok(piece, lineno, col + 1))
            col += len(piece)
        if toks:
            lines.append(toks)
    return lines


def parse_text(text: str, source: str = "<text>") -> AlgebraFile:
    comments = tuple(line for line in text.splitlines() if line.lstrip().startswith("#"))
    lines = _tokenize(text)

    def fail(msg, tok=None):
        raise AlgebraFileError(msg, tok.line if tok else None, tok.col if tok else None, source)

    header: dict[str, list[_Tok]] = {}
    blocks: dict[str, list[list[_Tok]]] = {}
    order: list[str] = []
    positions: dict[str, int] = {}
    i = 0
    while i < len(lines):
        toks = lines[i]
        key = toks[0].text
        if key in ("size", "elements", "unit", "zero"):
            if key in header:
                fail(f"duplicate '{key}' line", toks[0])
            header[key] = toks[1:]
            positions[key] = toks[0].line
            i += 1
            continue
        if key != "table":
            fail(f"unexpected token {key!r}", toks[0])
        rest = [t.text for t in toks[1:]]
        if rest and rest[-1].endswith(":") and rest[-1] != ":":
            rest = rest[:-1] + [rest[-1][:-1], ":"]
        if len(rest) != 2 or rest[1] != ":":
            fail("table header must read 'table NAME :'", toks[0])
        name = rest[0]
        if name not in BINARY_BLOCKS + UNARY_BLOCKS:
            fail(f"unknown table {name!r}", toks[1])
        if name in blocks:
            fail(f"duplicate table {name!r}", toks[1])
        if "size" not in header:
            fail("'size' must precede the tables", toks[0])
        n = _size(header["size"], fail)
        positions[name] = toks[0].line
        i += 1
        rows = []
        if name in UNARY_BLOCKS:
            cells: list[_Tok] = []
            while len(cells) < n and i < len(lines) and lines[i][0].text != "table" \
                    and lines[i][0].text not in ("size", "elements", "unit", "zero"):
                cells.extend(lines[i])
                i += 1
            if len(cells) != n:
                fail(f"table {name!r} needs {n} entries, found {len(cells)}", toks[0])
            rows = [cells]
        else:
            for _ in range(n):
                if i >= len(lines) or lines[i][0].text in ("table", "size", "elements",
                                                          "unit", "zero"):
                    fail(f"table {name!r} needs {n} rows", toks[0])
                if len(lines[i]) != n:
                    fail(f"row has {len(lines[i])} entries, expected {n}", lines[i][0])
                rows.append(lines[i])
                i += 1
        blocks[name] = rows
        order.append(name)

    for key in ("size", "elements", "unit", "zero"):
        if key not in header:
            fail(f"missing '{key}' line")
    n = _size(header["size"], fail)
    names = [t.text for t in header["elements"]]
    if len(names) != n:
        fail(f"'elements' lists {len(names)} names for size {n}", header["elements"][0]
             if names else None)
    seen: dict[str, _Tok] = {}
    for tok in header["elements"]:
        if tok.text in seen:
            fail(f"duplicate element {tok.text!r}", tok)
        seen[tok.text] = tok
    index = {name: k for k, name in enumerate(names)}

    def lookup(tok: _Tok) -> int:
        if tok.text not in index:
            fail(f"unknown element symbol {tok.text!r}", tok)
        return index[tok.text]

    def constant(key):
        toks = header[key]
        if len(toks) != 1:
            fail(f"'{key}' takes exactly one element", toks[0] if toks else None)
        return lookup(toks[0])

    unit, zero = constant("unit"), constant("zero")
    tables = {name: np.array([[lookup(t) for t in row] for row in rows])
              for name, rows in blocks.items()}

    if "->" in tables and "odot" in tables:
        fail("give either '->' or 'odot', not both")
    try:
        if "->" in tables:
            algebra = FiniteAlgebra(tables["->"], unit, zero, tuple(names))
            ops = algebra.ops
            derived = {"star": ops.star, "meet": ops.meet, "join": ops.join}
        elif "odot" in tables:
            if "star" not in tables:
                fail("a product table needs a 'star' table")
            algebra = MBEAlgebra(tables["odot"], tables["star"][0], unit, zero, tuple(names))
            derived = {"star": algebra.star, "meet": algebra.meet, "join": algebra.join}
        else:
            fail("missing 'table -> :' block")
    except AlgebraFileError:
        raise
    except AlgebraError as exc:
        raise AlgebraFileError(str(exc), source=source) from None

    for name in ("star", "meet", "join"):
        if name not in tables:
            continue
        declared = tables[name]
        if name == "star":
            declared = declared[0]
        expected = derived[name]
        bad = np.argwhere(declared != expected)
        if len(bad):
            cell = tuple(int(v) for v in bad[0])
            tok = blocks[name][0][cell[0]] if name == "star" else blocks[name][cell[0]][cell[1]]
            where = names[cell[0]] if name == "star" else f"({names[cell[0]]}, {names[cell[1]]})"
            fail(f"declared {name} table disagrees at {where}: file has "
                 f"{names[declared[cell]]}, computed {names[expected[cell]]}", tok)
    return AlgebraFile(algebra, tuple(order), comments, source, positions)


def _size(toks, fail) -> int:
    if len(toks) != 1 or not toks[0].text.isdigit() or int(toks[0].text) < 1:
        fail("'size' takes one positive integer", toks[0] if toks else None)
    return int(toks[0].text)


def dump_text(af: AlgebraFile) -> str:
    a = af.algebra
    names = a.names
    out = list(af.comments)
    out += [f"size {a.size}", "elements " + " ".join(names),
            f"unit {names[a.unit]}", f"zero {names[a.zero]}"]
    if isinstance(a, FiniteAlgebra):
        ops = a.ops
        tables = {"->": a.imp, "star": ops.star, "meet": ops.meet, "join": ops.join}
    else:
        tables = {"odot": a.prod, "star": a.star, "meet": a.meet, "join": a.join}
    for name in af.blocks:
        out.append(f"table {name} :")
        t = tables[name]
        if t.ndim == 1:
            out.append(" ".join(names[v] for v in t))
        else:
            out += [" ".join(names[v] for v in row) for row in t]
    return "\n".join(out) + "\n"


def load_file(path: str | os.PathLike) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read(), source=os.fspath(path))


def load(path: str | os.PathLike) -> FiniteAlgebra:
    """Load an implication-table file; cross-check any declared derived tables."""
    af = load_file(path)
    if not isinstance(af.algebra, FiniteAlgebra):
        raise AlgebraFileError("file gives a product table, not an implication table",
                               source=os.fspath(path))
    return af.algebra


def load_mbe(path: str | os.PathLike) -> MBEAlgebra:
    af = load_file(path)
    if isinstance(af.algebra, MBEAlgebra):
        return af.algebra
    return phi_to_mbe(af.algebra)


def save(a: FiniteAlgebra | MBEAlgebra, path: str | os.PathLike,
         extra: tuple[str, ...] = (), comments: tuple[str, ...] = ()) -> None:
    """Write ``a``; ``extra`` adds derived blocks (``star``, ``meet``, ``join``) for readers."""
    main = ("->",) if isinstance(a, FiniteAlgebra) else ("odot", "star")
    blocks = main + tuple(b for b in _SAVE_ORDER if b in extra and b not in main)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_text(AlgebraFile(a, blocks, tuple(comments))))


def to_text(a: FiniteAlgebra | MBEAlgebra, extra: tuple[str, ...] = ()) -> str:
    main = ("->",) if isinstance(a, FiniteAlgebra) else ("odot", "star")
    blocks = main + tuple(b for b in _SAVE_ORDER if b in extra and b not in main)
    return dump_text(AlgebraFile(a, blocks))
