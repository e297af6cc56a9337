"""Line-oriented text format for structures.

::

    # comment
    poset fig2
    elements 0 a b b' a' 1
    cover 0 a          # a covers 0 (lower label first)
    ...
    comp a a'          # a′ = a'
    ...
    end

A file may hold several blocks. Blank lines are ignored and ``#`` starts a
comment, so labels cannot contain ``#`` or whitespace.
"""

from __future__ import annotations

import os
from typing import Iterable, Union

from .poset import PosetError
from .structure import Structure, make_structure


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int = 0, block: str = ""):
        where = f"line {lineno}" if lineno else "end of input"
        prefix = f"{where}" + (f" (block {block})" if block else "")
        super().__init__(f"{prefix}: {message}")
        self.lineno = lineno
        self.block = block


class _Block:
    def __init__(self, name: str, lineno: int):
        self.name = name
        self.lineno = lineno
        self.labels: list[str] = []
        self.covers: list[tuple[str, str]] = []
        self.comp: dict[str, str] = {}


def _build(b: _Block, lineno: int) -> Structure:
    if not b.labels:
        raise ParseError("no elements declared", lineno, b.name)
    known = set(b.labels)
    for x, y in b.comp.items():
        for l in (x, y):
            if l not in known:
                raise ParseError(f"comp references unknown label {l!r}", lineno, b.name)
    missing = [l for l in b.labels if l not in b.comp]
    if missing:
        raise ParseError(f"incomplete complement map (no comp for {missing[0]!r})", lineno, b.name)
    try:
        return make_structure(b.labels, b.covers, b.comp, b.name)
    except PosetError as e:
        raise ParseError(f"{type(e).__name__}: {e}", lineno, b.name) from e


def parse_text(text: str) -> list[Structure]:
    out: list[Structure] = []
    block = None
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if word == "poset":
            if block is not None:
                raise ParseError(f"'poset' inside open block {block.name!r}", lineno)
            if len(args) != 1:
                raise ParseError("'poset' takes exactly one name", lineno)
            if args[0] in names:
                raise ParseError(f"duplicate block name {args[0]!r}", lineno)
            block = _Block(args[0], lineno)
            names.add(args[0])
            continue
        if block is None:
            raise ParseError(f"{word!r} outside a poset block", lineno)
        if word == "elements":
            if not args:
                raise ParseError("'elements' needs at least one label", lineno, block.name)
            block.labels.extend(args)
        elif word == "cover":
            if len(args) != 2:
                raise ParseError("'cover' takes two labels", lineno, block.name)
            block.covers.append((args[0], args[1]))
        elif word == "comp":
            if len(args) != 2:
                raise ParseError("'comp' takes two labels", lineno, block.name)
            if args[0] in block.comp:
                raise ParseError(f"second comp line for {args[0]!r}", lineno, block.name)
            block.comp[args[0]] = args[1]
        elif word == "end":
            if args:
                raise ParseError("'end' takes no arguments", lineno, block.name)
            out.append(_build(block, lineno))
            block = None
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, block.name)
    if block is not None:
        raise ParseError(f"block {block.name!r} opened on line {block.lineno} is never closed", 0, block.name)
    return out


def parse(path: Union[str, os.PathLike]) -> list[Structure]:
    with open(path, encoding="utf-8") as f:
        return parse_text(f.read())


def dump(s: Structure, name: str = "") -> str:
    P = s.poset
    name = name or s.name or "unnamed"
    lines = [f"poset {name}", "elements " + " ".join(P.labels)]
    lines += [f"cover {P.label(a)} {P.label(b)}" for a, b in P.covers()]
    lines += [f"comp {P.label(x)} {P.label(s.c(x))}" for x in P.elements]
    lines.append("end")
    return "\n".join(lines) + "\n"


def dumps(structures: Iterable[Structure]) -> str:
    return "\n".join(dump(s) for s in structures)


def write(path: Union[str, os.PathLike], structures: Iterable[Structure]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(structures))
