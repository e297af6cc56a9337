"""Set-valued operators ⊙ and → on a bounded poset with a unary operation.

    x ⊙ y = Min U(x, y′) ∧ y
    x → y = x′ ∨ Max L(x, y)

Both are computed elementwise over the Min/Max sets. When one of those
elementwise meets or joins does not exist the cell holds an
:class:`~omposet.poset.Undefined` marker instead of an element set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .poset import ESet, Poset, Undefined, eset
from .structure import Structure

Cell = Union[ESet, Undefined]


def odot(s: Structure, x: int, y: int) -> Cell:
    P = s.poset
    return P.set_meet(P.min_of(P.upper_bounds((x, s.c(y)))), y)


def arrow(s: Structure, x: int, y: int) -> Cell:
    P = s.poset
    return P.set_join(s.c(x), P.max_of(P.lower_bounds((x, y))))


def sqsubseteq(P: Poset, A: Iterable[int], B: Iterable[int]) -> bool:
    """A ⊑ B: some member of A lies below some member of B."""
    B = tuple(B)
    return any(P.leq(a, b) for a in A for b in B)


def lift(op, A: Iterable[int], y: int) -> Cell:
    """Union of ``op(x, y)`` over x in A; the first marker wins."""
    out: set = set()
    for x in A:
        r = op(x, y)
        if isinstance(r, Undefined):
            return r
        out.update(r)
    return eset(out)


def lift_odot(s: Structure, A: Iterable[int], y: int) -> Cell:
    return lift(lambda x, y: odot(s, x, y), A, y)


def lift_arrow(s: Structure, A: Iterable[int], y: int) -> Cell:
    return lift(lambda x, y: arrow(s, x, y), A, y)


@dataclass(frozen=True)
class OpTable:
    kind: str  # "odot" or "arrow"
    cells: tuple  # n rows of n cells

    def __call__(self, x: int, y: int) -> Cell:
        return self.cells[x][y]

    @property
    def n(self) -> int:
        return len(self.cells)

    def first_undefined(self) -> Optional[tuple[int, int]]:
        for x, row in enumerate(self.cells):
            for y, cell in enumerate(row):
                if isinstance(cell, Undefined):
                    return (x, y)
        return None

    @property
    def well_defined(self) -> bool:
        return self.first_undefined() is None


def build_table(s: Structure, kind: str) -> OpTable:
    ops = {"odot": odot, "arrow": arrow}
    if kind not in ops:
        raise ValueError(f"unknown operator {kind!r}, expected 'odot' or 'arrow'")
    f = ops[kind]
    n = s.n
    return OpTable(kind, tuple(tuple(f(s, x, y) for y in range(n)) for x in range(n)))


@dataclass(frozen=True, eq=False)
class OperatorStructure:
    """A bounded poset with two tabulated set-valued operators.

    This is the object the residuation laws talk about; it carries no
    unary map. :func:`residuated` produces one from a :class:`Structure`,
    but tables may also be supplied directly.
    """

    poset: Poset
    odot: OpTable
    arrow: OpTable
    name: str = ""

    def mul(self, x: int, y: int) -> Cell:
        return self.odot.cells[x][y]

    def imp(self, x: int, y: int) -> Cell:
        return self.arrow.cells[x][y]

    def lift_mul(self, A: Iterable[int], y: int) -> Cell:
        return lift(self.mul, A, y)

    def lift_imp(self, A: Iterable[int], y: int) -> Cell:
        return lift(self.imp, A, y)

    def sqsubseteq(self, A, B) -> bool:
        return sqsubseteq(self.poset, A, B)


def residuated(s: Structure) -> OperatorStructure:
    """Tabulate ⊙ and → for ``s``."""
    return OperatorStructure(s.poset, build_table(s, "odot"), build_table(s, "arrow"), s.name)
