"""Structural conditions on a bounded poset with a unary operation.

Every check sweeps its variables in ascending index order and reports the
first violating tuple as witness, so output is stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import NamedTuple, Optional

from .structure import Structure


class Check(NamedTuple):
    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


PASS = Check(True)


def check_bounded(s: Structure) -> Check:
    # Poset construction already rejects unbounded orders
    P = s.poset
    for x in P.elements:
        if not (P.leq(P.bottom, x) and P.leq(x, P.top)):
            return Check(False, (x,))
    return PASS


def check_lattice(s: Structure) -> Check:
    P = s.poset
    for x in P.elements:
        for y in P.elements:
            if P.meet(x, y) is None or P.join(x, y) is None:
                return Check(False, (x, y))
    return PASS


def check_involution(s: Structure) -> Check:
    """x″ = x for all x; witness is the first x where it fails."""
    for x in s.poset.elements:
        if s.c(s.c(x)) != x:
            return Check(False, (x,))
    return PASS


def check_antitone(s: Structure) -> Check:
    """x ≤ y implies y′ ≤ x′; witness is the first violating (x, y)."""
    P = s.poset
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y) and not P.leq(s.c(y), s.c(x)):
                return Check(False, (x, y))
    return PASS


def check_complementation(s: Structure) -> Check:
    """x ∧ x′ = 0 and x ∨ x′ = 1, both defined."""
    P = s.poset
    for x in P.elements:
        if P.meet(x, s.c(x)) != P.bottom or P.join(x, s.c(x)) != P.top:
            return Check(False, (x,))
    return PASS


def check_cond_i(s: Structure) -> Check:
    """Orthogonal elements (x ≤ y′) have a join."""
    P = s.poset
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, s.c(y)) and P.join(x, y) is None:
                return Check(False, (x, y))
    return PASS


def _orthomodular_ii(s: Structure, x: int, y: int) -> bool:
    # y = x ∨ (y′ ∨ x)′
    P = s.poset
    inner = P.join(s.c(y), x)
    if inner is None:
        return False
    return P.join(x, s.c(inner)) == y


def _cond_a(s: Structure, x: int, y: int) -> bool:
    # y = x ∨ (y ∧ x′)
    P = s.poset
    inner = P.meet(y, s.c(x))
    return inner is not None and P.join(x, inner) == y


def _cond_b(s: Structure, x: int, y: int) -> bool:
    # x = y ∧ (x ∨ y′)
    P = s.poset
    inner = P.join(x, s.c(y))
    return inner is not None and P.meet(y, inner) == x


def _sweep_comparable(s: Structure, pred) -> Check:
    P = s.poset
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y) and not pred(s, x, y):
                return Check(False, (x, y))
    return PASS


def check_cond_ii(s: Structure) -> Check:
    return _sweep_comparable(s, _orthomodular_ii)


def check_cond_A(s: Structure) -> Check:
    return _sweep_comparable(s, _cond_a)


def check_cond_B(s: Structure) -> Check:
    return _sweep_comparable(s, _cond_b)


@dataclass(frozen=True)
class ClassReport:
    is_bounded: Check
    is_lattice: Check
    has_involution: Check
    is_antitone: Check
    is_complementation: Check
    cond_i: Check
    cond_ii: Check
    cond_A: Check
    cond_B: Check
    is_orthomodular: Check
    is_weakly_orthomodular: Check
    is_dually_weakly_orthomodular: Check

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]

    def flags(self) -> dict[str, bool]:
        return {k: v.ok for k, v in self.items()}


def _all(*checks: Check) -> Check:
    for c in checks:
        if not c.ok:
            return c
    return PASS


def classify(s: Structure) -> ClassReport:
    """Compute every structural flag.

    Derived classes carry the witness of the first failing ingredient.
    """
    bounded = check_bounded(s)
    comp = check_complementation(s)
    inv = check_involution(s)
    anti = check_antitone(s)
    ci = check_cond_i(s)
    cii = check_cond_ii(s)
    ca = check_cond_A(s)
    cb = check_cond_B(s)
    return ClassReport(
        is_bounded=bounded,
        is_lattice=check_lattice(s),
        has_involution=inv,
        is_antitone=anti,
        is_complementation=comp,
        cond_i=ci,
        cond_ii=cii,
        cond_A=ca,
        cond_B=cb,
        is_orthomodular=_all(bounded, anti, inv, comp, ci, cii),
        is_weakly_orthomodular=_all(bounded, comp, ca),
        is_dually_weakly_orthomodular=_all(bounded, comp, cb),
    )
