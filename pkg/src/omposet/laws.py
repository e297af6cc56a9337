"""Exhaustive checks of the residuation laws over finite structures.

A law is a predicate over a tuple of arguments together with the list of
argument tuples it quantifies over. :func:`check` sweeps the instances in
lexicographic order and reports the first counterexample. Instances that
touch an undefined operator cell are skipped and recorded; a law whose only
problems are such cells is reported as ``inapplicable`` rather than passed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .ortho import check_cond_A, check_cond_B, check_involution, classify
from .poset import Poset, Undefined, eset
from .residuation import OperatorStructure, Cell, residuated, sqsubseteq
from .structure import Structure

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


class NotSingletonError(ValueError):
    def __init__(self, x: int, value):
        super().__init__(f"x→0 is not a single element at x={x}: {value}")
        self.x = x
        self.value = value


class _Marker(Exception):
    def __init__(self, cell):
        self.cell = cell


@dataclass(frozen=True)
class LawReport:
    law: str
    status: str
    counterexample: Optional[tuple] = None
    checked: int = 0
    note: str = ""
    undefined_cell: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def render_counterexample(self, P: Poset) -> Optional[list[str]]:
        if self.counterexample is None:
            return None
        return [P.fmt(v) for v in self.counterexample]


@dataclass(frozen=True)
class Law:
    id: str
    holds: Callable  # holds(R, *args) -> bool
    instances: Callable  # instances(R) -> iterable of arg tuples
    description: str = ""


def _defined(cell: Cell, where) -> tuple:
    if isinstance(cell, Undefined):
        raise _Marker(where)
    return cell


def mul(R: OperatorStructure, x: int, y: int) -> tuple:
    return _defined(R.mul(x, y), ("odot", x, y))


def imp(R: OperatorStructure, x: int, y: int) -> tuple:
    return _defined(R.imp(x, y), ("arrow", x, y))


def lift_mul(R: OperatorStructure, A, y: int) -> tuple:
    return eset(v for x in A for v in mul(R, x, y))


def lift_imp(R: OperatorStructure, A, y: int) -> tuple:
    return eset(v for x in A for v in imp(R, x, y))


def join_with(P: Poset, A, B) -> Optional[tuple]:
    """{a ∨ b | a in A, b in B}, or None if some join is missing."""
    out = set()
    for a in A:
        for b in B:
            j = P.join(a, b)
            if j is None:
                return None
            out.add(j)
    return eset(out)


def meet_with(P: Poset, A, B) -> Optional[tuple]:
    out = set()
    for a in A:
        for b in B:
            m = P.meet(a, b)
            if m is None:
                return None
            out.add(m)
    return eset(out)


def check(law: Law, R: OperatorStructure) -> LawReport:
    checked = 0
    skipped = None
    for args in law.instances(R):
        try:
            ok = law.holds(R, *args)
        except _Marker as m:
            if skipped is None:
                skipped = m.cell
            continue
        checked += 1
        if not ok:
            return LawReport(law.id, FAIL, tuple(args), checked, law.description, skipped)
    if skipped is not None:
        return LawReport(law.id, INAPPLICABLE, None, checked, f"undefined cell {skipped}", skipped)
    return LawReport(law.id, PASS, None, checked, law.description)


def reproduces(law: Law, R: OperatorStructure, report: LawReport) -> bool:
    """True if the report's counterexample really violates the law."""
    if report.counterexample is None:
        return False
    try:
        return not law.holds(R, *report.counterexample)
    except _Marker:
        return False


# -- instance generators ----------------------------------------------------

def _elems(R):
    return ((x,) for x in R.poset.elements)


def _pairs(R):
    return itertools.product(R.poset.elements, repeat=2)


def _triples(R):
    return itertools.product(R.poset.elements, repeat=3)


# -- operator residuated structure axioms -----------------------------------

def _total(R, kind, x, y):
    cell = (R.mul if kind == "odot" else R.imp)(x, y)
    return not isinstance(cell, Undefined)


def _total_instances(R):
    for kind in ("odot", "arrow"):
        for x, y in _pairs(R):
            yield (kind, x, y)


def _adj_forward(R, x, y, z):
    return not R.sqsubseteq(mul(R, x, y), (z,)) or R.sqsubseteq((x,), imp(R, y, z))


def _adj_backward(R, x, y, z):
    return not R.sqsubseteq((x,), imp(R, y, z)) or R.sqsubseteq(mul(R, x, y), (z,))


def _unit(R, x):
    one = R.poset.top
    return mul(R, x, one) == (x,) and mul(R, one, x) == (x,)


def _def_v(R, x, y):
    P = R.poset
    if not P.set_leq(imp(R, y, P.bottom), (x,)):
        return True
    m = P.meet(x, y)
    return m is not None and mul(R, x, y) == (m,)


def _def_vi(R, x, y):
    P = R.poset
    if not P.leq(y, x):
        return True
    return imp(R, x, y) == join_with(P, imp(R, x, P.bottom), (y,))


def _idempotent(R, x):
    return mul(R, x, x) == (x,)


def _divisible(R, x, y):
    P = R.poset
    return lift_mul(R, imp(R, x, y), x) == P.max_of(P.lower_bounds((x, y)))


def _double_negation(R, x):
    zero = R.poset.bottom
    return lift_imp(R, imp(R, x, zero), zero) == (x,)


def _contraposition(R, x, y):
    P = R.poset
    if not P.leq(x, y):
        return True
    return P.set_leq(imp(R, y, P.bottom), imp(R, x, P.bottom))


def _unit_join(R, x):
    P = R.poset
    return join_with(P, (x,), imp(R, x, P.bottom)) == (P.top,)


OPERATORS_TOTAL = Law("operators_total", _total, _total_instances,
                      "⊙ and → have a non-empty value in every cell")
ADJOINT_FORWARD = Law("adjointness_forward", _adj_forward, _triples,
                      "x⊙y ⊑ z implies x ⊑ y→z")
ADJOINT_BACKWARD = Law("adjointness_backward", _adj_backward, _triples,
                       "x ⊑ y→z implies x⊙y ⊑ z")
UNIT = Law("unit", _unit, _elems, "x⊙1 = 1⊙x = x")
DEF_V = Law("meet_rule", _def_v, _pairs, "y→0 ≤ x implies x⊙y = x∧y")
DEF_VI = Law("join_rule", _def_vi, _pairs, "y ≤ x implies x→y = (x→0)∨y")
IDEMPOTENT = Law("idempotent", _idempotent, _elems, "x⊙x = x")
DIVISIBLE = Law("divisible", _divisible, _pairs, "(x→y)⊙x = Max L(x,y)")
DOUBLE_NEGATION = Law("double_negation", _double_negation, _elems, "(x→0)→0 = x")
CONTRAPOSITION = Law("contraposition", _contraposition, _pairs, "x ≤ y implies y→0 ≤ x→0")
# Not one of the structure axioms; only the weak bundle asserts it.
UNIT_JOIN = Law("unit_join", _unit_join, _elems, "x ∨ (x→0) = 1")

RESIDUATION_LAWS = (
    OPERATORS_TOTAL, ADJOINT_FORWARD, ADJOINT_BACKWARD, UNIT, DEF_V, DEF_VI,
    IDEMPOTENT, DIVISIBLE, DOUBLE_NEGATION, CONTRAPOSITION, UNIT_JOIN,
)
LAWS = {law.id: law for law in RESIDUATION_LAWS}


def _as_operators(s) -> OperatorStructure:
    return s if isinstance(s, OperatorStructure) else s.operators


def check_adjointness(s, direction: str = "both") -> LawReport:
    """Operator left adjointness, or one of its two halves.

    For ``"both"`` the forward report is returned unless it passes, in which
    case the backward one decides.
    """
    R = _as_operators(s)
    if direction == "forward":
        return check(ADJOINT_FORWARD, R)
    if direction == "backward":
        return check(ADJOINT_BACKWARD, R)
    if direction != "both":
        raise ValueError(f"direction must be both, forward or backward, not {direction!r}")
    fwd = check(ADJOINT_FORWARD, R)
    if not fwd.passed:
        return fwd
    back = check(ADJOINT_BACKWARD, R)
    if not back.passed:
        return back
    return LawReport("adjointness", PASS, None, fwd.checked, "x⊙y ⊑ z iff x ⊑ y→z")


def check_operators_total(s) -> LawReport:
    return check(OPERATORS_TOTAL, _as_operators(s))


def check_unit_laws(s) -> LawReport:
    return check(UNIT, _as_operators(s))


def check_def_v(s) -> LawReport:
    return check(DEF_V, _as_operators(s))


def check_def_vi(s) -> LawReport:
    return check(DEF_VI, _as_operators(s))


def check_idempotent(s) -> LawReport:
    return check(IDEMPOTENT, _as_operators(s))


def check_divisible(s) -> LawReport:
    return check(DIVISIBLE, _as_operators(s))


def check_double_negation(s) -> LawReport:
    return check(DOUBLE_NEGATION, _as_operators(s))


def check_contraposition(s) -> LawReport:
    return check(CONTRAPOSITION, _as_operators(s))


def check_unit_join(s) -> LawReport:
    return check(UNIT_JOIN, _as_operators(s))


def check_negation(s: Structure) -> LawReport:
    """x→0 = {x′} for every x."""
    R = s.operators
    law = Law("negation", lambda R, x: imp(R, x, R.poset.bottom) == (s.c(x),), _elems,
              "x→0 = x′")
    return check(law, R)


# -- lemma suite --------------------------------------------------------------

def _operator_outputs(R: OperatorStructure) -> set:
    out = set()
    for table in (R.odot, R.arrow):
        for row in table.cells:
            out.update(c for c in row if not isinstance(c, Undefined))
    return out


def small_subsets(R: OperatorStructure, width: int = 3) -> list[tuple]:
    """All subsets of size 1..width plus every operator output, deduplicated."""
    P = R.poset
    sets = set()
    for k in range(1, width + 1):
        sets.update(itertools.combinations(P.elements, k))
    sets |= _operator_outputs(R)
    return sorted(sets, key=lambda t: (len(t), t))


def _inapplicable(law_id: str, why: str) -> LawReport:
    return LawReport(law_id, INAPPLICABLE, None, 0, why)


def check_lemma_suite(s: Structure, width: int = 3) -> list[LawReport]:
    """Set-lifted identities, definedness of the operators, and the four
    elementary properties of ⊙ and → on orthomodular posets."""
    P = s.poset
    R = s.operators
    report = classify(s)
    cond_a, cond_b = report.cond_A.ok, report.cond_B.ok
    involution = report.has_involution.ok
    subsets = small_subsets(R, width)
    out = []

    def set_identity_a(R, a, B):
        # B = a ∨ (B ∧ a′)
        inner = meet_with(P, B, (s.c(a),))
        return inner is not None and join_with(P, (a,), inner) == B

    def set_identity_b(R, A, b):
        # A = b ∧ (A ∨ b′)
        inner = join_with(P, A, (s.c(b),))
        return inner is not None and meet_with(P, (b,), inner) == A

    def inst_a(R):
        for a in P.elements:
            for B in subsets:
                if P.set_leq((a,), B):
                    yield (a, B)

    def inst_b(R):
        for A in subsets:
            for b in P.elements:
                if P.set_leq(A, (b,)):
                    yield (A, b)

    if cond_a:
        out.append(check(Law("set_identity_join", set_identity_a, inst_a,
                             "a ≤ B implies B = a ∨ (B ∧ a′)"), R))
    else:
        out.append(_inapplicable("set_identity_join", "condition (A) fails"))
    if cond_b:
        out.append(check(Law("set_identity_meet", set_identity_b, inst_b,
                             "A ≤ b implies A = b ∧ (A ∨ b′)"), R))
    else:
        out.append(_inapplicable("set_identity_meet", "condition (B) fails"))

    defined = lambda kind: Law(f"{kind}_defined", lambda R, x, y: _total(R, kind, x, y), _pairs,
                               f"{kind} has a value in every cell")
    if cond_a and involution:
        out.append(check(defined("odot"), R))
    else:
        out.append(_inapplicable("odot_defined", "needs condition (A) and an involution"))
    if cond_b:
        out.append(check(defined("arrow"), R))
    else:
        out.append(_inapplicable("arrow_defined", "condition (B) fails"))

    elementary = [
        Law("min_upper_odot",
            lambda R, a, b: lift_mul(R, P.min_of(P.upper_bounds((a, b))), a) == (a,),
            _pairs, "Min U(a,b) ⊙ a = a"),
        Law("arrow_of_leq",
            lambda R, a, b: not P.leq(a, b) or imp(R, a, b) == (P.top,),
            _pairs, "a ≤ b implies a→b = 1"),
        Law("top_arrow", lambda R, a: imp(R, P.top, a) == (a,), _elems, "1→a = a"),
        Law("arrow_monotone",
            lambda R, a, b, c: not P.leq(a, b) or R.sqsubseteq(imp(R, c, a), imp(R, c, b)),
            _triples, "a ≤ b implies c→a ⊑ c→b"),
    ]
    orthomodular = report.is_orthomodular.ok
    for law in elementary:
        out.append(check(law, R) if orthomodular else _inapplicable(law.id, "not orthomodular"))
    return out


# -- reconstruction and round trips --------------------------------------------

def reconstruct_complementation(R) -> tuple:
    """The map x ↦ x→0, which must be single-valued everywhere."""
    R = _as_operators(R)
    zero = R.poset.bottom
    out = []
    for x in R.poset.elements:
        v = R.imp(x, zero)
        if isinstance(v, Undefined) or len(v) != 1:
            raise NotSingletonError(x, v)
        out.append(v[0])
    return tuple(out)


def structure_from_operators(R: OperatorStructure) -> Structure:
    return Structure(R.poset, reconstruct_complementation(R), R.name)


def roundtrip_P(s: Structure) -> LawReport:
    """Build the operators from ``s`` and recover ′ as x→0."""
    try:
        derived = reconstruct_complementation(s.operators)
    except NotSingletonError as e:
        return LawReport("roundtrip_P", FAIL, (e.x,), e.x + 1, str(e))
    for x in s.poset.elements:
        if derived[x] != s.c(x):
            return LawReport("roundtrip_P", FAIL, (x,), x + 1, "x→0 differs from x′")
    return LawReport("roundtrip_P", PASS, None, s.n, "x→0 = x′ everywhere")


def roundtrip_R_condition(R) -> LawReport:
    """The two identities under which rebuilding the operators from x→0 is the identity.

        Min U(x, y→0) ∧ y = x⊙y      and      (x→0) ∨ Max L(x,y) = x→y

    Cells where an operator value is undefined are skipped.
    """
    R = _as_operators(R)
    P = R.poset
    zero = P.bottom

    def both(R, x, y):
        neg_y = imp(R, y, zero)
        odot_cell = R.mul(x, y)
        lhs = meet_with(P, P.min_of(P.upper_bounds((x, *neg_y))), (y,))
        if not isinstance(odot_cell, Undefined) and lhs != odot_cell:
            return False
        arrow_cell = R.imp(x, y)
        rhs = join_with(P, imp(R, x, zero), P.max_of(P.lower_bounds((x, y))))
        if not isinstance(arrow_cell, Undefined) and rhs != arrow_cell:
            return False
        return True

    rep = check(Law("roundtrip_R_condition", both, _pairs,
                    "Min U(x,y→0)∧y = x⊙y and (x→0)∨Max L(x,y) = x→y"), R)
    if rep.status == INAPPLICABLE:
        # only undefined cells were skipped; every defined cell agreed
        return LawReport(rep.law, PASS, None, rep.checked, "defined cells only", rep.undefined_cell)
    return rep


def derive_structure_theorems(R) -> list[LawReport]:
    """Run the two converse constructions on an operator structure.

    With divisibility, double negation and contraposition the recovered
    poset must be orthomodular; without contraposition it must be dually
    weakly orthomodular with an involutive complementation.
    """
    R = _as_operators(R)
    axioms = [check(law, R) for law in
              (OPERATORS_TOTAL, ADJOINT_FORWARD, ADJOINT_BACKWARD, UNIT, DEF_V, DEF_VI)]
    divisible = check(DIVISIBLE, R)
    dn = check(DOUBLE_NEGATION, R)
    contra = check(CONTRAPOSITION, R)
    base_ok = all(r.passed for r in axioms) and divisible.passed and dn.passed
    base_missing = [r.law for r in (*axioms, divisible, dn) if not r.passed]

    out = []
    if base_ok and contra.passed:
        s = structure_from_operators(R)
        rep = classify(s)
        ok = rep.is_orthomodular.ok
        out.append(LawReport("converse_orthomodular", PASS if ok else FAIL,
                             None if ok else rep.is_orthomodular.witness, s.n,
                             "recovered poset is orthomodular"))
    else:
        missing = base_missing + ([] if contra.passed else ["contraposition"])
        out.append(_inapplicable("converse_orthomodular", "hypotheses fail: " + ", ".join(missing)))
    if base_ok:
        s = structure_from_operators(R)
        rep = classify(s)
        ok = rep.is_dually_weakly_orthomodular.ok and rep.has_involution.ok
        wit = rep.is_dually_weakly_orthomodular.witness or rep.has_involution.witness
        out.append(LawReport("converse_dually_weak", PASS if ok else FAIL,
                             None if ok else wit, s.n,
                             "recovered poset is dually weakly orthomodular with x″ = x"))
    else:
        out.append(_inapplicable("converse_dually_weak", "hypotheses fail: " + ", ".join(base_missing)))
    return out


# -- theorem bundles -----------------------------------------------------------

@dataclass(frozen=True)
class Bundle:
    """Conclusions of one theorem evaluated on one structure."""

    theorem: str
    hypotheses: dict
    reports: list = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def failures(self) -> list[LawReport]:
        return [r for r in self.reports if not r.passed]

    def report(self, law_id: str) -> LawReport:
        return next(r for r in self.reports if r.law == law_id)


def _bundle(s: Structure, theorem: str, hypotheses: dict, laws) -> Bundle:
    R = s.operators
    reports = [check(law, R) for law in laws] + [check_negation(s)]
    return Bundle(theorem, hypotheses, reports)


def theorem1_bundle(s: Structure) -> Bundle:
    """Orthomodular posets: the full residuated structure with all four extra laws."""
    return _bundle(s, "orthomodular", {"orthomodular": classify(s).is_orthomodular.ok}, (
        OPERATORS_TOTAL, ADJOINT_FORWARD, ADJOINT_BACKWARD, UNIT, DEF_V, DEF_VI,
        IDEMPOTENT, DIVISIBLE, DOUBLE_NEGATION, CONTRAPOSITION,
    ))


def theorem4a_bundle(s: Structure) -> Bundle:
    """Weakly orthomodular posets: adjointness only in the forward direction."""
    rep = classify(s)
    return _bundle(s, "weakly_orthomodular", {
        "weakly_orthomodular": rep.is_weakly_orthomodular.ok,
        "involution": rep.has_involution.ok,
        "arrow_well_defined": s.operators.arrow.well_defined,
    }, (OPERATORS_TOTAL, ADJOINT_FORWARD, UNIT, DEF_V, DEF_VI, IDEMPOTENT,
        DOUBLE_NEGATION, UNIT_JOIN))


def theorem4b_bundle(s: Structure) -> Bundle:
    """Dually weakly orthomodular posets: adjointness only backward, plus divisibility."""
    rep = classify(s)
    return _bundle(s, "dually_weakly_orthomodular", {
        "dually_weakly_orthomodular": rep.is_dually_weakly_orthomodular.ok,
        "involution": rep.has_involution.ok,
        "odot_well_defined": s.operators.odot.well_defined,
    }, (OPERATORS_TOTAL, ADJOINT_BACKWARD, UNIT, DEF_V, DEF_VI, IDEMPOTENT,
        DIVISIBLE, DOUBLE_NEGATION))


def both_weak_bundle(s: Structure) -> Bundle:
    """Weakly and dually weakly orthomodular with an involution: both directions, no contraposition."""
    rep = classify(s)
    return _bundle(s, "both_weak", {
        "weakly_orthomodular": rep.is_weakly_orthomodular.ok,
        "dually_weakly_orthomodular": rep.is_dually_weakly_orthomodular.ok,
        "involution": rep.has_involution.ok,
    }, (OPERATORS_TOTAL, ADJOINT_FORWARD, ADJOINT_BACKWARD, UNIT, DEF_V, DEF_VI,
        IDEMPOTENT, DIVISIBLE, DOUBLE_NEGATION))


def residuation_suite(s: Structure) -> list[LawReport]:
    R = s.operators
    return [check(law, R) for law in RESIDUATION_LAWS] + [check_negation(s)]


def roundtrip_suite(s: Structure) -> list[LawReport]:
    return [roundtrip_P(s), roundtrip_R_condition(s.operators), *derive_structure_theorems(s.operators)]


SUITES = {
    "residuation": residuation_suite,
    "lemmas": check_lemma_suite,
    "roundtrip": roundtrip_suite,
}


def run_suites(s: Structure, suite: str = "all") -> list[LawReport]:
    if suite == "all":
        return [r for name in SUITES for r in SUITES[name](s)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return SUITES[suite](s)
