"""Orthomodular posets and their set-valued residuation operators."""

from .poset import (
    CycleError,
    DuplicateLabelError,
    EmptySetError,
    ESet,
    NotBoundedError,
    Poset,
    PosetError,
    Undefined,
    UnknownLabelError,
    build_poset,
    eset,
)
from .structure import Structure, TooSmallError, horizontal_sum, make_structure
from .ortho import Check, ClassReport, classify
from .residuation import (
    OperatorStructure,
    OpTable,
    arrow,
    build_table,
    lift_arrow,
    lift_odot,
    odot,
    residuated,
    sqsubseteq,
)

__all__ = [
    "Check", "ClassReport", "CycleError", "DuplicateLabelError", "ESet", "EmptySetError",
    "NotBoundedError", "OpTable", "OperatorStructure", "Poset", "PosetError", "Structure",
    "TooSmallError", "Undefined", "UnknownLabelError", "arrow", "build_poset", "build_table",
    "classify", "eset", "horizontal_sum", "lift_arrow", "lift_odot", "make_structure", "odot",
    "residuated", "sqsubseteq",
]
