"""Built-in structures: the five figures, Boolean cubes and horizontal sums.

Cover relations were read off the Hasse diagrams. Collinear points along
one drawn segment are read as a chain (e.g. ``a < e < 1`` in Fig. 3).
Each entry carries the class flags claimed for it, and
:func:`self_check` compares those against :func:`omposet.ortho.classify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .ortho import classify
from .structure import Structure, horizontal_sum, make_structure


@dataclass(frozen=True)
class NamedStructure:
    name: str
    structure: Structure
    expected: dict = field(default_factory=dict)
    note: str = ""
    covers: tuple = ()  # cover pairs (lower, upper) by label, as entered

    def mismatches(self) -> dict[str, tuple[bool, bool]]:
        """Expected flags whose computed value differs, as (expected, got)."""
        got = classify(self.structure).flags()
        return {k: (v, got[k]) for k, v in self.expected.items() if got[k] != v}


class CorpusMismatch(AssertionError):
    pass


def self_check(entry: NamedStructure) -> NamedStructure:
    bad = entry.mismatches()
    if bad:
        raise CorpusMismatch(f"{entry.name}: expected vs computed flags differ: {bad}")
    return entry


def _pairs(spec: str):
    """Parse ``"0<a,b a<e"`` into cover pairs; each group is ``lower<uppers``."""
    out = []
    for group in spec.split():
        lo, his = group.split("<")
        for lo_ in lo.split(","):
            for hi in his.split(","):
                out.append((lo_, hi))
    return out


def _table(labels, images) -> dict:
    return dict(zip(labels, images))


@lru_cache(maxsize=None)
def fig1() -> NamedStructure:
    atoms = "abcdefghi"
    below = {
        "a": "ihfe", "b": "igfd", "c": "hged", "d": "ihcb", "e": "igca",
        "f": "hgba", "g": "fecb", "h": "fdca", "i": "edba",
    }
    labels = ["0", *atoms, *(x + "'" for x in reversed(atoms)), "1"]
    covers = [("0", x) for x in atoms] + [(x + "'", "1") for x in atoms]
    covers += [(x, y + "'") for x in atoms for y in below[x]]
    comp = {"0": "1", "1": "0"}
    for x in atoms:
        comp[x], comp[x + "'"] = x + "'", x
    s = make_structure(labels, covers, comp, "fig1")
    return self_check(NamedStructure(
        "fig1", s,
        {"is_orthomodular": True, "is_lattice": False},
        "smallest orthomodular poset that is not a lattice", tuple(covers),
    ))


@lru_cache(maxsize=None)
def fig2() -> NamedStructure:
    labels = ["0", "a", "b", "b'", "a'", "1"]
    covers = _pairs("0<a,b,b',a' a,b,b',a'<1")
    comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    s = make_structure(labels, covers, comp, "fig2")
    return self_check(NamedStructure(
        "fig2", s,
        {"is_orthomodular": True, "is_lattice": True},
        "MO2, smallest orthomodular lattice that is not Boolean", tuple(covers),
    ))


@lru_cache(maxsize=None)
def fig3() -> NamedStructure:
    labels = list("0abcdefg1")
    covers = _pairs("0<a,b,c,d a<e b<e,f c<e,g d<f,g e,f,g<1")
    comp = _table(labels, "1ggfedcb0")
    s = make_structure(labels, covers, comp, "fig3")
    return self_check(NamedStructure(
        "fig3", s,
        {"is_weakly_orthomodular": True, "is_dually_weakly_orthomodular": False,
         "is_orthomodular": False, "is_lattice": True},
        "weakly orthomodular lattice W, not dually weakly orthomodular", tuple(covers),
    ))


@lru_cache(maxsize=None)
def fig4() -> NamedStructure:
    labels = list("0abcdefg1")
    covers = _pairs("0<a,b,c a<d,e b<d,f c<e,f,g d,e,f,g<1")
    comp = _table(labels, "1fedcbaa0")
    s = make_structure(labels, covers, comp, "fig4")
    return self_check(NamedStructure(
        "fig4", s,
        {"is_dually_weakly_orthomodular": True, "is_weakly_orthomodular": False,
         "is_orthomodular": False, "is_lattice": True},
        "dually weakly orthomodular lattice D, not weakly orthomodular", tuple(covers),
    ))


@lru_cache(maxsize=None)
def fig5() -> NamedStructure:
    labels = list("0abcdefgh1")
    covers = _pairs("0<a,b,c,d a<e,f b<e,g c<e,h d<f,g,h e,f,g,h<1")
    comp = _table(labels, "1ghfedcab0")
    s = make_structure(labels, covers, comp, "fig5")
    return self_check(NamedStructure(
        "fig5", s,
        {"is_weakly_orthomodular": True, "is_dually_weakly_orthomodular": True,
         "has_involution": True, "is_antitone": False, "is_orthomodular": False,
         "is_lattice": True},
        "lattice L with a non-antitone involutive complementation", tuple(covers),
    ))


@lru_cache(maxsize=None)
def boolean_cube(k: int) -> NamedStructure:
    """The Boolean algebra 2^k; elements are k-bit strings, complement flips bits."""
    if not 1 <= k <= 5:
        raise ValueError(f"boolean_cube needs 1 <= k <= 5, got {k}")
    n = 1 << k
    labels = [format(i, f"0{k}b") for i in range(n)]
    covers = [(labels[i], labels[i | 1 << b]) for i in range(n) for b in range(k) if not i >> b & 1]
    comp = {labels[i]: labels[(n - 1) ^ i] for i in range(n)}
    s = make_structure(labels, covers, comp, f"cube{k}")
    return self_check(NamedStructure(
        f"cube{k}", s, {"is_orthomodular": True, "is_lattice": True}, f"Boolean algebra 2^{k}",
        tuple(covers),
    ))


def _hsum_entry(parts: list[NamedStructure], expected: dict, note: str) -> NamedStructure:
    name = "+".join(p.name for p in parts)
    s = horizontal_sum([p.structure for p in parts], name)
    # summand middles occupy consecutive indices between the shared bounds
    rename, pos = [], 1
    for p in parts:
        P = p.structure.poset
        m = {P.label(P.bottom): s.poset.label(s.poset.bottom), P.label(P.top): s.poset.label(s.poset.top)}
        for x in P.elements:
            if x not in (P.bottom, P.top):
                m[P.label(x)] = s.poset.label(pos)
                pos += 1
        rename.append(m)
    covers = tuple((m[a], m[b]) for p, m in zip(parts, rename) for a, b in p.covers)
    return self_check(NamedStructure(name, s, expected, note, covers))


@lru_cache(maxsize=None)
def hsum_fig2_fig2() -> NamedStructure:
    return _hsum_entry([fig2(), fig2()], {"is_orthomodular": True, "is_lattice": True},
                       "two MO2 blocks sharing their bounds")


@lru_cache(maxsize=None)
def paper_hsums() -> tuple[NamedStructure, ...]:
    return (
        _hsum_entry([fig3(), fig1()],
                    {"is_weakly_orthomodular": True, "is_lattice": False,
                     "is_dually_weakly_orthomodular": False},
                    "weakly orthomodular, neither a lattice nor dually weakly orthomodular"),
        _hsum_entry([fig4(), fig1()],
                    {"is_dually_weakly_orthomodular": True, "is_lattice": False,
                     "is_weakly_orthomodular": False},
                    "dually weakly orthomodular, neither a lattice nor weakly orthomodular"),
        _hsum_entry([fig5(), fig1()],
                    {"is_weakly_orthomodular": True, "is_dually_weakly_orthomodular": True,
                     "is_lattice": False, "is_orthomodular": False},
                    "weakly and dually weakly orthomodular, neither a lattice nor orthomodular"),
    )


def two_chain() -> NamedStructure:
    return boolean_cube(1)


def all_entries() -> list[NamedStructure]:
    return [
        fig1(), fig2(), fig3(), fig4(), fig5(),
        *(boolean_cube(k) for k in range(1, 5)),
        hsum_fig2_fig2(), *paper_hsums(),
    ]


def get(name: str) -> NamedStructure:
    for e in all_entries():
        if e.name == name:
            return e
    raise KeyError(f"no built-in structure named {name!r}")
