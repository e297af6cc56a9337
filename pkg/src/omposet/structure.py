"""Bounded posets equipped with a unary operation, and horizontal sums."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .poset import Poset, PosetError, build_poset


class TooSmallError(PosetError):
    pass


@dataclass(frozen=True, eq=False)
class Structure:
    """A bounded poset with a total unary map ``comp`` (x ↦ x′).

    The map is not assumed to be antitone, an involution or a
    complementation; those properties are checked by :mod:`omposet.ortho`.
    """

    poset: Poset
    comp: tuple
    name: str = field(default="")

    def __post_init__(self):
        comp = tuple(int(v) for v in self.comp)
        if len(comp) != self.poset.n or any(not 0 <= v < self.poset.n for v in comp):
            raise PosetError("complementation must map every element into the poset")
        object.__setattr__(self, "comp", comp)

    def __eq__(self, other):
        if not isinstance(other, Structure):
            return NotImplemented
        return self.poset == other.poset and self.comp == other.comp

    def __hash__(self):
        return hash((self.poset, self.comp))

    def __repr__(self):
        return f"Structure(name={self.name!r}, n={self.poset.n})"

    @property
    def n(self) -> int:
        return self.poset.n

    def c(self, x: int) -> int:
        return self.comp[x]

    def renamed(self, name: str) -> "Structure":
        return Structure(self.poset, self.comp, name)

    @cached_property
    def operators(self):
        """The pair of operator tables built from this structure (cached)."""
        from .residuation import residuated

        return residuated(self)


def make_structure(
    labels: Sequence[str],
    covers,
    comp: Mapping[str, str],
    name: str = "",
) -> Structure:
    """Build a :class:`Structure` from labels, cover pairs and a label map."""
    P = build_poset(labels, covers)
    missing = [l for l in P.labels if l not in comp]
    if missing:
        raise PosetError(f"incomplete complement map, missing {missing[0]!r}")
    return Structure(P, tuple(P.index(comp[l]) for l in P.labels), name)


def horizontal_sum(parts: Sequence[Structure], name: str = "") -> Structure:
    """Glue bounded posets along their bottoms and tops.

    The middle elements of the summands stay pairwise incomparable across
    summands. If middle labels clash, every middle label is prefixed with
    its summand's name (made unique by a numeric suffix if names repeat).
    """
    if not parts:
        raise ValueError("horizontal sum needs at least one summand")
    for s in parts:
        if s.n < 2:
            raise TooSmallError(f"summand {s.name or '?'} has fewer than 2 elements")
    if len(parts) == 1:
        return parts[0] if not name else parts[0].renamed(name)

    middles = [[x for x in s.poset.elements if x not in (s.poset.bottom, s.poset.top)] for s in parts]
    all_labels = [s.poset.labels[x] for s, mid in zip(parts, middles) for x in mid]
    first = parts[0].poset
    bounds = {first.labels[first.bottom], first.labels[first.top]}
    clash = len(set(all_labels)) != len(all_labels) or bool(bounds & set(all_labels))
    prefixes = [""] * len(parts)
    if clash:
        counts = Counter(s.name or "S" for s in parts)
        seen: Counter = Counter()
        for i, s in enumerate(parts):
            base = s.name or "S"
            seen[base] += 1
            prefixes[i] = f"{base}_{seen[base]}." if counts[base] > 1 else f"{base}."

    # new index layout: bottom, middles of each summand in order, top
    labels = [first.labels[first.bottom]]
    where: list[dict[int, int]] = []
    for s, mid, pre in zip(parts, middles, prefixes):
        m = {s.poset.bottom: 0}
        for x in mid:
            m[x] = len(labels)
            labels.append(pre + s.poset.labels[x])
        where.append(m)
    top = len(labels)
    labels.append(first.labels[first.top])
    for s, m in zip(parts, where):
        m[s.poset.top] = top

    n = len(labels)
    order = np.zeros((n, n), dtype=bool)
    order[0, :] = True
    order[:, top] = True
    comp = [0] * n
    comp[0], comp[top] = top, 0
    for s, m in zip(parts, where):
        for x, i in m.items():
            for y, j in m.items():
                if s.poset.order[x, y]:
                    order[i, j] = True
        for x, i in m.items():
            if i not in (0, top):
                comp[i] = m[s.comp[x]]
    return Structure(Poset(labels, order), tuple(comp), name)
