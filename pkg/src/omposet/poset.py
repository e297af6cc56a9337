"""Finite bounded posets with partial meets and joins.

Elements are integer indices ``0..n-1``; labels are only for display and
parsing. Set-valued results are canonical tuples (sorted, duplicate free),
so two element sets are equal exactly when their tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

ESet = tuple  # canonical tuple[int, ...]


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    pass


class NotBoundedError(PosetError):
    pass


class DuplicateLabelError(PosetError):
    pass


class UnknownLabelError(PosetError, KeyError):
    pass


class EmptySetError(ValueError):
    pass


@dataclass(frozen=True)
class Undefined:
    """Marker for a set-valued result where some elementwise meet/join is missing.

    ``op`` is ``"meet"`` or ``"join"`` and ``left``/``right`` are the two
    arguments of the first partial operation that failed.
    """

    op: str
    left: int
    right: int

    def __str__(self):
        return f"UNDEF({self.op} {self.left},{self.right})"


def eset(elements: Iterable[int]) -> ESet:
    """Canonical form of a non-empty element set."""
    out = tuple(sorted(set(elements)))
    if not out:
        raise EmptySetError("element set must be non-empty")
    return out


def closure(n: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure of ``pairs`` as an ``n x n`` bool matrix."""
    rel = np.eye(n, dtype=bool)
    for a, b in pairs:
        rel[a, b] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return rel


class Poset:
    """A finite bounded poset.

    ``order[a, b]`` is true iff ``a <= b``. Instances are immutable; derived
    tables (meets, joins, up/down sets) are computed lazily and cached.
    """

    def __init__(self, labels: Sequence[str], order: np.ndarray):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            seen = set()
            dup = next(l for l in labels if l in seen or seen.add(l))
            raise DuplicateLabelError(f"duplicate label {dup!r}")
        order = np.array(order, dtype=bool)
        n = len(labels)
        if order.shape != (n, n):
            raise PosetError(f"order matrix must be {n}x{n}, got {order.shape}")
        if n == 0:
            raise NotBoundedError("empty poset has no bounds")
        if not order.diagonal().all():
            raise PosetError("order is not reflexive")
        both = order & order.T
        np.fill_diagonal(both, False)
        if both.any():
            a, b = map(int, np.argwhere(both)[0])
            raise CycleError(f"{labels[a]} <= {labels[b]} <= {labels[a]}")
        if (np.matmul(order, order) & ~order).any():
            raise PosetError("order is not transitive")
        bottoms = np.flatnonzero(order.all(axis=1))
        tops = np.flatnonzero(order.all(axis=0))
        if len(bottoms) != 1:
            raise NotBoundedError("no least element")
        if len(tops) != 1:
            raise NotBoundedError("no greatest element")
        order.setflags(write=False)
        self.labels = labels
        self.order = order
        self.n = n
        self.bottom = int(bottoms[0])
        self.top = int(tops[0])
        self._index = {l: i for i, l in enumerate(labels)}

    def __repr__(self):
        return f"Poset(n={self.n}, labels={list(self.labels)!r})"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.order, other.order)

    def __hash__(self):
        return hash((self.labels, self.order.tobytes()))

    def __len__(self):
        return self.n

    @property
    def elements(self) -> range:
        return range(self.n)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def label(self, x) -> str:
        return self.labels[x]

    def fmt(self, s) -> str:
        """Render an element, an element set, or UNDEF for None and markers."""
        if s is None or isinstance(s, Undefined):
            return "UNDEF"
        if isinstance(s, (int, np.integer)):
            return self.labels[s]
        return "{" + ",".join(self.labels[x] for x in s) + "}"

    # -- order queries -----------------------------------------------------

    @cached_property
    def _up(self) -> list[frozenset]:
        return [frozenset(np.flatnonzero(self.order[x]).tolist()) for x in self.elements]

    @cached_property
    def _down(self) -> list[frozenset]:
        return [frozenset(np.flatnonzero(self.order[:, x]).tolist()) for x in self.elements]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.order[a, b])

    def up(self, x: int) -> frozenset:
        return self._up[x]

    def down(self, x: int) -> frozenset:
        return self._down[x]

    def lower_bounds(self, A: Iterable[int]) -> frozenset:
        """L(A): elements below every member of A (all of P for empty A)."""
        out = frozenset(self.elements)
        for a in A:
            out &= self._down[a]
        return out

    def upper_bounds(self, A: Iterable[int]) -> frozenset:
        out = frozenset(self.elements)
        for a in A:
            out &= self._up[a]
        return out

    def min_of(self, S: Iterable[int]) -> ESet:
        S = set(S)
        if not S:
            raise EmptySetError("Min of the empty set")
        return tuple(sorted(x for x in S if not any(y != x and self.order[y, x] for y in S)))

    def max_of(self, S: Iterable[int]) -> ESet:
        S = set(S)
        if not S:
            raise EmptySetError("Max of the empty set")
        return tuple(sorted(x for x in S if not any(y != x and self.order[x, y] for y in S)))

    # -- partial lattice operations ----------------------------------------

    @cached_property
    def _meet_table(self) -> list[list[Optional[int]]]:
        n = self.n
        tab: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = self.max_of(self._down[a] & self._down[b])
                tab[a][b] = tab[b][a] = m[0] if len(m) == 1 else None
        return tab

    @cached_property
    def _join_table(self) -> list[list[Optional[int]]]:
        n = self.n
        tab: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = self.min_of(self._up[a] & self._up[b])
                tab[a][b] = tab[b][a] = m[0] if len(m) == 1 else None
        return tab

    def meet(self, a: int, b: int) -> Optional[int]:
        """Greatest lower bound of a and b, or None when it does not exist."""
        return self._meet_table[a][b]

    def join(self, a: int, b: int) -> Optional[int]:
        """Least upper bound of a and b, or None when it does not exist."""
        return self._join_table[a][b]

    def is_lattice(self) -> bool:
        return all(v is not None for row in self._meet_table for v in row) and all(
            v is not None for row in self._join_table for v in row
        )

    # -- set-level order and lifted operations -----------------------------

    def set_leq(self, A: Iterable[int], B: Iterable[int]) -> bool:
        """A <= B: every member of A lies below every member of B."""
        B = tuple(B)
        return all(self.order[a, b] for a in A for b in B)

    def set_meet(self, S: Iterable[int], b: int):
        """{s ∧ b | s in S}, or an Undefined marker at the first missing meet."""
        out = set()
        for s in S:
            m = self._meet_table[s][b]
            if m is None:
                return Undefined("meet", s, b)
            out.add(m)
        return eset(out)

    def set_join(self, a: int, S: Iterable[int]):
        """{a ∨ s | s in S}, or an Undefined marker at the first missing join."""
        out = set()
        for s in S:
            j = self._join_table[a][s]
            if j is None:
                return Undefined("join", a, s)
            out.add(j)
        return eset(out)

    # -- shape -------------------------------------------------------------

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (a, b) with a covered by b, in index order."""
        out = []
        for a in self.elements:
            above = self._up[a] - {a}
            for b in sorted(above):
                if not any(self.order[c, b] for c in above if c != b):
                    out.append((a, b))
        return out

    def height(self) -> int:
        """Number of edges in a longest chain."""
        # elements sorted by down-set size form a linear extension
        depth = [0] * self.n
        for x in sorted(self.elements, key=lambda x: len(self._down[x])):
            below = self._down[x] - {x}
            depth[x] = 1 + max((depth[y] for y in below), default=-1)
        return max(depth)


def build_poset(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from labels and (lower, upper) cover pairs."""
    labels = tuple(labels)
    seen: set[str] = set()
    for l in labels:
        if l in seen:
            raise DuplicateLabelError(f"duplicate label {l!r}")
        seen.add(l)
    idx = {l: i for i, l in enumerate(labels)}
    pairs = []
    for lo, hi in covers:
        for l in (lo, hi):
            if l not in idx:
                raise UnknownLabelError(f"cover references unknown label {l!r}")
        if lo == hi:
            raise CycleError(f"cover {lo} < {hi} is a loop")
        pairs.append((idx[lo], idx[hi]))
    return Poset(labels, closure(len(labels), pairs))
