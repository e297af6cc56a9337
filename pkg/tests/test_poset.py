import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from omposet import (
    CycleError,
    DuplicateLabelError,
    EmptySetError,
    NotBoundedError,
    Poset,
    Undefined,
    UnknownLabelError,
    build_poset,
    eset,
)
from omposet import corpus
from oracles import BruteOrder, oracle_for


@pytest.fixture
def mo2():
    return corpus.fig2().structure.poset


@pytest.fixture
def p1():
    return corpus.fig1().structure.poset


def ids(P, *labels):
    return eset(P.index(l) for l in labels)


def test_build_fig2(mo2):
    P = build_poset(["0", "a", "b", "b'", "a'", "1"],
                    [("0", x) for x in ["a", "b", "b'", "a'"]] + [(x, "1") for x in ["a", "b", "b'", "a'"]])
    assert P == mo2
    assert P.n == 6
    assert P.label(P.bottom) == "0" and P.label(P.top) == "1"


def test_build_two_chain():
    P = build_poset(["0", "1"], [("0", "1")])
    assert (P.bottom, P.top) == (0, 1)
    assert P.leq(0, 1) and not P.leq(1, 0)


def test_build_rejects_cycle():
    with pytest.raises(CycleError):
        build_poset(["0", "a", "b", "1"], [("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")])


def test_build_rejects_self_loop():
    with pytest.raises(CycleError):
        build_poset(["0", "1"], [("0", "0"), ("0", "1")])


def test_build_rejects_unbounded():
    with pytest.raises(NotBoundedError):
        build_poset(["a", "b", "1"], [("a", "1"), ("b", "1")])
    with pytest.raises(NotBoundedError):
        build_poset(["0", "a", "b"], [("0", "a"), ("0", "b")])


def test_build_rejects_duplicates_and_unknowns():
    with pytest.raises(DuplicateLabelError):
        build_poset(["0", "a", "a", "1"], [])
    with pytest.raises(UnknownLabelError):
        build_poset(["0", "1"], [("0", "z")])


def test_poset_validates_raw_matrix():
    with pytest.raises(ValueError, match="transitive"):
        Poset(["0", "a", "1"], np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool))


def test_leq(mo2):
    a, b = mo2.index("a"), mo2.index("b")
    assert mo2.leq(mo2.bottom, a)
    assert not mo2.leq(a, b)
    assert all(mo2.leq(x, x) for x in mo2.elements)


def test_lower_upper_bounds(mo2, p1):
    assert mo2.lower_bounds(ids(mo2, "a", "b")) == {mo2.bottom}
    assert mo2.upper_bounds([mo2.bottom]) == set(mo2.elements)
    assert p1.upper_bounds(ids(p1, "a", "b")) == set(ids(p1, "i'", "f'", "1"))


def test_min_max(mo2, p1):
    assert p1.min_of(p1.upper_bounds(ids(p1, "a", "b"))) == ids(p1, "i'", "f'")
    assert mo2.max_of(mo2.lower_bounds(ids(mo2, "a", "b"))) == (mo2.bottom,)
    assert p1.min_of([5]) == (5,)
    with pytest.raises(EmptySetError):
        p1.min_of([])
    with pytest.raises(EmptySetError):
        p1.max_of(set())


def test_meet_join(mo2, p1):
    assert p1.join(p1.index("a"), p1.index("b")) is None
    assert mo2.meet(mo2.index("a"), mo2.index("b")) == mo2.bottom
    assert mo2.join(mo2.index("a"), mo2.index("b")) == mo2.top
    for P in (mo2, p1):
        for x in P.elements:
            assert P.meet(x, P.top) == x
            assert P.join(x, P.bottom) == x


def test_set_leq(mo2):
    assert mo2.set_leq([mo2.bottom], ids(mo2, "a", "b'"))
    assert mo2.set_leq(ids(mo2, "a", "b"), [mo2.top])
    assert not mo2.set_leq(ids(mo2, "a"), ids(mo2, "b", "1"))


def test_set_meet_join(mo2, p1):
    b = mo2.index("b")
    assert mo2.set_meet([mo2.top], b) == (b,)
    a = p1.index("a")
    assert p1.set_meet(ids(p1, "i'", "f'"), a) == (a,)
    assert mo2.set_join(mo2.index("a"), ids(mo2, "0", "b")) == ids(mo2, "a", "1")


def test_set_join_reports_first_undefined(p1):
    a, b, c = p1.index("a"), p1.index("b"), p1.index("c")
    r = p1.set_join(a, [p1.bottom, b, c])
    assert r == Undefined("join", a, b)


def test_eset_canonical():
    assert eset([3, 1, 3, 2]) == (1, 2, 3)
    with pytest.raises(EmptySetError):
        eset([])


def test_height(mo2, p1):
    assert corpus.boolean_cube(1).structure.poset.height() == 1
    assert mo2.height() == 2
    assert p1.height() == 3


def test_covers_are_hasse_edges(mo2):
    assert len(mo2.covers()) == 8
    assert (mo2.bottom, mo2.top) not in mo2.covers()


def test_equality_is_label_exact(mo2):
    relabeled = Poset(["z", *mo2.labels[1:]], mo2.order)
    assert relabeled != mo2
    assert Poset(mo2.labels, mo2.order.copy()) == mo2
    assert hash(Poset(mo2.labels, mo2.order.copy())) == hash(mo2)


# -- properties over the whole corpus -----------------------------------------

ENTRIES = corpus.all_entries()


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_galois_connection(entry):
    P = entry.structure.poset
    small = [s for k in (1, 2) for s in itertools.combinations(P.elements, k)]
    for A in small:
        L, U = P.lower_bounds(A), P.upper_bounds(A)
        assert P.lower_bounds(P.upper_bounds(L)) == L
        assert P.upper_bounds(P.lower_bounds(U)) == U
        for B in small:
            if set(A) <= set(B):
                assert P.upper_bounds(B) <= U
                assert P.lower_bounds(B) <= L


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_meet_join_characterisation(entry):
    P = entry.structure.poset
    for a, b in itertools.product(P.elements, repeat=2):
        lows = P.lower_bounds((a, b))
        g = P.meet(a, b)
        greatest = [x for x in lows if lows <= P.lower_bounds((x,))]
        assert (g is not None) == bool(greatest)
        if g is not None:
            assert [g] == greatest
        j = P.join(a, b)
        if j is not None:
            assert P.min_of(P.upper_bounds((a, b))) == (j,)


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_height_matches_path_search(entry):
    assert entry.structure.poset.height() == oracle_for(entry).longest_chain()


# -- random posets ------------------------------------------------------------

@st.composite
def bounded_posets(draw, max_middle=7):
    """Random bounded posets: a DAG on the middle elements plus 0 and 1."""
    k = draw(st.integers(0, max_middle))
    mids = [f"m{i}" for i in range(k)]
    edges = [(mids[i], mids[j]) for i in range(k) for j in range(i + 1, k) if draw(st.booleans())]
    covers = [("0", m) for m in mids] + [(m, "1") for m in mids] + edges
    if not mids:
        covers = [("0", "1")]
    return ["0", *mids, "1"], covers


@settings(max_examples=60, deadline=None)
@given(bounded_posets())
def test_random_posets_agree_with_brute_force(data):
    labels, covers = data
    P = build_poset(labels, covers)
    o = BruteOrder(labels, covers)
    for a, b in itertools.product(labels, repeat=2):
        i, j = P.index(a), P.index(b)
        assert P.leq(i, j) == o.leq(a, b)
        m, jn = P.meet(i, j), P.join(i, j)
        assert (None if m is None else P.label(m)) == o.meet(a, b)
        assert (None if jn is None else P.label(jn)) == o.join(a, b)
    assert P.height() == o.longest_chain()
