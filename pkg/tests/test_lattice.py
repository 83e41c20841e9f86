import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import lattice_pairs
from latticepoly.errors import (
    BoundsError,
    BudgetError,
    ElementError,
    InvalidSizeError,
    NotALatticeError,
    NotDistributiveError,
    OrderError,
)
from latticepoly.lattice import (
    build_boolean,
    build_chain,
    build_diamond,
    build_from_covers,
    build_from_tables,
    build_product,
    check_lattice_axioms,
    convex_hull,
    find_distributivity_violation,
    interval,
    is_convex,
    is_isomorphic,
    relabel,
)

PAIRS = lattice_pairs()
N5 = (["0", "a", "b", "c", "1"], [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])


@pytest.mark.parametrize("name", sorted(PAIRS))
def test_tables_match_order_oracle(name):
    L, ol = PAIRS[name]
    assert L.meet_table.tolist() == ol.meet
    assert L.join_table.tolist() == ol.join
    assert (L.bottom, L.top) == (ol.bottom, ol.top)
    for a in L.elements:
        for b in L.elements:
            assert L.leq(a, b) == ol.leq(a, b)


@pytest.mark.parametrize("name", sorted(PAIRS))
def test_axioms_and_distributivity(name):
    L, _ = PAIRS[name]
    check_lattice_axioms(L)
    assert find_distributivity_violation(L) is None


elements = st.sampled_from(sorted(PAIRS)).flatmap(
    lambda name: st.tuples(st.just(PAIRS[name][0]),
                           *[st.integers(0, PAIRS[name][0].size - 1)] * 3))


@settings(max_examples=300, deadline=None)
@given(elements)
def test_lattice_laws(sample):
    L, a, b, c = sample
    m, j = L.meet, L.join
    assert m(a, b) == m(b, a) and j(a, b) == j(b, a)
    assert m(a, m(b, c)) == m(m(a, b), c)
    assert j(a, m(a, b)) == a and m(a, j(a, b)) == a
    assert m(a, j(b, c)) == j(m(a, b), m(a, c))
    assert L.leq(a, b) == (m(a, b) == a)
    med = L.median3(a, b, c)
    assert med == m(m(j(a, b), j(b, c)), j(a, c))
    assert med == L.median3(c, a, b) == L.median_table[b, c, a]


def test_chain_examples():
    one = build_chain(1)
    assert one.size == 1 and one.bottom == one.top == 0
    two = build_chain(2)
    assert two.meet(0, 1) == 0 and two.join(0, 1) == 1
    four = build_chain(4, names=["0", "1/3", "2/3", "1"])
    assert four.names == ("0", "1/3", "2/3", "1") and four.is_chain()
    assert build_chain(4).leq(1, 2)
    with pytest.raises(InvalidSizeError):
        build_chain(0)
    with pytest.raises(BudgetError):
        build_chain(65)


def test_product_examples():
    c2 = build_chain(2)
    square = build_product(c2, c2)
    assert square.names == ("00", "01", "10", "11")
    assert is_isomorphic(square, build_diamond())
    six = build_product(build_chain(3, names=["0", "a", "1"]), c2)
    assert six.size == 6 and set(six.names) == {"00", "01", "a0", "a1", "10", "11"}
    assert six.leq(six.element("00"), six.element("a1"))
    assert not six.leq(six.element("a0"), six.element("01"))
    assert is_isomorphic(build_product(build_chain(1), build_diamond()), build_diamond())


def test_boolean_examples():
    assert build_boolean(0).size == 1
    assert is_isomorphic(build_boolean(1), build_chain(2))
    assert is_isomorphic(build_boolean(2), build_product(build_chain(2), build_chain(2)))
    assert build_boolean(3).size == 8
    with pytest.raises(BudgetError):
        build_boolean(7)


def test_from_covers():
    L = build_from_covers(["0", "a", "1"], [("0", "a"), ("a", "1")], "0", "1")
    assert L.is_chain() and L.size == 3
    D = build_from_covers(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
                          "0", "1", name="diamond")
    a, b = D.element("a"), D.element("b")
    assert D.join(a, b) == D.top and D.meet(a, b) == D.bottom


def test_pentagon_not_distributive():
    with pytest.raises(NotDistributiveError) as info:
        build_from_covers(*N5, "0", "1")
    assert len(info.value.triple) == 3
    assert "not distributive" in str(info.value)


def test_pentagon_witness_is_genuine():
    from oracles import OrderLattice

    names, covers = N5
    idx = {n: i for i, n in enumerate(names)}
    up = {(idx[a], idx[b]) for a, b in covers} | {(i, i) for i in range(5)}
    changed = True
    while changed:
        changed = False
        for (p, q) in list(up):
            for (r, s) in list(up):
                if q == r and (p, s) not in up:
                    up.add((p, s))
                    changed = True
    ol = OrderLattice(5, lambda a, b: (a, b) in up)
    with pytest.raises(NotDistributiveError) as info:
        build_from_covers(names, covers, "0", "1")
    a, b, c = (idx[n] for n in info.value.names)
    assert ol.meet[a][ol.join[b][c]] != ol.join[ol.meet[a][b]][ol.meet[a][c]]


def test_cover_errors():
    with pytest.raises(BoundsError):
        build_from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")], "0", "a")
    with pytest.raises(ElementError):
        build_from_covers(["0", "1"], [("0", "z")], "0", "1")
    with pytest.raises(NotALatticeError):
        # two maximal elements below a common top without a join in between
        build_from_covers(["0", "a", "b", "c", "d", "1"],
                          [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"),
                           ("b", "d"), ("c", "1"), ("d", "1")], "0", "1")


def test_from_tables_round_trip(diamond):
    names = list(diamond.names)
    meets = [(names[a], names[b], names[diamond.meet(a, b)]) for a in diamond.elements
             for b in diamond.elements]
    joins = [(names[a], names[b], names[diamond.join(a, b)]) for a in diamond.elements
             for b in diamond.elements]
    L = build_from_tables(names, meets, joins)
    assert np.array_equal(L.meet_table, diamond.meet_table)


def test_element_lookup(diamond):
    assert diamond.element("a") == 1
    assert diamond.element(2) == 2
    with pytest.raises(ElementError):
        diamond.element("z")
    with pytest.raises(ElementError):
        diamond.meet(0, 9)


def test_intervals_and_hulls(chain4, diamond):
    assert interval(chain4, 0, 3) == frozenset(range(4))
    with pytest.raises(OrderError):
        interval(chain4, 3, 0)
    assert convex_hull(chain4, {0, 3}) == frozenset(range(4))
    assert not is_convex(diamond, {0, 3})
    assert is_convex(diamond, {1})
    a, b = diamond.element("a"), diamond.element("b")
    assert convex_hull(diamond, {a, b}) == frozenset({a, b})


def test_median_examples(chain3, diamond):
    assert chain3.median3(0, 1, 2) == 1
    a, b = diamond.element("a"), diamond.element("b")
    assert diamond.median3(a, b, 0) == 0
    for r in diamond.elements:
        for x in diamond.elements:
            assert diamond.median3(r, x, r) == r


def test_covers_and_order(diamond):
    a, b = diamond.element("a"), diamond.element("b")
    assert set(diamond.covers) == {(0, a), (0, b), (a, 3), (b, 3)}
    order = diamond.topological_order
    assert order[0] == 0 and order[-1] == 3


def test_relabel(chain3):
    L = relabel(chain3, ["lo", "mid", "hi"], name="c")
    assert L.element("mid") == 1 and L.name == "c"
