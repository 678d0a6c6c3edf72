import pytest

from schreierlab import IntSet, InvalidInputError, SizeLimitError
from schreierlab.intset import EMPTY, as_intset, successive


def test_from_iterable_compresses_runs():
    s = IntSet.from_iterable([5, 3, 4, 9, 1])
    assert s.intervals == ((1, 1), (3, 5), (9, 9))
    assert s.size == 5
    assert s.min == 1 and s.max == 9


def test_constructor_merges_overlaps_and_adjacent():
    s = IntSet([(1, 3), (4, 6), (10, 12), (11, 15)])
    assert s.intervals == ((1, 6), (10, 15))


def test_empty_set():
    assert EMPTY.size == 0
    assert EMPTY.is_empty
    assert not EMPTY
    with pytest.raises(InvalidInputError):
        _ = EMPTY.min


def test_membership_and_element_at():
    s = IntSet([(3, 5), (9, 9), (20, 22)])
    assert 4 in s and 9 in s and 22 in s
    assert 6 not in s and 1 not in s
    assert [s.element_at(i) for i in range(1, s.size + 1)] == [3, 4, 5, 9, 20, 21, 22]
    with pytest.raises(InvalidInputError):
        s.element_at(8)
    with pytest.raises(InvalidInputError):
        s.element_at(0)


def test_first_and_drop():
    s = IntSet([(3, 5), (9, 9), (20, 22)])
    assert s.first_k(4) == IntSet([(3, 5), (9, 9)])
    assert s.drop_first(4) == IntSet([(20, 22)])
    assert s.first_k(0) == EMPTY
    assert s.drop_first(0) == s


def test_select_ordinals():
    s = IntSet([(3, 5), (9, 9), (20, 22)])
    assert s.select_ordinals(IntSet.interval(2, 5)) == IntSet.from_iterable([4, 5, 9, 20])
    assert s.select_ordinals(EMPTY) == EMPTY
    with pytest.raises(InvalidInputError):
        s.select_ordinals(IntSet.interval(1, 8))


def test_select_ordinals_huge_set_stays_cheap():
    s = IntSet.interval(1, 2**50)
    picked = s.select_ordinals(IntSet.interval(2**49, 2**49 + 2))
    assert picked == IntSet.interval(2**49, 2**49 + 2)


def test_set_algebra():
    a = IntSet([(1, 5), (10, 12)])
    b = IntSet([(4, 10)])
    assert a.intersection(b) == IntSet([(4, 5), (10, 10)])
    assert a.union(b) == IntSet([(1, 12)])
    assert IntSet([(4, 5)]).issubset(a)
    assert not b.issubset(a)


def test_materialize_guard():
    s = IntSet.interval(1, 10**7)
    with pytest.raises(SizeLimitError):
        s.to_list()
    assert IntSet.interval(1, 4).to_list() == [1, 2, 3, 4]


def test_as_intset_and_successive():
    assert as_intset([2, 1]) == IntSet([(1, 2)])
    assert successive(IntSet.interval(1, 3), IntSet.interval(4, 4))
    assert not successive(IntSet.interval(1, 4), IntSet.interval(4, 5))


def test_invalid_intervals():
    with pytest.raises(InvalidInputError):
        IntSet([(5, 3)])
    with pytest.raises(InvalidInputError):
        IntSet.from_iterable([1.5])  # type: ignore[list-item]
