import random
from itertools import chain, combinations

import pytest
from hypothesis import given, strategies as st

import schreierlab as sl
from schreierlab import IntSet
from schreierlab.schreier import _tau1_count_sorted


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


# -- predicates ---------------------------------------------------------------


def test_is_schreier_examples():
    assert sl.is_schreier([]) is True
    assert sl.is_schreier([1, 2]) is False
    assert sl.is_schreier([3, 5, 9]) is True
    assert sl.is_schreier([1]) is True
    assert sl.is_schreier([2, 3, 4]) is False


def test_is_schreier_rejects_nonpositive():
    with pytest.raises(sl.InvalidInputError):
        sl.is_schreier([0, 1])
    with pytest.raises(sl.InvalidInputError):
        sl.is_schreier([-3])


def test_is_maximal_examples():
    assert sl.is_maximal_schreier([1]) is True
    assert sl.is_maximal_schreier([3, 4, 5]) is True
    assert sl.is_maximal_schreier([3, 4]) is False
    assert sl.is_maximal_schreier([]) is False
    with pytest.raises(sl.InvalidInputError):
        sl.is_maximal_schreier([1, 2])  # not admissible


def test_is_spread_examples():
    assert sl.is_spread([1, 2], [2, 5]) is True
    assert sl.is_spread([2, 5], [2, 4]) is False
    assert sl.is_spread([], []) is True
    with pytest.raises(sl.InvalidInputError):
        sl.is_spread([1], [2, 3])


@given(
    st.integers(min_value=1, max_value=8).flatmap(
        lambda m: st.tuples(
            st.just(m),
            st.lists(st.integers(min_value=1, max_value=6), min_size=0, max_size=m - 1)
            if m > 1
            else st.just([]),
        )
    ),
    st.lists(st.integers(min_value=0, max_value=4), min_size=0, max_size=10),
)
def test_spread_preserves_admissibility(min_and_gaps, bumps):
    m, gaps = min_and_gaps
    f = [m]
    for g in gaps:
        f.append(f[-1] + 1 + g)
    f = f[: max(1, min(len(f), m))]  # keep |F| <= min F
    assert sl.is_schreier(f)
    g_set = []
    prev = 0
    for i, e in enumerate(f):
        b = bumps[i] if i < len(bumps) else 0
        val = max(e + b, prev + 1)
        g_set.append(val)
        prev = val
    if sl.is_spread(f, g_set):
        assert sl.is_schreier(g_set)


# -- enumeration --------------------------------------------------------------


def test_enumerate_schreier_subsets_examples():
    got = [s.to_list() for s in sl.enumerate_schreier_subsets([1, 2])]
    assert got == [[], [1], [2]]
    assert [s.to_list() for s in sl.enumerate_schreier_subsets([])] == [[]]
    got = {tuple(s.to_list()) for s in sl.enumerate_schreier_subsets([2, 3])}
    assert got == {(), (2,), (3,), (2, 3)}


def test_enumerate_schreier_subsets_unique_and_admissible():
    seen = set()
    for s in sl.enumerate_schreier_subsets([1, 2, 3, 5, 8]):
        key = tuple(s.to_list())
        assert key not in seen
        seen.add(key)
        assert sl.is_schreier(s)
    # direct count: all admissible subsets of the ground set
    expect = sum(
        1
        for sub in powerset([1, 2, 3, 5, 8])
        if not sub or len(sub) <= min(sub)
    )
    assert len(seen) == expect


def test_enumerate_chains_small_catalog():
    chains = [c.to_lists() for c in sl.enumerate_chains([1, 2, 3])]
    assert len(chains) == 9
    expect = [
        [[1]],
        [[1], [2]],
        [[1], [2], [3]],
        [[1], [2, 3]],
        [[1], [3]],
        [[2]],
        [[2], [3]],
        [[2, 3]],
        [[3]],
    ]
    assert sorted(chains) == sorted(expect)
    assert len(set(map(str, chains))) == 9


def test_enumerate_chains_edge_cases():
    assert [c.to_lists() for c in sl.enumerate_chains([1])] == [[[1]]]
    assert list(sl.enumerate_chains([])) == []


def test_enumeration_respects_oracle_bound():
    with pytest.raises(sl.OracleLimitError):
        list(sl.enumerate_schreier_subsets(range(1, 30)))
    with pytest.raises(sl.OracleLimitError):
        list(sl.enumerate_chains(range(1, 30)))
    with pytest.raises(sl.OracleLimitError):
        sl.tau1_oracle(range(1, 30))


def test_oracle_bound_env_override(monkeypatch):
    monkeypatch.setenv("SCHREIER_LAB_ORACLE_BOUND", "4")
    assert sl.oracle_bound() == 4
    with pytest.raises(sl.OracleLimitError):
        sl.tau1_oracle([1, 2, 3, 4, 5])
    monkeypatch.setenv("SCHREIER_LAB_ORACLE_BOUND", "junk")
    with pytest.raises(sl.InvalidInputError):
        sl.oracle_bound()


# -- chains -------------------------------------------------------------------


def test_maximal_chain_from_examples():
    assert sl.maximal_chain_from(1, 1).to_lists() == [[1]]
    assert sl.maximal_chain_from(3, 2).to_lists() == [[3, 4, 5], [6, 7, 8, 9, 10, 11]]
    assert sl.maximal_chain_from(2, 1).to_lists() == [[2, 3]]


def test_maximal_chain_blocks_are_maximal_and_successive():
    ch = sl.maximal_chain_from(5, 6)
    for block in ch:
        assert sl.is_maximal_schreier(block)
    for a, b in zip(ch, ch.sets[1:]):
        assert a.max < b.min


def test_chain_validation():
    with pytest.raises(sl.InvalidInputError):
        sl.SchreierChain([])
    with pytest.raises(sl.InvalidInputError):
        sl.SchreierChain([[1, 2]])  # not admissible
    with pytest.raises(sl.InvalidInputError):
        sl.SchreierChain([[3, 4], [4, 5]])  # not successive
    with pytest.raises(sl.InvalidInputError):
        sl.SchreierChain([[2, 3], []])  # empty block


# -- tau1 ---------------------------------------------------------------------


def test_tau1_examples():
    count, cert = sl.tau1([])
    assert count == 0 and cert.verify()
    count, cert = sl.tau1([1, 2, 3])
    assert count == 2
    assert cert.verify()
    assert [b.to_list() for b in cert.chain] == [[1], [2, 3]]


def test_tau1_of_maximal_set_is_one():
    for f in ([1], [3, 4, 5], [2, 7]):
        count, _ = sl.tau1(f)
        assert count == 1


def test_tau1_of_maximal_chain_union():
    for s, n in ((1, 4), (3, 3), (5, 5)):
        ch = sl.maximal_chain_from(s, n)
        count, cert = sl.tau1(ch.union())
        assert count == n
        assert cert.verify()


def test_tau1_oracle_examples():
    assert sl.tau1_oracle([2, 3]) == 1
    assert sl.tau1_oracle([1, 2, 3]) == 2
    assert sl.tau1_oracle([1, 2, 3, 4, 5]) == 3
    assert sl.tau1([1, 2, 3, 4, 5, 6])[0] == sl.tau1_oracle([1, 2, 3, 4, 5, 6])


def test_tau1_matches_oracle_exhaustively_to_9():
    for sub in powerset(range(1, 10)):
        count, cert = sl.tau1(sub)
        assert count == sl.tau1_oracle(sub), sub
        assert cert.verify(), sub


def test_tau1_three_way_against_literal_chain_minimum():
    # the DP oracle and the greedy both agree with a brute minimum over
    # every covering chain enumerated from the chain space itself
    for sub in powerset(range(1, 8)):
        if not sub:
            continue
        target = IntSet.from_iterable(sub)
        best = min(
            (len(c) for c in sl.enumerate_chains(sub) if target.issubset(c.union())),
            default=None,
        )
        assert best == sl.tau1_oracle(sub) == sl.tau1(sub)[0], sub


def test_tau1_monotone_under_subsets():
    rng = random.Random(7)
    for _ in range(200):
        b = sorted(rng.sample(range(1, 13), rng.randint(1, 9)))
        a = sorted(rng.sample(b, rng.randint(0, len(b))))
        assert sl.tau1(a)[0] <= sl.tau1(b)[0]


def test_tau1_certificate_structure():
    rng = random.Random(11)
    for _ in range(100):
        a = sorted(rng.sample(range(1, 14), rng.randint(1, 10)))
        count, cert = sl.tau1(a)
        assert cert.count == count == len(cert.chain)
        assert cert.verify()
        # all blocks live inside A and all but the last are maximal
        for i, block in enumerate(cert.chain):
            assert block.issubset(IntSet.from_iterable(a))
            if i < len(cert.chain) - 1:
                assert sl.is_maximal_schreier(block)


def test_tau1_huge_interval_set():
    # greedy works on interval sets far beyond materialization size
    big = IntSet.interval(10, 10 * 2**30 - 1)
    count, cert = sl.tau1(big)
    assert count == 30
    assert cert.verify()


def test_tau1_count_sorted_fast_path():
    rng = random.Random(3)
    for _ in range(300):
        a = tuple(sorted(rng.sample(range(1, 15), rng.randint(1, 11))))
        assert _tau1_count_sorted(a) == sl.tau1(a)[0]


def test_tau1_rejects_bad_input():
    with pytest.raises(sl.InvalidInputError):
        sl.tau1([0, 2])
