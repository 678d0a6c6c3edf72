import random

import pytest

import schreierlab as sl
from schreierlab import IndexSet, IntSet


def rand_prefix(rng, length=14, max_start=4, max_gap=4):
    out = [rng.randint(1, max_start)]
    for _ in range(length - 1):
        out.append(out[-1] + rng.randint(1, max_gap))
    return out


# -- index sets ----------------------------------------------------------------


def test_select_examples():
    evens = IndexSet.evens()
    assert evens.select([1, 3]) == IntSet.from_iterable([2, 6])
    assert evens.select([]) == sl.EMPTY
    powers = IndexSet.explicit([1, 2, 4, 8, 16])
    assert powers.select([2, 3]) == IntSet.from_iterable([2, 4])


def test_explicit_prefix_truncates_instead_of_extrapolating():
    m = IndexSet.explicit([3, 5, 7])
    assert m.prefix(3) == (3, 5, 7)
    with pytest.raises(sl.TruncationError):
        m.element(4)
    with pytest.raises(sl.TruncationError):
        m.select([4])


def test_rule_sets():
    assert IndexSet.naturals().prefix(5) == (1, 2, 3, 4, 5)
    assert IndexSet.evens().prefix(4) == (2, 4, 6, 8)
    assert IndexSet.odds().prefix(4) == (1, 3, 5, 7)
    assert IndexSet.arithmetic(3, 4).prefix(3) == (3, 7, 11)
    m = IndexSet.explicit([1, 4, 6])
    assert IndexSet.doubled(m).prefix(3) == (2, 8, 12)
    assert IndexSet.doubled_minus_one(m).prefix(3) == (1, 7, 11)
    u = IndexSet.union(IndexSet.doubled_minus_one(m), IndexSet.doubled(m))
    assert u.prefix(6) == (1, 2, 7, 8, 11, 12)
    u2 = IndexSet.union(IndexSet.explicit([1, 2]), IndexSet.explicit([2, 3]))
    assert u2.prefix(3) == (1, 2, 3)
    with pytest.raises(sl.TruncationError):
        u2.element(4)


def test_contains():
    evens = IndexSet.evens()
    assert evens.contains(8) and not evens.contains(7)
    m = IndexSet.explicit([2, 9])
    assert m.contains(9) and not m.contains(10)


def test_parse_index_rule():
    assert sl.parse_index_rule("even").prefix(2) == (2, 4)
    assert sl.parse_index_rule("all").prefix(2) == (1, 2)
    assert sl.parse_index_rule("odd").prefix(2) == (1, 3)
    assert sl.parse_index_rule("arith:5:3").prefix(2) == (5, 8)
    assert sl.parse_index_rule("[2, 3, 10]").prefix(3) == (2, 3, 10)
    assert sl.parse_index_rule("double:even").prefix(2) == (4, 8)
    assert sl.parse_index_rule("union:even;odd").prefix(4) == (1, 2, 3, 4)
    for bad in ("nope", "arith:1", "[1, 1.5]"):
        with pytest.raises(sl.InvalidInputError):
            sl.parse_index_rule(bad)


def test_is_spread_of():
    m = IndexSet.explicit(rand_prefix(random.Random(1)))
    assert sl.is_spread_of(IndexSet.doubled(m), m, 10)
    assert not sl.is_spread_of(m, IndexSet.doubled(m), 10)
    assert sl.is_spread_of(m, m, 14)


# -- truncated index -------------------------------------------------------------


def test_gl_index_identity_is_one():
    rng = random.Random(2)
    for _ in range(10):
        m = IndexSet.explicit(rand_prefix(rng))
        r = sl.gl_index_truncated(m, m, 10)
        assert r.value == 1
        assert not r.witness.is_empty


def test_gl_index_spread_gives_one():
    # if A is a spread of B then every admissible selection of B pulls back
    # to an admissible selection of A, so the index of (A, B) is 1
    rng = random.Random(3)
    for _ in range(20):
        b = IndexSet.explicit(rand_prefix(rng))
        vals = []
        for e in b.prefix(14):
            nxt = e + rng.randint(0, 3)
            if vals and nxt <= vals[-1]:
                nxt = vals[-1] + 1
            vals.append(nxt)
        a = IndexSet.explicit(vals)
        assert sl.is_spread_of(a, b, 12)
        assert sl.gl_index_truncated(a, b, 12).value == 1


def test_gl_index_known_small_case():
    # M = naturals, N = 5,10,15,...: J = {1..5} selects {1..5} from M with
    # covering number 3 while N(J) = {5,...,25} stays Schreier
    m = IndexSet.naturals()
    n = IndexSet.arithmetic(5, 5)
    r = sl.gl_index_truncated(m, n, 8)
    assert r.value >= 3
    assert sl.tau1(m.select(r.witness))[0] == r.value
    assert sl.is_schreier(n.select(r.witness))


def test_gl_index_witness_contract():
    rng = random.Random(5)
    for _ in range(15):
        m = IndexSet.explicit(rand_prefix(rng))
        n = IndexSet.explicit(rand_prefix(rng))
        k = rng.randint(1, 10)
        r = sl.gl_index_truncated(m, n, k)
        assert r.k == k
        if not r.witness.is_empty:
            assert r.witness.max <= k
            assert sl.is_schreier(n.select(r.witness))
            assert sl.tau1(m.select(r.witness))[0] == r.value


def test_tau1_monotone_under_selection():
    # J subset of J' with N(J') Schreier: tau1(M(J)) <= tau1(M(J')), which is
    # what justifies searching only maximal selections
    rng = random.Random(41)
    for _ in range(40):
        m = IndexSet.explicit(rand_prefix(rng))
        n = IndexSet.explicit(rand_prefix(rng))
        k = 10
        nprefix = n.prefix(k)
        j1 = rng.randint(1, k)
        cap = min(nprefix[j1 - 1], k - j1 + 1)
        big = [j1] + sorted(rng.sample(range(j1 + 1, k + 1), cap - 1))
        small = sorted(rng.sample(big, rng.randint(1, len(big))))
        assert sl.is_schreier(n.select(big))
        t_small, _ = sl.tau1(m.select(small))
        t_big, _ = sl.tau1(m.select(big))
        assert t_small <= t_big


def test_gl_index_monotone_in_k():
    rng = random.Random(7)
    for _ in range(10):
        m = IndexSet.explicit(rand_prefix(rng))
        n = IndexSet.explicit(rand_prefix(rng))
        values = [sl.gl_index_truncated(m, n, k).value for k in range(1, 13)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_gl_index_doubling_ensemble():
    rng = random.Random(11)
    for _ in range(30):
        m = IndexSet.explicit(rand_prefix(rng))
        m1 = IndexSet.doubled_minus_one(m)
        m2 = IndexSet.doubled(m)
        u = IndexSet.union(m1, m2)
        assert sl.gl_index_truncated(m, u, 12).value <= 3
        assert sl.gl_index_truncated(u, m, 12).value <= 2
        assert sl.gl_index_truncated(m2, m, 12).value == 1
        assert sl.gl_index_truncated(m2, m1, 12).value == 1
        assert sl.gl_index_truncated(m, m2, 12).value <= 2
        assert sl.gl_index_truncated(m1, m2, 12).value <= 2


def test_gl_index_determinism():
    m = IndexSet.naturals()
    n = IndexSet.evens()
    a = sl.gl_index_truncated(m, n, 10)
    b = sl.gl_index_truncated(IndexSet.naturals(), IndexSet.evens(), 10)
    assert a == b


def test_gl_index_validation():
    with pytest.raises(sl.InvalidInputError):
        sl.gl_index_truncated(IndexSet.naturals(), IndexSet.evens(), 0)
    with pytest.raises(sl.TruncationError):
        sl.gl_index_truncated(IndexSet.explicit([1, 2]), IndexSet.evens(), 5)


# -- fibers ----------------------------------------------------------------------


def test_theta_fiber_examples():
    ident = {i: i for i in range(1, 11)}
    window = [[i] for i in range(1, 11)]
    assert sl.theta_fiber_stats(ident, window) == (1, 1)
    const = {i: 7 for i in range(1, 6)}
    assert sl.theta_fiber_stats(const, [[7]]) == (5, 3)
    assert sl.theta_fiber_stats({}, []) == (0, 0)


# -- domination -------------------------------------------------------------------


def test_domination_constant_examples():
    m = IndexSet.explicit(rand_prefix(random.Random(13)))
    assert sl.domination_constant(m, m, 10, 2, "bp") == 1.0
    assert sl.domination_constant(m, m, 10, 2, "sp") == 1.0
    n = IndexSet.union(m, IndexSet.doubled(m))
    # N a spread of M ∪ N forces constant 1
    assert sl.domination_constant(IndexSet.doubled(m), n, 10, 2, "bp") >= 1.0
    m2 = IndexSet.doubled(m)
    assert sl.domination_constant(m, m2, 12, 2, "bp") <= 2.0


def test_check_domination_unit_coefficient():
    m = IndexSet.naturals()
    n = IndexSet.evens()
    r = sl.check_domination(m, n, 6, 2, "sp", [1])
    assert r.holds and r.lhs == 1.0


def test_check_domination_identical_sets():
    m = IndexSet.explicit(rand_prefix(random.Random(17)))
    rng = random.Random(19)
    for _ in range(10):
        coeffs = [rng.randint(-4, 4) for _ in range(8)]
        r = sl.check_domination(m, m, 10, 2, "bp", coeffs)
        assert r.holds
        assert r.lhs == pytest.approx(r.rhs / 1.0)


def test_check_domination_random_batches():
    rng = random.Random(23)
    for _ in range(15):
        m = IndexSet.explicit(rand_prefix(rng))
        n = IndexSet.explicit(rand_prefix(rng))
        for p, space in ((1, "sp"), (2, "sp"), (2, "bp"), (3, "bp")):
            for _ in range(5):
                coeffs = [rng.randint(-4, 4) for _ in range(rng.randint(1, 12))]
                assert sl.check_domination(m, n, 12, p, space, coeffs).holds


def test_check_domination_validates_length():
    m = IndexSet.naturals()
    with pytest.raises(sl.TruncationError):
        sl.check_domination(m, m, 3, 2, "sp", [1, 1, 1, 1])


def test_gl_index_value_matches_unrestricted_brute_force():
    # the search enumerates only maximal selections; brute force over every
    # feasible J (any subset of 1..K with N(J) Schreier) must agree
    from itertools import combinations as combos

    rng = random.Random(47)
    for _ in range(25):
        m = IndexSet.explicit(rand_prefix(rng, length=10))
        n = IndexSet.explicit(rand_prefix(rng, length=10))
        k = rng.randint(1, 8)
        brute = 0
        universe = list(range(1, k + 1))
        for r in range(1, k + 1):
            for j_sel in combos(universe, r):
                if sl.is_schreier(n.select(j_sel)):
                    brute = max(brute, sl.tau1(m.select(j_sel))[0])
        assert sl.gl_index_truncated(m, n, k).value == brute
