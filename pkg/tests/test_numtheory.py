from math import gcd, isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilinggate.numtheory import (
    ParamPair,
    Triple,
    enumerate_triples_direct,
    enumerate_triples_param,
    mod8_check,
    sqdiv,
    sqfree,
    sqfree_range,
    triple_from_param,
)

SEVEN = [(3, 5, 7), (5, 16, 19), (7, 8, 13), (7, 33, 37), (9, 56, 61),
         (11, 24, 31), (11, 85, 91)]


def brute_sqfree(x: int) -> int:
    # largest square divisor, by scanning
    best = 1
    k = 1
    while k * k <= x:
        if x % (k * k) == 0:
            best = k * k
        k += 1
    return x // best


def brute_sqdiv(x: int) -> int:
    # smallest y with x | y^2
    y = 1
    while (y * y) % x != 0:
        y += 1
    return y


class TestTriple:
    def test_valid(self):
        t = Triple(3, 5, 7)
        assert (t.a, t.b, t.c) == (3, 5, 7)
        assert t.swapped == Triple(5, 3, 7)
        assert Triple(5, 3, 7).normalized == t

    @pytest.mark.parametrize("sides", [(2, 3, 4), (6, 10, 14), (0, 5, 7),
                                       (3, 5, 8)])
    def test_invalid(self, sides):
        with pytest.raises(ValueError):
            Triple(*sides)


class TestSquarefreeMachinery:
    def test_worked_examples(self):
        assert sqfree(80) == 5
        assert sqdiv(80) == 20
        assert sqfree(1) == 1
        assert sqfree(15) == 15
        assert sqdiv(15) == 15

    def test_360_against_brute_force(self):
        assert brute_sqfree(360) == 10
        assert sqfree(360) == 10
        assert brute_sqdiv(360) == 60
        assert sqdiv(360) == 60

    @given(st.integers(1, 5000))
    def test_matches_brute_force(self, x):
        assert sqfree(x) == brute_sqfree(x)

    @given(st.integers(1, 800))
    def test_sqdiv_is_smallest(self, x):
        assert sqdiv(x) == brute_sqdiv(x)

    def test_square_identity_small(self):
        for x in range(1, 5000):
            s = sqdiv(x)
            assert s * s == x * sqfree(x)

    def test_divides_square_implies_sqdiv_divides(self):
        # x | y^2 implies sqdiv(x) | y; scan divisors of y^2 up to 10^4
        for y in range(1, 1001):
            y2 = y * y
            x = 1
            while x * x <= y2:
                if y2 % x == 0:
                    for d in (x, y2 // x):
                        if d <= 10000:
                            assert y % sqdiv(d) == 0
                x += 1

    def test_n_times_x_square_property(self):
        # N*x = y^2 implies N / sqfree(x) is a perfect square
        for y in range(1, 1001):
            y2 = y * y
            x = 1
            while x * x <= y2:
                if y2 % x == 0:
                    for n, d in ((x, y2 // x), (y2 // x, x)):
                        if n <= 1000 and d <= 1000:
                            q, r = divmod(n, sqfree(d))
                            assert r == 0
                            assert isqrt(q) ** 2 == q
                x += 1

    def test_sqfree_range_agrees(self):
        arr = sqfree_range(3000)
        for x in range(1, 3001):
            assert arr[x] == sqfree(x)

    def test_rejects_nonpositive(self):
        for fn in (sqfree, sqdiv):
            with pytest.raises(ValueError):
                fn(0)


class TestDirectEnumeration:
    def test_seven_small_solutions(self):
        assert [t.as_tuple() for t in enumerate_triples_direct(11)] == SEVEN

    def test_no_solutions_below_three(self):
        assert enumerate_triples_direct(2) == []

    def test_a_equals_three(self):
        assert [t.as_tuple() for t in enumerate_triples_direct(3)] == [(3, 5, 7)]

    def test_max_c_cut(self):
        ts = enumerate_triples_direct(11, max_c=40)
        assert [t.as_tuple() for t in ts] == [(3, 5, 7), (5, 16, 19),
                                              (7, 8, 13), (7, 33, 37),
                                              (11, 24, 31)]

    def test_lower_bounds(self):
        for t in enumerate_triples_direct(40):
            assert t.a >= 3 and t.b >= 5
            assert gcd(t.a, t.b) == gcd(t.b, t.c) == gcd(t.a, t.c) == 1


class TestParametrization:
    def test_odd_odd_example(self):
        raw = triple_from_param(ParamPair(2, 1, "odd-odd"))
        assert sorted(raw[:2]) == [3, 5] and raw[2] == 7

    def test_one_even_example(self):
        raw = triple_from_param(ParamPair(5, 2, "one-even"))
        assert sorted(raw[:2]) == [5, 16] and raw[2] == 19

    def test_param_pair_validation(self):
        with pytest.raises(ValueError):
            ParamPair(2, 4, "one-even")  # not coprime
        with pytest.raises(ValueError):
            ParamPair(3, 1, "odd-odd")  # both odd
        with pytest.raises(ValueError):
            ParamPair(2, 1, "bogus")

    def test_cross_method_small(self):
        # all triples have a, b < c, so direct(C, C) is everything with c <= C
        assert enumerate_triples_param(100) == enumerate_triples_direct(100, 100)

    def test_cross_method_medium(self):
        assert enumerate_triples_param(1000) == enumerate_triples_direct(1000, 1000)

    def test_minimum_c(self):
        with pytest.raises(ValueError):
            enumerate_triples_param(6)


class TestMod8:
    def test_examples(self):
        assert mod8_check(Triple(3, 5, 7))
        assert mod8_check(Triple(7, 33, 37))
        assert mod8_check(Triple(5, 16, 19))  # vacuous, b even

    def test_sweep(self):
        for t in enumerate_triples_param(10000):
            assert mod8_check(t)

    def test_odd_odd_pairs_sum_to_zero_mod_8(self):
        for t in enumerate_triples_param(2000):
            if t.a % 2 == 1 and t.b % 2 == 1:
                assert (t.a + t.b) % 8 == 0
