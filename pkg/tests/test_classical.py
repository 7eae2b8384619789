from fractions import Fraction
from math import factorial

import pytest

from _oracles import (
    bernoulli_numbers,
    count_ordered_block_partitions,
    count_ordered_set_partitions,
    count_permutations_by_cycles,
    count_set_partitions,
)
from multistirling import classical as C


def test_stirling2_values():
    s2 = C.stirling2(8)
    assert s2(4, 2) == count_set_partitions(4, 2) == 7
    assert all(s2(n, n) == 1 for n in range(9))
    assert all(s2(n, 0) == 0 for n in range(1, 9))
    assert s2(0, 0) == 1
    assert s2(3, 5) == 0


@pytest.mark.parametrize("n", range(7))
def test_stirling2_matches_enumeration(n):
    s2 = C.stirling2(n)
    for k in range(n + 1):
        assert s2(n, k) == count_set_partitions(n, k)


def test_stirling1_values():
    u, s = C.stirling1_unsigned(8), C.stirling1_signed(8)
    assert u(3, 1) == count_permutations_by_cycles(3, 1) == 2
    assert s(3, 1) == 2
    assert s(3, 2) == -3
    assert all(u(n, n) == 1 for n in range(9))
    for n in range(9):
        assert sum(u(n, k) for k in range(n + 1)) == factorial(n)


@pytest.mark.parametrize("n", range(7))
def test_stirling1_matches_enumeration(n):
    u = C.stirling1_unsigned(n)
    for k in range(n + 1):
        assert u(n, k) == count_permutations_by_cycles(n, k)


def test_lah_values():
    L = C.lah(8)
    assert L(3, 2) == count_ordered_block_partitions(3, 2) == 6
    assert all(L(n, 1) == factorial(n) for n in range(1, 9))
    assert all(L(n, n) == 1 for n in range(9))


@pytest.mark.parametrize("n", range(6))
def test_lah_matches_enumeration(n):
    L = C.lah(n)
    for k in range(n + 1):
        assert L(n, k) == count_ordered_block_partitions(n, k)


@pytest.mark.parametrize(
    "rec, ser",
    [
        (C.stirling2, C.stirling2_from_series),
        (C.stirling1_unsigned, C.stirling1_unsigned_from_series),
        (C.lah, C.lah_closed_form),
    ],
)
def test_two_routes_agree(rec, ser):
    assert rec(14) == ser(14)
    assert rec(14).is_integral()


def test_triangle_bounds():
    t = C.stirling2(3)
    with pytest.raises(IndexError):
        t(4, 1)
    assert t[3, 2] == 3
    with pytest.raises(ValueError):
        C.TriangleTable([[1], [1]])


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("x", range(-5, 6))
def test_base_change(n, x):
    s2, s1, u = C.stirling2(n), C.stirling1_signed(n), C.stirling1_unsigned(n)
    assert x**n == sum(s2(n, k) * C.falling(x, k) for k in range(n + 1))
    assert C.falling(x, n) == sum(s1(n, k) * x**k for k in range(n + 1))
    assert C.rising(x, n) == sum(u(n, k) * x**k for k in range(n + 1))


def test_bell_poly():
    assert C.bell_poly(3, 1) == 5 == sum(count_set_partitions(3, k) for k in range(4))
    assert C.bell_poly(0, 0) == 1
    assert all(C.bell_poly(n, 0) == 0 for n in range(1, 6))
    assert C.bell_poly(2, -1) == 0


def test_fubini_values():
    assert C.fubini_r(2, 1, 1) == count_ordered_set_partitions(2) == 3
    assert C.fubini_r(5, 1, 1) == count_ordered_set_partitions(5)
    assert all(C.fubini_r(0, r, x) == 1 for r in range(1, 5) for x in (Fraction(1, 2), 2))
    assert all(C.fubini_r(1, r, 1) == r for r in range(1, 5))


@pytest.mark.parametrize("x", [-1, Fraction(1, 2), 1, 2])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_fubini_routes_agree(r, x):
    for n in range(13):
        assert C.fubini_r_series(n, r, x) == C.fubini_r_sum(n, r, x)


def test_fubini_bad_args():
    with pytest.raises(ValueError):
        C.fubini_r(2, 0, 1)


def test_bernoulli_order_one_matches_classical():
    B = bernoulli_numbers(12)
    assert [C.bernoulli_order(n, 1) for n in range(13)] == B
    assert C.bernoulli_order(2, 1) == Fraction(1, 6)
    assert C.bernoulli_order(3, 1) == 0
    assert C.bernoulli_order(4, 1) == Fraction(-1, 30)


def test_bernoulli_order_higher():
    assert C.bernoulli_order(1, 1) == Fraction(-1, 2)
    assert all(C.bernoulli_order(0, r) == 1 for r in range(6))
    assert C.bernoulli_order(1, 2) == -1
    # order r is the r-fold binomial convolution of order 1
    B = bernoulli_numbers(8)
    for n in range(9):
        conv = sum(Fraction(factorial(n), factorial(i) * factorial(n - i)) * B[i] * B[n - i] for i in range(n + 1))
        assert C.bernoulli_order(n, 2) == conv
