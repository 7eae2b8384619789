from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multistirling.series import (
    SeriesError,
    TruncSeries,
    add,
    compose,
    derivative,
    divide,
    exp_series,
    expm1,
    identity,
    integrate,
    log1p_series,
    log1p_t,
    mul,
    nested_map,
    nfact_coeff,
    one_minus_exp_neg,
    pow_int,
)

S = TruncSeries


def naive_mul(a, b):
    out = [Fraction(0)] * len(a)
    for i in range(len(a)):
        for j in range(len(a) - i):
            out[i + j] += a[i] * b[j]
    return out


# --- construction ---------------------------------------------------------


def test_coefficients_are_exact_and_reduced():
    f = S([Fraction(2, 4), 3, Fraction(-6, 9)])
    assert f.coeffs == (Fraction(1, 2), Fraction(3), Fraction(-2, 3))
    assert all(c.denominator > 0 for c in f)
    assert f.order == 2 and len(f) == 3


def test_immutable():
    f = S([1, 2])
    with pytest.raises(AttributeError):
        f.foo = 1


def test_empty_rejected():
    with pytest.raises(SeriesError):
        S([])


def test_valuation():
    assert S([0, 0, 3, 1]).valuation() == 2
    assert S.zero(4).valuation() == 5


# --- add / mul ------------------------------------------------------------


def test_add_examples():
    assert add(S([1, 1]), S([1, -1])) == S([2, 0])
    f = S([1, 2, 3])
    assert add(f, S.zero(2)) == f
    assert add(S([0, 1, Fraction(1, 2)]), S([1, 0, Fraction(1, 2)])) == S([1, 1, 1])


def test_mul_examples():
    assert mul(S([1, 1, 0]), S([1, 1, 0])) == S([1, 2, 1])
    f = S([3, Fraction(1, 7), -2])
    assert mul(f, S.one(2)) == f
    assert mul(S([0, 1]), S([0, 1])) == S([0, 0])


def test_order_mismatch():
    with pytest.raises(SeriesError):
        add(S([1, 2]), S([1]))
    with pytest.raises(SeriesError):
        mul(S([1, 2]), S([1, 2, 3]))


# --- divide ---------------------------------------------------------------


def test_divide_monomial_drops_order():
    q = divide(S.monomial(2, 4), S.monomial(1, 4))
    assert q == S([0, 1, 0, 0])
    assert q.order == 3


def test_divide_geometric():
    assert divide(S([1, 0, -1, 0]), S([1, -1, 0, 0])) == S([1, 1, 0, 0])


def test_divide_t_over_one_minus_exp_neg():
    N = 6
    num, den = identity(N), one_minus_exp_neg(N)
    q = divide(num, den)
    assert q.coeffs[:3] == (1, Fraction(1, 2), Fraction(1, 12))
    # oracle: multiply back
    assert mul(q, S(den.coeffs[1:])) == S(num.coeffs[1:])


def test_divide_errors():
    with pytest.raises(SeriesError, match="not divisible"):
        divide(S([0, 1, 0]), S([0, 0, 1]))
    with pytest.raises(SeriesError):
        divide(S([1, 0]), S.zero(1))


# --- compose --------------------------------------------------------------


def test_compose_examples():
    f = S([0, 0, 1, 0])
    g = S([0, 1, 1, 0])
    assert compose(f, g) == S([0, 0, 1, 2])
    h = S([5, Fraction(1, 3), -1, 2])
    assert compose(h, identity(3)) == h


def test_compose_exp_log_inverse_pair():
    N = 10
    e = exp_series(identity(N))
    assert compose(e, log1p_t(N)) == S([1, 1] + [0] * (N - 1))


def test_compose_requires_zero_constant():
    with pytest.raises(SeriesError, match="zero constant term"):
        compose(S([1, 1]), S([1, 1]))


# --- exp / log ------------------------------------------------------------


def test_exp_examples():
    assert exp_series(identity(3)) == S([1, 1, Fraction(1, 2), Fraction(1, 6)])
    assert exp_series(S.zero(4)) == S.one(4)


def test_exp_t_plus_t2_brute_force():
    f = [Fraction(0), Fraction(1), Fraction(1)]
    total, power, fact = [Fraction(0)] * 3, [Fraction(1), 0, 0], 1
    for m in range(3):
        if m:
            power = naive_mul(power, f)
            fact *= m
        total = [a + b / fact for a, b in zip(total, power)]
    assert total[2] == Fraction(3, 2)
    for method in ("ode", "horner"):
        assert exp_series(S(f), method)[2] == Fraction(3, 2)


def test_log1p_examples():
    assert log1p_series(identity(3)) == S([0, 1, Fraction(-1, 2), Fraction(1, 3)])
    assert log1p_series(expm1(8)) == identity(8)
    assert log1p_series(S.zero(3)) == S.zero(3)


@pytest.mark.parametrize("fn", [exp_series, log1p_series])
def test_exp_log_require_zero_constant(fn):
    with pytest.raises(SeriesError):
        fn(S([1, 1]))


def test_unknown_method():
    with pytest.raises(ValueError):
        exp_series(identity(2), method="fft")


# --- pow ------------------------------------------------------------------


def test_pow_examples():
    one_minus_t = S([1, -1, 0, 0])
    assert pow_int(one_minus_t, -1) == S([1, 1, 1, 1])
    assert pow_int(S([2, 3, 4]), 0) == S.one(2)
    N = 10
    inv2 = pow_int(S([1, -1] + [0] * (N - 1)), -2)
    geom = S([1] * (N + 1))
    assert inv2 == mul(geom, geom)
    assert list(inv2) == [n + 1 for n in range(N + 1)]


def test_negative_pow_needs_unit():
    with pytest.raises(SeriesError):
        pow_int(S([0, 1]), -1)


# --- calculus -------------------------------------------------------------


def test_derivative_examples():
    assert derivative(S([0, 0, 1])) == S([0, 2])
    with pytest.raises(SeriesError):
        derivative(S([1]))


def test_integrate_paper_intermediate():
    # int_0^t e^x (e^x - 1) dx = (e^t - 1)^2 / 2
    N = 4
    e = expm1(N)
    lhs = integrate(mul(e + 1, e)).truncate(N)
    assert lhs == pow_int(e, 2).scale(Fraction(1, 2))


def test_integrate_derivative_roundtrip():
    f = S([0, 3, Fraction(-1, 2), 7])
    assert integrate(derivative(f)) == f


def test_nfact_coeff():
    f = pow_int(expm1(4), 2).scale(Fraction(1, 2))
    assert nfact_coeff(f, 3) == 3
    assert nfact_coeff(f, 0) == f[0]
    assert nfact_coeff(exp_series(identity(6)), 5) == 1
    with pytest.raises(SeriesError):
        nfact_coeff(f, 5)


# --- builders -------------------------------------------------------------


def test_builders():
    assert expm1(2) == S([0, 1, Fraction(1, 2)])
    assert one_minus_exp_neg(2) == S([0, 1, Fraction(-1, 2)])
    assert log1p_t(3) == S([0, 1, Fraction(-1, 2), Fraction(1, 3)])
    # hand expansion of 1 - exp(-(t + t^2/2 + t^3/6))
    assert nested_map(3) == S([0, 1, 0, Fraction(-1, 6)])
    for b in (expm1, one_minus_exp_neg, nested_map, log1p_t):
        assert b(5)[0] == 0


# --- properties -----------------------------------------------------------

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def series_triple(draw, zero_constant=False, max_order=8):
    n = draw(st.integers(0, max_order))
    out = []
    for _ in range(3):
        cs = draw(st.lists(small_q, min_size=n + 1, max_size=n + 1))
        if zero_constant:
            cs[0] = Fraction(0)
        out.append(S(cs))
    return out


@settings(max_examples=60, deadline=None)
@given(series_triple(max_order=16))
def test_ring_laws(fgh):
    f, g, h = fgh
    assert mul(f, g) == mul(g, f)
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))
    assert (f + g) - g == f


@settings(max_examples=40, deadline=None)
@given(series_triple(zero_constant=True))
def test_compose_associative(fgh):
    f, g, h = fgh
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@settings(max_examples=40, deadline=None)
@given(series_triple(zero_constant=True))
def test_exp_log_inverse(fgh):
    f = fgh[0]
    assert exp_series(log1p_series(f)) == f + 1
    assert log1p_series(exp_series(f) - 1) == f


@settings(max_examples=40, deadline=None)
@given(series_triple(zero_constant=True))
def test_exp_log_two_methods_agree(fgh):
    f = fgh[0]
    assert exp_series(f, "ode") == exp_series(f, "horner")
    assert log1p_series(f, "ode") == log1p_series(f, "horner")


@settings(max_examples=40, deadline=None)
@given(series_triple(zero_constant=True, max_order=10))
def test_derivative_of_exp(fgh):
    f = fgh[0]
    if f.order == 0:
        return
    e = exp_series(f)
    assert derivative(e) == mul(derivative(f), e.truncate(f.order - 1))


@settings(max_examples=60, deadline=None)
@given(series_triple(), st.integers(0, 3))
def test_divide_then_multiply(fgh, shift):
    f, g, _ = fgh
    n = f.order
    if g.is_zero() or shift > n:
        return
    # raise both valuations so the shift path is exercised
    f = S([0] * shift + list(f.coeffs[: n + 1 - shift]))
    g = S([0] * shift + list(g.coeffs[: n + 1 - shift]))
    if g.is_zero() or g.valuation() > f.valuation():
        with pytest.raises(SeriesError):
            divide(f, g)
        return
    v = g.valuation()
    q = divide(f, g)
    assert q.order == n - v
    assert mul(q, S(g.coeffs[v:])) == S(f.coeffs[v:])
