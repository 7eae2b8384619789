"""The multiple-logarithm number families, as dense tables over ``n``."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .multilog import as_index, format_index, li_series, weight
from .series import (
    TruncSeries,
    compose,
    divide,
    identity,
    mul,
    nested_map,
    one_minus_exp_neg,
    pow_int,
)


class Family(str, enum.Enum):
    MULTI_STIRLING2 = "multi-stirling2"
    UNSIGNED_MULTI_STIRLING1 = "unsigned-multi-stirling1"
    SIGNED_MULTI_STIRLING1 = "signed-multi-stirling1"
    MULTI_LAH = "multi-lah"
    MULTI_BERNOULLI = "multi-bernoulli"


class TableInvariantError(ArithmeticError):
    pass


@dataclass(frozen=True)
class NumberTable:
    """Values ``a_n`` for ``0 <= n <= max_n`` of one family at one multi-index."""

    family: Family
    index: tuple
    max_n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.max_n + 1:
            raise ValueError("values must cover 0..max_n")
        r = len(self.index)
        if self.family is Family.MULTI_BERNOULLI:
            if self.values[0] != leading_weight(self.index):
                raise TableInvariantError(f"B_0 for {format_index(self.index)} is {self.values[0]}")
        else:
            bad = [n for n in range(min(r, self.max_n + 1)) if self.values[n] != 0]
            if bad:
                raise TableInvariantError(f"{self.family.value} nonzero below depth at n={bad}")

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def items(self):
        return enumerate(self.values)


def leading_weight(index) -> Fraction:
    """``prod_i i^{-k_i}``: weight of the minimal chain ``m_i = i``."""
    return prod((weight(i, k) for i, k in enumerate(index, start=1)), start=Fraction(1))


def _check_index(index) -> tuple:
    index = as_index(index)
    if not index:
        raise ValueError("multi-index must have depth >= 1")
    return index


def _table(family: Family, index, max_n: int, series: TruncSeries) -> NumberTable:
    return NumberTable(family, index, max_n, tuple(series.egf()[: max_n + 1]))


@lru_cache(maxsize=None)
def _multi_stirling2(index, max_n):
    li = li_series(index, max_n)
    return _table(Family.MULTI_STIRLING2, index, max_n, compose(li, nested_map(max_n)))


def multi_stirling2(index, max_n: int) -> NumberTable:
    """``n! [t^n] Li_index(1 - e^{1 - e^t})``."""
    return _multi_stirling2(_check_index(index), max_n)


@lru_cache(maxsize=None)
def _unsigned_multi_stirling1(index, max_n):
    return _table(Family.UNSIGNED_MULTI_STIRLING1, index, max_n, li_series(index, max_n))


def unsigned_multi_stirling1(index, max_n: int) -> NumberTable:
    """``n! [t^n] Li_index(t)``."""
    return _unsigned_multi_stirling1(_check_index(index), max_n)


@lru_cache(maxsize=None)
def _signed_multi_stirling1(index, max_n):
    r = len(index)
    via_series = compose(li_series(index, max_n), -identity(max_n)).scale((-1) ** r).egf()
    unsigned = _unsigned_multi_stirling1(index, max_n).values
    via_sign = [(-1) ** (n + r) * v for n, v in enumerate(unsigned)]
    if via_series != via_sign:
        raise TableInvariantError(f"signed first-kind routes disagree for {format_index(index)}")
    return NumberTable(Family.SIGNED_MULTI_STIRLING1, index, max_n, tuple(via_series))


def signed_multi_stirling1(index, max_n: int) -> NumberTable:
    """``n! [t^n] (-1)^r Li_index(-t)``, checked against ``(-1)^(n+r)`` times the unsigned table."""
    return _signed_multi_stirling1(_check_index(index), max_n)


@lru_cache(maxsize=None)
def _multi_lah(index, max_n):
    r = len(index)
    li = compose(li_series(index, max_n), one_minus_exp_neg(max_n))
    series = mul(li, pow_int(1 - identity(max_n), -r))
    return _table(Family.MULTI_LAH, index, max_n, series)


def multi_lah(index, max_n: int) -> NumberTable:
    """``n! [t^n] Li_index(1 - e^{-t}) / (1 - t)^r``."""
    return _multi_lah(_check_index(index), max_n)


@lru_cache(maxsize=None)
def _multi_bernoulli(index, max_n):
    r = len(index)
    # dividing by a series of valuation r costs r orders of precision
    N = max_n + r
    x = one_minus_exp_neg(N)
    q = divide(compose(li_series(index, N), x), pow_int(x, r))
    return _table(Family.MULTI_BERNOULLI, index, max_n, q)


def multi_bernoulli(index, max_n: int) -> NumberTable:
    """``n! [t^n] Li_index(1 - e^{-t}) / (1 - e^{-t})^r``."""
    return _multi_bernoulli(_check_index(index), max_n)


BUILDERS = {
    Family.MULTI_STIRLING2: multi_stirling2,
    Family.UNSIGNED_MULTI_STIRLING1: unsigned_multi_stirling1,
    Family.SIGNED_MULTI_STIRLING1: signed_multi_stirling1,
    Family.MULTI_LAH: multi_lah,
    Family.MULTI_BERNOULLI: multi_bernoulli,
}


def build_table(family, index, max_n: int) -> NumberTable:
    return BUILDERS[Family(family)](index, max_n)
