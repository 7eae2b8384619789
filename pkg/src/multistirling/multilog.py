"""Truncated coefficients of the multiple logarithm.

``Li_{k_1..k_r}(t) = sum over 0 < m_1 < ... < m_r of t^{m_r} / (m_1^{k_1} ... m_r^{k_r})``

The production path is a prefix-sum recurrence; :func:`li_series_oracle`
enumerates every chain and exists only to check it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .series import TruncSeries, derivative, divide, identity, mul, pow_int

MultiIndex = tuple  # tuple[int, ...], depth >= 1 for public callers


def parse_index(text: str) -> tuple[int, ...]:
    """Parse ``"1,2,-1"`` into ``(1, 2, -1)``."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed multi-index {text!r}")
    try:
        ks = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed multi-index {text!r}") from None
    return ks


def format_index(index: Iterable[int]) -> str:
    return ",".join(str(k) for k in index)


def as_index(index) -> tuple[int, ...]:
    if isinstance(index, str):
        return parse_index(index)
    ks = tuple(int(k) for k in index)
    return ks


def weight(m: int, k: int) -> Fraction:
    """``m^{-k}`` exactly; non-positive ``k`` puts the power in the numerator."""
    if k >= 0:
        return Fraction(1, m**k)
    return Fraction(m ** (-k))


@lru_cache(maxsize=None)
def _li_coeffs(index: tuple[int, ...], order: int) -> tuple[Fraction, ...]:
    if not index:
        return (Fraction(1),) + (Fraction(0),) * order
    # level[m] = S_j(m): sum over chains m_1 < ... < m_j < m of prod m_i^{-k_i}
    level = [Fraction(1)] * (order + 1)
    for k in index[:-1]:
        nxt = [Fraction(0)] * (order + 1)
        running = Fraction(0)
        for m in range(order + 1):
            nxt[m] = running
            if m:
                running += level[m] * weight(m, k)
        level = nxt
    kr = index[-1]
    return (Fraction(0),) + tuple(level[n] * weight(n, kr) for n in range(1, order + 1))


def li_series(index: Sequence[int], order: int) -> TruncSeries:
    """``Li_index(t)`` truncated at ``order``.

    The empty index gives the constant series 1.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    return TruncSeries(_li_coeffs(as_index(index), order))


def li_series_oracle(index: Sequence[int], order: int) -> TruncSeries:
    """Same as :func:`li_series`, by enumerating every chain ``m_1 < ... < m_r <= order``."""
    index = as_index(index)
    if order < 0:
        raise ValueError("order must be non-negative")
    if not index:
        return TruncSeries.one(order)
    out = [Fraction(0)] * (order + 1)
    for chain in combinations(range(1, order + 1), len(index)):
        term = Fraction(1)
        for m, k in zip(chain, index):
            term *= weight(m, k)
        out[chain[-1]] += term
    return TruncSeries(out)


@dataclass
class IdentityCheck:
    """Outcome of a coefficientwise series identity; truthy when it holds."""

    name: str
    mismatches: list = field(default_factory=list)  # (n, lhs, rhs)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:
        return self.ok


def _compare(name: str, lhs: TruncSeries, rhs: TruncSeries) -> IdentityCheck:
    check = IdentityCheck(name)
    for n, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            check.mismatches.append((n, a, b))
    return check


def check_deriv_drop(index: Sequence[int], order: int) -> IdentityCheck:
    """``d/dt Li_{k_1..k_r} = Li_{k_1..k_r - 1} / t`` up to order ``order - 1``."""
    index = as_index(index)
    if not index or order < 1:
        raise ValueError("need depth >= 1 and order >= 1")
    lowered = index[:-1] + (index[-1] - 1,)
    lhs = derivative(li_series(index, order))
    rhs = divide(li_series(lowered, order), identity(order))
    return _compare(f"deriv-drop {format_index(index)}", lhs, rhs)


def check_deriv_trailing_one(index: Sequence[int], order: int) -> IdentityCheck:
    """``d/dt Li_{k_1..k_{r-1},1} = Li_{k_1..k_{r-1}} / (1 - t)`` up to order ``order - 1``."""
    index = as_index(index)
    if len(index) < 2 or index[-1] != 1:
        raise ValueError("index must have depth >= 2 and end with 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    lhs = derivative(li_series(index, order))
    m = order - 1
    geometric = pow_int(1 - identity(m), -1)
    rhs = mul(geometric, li_series(index[:-1], m))
    return _compare(f"deriv-trailing-one {format_index(index)}", lhs, rhs)
