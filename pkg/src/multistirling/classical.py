"""Classical special numbers: Stirling (both kinds), Lah, Bell, Fubini, Bernoulli.

Each triangle has a recurrence route and a generating-series route; the
``*_from_series`` functions are the second route and are compared against
the recurrences in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .series import (
    TruncSeries,
    divide,
    expm1,
    identity,
    log1p_series,
    pow_int,
)


class TriangleTable:
    """Lower-triangular table ``v[n][k]`` for ``0 <= k <= n <= N``.

    Lookups outside the triangle (``k > n`` or ``k < 0``) return 0.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has length {len(row)}")

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def __call__(self, n: int, k: int) -> Fraction:
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside 0..{self.max_n}")
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def __getitem__(self, nk):
        return self(*nk)

    def __eq__(self, other):
        if isinstance(other, TriangleTable):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"TriangleTable(max_n={self.max_n})"

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.rows for v in row)

    def map(self, fn) -> TriangleTable:
        return TriangleTable([[fn(n, k, v) for k, v in enumerate(row)] for n, row in enumerate(self.rows)])


def _from_egf_columns(N: int, column) -> TriangleTable:
    # column(k) -> series whose n!-coefficients fill column k
    rows = [[Fraction(0)] * (n + 1) for n in range(N + 1)]
    for k in range(N + 1):
        vals = column(k).egf()
        for n in range(k, N + 1):
            rows[n][k] = vals[n]
    return TriangleTable(rows)


@lru_cache(maxsize=None)
def stirling2(N: int) -> TriangleTable:
    """Stirling numbers of the second kind, ``{n, k}``."""
    rows = [[1]]
    for n in range(N):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            row[k] = (k * prev[k] if k <= n else 0) + prev[k - 1]
        rows.append(row)
    return TriangleTable(rows)


def stirling2_from_series(N: int) -> TriangleTable:
    """``{n, k} = n! [t^n] (e^t - 1)^k / k!``."""
    e = expm1(N)
    return _from_egf_columns(N, lambda k: pow_int(e, k).scale(Fraction(1, factorial(k))))


@lru_cache(maxsize=None)
def stirling1_unsigned(N: int) -> TriangleTable:
    """Unsigned Stirling numbers of the first kind, ``[n, k]``."""
    rows = [[1]]
    for n in range(N):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            row[k] = (n * prev[k] if k <= n else 0) + prev[k - 1]
        rows.append(row)
    return TriangleTable(rows)


def stirling1_unsigned_from_series(N: int) -> TriangleTable:
    """``[n, k] = n! [t^n] (-log(1 - t))^k / k!``."""
    neg_log = -log1p_series(-identity(N))
    return _from_egf_columns(N, lambda k: pow_int(neg_log, k).scale(Fraction(1, factorial(k))))


@lru_cache(maxsize=None)
def stirling1_signed(N: int) -> TriangleTable:
    """Signed Stirling numbers of the first kind, ``S_1(n, k) = (-1)^(n-k) [n, k]``."""
    return stirling1_unsigned(N).map(lambda n, k, v: v if (n - k) % 2 == 0 else -v)


@lru_cache(maxsize=None)
def lah(N: int) -> TriangleTable:
    """Unsigned Lah numbers ``L(n, k) = n! [t^n] (t / (1 - t))^k / k!``."""
    t = identity(N)
    ratio = t * pow_int(1 - t, -1)
    return _from_egf_columns(N, lambda k: pow_int(ratio, k).scale(Fraction(1, factorial(k))))


def lah_closed_form(N: int) -> TriangleTable:
    """``L(n, k) = n!/k! * C(n-1, k-1)`` with ``L(0, 0) = 1``."""
    rows = []
    for n in range(N + 1):
        row = [1 if n == 0 else 0]
        row += [Fraction(factorial(n), factorial(k)) * comb(n - 1, k - 1) for k in range(1, n + 1)]
        rows.append(row)
    return TriangleTable(rows)


def falling(x, n: int):
    """``(x)_n = x (x-1) ... (x-n+1)``."""
    out = 1
    for i in range(n):
        out *= x - i
    return out


def rising(x, n: int):
    """``<x>_n = x (x+1) ... (x+n-1)``."""
    out = 1
    for i in range(n):
        out *= x + i
    return out


def bell_poly(n: int, x) -> Fraction:
    """Bell (Touchard) polynomial ``phi_n(x) = sum_k {n, k} x^k``."""
    s2 = stirling2(n)
    x = Fraction(x)
    return sum((s2(n, k) * x**k for k in range(n + 1)), Fraction(0))


def fubini_r_series(n: int, r: int, x) -> Fraction:
    """``n! [t^n] (1 - x (e^t - 1))^{-r}``."""
    base = 1 - expm1(n).scale(Fraction(x))
    return pow_int(base, -r).egf()[n]


def fubini_r_sum(n: int, r: int, x) -> Fraction:
    """``sum_k {n, k} k! C(r+k-1, k) x^k``."""
    s2 = stirling2(n)
    x = Fraction(x)
    return sum(
        (s2(n, k) * factorial(k) * comb(r + k - 1, k) * x**k for k in range(n + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def fubini_r(n: int, r: int, x) -> Fraction:
    """Fubini polynomial of order ``r`` at ``x``, evaluated two ways."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    via_series = fubini_r_series(n, r, x)
    via_sum = fubini_r_sum(n, r, x)
    if via_series != via_sum:
        raise ArithmeticError(f"Fubini routes disagree at n={n}, r={r}, x={x}: {via_series} != {via_sum}")
    return via_sum


@lru_cache(maxsize=None)
def bernoulli_order(n: int, r: int) -> Fraction:
    """Higher-order Bernoulli number ``B_n^{(r)} = n! [t^n] (t / (e^t - 1))^r``."""
    if n < 0 or r < 0:
        raise ValueError("need n >= 0 and r >= 0")
    N = n + r
    q = divide(TruncSeries.monomial(r, N), pow_int(expm1(N), r))
    return q.egf()[n]
