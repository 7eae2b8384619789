"""Exact truncated formal power series over the rationals.

A :class:`TruncSeries` holds the coefficients ``c_0 .. c_N`` of a power series
in ``t``; ``N`` is the truncation order (inclusive).  Coefficients beyond the
order are unknown, not zero, so binary operations insist on equal orders and
operations that lose information (division by a series of positive valuation,
differentiation) return a series of lower order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    """Raised when an operation is undefined for the given truncated series."""


class TruncSeries:
    """Immutable truncated power series ``c_0 + c_1 t + ... + c_N t^N``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise SeriesError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "_coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # construction helpers

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> TruncSeries:
        return cls([c] + [0] * order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> TruncSeries:
        """``c * t**k`` at the given order (zero if ``k > order``)."""
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs)

    @classmethod
    def from_egf(cls, values: Sequence[Scalar]) -> TruncSeries:
        """Series whose ``n!``-normalized coefficients are ``values``."""
        return cls(Fraction(v) / factorial(n) for n, v in enumerate(values))

    # basic accessors

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n):
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; ``order + 1`` for zero."""
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncSeries(self._coeffs[: order + 1])

    def egf(self) -> list[Fraction]:
        """All ``n!``-normalized coefficients."""
        return [factorial(n) * c for n, c in enumerate(self._coeffs)]

    def scale(self, c: Scalar) -> TruncSeries:
        c = Fraction(c)
        return TruncSeries(c * a for a in self._coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncSeries([{', '.join(str(c) for c in self._coeffs)}])"

    # operator sugar over the module-level functions

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return divide(self, other)

    def __pow__(self, e: int):
        return pow_int(self, e)

    def __call__(self, g: TruncSeries) -> TruncSeries:
        return compose(self, g)


def _same_order(f: TruncSeries, g: TruncSeries) -> int:
    if f.order != g.order:
        raise SeriesError(f"order mismatch: {f.order} vs {g.order}")
    return f.order


def add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    _same_order(f, g)
    return TruncSeries(a + b for a, b in zip(f, g))


def mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Truncated Cauchy product."""
    n = _same_order(f, g)
    a, b = f.coeffs, g.coeffs
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b[j]
    return TruncSeries(out)


def _inverse_unit(g: Sequence[Fraction]) -> list[Fraction]:
    # reciprocal of a series with invertible constant term
    n = len(g) - 1
    inv0 = 1 / g[0]
    h = [inv0] + [Fraction(0)] * n
    for k in range(1, n + 1):
        s = sum((g[i] * h[k - i] for i in range(1, k + 1)), Fraction(0))
        h[k] = -s * inv0
    return h


def divide(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Quotient ``f / g``.

    Both series are shifted down by ``v = valuation(g)`` before long division,
    so the result has order ``f.order - v``.
    """
    _same_order(f, g)
    if g.is_zero():
        raise SeriesError("division by the zero series")
    v = g.valuation()
    if v > f.valuation():
        raise SeriesError("not divisible as regular series")
    num = f.coeffs[v:]
    den = g.coeffs[v:]
    m = len(num) - 1
    q = [Fraction(0)] * (m + 1)
    inv0 = 1 / den[0]
    for k in range(m + 1):
        s = num[k] - sum((den[i] * q[k - i] for i in range(1, k + 1)), Fraction(0))
        q[k] = s * inv0
    return TruncSeries(q)


def compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """``f(g(t))`` by Horner's scheme; requires ``g[0] == 0``."""
    n = _same_order(f, g)
    if g[0] != 0:
        raise SeriesError("composition requires zero constant term")
    acc = TruncSeries.constant(f[n], n)
    for c in reversed(f.coeffs[:n]):
        acc = mul(acc, g)
        acc = TruncSeries((c + acc[0],) + acc.coeffs[1:])
    return acc


def _require_zero_constant(f: TruncSeries, what: str) -> None:
    if f[0] != 0:
        raise SeriesError(f"{what} requires zero constant term")


def exp_series(f: TruncSeries, method: str = "ode") -> TruncSeries:
    """``exp(f)`` for ``f[0] == 0``.

    ``method="ode"`` solves ``E' = f' E`` coefficient by coefficient;
    ``method="horner"`` sums ``f^m / m!`` by Horner's scheme.
    """
    _require_zero_constant(f, "exp")
    n = f.order
    if method == "ode":
        e = [Fraction(1)] + [Fraction(0)] * n
        # k e_k = sum_{j=1}^{k} j f_j e_{k-j}
        for k in range(1, n + 1):
            s = sum((j * f[j] * e[k - j] for j in range(1, k + 1)), Fraction(0))
            e[k] = s / k
        return TruncSeries(e)
    if method == "horner":
        acc = TruncSeries.one(n)
        for m in range(n, 0, -1):
            acc = mul(acc, f).scale(Fraction(1, m)) + 1
        return acc
    raise ValueError(f"unknown method {method!r}")


def log1p_series(f: TruncSeries, method: str = "ode") -> TruncSeries:
    """``log(1 + f)`` for ``f[0] == 0``.

    ``method="ode"`` integrates ``f' / (1 + f)``; ``method="horner"`` sums
    ``(-1)^(m+1) f^m / m``.
    """
    _require_zero_constant(f, "log1p")
    n = f.order
    if method == "ode":
        if n == 0:
            return TruncSeries.zero(0)
        one_plus = (f + 1).truncate(n - 1)
        return integrate(divide(derivative(f), one_plus))
    if method == "horner":
        acc = TruncSeries.zero(n)
        for m in range(n, 0, -1):
            sign = 1 if m % 2 else -1
            acc = mul(acc + Fraction(sign, m), f)
        return acc
    raise ValueError(f"unknown method {method!r}")


def pow_int(f: TruncSeries, e: int) -> TruncSeries:
    """``f**e`` for integer ``e``; negative powers need ``f[0] != 0``."""
    if e < 0:
        if f[0] == 0:
            raise SeriesError("negative power of a series with zero constant term")
        return TruncSeries(_inverse_unit(pow_int(f, -e).coeffs))
    result = TruncSeries.one(f.order)
    base = f
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def derivative(f: TruncSeries) -> TruncSeries:
    """Termwise derivative; the result has order ``N - 1``."""
    if f.order == 0:
        raise SeriesError("derivative of an order-0 series is empty")
    return TruncSeries(n * c for n, c in enumerate(f.coeffs) if n)


def integrate(f: TruncSeries) -> TruncSeries:
    """``int_0^t f``; the result has order ``N + 1`` and constant term 0."""
    return TruncSeries([0] + [c / (n + 1) for n, c in enumerate(f.coeffs)])


def nfact_coeff(f: TruncSeries, n: int) -> Fraction:
    """``n! [t^n] f``."""
    if not 0 <= n <= f.order:
        raise SeriesError(f"coefficient {n} outside 0..{f.order}")
    return factorial(n) * f[n]


# standard series, all with zero constant term


def identity(order: int) -> TruncSeries:
    return TruncSeries.monomial(1, order)


def expm1(order: int) -> TruncSeries:
    """``e^t - 1``."""
    return TruncSeries([0] + [Fraction(1, factorial(n)) for n in range(1, order + 1)])


def one_minus_exp_neg(order: int) -> TruncSeries:
    """``1 - e^{-t}``."""
    return TruncSeries(
        [0] + [Fraction((-1) ** (n + 1), factorial(n)) for n in range(1, order + 1)]
    )


def log1p_t(order: int) -> TruncSeries:
    """``log(1 + t)``."""
    return TruncSeries([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)])


def nested_map(order: int) -> TruncSeries:
    """``1 - e^{1 - e^t}``, built as ``1 - exp(-(e^t - 1))``."""
    return 1 - exp_series(-expm1(order))
