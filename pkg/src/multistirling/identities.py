"""Exact verification of the multi-Stirling identities.

Every ``verify_*`` function returns a :class:`VerificationReport` listing, for
each tested ``n``, whether both sides agree exactly; mismatches keep the two
rational values so a failure can be reproduced.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from . import classical
from .families import (
    multi_bernoulli,
    multi_lah,
    multi_stirling2,
    unsigned_multi_stirling1,
)
from .multilog import as_index, format_index, li_series
from .series import (
    compose,
    divide,
    expm1,
    integrate,
    mul,
    nested_map,
    one_minus_exp_neg,
    pow_int,
)

log = logging.getLogger(__name__)

THEOREMS = ("1", "2", "3", "4", "5", "6", "7")
DEFAULT_ENTRIES = (-1, 0, 1, 2, 3)
DEFAULT_DEPTH = 3
DEFAULT_MAX_N = 10


@dataclass
class Failure:
    n: int
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {"n": self.n, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class VerificationReport:
    theorem: str
    index: tuple
    range: tuple
    outcomes: dict = field(default_factory=dict)  # n -> bool
    failures: list = field(default_factory=list)
    notes: str = ""
    error: str = ""

    @property
    def passed(self) -> bool:
        return not self.error and not self.failures and all(self.outcomes.values())

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "index": format_index(self.index),
            "range": list(self.range),
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "notes": self.notes,
        }


def _run(theorem, index, ns, sides: Callable[[int], Iterable[tuple]], notes="") -> VerificationReport:
    """Evaluate ``sides(n)`` (pairs of lhs/rhs) for every ``n``; one witness per failing ``n``."""
    ns = list(ns)
    report = VerificationReport(theorem, tuple(index), (ns[0], ns[-1]) if ns else (0, -1), notes=notes)
    for n in ns:
        ok = True
        for lhs, rhs in sides(n):
            if lhs != rhs:
                ok = False
                report.failures.append(Failure(n, lhs, rhs))
                break
        report.outcomes[n] = ok
    return report


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def verify_theorem1(r: int, max_n: int) -> VerificationReport:
    """All-ones index collapses to the Stirling numbers of the second kind.

    Besides the table comparison, the series ``Li_{1^j}(1 - e^{1-e^t})`` is
    rebuilt for ``j = 1 .. max(r, 3)`` by repeatedly integrating
    ``e^t Li_{1^{j-1}}``, and compared with ``(e^t - 1)^j / j!``.
    """
    _need(1 <= r <= max_n, "need 1 <= r <= max_n")
    index = (1,) * r
    table = multi_stirling2(index, max_n)
    s2 = classical.stirling2(max_n)

    x = nested_map(max_n)
    e = expm1(max_n)
    exp_t = e + 1
    chain = []
    integrated = e  # Li_1(1 - e^{1-e^t}) = e^t - 1
    for j in range(1, max(r, 3) + 1):
        if j > 1:
            integrated = integrate(mul(exp_t, integrated)).truncate(max_n)
        direct = compose(li_series((1,) * j, max_n), x)
        closed = pow_int(e, j).scale(Fraction(1, factorial(j)))
        chain.append((direct.egf(), integrated.egf(), closed.egf()))

    def sides(n):
        yield table[n], s2(n, r)
        for direct, integrated, closed in chain:
            yield direct[n], closed[n]
            yield integrated[n], closed[n]

    return _run("1", index, range(0, max_n + 1), sides)


def verify_theorem2(prefix, max_n: int) -> VerificationReport:
    """``{n+1; k_1..k_{r-1},1} = sum_m C(n,m) {m; k_1..k_{r-1}}``."""
    prefix = as_index(prefix)
    _need(len(prefix) >= 1, "prefix must have depth >= 1")
    r = len(prefix) + 1
    _need(max_n >= r, "need max_n >= r")
    full = multi_stirling2(prefix + (1,), max_n)
    part = multi_stirling2(prefix, max_n)

    def sides(n):
        rhs = sum((comb(n, m) * part[m] for m in range(r - 1, n + 1)), Fraction(0))
        yield full[n + 1], rhs

    return _run("2", prefix, range(r - 1, max_n), sides)


def regularized_bernoulli_stirling(index, max_n: int) -> list[Fraction]:
    """``n! [t^n] Li(1 - e^{1-e^t}) / (1 - e^{1-e^t})^r`` for ``n <= max_n``."""
    index = as_index(index)
    r = len(index)
    N = max_n + r
    x = nested_map(N)
    q = divide(compose(li_series(index, N), x), pow_int(x, r))
    return q.egf()[: max_n + 1]


def _bernoulli_stirling_sum(index, max_n: int) -> list[Fraction]:
    B = multi_bernoulli(index, max_n)
    s2 = classical.stirling2(max_n)
    return [sum((B[m] * s2(n, m) for m in range(n + 1)), Fraction(0)) for n in range(max_n + 1)]


def verify_theorem3(index, max_n: int) -> VerificationReport:
    """``sum_m B_m^{(index)} {n, m}`` against the regularized generating function.

    The printed right-hand side sums ``C(r+l-1, l) phi_j(-l)`` over all
    ``l >= 0``, which diverges termwise; the identity is checked through the
    generating function it was derived from instead.  The printed clause that
    the sum vanishes for ``n < r`` is evaluated and any counterexamples are
    recorded in ``notes`` (see :func:`verify_theorem3_vanishing`).
    """
    index = as_index(index)
    r = len(index)
    _need(max_n >= r, "need max_n >= r")
    lhs = _bernoulli_stirling_sum(index, max_n)
    rhs = regularized_bernoulli_stirling(index, max_n)
    vanishing = verify_theorem3_vanishing(index, max_n)
    notes = "regularized form used"
    if not vanishing.passed:
        bad = ", ".join(f"n={f.n}: {f.lhs}" for f in vanishing.failures)
        notes += f"; printed vanishing clause for n < r does not hold ({bad})"

    def sides(n):
        yield lhs[n], rhs[n]

    return _run("3", index, range(0, max_n + 1), sides, notes=notes)


def verify_theorem3_vanishing(index, max_n: int) -> VerificationReport:
    """The printed clause ``sum_m B_m^{(index)} {n, m} = 0`` for ``0 <= n < r``."""
    index = as_index(index)
    r = len(index)
    top = min(r - 1, max_n)
    lhs = _bernoulli_stirling_sum(index, max(top, 0))

    def sides(n):
        yield lhs[n], Fraction(0)

    return _run("3-vanishing", index, range(0, top + 1), sides)


def theorem3_abel_partial_sums(r: int, j: int, x, L: int) -> list[Fraction]:
    """Partial sums ``sum_{l <= L'} C(r+l-1, l) x^l phi_j(-l)`` for ``L' = 0..L``.

    Diagnostic only: the ``x -> 1`` limit of these is what the printed
    ``l``-sum would need, and it is never used as a pass/fail criterion.
    """
    x = Fraction(x)
    out, acc = [], Fraction(0)
    for l in range(L + 1):
        acc += comb(r + l - 1, l) * x**l * classical.bell_poly(j, -l)
        out.append(acc)
    return out


def verify_theorem4(index, max_n: int) -> VerificationReport:
    """``{n; index} = sum_{l,m} (-1)^(l-m) {n, l}{l, m}[m; index]``."""
    index = as_index(index)
    r = len(index)
    _need(max_n >= r, "need max_n >= r")
    second = multi_stirling2(index, max_n)
    first = unsigned_multi_stirling1(index, max_n)
    s2 = classical.stirling2(max_n)

    def sides(n):
        rhs = Fraction(0)
        for l in range(r, n + 1):
            for m in range(r, l + 1):
                rhs += (-1) ** (l - m) * s2(n, l) * s2(l, m) * first[m]
        yield second[n], rhs

    return _run("4", index, range(r, max_n + 1), sides)


def verify_theorem5(index, max_n: int) -> VerificationReport:
    """``sum_k {n, k} L^{(index)}(k, r) = sum_k {k; index} C(n, k) F_{n-k}^{(r)}(1)``."""
    index = as_index(index)
    r = len(index)
    _need(max_n >= r, "need max_n >= r")
    second = multi_stirling2(index, max_n)
    lah_t = multi_lah(index, max_n)
    s2 = classical.stirling2(max_n)

    def sides(n):
        lhs = sum((s2(n, k) * lah_t[k] for k in range(r, n + 1)), Fraction(0))
        rhs = sum(
            (second[k] * comb(n, k) * classical.fubini_r(n - k, r, 1) for k in range(r, n + 1)),
            Fraction(0),
        )
        yield lhs, rhs

    return _run("5", index, range(r, max_n + 1), sides)


def _li_one_minus_exp_neg(index, max_n: int) -> list[Fraction]:
    return compose(li_series(index, max_n), one_minus_exp_neg(max_n)).egf()


def _literal_note(index, max_n, second, s1, rhs_of, scale=Fraction(1)) -> str:
    # printed statement uses {n; index} where the derivation produces {m; index}
    r = len(index)
    bad = []
    for n in range(r, max_n + 1):
        literal = scale * sum((second[n] * s1(n, m) for m in range(r, n + 1)), Fraction(0))
        if literal != rhs_of(n):
            bad.append(n)
    if not bad:
        return "printed statement with {n; index} in the summand also holds"
    return "printed statement with {n; index} in the summand fails at n=" + ",".join(map(str, bad))


def verify_theorem6(index, max_n: int) -> VerificationReport:
    """``sum_m {m; index} S_1(n, m) = sum_m n!/m! L^{(index)}(m, r) C(r, n-m) (-1)^(n-m)``.

    Also checks that the left side equals ``n! [t^n] Li(1 - e^{-t})``.
    """
    index = as_index(index)
    r = len(index)
    _need(max_n >= r, "need max_n >= r")
    second = multi_stirling2(index, max_n)
    lah_t = multi_lah(index, max_n)
    s1 = classical.stirling1_signed(max_n)
    direct = _li_one_minus_exp_neg(index, max_n)

    def lhs_of(n):
        return sum((second[m] * s1(n, m) for m in range(r, n + 1)), Fraction(0))

    def rhs_of(n):
        return sum(
            (
                Fraction(factorial(n), factorial(m)) * lah_t[m] * comb(r, n - m) * (-1) ** (n - m)
                for m in range(r, n + 1)
            ),
            Fraction(0),
        )

    def sides(n):
        lhs = lhs_of(n)
        yield lhs, rhs_of(n)
        yield lhs, direct[n]

    notes = "corrected summand {m; index}; " + _literal_note(index, max_n, second, s1, rhs_of)
    return _run("6", index, range(r, max_n + 1), sides, notes=notes)


def verify_theorem7(index, max_n: int) -> VerificationReport:
    """``(1/r!) sum_m {m; index} S_1(n, m) = sum_j {j, r} (-1)^(j-r) C(n, j) B_{n-j}^{(index)}``.

    Also checks that ``r!`` times the right side equals ``n! [t^n] Li(1 - e^{-t})``.
    """
    index = as_index(index)
    r = len(index)
    _need(max_n >= r, "need max_n >= r")
    second = multi_stirling2(index, max_n)
    B = multi_bernoulli(index, max_n)
    s1 = classical.stirling1_signed(max_n)
    s2 = classical.stirling2(max_n)
    direct = _li_one_minus_exp_neg(index, max_n)
    inv_rfact = Fraction(1, factorial(r))

    def rhs_of(n):
        return sum(
            (s2(j, r) * (-1) ** (j - r) * comb(n, j) * B[n - j] for j in range(r, n + 1)),
            Fraction(0),
        )

    def sides(n):
        lhs = inv_rfact * sum((second[m] * s1(n, m) for m in range(r, n + 1)), Fraction(0))
        rhs = rhs_of(n)
        yield lhs, rhs
        yield factorial(r) * rhs, direct[n]

    notes = "corrected summand {m; index}; " + _literal_note(index, max_n, second, s1, rhs_of, inv_rfact)
    return _run("7", index, range(r, max_n + 1), sides, notes=notes)


def default_grid(depth: int = DEFAULT_DEPTH, entries: Sequence[int] = DEFAULT_ENTRIES) -> list[tuple]:
    """Every index of depth ``1..depth`` with entries from ``entries``, sorted."""
    return sorted(ks for r in range(1, depth + 1) for ks in product(entries, repeat=r))


@dataclass
class SuiteConfig:
    indices: list = field(default_factory=default_grid)
    max_n: int = DEFAULT_MAX_N
    theorems: Sequence[str] = THEOREMS


def _cells(config: SuiteConfig):
    indices = [as_index(ix) for ix in config.indices]
    for thm in sorted({str(t) for t in config.theorems}, key=THEOREMS.index):
        if thm == "1":
            for r in sorted({len(ix) for ix in indices}):
                yield thm, (1,) * r, lambda r=r: verify_theorem1(r, config.max_n)
            continue
        fn = {
            "2": verify_theorem2,
            "3": verify_theorem3,
            "4": verify_theorem4,
            "5": verify_theorem5,
            "6": verify_theorem6,
            "7": verify_theorem7,
        }[thm]
        for ix in indices:
            yield thm, ix, lambda fn=fn, ix=ix: fn(ix, config.max_n)


def run_suite(config: SuiteConfig | None = None) -> list[VerificationReport]:
    """Run every selected (theorem, index) cell; errors become failed reports."""
    config = config or SuiteConfig()
    unknown = {str(t) for t in config.theorems} - set(THEOREMS)
    if unknown:
        raise ValueError(f"unknown theorems: {sorted(unknown)}")
    reports = []
    for thm, ix, run in _cells(config):
        try:
            report = run()
        except Exception as exc:  # one bad cell must not stop the suite
            log.exception("theorem %s at %s raised", thm, format_index(ix))
            report = VerificationReport(thm, ix, (0, -1), error=str(exc), notes=f"error: {exc}")
        reports.append(report)
    return reports
