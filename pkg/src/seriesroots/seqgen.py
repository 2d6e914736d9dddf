"""Coefficient families: k-central binomials and generalised trinomial coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import rad
from .criteria import ConsistencyError, Verdict, decide_rational_power
from .series import TruncatedSeries, pow_rational, power


def _as_ints(values, what):
    out = []
    for n, v in enumerate(values):
        if v.denominator != 1:
            raise ConsistencyError(f"{what}: term {n} = {v} is not an integer")
        out.append(v.numerator)
    return out


def k_central_product(k: int, n: int) -> int:
    """c(n, k) = k**n / n! * prod_{m=1}^{n-1} (1 + k m)."""
    num = k**n * math.prod(1 + k * m for m in range(1, n))
    q, rem = divmod(num, math.factorial(n))
    if rem:
        raise ConsistencyError(f"c({n}, {k}) is not an integer")
    return q


def k_central_binomials(k: int, count: int) -> list[int]:
    """First ``count`` coefficients of (1 - k**2 x)**(-1/k).

    Computed from the binomial series and cross-checked against the product
    formula.  For k > 0 every term must also be positive.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    if count < 1:
        raise ValueError("count must be >= 1")
    f = TruncatedSeries.polynomial([1, -k * k])
    series = _as_ints(pow_rational(f, Fraction(-1, k), count - 1).coeffs, f"c(n, {k})")
    product = [k_central_product(k, n) for n in range(count)]
    if series != product:
        raise ConsistencyError(f"series and product formula disagree for k = {k}")
    if k > 0 and any(c <= 0 for c in series):
        raise ConsistencyError(f"non-positive c(n, {k})")
    return series


def trinomial_coefficients(a: int, b: int, c: int, count: int) -> list[int]:
    """T_n(a, b, c) = [x^n] (a + b x + c x^2)**n for n < count.

    Cross-checked against the generating function (1 - 2b x + (b^2 - 4ac) x^2)**(-1/2),
    which depends on a and c only through ac.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    base = TruncatedSeries.polynomial([a, b, c])
    terms = [power(base, n)[n].numerator for n in range(count)]
    gf = TruncatedSeries.polynomial([1, -2 * b, b * b - 4 * a * c])
    expected = _as_ints(pow_rational(gf, Fraction(-1, 2), count - 1).coeffs, "trinomial series")
    if terms != expected:
        raise ConsistencyError(f"T_n({a}, {b}, {c}) disagrees with its generating function")
    return terms


@dataclass(frozen=True)
class SharpnessRow:
    a: int
    verdict: Verdict
    divisible: bool


def sharpness_certificate(k: int, a_max: int) -> list[SharpnessRow]:
    """Verify that (1 - a x)**(-1/k) is integral exactly when k*rad(k) divides a, for 1 <= a <= a_max."""
    if k == 0:
        raise ValueError("k must be nonzero")
    m = abs(k) * rad(k)
    if a_max < m:
        raise ValueError(f"a_max must be at least k*rad(k) = {m}")
    rows = []
    lam = Fraction(-1, k)
    for a in range(1, a_max + 1):
        verdict = decide_rational_power(TruncatedSeries.polynomial([1, -a]), lam, witnesses=False).overall
        row = SharpnessRow(a, verdict, a % m == 0)
        if (verdict is Verdict.INTEGRAL) != row.divisible:
            raise ConsistencyError(f"k = {k}, a = {a}: verdict {verdict} but k*rad(k) = {m}")
        rows.append(row)
    return rows
