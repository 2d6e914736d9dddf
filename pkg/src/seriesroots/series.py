"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` is either a polynomial (every coefficient past the
stored ones is exactly zero) or a genuine truncation, known only through
degree ``order``.  Operations propagate that horizon and refuse to read past
it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import INF, Rational, as_fraction, nu_p, require_prime


class HorizonError(ValueError):
    """Raised when a coefficient beyond the known truncation order is requested."""


def _lcm_den(coeffs: Iterable[Fraction]) -> int:
    d = 1
    for c in coeffs:
        if c.denominator != 1:
            d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def _scaled(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = _lcm_den(coeffs)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Integer Cauchy product, coefficients 0..n-1."""
    out = [0] * n
    nz_b = [(j, y) for j, y in enumerate(b[:n]) if y]
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        lim = n - i
        for j, y in nz_b:
            if j >= lim:
                break
            out[i + j] += x * y
    return out


class TruncatedSeries:
    __slots__ = ("coeffs", "order", "is_polynomial")

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None, is_polynomial: bool = False):
        cs = [as_fraction(c) for c in coeffs]
        if not cs:
            cs = [Fraction(0)]
        if is_polynomial:
            while len(cs) > 1 and cs[-1] == 0:
                cs.pop()
            order = len(cs) - 1
        else:
            if order is None:
                order = len(cs) - 1
            if order < 0:
                raise ValueError("truncation order must be >= 0")
            if len(cs) <= order:
                raise ValueError(f"{len(cs)} coefficients given for order {order}")
            cs = cs[: order + 1]
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order: int = order
        self.is_polynomial: bool = is_polynomial

    # -- constructors -------------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs: Iterable[Rational]) -> TruncatedSeries:
        return cls(coeffs, is_polynomial=True)

    @classmethod
    def truncated(cls, coeffs: Iterable[Rational], order: int | None = None) -> TruncatedSeries:
        cs = list(coeffs)
        if order is not None and len(cs) <= order:
            cs += [0] * (order + 1 - len(cs))
        return cls(cs, order)

    @classmethod
    def one(cls) -> TruncatedSeries:
        return cls.polynomial([1])

    @classmethod
    def x(cls) -> TruncatedSeries:
        return cls.polynomial([0, 1])

    # -- access -------------------------------------------------------------

    @property
    def horizon(self) -> int | float:
        """Highest degree whose coefficient is known; ``inf`` for polynomials."""
        return INF if self.is_polynomial else self.order

    @property
    def degree(self) -> int:
        return self.order

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(n)
        if n <= self.order:
            return self.coeffs[n]
        if self.is_polynomial:
            return Fraction(0)
        raise HorizonError(f"coefficient {n} lies beyond truncation order {self.order}")

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def coefficients(self, upto: int) -> list[Fraction]:
        return [self[n] for n in range(upto + 1)]

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.horizon:
            raise HorizonError(f"cannot extend a series known to order {self.order} up to {order}")
        return TruncatedSeries.truncated([self[n] for n in range(order + 1)], order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.coeffs, self.order, self.is_polynomial) == (other.coeffs, other.order, other.is_polynomial)

    def __hash__(self):
        return hash((self.coeffs, self.order, self.is_polynomial))

    def __repr__(self):
        kind = "polynomial" if self.is_polynomial else f"order={self.order}"
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coeffs)}], {kind})"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            if n and abs(c) == 1:
                s = mono
            elif n:
                s = f"{abs(c)}*{mono}" if c.denominator != 1 else f"{abs(c)}{mono}"
            else:
                s = str(abs(c))
            terms.append(("-" if c < 0 else "+", s))
        if not terms:
            body = "0"
        else:
            sign, s = terms[0]
            body = ("-" if sign == "-" else "") + s
            body += "".join(f" {sign} {s}" for sign, s in terms[1:])
        return body if self.is_polynomial else f"{body} + O(x^{self.order + 1})"

    # -- ring operations ----------------------------------------------------

    def _result_order(self, other: TruncatedSeries) -> int | None:
        """Order for a binary result, ``None`` when the result stays a polynomial."""
        if self.is_polynomial and other.is_polynomial:
            return None
        return int(min(self.horizon, other.horizon))

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = self._result_order(other)
        n = max(self.order, other.order) if order is None else order
        cs = [self[k] + other[k] for k in range(n + 1)]
        return TruncatedSeries.polynomial(cs) if order is None else TruncatedSeries(cs, order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.is_polynomial)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Rational) -> TruncatedSeries:
        c = as_fraction(c)
        return TruncatedSeries([c * a for a in self.coeffs], self.order, self.is_polynomial)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = self._result_order(other)
        n = self.order + other.order + 1 if order is None else order + 1
        a, da = _scaled(self.coeffs[:n])
        b, db = _scaled(other.coeffs[:n])
        den = da * db
        prod = _convolve(a, b, n)
        cs = [Fraction(v, den) for v in prod]
        return TruncatedSeries.polynomial(cs) if order is None else TruncatedSeries(cs, order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return power(self, n)


def power(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """f**n for an integer n >= 0 by binary exponentiation."""
    if n < 0:
        raise ValueError("use pow_rational or inverse for negative exponents")
    result = TruncatedSeries.one()
    if not f.is_polynomial:
        result = result.truncate(f.order)
    base = f
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def _target_order(f: TruncatedSeries, order: int | None, what: str) -> int:
    if order is None:
        if f.is_polynomial:
            raise ValueError(f"{what} of a polynomial needs an explicit truncation order")
        return f.order
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    if order > f.horizon:
        raise HorizonError(f"{what} up to order {order} needs input known past order {f.order}")
    return order


def inverse(f: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    a0 = f[0]
    if a0 == 0:
        raise ValueError("series with zero constant term is not invertible")
    if f.is_polynomial and f.order == 0:
        return TruncatedSeries.polynomial([1 / a0])
    N = _target_order(f, order, "inverse")
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, N + 1):
        s = sum((f[k] * b[n - k] for k in range(1, min(n, f.order) + 1)), Fraction(0))
        b.append(-inv0 * s)
    return TruncatedSeries(b, N)


def pow_rational(f: TruncatedSeries, lam: Rational, N: int) -> TruncatedSeries:
    """f**lam truncated at degree N, by the binomial sum over (f - 1)**n.

    Evaluated over the integers with one common denominator so the inner
    products avoid per-term gcds.
    """
    lam = as_fraction(lam)
    if f[0] != 1:
        raise ValueError("rational powers need constant term 1")
    if N < 0:
        raise ValueError("truncation order must be >= 0")
    if N > f.horizon:
        raise HorizonError(f"power up to order {N} needs input known past order {f.order}")
    u, e = _scaled([Fraction(0)] + [f[k] for k in range(1, N + 1)])
    a, d = lam.numerator, lam.denominator
    de = d * e
    # weight_n = binom(lam, n) * D / e**n with D = (d*e)**N * N!
    acc = [0] * (N + 1)
    acc[0] = de**N * math.factorial(N)
    un = [1] + [0] * N
    falling = 1  # a (a - d) ... (a - (n-1) d)
    fact_ratio = math.factorial(N)  # N!/n!
    for n in range(1, N + 1):
        falling *= a - (n - 1) * d
        if falling == 0:
            break
        fact_ratio //= n
        un = _convolve(un, u, N + 1)
        if not any(un):
            break
        w = falling * de ** (N - n) * fact_ratio
        for m in range(n, N + 1):
            if un[m]:
                acc[m] += w * un[m]
    D = de**N * math.factorial(N)
    return TruncatedSeries([Fraction(c, D) for c in acc], N)


def exp_series(f: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    if f[0] != 0:
        raise ValueError("exp needs constant term 0")
    N = _target_order(f, order, "exp")
    e = [Fraction(1)]
    for n in range(1, N + 1):
        s = sum((k * f[k] * e[n - k] for k in range(1, n + 1) if f[k]), Fraction(0))
        e.append(s / n)
    return TruncatedSeries(e, N)


def log_series(f: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    if f[0] != 1:
        raise ValueError("log needs constant term 1")
    N = _target_order(f, order, "log")
    lg = [Fraction(0)]
    for n in range(1, N + 1):
        s = n * f[n] - sum((k * lg[k] * f[n - k] for k in range(1, n)), Fraction(0))
        lg.append(s / n)
    return TruncatedSeries(lg, N)


def substitute_x_to_xp(f: TruncatedSeries, p: int) -> TruncatedSeries:
    """f(x**p).  A truncated input keeps its order N as the result's horizon."""
    if p < 1:
        raise ValueError("substitution power must be >= 1")
    if f.is_polynomial:
        cs = [Fraction(0)] * (f.order * p + 1)
        for n, c in enumerate(f.coeffs):
            cs[n * p] = c
        return TruncatedSeries.polynomial(cs)
    N = f.order
    cs = [Fraction(0)] * (N + 1)
    for n in range(N // p + 1):
        cs[n * p] = f.coeffs[n]
    return TruncatedSeries(cs, N)


def stride_subseries(f: TruncatedSeries, s: int) -> TruncatedSeries:
    """The series sum_j f[s*j] x**j."""
    if s < 1:
        raise ValueError("stride must be >= 1")
    cs = f.coeffs[::s]
    if f.is_polynomial:
        return TruncatedSeries.polynomial(cs)
    return TruncatedSeries(cs, f.order // s)


@dataclass(frozen=True)
class Congruence:
    """Outcome of a coefficientwise congruence test.

    On failure ``index`` is the smallest degree where the difference has
    p-adic valuation below the modulus exponent and ``valuation`` is that
    valuation.
    """

    holds: bool
    upto: int
    index: int | None = None
    valuation: int | None = None

    def __bool__(self):
        return self.holds


def default_horizon(*series: TruncatedSeries) -> int:
    h = min(s.horizon for s in series)
    if h == INF:
        return max(s.order for s in series)
    return int(h)


def congruent_mod_pk(f: TruncatedSeries, g: TruncatedSeries, p: int, k: int, upto: int | None = None) -> Congruence:
    require_prime(p)
    if k < 0:
        raise ValueError("modulus exponent must be >= 0")
    limit = min(f.horizon, g.horizon)
    if upto is None:
        upto = default_horizon(f, g)
    elif upto > limit:
        raise HorizonError(f"congruence up to degree {upto} but inputs are only known to degree {limit}")
    for m in range(upto + 1):
        diff = f[m] - g[m]
        if diff == 0:
            continue
        v = nu_p(diff, p)
        if v < k:
            return Congruence(False, upto, m, v)
    return Congruence(True, upto)
