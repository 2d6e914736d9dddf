"""Exact rational arithmetic and the number-theoretic helpers used by the criteria.

Rationals are plain :class:`fractions.Fraction` values.  The p-adic valuation
of zero is ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]

INF = math.inf

# deterministic Miller-Rabin bases, valid for n < 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    raise TypeError(f"expected an exact rational, got {type(q).__name__}")


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n < 43 * 43:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError(f"primality of {n} is beyond the deterministic range")
    return True


def require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def _int_val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def nu_p(q: Rational, p: int) -> int | float:
    """p-adic valuation of a rational number; ``inf`` for zero."""
    require_prime(p)
    q = as_fraction(q)
    if q == 0:
        return INF
    return _int_val(q.numerator, p) - _int_val(q.denominator, p)


def is_p_integral(q: Rational, p: int) -> bool:
    return as_fraction(q).denominator % p != 0


def digit_sum(n: int, p: int) -> int:
    if n < 0:
        raise ValueError("digit_sum needs n >= 0")
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return s


def legendre_factorial_val(n: int, p: int) -> int:
    """Exponent of p in n!, via the base-p digit sum."""
    require_prime(p)
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return (n - digit_sum(n, p)) // (p - 1)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation of |n| by trial division, as sorted (prime, exponent) pairs."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def rad(k: int) -> int:
    """Largest squarefree divisor of k."""
    if k == 0:
        raise ValueError("rad(0) is undefined")
    return math.prod(p for p, _ in factorize(k))


def binom_rational(lam: Rational, n: int) -> Fraction:
    """Generalised binomial coefficient lam*(lam-1)*...*(lam-n+1)/n!."""
    if n < 0:
        raise ValueError("binomial index must be nonnegative")
    lam = as_fraction(lam)
    num = Fraction(1)
    for j in range(n):
        num *= lam - j
    return num / math.factorial(n)


@dataclass(frozen=True, order=True)
class PrimePower:
    """The modulus context p**(r+1) attached to the exponent 1/p**r."""

    p: int
    r: int

    def __post_init__(self):
        require_prime(self.p)
        if self.r < 0:
            raise ValueError(f"exponent r must be >= 0, got {self.r}")

    @property
    def q(self) -> int:
        return self.p**self.r

    def __str__(self):
        return f"{self.p}^{self.r}"


@dataclass(frozen=True)
class ExponentSpec:
    lam: Fraction
    numerator: int
    denominator_factors: tuple[PrimePower, ...]

    @property
    def is_integer(self) -> bool:
        return not self.denominator_factors


def factor_exponent(lam: Rational) -> ExponentSpec:
    lam = as_fraction(lam)
    factors = tuple(PrimePower(p, e) for p, e in factorize(lam.denominator)) if lam.denominator > 1 else ()
    return ExponentSpec(lam, lam.numerator, factors)
