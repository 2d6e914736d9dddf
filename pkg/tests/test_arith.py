import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seriesroots.arith import (
    INF,
    PrimePower,
    binom_rational,
    digit_sum,
    factor_exponent,
    is_prime,
    legendre_factorial_val,
    nu_p,
    rad,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda q: q != 0)
primes = st.sampled_from([2, 3, 5, 7, 11])


def factor_count(n, p):
    """Exponent of p in n! by dividing every factor out."""
    total = 0
    for m in range(2, n + 1):
        while m % p == 0:
            m //= p
            total += 1
    return total


def test_nu_p_examples():
    assert nu_p(0, 5) == INF
    assert nu_p(12, 2) == 2
    assert nu_p(Fraction(284, 3), 3) == -1


def test_nu_p_rejects_composite():
    with pytest.raises(ValueError):
        nu_p(12, 4)


@given(rationals, rationals, primes)
def test_nu_p_multiplicative(a, b, p):
    assert nu_p(a * b, p) == nu_p(a, p) + nu_p(b, p)


@given(rationals, rationals, primes)
def test_nu_p_ultrametric(a, b, p):
    va, vb = nu_p(a, p), nu_p(b, p)
    vs = nu_p(a + b, p)
    assert vs >= min(va, vb)
    if va != vb:
        assert vs == min(va, vb)


def test_digit_sum():
    assert digit_sum(0, 3) == 0
    assert digit_sum(10, 2) == 2
    assert digit_sum(26, 3) == 6  # 26 = 222 in base 3


def test_legendre_examples():
    assert legendre_factorial_val(0, 7) == 0
    assert legendre_factorial_val(10, 2) == 10 // 2 + 10 // 4 + 10 // 8 == 8
    assert legendre_factorial_val(26, 3) == 26 // 3 + 26 // 9 == 10


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_legendre_matches_direct_count(p):
    for n in range(501):
        assert legendre_factorial_val(n, p) == factor_count(n, p)


def test_rad_examples():
    assert rad(4) == 2
    assert rad(24) == 6
    assert rad(1) == 1
    assert rad(-12) == 6
    with pytest.raises(ValueError):
        rad(0)


def test_rad_properties():
    for k in range(-100, 101):
        if k == 0:
            continue
        r = rad(k)
        assert abs(k) % r == 0
        assert all(r % (q * q) for q in range(2, r + 1) if is_prime(q))
        for q in range(2, abs(k) + 1):
            if is_prime(q) and k % q == 0:
                assert r % q == 0


def test_binom_examples():
    assert binom_rational(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_rational(5, 2) == 10
    assert binom_rational(Fraction(-1, 4), 0) == 1
    # (-1/4)(-5/4)(-9/4) / 3!
    assert binom_rational(Fraction(-1, 4), 3) == Fraction(-1 * -5 * -9, 64 * 6) == Fraction(-15, 128)


def test_binom_integer_agrees_with_comb():
    for n in range(12):
        for k in range(n + 3):
            assert binom_rational(n, k) == math.comb(n, k)


@pytest.mark.parametrize(
    "lam, p",
    [(Fraction(1, 2), 2), (Fraction(-1, 6), 2), (Fraction(-1, 6), 3), (Fraction(5, 9), 3), (Fraction(-7, 25), 5), (Fraction(3, 8), 2)],
)
def test_binom_valuation_for_negative_val_exponent(lam, p):
    v = nu_p(lam, p)
    assert v < 0
    for n in range(61):
        assert nu_p(binom_rational(lam, n), p) == n * v - legendre_factorial_val(n, p)


small = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@given(small, small, st.integers(0, 20))
def test_vandermonde(lam, mu, n):
    lhs = sum(binom_rational(lam, k) * binom_rational(mu, n - k) for k in range(n + 1))
    assert lhs == binom_rational(lam + mu, n)


def test_factor_exponent():
    spec = factor_exponent(Fraction(-1, 6))
    assert spec.numerator == -1
    assert spec.denominator_factors == (PrimePower(2, 1), PrimePower(3, 1))
    spec = factor_exponent(3)
    assert spec.numerator == 3 and spec.denominator_factors == () and spec.is_integer
    spec = factor_exponent(Fraction(5, 8))
    assert spec.numerator == 5 and spec.denominator_factors == (PrimePower(2, 3),)


@given(st.fractions(max_denominator=5000))
def test_factor_exponent_reassembles(lam):
    spec = factor_exponent(lam)
    assert math.prod(pp.p**pp.r for pp in spec.denominator_factors) == lam.denominator
    assert len({pp.p for pp in spec.denominator_factors}) == len(spec.denominator_factors)
    assert all(spec.numerator % pp.p for pp in spec.denominator_factors)


def test_prime_power_validation():
    with pytest.raises(ValueError):
        PrimePower(4, 1)
    with pytest.raises(ValueError):
        PrimePower(3, -1)
    assert PrimePower(2, 0).q == 1


def test_is_prime_against_sieve():
    sieve = [True] * 5000
    sieve[0] = sieve[1] = False
    for i in range(2, 5000):
        if sieve[i]:
            for j in range(i * i, 5000, i):
                sieve[j] = False
    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if sieve[n]]
    assert is_prime(2**61 - 1)
    assert not is_prime(561)
    assert not is_prime(3_215_031_751)  # strong pseudoprime to bases 2, 3, 5, 7
