import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seriesroots.arith import binom_rational, nu_p
from seriesroots.series import (
    HorizonError,
    TruncatedSeries,
    congruent_mod_pk,
    exp_series,
    inverse,
    log_series,
    pow_rational,
    power,
    stride_subseries,
    substitute_x_to_xp,
)

P = TruncatedSeries.polynomial
T = TruncatedSeries.truncated


def naive_pow(coeffs, lam, N):
    """sum_n binom(lam, n) (f - 1)^n with plain Fraction lists."""
    u = [Fraction(0)] + [Fraction(c) for c in coeffs[1 : N + 1]] + [Fraction(0)] * max(0, N + 1 - len(coeffs))
    u = u[: N + 1]
    out = [Fraction(0)] * (N + 1)
    un = [Fraction(1)] + [Fraction(0)] * N
    for n in range(N + 1):
        b = binom_rational(lam, n)
        for m in range(N + 1):
            out[m] += b * un[m]
        un = [sum(un[i] * u[m - i] for i in range(m + 1)) for m in range(N + 1)]
    return out


def unit_series(max_order=12, bound=20):
    return st.integers(1, max_order).flatmap(
        lambda n: st.lists(st.integers(-bound, bound), min_size=n, max_size=n).map(lambda cs: T([1] + cs, n))
    )


exponents = st.fractions(min_value=-3, max_value=3, max_denominator=9)


def test_ring_examples():
    assert P([1, 1]) * P([1, -1]) == P([1, 0, -1])
    f = P([3, 1, 4, 1])
    assert f * 1 == f
    assert f * TruncatedSeries.one() == f
    assert P([1, 2, 1]) * P([1, 1]) == P([1, 3, 3, 1])
    assert P([1, 2]) - P([1, 2]) == P([0])
    assert P([1, 2]) + P([0, 0, 5]) == P([1, 2, 5])


def test_orders_propagate():
    f = T([1, 1, 1, 1], 3)
    g = P([1, 1])
    assert (f * g).order == 3 and not (f * g).is_polynomial
    assert (f + T([1, 2, 3, 4, 5, 6], 5)).order == 3
    with pytest.raises(HorizonError):
        f[4]
    assert P([1, 1])[7] == 0


def test_inverse_examples():
    assert inverse(TruncatedSeries.one()) == TruncatedSeries.one()
    assert inverse(P([1, -1]), 6) == T([1] * 7, 6)
    assert inverse(P([1, 2]), 3) == T([1, -2, 4, -8], 3)
    with pytest.raises(ValueError):
        inverse(P([0, 1]), 3)


@given(unit_series())
def test_inverse_is_inverse(f):
    one = f * inverse(f)
    assert one == T([1], f.order)


def test_pow_rational_eq2():
    f = P([1, -12, 12, 8])
    assert pow_rational(f, Fraction(-1, 6), 5).coeffs == (1, 2, 12, 92, 784, 7056)


def test_pow_rational_zero_exponent():
    assert pow_rational(P([1, 5, 7]), 0, 4) == T([1], 4)


def test_pow_rational_central_binomials():
    got = pow_rational(P([1, -4]), Fraction(-1, 2), 20).coeffs
    assert list(got) == [math.comb(2 * n, n) for n in range(21)]


def test_pow_rational_needs_unit_constant():
    with pytest.raises(ValueError):
        pow_rational(P([2, 1]), Fraction(1, 2), 3)


@given(unit_series(8), exponents)
@settings(max_examples=60)
def test_pow_rational_matches_naive_sum(f, lam):
    assert list(pow_rational(f, lam, f.order).coeffs) == naive_pow(list(f.coeffs), lam, f.order)


@given(unit_series(10), st.integers(0, 6))
def test_pow_rational_integer_matches_repeated_mul(f, n):
    prod = T([1], f.order)
    for _ in range(n):
        prod = prod * f
    assert pow_rational(f, n, f.order) == prod
    assert power(f, n) == prod


@given(unit_series(10), exponents, exponents)
@settings(max_examples=60)
def test_power_laws(f, lam, mu):
    N = f.order
    assert pow_rational(f, lam, N) * pow_rational(f, mu, N) == pow_rational(f, lam + mu, N)
    assert pow_rational(pow_rational(f, lam, N), mu, N) == pow_rational(f, lam * mu, N)


@given(unit_series(10), st.sampled_from([2, 3, 4, 5, 8, 9]))
def test_root_round_trip(f, q):
    root = pow_rational(f, Fraction(1, q), f.order)
    assert power(root, q) == f


def test_exp_log_examples():
    assert exp_series(P([0]), 5) == T([1], 5)
    assert log_series(P([1]), 5) == T([0], 5)
    assert exp_series(P([0, 1]), 4).coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))
    with pytest.raises(ValueError):
        exp_series(P([1, 1]), 3)
    with pytest.raises(ValueError):
        log_series(P([2, 1]), 3)


@given(unit_series(10))
def test_exp_log_round_trip(f):
    g = log_series(f)
    assert exp_series(g) == f
    assert log_series(exp_series(g)) == g


@given(unit_series(8), exponents)
@settings(max_examples=40)
def test_binomial_power_equals_exp_log(f, lam):
    assert exp_series(log_series(f).scale(lam)) == pow_rational(f, lam, f.order)


def test_substitute_examples():
    assert substitute_x_to_xp(P([1, 1]), 2) == P([1, 0, 1])
    assert substitute_x_to_xp(TruncatedSeries.one(), 7) == TruncatedSeries.one()
    assert substitute_x_to_xp(P([1, 3, 5]), 3) == P([1, 0, 0, 3, 0, 0, 5])
    assert substitute_x_to_xp(T([1, 2, 3, 4], 3), 2) == T([1, 0, 2, 0], 3)


def test_stride_examples():
    a = [Fraction(1), Fraction(2, 3), Fraction(5), Fraction(-1, 7), Fraction(9)]
    assert stride_subseries(P(a), 2) == P([a[0], a[2], a[4]])
    f = T([1, 2, 3, 4, 5, 6, 7], 6)
    assert stride_subseries(f, 1) == f
    assert stride_subseries(P([1, -12, 12, 8]), 2) == P([1, 12])
    assert stride_subseries(T(range(1, 12), 10), 3) == T([1, 4, 7, 10], 3)


def test_congruence_examples():
    f = P([1, -12, 12, 8])
    assert congruent_mod_pk(f, f, 3, 10)
    assert congruent_mod_pk(f, P([1, 12]) ** 2, 2, 2, upto=3)
    g = P([1, -12, 12, -8])
    # (1 + 8x)^3 = 1 + 24x + 192x^2 + 512x^3; degree 3 differs by -520, nu_3 = 0
    res = congruent_mod_pk(g, P([1, 24, 192, 512]), 3, 2, upto=3)
    assert not res and (res.index, res.valuation) == (3, 0)
    assert res.valuation == nu_p(-8 - 512, 3)


def test_congruence_horizon():
    with pytest.raises(HorizonError):
        congruent_mod_pk(T([1, 2, 3], 2), P([1]), 2, 1, upto=3)
    assert congruent_mod_pk(T([1, 2, 4], 2), P([1]), 2, 1).upto == 2


def test_congruence_negative_valuation_fails():
    res = congruent_mod_pk(P([1, Fraction(1, 3)]), P([1]), 3, 0)
    assert not res and res.valuation == -1


@given(unit_series(20, 30), st.sampled_from([2, 3, 5]))
def test_fermat_for_series(f, p):
    assert congruent_mod_pk(power(f, p), substitute_x_to_xp(f, p), p, 1)


@given(unit_series(15, 30), unit_series(15, 30), st.sampled_from([2, 3, 5]), st.integers(1, 3), st.booleans())
@settings(max_examples=60)
def test_power_lifting(f, h, p, r, close):
    N = min(f.order, h.order)
    f = f.truncate(N)
    g = f + h.truncate(N).scale(p) if close else h.truncate(N)
    e = p ** (r - 1)
    lhs = bool(congruent_mod_pk(f, g, p, 1))
    rhs = bool(congruent_mod_pk(power(f, e), power(g, e), p, r))
    assert lhs == rhs
    if close:
        assert lhs


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", [1, 2])
def test_root_of_one_plus_p_power_is_integral(p, r):
    root = pow_rational(P([1, p ** (r + 1)]), Fraction(1, p**r), 40)
    assert all(nu_p(c, p) >= 0 for c in root.coeffs)
