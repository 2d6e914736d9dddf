"""
Integral exponentials: the Artin-Hasse series
==============================================

"""

from fractions import Fraction

from seriesroots import TruncatedSeries
from seriesroots.arith import nu_p
from seriesroots.criteria import check_dd_additive
from seriesroots.series import exp_series

p = 3
coeffs = [Fraction(0)] * (p**4 + 1)
for n in range(5):
    coeffs[p**n] = Fraction(1, p**n)
g = TruncatedSeries.polynomial(coeffs)

# The additive test speaks for exp(g) through the chosen horizon.
print(check_dd_additive(g, p, horizon=16).verdict)

# Direct expansion agrees: no 3 in any denominator.
e = exp_series(g, 16)
print([nu_p(c, p) for c in e.coeffs])

# exp(x) itself fails at x^2 for p = 2.
print(check_dd_additive(TruncatedSeries.polynomial([0, 1]), 2).witness)
