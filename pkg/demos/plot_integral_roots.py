"""
Deciding whether a root of a series has integer coefficients
=============================================================

"""

from fractions import Fraction

from seriesroots import TruncatedSeries, decide_rational_power, pow_rational

# A cubic whose sixth root turns out to be integral.
f = TruncatedSeries.polynomial([1, -12, 12, 8])
print(pow_rational(f, Fraction(-1, 6), 8))

# One prime power per factor of the denominator, each decided exactly.
report = decide_rational_power(f, Fraction(-1, 6))
for entry in report.per_prime:
    print(entry.prime_power, entry.verdict)
print("overall:", report.overall)

# Flip one sign and the prime 3 objects at x^3.
g = TruncatedSeries.polynomial([1, -12, 12, -8])
report = decide_rational_power(g, Fraction(-1, 6))
for entry in report.per_prime:
    print(entry.prime_power, entry.verdict, entry.witness)
print(pow_rational(g, Fraction(-1, 6), 3)[3])
