"""
Integer sequences from binomial series
=======================================

"""

from seriesroots.seqgen import k_central_binomials, sharpness_certificate, trinomial_coefficients

# k = 2 recovers the central binomial coefficients.
print(k_central_binomials(2, 8))
print(k_central_binomials(3, 8))

# Central trinomial coefficients T_n(1, 1, 1).
print(trinomial_coefficients(1, 1, 1, 10))

# (1 - a x)^(-1/4) is integral exactly when 8 = 4*rad(4) divides a.
rows = sharpness_certificate(4, 24)
print([row.a for row in rows if row.divisible])
