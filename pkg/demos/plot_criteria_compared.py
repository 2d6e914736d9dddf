"""
Three routes to the same verdict
=================================

The stride criterion, the lifted Dwork congruence and brute-force expansion
should agree on every input with constant term 1.
"""

from fractions import Fraction

from seriesroots import PrimePower, TruncatedSeries
from seriesroots.criteria import check_dd_extended, check_theorem_main, oracle_integrality

pp = PrimePower(2, 2)
for a, b in [(8, 16), (8, 4), (4, 6), (0, 8)]:
    f = TruncatedSeries.polynomial([1, a, b])
    main = check_theorem_main(f, pp)
    dwork = check_dd_extended(f, pp)
    oracle = oracle_integrality(f, Fraction(1, pp.q), pp.p, 60)
    print(f"1 + {a}x + {b}x^2", main.verdict, dwork.verdict, oracle.verdict)

# Random agreement at scale, reproducible from the seed.
from seriesroots.crosscheck import run_random

summary = run_random(200, seed=1)
print(f"agreement {summary.agreed}/{summary.cases}, {summary.integral} integral")
