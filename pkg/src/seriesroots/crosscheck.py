"""Randomised and exhaustive agreement checks between the integrality criteria."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import PrimePower
from .criteria import (
    Verdict,
    check_dd_extended,
    check_theorem_main,
    oracle_integrality,
)
from .series import TruncatedSeries, power

DEFAULT_PRIME_POWERS = tuple(PrimePower(p, r) for p, r in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
ROUTES = ("theorem_main", "dd_extended", "dd_quotient", "oracle")


def parse_prime_powers(text: str) -> tuple[PrimePower, ...]:
    """Parse ``"2^1,3^2,5"``; a bare prime means r = 1."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        p, _, r = item.partition("^")
        out.append(PrimePower(int(p), int(r) if r else 1))
    if not out:
        raise ValueError("no prime powers given")
    return tuple(out)


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent stream for one trial, a pure function of (seed, index)."""
    return random.Random(f"{seed & 0xFFFFFFFFFFFFFFFF}:{index}")


def random_polynomial(rng: random.Random, max_degree: int, bound: int, pp: PrimePower | None = None) -> TruncatedSeries:
    """Integer polynomial 1 + a_1 x + ... with |a_i| <= bound.

    Given ``pp``, half of the draws are steered towards f == g**q mod p**(r+1)
    (q = p**r) so that integral cases are not vanishingly rare.
    """
    d = rng.randint(1, max_degree)
    if pp is None or rng.random() < 0.5:
        return TruncatedSeries.polynomial([1] + [rng.randint(-bound, bound) for _ in range(d)])
    q, mod = pp.q, pp.p ** (pp.r + 1)
    g = TruncatedSeries.polynomial([1] + [rng.randint(-bound, bound) for _ in range(d // q)])
    target = power(g, q)
    cs = [1]
    for m in range(1, d + 1):
        base = int(target[m]) % mod
        choices = range(base - mod * ((base + bound) // mod), bound + 1, mod)
        cs.append(rng.choice(choices) if choices else base)
    return TruncatedSeries.polynomial(cs)


def route_verdicts(f: TruncatedSeries, pp: PrimePower, order: int) -> dict[str, Verdict]:
    return {
        "theorem_main": check_theorem_main(f, pp).verdict,
        "dd_extended": check_dd_extended(f, pp).verdict,
        "dd_quotient": check_dd_extended(f, pp, "quotient").verdict,
        "oracle": oracle_integrality(f, Fraction(1, pp.q), pp.p, order).verdict,
    }


def quadratic_closed_form(a: int, b: int, pp: PrimePower) -> Verdict:
    """p-integrality of (1 + a x + b x^2)**(1/p**r) in closed form."""
    if pp.q == 2:
        ok = (a % 4 == 0 and b % 4 == 0) or (a % 4 == 2 and b % 4 == 1)
    else:
        m = pp.p ** (pp.r + 1)
        ok = a % m == 0 and b % m == 0
    return Verdict.INTEGRAL if ok else Verdict.NON_INTEGRAL


@dataclass
class Disagreement:
    polynomial: list[str]
    prime_power: str
    verdicts: dict[str, str]


@dataclass
class CrosscheckSummary:
    cases: int = 0
    agreed: int = 0
    integral: int = 0
    pair_agreement: dict[tuple[str, str], int] = field(default_factory=dict)
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and self.agreed == self.cases

    def add(self, f: TruncatedSeries, pp: PrimePower, verdicts: dict[str, Verdict]):
        self.cases += 1
        for a, b in itertools.combinations(verdicts, 2):
            key = (a, b)
            self.pair_agreement[key] = self.pair_agreement.get(key, 0) + (verdicts[a] is verdicts[b])
        if len(set(verdicts.values())) == 1:
            self.agreed += 1
            self.integral += verdicts["theorem_main"] is Verdict.INTEGRAL
        else:
            self.disagreements.append(
                Disagreement([str(c) for c in f.coeffs], str(pp), {k: v.value for k, v in verdicts.items()})
            )


def _one_trial(args):
    seed, index, max_degree, bound, pps, order = args
    rng = trial_rng(seed, index)
    pp = pps[index % len(pps)]
    f = random_polynomial(rng, max_degree, bound, pp)
    return f, pp, route_verdicts(f, pp, order)


def run_random(
    trials: int,
    seed: int,
    max_degree: int = 8,
    bound: int = 50,
    prime_powers=DEFAULT_PRIME_POWERS,
    order: int = 60,
    jobs: int = 1,
) -> CrosscheckSummary:
    """Trial i draws one polynomial and tests it at prime power i mod len(prime_powers).

    Results do not depend on ``jobs``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tasks = [(seed, i, max_degree, bound, tuple(prime_powers), order) for i in range(trials)]
    summary = CrosscheckSummary()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_one_trial, tasks, chunksize=16))
    else:
        results = map(_one_trial, tasks)
    for f, pp, verdicts in results:
        summary.add(f, pp, verdicts)
    return summary


def run_exhaustive(bound: int = 8, prime_powers=(PrimePower(2, 1),), order: int = 60) -> CrosscheckSummary:
    """Every 1 + a x + b x^2 with |a|, |b| <= bound; the closed form joins as a fifth route."""
    summary = CrosscheckSummary()
    for pp in prime_powers:
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                f = TruncatedSeries.polynomial([1, a, b])
                verdicts = route_verdicts(f, pp, order)
                verdicts["closed_form"] = quadratic_closed_form(a, b, pp)
                summary.add(f, pp, verdicts)
    return summary
