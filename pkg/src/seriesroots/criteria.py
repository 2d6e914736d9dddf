"""Integrality criteria for rational powers of power series.

Every check returns a :class:`CriterionResult`.  Polynomial inputs are decided
completely; a truncated input that passes every checkable coefficient comes
back ``UNDECIDED`` together with the degree it was checked to.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    ExponentSpec,
    PrimePower,
    Rational,
    as_fraction,
    factor_exponent,
    is_p_integral,
    nu_p,
    rad,
    require_prime,
)
from .series import (
    HorizonError,
    TruncatedSeries,
    congruent_mod_pk,
    inverse,
    pow_rational,
    power,
    stride_subseries,
    substitute_x_to_xp,
)

DEFAULT_ORDER = 50


class PreconditionError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """Two routes that must agree did not; always an implementation bug."""


class Verdict(str, enum.Enum):
    INTEGRAL = "integral"
    NON_INTEGRAL = "non_integral"
    UNDECIDED = "undecided"

    def __str__(self):
        return self.value


class Criterion(str, enum.Enum):
    THEOREM_MAIN = "theorem_main"
    DD = "dd"
    DD_EXTENDED = "dd_extended"
    DD_ADDITIVE = "dd_additive"
    ORACLE = "oracle"
    HRS_REDUCTION = "hrs_reduction"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Witness:
    index: int
    valuation: int


@dataclass(frozen=True)
class CriterionResult:
    verdict: Verdict
    criterion: Criterion
    prime_power: PrimePower
    horizon: int
    witness: Witness | None = None

    @property
    def integral(self) -> bool:
        return self.verdict is Verdict.INTEGRAL


def _require_unit_constant(f: TruncatedSeries):
    if f[0] != 1:
        raise PreconditionError(f"constant term must be 1, got {f[0]}")


def _finish(ok, f: TruncatedSeries, criterion, pp, witness=None) -> CriterionResult:
    if not ok:
        return CriterionResult(Verdict.NON_INTEGRAL, criterion, pp, ok.upto, witness or Witness(ok.index, ok.valuation))
    verdict = Verdict.INTEGRAL if f.is_polynomial else Verdict.UNDECIDED
    return CriterionResult(verdict, criterion, pp, ok.upto)


def check_theorem_main(f: TruncatedSeries, pp: PrimePower) -> CriterionResult:
    """Decide p-integrality of f**(1/p**r) from the congruence

        f(x) == (1 + a_q x + a_2q x^2 + ...)**q  (mod p**(r+1)),  q = p**r.

    The right-hand side is formed by exact repeated squaring, independent of
    the binomial expansion.  For a series truncated at N only degrees up to
    N // q are checkable.
    """
    _require_unit_constant(f)
    if pp.r < 1:
        raise PreconditionError("the stride criterion needs r >= 1")
    p, q = pp.p, pp.q
    for n, c in enumerate(f.coeffs):
        if not is_p_integral(c, p):
            raise PreconditionError(f"coefficient {n} = {c} is not {p}-integral")
    g = stride_subseries(f, q)
    rhs = power(g, q)
    ok = congruent_mod_pk(f, rhs, p, pp.r + 1)
    return _finish(ok, f, Criterion.THEOREM_MAIN, pp)


def _frobenius_defect(f: TruncatedSeries, p: int, variant: str):
    """Return (lhs, rhs, upto) for f**p vs f(x**p) or f**p / f(x**p) vs 1."""
    fp = power(f, p)
    fxp = substitute_x_to_xp(f, p)
    if f.is_polynomial:
        upto = max(fp.order, fxp.order)
    else:
        upto = f.order
        if upto < 1:
            raise HorizonError("series known only to degree 0; nothing to check")
    if variant == "difference":
        return fp, fxp, upto
    if variant == "quotient":
        quot = fp * inverse(fxp, upto) if fxp.is_polynomial else fp * inverse(fxp)
        return quot, TruncatedSeries.one(), upto
    raise ValueError(f"unknown variant {variant!r}")


def check_dd(f: TruncatedSeries, p: int, variant: str = "difference") -> CriterionResult:
    """Dieudonne-Dwork test of f itself being p-integral.

    The first degree n where the congruence fails mod p is exactly the first
    non-integral coefficient of f; the witness reports nu_p(f[n]).
    """
    require_prime(p)
    _require_unit_constant(f)
    lhs, rhs, upto = _frobenius_defect(f, p, variant)
    ok = congruent_mod_pk(lhs, rhs, p, 1, upto)
    witness = None if ok else Witness(ok.index, nu_p(f[ok.index], p))
    return _finish(ok, f, Criterion.DD, PrimePower(p, 0), witness)


def check_dd_extended(f: TruncatedSeries, pp: PrimePower, variant: str = "difference") -> CriterionResult:
    """p-integrality of f**(1/p**r) via f**p == f(x**p) mod p**(r+1)."""
    _require_unit_constant(f)
    if pp.r == 0:
        res = check_dd(f, pp.p, variant)
        return CriterionResult(res.verdict, Criterion.DD_EXTENDED, pp, res.horizon, res.witness)
    lhs, rhs, upto = _frobenius_defect(f, pp.p, variant)
    ok = congruent_mod_pk(lhs, rhs, pp.p, pp.r + 1, upto)
    return _finish(ok, f, Criterion.DD_EXTENDED, pp)


def check_dd_additive(g: TruncatedSeries, p: int, horizon: int | None = None) -> CriterionResult:
    """Is exp(g) p-integral?  Tests g(x**p) - p*g(x) == 0 mod p.

    With ``horizon`` given (or g truncated) the verdict speaks for exp(g)
    through that degree only.
    """
    require_prime(p)
    if g[0] != 0:
        raise PreconditionError("additive criterion needs constant term 0")
    defect = substitute_x_to_xp(g, p) - g.scale(p)
    if horizon is None:
        horizon = defect.order
    elif horizon > g.horizon:
        raise HorizonError(f"horizon {horizon} exceeds the known order {g.order}")
    ok = congruent_mod_pk(defect, TruncatedSeries.polynomial([0]), p, 1, horizon)
    pp = PrimePower(p, 0)
    if not ok:
        return CriterionResult(Verdict.NON_INTEGRAL, Criterion.DD_ADDITIVE, pp, horizon, Witness(ok.index, ok.valuation))
    return CriterionResult(Verdict.INTEGRAL, Criterion.DD_ADDITIVE, pp, horizon)


def first_non_integral(h: TruncatedSeries, p: int) -> Witness | None:
    for n, c in enumerate(h.coeffs):
        if not is_p_integral(c, p):
            return Witness(n, nu_p(c, p))
    return None


def oracle_integrality(f: TruncatedSeries, lam: Rational, p: int, N: int = DEFAULT_ORDER) -> CriterionResult:
    """Ground truth by brute force: expand f**lam to degree N and scan."""
    require_prime(p)
    _require_unit_constant(f)
    w = first_non_integral(pow_rational(f, lam, N), p)
    verdict = Verdict.NON_INTEGRAL if w else Verdict.INTEGRAL
    return CriterionResult(verdict, Criterion.ORACLE, PrimePower(p, 0), N, w)


# -- rational exponents -----------------------------------------------------


@dataclass
class IntegralityReport:
    input_description: str
    lam: Fraction
    per_prime: list[CriterionResult] = field(default_factory=list)

    @property
    def overall(self) -> Verdict:
        verdicts = {e.verdict for e in self.per_prime}
        if Verdict.NON_INTEGRAL in verdicts:
            return Verdict.NON_INTEGRAL
        if Verdict.UNDECIDED in verdicts:
            return Verdict.UNDECIDED
        return Verdict.INTEGRAL

    def to_json(self) -> dict:
        lam = self.lam
        return {
            "input": self.input_description,
            "lambda": f"{lam.numerator}/{lam.denominator}",
            "prime_powers": [
                {
                    "p": e.prime_power.p,
                    "r": e.prime_power.r,
                    "verdict": e.verdict.value,
                    "criterion": e.criterion.value,
                    "witness": None if e.witness is None else {"index": e.witness.index, "valuation": e.witness.valuation},
                    "horizon": e.horizon,
                }
                for e in self.per_prime
            ],
            "overall": self.overall.value,
        }


SELECTABLE = ("theorem_main", "dd", "dd_extended", "oracle", "all")


def _require_integer_polynomial(f: TruncatedSeries):
    if not f.is_polynomial:
        raise PreconditionError("expected a polynomial")
    if not f.is_integral():
        raise PreconditionError("polynomial must have integer coefficients")
    _require_unit_constant(f)


def coefficient_witness(f: TruncatedSeries, lam: Rational, p: int, order: int = DEFAULT_ORDER, max_order: int = 1024) -> Witness | None:
    """First coefficient of f**lam that is not p-integral, widening the expansion as needed."""
    N = max(order, 1)
    while True:
        w = first_non_integral(pow_rational(f, lam, N), p)
        if w is not None or N >= max_order:
            return w
        N = min(2 * N, max_order)


def _with_coefficient_witness(res: CriterionResult, f, lam, order) -> CriterionResult:
    if res.verdict is not Verdict.NON_INTEGRAL:
        return res
    w = coefficient_witness(f, lam, res.prime_power.p, order)
    if w is None:
        return res
    return CriterionResult(res.verdict, res.criterion, res.prime_power, res.horizon, w)


def _run_criterion(name: str, f: TruncatedSeries, lam: Fraction, pp: PrimePower, order: int, witnesses: bool) -> CriterionResult:
    if name == "theorem_main":
        res = check_theorem_main(f, pp)
    elif name == "dd_extended":
        res = check_dd_extended(f, pp)
    elif name == "dd":
        res = check_dd(pow_rational(f, lam, order), pp.p)
    elif name == "oracle":
        res = oracle_integrality(f, lam, pp.p, order)
    else:
        raise ValueError(f"unknown criterion {name!r}")
    res = CriterionResult(res.verdict, res.criterion, pp, res.horizon, res.witness)
    if witnesses and name in ("theorem_main", "dd_extended"):
        res = _with_coefficient_witness(res, f, lam, order)
    return res


def decide_rational_power(
    f: TruncatedSeries,
    lam: Rational,
    criterion: str = "theorem_main",
    order: int = DEFAULT_ORDER,
    description: str | None = None,
    witnesses: bool = True,
) -> IntegralityReport:
    """Decide whether f**lam has integer coefficients.

    The exponent's denominator is split into prime powers p**r and each is
    checked for p-integrality of f**(1/p**r).  Witnesses in the report always
    point at a coefficient of f**lam itself.  ``criterion="all"`` runs the
    main criterion, the extended Dwork criterion and the oracle side by side.
    With ``witnesses=False`` the congruence defect is kept instead of
    searching the expansion for the offending coefficient.
    """
    _require_integer_polynomial(f)
    lam = as_fraction(lam)
    if criterion not in SELECTABLE:
        raise ValueError(f"unknown criterion {criterion!r}")
    spec: ExponentSpec = factor_exponent(lam)
    report = IntegralityReport(description or f"({f})^({lam})", lam)
    names = ("theorem_main", "dd_extended", "oracle") if criterion == "all" else (criterion,)
    for pp in spec.denominator_factors:
        for name in names:
            report.per_prime.append(_run_criterion(name, f, lam, pp, order, witnesses))
    return report


def hrs_reduction_check(f: TruncatedSeries, n: int) -> Verdict:
    """Verdict for f**(1/n) after reducing coefficients into [0, n*rad(n)).

    The unreduced input is decided too; a mismatch raises ConsistencyError.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    _require_integer_polynomial(f)
    if n == 1:
        return Verdict.INTEGRAL
    m = n * rad(n)
    reduced = TruncatedSeries.polynomial([c % m for c in f.coeffs])
    lam = Fraction(1, n)
    before = decide_rational_power(f, lam, witnesses=False).overall
    after = decide_rational_power(reduced, lam, witnesses=False).overall
    if before is not after:
        raise ConsistencyError(f"{f}: {before} but reduced mod {m} gives {after}")
    return after


def classify_quadratic(a: int, b: int, lam: Rational) -> Verdict:
    """Closed-form verdict for (1 + a x + b x**2)**lam over the integers."""
    k = as_fraction(lam).denominator
    if k == 1:
        return Verdict.INTEGRAL
    m = k * rad(k)
    if a % m == 0 and b % m == 0:
        return Verdict.INTEGRAL
    if k % 2 == 0:
        kappa = k // 2
        mk = kappa * rad(kappa)
        if a % mk == 0 and b % mk == 0 and a % 4 == 2 and b % 4 == 1:
            return Verdict.INTEGRAL
    return Verdict.NON_INTEGRAL
