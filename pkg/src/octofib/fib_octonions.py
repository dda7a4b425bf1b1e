"""Fibonacci octonions F_n in the arithmetic-progression family
O(a+1, 2a+1, 3a+1): closed-form norms, direct norms and sign scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from octofib.classification import AlgebraClass, classify
from octofib.octonion import AlgebraParams, Octonion, norm
from octofib.rationals import RationalLike, as_rational, format_rational
from octofib.report import AuditReport
from octofib.sequences import fib

DEGENERATE_A = (Fraction(-1), Fraction(-1, 2), Fraction(-1, 3))


def _family_parameter(a: RationalLike) -> Fraction:
    a = as_rational(a)
    if a in DEGENERATE_A:
        raise ValueError(f"a = {format_rational(a)} makes an algebra parameter vanish")
    return a


def ap_algebra(a: RationalLike) -> AlgebraParams:
    a = _family_parameter(a)
    return AlgebraParams(a + 1, 2 * a + 1, 3 * a + 1)


def fibonacci_octonion(n: int, algebra: AlgebraParams) -> Octonion:
    if n < 0:
        raise ValueError(f"F_n is defined for n >= 0, got {n}")
    return Octonion((fib(n + i) for i in range(8)), algebra)


@dataclass(frozen=True)
class NormCoefficients:
    """n(F_n) = c6 f_{2n+6} + c7 f_{2n+7} + c_alt (-1)^n."""

    c6: Fraction
    c7: Fraction
    c_alt: Fraction

    def evaluate(self, n: int) -> Fraction:
        sign = 1 if n % 2 == 0 else -1
        return self.c6 * fib(2 * n + 6) + self.c7 * fib(2 * n + 7) + sign * self.c_alt


def norm_coefficients(a: RationalLike) -> NormCoefficients:
    """Coefficients in the mixed presentation of the closed form."""
    a = as_rational(a)
    return NormCoefficients(
        79 * a**2 + 46 * a + (174 * a**3 - 4 * a) / 5,
        130 * a**2 + 84 * a + 21 + (282 * a**3 + 8 * a) / 5,
        4 * a**2 + (12 * a**3 + 8 * a) / 5,
    )


def expanded_coefficients(a: RationalLike) -> NormCoefficients:
    """The same coefficients with everything over the common denominator 5."""
    a = as_rational(a)
    return NormCoefficients(
        (174 * a**3 + 395 * a**2 + 226 * a) / 5,
        (282 * a**3 + 650 * a**2 + 428 * a + 105) / 5,
        (12 * a**3 + 20 * a**2 + 8 * a) / 5,
    )


def factored_coefficients(a: RationalLike) -> NormCoefficients:
    """The factored rearrangement used for the sign argument when a <= -2."""
    a = as_rational(a)
    return NormCoefficients(
        (a * (a + 2) * (174 * a + 47) + 132 * a) / 5,
        (2 * (a + 2) * (141 * a**2 + 43 * a + 126) - 407) / 5,
        (4 * a * (a + 2) * (3 * a - 1) + 16 * a) / 5,
    )


def norm_closed_form(n: int, a: RationalLike) -> Fraction:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return norm_coefficients(a).evaluate(n)


def norm_direct(n: int, a: RationalLike) -> Fraction:
    """Norm of F_n computed from the octonion norm form itself."""
    return norm(fibonacci_octonion(n, ap_algebra(a)))


def _check_range(n_lo: int, n_hi: int) -> None:
    if not 0 <= n_lo <= n_hi:
        raise ValueError(f"need 0 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")


def _samples_text(samples: Iterable[Fraction]) -> str:
    return "{" + ", ".join(format_rational(a) for a in samples) + "}"


def audit_norm_formula(n_lo: int, n_hi: int, a_samples: Sequence[RationalLike]) -> AuditReport:
    _check_range(n_lo, n_hi)
    samples = [_family_parameter(a) for a in a_samples]
    if not samples:
        raise ValueError("a_samples must be nonempty")
    report = AuditReport(
        "P3.3",
        f"closed-form n(F_n) equals the direct norm; n in [{n_lo}, {n_hi}], a in {_samples_text(samples)}",
    )
    for a in samples:
        coeffs = norm_coefficients(a)
        alg = ap_algebra(a)
        for n in range(n_lo, n_hi + 1):
            report.check({"n": n, "a": a}, coeffs.evaluate(n), norm(fibonacci_octonion(n, alg)))
    return report


@dataclass
class SignReport:
    a: Fraction
    n_lo: int
    n_hi: int
    positive: int = 0
    negative: int = 0
    zero: int = 0
    first_positive: Optional[int] = None
    first_negative: Optional[int] = None
    first_zero: Optional[int] = None
    norms: list[Fraction] = field(default_factory=list, repr=False)

    @property
    def all_invertible(self) -> bool:
        return self.zero == 0

    def to_dict(self) -> dict:
        return {
            "a": format_rational(self.a),
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "positive": self.positive,
            "negative": self.negative,
            "zero": self.zero,
            "first_positive": self.first_positive,
            "first_negative": self.first_negative,
            "first_zero": self.first_zero,
            "all_invertible": self.all_invertible,
        }


def invertibility_scan(a: RationalLike, n_lo: int, n_hi: int) -> SignReport:
    _check_range(n_lo, n_hi)
    a = _family_parameter(a)
    alg = ap_algebra(a)
    rep = SignReport(a, n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        v = norm(fibonacci_octonion(n, alg))
        rep.norms.append(v)
        if v > 0:
            rep.positive += 1
            if rep.first_positive is None:
                rep.first_positive = n
        elif v < 0:
            rep.negative += 1
            if rep.first_negative is None:
                rep.first_negative = n
        else:
            rep.zero += 1
            if rep.first_zero is None:
                rep.first_zero = n
    return rep


def audit_negative_norms(a_samples: Sequence[RationalLike], n_lo: int, n_hi: int) -> AuditReport:
    """For a <= -2 every F_n has negative norm, hence is invertible."""
    samples = [_family_parameter(a) for a in a_samples]
    report = AuditReport(
        "P3.4.sign",
        f"n(F_n) < 0 for a <= -2; n in [{n_lo}, {n_hi}], a in {_samples_text(samples)}",
    )
    for a in samples:
        if a > -2:
            raise ValueError(f"sign claim concerns a <= -2, got a = {format_rational(a)}")
        scan = invertibility_scan(a, n_lo, n_hi)
        for n, v in zip(range(n_lo, n_hi + 1), scan.norms):
            report.checked += 1
            if not v < 0:
                report.add_failure({"n": n, "a": a}, v, "< 0")
    return report


def _polynomial_agreement(
    report: AuditReport,
    samples: Sequence[Fraction],
    left: Callable[[Fraction], NormCoefficients],
    right: Callable[[Fraction], NormCoefficients],
    label: str,
    as_finding: bool,
) -> None:
    for name in ("c6", "c7", "c_alt"):
        mismatches = []
        for a in samples:
            lv, rv = getattr(left(a), name), getattr(right(a), name)
            report.checked += 1
            if lv != rv:
                mismatches.append({"a": a, "left": lv, "right": rv})
                if not as_finding:
                    report.add_failure({"coefficient": name, "a": a, "check": label}, lv, rv)
        if as_finding and mismatches:
            report.add_finding(
                f"{label}: coefficient {name} differs from its expanded form at {len(mismatches)} of {len(samples)} samples",
                "identical polynomials",
                mismatches,
            )


def audit_sign_polynomials(a_samples: Sequence[RationalLike]) -> AuditReport:
    """Polynomial rearrangements behind the sign argument.

    Checks, at each sample point: the common-denominator coefficients against
    the closed form (failures), the factored forms against the expanded ones
    (findings), the sign of the factored forms for a <= -2 (failures), and
    that 141a^2 + 43a + 126 has negative discriminant.
    """
    samples = sorted({as_rational(a) for a in a_samples})
    if len(samples) < 5:
        raise ValueError("need at least 5 distinct sample points to identify cubic polynomials")
    report = AuditReport(
        "P3.4.poly",
        f"coefficient rearrangements and sign argument; a in {_samples_text(samples)}",
    )
    _polynomial_agreement(report, samples, expanded_coefficients, norm_coefficients, "expanded vs closed form", False)
    _polynomial_agreement(report, samples, factored_coefficients, expanded_coefficients, "factored vs expanded", True)
    for a in samples:
        if a > -2:
            continue
        fc = factored_coefficients(a)
        for name in ("c6", "c7", "c_alt"):
            report.checked += 1
            v = getattr(fc, name)
            if not v < 0:
                report.add_failure({"coefficient": name, "a": a, "check": "factored form < 0 for a <= -2"}, v, "< 0")
    disc = 43**2 - 4 * 141 * 126
    report.checked += 1
    if not disc < 0:
        report.add_failure({"check": "discriminant of 141a^2+43a+126"}, disc, "< 0")
    return report


# Printed worked examples: (a, coefficients as printed, printed sign claim).
PRINTED_EXAMPLES = {
    Fraction(-4): (NormCoefficients(Fraction(-1144), Fraction(-1851), Fraction(-96)), "negative"),
    Fraction(-3, 2): (NormCoefficients(Fraction(-7, 2), Fraction(831, 2), Fraction(-3, 2)), "positive"),
}


def audit_worked_example(a: RationalLike, n_lo: int, n_hi: int) -> AuditReport:
    """Compare a printed specialization of the norm formula against exact values.

    A disagreement in the printed coefficients or sign claim is a finding;
    a zero norm (a non-invertible F_n) is a failure of the invertibility
    conclusion.
    """
    a = _family_parameter(a)
    _check_range(n_lo, n_hi)
    printed, sign_claim = PRINTED_EXAMPLES[a]
    alg = ap_algebra(a)
    report = AuditReport(
        f"EX.a={format_rational(a)}",
        f"printed n(F_n) for {alg}, sign claim '{sign_claim}', invertibility; n in [{n_lo}, {n_hi}]",
    )
    computed = norm_coefficients(a)
    if computed != printed:
        report.add_finding(
            "printed norm coefficients (f_{2n+6}, f_{2n+7}, (-1)^n) differ from the closed form",
            [printed.c6, printed.c7, printed.c_alt],
            [computed.c6, computed.c7, computed.c_alt],
        )
    wrong_value = wrong_sign = None
    for n in range(n_lo, n_hi + 1):
        v = norm(fibonacci_octonion(n, alg))
        report.checked += 1
        if v == 0:
            report.add_failure({"n": n, "a": a}, v, "nonzero")
        if wrong_value is None and printed.evaluate(n) != v:
            wrong_value = (n, printed.evaluate(n), v)
        sign_ok = v > 0 if sign_claim == "positive" else v < 0
        if wrong_sign is None and not sign_ok:
            wrong_sign = (n, v)
    if wrong_value is not None:
        n, pv, cv = wrong_value
        report.add_finding(f"printed expression at n={n} disagrees with the direct norm", pv, cv)
    if wrong_sign is not None:
        n, cv = wrong_sign
        report.add_finding(f"printed sign claim fails at n={n}", sign_claim, cv)
    return report


def audit_invertible_family(a: RationalLike, n_lo: int, n_hi: int) -> AuditReport:
    """Every F_n in O(a+1, 2a+1, 3a+1) has nonzero norm over the range."""
    a = _family_parameter(a)
    scan = invertibility_scan(a, n_lo, n_hi)
    report = AuditReport(
        f"INV.a={format_rational(a)}",
        f"all F_n invertible in {ap_algebra(a)}; n in [{n_lo}, {n_hi}]",
        checked=n_hi - n_lo + 1,
    )
    for n, v in zip(range(n_lo, n_hi + 1), scan.norms):
        if v == 0:
            report.add_failure({"n": n, "a": a}, v, "nonzero")
    return report


def audit_family_split(a_samples: Sequence[RationalLike]) -> AuditReport:
    """For a < -1 the family algebra is split."""
    samples = [_family_parameter(a) for a in a_samples]
    report = AuditReport("R3.1", f"O(a+1, 2a+1, 3a+1) is split for a < -1; a in {_samples_text(samples)}")
    for a in samples:
        if a >= -1:
            raise ValueError(f"claim concerns a < -1, got a = {format_rational(a)}")
        report.check({"a": a}, str(classify(ap_algebra(a))), str(AlgebraClass.SPLIT))
    return report
