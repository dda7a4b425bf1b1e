"""Split versus division verdicts for real octonion algebras, and bounded
searches for values of diagonal norm forms."""

from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from octofib.octonion import AlgebraParams, Octonion
from octofib.rationals import RationalLike, as_rational
from octofib.report import AuditReport


class AlgebraClass(enum.Enum):
    DIVISION = "division"
    SPLIT = "split"

    def __str__(self) -> str:
        return self.value


def classify(params: AlgebraParams) -> AlgebraClass:
    """Over the reals O(alpha, beta, gamma) is a division algebra exactly when
    all three parameters are positive; every other sign pattern is split."""
    if params.alpha > 0 and params.beta > 0 and params.gamma > 0:
        return AlgebraClass.DIVISION
    return AlgebraClass.SPLIT


def classify_values(alpha: RationalLike, beta: RationalLike, gamma: RationalLike) -> AlgebraClass:
    return classify(AlgebraParams(alpha, beta, gamma))


QuaternionVector = tuple[Fraction, Fraction, Fraction, Fraction]


def quaternion_norm(v: Sequence[RationalLike], alpha: RationalLike, beta: RationalLike) -> Fraction:
    """x0^2 + alpha x1^2 + beta x2^2 + alpha beta x3^2."""
    a, b = as_rational(alpha), as_rational(beta)
    if a == 0 or b == 0:
        raise ValueError("alpha and beta must be nonzero")
    x0, x1, x2, x3 = (as_rational(c) for c in v)
    return x0 * x0 + a * x1 * x1 + b * x2 * x2 + a * b * x3 * x3


def height(r: Fraction) -> int:
    return max(abs(r.numerator), r.denominator)


@lru_cache(maxsize=64)
def _values_up_to(h: int) -> tuple[Fraction, ...]:
    """Rationals of height <= h in decreasing numeric order."""
    vals = {Fraction(p, q) for q in range(1, h + 1) for p in range(-h, h + 1)}
    return tuple(sorted((v for v in vals if height(v) <= h), reverse=True))


def _rational_sqrt(r: Fraction) -> Optional[Fraction]:
    if r < 0:
        return None
    a, b = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if a * a == r.numerator and b * b == r.denominator:
        return Fraction(a, b)
    return None


def iter_form_representations(
    weights: Sequence[RationalLike],
    target: RationalLike,
    height_bound: int,
    nonzero: bool = False,
) -> Iterator[tuple[Fraction, ...]]:
    """All rational vectors of height <= ``height_bound`` with
    sum(w_i x_i^2) == target.

    Order: by shell (maximum coordinate height 1, 2, ...), then
    lexicographically with each coordinate running over decreasing values.
    The last coordinate is solved for exactly instead of enumerated.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    w = [as_rational(x) for x in weights]
    if not w or any(x == 0 for x in w):
        raise ValueError("weights must be nonzero")
    t = as_rational(target)
    # a definite form cannot take values of the opposite sign, and vanishes only at 0
    definite = all(x > 0 for x in w) or all(x < 0 for x in w)
    if definite and (t * w[0] < 0 or t == 0 and nonzero):
        return
    *head, w_last = w
    for h in range(1, height_bound + 1):
        vals = _values_up_to(h)
        for prefix in itertools.product(vals, repeat=len(head)):
            partial = sum((wi * xi * xi for wi, xi in zip(head, prefix)), Fraction(0))
            root = _rational_sqrt((t - partial) / w_last)
            if root is None or height(root) > h:
                continue
            prefix_h = max((height(x) for x in prefix), default=0)
            for last in sorted({root, -root}, reverse=True):
                if max(prefix_h, height(last)) != h:
                    continue
                vec = prefix + (last,)
                if nonzero and not any(vec):
                    continue
                yield vec


def iter_norm_representations(
    alpha: RationalLike, beta: RationalLike, target: RationalLike, height_bound: int
) -> Iterator[QuaternionVector]:
    a, b = as_rational(alpha), as_rational(beta)
    yield from iter_form_representations((1, a, b, a * b), target, height_bound)  # type: ignore[misc]


def search_norm_representation(
    alpha: RationalLike, beta: RationalLike, target: RationalLike, height_bound: int
) -> Optional[QuaternionVector]:
    """First quaternion of bounded height with the given norm, or None.

    None is inconclusive: it says nothing about vectors of larger height.
    """
    return next(iter_norm_representations(alpha, beta, target, height_bound), None)


def find_isotropic_octonion(params: AlgebraParams, height_bound: int = 1) -> Optional[Octonion]:
    """A nonzero octonion of norm zero with coordinates of bounded height."""
    hit = next(iter_form_representations(params.norm_weights, 0, height_bound, nonzero=True), None)
    return None if hit is None else Octonion(hit, params)


# Sign patterns with at least one negative parameter, all classified split.
SPLIT_SIGN_PATTERNS = tuple(
    (a, b, g) for a in (1, -1) for b in (1, -1) for g in (1, -1) if min(a, b, g) < 0
)

STATED_CLASSES = (
    ((1, 1, 1), AlgebraClass.DIVISION),
    ((1, 1, -1), AlgebraClass.SPLIT),
    ((-3, -7, -11), AlgebraClass.SPLIT),
    ((-1, -3, -5), AlgebraClass.SPLIT),
)


def audit_stated_classes() -> AuditReport:
    report = AuditReport("P3.2.examples", "stated verdicts for O(1,1,1), O(1,1,-1), O(-3,-7,-11), O(-1,-3,-5)")
    for params, expected in STATED_CLASSES:
        report.check({"params": list(params)}, str(classify_values(*params)), str(expected))
    return report


def audit_split_isotropy(height_bound: int = 1) -> AuditReport:
    """Each split sign pattern with parameters +-1 has a nonzero element of
    norm zero of small height; the positive pattern has none."""
    report = AuditReport(
        "P3.2.isotropy",
        f"isotropic witness of height <= {height_bound} exists exactly for the seven split sign patterns",
    )
    for params in ((1, 1, 1),) + SPLIT_SIGN_PATTERNS:
        alg = AlgebraParams(*params)
        witness = find_isotropic_octonion(alg, height_bound)
        expected = classify(alg) is AlgebraClass.SPLIT
        report.check({"params": list(params)}, witness is not None, expected)
        if witness is not None and witness.norm() != 0:
            report.add_failure({"params": list(params), "witness": list(witness.coeffs)}, witness.norm(), 0)
    return report


def audit_quaternion_example(height_bound: int = 5) -> AuditReport:
    """n(x) = 11 is solvable in the quaternion algebra H(-3, -7)."""
    report = AuditReport("EX.a=-4.quat", f"n(x) = 11 solvable in H(-3, -7) within height {height_bound}")
    hit = search_norm_representation(-3, -7, 11, height_bound)
    if hit is None:
        report.checked += 1
        report.add_failure({"alpha": -3, "beta": -7, "target": 11}, "not found", "a solution")
    else:
        report.check({"witness": list(hit)}, quaternion_norm(hit, -3, -7), Fraction(11))
    return report
