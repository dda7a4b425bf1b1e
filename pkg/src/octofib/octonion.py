"""The generalized octonion algebra O(alpha, beta, gamma) over the rationals.

The multiplication table is data: for every ordered pair of basis units
(e_i, e_j) it records a sign, a monomial in {alpha, beta, gamma} and the
index k of the resulting unit, so that e_i e_j = sign * monomial * e_k.
Index 0 is the unit 1.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from octofib.rationals import RationalLike, as_rational, format_rational
from octofib.report import AuditReport


class AlgebraMismatchError(ValueError):
    """Raised when two octonions from different algebras are combined."""


class ZeroNormError(ArithmeticError):
    """Raised when inverting an element of norm zero."""


# Rows e1..e7 of the basis table, columns e1..e7: (sign, monomial, k).
# Row and column 0 (the unit) are implicit: 1 e_k = e_k 1 = e_k.
_TABLE_ROWS: tuple[tuple[tuple[int, str, int], ...], ...] = (
    ((-1, "a", 0), (+1, "", 3), (-1, "a", 2), (+1, "", 5), (-1, "a", 4), (-1, "", 7), (+1, "a", 6)),
    ((-1, "", 3), (-1, "b", 0), (+1, "b", 1), (+1, "", 6), (+1, "", 7), (-1, "b", 4), (-1, "b", 5)),
    ((+1, "a", 2), (-1, "b", 1), (-1, "ab", 0), (+1, "", 7), (-1, "a", 6), (+1, "b", 5), (-1, "ab", 4)),
    ((-1, "", 5), (-1, "", 6), (-1, "", 7), (-1, "g", 0), (+1, "g", 1), (+1, "g", 2), (+1, "g", 3)),
    ((+1, "a", 4), (-1, "", 7), (+1, "a", 6), (-1, "g", 1), (-1, "ag", 0), (-1, "g", 3), (+1, "ag", 2)),
    ((+1, "", 7), (+1, "b", 4), (-1, "b", 5), (-1, "g", 2), (+1, "g", 3), (-1, "bg", 0), (-1, "bg", 1)),
    ((-1, "a", 6), (+1, "b", 5), (+1, "ab", 4), (-1, "g", 3), (-1, "ag", 2), (+1, "bg", 1), (-1, "abg", 0)),
)


@dataclass(frozen=True)
class SymbolicProduct:
    i: int
    j: int
    sign: int
    monomial: str  # subset of "abg", in that order
    k: int


def symbolic_table() -> list[SymbolicProduct]:
    """All 64 basis products in row-major order, with symbolic coefficients."""
    out = []
    for i in range(8):
        for j in range(8):
            if i == 0:
                out.append(SymbolicProduct(0, j, 1, "", j))
            elif j == 0:
                out.append(SymbolicProduct(i, 0, 1, "", i))
            else:
                sign, mono, k = _TABLE_ROWS[i - 1][j - 1]
                out.append(SymbolicProduct(i, j, sign, mono, k))
    return out


def basis_table_json() -> str:
    """The golden-file serialization of the symbolic table."""
    records = [
        {"i": p.i, "j": p.j, "sign": p.sign, "monomial": list(p.monomial), "k": p.k}
        for p in symbolic_table()
    ]
    return json.dumps(records, indent=1) + "\n"


@dataclass(frozen=True)
class AlgebraParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __init__(self, alpha: RationalLike, beta: RationalLike, gamma: RationalLike):
        vals = tuple(as_rational(v) for v in (alpha, beta, gamma))
        for name, v in zip(("alpha", "beta", "gamma"), vals):
            if v == 0:
                raise ValueError(f"{name} must be nonzero")
        object.__setattr__(self, "alpha", vals[0])
        object.__setattr__(self, "beta", vals[1])
        object.__setattr__(self, "gamma", vals[2])

    def monomial(self, mono: str) -> Fraction:
        value = Fraction(1)
        for ch in mono:
            value *= {"a": self.alpha, "b": self.beta, "g": self.gamma}[ch]
        return value

    @property
    def norm_weights(self) -> tuple[Fraction, ...]:
        """Weights of the diagonal norm form on x_0..x_7."""
        a, b, g = self.alpha, self.beta, self.gamma
        return (Fraction(1), a, b, a * b, g, a * g, b * g, a * b * g)

    def __str__(self) -> str:
        return "O({}, {}, {})".format(*(format_rational(v) for v in (self.alpha, self.beta, self.gamma)))


@dataclass(frozen=True)
class BasisProduct:
    """e_i * e_j = coefficient * e_k in a concrete algebra."""

    i: int
    j: int
    coefficient: Fraction
    k: int


@lru_cache(maxsize=256)
def _structure_constants(algebra: AlgebraParams) -> tuple[tuple[tuple[Fraction, int], ...], ...]:
    rows: list[list[tuple[Fraction, int]]] = [[(Fraction(0), 0)] * 8 for _ in range(8)]
    for p in symbolic_table():
        rows[p.i][p.j] = (p.sign * algebra.monomial(p.monomial), p.k)
    return tuple(tuple(r) for r in rows)


def basis_table(algebra: AlgebraParams) -> list[BasisProduct]:
    consts = _structure_constants(algebra)
    return [BasisProduct(i, j, consts[i][j][0], consts[i][j][1]) for i in range(8) for j in range(8)]


_ZERO8 = (Fraction(0),) * 8


class Octonion:
    """An element x_0 + x_1 e_1 + ... + x_7 e_7 of a fixed algebra.

    Instances are immutable; ``*`` is the (non-associative) algebra product,
    so ``x * y * z`` means ``(x * y) * z``.
    """

    __slots__ = ("coeffs", "algebra")

    def __init__(self, coeffs: Iterable[RationalLike], algebra: AlgebraParams):
        c = tuple(as_rational(v) for v in coeffs)
        if len(c) != 8:
            raise ValueError(f"an octonion has 8 coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "algebra", algebra)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def zero(cls, algebra: AlgebraParams) -> Octonion:
        return cls(_ZERO8, algebra)

    @classmethod
    def scalar(cls, value: RationalLike, algebra: AlgebraParams) -> Octonion:
        return cls((value, 0, 0, 0, 0, 0, 0, 0), algebra)

    @classmethod
    def unit(cls, k: int, algebra: AlgebraParams, coefficient: RationalLike = 1) -> Octonion:
        """coefficient * e_k (k = 0 is the identity)."""
        if not 0 <= k <= 7:
            raise ValueError(f"basis index must be in 0..7, got {k}")
        c = [Fraction(0)] * 8
        c[k] = as_rational(coefficient)
        return cls(c, algebra)

    def _check(self, other: Octonion) -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(f"cannot combine elements of {self.algebra} and {other.algebra}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.algebra))

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return linear_combine(1, self, 1, other)

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return linear_combine(1, self, -1, other)

    def __neg__(self) -> Octonion:
        return Octonion((-c for c in self.coeffs), self.algebra)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, s: RationalLike) -> Octonion:
        s = as_rational(s)
        return Octonion((s * c for c in self.coeffs), self.algebra)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def conj(self) -> Octonion:
        return conj(self)

    def norm(self) -> Fraction:
        return norm(self)

    def inverse(self) -> Octonion:
        return inverse(self)

    def real(self) -> Fraction:
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"Octonion({format_octonion(self)!r}, {self.algebra})"

    def __str__(self) -> str:
        return format_octonion(self)


def linear_combine(a: RationalLike, x: Octonion, b: RationalLike, y: Octonion) -> Octonion:
    x._check(y)
    a, b = as_rational(a), as_rational(b)
    return Octonion((a * u + b * v for u, v in zip(x.coeffs, y.coeffs)), x.algebra)


def mul(x: Octonion, y: Octonion) -> Octonion:
    x._check(y)
    consts = _structure_constants(x.algebra)
    out = [Fraction(0)] * 8
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        row = consts[i]
        for j, yj in enumerate(y.coeffs):
            if not yj:
                continue
            c, k = row[j]
            out[k] += c * xi * yj
    return Octonion(out, x.algebra)


def conj(x: Octonion) -> Octonion:
    c = x.coeffs
    return Octonion((c[0],) + tuple(-v for v in c[1:]), x.algebra)


def norm(x: Octonion) -> Fraction:
    return sum((w * c * c for w, c in zip(x.algebra.norm_weights, x.coeffs)), Fraction(0))


def inverse(x: Octonion) -> Octonion:
    nx = norm(x)
    if nx == 0:
        raise ZeroNormError(f"{format_octonion(x)} has norm zero in {x.algebra} and is not invertible")
    return conj(x).scale(1 / nx)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return mul(mul(x, y), z) - mul(x, mul(y, z))


def format_octonion(x: Octonion) -> str:
    """Human-readable form such as ``1/2 + 2e5`` or ``-e7``."""
    parts: list[str] = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = f"e{k}"
        elif mag.denominator == 1:
            body = f"{mag.numerator}e{k}"
        else:
            body = f"({format_rational(mag)})e{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def coefficients(x: Octonion) -> list[str]:
    return [format_rational(c) for c in x.coeffs]


# The composition-law audit draws parameters and coefficients from these.
SAMPLE_PARAMETERS = tuple(Fraction(v) for v in (1, -1, 2, -2, 3, -3)) + (Fraction(1, 2), Fraction(-1, 2))


def random_algebra(rng: random.Random) -> AlgebraParams:
    return AlgebraParams(*(rng.choice(SAMPLE_PARAMETERS) for _ in range(3)))


def random_octonion(rng: random.Random, algebra: AlgebraParams, bound: int = 6) -> Octonion:
    return Octonion((Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(8)), algebra)


def audit_composition_laws(pairs: int, seed: int) -> list[AuditReport]:
    """Composition, conjugation and alternative laws on seeded random pairs."""
    rng = random.Random(seed)
    tag = f"{pairs} seeded pairs, parameters in {{+-1, +-2, +-3, +-1/2}}"
    reports = {
        "ALG.composition": AuditReport("ALG.composition", f"n(xy) = n(x) n(y); {tag}"),
        "ALG.norm_unit": AuditReport("ALG.norm_unit", f"x conj(x) = n(x) 1; {tag}"),
        "ALG.conj_anti": AuditReport("ALG.conj_anti", f"conj(xy) = conj(y) conj(x); {tag}"),
        "ALG.alternative": AuditReport("ALG.alternative", f"(xx)y = x(xy) and y(xx) = (yx)x; {tag}"),
        "ALG.flexible": AuditReport("ALG.flexible", f"x(yx) = (xy)x; {tag}"),
    }
    for t in range(pairs):
        alg = random_algebra(rng)
        x, y = random_octonion(rng, alg), random_octonion(rng, alg)
        inputs = {"pair": t, "algebra": str(alg)}
        xy = mul(x, y)
        xx = mul(x, x)
        reports["ALG.composition"].check(inputs, norm(xy), norm(x) * norm(y))
        reports["ALG.norm_unit"].check(inputs, list(mul(x, conj(x)).coeffs), list(Octonion.scalar(norm(x), alg).coeffs))
        reports["ALG.conj_anti"].check(inputs, list(conj(xy).coeffs), list(mul(conj(y), conj(x)).coeffs))
        rep = reports["ALG.alternative"]
        rep.check(dict(inputs, law="left"), list(mul(xx, y).coeffs), list(mul(x, xy).coeffs))
        rep.check(dict(inputs, law="right"), list(mul(y, xx).coeffs), list(mul(mul(y, x), x).coeffs))
        reports["ALG.flexible"].check(inputs, list(mul(x, mul(y, x)).coeffs), list(mul(xy, x).coeffs))
    return list(reports.values())
