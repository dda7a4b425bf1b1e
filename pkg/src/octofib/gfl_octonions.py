"""Generalized Fibonacci-Lucas octonions G_n^{p,q} and audits of their
decomposition identities, module rank and closure properties."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from octofib.linalg import MembershipResult, RowSpace, combine, fraction_free_rank
from octofib.octonion import AlgebraParams, Octonion, basis_table, linear_combine, mul
from octofib.rationals import RationalLike, as_rational
from octofib.report import AuditReport
from octofib.sequences import gfl_number

CLAIMED_RANK = 8


@dataclass(frozen=True)
class GFLDescriptor:
    n: int
    p: Fraction
    q: Fraction

    def __init__(self, n: int, p: RationalLike, q: RationalLike):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "p", as_rational(p))
        object.__setattr__(self, "q", as_rational(q))

    def value(self, extend: bool = False) -> Fraction:
        return gfl_number(self.n, self.p, self.q, extend=extend)


def gfl_vector(n: int, p: RationalLike, q: RationalLike, extend: bool = False) -> tuple[Fraction, ...]:
    p, q = as_rational(p), as_rational(q)
    return tuple(gfl_number(n + i, p, q, extend=extend) for i in range(8))


def gfl_octonion(d: GFLDescriptor, algebra: AlgebraParams, extend: bool = False) -> Octonion:
    if d.n < 1 and not extend:
        raise ValueError(f"G_n is defined for n >= 1, got {d.n}")
    return Octonion(gfl_vector(d.n, d.p, d.q, extend=extend), algebra)


def is_zero_characterization(n: int, p: int, q: int, algebra: AlgebraParams | None = None) -> bool:
    """True when "G_n^{p,q} = 0 exactly when p = q = 0" is consistent at (n, p, q)."""
    if p < 0 or q < 0:
        raise ValueError("the characterization assumes p, q >= 0")
    algebra = algebra or AlgebraParams(1, 1, 1)
    is_zero = gfl_octonion(GFLDescriptor(n, p, q), algebra).is_zero()
    return is_zero == (p == 0 and q == 0)


def audit_zero_characterization(n_hi: int = 20, pq_hi: int = 3) -> AuditReport:
    report = AuditReport("R4.1", f"G_n^{{p,q}} = 0 iff p = q = 0; n in [1, {n_hi}], p, q in [0, {pq_hi}]")
    for n in range(1, n_hi + 1):
        for p in range(pq_hi + 1):
            for q in range(pq_hi + 1):
                report.checked += 1
                if not is_zero_characterization(n, p, q):
                    report.add_failure({"n": n, "p": p, "q": q}, "zero" if p or q else "nonzero", "consistent")
    return report


@dataclass(frozen=True)
class LinearDecomposition:
    left: GFLDescriptor
    right: GFLDescriptor
    lhs: Octonion
    rhs: Octonion

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def decompose_linear(
    a: int, d1: GFLDescriptor, b: int, d2: GFLDescriptor, algebra: AlgebraParams
) -> LinearDecomposition:
    """a G_n^{p,q} + b G_m^{p',q'} rewritten as G_n^{ap,aq} + G_m^{bp',bq'}."""
    left = GFLDescriptor(d1.n, a * d1.p, a * d1.q)
    right = GFLDescriptor(d2.n, b * d2.p, b * d2.q)
    lhs = linear_combine(a, gfl_octonion(d1, algebra), b, gfl_octonion(d2, algebra))
    rhs = gfl_octonion(left, algebra) + gfl_octonion(right, algebra)
    return LinearDecomposition(left, right, lhs, rhs)


def audit_linear_decomposition(trials: int, seed: int, algebra: AlgebraParams) -> AuditReport:
    rng = random.Random(seed)
    report = AuditReport(
        "R4.2.i",
        f"a G_n^{{p,q}} + b G_m^{{p',q'}} = G_n^{{ap,aq}} + G_m^{{bp',bq'}} in {algebra}; {trials} seeded tuples",
    )
    for _ in range(trials):
        a, b, p, q, p2, q2 = (rng.randint(-20, 20) for _ in range(6))
        n, m = rng.randint(1, 60), rng.randint(1, 60)
        dec = decompose_linear(a, GFLDescriptor(n, p, q), b, GFLDescriptor(m, p2, q2), algebra)
        report.check(
            {"a": a, "b": b, "n": n, "m": m, "p": p, "q": q, "p'": p2, "q'": q2},
            list(dec.lhs.coeffs),
            list(dec.rhs.coeffs),
        )
    return report


@dataclass(frozen=True)
class ScaledTerm:
    """scale * g_n^{p,q}."""

    scale: int
    descriptor: GFLDescriptor

    def value(self, extend: bool) -> Fraction:
        return self.scale * self.descriptor.value(extend=extend)


@dataclass(frozen=True)
class ProductDecomposition:
    terms: tuple[ScaledTerm, ...]
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def product_terms(n: int, m: int, p, q, p2, q2) -> tuple[ScaledTerm, ...]:
    """The six terms whose sum equals 5 g_n^{p,q} * 5 g_m^{p',q'}."""
    s = 1 if m % 2 == 0 else -1
    G = GFLDescriptor
    return (
        ScaledTerm(5, G(m + n - 2, 5 * p2 * q, p * p2)),
        ScaledTerm(5, G(m + n - 1, 5 * p2 * q, 0)),
        ScaledTerm(5, G(n - m, 5 * p2 * q * s, p * p2 * s)),
        ScaledTerm(5, G(n - m + 1, 5 * p2 * q * s, 0)),
        ScaledTerm(5, G(m + n, 5 * p * q2, 5 * q * q2)),
        ScaledTerm(5, G(n - m, 5 * p * q2 * s, 5 * q * q2 * s)),
    )


def product_decompose_numbers(
    n: int, m: int, pq: tuple, pq2: tuple, extend: bool = False
) -> ProductDecomposition:
    """Expand 25 g_n^{p,q} g_m^{p',q'} into six generalized Fibonacci-Lucas terms.

    Requires n > m >= 1 unless ``extend`` admits non-positive indices.
    """
    if not extend and not n > m >= 1:
        raise ValueError(f"need n > m >= 1 (got n={n}, m={m}); pass extend=True for other indices")
    p, q = (as_rational(v) for v in pq)
    p2, q2 = (as_rational(v) for v in pq2)
    terms = product_terms(n, m, p, q, p2, q2)
    lhs = 25 * gfl_number(n, p, q, extend=extend) * gfl_number(m, p2, q2, extend=extend)
    rhs = sum((t.value(extend) for t in terms), Fraction(0))
    return ProductDecomposition(terms, lhs, rhs)


PQ_GRID: tuple[tuple[int, int, int, int], ...] = tuple(
    (p, q, p2, q2) for p, q in ((1, 0), (0, 1), (2, -3), (-1, 4)) for p2, q2 in ((1, 0), (0, 1), (3, 2), (-2, -1))
)


def audit_product_expansion(n_hi: int = 30, grid: Sequence[tuple] = PQ_GRID) -> AuditReport:
    report = AuditReport(
        "R4.2.ii",
        f"25 g_n g_m equals the six-term expansion; 1 <= m < n <= {n_hi}, {len(grid)} (p,q,p',q') tuples",
    )
    for n in range(2, n_hi + 1):
        for m in range(1, n):
            for p, q, p2, q2 in grid:
                dec = product_decompose_numbers(n, m, (p, q), (p2, q2))
                report.check({"n": n, "m": m, "p": p, "q": q, "p'": p2, "q'": q2}, dec.lhs, dec.rhs)
    return report


def audit_product_expansion_extended(lo: int = -6, hi: int = 6, grid: Sequence[tuple] = PQ_GRID) -> AuditReport:
    """The same expansion for index pairs outside n > m >= 1 (negative-index extension)."""
    report = AuditReport(
        "R4.2.ii.ext",
        f"[extension] six-term expansion for n, m in [{lo}, {hi}] outside n > m >= 1",
    )
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            if n > m >= 1:
                continue
            for p, q, p2, q2 in grid:
                dec = product_decompose_numbers(n, m, (p, q), (p2, q2), extend=True)
                report.checked += 1
                if not dec.holds:
                    # outside the stated domain: not a counterexample
                    report.add_finding(
                        f"expansion does not extend to n={n}, m={m}, (p,q,p',q')=({p},{q},{p2},{q2})",
                        dec.lhs,
                        dec.rhs,
                    )
    return report


@dataclass(frozen=True)
class GeneratorMatrix:
    rows: tuple[tuple[Fraction, ...], ...]


def generator_matrix(N: int) -> GeneratorMatrix:
    """Coefficient vectors of G_n^{1,0} and G_n^{0,1} for n = 1..N; by
    linearity in (p, q) they generate every G_n^{p,q} with n <= N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    rows = []
    for n in range(1, N + 1):
        rows.append(gfl_vector(n, 1, 0))
        rows.append(gfl_vector(n, 0, 1))
    return GeneratorMatrix(tuple(rows))


def satisfies_window_recurrence(row: Sequence[RationalLike], start: int = 2) -> bool:
    r = [as_rational(v) for v in row]
    return all(r[i] == r[i - 1] + r[i - 2] for i in range(start, 8))


def lattice_rank(gm: GeneratorMatrix) -> int:
    if not gm.rows:
        raise ValueError("empty generator matrix")
    return fraction_free_rank(gm.rows)


_UNIT_ROW = (Fraction(1),) + (Fraction(0),) * 7


def span_membership(x: Octonion | Sequence[RationalLike], basis: GeneratorMatrix, include_unit: bool = False) -> MembershipResult:
    """Exact test of whether x lies in the rational row span of ``basis``
    (optionally with the unit 1 adjoined). Coordinates are per row, with the
    unit's coordinate last when adjoined."""
    vec = x.coeffs if isinstance(x, Octonion) else tuple(as_rational(v) for v in x)
    rows = list(basis.rows) + ([_UNIT_ROW] if include_unit else [])
    return RowSpace(rows).membership(vec)


def window_membership(x: Octonion | Sequence[RationalLike], include_unit: bool = False) -> bool:
    """Closed-form membership in span{G_n^{p,q}}, or that span plus the unit.

    The span is the plane of 8-vectors obeying s_i = s_{i-1} + s_{i-2}
    (i >= 2); adjoining 1 only frees the i = 2 condition.
    """
    vec = x.coeffs if isinstance(x, Octonion) else x
    return satisfies_window_recurrence(vec, start=3 if include_unit else 2)


def _product_through_table(d1: GFLDescriptor, d2: GFLDescriptor, algebra: AlgebraParams) -> list[Fraction]:
    """Coefficients of 5G * 5G' with every 25 g_i g_j replaced by its six-term expansion.

    Equal indices (i == j) make the n - m terms index g_0, so those pairs are
    expanded under the negative-index extension.
    """
    out = [Fraction(0)] * 8
    for bp in basis_table(algebra):
        i_idx, j_idx = d1.n + bp.i, d2.n + bp.j
        if i_idx >= j_idx:
            dec = product_decompose_numbers(i_idx, j_idx, (d1.p, d1.q), (d2.p, d2.q), extend=i_idx == j_idx)
        else:
            dec = product_decompose_numbers(j_idx, i_idx, (d2.p, d2.q), (d1.p, d1.q))
        out[bp.k] += bp.coefficient * dec.rhs
    return out


def audit_module_structure(N: int, trials: int, algebra: AlgebraParams, seed: int = 0) -> list[AuditReport]:
    if N < 2 or trials < 1:
        raise ValueError("need N >= 2 and trials >= 1")
    gm = generator_matrix(N)
    space = RowSpace(gm.rows)
    rng = random.Random(seed)

    closure = AuditReport(
        "T4.1.i.closure",
        f"integer sums of G_n^{{p,q}} stay in the generator span; N={N}, {trials} seeded sums",
    )
    for t in range(trials):
        terms = [(rng.randint(1, 3 * N), rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(rng.randint(1, 5))]
        total = Octonion.zero(algebra)
        for n, p, q in terms:
            total = total + gfl_octonion(GFLDescriptor(n, p, q), algebra)
        res = space.membership(total.coeffs)
        closure.checked += 1
        if not res.member:
            closure.add_failure({"trial": t, "terms": [list(x) for x in terms]}, "not in span", "in span")
        elif combine(res.coordinates, gm.rows) != total.coeffs:
            closure.add_failure({"trial": t, "terms": [list(x) for x in terms]}, "bad coordinates", "in span")

    rank = AuditReport("T4.1.i.rank", f"rank of the generated Z-module; generators G_n^{{1,0}}, G_n^{{0,1}}, n in [1, {N}]")
    computed = lattice_rank(gm)
    rank.check({"N": N, "check": "fraction-free vs rational elimination"}, computed, space.rank)
    rank.check({"N": N, "check": "all generators obey the window recurrence"}, all(map(satisfies_window_recurrence, gm.rows)), True)
    if computed != CLAIMED_RANK:
        rank.add_finding("rank of the module spanned by generalized Fibonacci-Lucas octonions", CLAIMED_RANK, computed)

    mult = AuditReport(
        "T4.1.ii.mul",
        f"5G * 5G' lies in span(generators, 1) in {algebra}; {trials} seeded pairs, rational p, q",
    )
    unit_space = RowSpace(list(gm.rows) + [_UNIT_ROW])
    outside = []
    for t in range(trials):
        d1, d2 = (
            GFLDescriptor(rng.randint(1, N), Fraction(rng.randint(-6, 6), rng.randint(1, 3)), Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
            for _ in range(2)
        )
        prod = mul(gfl_octonion(d1, algebra).scale(5), gfl_octonion(d2, algebra).scale(5))
        verdict = unit_space.membership(prod.coeffs).member
        mult.check({"trial": t, "pair": [[d1.n, d1.p, d1.q], [d2.n, d2.p, d2.q]], "check": "elimination vs window oracle"}, verdict, window_membership(prod, include_unit=True))
        if not verdict:
            outside.append([[d1.n, d1.p, d1.q], [d2.n, d2.p, d2.q]])
    if outside:
        mult.add_finding(
            f"products outside span(generators, 1): {len(outside)} of {trials}; first pairs (n, p, q)",
            "closed under multiplication",
            outside[:5],
        )

    decomp = AuditReport(
        "T4.1.ii.decomp",
        f"each coefficient of 5G * 5G' in {algebra} equals its expansion through the six-term identity; {trials} seeded integer pairs",
    )
    for t in range(trials):
        d1, d2 = (GFLDescriptor(rng.randint(1, N), rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(2))
        prod = mul(gfl_octonion(d1, algebra).scale(5), gfl_octonion(d2, algebra).scale(5))
        decomp.check({"trial": t, "pair": [[d1.n, d1.p, d1.q], [d2.n, d2.p, d2.q]]}, list(prod.coeffs), _product_through_table(d1, d2, algebra))

    return [closure, rank, mult, decomp]
