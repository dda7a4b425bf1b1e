from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st
from table_literal import literal_products

from octofib.octonion import (
    AlgebraMismatchError,
    AlgebraParams,
    Octonion,
    ZeroNormError,
    associator,
    audit_composition_laws,
    basis_table,
    basis_table_json,
    conj,
    format_octonion,
    inverse,
    mul,
    norm,
)

GOLDEN = Path(__file__).parent / "golden" / "basis_table.json"

ALGEBRAS = [(1, 1, 1), (1, 1, -1), (-3, -7, -11), (2, 3, 4)]


@pytest.mark.parametrize("params", ALGEBRAS)
def test_table_matches_transcription(params):
    alg = AlgebraParams(*params)
    expected = literal_products(alg)
    got = {(p.i, p.j): (p.coefficient, p.k) for p in basis_table(alg)}
    assert len(got) == 64
    assert sum(got[key] == expected[key] for key in expected) == 64


@pytest.mark.parametrize("params", ALGEBRAS)
def test_product_of_units_uses_table(params):
    alg = AlgebraParams(*params)
    expected = literal_products(alg)
    for (i, j), (c, k) in expected.items():
        assert mul(Octonion.unit(i, alg), Octonion.unit(j, alg)) == Octonion.unit(k, alg, c)


def test_golden_file_bytes():
    assert basis_table_json() == GOLDEN.read_text()


def test_norm_examples():
    alg = AlgebraParams(1, 1, -1)
    e = lambda k: Octonion.unit(k, alg)
    assert norm(Octonion.scalar(1, alg) + e(1)) == 2
    assert norm(e(2) + e(4)) == 0
    with pytest.raises(ZeroNormError):
        inverse(e(2) + e(4))


def test_inverse_examples():
    alg = AlgebraParams(1, 1, 1)
    x = Octonion.scalar(1, alg) + Octonion.unit(1, alg)
    inv = inverse(x)
    assert inv.coeffs == (Fraction(1, 2), Fraction(-1, 2)) + (Fraction(0),) * 6
    one = Octonion.scalar(1, alg)
    assert mul(x, inv) == one and mul(inv, x) == one
    assert inverse(Octonion.unit(3, AlgebraParams(2, 3, 5))) == Octonion.unit(3, AlgebraParams(2, 3, 5), Fraction(-1, 6))


def test_mismatched_algebras():
    x = Octonion.unit(1, AlgebraParams(1, 1, 1))
    y = Octonion.unit(1, AlgebraParams(1, 1, -1))
    with pytest.raises(AlgebraMismatchError):
        mul(x, y)
    with pytest.raises(AlgebraMismatchError):
        x + y


def test_validation():
    with pytest.raises(ValueError):
        AlgebraParams(0, 1, 1)
    with pytest.raises(ValueError):
        Octonion([1, 2, 3], AlgebraParams(1, 1, 1))
    with pytest.raises(AttributeError):
        Octonion.zero(AlgebraParams(1, 1, 1)).coeffs = ()


def test_non_associative():
    alg = AlgebraParams(1, 1, 1)
    e = lambda k: Octonion.unit(k, alg)
    assert mul(mul(e(1), e(2)), e(4)) == e(7)
    assert mul(e(1), mul(e(2), e(4))) == -e(7)
    assert associator(e(1), e(2), e(4)) == e(7).scale(2)


def test_formatting():
    alg = AlgebraParams(1, 1, 1)
    assert format_octonion(Octonion.zero(alg)) == "0"
    assert format_octonion(Octonion([Fraction(1, 2), 0, 0, 0, 0, 2, 0, 0], alg)) == "1/2 + 2e5"
    assert format_octonion(-Octonion.unit(7, alg)) == "-e7"
    assert format_octonion(Octonion.unit(1, alg, Fraction(-1, 2))) == "-(1/2)e1"


params_st = st.tuples(*[st.sampled_from([1, -1, 2, -3, Fraction(1, 2)])] * 3).map(lambda t: AlgebraParams(*t))
coeff_st = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def elements(draw, count):
    alg = draw(params_st)
    return [Octonion(draw(st.lists(coeff_st, min_size=8, max_size=8)), alg) for _ in range(count)]


@settings(max_examples=75, deadline=None)
@given(elements(2))
def test_composition_and_conjugation(xy):
    x, y = xy
    assert norm(mul(x, y)) == norm(x) * norm(y)
    assert mul(x, conj(x)) == Octonion.scalar(norm(x), x.algebra)
    assert conj(mul(x, y)) == mul(conj(y), conj(x))
    # x + conj(x) is twice the real part
    assert x + conj(x) == Octonion.scalar(2 * x.real(), x.algebra)


@settings(max_examples=75, deadline=None)
@given(elements(2))
def test_alternative_laws(xy):
    x, y = xy
    assert mul(mul(x, x), y) == mul(x, mul(x, y))
    assert mul(y, mul(x, x)) == mul(mul(y, x), x)
    assert mul(x, mul(y, x)) == mul(mul(x, y), x)
    assert associator(x, y, x).is_zero()


@settings(max_examples=50, deadline=None)
@given(elements(3))
def test_bilinearity(xyz):
    x, y, z = xyz
    assert mul(x + y, z) == mul(x, z) + mul(y, z)
    assert mul(z, x + y) == mul(z, x) + mul(z, y)
    assert mul(x, 3 * y) == 3 * mul(x, y)


def test_imaginary_units_anticommute():
    alg = AlgebraParams(2, -3, Fraction(1, 2))
    for i in range(1, 8):
        for j in range(1, 8):
            if i != j:
                ei, ej = Octonion.unit(i, alg), Octonion.unit(j, alg)
                assert mul(ei, ej) == -mul(ej, ei)


def test_composition_audit():
    reports = audit_composition_laws(500, seed=0)
    assert [r.claim_id for r in reports] == [
        "ALG.composition", "ALG.norm_unit", "ALG.conj_anti", "ALG.alternative", "ALG.flexible"
    ]
    assert all(r.status == "pass" and r.checked >= 500 for r in reports)
