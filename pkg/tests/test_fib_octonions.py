from fractions import Fraction

import pytest

from octofib.fib_octonions import (
    ap_algebra,
    audit_invertible_family,
    audit_negative_norms,
    audit_norm_formula,
    audit_sign_polynomials,
    audit_family_split,
    audit_worked_example,
    expanded_coefficients,
    factored_coefficients,
    fibonacci_octonion,
    invertibility_scan,
    norm_closed_form,
    norm_coefficients,
    norm_direct,
)

A_SAMPLES = [-4, -2, Fraction(-3, 2), 0, 1, Fraction(7, 3)]


def weighted_squares(n, a):
    """Independent oracle: iterate the Fibonacci recurrence and weight by hand."""
    a = Fraction(a)
    x, y = 0, 1
    for _ in range(n):
        x, y = y, x + y
    window = []
    for _ in range(8):
        window.append(x)
        x, y = y, x + y
    al, be, ga = a + 1, 2 * a + 1, 3 * a + 1
    weights = [1, al, be, al * be, ga, al * ga, be * ga, al * be * ga]
    return sum(w * f * f for w, f in zip(weights, window))


def test_anchor_values():
    assert weighted_squares(0, 0) == 273
    assert weighted_squares(0, 1) == 5089
    assert norm_direct(0, 0) == norm_closed_form(0, 0) == 273
    assert norm_direct(0, 1) == norm_closed_form(0, 1) == 5089
    assert norm_direct(0, Fraction(-3, 2)) == Fraction(-519, 4)


@pytest.mark.parametrize("a", A_SAMPLES)
def test_closed_form_equals_direct(a):
    for n in range(0, 101):
        d = norm_direct(n, a)
        assert d == norm_closed_form(n, a)
        if n <= 30:
            assert d == weighted_squares(n, a)


def test_printed_coefficients_at_minus_four():
    c = norm_coefficients(-4)
    assert (c.c6, c.c7, c.c_alt) == (-1144, -1851, -96)
    assert expanded_coefficients(-4) == c


def test_closed_form_coefficients_at_minus_three_halves():
    c = norm_coefficients(Fraction(-3, 2))
    assert (c.c6, c.c7, c.c_alt) == (Fraction(-15, 2), Fraction(-21, 4), Fraction(-3, 2))


def test_factored_forms():
    f, e = factored_coefficients(-4), expanded_coefficients(-4)
    assert f.c6 == e.c6 and f.c_alt == e.c_alt
    assert f.c7 != e.c7
    # the middle form is off by a constant
    assert factored_coefficients(0).c7 * 5 == 97 and expanded_coefficients(0).c7 * 5 == 105
    assert 43**2 - 4 * 141 * 126 < 0


def test_fibonacci_octonion():
    x = fibonacci_octonion(3, ap_algebra(0))
    assert x.coeffs == (2, 3, 5, 8, 13, 21, 34, 55)
    with pytest.raises(ValueError):
        fibonacci_octonion(-1, ap_algebra(0))


@pytest.mark.parametrize("a", [-1, Fraction(-1, 2), Fraction(-1, 3)])
def test_degenerate_family(a):
    with pytest.raises(ValueError):
        ap_algebra(a)


def test_scan_counts():
    neg = invertibility_scan(-4, 0, 100)
    assert (neg.negative, neg.positive, neg.zero) == (101, 0, 0)
    assert neg.all_invertible and neg.first_negative == 0
    pos = invertibility_scan(0, 0, 100)
    assert (pos.positive, pos.negative) == (101, 0)
    mid = invertibility_scan(Fraction(-3, 2), 0, 100)
    assert mid.negative == 101 and mid.all_invertible
    assert mid.to_dict()["a"] == "-3/2"


def test_norm_audits_pass():
    assert audit_norm_formula(0, 100, A_SAMPLES).status == "pass"
    rep = audit_negative_norms([-2, Fraction(-5, 2), -3, -4, -10], 0, 100)
    assert rep.status == "pass" and rep.checked == 505
    assert audit_invertible_family(-2, 0, 100).status == "pass"
    assert audit_family_split([Fraction(-3, 2), -2, -4, -10]).status == "pass"


def test_sign_audit_rejects_out_of_scope():
    with pytest.raises(ValueError):
        audit_negative_norms([-1 - Fraction(1, 5)], 0, 5)


def test_worked_example_minus_four_passes():
    rep = audit_worked_example(-4, 0, 100)
    assert rep.status == "pass" and rep.checked == 101


def test_worked_example_minus_three_halves_is_a_finding():
    rep = audit_worked_example(Fraction(-3, 2), 0, 100)
    assert rep.status == "finding"
    assert rep.failures == []
    whats = [f["what"] for f in rep.findings]
    assert any("coefficients" in w for w in whats)
    assert any("sign claim fails at n=0" in w for w in whats)
    sign = next(f for f in rep.findings if "sign" in f["what"])
    assert sign["computed"] == Fraction(-519, 4)


def test_polynomial_audit():
    rep = audit_sign_polynomials([-10, -4, -3, Fraction(-5, 2), -2, -1, 0, 1, 2])
    assert rep.failures == []
    assert rep.status == "finding"
    (finding,) = rep.findings
    assert "c7" in finding["what"]
    assert len(finding["computed"]) >= 1
    with pytest.raises(ValueError):
        audit_sign_polynomials([0, 1, 2])
