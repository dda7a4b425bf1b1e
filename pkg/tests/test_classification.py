from fractions import Fraction

import pytest

from octofib.classification import (
    SPLIT_SIGN_PATTERNS,
    AlgebraClass,
    audit_quaternion_example,
    audit_split_isotropy,
    audit_stated_classes,
    classify,
    classify_values,
    find_isotropic_octonion,
    iter_norm_representations,
    quaternion_norm,
    search_norm_representation,
)
from octofib.fib_octonions import ap_algebra
from octofib.octonion import AlgebraParams


@pytest.mark.parametrize(
    "params,expected",
    [
        ((1, 1, 1), AlgebraClass.DIVISION),
        ((2, Fraction(1, 3), 7), AlgebraClass.DIVISION),
        ((1, 1, -1), AlgebraClass.SPLIT),
        ((-3, -7, -11), AlgebraClass.SPLIT),
        ((-1, -3, -5), AlgebraClass.SPLIT),
    ],
)
def test_classify(params, expected):
    assert classify_values(*params) is expected


def test_zero_parameter_rejected():
    with pytest.raises(ValueError):
        classify_values(1, 0, 1)


@pytest.mark.parametrize("a", [Fraction(-3, 2), -2, -4, -10])
def test_family_split_below_minus_one(a):
    assert classify(ap_algebra(a)) is AlgebraClass.SPLIT


def test_family_division_for_positive_a():
    assert classify(ap_algebra(0)) is AlgebraClass.DIVISION
    assert classify(ap_algebra(Fraction(7, 3))) is AlgebraClass.DIVISION


def test_isotropic_witness_for_every_split_pattern():
    assert len(SPLIT_SIGN_PATTERNS) == 7
    for params in SPLIT_SIGN_PATTERNS:
        alg = AlgebraParams(*params)
        w = find_isotropic_octonion(alg)
        assert w is not None and not w.is_zero() and w.norm() == 0
    assert find_isotropic_octonion(AlgebraParams(1, 1, 1), height_bound=3) is None


def test_split_family_member_has_zero_divisor():
    # a = -2 gives O(-1, -3, -5)
    w = find_isotropic_octonion(ap_algebra(-2), height_bound=2)
    assert w is not None and w.norm() == 0


def test_quaternion_search_examples():
    assert search_norm_representation(1, 1, 1, 1) == (1, 0, 0, 0)
    assert search_norm_representation(1, 1, -1, 10) is None
    hit = search_norm_representation(-3, -7, 11, 5)
    assert hit is not None and quaternion_norm(hit, -3, -7) == 11


def test_quaternion_search_contains_listed_witness():
    assert quaternion_norm((3, 2, 1, 1), -3, -7) == 11
    sols = set(iter_norm_representations(-3, -7, 11, 3))
    assert (3, 2, 1, 1) in sols
    assert all(quaternion_norm(v, -3, -7) == 11 for v in sols)


def test_search_is_complete_for_small_height():
    # brute force over all coordinates in {-1, 0, 1}
    import itertools

    brute = {
        v for v in itertools.product((-1, 0, 1), repeat=4) if quaternion_norm(v, -3, -7) == 11
    }
    assert set(iter_norm_representations(-3, -7, 11, 1)) == brute


def test_search_deterministic():
    a = list(iter_norm_representations(-3, -7, 11, 3))
    b = list(iter_norm_representations(-3, -7, 11, 3))
    assert a == b and len(set(a)) == len(a)


def test_search_validation():
    with pytest.raises(ValueError):
        search_norm_representation(1, 1, 1, 0)


def test_audits_pass():
    for rep in (audit_stated_classes(), audit_split_isotropy(), audit_quaternion_example(5)):
        assert rep.status == "pass", rep.to_dict()
        assert rep.checked > 0
