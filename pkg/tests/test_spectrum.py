import math
from fractions import Fraction

import pytest

from subsum.spectrum import QuadraticRoot, SpectrumSpec, quadratic_roots


def test_rational_roots_collapse_to_ints():
    assert quadratic_roots(1, 6) == (3, -2)
    assert quadratic_roots(0, 0) == (0, 0)


def test_irrational_roots():
    hi, lo = quadratic_roots(1, 4)
    assert hi == QuadraticRoot(1, 4, +1) and lo == QuadraticRoot(1, 4, -1)
    assert hi.value == pytest.approx((1 + math.sqrt(17)) / 2)
    assert lo.value == pytest.approx((1 - math.sqrt(17)) / 2)
    assert str(hi) == "(1+sqrt(17))/2"
    assert hi.to_json() == {"T": 1, "C": 4, "sign": "+"}


def test_complex_roots_rejected():
    with pytest.raises(ValueError):
        quadratic_roots(0, -1)


def test_from_pairs_merges_and_sorts():
    spec = SpectrumSpec.from_pairs([(2, 1), (-1, 1), (-1, 2), (5, 0)])
    assert spec.entries == ((-1, 3), (2, 1))
    assert spec.size == 4
    assert spec.numeric() == [-1.0, -1.0, -1.0, 2.0]


def test_exact_moments_with_surds():
    # K4 minus an edge: 5 edges
    hi, lo = quadratic_roots(1, 4)
    spec = SpectrumSpec.from_pairs([(hi, 1), (lo, 1), (0, 1), (-1, 1)])
    assert spec.trace() == 0
    assert spec.second_moment() == Fraction(10)
    assert [round(x, 4) for x in spec.numeric()] == [-1.5616, -1.0, 0.0, 2.5616]


def test_unpaired_surd_is_not_rational():
    spec = SpectrumSpec.from_pairs([(QuadraticRoot(1, 4, 1), 1)])
    with pytest.raises(ArithmeticError):
        spec.trace()


def test_addition():
    a = SpectrumSpec.from_pairs([(2, 1), (-1, 2)])
    b = SpectrumSpec.from_pairs([(1, 1), (-1, 1)])
    assert (a + b).entries == ((-1, 3), (1, 1), (2, 1))


def test_json():
    spec = SpectrumSpec.from_pairs([(QuadraticRoot(1, 4, -1), 1), (3, 2)])
    assert spec.to_json() == [
        {"value": {"T": 1, "C": 4, "sign": "-"}, "multiplicity": 1},
        {"value": 3, "multiplicity": 2},
    ]
