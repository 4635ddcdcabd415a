import pytest

from perfcone import series as ps


def test_product_free_matches_partition_counts():
    # parts of size <= 3: 1, 1, 2, 3, 4, 5, 7 (partition numbers)
    s = ps.product_free([1, 2, 3], 6)
    assert s.coeffs == (1, 1, 2, 3, 4, 5, 7)


def test_geometric_inverse_roundtrip():
    g = ps.geometric(2, 9)
    poly = ps.from_coeffs([1, 0, -1], 9)  # 1 - t^2
    assert (g * poly).coeffs == ps.one(9).coeffs
    assert poly.inverse().coeffs == g.coeffs


def test_shift_and_dilate():
    s = ps.from_coeffs([1, 2, 3], 5)
    assert s.shift(2).coeffs == (0, 0, 1, 2, 3, 0)
    assert s.dilate(2).coeffs == (1, 0, 2, 0, 3, 0)


def test_mul_truncates():
    a = ps.from_coeffs([1, 1], 3)
    b = ps.from_coeffs([1, 1], 3)
    assert (a * b).coeffs == (1, 2, 1, 0)


def test_mismatched_truncation_rejected():
    with pytest.raises(ValueError):
        ps.one(3) + ps.one(4)


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        ps.from_coeffs([2, 1], 3).inverse()


def test_rational_inverse_agrees_with_integer_inverse():
    from fractions import Fraction

    inv = ps.rational_inverse([Fraction(1), Fraction(-1)], 5)
    assert inv == tuple(Fraction(1) for _ in range(6))
