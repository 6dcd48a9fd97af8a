import random
from fractions import Fraction as F

import pytest

from linperiod.series import (
    NotAUnitError,
    TruncatedSeries,
    format_scalar,
    parse_scalar,
    poly_mul,
    series_add,
    series_invert,
    series_mul,
)

SEED = 90287


def random_series(rng, order, unit=False):
    coeffs = [F(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(order + 1)]
    if unit and coeffs[0] == 0:
        coeffs[0] = F(1)
    return TruncatedSeries(order, tuple(coeffs))


def test_add_examples():
    one_plus_t = TruncatedSeries.from_coeffs([1, 1], 2)
    one_minus_t = TruncatedSeries.from_coeffs([1, -1], 2)
    assert series_add(one_plus_t, one_minus_t).coeffs == (F(2), F(0), F(0))
    a = TruncatedSeries.from_coeffs([F(1, 2), F(1, 3)], 1)
    b = TruncatedSeries.from_coeffs([F(1, 2), F(2, 3)], 1)
    assert series_add(a, b).coeffs == (F(1), F(1))
    zero = TruncatedSeries.from_coeffs([], 1)
    assert series_add(a, zero) == a


def test_mul_examples():
    one_plus_t = TruncatedSeries.from_coeffs([1, 1], 2)
    one_minus_t = TruncatedSeries.from_coeffs([1, -1], 2)
    assert series_mul(one_plus_t, one_minus_t).coeffs == (F(1), F(0), F(-1))
    geom = TruncatedSeries.from_coeffs([1, 1, 1], 2)
    assert series_mul(geom, one_minus_t).coeffs == (F(1), F(0), F(0))
    one = TruncatedSeries.one(2)
    assert series_mul(geom, one) == geom


def test_invert_examples():
    geom = series_invert(TruncatedSeries.from_coeffs([1, -1], 3))
    assert geom.coeffs == (F(1), F(1), F(1), F(1))
    assert series_invert(TruncatedSeries.one(4)) == TruncatedSeries.one(4)
    # (1-t)(1-2t) inverted: coefficient of t^k is 2^(k+1) - 1
    prod = TruncatedSeries.from_coeffs(poly_mul([F(1), F(-1)], [F(1), F(-2)]), 2)
    assert series_invert(prod).coeffs == (F(1), F(3), F(7))


def test_invert_requires_unit():
    with pytest.raises(NotAUnitError):
        series_invert(TruncatedSeries.from_coeffs([0, 1], 3))


def test_order_mismatch_rejected():
    a = TruncatedSeries.one(2)
    b = TruncatedSeries.one(3)
    with pytest.raises(ValueError, match="order mismatch"):
        series_add(a, b)
    with pytest.raises(ValueError, match="order mismatch"):
        series_mul(a, b)


def test_ring_axioms_random():
    rng = random.Random(SEED)
    for _ in range(40):
        order = rng.randint(0, 7)
        a = random_series(rng, order)
        b = random_series(rng, order)
        c = random_series(rng, order)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a


def test_inverse_is_two_sided_random():
    rng = random.Random(SEED + 1)
    for _ in range(30):
        a = random_series(rng, rng.randint(0, 8), unit=True)
        one = TruncatedSeries.one(a.order)
        assert a * a.invert() == one
        assert a.invert() * a == one


def test_truncation_coherence():
    rng = random.Random(SEED + 2)
    for _ in range(20):
        a = random_series(rng, 8, unit=True)
        b = random_series(rng, 8)
        for m in (0, 3, 5):
            assert (a * b).truncate(m) == a.truncate(m) * b.truncate(m)
            assert a.invert().truncate(m) == a.truncate(m).invert()


def test_scalar_wire_format():
    assert format_scalar(F(3)) == "3"
    assert format_scalar(F(-5, 7)) == "-5/7"
    assert parse_scalar("-5/7") == F(-5, 7)
    assert parse_scalar("12") == F(12)


def test_series_json_round_trip():
    s = TruncatedSeries.from_coeffs([F(1), F(-1, 2), F(0), F(7, 3)], 3)
    assert s.to_json() == '["1", "-1/2", "0", "7/3"]'
    assert TruncatedSeries.from_json(s.to_json()) == s
