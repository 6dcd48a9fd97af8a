import itertools
import random
from fractions import Fraction as F

import pytest

from linperiod.schur import (
    SATAKE_VALUE_POOL,
    DominantWeight,
    SatakeData,
    SingularDenominatorError,
    alt_statistic,
    det_fraction_free,
    enumerate_weights,
    homogeneous_table,
    random_satake_data,
    schur_alternant,
    schur_jacobi_trudi,
    schur_laurent,
    semistandard_tableau_count,
    whittaker_value,
)

SEED = 90287


def brute_weight_count(n, total):
    """Independent oracle: filter all nonnegative n-tuples bounded by total."""
    return sum(
        1
        for tup in itertools.product(range(total + 1), repeat=n)
        if sum(tup) == total and all(a >= b for a, b in zip(tup, tup[1:]))
    )


def test_weight_validation():
    with pytest.raises(ValueError):
        DominantWeight((1, 2))
    with pytest.raises(ValueError):
        DominantWeight(())
    w = DominantWeight((3, 1, 0, -2))
    assert w.size == 2 and not w.is_nonnegative


def test_enumerate_examples():
    assert [w.parts for w in enumerate_weights(2, 2)] == [(2, 0), (1, 1)]
    assert [w.parts for w in enumerate_weights(3, 0)] == [(0, 0, 0)]
    assert [w.parts for w in enumerate_weights(3, 3)] == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]


def test_enumerate_is_descending_and_duplicate_free():
    for n in range(1, 5):
        for total in range(0, 7):
            ws = [w.parts for w in enumerate_weights(n, total)]
            assert ws == sorted(set(ws), reverse=True)


def test_enumerate_count_against_brute_force():
    for n in range(1, 5):
        for total in range(0, 7):
            assert len(enumerate_weights(n, total)) == brute_weight_count(n, total)


def test_alt_statistic():
    assert alt_statistic(DominantWeight((2, 0))) == 2
    assert alt_statistic(DominantWeight((1, 1))) == 0
    assert alt_statistic(DominantWeight((3, 2, 1, 0))) == 2
    # even rank: equals the pairwise sum of (l_{2i-1} - l_{2i})
    rng = random.Random(SEED)
    for _ in range(50):
        m = rng.randint(1, 4)
        parts = sorted((rng.randint(0, 6) for _ in range(2 * m)), reverse=True)
        w = DominantWeight(tuple(parts))
        pairwise = sum(parts[2 * i] - parts[2 * i + 1] for i in range(m))
        assert alt_statistic(w) == pairwise


def test_homogeneous_table_single_variable():
    h = homogeneous_table((F(3),), 4)
    assert h == (F(1), F(3), F(9), F(27), F(81))


def test_det_fraction_free():
    assert det_fraction_free([]) == 1
    assert det_fraction_free([[F(5)]]) == 5
    assert det_fraction_free([[F(1), F(2)], [F(3), F(4)]]) == -2
    # needs a row swap
    assert det_fraction_free([[F(0), F(1)], [F(1), F(0)]]) == -1
    assert det_fraction_free([[F(1), F(2)], [F(2), F(4)]]) == 0


def test_schur_examples():
    assert schur_jacobi_trudi(DominantWeight((0, 0)), (F(5), F(9))) == 1
    assert schur_jacobi_trudi(DominantWeight((1, 0)), (F(2), F(3))) == 5
    z = (F(1), F(2))
    assert schur_jacobi_trudi(DominantWeight((2, 1)), z) == 6
    assert schur_alternant(DominantWeight((0, 0, 0)), (F(1), F(2), F(3))) == 1
    assert schur_alternant(DominantWeight((1, 0)), (F(2), F(3))) == 5
    assert schur_alternant(DominantWeight((2, 1)), (F(1), F(2))) == 6


def test_schur_rejects_bad_input():
    with pytest.raises(ValueError, match="schur_laurent"):
        schur_jacobi_trudi(DominantWeight((0, -1)), (F(1), F(2)))
    with pytest.raises(SingularDenominatorError):
        schur_alternant(DominantWeight((1, 0)), (F(2), F(2)))
    with pytest.raises(ValueError):
        schur_jacobi_trudi(DominantWeight((1, 0)), (F(1), F(2), F(3)))


def test_schur_laurent():
    assert schur_laurent(DominantWeight((0, 0)), (F(4), F(5))) == 1
    z = (F(2), F(3))
    assert schur_laurent(DominantWeight((0, -1)), z) == F(5, 6)
    assert schur_laurent(DominantWeight((-1, -1)), z) == F(1, 6)
    # agrees with Jacobi-Trudi on nonnegative weights
    rng = random.Random(SEED)
    for _ in range(20):
        n = rng.randint(1, 4)
        w = rng.choice(enumerate_weights(n, rng.randint(0, 5)))
        zs = tuple(rng.choice(SATAKE_VALUE_POOL) for _ in range(n))
        assert schur_laurent(w, zs) == schur_jacobi_trudi(w, zs)


def test_oracle_equivalence_spot():
    rng = random.Random(SEED + 3)
    for n in range(1, 5):
        for total in range(0, 5):
            for w in enumerate_weights(n, total):
                z = tuple(rng.sample(SATAKE_VALUE_POOL, n))
                assert schur_jacobi_trudi(w, z) == schur_alternant(w, z), (w, z)


def test_homogeneity():
    rng = random.Random(SEED + 4)
    for _ in range(25):
        n = rng.randint(1, 4)
        w = rng.choice(enumerate_weights(n, rng.randint(0, 5)))
        z = tuple(rng.choice(SATAKE_VALUE_POOL) for _ in range(n))
        c = rng.choice([F(2), F(-3), F(1, 2), F(5, 3)])
        scaled = tuple(c * zi for zi in z)
        assert schur_jacobi_trudi(w, scaled) == c**w.size * schur_jacobi_trudi(w, z)


def test_tableau_count_oracle():
    # s_lambda(1,...,1) counts semistandard tableaux with entries in 1..n
    ones = {n: tuple(F(1) for _ in range(n)) for n in range(1, 5)}
    for n in range(1, 5):
        for total in range(0, 5):
            for w in enumerate_weights(n, total):
                expected = semistandard_tableau_count(w, n)
                assert schur_jacobi_trudi(w, ones[n]) == expected, w


def test_whittaker_values():
    for n in range(1, 9):
        data = SatakeData(tuple(F(i + 2) for i in range(n)), F(1))
        assert whittaker_value(DominantWeight((0,) * n), data) == (F(1), 0)
    data = SatakeData((F(2), F(3)), F(1))
    assert whittaker_value(DominantWeight((1, 0)), data) == (F(5), -1)
    assert whittaker_value(DominantWeight((1, 1)), data) == (F(6), 0)
    with pytest.raises(ValueError, match="rank mismatch"):
        whittaker_value(DominantWeight((1, 0, 0)), data)


def test_satake_data_validation():
    with pytest.raises(ValueError):
        SatakeData((F(0), F(1)), F(1))
    with pytest.raises(ValueError):
        SatakeData((F(1),), F(0))


def test_random_satake_data_distinct():
    rng = random.Random(SEED)
    for _ in range(10):
        data = random_satake_data(rng, 6, distinct=True)
        assert len(set(data.z)) == 6
