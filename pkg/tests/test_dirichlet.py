import io
import math
from fractions import Fraction as F

import pytest

from linperiod.dirichlet import (
    DirichletSeries,
    ParseError,
    SatakeTable,
    ValidationError,
    assemble,
    dirichlet_convolve,
    evaluate,
    ingest,
    is_prime,
    primes_up_to,
    toy_table_path,
)
from linperiod.factors import linear_local_factor
from linperiod.schur import SatakeData

TOY = toy_table_path()


def table_n1():
    return SatakeTable(1, {2: SatakeData((F(1),), F(1))}, "geo")


def test_primes_helpers():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(97) and not is_prime(91) and not is_prime(1)


def test_ingest_basic():
    text = "\n".join(
        [
            "# comment",
            "n=2 label=demo set",
            "2 | 1/2 3 | 1",
            "3 | -1 2 | -1/2  # trailing comment",
            "",
        ]
    )
    table = ingest(io.StringIO(text))
    assert table.n == 2
    assert table.label == "demo set"
    assert table.entries[2].z == (F(1, 2), F(3))
    assert table.entries[2].u == F(1)
    assert table.entries[3].u == F(-1, 2)


def test_ingest_errors():
    with pytest.raises(ParseError, match="line 1"):
        ingest(["2 | 1 2 | 1"])  # missing header
    with pytest.raises(ParseError, match="line 2"):
        ingest(["n=2", "2 | 1 2"])  # missing u field
    with pytest.raises(ParseError, match="line 2"):
        ingest(["n=2", "x | 1 2 | 1"])  # bad prime field
    with pytest.raises(ValidationError, match="duplicate prime 2"):
        ingest(["n=2", "2 | 1 2 | 1", "2 | 1 3 | 1"])
    with pytest.raises(ValidationError, match="length 1"):
        ingest(["n=2", "2 | 1 | 1"])
    with pytest.raises(ValidationError, match="nonzero"):
        ingest(["n=2", "2 | 0 2 | 1"])
    with pytest.raises(ValidationError, match="not prime"):
        ingest(["n=1", "4 | 1 | 1"])


def test_ingest_bundled_toy_table():
    table = ingest(TOY)
    assert table.n == 2
    assert table.label == "toy-n2"
    assert table.primes == primes_up_to(100)


def test_assemble_empty_product():
    empty = SatakeTable(1, {}, "empty")
    series = assemble(empty, 50)
    assert series.coefficient(1) == 1
    assert all(series.coefficient(m) == 0 for m in range(2, 51))
    assert series.skipped_primes == tuple(primes_up_to(50))


def test_assemble_geometric():
    series = assemble(table_n1(), 8)
    for k in range(4):
        assert series.coefficient(2**k) == 1
    for m in (3, 5, 6, 7):
        assert series.coefficient(m) == 0
    assert series.skipped_primes == (3, 5, 7)


def test_assemble_matches_weight_sum_oracle():
    table = SatakeTable(2, {2: SatakeData((F(1), F(1)), F(1))}, "t")
    series = assemble(table, 8)
    assert series.coefficient(2) == 2
    assert series.coefficient(4) == 4
    assert series.coefficient(8) == 6


def test_local_global_consistency():
    table = ingest(TOY)
    series = assemble(table, 2000)
    for p in table.primes:
        inverse = linear_local_factor(table.entries[p]).inverse_series(11)
        k, mp = 0, 1
        while mp * p <= 2000:
            mp *= p
            k += 1
            assert series.coefficient(mp) == inverse.coeffs[k], (p, k)


def test_multiplicativity_small():
    table = ingest(TOY)
    series = assemble(table, 500)
    for a in range(2, 23):
        for b in range(2, 500 // a + 1):
            if math.gcd(a, b) == 1:
                assert series.coefficient(a * b) == series.coefficient(a) * series.coefficient(b)


def test_factorization_convolution():
    # standard-only series (*) exterior-only series == full series
    table = ingest(TOY)
    bound = 300
    full = assemble(table, bound)
    std_only = assemble(table, bound, standard=True, exterior=False)
    ext_only = assemble(table, bound, standard=False, exterior=True)
    conv = dirichlet_convolve(std_only, ext_only)
    for m in range(1, bound + 1):
        assert conv.get(m, F(0)) == full.coefficient(m), m


def test_leading_coefficient_required():
    with pytest.raises(ValidationError):
        DirichletSeries(label="x", n=1, bound=3, coeffs={1: F(2)})


def test_evaluate_geometric():
    series = assemble(table_n1(), 8)
    result = evaluate(series, 2.0 + 0.0j)
    assert abs(result.value - 1.328125) < 1e-12
    assert result.convergence_verified
    assert math.isclose(result.tail_bound, 2**-8 / (1 - 0.25))
    # the bound really covers the truncation error of the full geometric sum
    true_value = 1 / (1 - 0.25)
    assert abs(true_value - result.value) <= result.tail_bound + 1e-12


def test_evaluate_empty_product():
    series = assemble(SatakeTable(2, {}, "empty"), 10)
    result = evaluate(series, 1.5 + 2j)
    assert result.value == 1 + 0j
    assert result.tail_bound == 0.0


def test_evaluate_two_routes():
    table = ingest(TOY)
    small = SatakeTable(2, {p: table.entries[p] for p in (2, 3, 5)}, "3primes")
    series = assemble(small, 10**4)
    result = evaluate(series, 3.0 + 0.0j)
    direct = 1.0
    for p in (2, 3, 5):
        poly = linear_local_factor(small.entries[p]).poly
        direct /= sum(float(c) * p ** (-3.0 * k) for k, c in enumerate(poly))
    assert abs(result.value - direct) <= result.tail_bound


def test_evaluate_out_of_margin_flagged():
    # W = 1 at p = 2 and sigma = 0: margin fails, value still returned
    series = assemble(table_n1(), 8)
    result = evaluate(series, 0.0 + 1.0j)
    assert not result.convergence_verified
    assert result.tail_bound is None


def test_assemble_threaded_matches_sequential(monkeypatch):
    table = ingest(TOY)
    sequential = assemble(table, 1000)
    monkeypatch.setenv("LINPERIOD_THREADS", "4")
    threaded = assemble(table, 1000)
    assert sequential.coeffs == threaded.coeffs
    assert sequential.skipped_primes == threaded.skipped_primes


def test_json_payload_shape():
    series = assemble(table_n1(), 8)
    payload = series.to_jsonable()
    assert payload["X"] == 8
    assert payload["coeffs"]["8"] == "1"
    assert payload["skipped_primes"] == [3, 5, 7]
