"""
Exact rational scalars and truncated formal power series in one variable t.

Every identity check in this package is an equality of rational numbers,
so coefficients are `fractions.Fraction` throughout: arithmetic is exact,
values are stored reduced with positive denominator, and (a+b)-b == a holds
for all inputs.  A TruncatedSeries is a polynomial in t of fixed order N;
ring operations truncate consistently, meaning coefficient k of a product
depends only on coefficients <= k of the operands.

Wire format: a scalar prints as "num/den" ("num" when the denominator is 1),
a series as a JSON array of such strings indexed by the power of t.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "ExactScalar",
    "NotAUnitError",
    "TruncatedSeries",
    "format_scalar",
    "parse_scalar",
    "series_add",
    "series_invert",
    "series_mul",
]

# Arbitrary-precision rational, always reduced, denominator > 0.  The stdlib
# type already guarantees both invariants, so it is used directly.
ExactScalar = Fraction

ScalarLike = Union[Fraction, int, str]


class NotAUnitError(ValueError):
    """Raised when inverting a series whose constant term is zero."""


def format_scalar(x: Fraction) -> str:
    """Render a rational as "num/den", omitting "/den" when den == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str) -> Fraction:
    """Parse the "num/den" wire format (also accepts plain integers)."""
    return Fraction(text.strip())


def _coerce(x: ScalarLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class TruncatedSeries:
    """Polynomial in t truncated at a fixed order N, coefficients exact."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        coeffs = tuple(_coerce(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients for order {self.order}, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[ScalarLike], order: int) -> TruncatedSeries:
        """Build a series from any coefficient prefix, zero-padding/truncating to `order`."""
        cs = [_coerce(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, value: ScalarLike, order: int) -> TruncatedSeries:
        return cls.from_coeffs([_coerce(value)], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.constant(1, order)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"power {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop to a lower order M <= N; the result agrees with computing at M directly."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_orders(self, other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def invert(self) -> TruncatedSeries:
        return series_invert(self)

    def __str__(self) -> str:
        return "[" + ", ".join(format_scalar(c) for c in self.coeffs) + "]"

    def to_json(self) -> str:
        """JSON array of "num/den" strings, index = power of t."""
        return json.dumps([format_scalar(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        items = json.loads(text)
        return cls(len(items) - 1, tuple(parse_scalar(s) for s in items))


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(
            f"series order mismatch: {a.order} != {b.order} (caller bug)"
        )


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise exact sum; both operands must share the same order."""
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj != 0:
                out[i + j] += ai * bj
    return TruncatedSeries(n, tuple(out))


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """
    Multiplicative inverse mod t^(N+1).

    Standard recursion: b0 = 1/a0 and, for k >= 1,
        b_k = -(1/a0) * sum_{j=1..k} a_j b_{k-j}.
    """
    if a.coeffs[0] == 0:
        raise NotAUnitError("constant term is zero; series is not invertible")
    inv0 = 1 / a.coeffs[0]
    out = [Fraction(0)] * (a.order + 1)
    out[0] = inv0
    for k in range(1, a.order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            aj = a.coeffs[j]
            if aj != 0:
                acc += aj * out[k - j]
        out[k] = -inv0 * acc
    return TruncatedSeries(a.order, tuple(out))


def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    """Exact (untruncated) polynomial product on coefficient lists."""
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            if qj != 0:
                out[i + j] += pi * qj
    return out
