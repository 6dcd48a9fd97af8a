"""
Assembly of the partial product L-function from per-prime Satake data.

A Satake table lists, for each prime p, the local parameters (z, u) of an
everywhere-unramified toy datum over the rationals (one place per prime,
residue size q = p).  `assemble` expands each local factor inverse as a power
series in p^(-s) and merges them multiplicatively into exact Dirichlet-series
coefficients a_m for m <= X.  Primes missing from the table are treated as
excluded places and recorded; coefficients at multiples of an excluded prime
vanish.

`evaluate` is the only floating-point window: it sums a_m * m^(-s) and
reports a rigorous truncation tail bound from a geometric majorant.  For a
local factor with inverse roots w_1..w_d (the exterior-square pairs counted
as two roots +/- sqrt(z_j z_k)), the inverse coefficients obey
|c_k| <= C(k+d-1, d-1) * W^k with W = max|w_j|, so the multiplicative
majorant is computable prime by prime and its tail is the difference between
the closed-form full product and the majorant's partial sum.

Input file format (UTF-8, "#" starts a comment):

    n=2 label=toy
    2 | 1/2 3 | 1
    3 | -1 2/3 | -1/2
"""

from __future__ import annotations

import cmath
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import IO, Iterable, Union

from .factors import exterior_square_factor, standard_factor, thread_count
from .schur import SatakeData
from .series import format_scalar

__all__ = [
    "DirichletSeries",
    "EvaluationResult",
    "ParseError",
    "SatakeTable",
    "ValidationError",
    "assemble",
    "dirichlet_convolve",
    "evaluate",
    "ingest",
    "toy_table_path",
]


class ParseError(ValueError):
    """Malformed input line; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ValidationError(ValueError):
    """Structurally parsable input that violates a table invariant."""


def toy_table_path() -> str:
    """Filesystem path of the bundled rank-2 demo table (primes < 100)."""
    return os.path.join(os.path.dirname(__file__), "data", "toy_n2.sat")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_up_to(x: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if x < 2:
        return []
    flags = bytearray([1]) * (x + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(math.isqrt(x)) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


@dataclass(frozen=True)
class SatakeTable:
    """Per-prime local data of fixed rank n, with a free-form dataset label."""

    n: int
    entries: dict[int, SatakeData]
    label: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"rank must be positive, got {self.n}")
        for p, data in self.entries.items():
            if not is_prime(p):
                raise ValidationError(f"table key {p} is not prime")
            if data.n != self.n:
                raise ValidationError(
                    f"entry at p={p} has {data.n} Satake parameters, expected {self.n}"
                )

    @property
    def primes(self) -> list[int]:
        return sorted(self.entries)


def ingest(source: Union[str, "os.PathLike[str]", IO[str], Iterable[str]]) -> SatakeTable:
    """
    Parse a Satake table from a path, an open text stream, or lines.

    Raises ParseError (with line number) on malformed syntax and
    ValidationError on duplicate primes, wrong-length z-vectors, zero
    parameters, or composite "primes".
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    elif hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        lines = list(source)

    n: int | None = None
    label = ""
    entries: dict[int, SatakeData] = {}

    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        if n is None:
            tokens = text.split(None, 1)
            if not tokens[0].startswith("n="):
                raise ParseError(lineno, f'expected header "n=<rank> label=<string>", got {text!r}')
            try:
                n = int(tokens[0][2:])
            except ValueError:
                raise ParseError(lineno, f"bad rank in header: {tokens[0]!r}") from None
            if n < 1:
                raise ValidationError(f"rank must be positive, got {n}")
            if len(tokens) > 1:
                rest = tokens[1].strip()
                if not rest.startswith("label="):
                    raise ParseError(lineno, f'expected "label=<string>" after rank, got {rest!r}')
                label = rest[len("label=") :].strip()
            continue
        fields = [f.strip() for f in text.split("|")]
        if len(fields) != 3:
            raise ParseError(lineno, f'expected "p | z1 .. zn | u", got {text!r}')
        try:
            p = int(fields[0])
        except ValueError:
            raise ParseError(lineno, f"bad prime field {fields[0]!r}") from None
        try:
            z = tuple(Fraction(tok) for tok in fields[1].split())
            u = Fraction(fields[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(lineno, f"bad rational in {text!r}") from None
        if not is_prime(p):
            raise ValidationError(f"line {lineno}: {p} is not prime")
        if p in entries:
            raise ValidationError(f"line {lineno}: duplicate prime {p}")
        if len(z) != n:
            raise ValidationError(
                f"line {lineno}: z-vector has length {len(z)}, expected {n}"
            )
        try:
            entries[p] = SatakeData(z, u)
        except ValueError as exc:
            raise ValidationError(f"line {lineno}: {exc}") from None

    if n is None:
        raise ParseError(1, "missing header line")
    return SatakeTable(n=n, entries=entries, label=label)


@dataclass
class DirichletSeries:
    """
    Exact Dirichlet coefficients a_m for 1 <= m <= bound, nonzero entries only;
    a_1 = 1 and a is multiplicative over the table's primes.  Carries the
    excluded primes and the per-prime (W, root count) majorant data needed for
    tail bounds.
    """

    label: str
    n: int
    bound: int
    coeffs: dict[int, Fraction]
    skipped_primes: tuple[int, ...] = ()
    prime_majorants: tuple[tuple[int, float, int], ...] = ()

    def __post_init__(self):
        if self.coeffs.get(1) != 1:
            raise ValidationError("Dirichlet series must have leading coefficient 1")

    def coefficient(self, m: int) -> Fraction:
        if not 1 <= m <= self.bound:
            raise IndexError(f"index {m} outside 1..{self.bound}")
        return self.coeffs.get(m, Fraction(0))

    def to_jsonable(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "X": self.bound,
            "skipped_primes": list(self.skipped_primes),
            "coeffs": {str(m): format_scalar(c) for m, c in sorted(self.coeffs.items())},
        }


def _local_inverse(data: SatakeData, kmax: int, standard: bool, exterior: bool) -> list[Fraction]:
    factor = None
    if standard:
        factor = standard_factor(data)
    if exterior:
        ext = exterior_square_factor(data)
        factor = ext if factor is None else factor * ext
    if factor is None:
        raise ValueError("at least one of the two local factors must be included")
    return list(factor.inverse_series(kmax).coeffs)


def _local_majorant(data: SatakeData, standard: bool, exterior: bool) -> tuple[float, int]:
    """Max inverse-root magnitude W and root count d of the included factors."""
    magnitudes: list[float] = []
    d = 0
    if standard:
        magnitudes += [abs(float(data.u * zi)) for zi in data.z]
        d += data.n
    if exterior:
        for j in range(data.n):
            for k in range(j + 1, data.n):
                magnitudes.append(math.sqrt(abs(float(data.z[j] * data.z[k]))))
        d += data.n * (data.n - 1)
    return (max(magnitudes, default=0.0), d)


def assemble(
    table: SatakeTable,
    bound: int,
    standard: bool = True,
    exterior: bool = True,
) -> DirichletSeries:
    """
    Dirichlet coefficients of the product over table primes of the inverse
    local factor, exact through m <= bound.  Primes <= bound absent from the
    table are excluded and recorded in `skipped_primes`.

    Per-prime expansions are independent (threaded when LINPERIOD_THREADS > 1)
    and merged in increasing-prime order, so output is deterministic.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    used = [p for p in table.primes if p <= bound]
    skipped = tuple(p for p in primes_up_to(bound) if p not in table.entries)

    def expand(p: int) -> list[Fraction]:
        kmax = 0
        while p ** (kmax + 1) <= bound:
            kmax += 1
        return _local_inverse(table.entries[p], kmax, standard, exterior)

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            expansions = dict(zip(used, pool.map(expand, used)))
    else:
        expansions = {p: expand(p) for p in used}

    coeffs: dict[int, Fraction] = {1: Fraction(1)}
    for p in used:
        local = expansions[p]
        merged = dict(coeffs)
        for m, am in coeffs.items():
            mp = m
            for k in range(1, len(local)):
                mp *= p
                if mp > bound:
                    break
                value = am * local[k]
                if value != 0:
                    merged[mp] = value
        coeffs = merged

    majorants = tuple(
        (p, *_local_majorant(table.entries[p], standard, exterior)) for p in used
    )
    return DirichletSeries(
        label=table.label,
        n=table.n,
        bound=bound,
        coeffs=coeffs,
        skipped_primes=skipped,
        prime_majorants=majorants,
    )


def dirichlet_convolve(a: DirichletSeries, b: DirichletSeries) -> dict[int, Fraction]:
    """Coefficients of the Dirichlet product, sum over d|m of a_d * b_{m/d}."""
    if a.bound != b.bound:
        raise ValueError("series bounds differ")
    out: dict[int, Fraction] = {}
    for d, ad in a.coeffs.items():
        for e, be in b.coeffs.items():
            m = d * e
            if m > a.bound:
                continue
            out[m] = out.get(m, Fraction(0)) + ad * be
    return {m: c for m, c in out.items() if c != 0}


@dataclass(frozen=True)
class EvaluationResult:
    """Value of the truncated series at s, with a truncation tail bound when
    the absolute-convergence margin is verified."""

    s: complex
    value: complex
    tail_bound: float | None
    convergence_verified: bool


def evaluate(series: DirichletSeries, s: complex) -> EvaluationResult:
    """
    Sum a_m * m^(-s) over m <= bound (float mode).

    The tail bound is the majorant's own tail: the closed-form product
    prod_p (1 - W_p p^(-sigma))^(-d_p) minus the majorant's partial sum over
    m <= bound, with sigma = Re(s).  If some W_p p^(-sigma) >= 1 the margin is
    not verified; the value is still returned, flagged accordingly.
    """
    s = complex(s)
    sigma = s.real
    value = 0j
    for m, c in sorted(series.coeffs.items()):
        value += float(c) * cmath.exp(-s * math.log(m))

    verified = all(w * p**-sigma < 1.0 for p, w, _ in series.prime_majorants)
    if not verified:
        return EvaluationResult(s=s, value=value, tail_bound=None, convergence_verified=False)

    full = 1.0
    partial: dict[int, float] = {1: 1.0}
    for p, w, d in series.prime_majorants:
        if d == 0:
            continue  # constant local factor (e.g. exterior-only at n=1)
        full *= (1.0 - w * p**-sigma) ** (-d)
        kmax = 0
        while p ** (kmax + 1) <= series.bound:
            kmax += 1
        local = [comb(k + d - 1, d - 1) * w**k * p ** (-sigma * k) for k in range(kmax + 1)]
        merged = dict(partial)
        for m, am in partial.items():
            mp = m
            for k in range(1, len(local)):
                mp *= p
                if mp > series.bound:
                    break
                merged[mp] = am * local[k]
        partial = merged
    tail = max(full - sum(partial.values()), 0.0)
    return EvaluationResult(s=s, value=value, tail_bound=tail, convergence_verified=True)
