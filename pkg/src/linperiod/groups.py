"""
Interleaving permutations, the block subgroup they conjugate into place, and
exact modulus-character exponent calculus on the diagonal torus.

Conventions fixed by this package
---------------------------------

* `build_wn(n)` is the shuffle sending the first block to the ODD slots and
  the second block to the EVEN slots for every n: with m' = ceil(n/2),
  i -> 2i-1 for i <= m' and m'+i -> 2i for the rest.  Under this reading the
  restriction identities hold in the deletion sense below, and the subgroup
  compatibility H_n  intersect  G_{n-1} = H_{n-1} holds on the nose.
* Restriction of a permutation of {1..n} to {1..n-1} deletes the letter n:
  drop the position mapping to n and keep the remaining images in order.
  When n is a fixed point this is the usual upper-left matrix restriction.
* H_n consists of the matrices supported on (odd,odd) and (even,even) index
  pairs; `interleave` builds its elements by pure index relabeling, with no
  matrix multiplication.
* Torus elements are tracked as integer exponent vectors a = (a_1,...,a_n),
  standing for diag(w^{a_1},...,w^{a_n}) with w a uniformizer of residue
  size q.  All modulus characters are integer powers of q (or of v = q^{1/2}),
  so the calculus below is exact integer arithmetic.

The permutation matrix realization places a 1 in row images[j], column j,
matching the two-row arrays that define these shuffles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "InterleavePerm",
    "TorusExponentVector",
    "UnramifiedCharacter",
    "borel_modulus_exponent",
    "build_wn",
    "build_wn_prime",
    "delta_character_exponent",
    "interleave",
    "is_in_Hn",
    "modulus_split_check",
    "real_part",
    "torus_split",
]

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class InterleavePerm:
    """Permutation of {1..n} stored as its image vector (1-indexed semantics)."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if len(images) != self.n or sorted(images) != list(range(1, self.n + 1)):
            raise ValueError(f"images {images} are not a bijection of 1..{self.n}")
        object.__setattr__(self, "images", images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> InterleavePerm:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return InterleavePerm(self.n, tuple(inv))

    def matrix(self) -> Matrix:
        """0/1 matrix with a 1 in row images[j], column j."""
        one, zero = Fraction(1), Fraction(0)
        rows = [[zero] * self.n for _ in range(self.n)]
        for j, img in enumerate(self.images, start=1):
            rows[img - 1][j - 1] = one
        return tuple(tuple(r) for r in rows)

    def restricted(self) -> InterleavePerm:
        """Delete the letter n: drop the position mapping to n, keep the rest."""
        if self.n == 1:
            raise ValueError("cannot restrict a permutation of one letter")
        return InterleavePerm(
            self.n - 1, tuple(img for img in self.images if img != self.n)
        )

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.images)


def build_wn(n: int) -> InterleavePerm:
    """
    The interleaving shuffle: first ceil(n/2) letters to the odd slots, the
    remaining floor(n/2) to the even slots.  E.g. n=4 -> 1 3 2 4 and
    n=5 -> 1 3 5 2 4.
    """
    if n < 1:
        raise ValueError("n must be positive")
    top = (n + 1) // 2
    images = [2 * i - 1 for i in range(1, top + 1)]
    images += [2 * i for i in range(1, n - top + 1)]
    return InterleavePerm(n, tuple(images))


def build_wn_prime(n: int) -> InterleavePerm:
    """
    The companion shuffle used in the unfolding of the global integral.

    Even n = 2m: i -> 2i-1 for i <= m, then m+1 -> 2m, then m+1+i -> 2i.
    Odd n = 2m+1: i -> 2i for i <= m, then m+i -> 2i-1, with 2m+1 fixed
    (the displayed two-row array is realigned so that 2m+1 is a fixed point;
    the raw column alignment does not yield a consistent family).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    m = n // 2
    if n % 2 == 0:
        images = [2 * i - 1 for i in range(1, m + 1)]
        images.append(2 * m)
        images += [2 * i for i in range(1, m)]
    else:
        images = [2 * i for i in range(1, m + 1)]
        images += [2 * i - 1 for i in range(1, m + 1)]
        images.append(2 * m + 1)
    return InterleavePerm(n, tuple(images))


def _as_matrix(g: Sequence[Sequence]) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in g]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix must be square")
    return rows


def interleave(g1: Sequence[Sequence], g2: Sequence[Sequence]) -> Matrix:
    """
    Conjugate diag(g1, g2) by the interleaving shuffle without multiplying
    matrices: entry (w(i), w(j)) of the result is entry (i, j) of diag(g1,g2).
    Block sizes must be (m, m) or (m+1, m).
    """
    a = _as_matrix(g1)
    b = _as_matrix(g2)
    if len(a) not in (len(b), len(b) + 1):
        raise ValueError(
            f"illegal block sizes ({len(a)}, {len(b)}): need (m, m) or (m+1, m)"
        )
    n = len(a) + len(b)
    w = build_wn(n)
    zero = Fraction(0)
    out = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i <= len(a) and j <= len(a):
                val = a[i - 1][j - 1]
            elif i > len(a) and j > len(a):
                val = b[i - 1 - len(a)][j - 1 - len(a)]
            else:
                continue
            out[w(i) - 1][w(j) - 1] = val
    return tuple(tuple(r) for r in out)


def is_in_Hn(g: Sequence[Sequence], n: int) -> bool:
    """
    True iff conjugating g back through the shuffle lands in the block-diagonal
    subgroup with blocks (ceil(n/2), floor(n/2)); equivalently g is supported
    on (odd,odd) and (even,even) index pairs.
    """
    rows = _as_matrix(g)
    if len(rows) != n:
        raise ValueError(f"matrix size {len(rows)} does not match n={n}")
    w = build_wn(n)
    top = (n + 1) // 2
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i <= top) != (j <= top):
                # (w^{-1} g w)[i][j] = g[w(i)][w(j)]
                if rows[w(i) - 1][w(j) - 1] != 0:
                    return False
    return True


@dataclass(frozen=True)
class TorusExponentVector:
    """Exponent vector (a_1,...,a_n) of a diagonal torus element.  The empty
    vector (rank-0 torus) is allowed; splitting odd ranks produces one."""

    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @property
    def n(self) -> int:
        return len(self.exps)


def torus_split(a: TorusExponentVector) -> tuple[TorusExponentVector, TorusExponentVector]:
    """Odd-indexed entries to a', even-indexed to a'' (sizes m,m or m+1,m)."""
    return (
        TorusExponentVector(a.exps[0::2]),
        TorusExponentVector(a.exps[1::2]),
    )


def borel_modulus_exponent(a: TorusExponentVector) -> int:
    """E with delta_B(torus(a)) = q^(-E); E = sum_i a_i * (n + 1 - 2i)."""
    n = a.n
    return sum(e * (n + 1 - 2 * i) for i, e in enumerate(a.exps, start=1))


def delta_character_exponent(a: TorusExponentVector) -> int:
    """
    Exponent D = sum(a') - sum(a'') of the block-determinant ratio character:
    on torus elements its value is q^(-D).
    """
    a_prime, a_dprime = torus_split(a)
    return sum(a_prime.exps) - sum(a_dprime.exps)


def modulus_split_check(a: TorusExponentVector) -> bool:
    """
    Verify the block-size-aware splitting of the Borel modulus at the level of
    integer exponents of v = q^{1/2}:

        even n = 2m:   2*E_m(a') + 2*E_m(a'') + D(a) == E_n(a)
        odd  n = 2m+1: 2*E_{m+1}(a') + 2*E_m(a'')    == E_n(a)

    i.e. delta_{B_m}(a') * delta_{B_m}(a'') * delta(a)^{1/2} equals
    delta_{B_n}^{1/2}(a) in the even case, and
    delta_{B_{m+1}}(a') * delta_{B_m}(a'') equals delta_{B_n}^{1/2}(a) in the
    odd case.  (The same-rank reading of the split relation is dimensionally
    inconsistent; this corrected form is the one the weight-sum computation
    uses.)
    """
    a_prime, a_dprime = torus_split(a)
    lhs = 2 * borel_modulus_exponent(a_prime) + 2 * borel_modulus_exponent(a_dprime)
    if a.n % 2 == 0:
        lhs += delta_character_exponent(a)
    return lhs == borel_modulus_exponent(a)


@dataclass(frozen=True)
class UnramifiedCharacter:
    """Unramified character of the multiplicative group: determined by its
    value u at a uniformizer of residue size q."""

    value_at_uniformizer: Fraction
    q: Fraction

    def __post_init__(self):
        u = Fraction(self.value_at_uniformizer)
        q = Fraction(self.q)
        if u == 0:
            raise ValueError("character value at the uniformizer must be nonzero")
        if q <= 1:
            raise ValueError("residue size q must exceed 1")
        object.__setattr__(self, "value_at_uniformizer", u)
        object.__setattr__(self, "q", q)


def real_part(chi: UnramifiedCharacter) -> float:
    """
    The real number r with |chi(x)| = |x|^r: since |uniformizer| = 1/q,
    |u| = q^(-r), so r = -log|u| / log q.  Unitary characters give 0.
    """
    u = abs(chi.value_at_uniformizer)
    return -(math.log(u.numerator) - math.log(u.denominator)) / math.log(float(chi.q))
