"""
linperiod: exact-arithmetic verification of the unramified local theory of a
product L-function of the shape L(s, twist x pi) * L(2s, exterior-square, pi).

The packages' pieces:

* `series`    -- exact rationals and truncated formal power series in t.
* `schur`     -- dominant weights, exact Schur polynomials (two independent
                 algorithms), spherical Whittaker torus values.
* `groups`    -- interleaving permutations, the block subgroup H_n, and
                 integer-exponent modulus-character calculus.
* `factors`   -- the unramified weight-sum integral, the closed-form Euler
                 factors, and the verifier comparing the two routes.
* `dirichlet` -- per-prime Satake tables assembled into exact Dirichlet
                 series, with a float evaluation window and tail bounds.
* `cli`       -- the `linperiod` command exposing all of the above.
"""

from .dirichlet import (
    DirichletSeries,
    EvaluationResult,
    ParseError,
    SatakeTable,
    ValidationError,
    assemble,
    dirichlet_convolve,
    evaluate,
    ingest,
)
from .factors import (
    EulerFactor,
    MacdonaldReport,
    exterior_square_factor,
    linear_local_factor,
    product_side,
    standard_factor,
    verify_macdonald,
    weight_sum_integral,
)
from .groups import (
    InterleavePerm,
    TorusExponentVector,
    UnramifiedCharacter,
    borel_modulus_exponent,
    build_wn,
    build_wn_prime,
    delta_character_exponent,
    interleave,
    is_in_Hn,
    modulus_split_check,
    real_part,
    torus_split,
)
from .schur import (
    DominantWeight,
    SatakeData,
    SingularDenominatorError,
    alt_statistic,
    enumerate_weights,
    schur_alternant,
    schur_jacobi_trudi,
    schur_laurent,
    whittaker_value,
)
from .series import (
    ExactScalar,
    NotAUnitError,
    TruncatedSeries,
    format_scalar,
    parse_scalar,
    series_add,
    series_invert,
    series_mul,
)

__version__ = "0.1.0"
