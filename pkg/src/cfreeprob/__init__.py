"""Workbench for conditionally free (c-free) probability.

Exact non-crossing partition combinatorics, free / c-free / boolean
moment-cumulant transforms, c-free convolution with an independent
product-state word oracle, generating-series identities, and the closed-form
central and Poisson limit laws with numeric validation.
"""

from .convolution import (
    ScalingSpec,
    SqrtScaling,
    boolean_convolve,
    cfree_convolve,
    dilate,
    dilate_moments,
    free_convolve,
    scaled_power,
)
from .cumulants import (
    CFreeCumulantSequence,
    FreeCumulantSequence,
    MeasurePair,
    MomentSequence,
    cfree_cumulants_from_moments,
    free_cumulants_from_moments,
    moments_from_cfree_cumulants,
    moments_from_free_cumulants,
    partition_sum_moment,
)
from .limit_laws import (
    ClosedFormMeasure,
    OrthoPolySeq,
    cauchy_tail_limit_check,
    gaussian_cauchy_G,
    gaussian_limit_measure,
    gaussian_limit_moments,
    gaussian_limit_moments_from_squares,
    ortho_polys,
    ortho_polys_from_squares,
    poisson_cauchy_G,
    poisson_limit_measure,
    poisson_limit_moments,
    quadrature_moment,
)
from .partitions import (
    BlockClass,
    CatalanPath,
    Partition,
    catalan,
    classify,
    count_a,
    count_s,
    count_t,
    enumerate_nc,
    enumerate_nc2,
    from_catalan_path,
    kreweras_t,
    to_catalan_path,
)
from .product_state import StateFamily, Word, eval_phi, eval_psi, sum_moments_via_words
from .series import (
    CauchyEvaluator,
    NumericalDegeneracyError,
    TruncatedSeries,
    abcd_from_pair,
    cf_eval,
    check_thm51,
    check_thm52,
    gaussian_cf_levels,
    poisson_cf_levels,
    stieltjes_density,
    stieltjes_density_ladder,
)

__version__ = "0.1.0"
