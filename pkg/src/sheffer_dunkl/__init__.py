"""Exact Sheffer-Dunkl polynomial sequences and their moment characterizations."""

from .errors import (
    DomainError,
    NotInvertibleError,
    PrecisionError,
    QuadratureError,
    ShefferDunklError,
    UnsupportedExactError,
)
from .moments import (
    Atom,
    Atomic,
    ComplexSeries,
    MomentSeq,
    NamedDensity,
    ThorneReport,
    apply_functional,
    auxiliary_F,
    bernoulli_weight_moment,
    reconstruct_generating,
    sheffer_moments,
    sheffer_reconstruct,
    thorne_measure,
    thorne_verify,
)
from .poly import BiPoly, Poly, apply_Lf, discrete_difference, dunkl_derivative, translate
from .rational import DunklParam, GammaTable, dunkl_binomial, gamma_factorial, gamma_ratio
from .series import (
    Series,
    default_order,
    dunkl_kernel_series,
    series_compose,
    series_multiply,
    series_reciprocal,
    series_reverse,
)
from .sheffer import (
    FAMILIES,
    FamilySpec,
    PolySequence,
    family_sequence,
    generate_sequence,
    generating_moments,
    preset_family,
    sequence_from_thorne,
)

__version__ = "0.1.0"
