"""Survival probabilities under repeated measurement, driven by spectral measures.

The package evaluates p(tau * N**(alpha-1))**N for a state described by its
energy distribution, predicts the large-N regime from the measure's spectral
type and the exponent, and checks the two against each other.  See the CLI
(``zenoscale --help``) for the file-based interface.
"""
from .errors import (
    ApproximateAlpha,
    AtomBudgetExceeded,
    EmptyMeasure,
    Incommensurable,
    InvalidMeasure,
    MeasureError,
    NegativeDensity,
    NonNormalized,
    NumericalError,
    QuadratureFailure,
    SchemaError,
    SingleAtomSpectrum,
    UndefinedZenoTime,
    ZenoscaleError,
    ZeroProbability,
)
from .measures import (
    CantorMeasure,
    EnergyAtom,
    GaussianMeasure,
    LorentzianMeasure,
    Mixture,
    PurePointMeasure,
    SpectralMeasure,
    SpectralType,
    TabulatedMeasure,
    UniformMeasure,
    amplitude_deficit,
    bounded_below,
    cantor,
    cantor_truncation_bound,
    char_fn,
    flatten_pure_point,
    gaussian,
    lorentzian,
    mean,
    mixture,
    pure_point,
    scale_measure,
    shift_measure,
    spectral_type,
    tabulated,
    uniform,
    validate,
    variance,
    zeno_time,
)
from .engine import (
    LogProbability,
    ZenoParams,
    log_survival,
    one_minus_survival,
    scaled_zeno_product,
    scaling_power,
    survival_probability,
    taylor_check,
    zeno_product,
)
from .regimes import (
    CommensurabilityResult,
    Regime,
    RegimePrediction,
    ScheduleRow,
    VerificationReport,
    analyze_commensurability,
    lattice_membership,
    predict_limit,
    recurrence_subsequence,
    verify_prediction,
)
from .convolution import ATOM_BUDGET, convolve_pp, self_convolve, verify_powers_equal_convolution
from .specio import emit_measure_dict, emit_measure_spec, parse_measure_dict, parse_measure_spec

__version__ = "0.1.0"

__all__ = [
    "ApproximateAlpha",
    "AtomBudgetExceeded",
    "EmptyMeasure",
    "Incommensurable",
    "InvalidMeasure",
    "MeasureError",
    "NegativeDensity",
    "NonNormalized",
    "NumericalError",
    "QuadratureFailure",
    "SchemaError",
    "SingleAtomSpectrum",
    "UndefinedZenoTime",
    "ZenoscaleError",
    "ZeroProbability",
    "CantorMeasure",
    "EnergyAtom",
    "GaussianMeasure",
    "LorentzianMeasure",
    "Mixture",
    "PurePointMeasure",
    "SpectralMeasure",
    "SpectralType",
    "TabulatedMeasure",
    "UniformMeasure",
    "amplitude_deficit",
    "bounded_below",
    "cantor",
    "cantor_truncation_bound",
    "char_fn",
    "flatten_pure_point",
    "gaussian",
    "lorentzian",
    "mean",
    "mixture",
    "pure_point",
    "scale_measure",
    "shift_measure",
    "spectral_type",
    "tabulated",
    "uniform",
    "validate",
    "variance",
    "zeno_time",
    "LogProbability",
    "ZenoParams",
    "log_survival",
    "one_minus_survival",
    "scaled_zeno_product",
    "scaling_power",
    "survival_probability",
    "taylor_check",
    "zeno_product",
    "CommensurabilityResult",
    "Regime",
    "RegimePrediction",
    "ScheduleRow",
    "VerificationReport",
    "analyze_commensurability",
    "lattice_membership",
    "predict_limit",
    "recurrence_subsequence",
    "verify_prediction",
    "ATOM_BUDGET",
    "convolve_pp",
    "self_convolve",
    "verify_powers_equal_convolution",
    "emit_measure_dict",
    "emit_measure_spec",
    "parse_measure_dict",
    "parse_measure_spec",
    "__version__",
]
