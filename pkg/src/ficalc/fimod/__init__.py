"""Finitely presented modules over finite sets and injections.

Submodules: ``core`` (the FIModule window type and constructors),
``coefficients`` (cross-effect cubes, stabilized Taylor data),
``truncation`` (colimit truncations, layers, polynomiality),
``dictionary`` (stable decompositions and the coefficient dictionary),
``io`` (the JSON interchange format).
"""

from .core import (
    FIModule,
    InstabilityError,
    ModuleFormatError,
    NotStabilizedError,
    ValidationReport,
    WindowError,
    evaluate,
    free_module,
    representable,
    validate,
    zero_module,
)
from .coefficients import (
    CoefficientProfile,
    CubeStage,
    GradedCoefficient,
    ShiftCheckResult,
    coefficient_profile,
    coefficient_transition,
    delta_coefficient_shift_check,
    delta_complex,
    shifted_coefficient,
    taylor_coefficient,
)
from .truncation import (
    PolynomialCertificate,
    TruncationResult,
    cohomogeneous_layer,
    is_polynomial,
    pn_representable,
    q_truncation,
)
from .dictionary import (
    DictionaryInapplicableError,
    StabilityReport,
    dictionary_prediction,
    representation_stability_check,
    stable_decomposition,
    stage_character,
)
from .io import (
    load_module,
    module_from_json,
    module_to_json,
    save_module,
)

__all__ = [
    "FIModule",
    "InstabilityError",
    "ModuleFormatError",
    "NotStabilizedError",
    "ValidationReport",
    "WindowError",
    "evaluate",
    "free_module",
    "representable",
    "validate",
    "zero_module",
    "CoefficientProfile",
    "CubeStage",
    "GradedCoefficient",
    "ShiftCheckResult",
    "coefficient_profile",
    "coefficient_transition",
    "delta_coefficient_shift_check",
    "delta_complex",
    "shifted_coefficient",
    "taylor_coefficient",
    "PolynomialCertificate",
    "TruncationResult",
    "cohomogeneous_layer",
    "is_polynomial",
    "pn_representable",
    "q_truncation",
    "DictionaryInapplicableError",
    "StabilityReport",
    "dictionary_prediction",
    "representation_stability_check",
    "stable_decomposition",
    "stage_character",
    "load_module",
    "module_from_json",
    "module_to_json",
    "save_module",
]
