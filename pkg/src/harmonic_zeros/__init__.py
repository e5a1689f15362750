"""Zeros of rational harmonic functions f(z) = r(z) - conj(z).

Find and classify all zeros, verify the sharp count bounds (3(n-1)
sense-preserving, 2(n-1) sense-reversing-or-singular, 5(n-1) total and
5(n-1) - 1 when deg p > deg q), compute windings and Poincare indices,
build the extremal families, and render phase portraits.
"""

from .errors import (ConvergenceFailure, DegenerateResult, DomainError,
                     HarmonicZerosError, IndeterminateValue, IsolationFailure,
                     NotAZero, OnCurveZero, PoleEvaluation, RefinementExhausted,
                     SingularPoint, ViolationSuspected)
from .gallery import (ManifestEntry, SweepRow, coconj_extremal,
                      intro_counterexample, manifest, mpw, rhie,
                      rightmost_zero, sweep)
from .harmonic import (SENSE_PRESERVING, SENSE_REVERSING, SENSE_SINGULAR,
                       ClassifiedZero, RationalHarmonicFunction, ZeroConfig)
from .mobius import MobiusTransform, co_conjugate, derivative_at_image
from .poly import ComplexPolynomial, RootConfig
from .portrait import PortraitConfig, base_image, render
from .rational import (INFINITY, RationalFunction, format_rational,
                       parse_rational)
from .topology import (ArgumentPrincipleReport, Circle, WindingConfig,
                       WindingResult, argument_principle_check,
                       enclosing_circle, poincare_index, winding)
from .verify import (VERDICT_FAIL, VERDICT_INDETERMINATE, VERDICT_PASS,
                     ZeroCensus, bound_property_run, census,
                     extremal_regularity_check, random_rational_harmonic,
                     root_migration_experiment)

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "ArgumentPrincipleReport", "Circle", "ClassifiedZero",
    "ComplexPolynomial", "ConvergenceFailure", "DegenerateResult",
    "DomainError", "HarmonicZerosError", "IndeterminateValue",
    "IsolationFailure", "ManifestEntry", "MobiusTransform", "NotAZero",
    "OnCurveZero", "PoleEvaluation", "PortraitConfig", "RationalFunction",
    "RationalHarmonicFunction", "RefinementExhausted", "RootConfig",
    "SENSE_PRESERVING", "SENSE_REVERSING", "SENSE_SINGULAR", "SingularPoint",
    "SweepRow", "VERDICT_FAIL", "VERDICT_INDETERMINATE", "VERDICT_PASS",
    "ViolationSuspected", "WindingConfig", "WindingResult", "ZeroCensus",
    "ZeroConfig", "argument_principle_check", "base_image",
    "bound_property_run", "census", "co_conjugate", "coconj_extremal",
    "derivative_at_image", "enclosing_circle", "extremal_regularity_check",
    "format_rational", "intro_counterexample", "manifest", "mpw",
    "parse_rational", "poincare_index", "random_rational_harmonic", "render",
    "rhie", "rightmost_zero", "root_migration_experiment", "sweep", "census",
    "winding",
]
