"""Windings along circles, Poincare indices, and the argument-principle check.

f is harmonic but not holomorphic, so there is no residue integral to fall
back on; the winding is computed directly from its definition by tracking a
continuous argument along adaptively refined samples of the circle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (DomainError, IsolationFailure, OnCurveZero,
                     RefinementExhausted)
from .harmonic import SENSE_SINGULAR, ClassifiedZero, RationalHarmonicFunction

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Circle:
    """Counterclockwise circle |z - center| = radius."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0:
            raise DomainError("circle radius must be positive")

    def point(self, theta: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * theta)


@dataclass(frozen=True)
class WindingConfig:
    initial_samples: int = 256
    max_samples: int = 2 ** 20
    zero_guard: float = 1e-10
    max_phase_step: float = math.pi / 2


@dataclass(frozen=True)
class WindingResult:
    value: int
    samples_used: int
    max_step_phase: float


def winding(func, circle: Circle, cfg: WindingConfig | None = None) -> WindingResult:
    """Total argument change of ``func`` along the circle, divided by 2*pi.

    Sampling starts uniform and is bisected wherever the phase jump between
    neighbours reaches pi/2, so branch ambiguity cannot occur in the
    accumulated total.  ``func`` must be nonzero (and finite) on the circle.
    """
    cfg = cfg or WindingConfig()

    def sample(theta: float) -> complex:
        v = complex(func(circle.point(theta)))
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise OnCurveZero("non-finite value on the contour (pole on the curve?)")
        if abs(v) <= cfg.zero_guard:
            raise OnCurveZero(f"|f| <= {cfg.zero_guard} on the contour")
        return v

    n0 = max(4, cfg.initial_samples)
    thetas = [_TWO_PI * k / n0 for k in range(n0)]
    values = [sample(t) for t in thetas]
    used = n0

    total = 0.0
    max_step = 0.0
    # closed loop: final segment wraps to the starting sample
    stack = [(thetas[k], values[k],
              thetas[k + 1] if k + 1 < n0 else _TWO_PI,
              values[(k + 1) % n0]) for k in range(n0 - 1, -1, -1)]
    while stack:
        t1, v1, t2, v2 = stack.pop()
        step = cmath.phase(v2 / v1)
        if abs(step) < cfg.max_phase_step:
            total += step
            if abs(step) > max_step:
                max_step = abs(step)
            continue
        if used >= cfg.max_samples:
            raise RefinementExhausted(
                f"phase-step bound not met within {cfg.max_samples} samples")
        tm = 0.5 * (t1 + t2)
        vm = sample(tm)
        used += 1
        stack.append((tm, vm, t2, v2))
        stack.append((t1, v1, tm, vm))

    turns = total / _TWO_PI
    value = round(turns)
    if abs(turns - value) >= 0.1:
        raise RefinementExhausted(
            f"accumulated phase {turns:.6f} turns is not consistent with an integer")
    return WindingResult(int(value), used, max_step)


def enclosing_circle(zeros, poles) -> Circle:
    """Origin-centred circle guaranteed to contain all zeros and poles."""
    mods = [abs(z.location if isinstance(z, ClassifiedZero) else complex(z))
            for z in zeros]
    mods += [abs(loc) for loc, _ in poles]
    top = max(mods, default=0.0)
    return Circle(0j, 2.0 * (1.0 + top) + 1.0)


def poincare_index(f: RationalHarmonicFunction, z0: complex,
                   cfg: WindingConfig | None = None,
                   zeros=None, poles=None) -> int:
    """Winding of f on a small circle isolating the zero or pole z0.

    The radius starts at half the distance to the nearest other zero or
    pole and shrinks on contact with the curve; below 1e-12 the point is
    declared non-isolable.  Refuses singular zeros, whose index is not
    defined.
    """
    z0 = complex(z0)
    zeros = f.find_zeros() if zeros is None else zeros
    poles = f.rational.poles() if poles is None else poles

    match_tol = 1e-7
    matched = None
    for cz in zeros:
        if abs(cz.location - z0) <= match_tol:
            matched = cz.location
            if cz.sense == SENSE_SINGULAR:
                raise IsolationFailure("the index is undefined at a singular zero")
            break
    if matched is None:
        for loc, _ in poles:
            if abs(loc - z0) <= match_tol:
                matched = loc
                break
    if matched is None:
        raise DomainError(f"{z0} is neither a zero nor a pole of f")

    others = [cz.location for cz in zeros if cz.location != matched]
    others += [loc for loc, _ in poles if loc != matched]
    if others:
        radius = 0.5 * min(abs(matched - w) for w in others)
    else:
        radius = 0.5 * (1.0 + abs(matched))
    while radius > 1e-12:
        try:
            return winding(f, Circle(matched, radius), cfg).value
        except OnCurveZero:
            radius /= 2.0
    raise IsolationFailure("no isolating circle found above radius 1e-12")


@dataclass(frozen=True)
class ArgumentPrincipleReport:
    winding: int
    sum_of_indices: int
    consistent: bool | None
    indeterminate: bool
    n_plus: int
    n_minus: int
    n_singular_flagged: int
    pole_order_sum: int
    circle: Circle

    def to_json_dict(self) -> dict:
        return {
            "winding": self.winding,
            "sum_of_indices": self.sum_of_indices,
            "consistent": self.consistent,
            "indeterminate": self.indeterminate,
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "n_singular_flagged": self.n_singular_flagged,
            "pole_order_sum": self.pole_order_sum,
            "circle": {"center": [self.circle.center.real, self.circle.center.imag],
                       "radius": self.circle.radius},
        }


def argument_principle_check(f: RationalHarmonicFunction,
                             circle: Circle | None = None,
                             cfg: WindingConfig | None = None,
                             zeros=None) -> ArgumentPrincipleReport:
    """Compare the winding on an enclosing circle with the index sum
    n_plus - n_minus - (sum of pole orders), computed independently.

    With singular-flagged zeros present the index sum is ill-defined and
    the report comes back indeterminate instead of asserting consistency.
    """
    zeros = f.find_zeros() if zeros is None else zeros
    poles = f.rational.poles()
    if circle is None:
        circle = enclosing_circle(zeros, poles)
    else:
        points = [cz.location for cz in zeros] + [loc for loc, _ in poles]
        if any(abs(w - circle.center) >= circle.radius for w in points):
            raise DomainError("circle must strictly contain every zero and pole")

    n_plus = sum(1 for cz in zeros if cz.index == 1)
    n_minus = sum(1 for cz in zeros if cz.index == -1)
    flagged = sum(1 for cz in zeros if cz.sense == SENSE_SINGULAR)
    pole_sum = sum(order for _, order in poles)
    sum_idx = n_plus - n_minus - pole_sum
    w = winding(f, circle, cfg).value
    indeterminate = flagged > 0
    consistent = None if indeterminate else (w == sum_idx)
    return ArgumentPrincipleReport(w, sum_idx, consistent, indeterminate,
                                   n_plus, n_minus, flagged, pole_sum, circle)
