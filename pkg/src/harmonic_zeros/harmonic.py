"""The central object f(z) = r(z) - conj(z): evaluation, zeros, sense classes.

A zero z0 is sense-preserving when |r'(z0)| > 1, sense-reversing when
|r'(z0)| < 1 and singular when |r'(z0)| = 1.  Numerically the singular case
is a band of half-width ``singular_band`` around 1; zeros inside the band are
flagged rather than forced into either class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateResult, DomainError, PoleEvaluation
from .poly import ComplexPolynomial, RootConfig
from .rational import INFINITY, RationalFunction

SENSE_PRESERVING = "preserving"
SENSE_REVERSING = "reversing"
SENSE_SINGULAR = "singular"

_INDEX_BY_SENSE = {SENSE_PRESERVING: 1, SENSE_REVERSING: -1, SENSE_SINGULAR: None}

# candidates this close to a pole are artifacts: p and q cannot vanish together
_POLE_EXCLUSION = 1e-9


@dataclass(frozen=True)
class ZeroConfig:
    """Tolerances for zero finding and classification."""

    residual_tol: float = 1e-9
    cluster_radius: float = 1e-7
    singular_band: float = 1e-8
    newton_refine_steps: int = 5

    def __post_init__(self):
        for name in ("residual_tol", "cluster_radius", "singular_band"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if self.newton_refine_steps < 0:
            raise DomainError("newton_refine_steps must be >= 0")


@dataclass(frozen=True)
class ClassifiedZero:
    """A located zero with residual, |r'|, sense tag and Poincare index."""

    location: complex
    residual: float
    derivative_modulus: float
    sense: str
    index: int | None

    def to_json_dict(self) -> dict:
        return {
            "location": [self.location.real, self.location.imag],
            "residual": self.residual,
            "derivative_modulus": self.derivative_modulus,
            "sense": self.sense,
            "index": self.index,
        }


def classify_modulus(derivative_modulus: float, band: float) -> str:
    if derivative_modulus > 1.0 + band:
        return SENSE_PRESERVING
    if derivative_modulus < 1.0 - band:
        return SENSE_REVERSING
    return SENSE_SINGULAR


class RationalHarmonicFunction:
    """f(z) = r(z) - conj(z) for a rational function r of degree >= 1."""

    __slots__ = ("rational", "_rprime")

    def __init__(self, rational: RationalFunction):
        if rational.degree < 1:
            raise DomainError("rational harmonic functions need degree >= 1")
        self.rational = rational
        self._rprime = rational.derivative()

    @property
    def degree(self) -> int:
        return self.rational.degree

    @property
    def derivative(self) -> RationalFunction:
        """r' as a rational function (the conj(z) term contributes no z-derivative)."""
        return self._rprime

    def eval(self, z: complex) -> complex:
        v = self.rational.eval(z)
        if v is INFINITY:
            raise PoleEvaluation(f"{z} is a pole; f has no value there")
        return v - complex(z).conjugate()

    __call__ = eval

    def _value_or_none(self, z: complex):
        try:
            v = self.rational.eval(z)
        except Exception:
            return None
        if v is INFINITY:
            return None
        return v - complex(z).conjugate()

    def sense_at(self, z: complex, band: float = 1e-8) -> tuple[float, str]:
        """|r'(z)| and its band classification at a non-pole point."""
        v = self._rprime.eval(z)
        if v is INFINITY:
            raise PoleEvaluation(f"{z} is a pole; sense undefined there")
        dm = abs(v)
        return dm, classify_modulus(dm, band)

    def find_zeros(self, cfg: ZeroConfig | None = None) -> list[ClassifiedZero]:
        """All zeros of f, classified and sorted by (re, im).

        Every zero satisfies z = r*(r(z)) where r* is the coefficient
        conjugate, so the zeros are among the fixed points of s = r* o r:

        1. collect the roots of numerator(s(z) - z), degree <= n^2 + 1;
        2. drop candidates within 1e-9 of a pole, and those whose residual
           |r(z) - conj z| exceeds residual_tol * (1 + |z|) (spurious fixed
           points satisfy the conjugated relation but not r(z) = conj z);
        3. polish survivors with damped Newton steps on the real 2x2 system;
        4. merge duplicates within cluster_radius;
        5. classify by |r'(z)| against the singular band.
        """
        cfg = cfg or ZeroConfig()
        r = self.rational
        mirror = r.conjugate_variant()
        selfmap = mirror.compose(r)
        x = ComplexPolynomial((0.0, 1.0))
        fixed_poly = selfmap.p - x * selfmap.q
        if fixed_poly.is_zero:
            raise DegenerateResult(
                "fixed-point relation degenerates to the identity; "
                "the zero set is a continuum, not isolated points")
        if fixed_poly.degree < 1:
            return []
        root_cfg = RootConfig(cluster_radius=cfg.cluster_radius)
        candidates = [loc for loc, _ in fixed_poly.roots(root_cfg)]
        pole_locs = [loc for loc, _ in r.poles()]

        survivors: list[tuple[complex, float]] = []
        for z0 in candidates:
            if pole_locs and min(abs(z0 - w) for w in pole_locs) <= _POLE_EXCLUSION:
                continue
            fv = self._value_or_none(z0)
            if fv is None or abs(fv) > cfg.residual_tol * (1.0 + abs(z0)):
                continue
            z1, f1 = self._refine(z0, fv, cfg)
            survivors.append((z1, abs(f1)))

        clusters: list[dict] = []
        for z, res in sorted(survivors, key=lambda t: (t[0].real, t[0].imag)):
            for cl in clusters:
                if abs(z - cl["loc"]) <= cfg.cluster_radius:
                    if res < cl["res"]:
                        cl["loc"], cl["res"] = z, res
                    break
            else:
                clusters.append({"loc": z, "res": res})

        out = []
        for cl in clusters:
            z = cl["loc"]
            dm = abs(self._rprime.eval(z))
            sense = classify_modulus(dm, cfg.singular_band)
            out.append(ClassifiedZero(z, cl["res"], dm, sense, _INDEX_BY_SENSE[sense]))
        out.sort(key=lambda cz: (cz.location.real, cz.location.imag))
        return out

    def _refine(self, z: complex, fv: complex, cfg: ZeroConfig):
        # Newton on (Re f, Im f) over (Re z, Im z); with A = r'(z) the update
        # solves A*d + conj(d) * (-1) = -f, singular exactly when |A| = 1.
        for _ in range(cfg.newton_refine_steps):
            if abs(fv) <= 1e-15 * (1.0 + abs(z)):
                break
            a = self._rprime.eval(z)
            if a is INFINITY:
                break
            denom = abs(a) ** 2 - 1.0
            if abs(denom) < 1e-6:
                break
            delta = (-fv * a.conjugate() - fv.conjugate()) / denom
            scale = 1.0
            improved = False
            for _ in range(4):
                z_new = z + scale * delta
                f_new = self._value_or_none(z_new)
                if f_new is not None and abs(f_new) < abs(fv):
                    z, fv = z_new, f_new
                    improved = True
                    break
                scale /= 2.0
            if not improved:
                break
        return z, fv

    def __repr__(self) -> str:
        return f"RationalHarmonicFunction({self.rational!r})"
