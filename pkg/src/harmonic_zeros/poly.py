"""Complex polynomial arithmetic and an Aberth-Ehrlich simultaneous root finder.

Coefficients are stored in ascending powers: ``coeffs[k]`` multiplies ``z**k``.
The zero polynomial is the empty tuple and reports degree ``-inf`` so that the
degree law ``deg(p*q) = deg(p) + deg(q)`` holds for every pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, DomainError

# Leading coefficients below this relative size are arithmetic noise; stripping
# them keeps the degree bookkeeping exact for everything built on top.
LEADING_NOISE_CUTOFF = 1e-13

_EPS = float(np.finfo(float).eps)
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RootConfig:
    """Tolerances for :meth:`ComplexPolynomial.roots`."""

    residual_tol: float = 1e-10
    cluster_radius: float = 1e-7
    max_sweeps: int = 200
    step_tol: float = 1e-14


def _stripped(coeffs: tuple[complex, ...]) -> tuple[complex, ...]:
    if not coeffs:
        return ()
    top = max(abs(c) for c in coeffs)
    if top == 0.0:
        return ()
    cut = LEADING_NOISE_CUTOFF * top
    end = len(coeffs)
    while end and abs(coeffs[end - 1]) < cut:
        end -= 1
    return coeffs[:end]


def _chopped(coeffs: list[complex]) -> list[complex]:
    # zero out interior coefficients that are pure noise relative to the rest
    top = max((abs(c) for c in coeffs), default=0.0)
    if top == 0.0:
        return coeffs
    cut = LEADING_NOISE_CUTOFF * top
    return [0j if abs(c) < cut else c for c in coeffs]


class ComplexPolynomial:
    """Immutable polynomial over complex scalars, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _stripped(tuple(complex(c) for c in coeffs))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "ComplexPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "ComplexPolynomial":
        return cls((1.0,))

    @classmethod
    def monomial(cls, power: int, coeff: complex = 1.0) -> "ComplexPolynomial":
        if power < 0:
            raise DomainError("monomial power must be >= 0")
        return cls((0.0,) * power + (coeff,))

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self) -> complex:
        if self.is_zero:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> complex:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    # -- evaluation and calculus ----------------------------------------------

    def eval(self, z):
        """Horner evaluation; works on scalars and numpy arrays alike."""
        out = 0 * z
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    __call__ = eval

    def derivative(self) -> "ComplexPolynomial":
        return ComplexPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def conjugate_coeffs(self) -> "ComplexPolynomial":
        """Coefficient-wise conjugate p* with p*(z) = conj(p(conj z))."""
        return ComplexPolynomial(tuple(c.conjugate() for c in self.coeffs))

    def deflate(self, root: complex) -> "ComplexPolynomial":
        """Synthetic division by (z - root); the remainder is discarded."""
        if self.degree < 1:
            raise DomainError("cannot deflate a constant or zero polynomial")
        a = self.coeffs
        n = len(a) - 1
        b: list[complex] = [0j] * n
        b[n - 1] = a[n]
        for k in range(n - 1, 0, -1):
            b[k - 1] = a[k] + root * b[k]
        return ComplexPolynomial(_chopped(b))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return ComplexPolynomial(out)

    def __sub__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        return self + (-other)

    def __neg__(self) -> "ComplexPolynomial":
        return ComplexPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            if self.is_zero or other.is_zero:
                return ComplexPolynomial(())
            conv = np.convolve(np.array(self.coeffs, dtype=complex),
                               np.array(other.coeffs, dtype=complex))
            return ComplexPolynomial(conv)
        return ComplexPolynomial(tuple(complex(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ComplexPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ComplexPolynomial({list(self.coeffs)!r})"

    # -- root finding ------------------------------------------------------------

    def roots(self, cfg: RootConfig | None = None) -> list[tuple[complex, int]]:
        """All roots with multiplicity estimates, sorted by (re, im).

        Aberth-Ehrlich simultaneous iteration started on the Cauchy-bound
        circle; a root counts as converged once its update is below
        ``step_tol * (1 + |z|)`` or its residual is at the rounding-noise
        floor of Horner evaluation.  Roots closer than ``cluster_radius``
        are merged and reported with their summed multiplicity.
        """
        cfg = cfg or RootConfig()
        if self.is_zero or self.degree < 1:
            raise DomainError("root finding requires degree >= 1")
        n = len(self.coeffs) - 1
        c = np.array(self.coeffs, dtype=complex)
        c /= np.abs(c).max()
        dc = c[1:] * np.arange(1, n + 1)
        absc = np.abs(c)

        cauchy = 1.0 + float((np.abs(c[:-1]) / abs(c[-1])).max())
        # angular offset keeps the start away from axis-symmetric stalls
        angles = _TWO_PI * (np.arange(n) + 0.5) / n + 0.4
        z = cauchy * np.exp(1j * angles)

        settled = np.zeros(n, dtype=bool)
        done = False
        for _ in range(cfg.max_sweeps):
            pv = _horner(c, z)
            dv = _horner(dc, z)
            floor = 4.0 * (n + 1) * _EPS * _horner(absc, np.abs(z)).real
            settled |= np.abs(pv) <= floor

            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            with np.errstate(all="ignore"):
                repulsion = (1.0 / diff).sum(axis=1) - 1.0
                newton = pv / dv
                step = newton / (1.0 - newton * repulsion)
            step[settled] = 0.0
            bad = ~np.isfinite(step)
            if bad.any():
                step[bad] = 0.0
                z = np.where(bad, z * (1 + 1e-3) + 1e-3 * cauchy, z)
            z = z - step
            settled |= (np.abs(step) < cfg.step_tol * (1.0 + np.abs(z))) & ~bad
            if settled.all():
                done = True
                break

        merged = _cluster(z, cfg.cluster_radius)
        bound_fail = any(
            abs(complex(_horner(c, np.array([root]))[0])) >
            cfg.residual_tol * max(1.0, abs(root)) ** n
            for root, _ in merged
        )
        if not done or bound_fail:
            raise ConvergenceFailure(
                f"root iteration did not meet tolerances within {cfg.max_sweeps} sweeps",
                partial=merged,
            )
        return merged


def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    out = np.full_like(z, c[-1], dtype=complex)
    for k in range(len(c) - 2, -1, -1):
        out = out * z + c[k]
    return out


def _cluster(points, radius: float) -> list[tuple[complex, int]]:
    pts = sorted((complex(p) for p in points), key=lambda w: (w.real, w.imag))
    groups: list[list[complex]] = []
    for w in pts:
        for g in groups:
            if abs(w - sum(g) / len(g)) <= radius:
                g.append(w)
                break
        else:
            groups.append([w])
    merged = [(sum(g) / len(g), len(g)) for g in groups]
    merged.sort(key=lambda t: (t[0].real, t[0].imag))
    return merged
