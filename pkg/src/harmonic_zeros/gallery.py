"""Named function families, the packaged gallery manifest, and parameter sweeps.

Two families realize the sharp zero-count bounds:

* ``mpw(n, a)``:  r(z) = z^(n-1) / (z^n - a^n)
* ``rhie(n, a, eps)``:  r(z) = (1-eps) z^(n-1)/(z^n - a^n) + eps/z,
  equivalently (z^n - eps a^n) / (z^(n+1) - a^n z), of degree n+1.

Admissible parameters are not hard-coded guesses: they come from the grid
sweep below, whose CSV output is committed under data/sweeps/ and referenced
by the manifest entries as provenance.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

from .errors import ConvergenceFailure, DegenerateResult, DomainError, NotAZero
from .harmonic import (SENSE_PRESERVING, SENSE_REVERSING, SENSE_SINGULAR,
                       ClassifiedZero, RationalHarmonicFunction, ZeroConfig)
from .mobius import MobiusTransform, co_conjugate
from .parallel import ordered_map
from .rational import RationalFunction, parse_rational

SWEEP_COLUMNS = ("family", "n", "a", "eps", "zero_count", "n_plus", "n_minus",
                 "n_singular_flagged", "status")


def mpw(n: int, a: float) -> RationalHarmonicFunction:
    """z^(n-1)/(z^n - a^n) - conj(z); degree n with deg p < deg q."""
    if int(n) != n or n < 2:
        raise DomainError("mpw requires an integer n >= 2")
    if not 0 < a < 1:
        raise DomainError("mpw requires 0 < a < 1")
    n = int(n)
    p = [0.0] * (n - 1) + [1.0]
    q = [-float(a) ** n] + [0.0] * (n - 1) + [1.0]
    return RationalHarmonicFunction(RationalFunction(p, q, reduce=False))


def rhie(n: int, a: float, eps: float) -> RationalHarmonicFunction:
    """(z^n - eps a^n)/(z^(n+1) - a^n z) - conj(z); degree n+1.

    This is the convex combination of the mpw rational part with a pole at
    the origin; eps = 0 reduces back to mpw(n, a).
    """
    if int(n) != n or n < 3:
        raise DomainError("rhie requires an integer n >= 3")
    if not 0 < a < 1:
        raise DomainError("rhie requires 0 < a < 1")
    if not 0 <= eps < 1:
        raise DomainError("rhie requires 0 <= eps < 1")
    n = int(n)
    an = float(a) ** n
    p = [-eps * an] + [0.0] * (n - 1) + [1.0]
    q = [0.0, -an] + [0.0] * (n - 1) + [1.0]
    return RationalHarmonicFunction(RationalFunction(p, q))


def intro_counterexample() -> tuple[RationalHarmonicFunction, RationalHarmonicFunction]:
    """The regular function z + 1/z - conj(z) and its co-conjugate under
    w = 1/z, namely w/(1+w^2) - conj(w), which has a singular zero at 0."""
    f = RationalHarmonicFunction(RationalFunction([1.0, 0.0, 1.0], [0.0, 1.0]))
    g = RationalHarmonicFunction(RationalFunction([0.0, 1.0], [1.0, 0.0, 1.0]))
    return f, g


def rightmost_zero(zeros: list[ClassifiedZero]) -> ClassifiedZero:
    """Largest real part, ties broken by largest imaginary part."""
    if not zeros:
        raise DomainError("empty zero list")
    return max(zeros, key=lambda cz: (cz.location.real, cz.location.imag))


def coconj_extremal(f: RationalHarmonicFunction, z0: complex,
                    residual_tol: float = 1e-8) -> RationalHarmonicFunction:
    """Co-conjugate of f under w = 1/(z - z0) for a verified zero z0 of f.

    The result has numerator degree n = deg(r) and denominator degree at
    most n - 1, and its harmonic counterpart has one zero fewer than f: the
    missing one sits at w = infinity.
    """
    z0 = complex(z0)
    try:
        fv = f.eval(z0)
    except Exception as exc:
        raise NotAZero(f"{z0} is not a zero of f ({exc})") from exc
    if abs(fv) > residual_tol * (1.0 + abs(z0)):
        raise NotAZero(f"|f({z0})| = {abs(fv):.3e} fails the residual check")
    transform = MobiusTransform(0.0, 1.0, 1.0, -z0)
    image = co_conjugate(f.rational, transform)
    if not (image.p.degree == f.degree and image.q.degree <= f.degree - 1):
        raise DegenerateResult(
            "expected deg p = n > deg q in the co-conjugate of an extremal zero")
    return RationalHarmonicFunction(image)


# -- manifest -------------------------------------------------------------------


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    spec_text: str
    expected_zero_count: int | None   # None means "unknown"
    provenance: str
    params: dict

    def build(self) -> RationalHarmonicFunction:
        return RationalHarmonicFunction(parse_rational(self.spec_text))


def manifest() -> tuple[ManifestEntry, ...]:
    raw = resources.files("harmonic_zeros").joinpath("data/gallery_manifest.json")
    entries = json.loads(raw.read_text(encoding="utf-8"))["entries"]
    out = []
    for e in entries:
        count = e["expected_zero_count"]
        out.append(ManifestEntry(
            name=e["name"],
            spec_text=e["spec"],
            expected_zero_count=None if count == "unknown" else int(count),
            provenance=e["provenance"],
            params=dict(e.get("params", {})),
        ))
    return tuple(out)


def entry(name: str) -> ManifestEntry:
    for e in manifest():
        if e.name == name:
            return e
    raise DomainError(f"no gallery entry named {name!r}")


def instance(name: str) -> RationalHarmonicFunction:
    return entry(name).build()


# -- parameter sweep ---------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    a: float
    eps: float
    zero_count: int | None
    n_plus: int | None
    n_minus: int | None
    n_singular_flagged: int | None
    status: str

    def as_csv_row(self) -> list:
        blank = self.zero_count is None
        return [self.family, self.n, self.a, self.eps,
                "" if blank else self.zero_count,
                "" if blank else self.n_plus,
                "" if blank else self.n_minus,
                "" if blank else self.n_singular_flagged,
                self.status]


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0:
        raise DomainError("step must be positive")
    if hi < lo:
        raise DomainError("empty range")
    out = []
    k = 0
    while True:
        v = round(lo + k * step, 12)
        if v > hi + 1e-12:
            break
        out.append(min(v, hi))
        k += 1
    return out


def sweep(family: str, n: int, a_range: tuple[float, float],
          eps_range: tuple[float, float] | None = None,
          step: float = 0.01,
          cfg: ZeroConfig | None = None) -> list[SweepRow]:
    """Count zeros over a deterministic (a, eps) grid.

    Rows where the zero finder fails to converge are emitted with an error
    status instead of being dropped.  Rows come back sorted by (a, eps).
    """
    if family not in ("mpw", "rhie"):
        raise DomainError("family must be 'mpw' or 'rhie'")
    lo, hi = a_range
    if not (0 < lo <= hi < 1):
        raise DomainError("a_range must lie inside (0, 1)")
    a_values = _grid(lo, hi, step)
    if family == "mpw":
        eps_values = [0.0]
    else:
        if eps_range is None:
            raise DomainError("rhie sweep needs eps_range")
        elo, ehi = eps_range
        if not (0 < elo <= ehi < 1):
            raise DomainError("eps_range must lie inside (0, 1)")
        eps_values = _grid(elo, ehi, step)

    tasks = sorted((a, e) for a in a_values for e in eps_values)

    def one(task):
        a, e = task
        try:
            f = mpw(n, a) if family == "mpw" else rhie(n, a, e)
            zeros = f.find_zeros(cfg)
        except ConvergenceFailure:
            return SweepRow(family, n, a, e, None, None, None, None,
                            "convergence-failure")
        except DegenerateResult:
            return SweepRow(family, n, a, e, None, None, None, None, "degenerate")
        n_plus = sum(1 for z in zeros if z.sense == SENSE_PRESERVING)
        n_minus = sum(1 for z in zeros if z.sense == SENSE_REVERSING)
        flagged = sum(1 for z in zeros if z.sense == SENSE_SINGULAR)
        return SweepRow(family, n, a, e, len(zeros), n_plus, n_minus, flagged, "ok")

    return ordered_map(one, tasks)


def write_sweep_csv(rows: list[SweepRow], fileobj) -> None:
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv_row())


def sweep_csv_text(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    write_sweep_csv(rows, buf)
    return buf.getvalue()
