"""Bound censuses, the extremal-regularity check, and the root-migration run.

For degree n >= 2 the sharp bounds are: at most 3(n-1) sense-preserving
zeros, at most 2(n-1) sense-reversing-or-singular zeros, hence at most
5(n-1) in total, and at most 5(n-1) - 1 when deg p > deg q.  A "fail"
verdict would contradict a theorem and is treated as a release-blocking
numerical bug; singular-flagged zeros make exact counting ill-posed, so any
flag downgrades the verdict to "indeterminate" rather than pretending
precision we do not have.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceFailure, DomainError, ViolationSuspected
from .harmonic import (SENSE_PRESERVING, SENSE_REVERSING, SENSE_SINGULAR,
                       ClassifiedZero, RationalHarmonicFunction, ZeroConfig)
from .rational import RationalFunction

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ZeroCensus:
    n: int
    deg_p: int
    deg_q: int
    n_plus: int
    n_minus: int
    n_singular_flagged: int
    bound_plus: int
    bound_minus_zero: int
    bound_total: int
    verdict: str
    zeros: tuple[ClassifiedZero, ...] = field(repr=False, default=())

    @property
    def total(self) -> int:
        return self.n_plus + self.n_minus + self.n_singular_flagged

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "deg_p": self.deg_p,
            "deg_q": self.deg_q,
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "n_singular_flagged": self.n_singular_flagged,
            "total": self.total,
            "bound_plus": self.bound_plus,
            "bound_minus_zero": self.bound_minus_zero,
            "bound_total": self.bound_total,
            "verdict": self.verdict,
            "zeros": [z.to_json_dict() for z in self.zeros],
        }


def _verdict(n_plus: int, n_minus: int, flagged: int,
             bound_plus: int, bound_minus_zero: int, bound_total: int) -> str:
    total = n_plus + n_minus + flagged
    if total > bound_total:
        return VERDICT_FAIL
    if flagged == 0:
        ok = n_plus <= bound_plus and n_minus <= bound_minus_zero
        return VERDICT_PASS if ok else VERDICT_FAIL
    # flagged zeros are really preserving, reversing or singular; the verdict
    # fails only if no assignment satisfies both per-sense bounds
    for k in range(flagged + 1):
        if n_plus + k <= bound_plus and n_minus + (flagged - k) <= bound_minus_zero:
            return VERDICT_INDETERMINATE
    return VERDICT_FAIL


def census(f: RationalHarmonicFunction, cfg: ZeroConfig | None = None) -> ZeroCensus:
    """Count zeros by sense and compare against the degree-n bounds."""
    n = f.degree
    if n < 2:
        raise DomainError("the zero-count bounds require degree >= 2")
    zeros = tuple(f.find_zeros(cfg))
    n_plus = sum(1 for z in zeros if z.sense == SENSE_PRESERVING)
    n_minus = sum(1 for z in zeros if z.sense == SENSE_REVERSING)
    flagged = sum(1 for z in zeros if z.sense == SENSE_SINGULAR)
    deg_p = int(f.rational.p.degree) if not f.rational.p.is_zero else 0
    deg_q = int(f.rational.q.degree)
    bound_plus = 3 * (n - 1)
    bound_minus_zero = 2 * (n - 1)
    bound_total = 5 * (n - 1) - 1 if deg_p > deg_q else 5 * (n - 1)
    verdict = _verdict(n_plus, n_minus, flagged, bound_plus, bound_minus_zero,
                       bound_total)
    return ZeroCensus(n, deg_p, deg_q, n_plus, n_minus, flagged,
                      bound_plus, bound_minus_zero, bound_total, verdict, zeros)


@dataclass(frozen=True)
class RegularityReport:
    applicable: bool
    cap_kind: str | None      # "full" = 5(n-1), "asymmetric" = 5(n-1)-1
    regular: bool | None
    margin: float | None      # min over zeros of | |r'(z)| - 1 |
    total: int
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "cap_kind": self.cap_kind,
            "regular": self.regular,
            "margin": self.margin,
            "total": self.total,
            "detail": self.detail,
        }


def regularity_from_census(c: ZeroCensus, band: float = 1e-8) -> RegularityReport:
    full_cap = 5 * (c.n - 1)
    asym = c.deg_p > c.deg_q
    if c.total == full_cap:
        kind = "full"
    elif asym and c.total == full_cap - 1:
        kind = "asymmetric"
    else:
        return RegularityReport(
            False, None, None, None, c.total,
            "zero count is below the extremal cap; the regularity property "
            "is only guaranteed at the cap")
    if c.n_singular_flagged > 0:
        raise ViolationSuspected(
            "extremal zero count together with a singular-flagged zero: this "
            "would contradict the regularity of extremal functions and is "
            "almost surely a numerical artifact; review the instance manually")
    margin = min(abs(z.derivative_modulus - 1.0) for z in c.zeros)
    return RegularityReport(True, kind, margin > band, margin, c.total,
                            f"extremal ({kind} cap); no singular zeros, "
                            f"margin {margin:.3e}")


def extremal_regularity_check(f: RationalHarmonicFunction,
                              cfg: ZeroConfig | None = None) -> RegularityReport:
    """At the extremal count no zero may be singular; reports the margin."""
    cfg = cfg or ZeroConfig()
    return regularity_from_census(census(f, cfg), cfg.singular_band)


# -- root migration -----------------------------------------------------------------


@dataclass(frozen=True)
class MigrationMatch:
    original: complex
    sense: str
    migrated: complex | None
    matches_in_disk: int
    same_sense: bool


@dataclass(frozen=True)
class MigrationRow:
    magnitude: float
    offset: complex
    matches: tuple[MigrationMatch, ...]
    unmatched_singular: int
    all_matched: bool
    counts_monotone: bool
    status: str


@dataclass(frozen=True)
class MigrationReport:
    epsilon: float
    rows: tuple[MigrationRow, ...]


def root_migration_experiment(f: RationalHarmonicFunction,
                              c_magnitudes,
                              direction: complex = 1.0 + 0j,
                              cfg: ZeroConfig | None = None) -> MigrationReport:
    """Perturb f to f - c and match every non-singular zero to exactly one
    same-sense zero of the perturbation inside its isolation disk.

    The disk radius is half the smallest distance between zeros (and from
    zeros to poles), computed from the actual zero set.  Magnitudes too
    large for that regime show up as match-failure rows, not exceptions.
    Singular zeros are excluded by design: the migration statement only
    covers sense-preserving and sense-reversing zeros.
    """
    cfg = cfg or ZeroConfig()
    zeros = f.find_zeros(cfg)
    if not any(z.sense != SENSE_SINGULAR for z in zeros):
        raise DomainError("need at least one non-singular zero to migrate")
    locs = [z.location for z in zeros]
    pole_locs = [loc for loc, _ in f.rational.poles()]
    gaps = [abs(a - b) for i, a in enumerate(locs) for b in locs[i + 1:]]
    gaps += [abs(a - b) for a in locs for b in pole_locs]
    eps = 0.5 * min(gaps) if gaps else 0.5 * (1.0 + abs(locs[0]))

    d = complex(direction)
    if d == 0:
        raise DomainError("direction must be nonzero")
    d /= abs(d)

    base_plus = sum(1 for z in zeros if z.sense == SENSE_PRESERVING)
    base_minus = sum(1 for z in zeros if z.sense == SENSE_REVERSING)

    rows = []
    for mag in c_magnitudes:
        c = float(mag) * d
        shifted = RationalFunction(f.rational.p - c * f.rational.q,
                                   f.rational.q, reduce=False)
        fc = RationalHarmonicFunction(shifted)
        try:
            moved = fc.find_zeros(cfg)
        except ConvergenceFailure:
            rows.append(MigrationRow(float(mag), c, (), 0, False, False,
                                     "convergence-failure"))
            continue
        matches = []
        unmatched_singular = 0
        for z in zeros:
            if z.sense == SENSE_SINGULAR:
                unmatched_singular += 1
                continue
            close = [m for m in moved if abs(m.location - z.location) < eps]
            migrated = close[0].location if len(close) == 1 else None
            same = len(close) == 1 and close[0].sense == z.sense
            matches.append(MigrationMatch(z.location, z.sense, migrated,
                                          len(close), same))
        went_plus = sum(1 for m in moved if m.sense == SENSE_PRESERVING)
        went_minus = sum(1 for m in moved if m.sense == SENSE_REVERSING)
        all_matched = all(m.matches_in_disk == 1 and m.same_sense for m in matches)
        monotone = went_plus >= base_plus and went_minus >= base_minus
        rows.append(MigrationRow(float(mag), c, tuple(matches),
                                 unmatched_singular, all_matched, monotone,
                                 "ok" if all_matched else "match-failure"))
    return MigrationReport(eps, tuple(rows))


# -- random instances and the bound property run ------------------------------------


def random_rational_harmonic(rng: np.random.Generator, n: int,
                             shape: str = "any") -> RationalHarmonicFunction:
    """A reduced random instance of exact degree n, coefficients in the
    unit disk.  shape: 'q_dominant' (deg p <= deg q = n), 'p_dominant'
    (deg p = n > deg q), or 'any'."""
    if n < 1:
        raise DomainError("degree must be >= 1")
    if shape not in ("q_dominant", "p_dominant", "any"):
        raise DomainError("shape must be 'q_dominant', 'p_dominant' or 'any'")
    for _ in range(200):
        kind = shape
        if kind == "any":
            kind = "p_dominant" if rng.integers(0, 2) else "q_dominant"
        if kind == "q_dominant":
            deg_p = int(rng.integers(0, n + 1))
            deg_q = n
        else:
            deg_p = n
            deg_q = int(rng.integers(0, n))
        p = _disk_coeffs(rng, deg_p)
        q = _disk_coeffs(rng, deg_q)
        try:
            r = RationalFunction(p, q)
        except Exception:
            continue
        deg_p_red = int(r.p.degree) if not r.p.is_zero else 0
        deg_q_red = int(r.q.degree)
        if r.degree != n:
            continue
        if kind == "q_dominant" and not deg_p_red <= deg_q_red == n:
            continue
        if kind == "p_dominant" and not deg_p_red == n > deg_q_red:
            continue
        return RationalHarmonicFunction(r)
    raise ConvergenceFailure("no admissible random instance after 200 draws")


def _disk_coeffs(rng: np.random.Generator, degree: int) -> list[complex]:
    out = []
    for _ in range(degree + 1):
        rad = float(np.sqrt(rng.uniform(0.0, 1.0)))
        ang = float(rng.uniform(0.0, 2.0 * np.pi))
        out.append(rad * complex(np.cos(ang), np.sin(ang)))
    # a healthy leading coefficient keeps the degree stable under reduction
    while abs(out[-1]) < 0.2:
        rad = float(np.sqrt(rng.uniform(0.0, 1.0)))
        ang = float(rng.uniform(0.0, 2.0 * np.pi))
        out[-1] = rad * complex(np.cos(ang), np.sin(ang))
    return out


@dataclass(frozen=True)
class PropertyRunSummary:
    seed: int
    instances: int
    n_pass: int
    n_indeterminate: int
    n_fail: int
    n_error: int
    failures: tuple[dict, ...]

    @property
    def indeterminate_rate(self) -> float:
        return self.n_indeterminate / self.instances if self.instances else 0.0

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "instances": self.instances,
            "pass": self.n_pass,
            "indeterminate": self.n_indeterminate,
            "fail": self.n_fail,
            "error": self.n_error,
            "indeterminate_rate": self.indeterminate_rate,
            "failures": list(self.failures),
        }


def bound_property_run(seed: int, degrees=(2, 3, 4), per_degree: int = 200,
                       shape: str = "any",
                       cfg: ZeroConfig | None = None) -> PropertyRunSummary:
    """Census a batch of seeded random instances; any 'fail' verdict is a
    release-blocking bug (it would contradict the proven bounds)."""
    rng = np.random.default_rng(seed)
    n_pass = n_ind = n_fail = n_err = 0
    failures = []
    count = 0
    for n in degrees:
        for _ in range(per_degree):
            count += 1
            try:
                f = random_rational_harmonic(rng, n, shape)
                c = census(f, cfg)
            except Exception as exc:
                n_err += 1
                failures.append({"degree": n, "error": repr(exc)})
                continue
            if c.verdict == VERDICT_PASS:
                n_pass += 1
            elif c.verdict == VERDICT_INDETERMINATE:
                n_ind += 1
            else:
                n_fail += 1
                failures.append({"degree": n, "census": c.to_json_dict(),
                                 "rational": f.rational.to_text()})
    return PropertyRunSummary(seed, count, n_pass, n_ind, n_fail, n_err,
                              tuple(failures))
