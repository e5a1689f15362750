"""Rational functions p/q with numerically enforced coprimality.

Evaluation follows Riemann-sphere conventions: a simple ``INFINITY`` marker is
returned where the denominator vanishes, never an exception, so that the
"missing solution" at infinity round-trips through transformations.

The text form used by the CLI and by data files is

    p: c0, c1, ..., cn ; q: d0, d1, ..., dm

with ascending coefficients and complex literals ``a``, ``ai``, ``a+bi``,
``a-bi`` (ASCII ``i`` suffix).  Whitespace is ignored.
"""

from __future__ import annotations

from .errors import DegenerateResult, DomainError, IndeterminateValue
from .poly import ComplexPolynomial, RootConfig

# two roots of numerator and denominator closer than this share a factor
GCD_TOL = 1e-9


class _Infinity:
    """Marker for the point at infinity on the Riemann sphere."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


class RationalFunction:
    """Quotient p/q of complex polynomials, coprime after reduction."""

    __slots__ = ("p", "q")

    def __init__(self, p, q, reduce: bool = True):
        p = p if isinstance(p, ComplexPolynomial) else ComplexPolynomial(p)
        q = q if isinstance(q, ComplexPolynomial) else ComplexPolynomial(q)
        if q.is_zero:
            raise DomainError("denominator is identically zero")
        if p.is_zero:
            p, q = ComplexPolynomial.zero(), ComplexPolynomial.one()
        elif reduce:
            p, q = _coprime_reduce(p, q)
        self.p = p
        self.q = q

    @property
    def degree(self) -> int:
        d = max(self.p.degree, self.q.degree)
        return int(d) if d >= 0 else 0

    def eval(self, z):
        """p(z)/q(z); returns INFINITY at poles, accepts INFINITY as input."""
        if z is INFINITY:
            dp, dq = self.p.degree, self.q.degree
            if dp > dq:
                return INFINITY
            if dp < dq:
                return 0j
            return self.p.leading / self.q.leading
        z = complex(z)
        pv = self.p.eval(z)
        qv = self.q.eval(z)
        if qv == 0:
            scale = max(abs(c) for c in self.p.coeffs) if self.p.coeffs else 0.0
            scale *= max(1.0, abs(z)) ** max(self.p.degree, 0)
            if abs(pv) <= 1e-12 * scale:
                raise IndeterminateValue(
                    f"numerator and denominator both vanish at {z}; reduction failed")
            return INFINITY
        return pv / qv

    __call__ = eval

    def derivative(self) -> "RationalFunction":
        """Quotient rule (p'q - pq')/q^2, reduced."""
        num = self.p.derivative() * self.q - self.p * self.q.derivative()
        return RationalFunction(num, self.q * self.q)

    def poles(self, cfg: RootConfig | None = None) -> list[tuple[complex, int]]:
        """Roots of the denominator with orders; empty for polynomials."""
        if self.q.degree < 1:
            return []
        return self.q.roots(cfg)

    def conjugate_variant(self) -> "RationalFunction":
        """r* with conjugated coefficients, so r*(conj z) = conj(r(z))."""
        return RationalFunction(self.p.conjugate_coeffs(), self.q.conjugate_coeffs(),
                                reduce=False)

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """self(inner(z)).  For non-constant reduced inputs the degree of the
        result must be the product of the degrees; a collapse raises
        DegenerateResult."""
        n = max(int(self.p.degree) if not self.p.is_zero else 0, int(self.q.degree))
        pk = [self.p.coeff(k) for k in range(n + 1)]
        qk = [self.q.coeff(k) for k in range(n + 1)]
        ip_pow = _powers(inner.p, n)
        iq_pow = _powers(inner.q, n)
        num = ComplexPolynomial.zero()
        den = ComplexPolynomial.zero()
        for k in range(n + 1):
            base = ip_pow[k] * iq_pow[n - k]
            if pk[k] != 0:
                num = num + pk[k] * base
            if qk[k] != 0:
                den = den + qk[k] * base
        if den.is_zero:
            raise DegenerateResult("composition produced an identically zero denominator")
        out = RationalFunction(num, den)
        if self.degree >= 1 and inner.degree >= 1 and out.degree != self.degree * inner.degree:
            raise DegenerateResult(
                f"composition degree collapsed: got {out.degree}, "
                f"expected {self.degree * inner.degree}")
        return out

    def to_text(self) -> str:
        return format_rational(self)

    @classmethod
    def from_text(cls, text: str) -> "RationalFunction":
        return parse_rational(text)

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.p.coeffs)!r}, {list(self.q.coeffs)!r})"


def _powers(base: ComplexPolynomial, upto: int) -> list[ComplexPolynomial]:
    out = [ComplexPolynomial.one()]
    for _ in range(upto):
        out.append(out[-1] * base)
    return out


def _coprime_reduce(p: ComplexPolynomial, q: ComplexPolynomial):
    while p.degree >= 1 and q.degree >= 1:
        proots = p.roots()
        qroots = q.roots()
        best = None
        for pr, _ in proots:
            for qr, _ in qroots:
                d = abs(pr - qr)
                if best is None or d < best[0]:
                    best = (d, pr, qr)
        if best is None or best[0] > GCD_TOL:
            break
        mid = (best[1] + best[2]) / 2
        p = p.deflate(mid)
        q = q.deflate(mid)
        if p.is_zero or q.is_zero:
            raise DegenerateResult("coprime reduction degenerated")
    return p, q


# -- text format ---------------------------------------------------------------


def format_complex(c: complex) -> str:
    re, im = c.real, c.imag
    if im == 0:
        return _fmt_float(re)
    if re == 0:
        return _fmt_float(im) + "i"
    sign = "+" if im > 0 else "-"
    return f"{_fmt_float(re)}{sign}{_fmt_float(abs(im))}i"


def _fmt_float(x: float) -> str:
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def parse_complex(token: str) -> complex:
    t = token.strip().replace(" ", "").replace("I", "i")
    if not t:
        raise DomainError("empty coefficient")
    try:
        return complex(t.replace("i", "j"))
    except ValueError as exc:
        raise DomainError(f"bad complex literal {token!r}") from exc


def parse_rational(text: str) -> RationalFunction:
    """Parse the ``p: ... ; q: ...`` text form (ascending coefficients)."""
    parts = text.split(";")
    if len(parts) != 2:
        raise DomainError("expected exactly one ';' separating p and q")
    coeffs = []
    for part, label in zip(parts, ("p", "q")):
        head, sep, body = part.partition(":")
        if not sep or head.strip().lower() != label:
            raise DomainError(f"expected '{label}:' in {part.strip()!r}")
        toks = [t for t in body.split(",")]
        coeffs.append([parse_complex(t) for t in toks])
    return RationalFunction(coeffs[0], coeffs[1])


def format_rational(r: RationalFunction) -> str:
    p = ", ".join(format_complex(c) for c in (r.p.coeffs or (0j,)))
    q = ", ".join(format_complex(c) for c in (r.q.coeffs or (0j,)))
    return f"p: {p} ; q: {q}"
