"""Moebius transformations and co-conjugation of rational functions.

The co-conjugate of r under T is R = conj(T) o r o T^-1, where conj(T) is T
with all four coefficients conjugated.  R has the same degree as r, and
w = T(z) maps the solutions of r(z) = conj(z) onto those of R(w) = conj(w)
with equal derivative modulus.
"""

from __future__ import annotations

from .errors import DegenerateResult, DomainError, PoleEvaluation, SingularPoint
from .poly import ComplexPolynomial
from .rational import INFINITY, RationalFunction


class MobiusTransform:
    """T(z) = (a z + b) / (c z + d) with ad - bc != 0."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        scale = max(abs(a), abs(b), abs(c), abs(d))
        if scale == 0.0 or abs(a * d - b * c) <= 1e-13 * scale * scale:
            raise DomainError("degenerate transform: ad - bc vanishes")
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(1, 0, 0, 1)

    @classmethod
    def reciprocal(cls) -> "MobiusTransform":
        """w = 1/z."""
        return cls(0, 1, 1, 0)

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def apply(self, z):
        """Evaluate with Riemann-sphere conventions: T(inf) = a/c, T(-d/c) = inf."""
        if z is INFINITY:
            return self.a / self.c if self.c != 0 else INFINITY
        z = complex(z)
        den = self.c * z + self.d
        if den == 0:
            return INFINITY
        return (self.a * z + self.b) / den

    __call__ = apply

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.d, -self.b, -self.c, self.a)

    def conjugate_coeffs(self) -> "MobiusTransform":
        return MobiusTransform(self.a.conjugate(), self.b.conjugate(),
                               self.c.conjugate(), self.d.conjugate())

    def compose(self, other: "MobiusTransform") -> "MobiusTransform":
        """self(other(z)) via the 2x2 matrix product."""
        return MobiusTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def derivative_at(self, z: complex) -> complex:
        den = self.c * complex(z) + self.d
        if den == 0:
            raise SingularPoint("T'(z) is unbounded where T(z) = infinity")
        return self.determinant / (den * den)

    def __repr__(self) -> str:
        return f"MobiusTransform({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def co_conjugate(r: RationalFunction, transform: MobiusTransform) -> RationalFunction:
    """conj(T) o r o T^-1 through the explicit coefficient expansion.

    With p and q zero-padded to the degree n of r, the numerator of the
    result is sum_k (conj(a) p_k + conj(b) q_k) (dw - b)^k (a - cw)^(n-k)
    and the denominator is the same sum with conj(c), conj(d) in front.
    The reduced result must again have degree n.
    """
    n = r.degree
    if n < 1:
        raise DomainError("co-conjugation requires degree >= 1")
    t = transform
    pk = [r.p.coeff(k) for k in range(n + 1)]
    qk = [r.q.coeff(k) for k in range(n + 1)]
    first = ComplexPolynomial((-t.b, t.d))   # d*w - b
    second = ComplexPolynomial((t.a, -t.c))  # a - c*w
    first_pow = [ComplexPolynomial.one()]
    second_pow = [ComplexPolynomial.one()]
    for _ in range(n):
        first_pow.append(first_pow[-1] * first)
        second_pow.append(second_pow[-1] * second)
    ca, cb = t.a.conjugate(), t.b.conjugate()
    cc, cd = t.c.conjugate(), t.d.conjugate()
    num = ComplexPolynomial.zero()
    den = ComplexPolynomial.zero()
    for k in range(n + 1):
        base = first_pow[k] * second_pow[n - k]
        coeff_num = ca * pk[k] + cb * qk[k]
        coeff_den = cc * pk[k] + cd * qk[k]
        if coeff_num != 0:
            num = num + coeff_num * base
        if coeff_den != 0:
            den = den + coeff_den * base
    if den.is_zero:
        raise DegenerateResult("co-conjugate denominator vanished identically")
    out = RationalFunction(num, den)
    if out.degree != n:
        raise DegenerateResult(
            f"co-conjugate degree collapsed to {out.degree}; input was not coprime")
    return out


def derivative_at_image(r: RationalFunction, transform: MobiusTransform,
                        z: complex) -> complex:
    """R'(T(z)) for the co-conjugate R, from the chain-rule identity
    R'(w) = conj(T'(z))/T'(z) * r'(z); the modulus equals |r'(z)| exactly."""
    z = complex(z)
    tp = transform.derivative_at(z)  # raises SingularPoint where T(z) = inf
    rp = r.derivative().eval(z)
    if rp is INFINITY:
        raise PoleEvaluation(f"{z} is a pole of the rational function")
    return (tp.conjugate() / tp) * rp
