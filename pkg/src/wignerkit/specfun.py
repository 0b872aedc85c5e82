"""Terminating Gauss hypergeometric series and the classical polynomial
families built on them: Jacobi, Krawtchouk, Legendre.

Every series term is generated as an exact rational (Pochhammer ratios over
exact factorials) and converted to floating point as late as possible.  The
terminating sums alternate in sign, and naive floating-point term generation
loses digits to cancellation long before the degrees used here get large.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactcomb import binomial, factorial, pochhammer

__all__ = [
    "JacobiParams",
    "Hyp21Spec",
    "hyp2f1_series_coeffs",
    "hyp2f1_terminating",
    "hyp2f1",
    "jacobi_series_coeffs",
    "jacobi_eval",
    "jacobi_via_2f1",
    "jacobi_rodrigues",
    "krawtchouk",
    "legendre",
    "jacobi_norm",
]


@dataclass(frozen=True)
class JacobiParams:
    """Degree and exponent parameters of P_n^(alpha, beta).

    alpha and beta are unrestricted reals; the polynomial is defined through
    its terminating series for any parameter values.  Orthogonality-dependent
    quantities (jacobi_norm) additionally need alpha, beta > -1.
    """

    alpha: float
    beta: float
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", operator.index(self.n))
        if self.n < 0:
            raise ValueError(f"negative polynomial degree n={self.n}")


@dataclass(frozen=True)
class Hyp21Spec:
    """A terminating 2F1(a, b; c; z) together with its termination length.

    `terms` is the index of the last nonzero-by-construction term: the series
    is summed for k = 0 .. terms.
    """

    a: float
    b: float
    c: float
    z: float
    terms: int

    def __post_init__(self):
        object.__setattr__(self, "terms", operator.index(self.terms))
        if self.terms < 0:
            raise ValueError(f"negative termination length {self.terms}")
        if _nonpositive_int(self.a) is None and _nonpositive_int(self.b) is None:
            raise ValueError(
                f"2F1({self.a}, {self.b}; {self.c}; z) does not terminate: "
                "neither upper parameter is a nonpositive integer"
            )
        neg_c = _nonpositive_int(self.c)
        if neg_c is not None and neg_c < self.terms:
            raise ValueError(
                f"lower parameter c={self.c} vanishes inside the retained terms"
            )

    @classmethod
    def terminating(cls, a, b, c, z) -> "Hyp21Spec":
        """Build the spec, deriving the termination length from a and b."""
        candidates = [v for v in (_nonpositive_int(a), _nonpositive_int(b)) if v is not None]
        if not candidates:
            raise ValueError(
                f"2F1({a}, {b}; {c}; z) does not terminate: "
                "neither upper parameter is a nonpositive integer"
            )
        return cls(a, b, c, z, min(candidates))


def _nonpositive_int(value):
    # Returns N >= 0 such that value == -N, or None.
    f = Fraction(value)
    if f.denominator == 1 and f <= 0:
        return int(-f)
    return None


@lru_cache(maxsize=4096)
def hyp2f1_series_coeffs(a, b, c, nterms: int) -> tuple[Fraction, ...]:
    """Exact rational coefficients (a)_k (b)_k / ((c)_k k!) for k = 0 .. nterms."""
    fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
    coeffs = [Fraction(1)]
    for k in range(nterms):
        den = fc + k
        if den == 0:
            raise ValueError(
                f"lower parameter c={c} hits a nonpositive integer inside the "
                f"retained terms (term {k + 1})"
            )
        coeffs.append(coeffs[-1] * (fa + k) * (fb + k) / (den * (k + 1)))
    return tuple(coeffs)


def hyp2f1_terminating(spec: Hyp21Spec) -> float:
    """Sum the terminating series; terms exact, accumulation in floating point."""
    coeffs = hyp2f1_series_coeffs(spec.a, spec.b, spec.c, spec.terms)
    zf = Fraction(spec.z)
    total = 0.0
    power = Fraction(1)
    for ck in coeffs:
        total += float(ck * power)
        power *= zf
    return total


def hyp2f1(a, b, c, z) -> float:
    """Convenience wrapper: terminating 2F1 straight from the parameters."""
    return hyp2f1_terminating(Hyp21Spec.terminating(a, b, c, z))


@lru_cache(maxsize=4096)
def _jacobi_coeffs_cached(alpha, beta, n: int) -> tuple[Fraction, ...]:
    al, be = Fraction(alpha), Fraction(beta)
    return tuple(
        pochhammer(n + al + be + 1, k)
        * pochhammer(al + k + 1, n - k)
        / (factorial(k) * factorial(n - k))
        for k in range(n + 1)
    )


def jacobi_series_coeffs(p: JacobiParams) -> tuple[Fraction, ...]:
    """Exact coefficients c_k of P_n^(a,b)(x) = sum_k c_k ((x-1)/2)^k."""
    return _jacobi_coeffs_cached(p.alpha, p.beta, p.n)


def jacobi_eval(p: JacobiParams, x: float) -> float:
    """P_n^(alpha, beta)(x) by its terminating series, evaluated exactly."""
    h = (Fraction(x) - 1) / 2
    total = Fraction(0)
    power = Fraction(1)
    for ck in jacobi_series_coeffs(p):
        total += ck * power
        power *= h
    return float(total)


def jacobi_via_2f1(p: JacobiParams, x: float) -> float:
    """P_n^(alpha, beta)(x) through its 2F1 form.

    Evaluates (alpha+1)_n / n! * 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
    Fails when alpha+1 is a nonpositive integer reached inside the retained
    terms; jacobi_eval covers those parameters.
    """
    spec = Hyp21Spec.terminating(-p.n, p.n + p.alpha + p.beta + 1, p.alpha + 1, (1 - x) / 2)
    coeffs = hyp2f1_series_coeffs(spec.a, spec.b, spec.c, spec.terms)
    zf = Fraction(spec.z)
    total = Fraction(0)
    power = Fraction(1)
    for ck in coeffs:
        total += ck * power
        power *= zf
    prefactor = pochhammer(Fraction(p.alpha) + 1, p.n) / factorial(p.n)
    return float(prefactor * total)


def _binom_power_coeffs(sign: int, power: int) -> list[int]:
    # Integer coefficients of (1 + sign*x)^power, index = power of x.
    return [binomial(power, k) * sign**k for k in range(power + 1)]


def _poly_mul(u: list[int], v: list[int]) -> list[int]:
    out = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            out[i + j] += ui * vj
    return out


def _poly_derivative(coeffs: list[int], order: int) -> list[int]:
    if order >= len(coeffs):
        return [0]
    return [coeffs[k + order] * math.perm(k + order, order) for k in range(len(coeffs) - order)]


def _poly_divide_linear(coeffs: list[int], sign: int) -> list[int]:
    # Exact quotient of an integer polynomial by (1 + sign*x); the division
    # must leave no remainder (the dividend vanishes at x = -sign).
    if len(coeffs) == 1:
        if coeffs[0] != 0:
            raise ValueError("polynomial is not divisible by the linear factor")
        return [0]
    q = [0] * (len(coeffs) - 1)
    q[0] = coeffs[0]
    for k in range(1, len(q)):
        q[k] = coeffs[k] - sign * q[k - 1]
    if coeffs[-1] != sign * q[-1]:
        raise ValueError("polynomial is not divisible by the linear factor")
    return q


def jacobi_rodrigues(p: JacobiParams, x: float) -> float:
    """P_n^(alpha, beta)(x) through the Rodrigues-type derivative formula.

    Only defined for nonnegative integer alpha, beta.  The weight factors
    (1-x)^alpha (1+x)^beta are cancelled as exact polynomial divisions before
    anything is evaluated, so the formula stays valid at x = +-1 where a naive
    division by the weight would blow up.
    """
    al = _as_nonneg_int(p.alpha, "alpha")
    be = _as_nonneg_int(p.beta, "beta")
    n = p.n
    expanded = _poly_mul(_binom_power_coeffs(-1, n + al), _binom_power_coeffs(+1, n + be))
    deriv = _poly_derivative(expanded, n)
    for _ in range(al):
        deriv = _poly_divide_linear(deriv, -1)
    for _ in range(be):
        deriv = _poly_divide_linear(deriv, +1)
    xf = Fraction(x)
    value = Fraction(0)
    for ck in reversed(deriv):
        value = value * xf + ck
    prefactor = Fraction((-1) ** n, 2**n * factorial(n))
    return float(prefactor * value)


def _as_nonneg_int(value, name: str) -> int:
    f = Fraction(value)
    if f.denominator != 1 or f < 0:
        raise ValueError(f"Rodrigues route needs nonnegative integer {name}, got {value}")
    return int(f)


def krawtchouk(n: int, x: float, p: float, N: int) -> float:
    """Krawtchouk polynomial K_n(x; p, N) = 2F1(-n, -x; -N; 1/p).

    The series is terminated on the -n parameter (length n+1), which is the
    only choice valid for non-integer x; the -N lower parameter stays nonzero
    for all retained terms because n <= N.  The sum is accumulated exactly
    and rounded once: near p = 1 the value is exponentially smaller than the
    individual terms, and a floating-point accumulation would surrender most
    of its digits to that cancellation.
    """
    n = operator.index(n)
    N = operator.index(N)
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if not 0 <= n <= N:
        raise ValueError(f"need 0 <= n <= N, got n={n}, N={N}")
    if p == 0:
        raise ValueError("p = 0 makes the 2F1 argument infinite")
    coeffs = hyp2f1_series_coeffs(-n, -x, -N, n)
    zf = 1 / Fraction(p)
    total = Fraction(0)
    power = Fraction(1)
    for ck in coeffs:
        total += ck * power
        power *= zf
    return float(total)


def legendre(l: int, x: float) -> float:
    """Legendre polynomial P_l(x) = P_l^(0,0)(x)."""
    return jacobi_eval(JacobiParams(0, 0, l), x)


def jacobi_norm(p: JacobiParams) -> float:
    """Squared L2 norm h_n of P_n^(alpha, beta) under the weight (1-x)^a (1+x)^b.

    h_n = 2^(a+b+1) (n+a+b+1)_n Gamma(n+a+1) Gamma(n+b+1) / (n! Gamma(2n+a+b+2)),
    evaluated with exact factorials whenever alpha and beta are integers.
    """
    if p.alpha <= -1 or p.beta <= -1:
        raise ValueError(f"norm needs alpha, beta > -1, got ({p.alpha}, {p.beta})")
    al, be, n = Fraction(p.alpha), Fraction(p.beta), p.n
    if al.denominator == 1 and be.denominator == 1:
        ia, ib = int(al), int(be)
        h = (
            Fraction(2) ** (ia + ib + 1)
            * pochhammer(n + ia + ib + 1, n)
            * Fraction(factorial(n + ia) * factorial(n + ib))
            / Fraction(factorial(n) * factorial(2 * n + ia + ib + 1))
        )
        return float(h)
    poch = 1.0
    for i in range(n):
        poch *= float(al + be) + n + 1 + i
    log_gammas = (
        math.lgamma(n + float(al) + 1)
        + math.lgamma(n + float(be) + 1)
        - math.lgamma(n + 1)
        - math.lgamma(2 * n + float(al + be) + 2)
    )
    return 2.0 ** float(al + be + 1) * poch * math.exp(log_gammas)
