"""Hypergeometric coefficient streams and the named series built from them.

The argument scale is always explicit: the t-series use 1728 t, the
z-series of the 2F1(1/6,5/6;1;.) family use 432 z, and the 3F2 family in
its raw variable uses scale 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BadLowerParameter
from .numeric import binomial
from .series import RationalPoly, TruncSeries, invert, mul, sqrt_one, theta_euler

F = Fraction


@dataclass(frozen=True)
class HypergeometricSpec:
    upper: tuple
    lower: tuple
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(F(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(F(b) for b in self.lower))
        object.__setattr__(self, "scale", F(self.scale))
        for b in self.lower:
            if b <= 0 and b.denominator == 1:
                raise BadLowerParameter(f"lower parameter {b}")


def pfq_coefficients(spec: HypergeometricSpec, n: int) -> list[Fraction]:
    """c_{k+1} = c_k * scale * prod(a_i + k) / (prod(b_j + k) (k + 1))."""
    out = []
    c = F(1)
    for k in range(n):
        out.append(c)
        num = spec.scale
        for a in spec.upper:
            num *= a + k
        den = F(k + 1)
        for b in spec.lower:
            den *= b + k
        c = c * num / den
    return out


def pfq(spec: HypergeometricSpec, n: int) -> TruncSeries:
    return TruncSeries(pfq_coefficients(spec, n))


def hyp(upper, lower, scale, n) -> TruncSeries:
    return pfq(HypergeometricSpec(tuple(upper), tuple(lower), scale), n)


# --- u_r, U, V -------------------------------------------------------------


def u_term(r: int) -> int:
    """(6r)! / ((3r)! r!^3) = C(2r,r) C(3r,r) C(6r,3r)."""
    return binomial(2 * r, r) * binomial(3 * r, r) * binomial(6 * r, 3 * r)


@lru_cache(maxsize=None)
def u_sequence(n: int) -> tuple:
    return tuple(u_term(r) for r in range(n))


def U_series(n: int) -> TruncSeries:
    return TruncSeries._raw(u_sequence(n))


def V_series(n: int) -> TruncSeries:
    return TruncSeries._raw([(6 * r + 1) * u for r, u in enumerate(u_sequence(n))])


def F1(n: int) -> TruncSeries:
    """2F1(1/12, 5/12; 1; 1728 t)."""
    return hyp((F(1, 12), F(5, 12)), (1,), 1728, n)


def F2(n: int) -> TruncSeries:
    """2F1(-1/12, 7/12; 1; 1728 t)."""
    return hyp((F(-1, 12), F(7, 12)), (1,), 1728, n)


@lru_cache(maxsize=None)
def sqrt_disc(n: int) -> TruncSeries:
    """(1 - 1728 t)^(1/2)."""
    return sqrt_one(TruncSeries.from_poly([1, -1728], n))


def inv_sqrt_disc(n: int) -> TruncSeries:
    """(1 - 1728 t)^(-1/2) = sum C(2r, r) 432^r t^r."""
    return TruncSeries._raw([binomial(2 * r, r) * 432 ** r for r in range(n)])


@lru_cache(maxsize=None)
def p_series(k: int, n: int) -> TruncSeries:
    """P_k = F1 * 2F1((6k+1)/12, (6k+5)/12; k+1; 1728 t)."""
    return mul(F1(n), hyp((F(6 * k + 1, 12), F(6 * k + 5, 12)), (k + 1,), 1728, n))


@lru_cache(maxsize=None)
def q_series(k: int, n: int) -> TruncSeries:
    """Q_k = F1 * 2F1((6k-1)/12, (6k+7)/12; k+1; 1728 t)."""
    return mul(F1(n), hyp((F(6 * k - 1, 12), F(6 * k + 7, 12)), (k + 1,), 1728, n))


def r_series(k: int, n: int) -> TruncSeries:
    """3F2((4k+1)/6, (4k+3)/6, (4k+5)/6; k+1, k+1; 1728 t)."""
    return hyp((F(4 * k + 1, 6), F(4 * k + 3, 6), F(4 * k + 5, 6)), (k + 1, k + 1), 1728, n)


def s_series(k: int, n: int) -> TruncSeries:
    """3F2((4k+3)/6, (4k+5)/6, (4k+7)/6; k+1, k+1; 1728 t)."""
    return hyp((F(4 * k + 3, 6), F(4 * k + 5, 6), F(4 * k + 7, 6)), (k + 1, k + 1), 1728, n)


# --- the two F-variants used for congruences -------------------------------


def a_term(m: int) -> int:
    """C(3m, m) C(6m, 3m): coefficient of 2F1(1/6, 5/6; 1; 432 z)."""
    return binomial(3 * m, m) * binomial(6 * m, 3 * m)


@lru_cache(maxsize=None)
def b_terms(n: int) -> tuple:
    """(1/6)_m (1/2)_m (5/6)_m / m!^3: coefficients of 3F2(1/6,1/2,5/6;1,1;x)."""
    return tuple(pfq_coefficients(HypergeometricSpec((F(1, 6), F(1, 2), F(5, 6)), (1, 1), 1), n))


def f6_series(n: int, variant: str = "B") -> TruncSeries:
    if variant == "B":
        return TruncSeries._raw(b_terms(n))
    if variant == "A":
        return TruncSeries._raw([a_term(m) for m in range(n)])
    raise ValueError("variant must be 'A' or 'B'")


def f6_truncation(p: int, s: int, n: int, variant: str = "B") -> tuple[TruncSeries, RationalPoly]:
    """The series F to order n and its truncation F_s = sum_{m < p^s} c_m x^m."""
    deg = p ** s
    cs = f6_series(max(n, deg), variant)
    return cs.truncate(n), RationalPoly(cs.coeffs[:deg])


# --- z parameter -------------------------------------------------------------


def catalan(m: int) -> int:
    return binomial(2 * m, m) // (m + 1)


def z_of_t(n: int) -> TruncSeries:
    """z/432 = (1 - (1 - 1728 t)^(1/2)) / 864 as a series in t."""
    s = sqrt_disc(n)
    return (1 - s).scale(F(1, 864))


def z_of_q(n: int) -> TruncSeries:
    """z/432 = (1 - E4^(-3/2) E6) / 864 as a series in q."""
    from .qforms import E4, E6

    e4h = sqrt_one(E4(n).series)
    inv = invert(e4h * e4h * e4h)
    return (1 - inv * E6(n).series).scale(F(1, 864))


def euler_theta_shift(f: TruncSeries, c) -> TruncSeries:
    """(1 + c Theta) f."""
    return f + theta_euler(f).scale(c)
