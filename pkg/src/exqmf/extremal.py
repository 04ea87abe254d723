"""Normalized extremal quasimodular forms and the data attached to them.

Three independent constructions of the depth-1 forms are provided
(differential recursion, hypergeometric closed form in t = 1/j, and linear
elimination over the monomial basis), together with Atkin-like polynomials
from Hermite-Pade approximation, normalizing factors, integrality scans and
the t-series identities used in the integrality proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import (
    EmptySpace,
    ExtractionFailed,
    Inconsistent,
    NonIntegralExponent,
    NonUnique,
    OddWeight,
    SingularSystem,
    Underdetermined,
    WeightFour,
)
from .hypergeom import (
    F1,
    F2,
    U_series,
    V_series,
    hyp,
    inv_sqrt_disc,
    p_series,
    q_series,
    r_series,
    s_series,
    sqrt_disc,
)
from .numeric import binomial, divisors, factor_smooth, mobius
from .qforms import (
    E4,
    E6,
    QExpansion,
    QMMonomial,
    delta,
    dim_quasimodular,
    k_up,
    monomial,
    qm_monomial_basis,
    serre_derivative,
    t_to_q,
)
from .series import (
    RationalPoly,
    TruncSeries,
    mul,
    power,
    rank_and_solve,
    reciprocal_poly,
    solve_exact_linear,
)

Fr = Fraction


@dataclass(frozen=True)
class ExtremalRecord:
    w: int
    r: int
    q_expansion: QExpansion
    vanishing_order: int
    t_expansion: TruncSeries | None = None
    method: str = ""
    # monomial -> coefficient, filled by the generic construction
    coefficients: dict = field(default_factory=dict, compare=False)

    @property
    def series(self) -> TruncSeries:
        return self.q_expansion.series


def _check_depth1_weight(w: int):
    if w % 2:
        raise OddWeight(w)
    if w == 4:
        raise WeightFour("there is no quasimodular form of weight 4 and depth 1")
    if w < 2:
        raise ValueError("weight must be at least 2")


def _check_normalized(s: TruncSeries, nu: int, what: str):
    if s.trunc > nu and (any(s.coeffs[:nu]) or s.coeffs[nu] != 1):
        raise AssertionError(f"{what} is not q^{nu}(1 + O(q))")


# --- depth 1: differential recursion ---------------------------------------


def extremal_depth1_recursive(w: int, n: int) -> ExtremalRecord:
    """G_w^(1) from G_0 = 1 by K^up steps (+6), a Serre step (+2) or E4 (+4)."""
    _check_depth1_weight(w)
    k, b = divmod(w, 6)
    g = QExpansion(TruncSeries.one(n), 0, 0)
    for i in range(k):
        v = 6 * i
        g = k_up(g, v) * Fr(v + 6, 72 * (v + 1) * (v + 5))
    if b == 2:
        g = serre_derivative(g, 6 * k - 1) * Fr(12, 6 * k + 1)
    elif b == 4:
        g = E4(n) * g
    nu = dim_quasimodular(w, 1) - 1
    g = QExpansion(g.series, w, 1)
    _check_normalized(g.series, nu, f"recursive G_{w}")
    return ExtremalRecord(w, 1, g, nu, method="recursive")


# --- depth 1: hypergeometric closed form -----------------------------------


def depth1_t_series(w: int, n: int) -> TruncSeries:
    """G_w^(1) as a series in t = 1/j."""
    _check_depth1_weight(w)
    k, b = divmod(w, 6)
    f1 = F1(n)
    if b == 0:
        s = power(f1, 2 * (3 * k - 1)) * p_series(k, n)
    elif b == 2:
        s = power(f1, 6 * k) * q_series(k, n)
    else:
        s = power(f1, 2 * (3 * k - 1) + 4) * p_series(k, n)
    return s.shift(k)


def extremal_depth1_hypergeometric(w: int, n: int) -> ExtremalRecord:
    ts = depth1_t_series(w, n)
    qs = t_to_q(ts)
    nu = dim_quasimodular(w, 1) - 1
    _check_normalized(qs, nu, f"hypergeometric G_{w}")
    return ExtremalRecord(w, 1, QExpansion(qs, w, 1), nu, t_expansion=ts, method="hypergeometric")


# --- any depth: linear elimination -----------------------------------------


def extremal_generic(w: int, r: int, n: int) -> ExtremalRecord:
    """Unique normalized element of QM_w^(r) of vanishing order dim - 1."""
    if w % 2:
        raise OddWeight(w)
    basis = qm_monomial_basis(w, r)
    m = len(basis)
    if m == 0:
        raise EmptySpace(f"QM_{w}^({r}) is zero")
    work = max(n, m)
    series = [monomial(b, work).series for b in basis]
    # columns are basis elements, rows are q-coefficients 0..m-1
    system = [[s[k] for s in series] for k in range(m)]
    rhs = [0] * (m - 1) + [1]
    rank, sol, kernel = rank_and_solve(system, rhs)
    if sol is None:
        raise EmptySpace(f"no form of vanishing order exactly {m - 1} in QM_{w}^({r})")
    if kernel:
        raise NonUnique(f"kernel of dimension {len(kernel)} at weight {w}, depth {r}")
    if not any(c for b, c in zip(basis, sol) if b.l == r):
        raise EmptySpace(f"extremal element of QM_{w}^({r}) has depth < {r}")
    total = TruncSeries.zero(work)
    for s, c in zip(series, sol):
        if c:
            total = total + s.scale(c)
    coeffs = {b: c for b, c in zip(basis, sol) if c}
    return ExtremalRecord(w, r, QExpansion(total.truncate(max(n, 1) if n else work), w, r), m - 1,
                          method="generic", coefficients=coeffs)


def extremal(w: int, r: int, n: int) -> ExtremalRecord:
    """Preferred construction: recursion for depth 1, elimination otherwise."""
    if r == 1:
        return extremal_depth1_recursive(w, n)
    return extremal_generic(w, r, n)


# --- normalizing factors and Atkin-like polynomials ------------------------


def normalizing_factor(m: int, a: int) -> int:
    """N_{m,a}; N_{0,0} = N_{0,2} = 1 by convention."""
    if a in (0, 2):
        if m == 0:
            return 1
        n0 = 24 * m * binomial(6 * m, 2 * m) * binomial(12 * m, 6 * m)
        if a == 0:
            return n0
        val = Fr(12 * m + 1, 12 * m - 1) * n0
    elif a in (6, 8):
        n6 = 12 * (2 * m + 1) * binomial(6 * m + 3, 2 * m + 1) * binomial(12 * m + 6, 6 * m + 3)
        if a == 6:
            return n6
        val = Fr(12 * m + 7, 12 * m + 5) * n6
    else:
        raise ValueError("a must be one of 0, 2, 6, 8")
    if val.denominator != 1:
        raise AssertionError(f"N_{{{m},{a}}} is not an integer")
    return int(val)


def scaling_factor(m: int, a: int) -> Fraction:
    """The divisor of N_{m,a} in the scaled integral forms: 24m or 12(2m+1), with m=0 reduced."""
    if a == 0:
        return Fr(binomial(6 * m, 2 * m) * binomial(12 * m, 6 * m))
    if a == 2:
        return Fr(12 * m + 1, 12 * m - 1) * binomial(6 * m, 2 * m) * binomial(12 * m, 6 * m)
    if a == 6:
        return Fr(binomial(6 * m + 3, 2 * m + 1) * binomial(12 * m + 6, 6 * m + 3))
    if a == 8:
        return Fr(12 * m + 7, 12 * m + 5) * binomial(6 * m + 3, 2 * m + 1) * binomial(12 * m + 6, 6 * m + 3)
    raise ValueError("a must be one of 0, 2, 6, 8")


def weight_to_family(w: int) -> tuple[int, int]:
    m, a = divmod(w, 12)
    if a not in (0, 2, 6, 8):
        raise ValueError(f"weight {w} is not of the form 12m + a with a in (0, 2, 6, 8)")
    return m, a


@dataclass(frozen=True)
class FamilyShape:
    deg_a: int
    deg_b: int
    order: int
    sign: int          # R = sign * (A~ L V - B~ U)
    disc: bool         # L = 1 - 1728 t when True, else 1


def family_shape(m: int, a: int) -> FamilyShape:
    if a == 0:
        if m < 1:
            raise ValueError("family a=0 needs m >= 1")
        return FamilyShape(m - 1, m, 2 * m, -1, True)
    if a == 2:
        return FamilyShape(m, m - 1, 2 * m, 1, False)
    if a == 6:
        return FamilyShape(m, m, 2 * m + 1, 1, False)
    if a == 8:
        return FamilyShape(m, m, 2 * m + 1, -1, True)
    raise ValueError("a must be one of 0, 2, 6, 8")


@dataclass(frozen=True)
class AtkinData:
    m: int
    a: int
    A: RationalPoly
    B: RationalPoly
    N: int
    C: int
    N_padé: Fraction

    @property
    def weight(self):
        return 12 * self.m + self.a

    @property
    def shape(self):
        return family_shape(self.m, self.a)


def _lv_series(shape: FamilyShape, n: int) -> TruncSeries:
    v = V_series(n)
    if shape.disc:
        v = v - v.shift(1).scale(1728)
    return v


def hermite_pade_remainder(A: RationalPoly, B: RationalPoly, m: int, a: int, n: int) -> TruncSeries:
    """sign * (A~ L V - B~ U) to order n, with reciprocals taken at the family degrees."""
    sh = family_shape(m, a)
    at = reciprocal_poly(A, sh.deg_a) if sh.deg_a >= 0 else RationalPoly()
    bt = reciprocal_poly(B, sh.deg_b) if sh.deg_b >= 0 else RationalPoly()
    r = mul(at.to_series(n), _lv_series(sh, n)) - mul(bt.to_series(n), U_series(n))
    return r.scale(sh.sign)


@lru_cache(maxsize=None)
def atkin_like(m: int, a: int) -> AtkinData:
    """Solve the Hermite-Pade system for monic A and B."""
    sh = family_shape(m, a)
    order = sh.order
    n = order + 1
    lv = _lv_series(sh, n)
    u = U_series(n)
    # unknowns: alpha_1..alpha_degA (alpha_0 = 1), beta_0..beta_degB
    na = max(sh.deg_a, 0)
    nb = sh.deg_b + 1
    system, rhs = [], []
    for k in range(order):
        row = [lv[k - i] if k >= i else 0 for i in range(1, na + 1)]
        row += [-u[k - i] if k >= i else 0 for i in range(nb)]
        system.append(row)
        rhs.append(-lv[k] if sh.deg_a >= 0 else 0)
    if system and system[0]:
        try:
            sol = solve_exact_linear(system, rhs)
        except (Inconsistent, Underdetermined) as exc:
            raise SingularSystem(f"Hermite-Pade system for (m,a)=({m},{a}): {exc}") from exc
    else:
        sol = []
    alpha = [Fr(1)] + list(sol[:na]) if sh.deg_a >= 0 else []
    beta = list(sol[na:])
    A = RationalPoly(alpha[::-1])
    B = RationalPoly(beta[::-1])
    rem = hermite_pade_remainder(A, B, m, a, n)
    if any(rem.coeffs[:order]):
        raise SingularSystem("remainder does not vanish to the required order")
    n_pade = rem[order]
    C = RationalPoly(list(A.coeffs) + list(B.coeffs)).denominator_lcm()
    return AtkinData(m, a, A, B, normalizing_factor(m, a), C, n_pade)


def pade_target(m: int, a: int, n: int) -> TruncSeries:
    """The hypergeometric series multiplying N t^order in the Hermite-Pade identity."""
    if a == 0:
        s = p_series(2 * m, n)
    elif a == 2:
        s = mul(inv_sqrt_disc(n), q_series(2 * m, n))
    elif a == 6:
        s = mul(inv_sqrt_disc(n), p_series(2 * m + 1, n))
    else:
        s = q_series(2 * m + 1, n)
    return s


def atkin_from_generic(m: int, a: int, n: int | None = None) -> tuple[RationalPoly, Fraction]:
    """Atkin polynomial A_{m,a} read off from the E2-part of G_{12m+a} (cross-check)."""
    g = generalized_atkin(12 * m + a, 1)
    return g.poly, g.N


# --- generalized Atkin polynomials -----------------------------------------


@dataclass(frozen=True)
class GenAtkinData:
    w: int
    r: int
    u: int
    s: int
    t: int
    poly: RationalPoly
    N: Fraction


_REST_SHAPE = {0: (0, 0), 2: (2, 1), 4: (1, 0), 6: (0, 1), 8: (2, 0), 10: (1, 1)}


def split_weight(k: int) -> tuple[int, int, int]:
    """k = 12u + 4s + 6t with s in {0,1,2}, t in {0,1}; returns (u, s, t)."""
    s, t = _REST_SHAPE[k % 12]
    u = (k - 4 * s - 6 * t) // 12
    if u < 0:
        raise ValueError(f"{k} is not a valid modular weight")
    return u, s, t


def generalized_atkin(w: int, r: int) -> GenAtkinData:
    rec = extremal_generic(w, r, dim_quasimodular(w, r))
    u, s, t = split_weight(w - 2 * r)
    X = RationalPoly([0, 1])
    Xm = RationalPoly([-1728, 1])
    total = RationalPoly()
    for mono, c in rec.coefficients.items():
        if mono.l != r:
            continue
        k = (mono.n - t) // 2
        term = RationalPoly([c])
        for _ in range(u - k):
            term = term * X
        for _ in range(k):
            term = term * Xm
        total = total + term
    if total.degree != u:
        raise ExtractionFailed(f"top E2 part has degree {total.degree}, expected {u}")
    lead = total.leading()
    return GenAtkinData(w, r, u, s, t, total.monic(), 1 / lead)


def poly_mod(poly: RationalPoly, p: int) -> list[int]:
    from .numeric import reduce_int

    return [reduce_int(c, p) for c in poly.coeffs]


def conjecture_weights(p: int) -> int:
    """u = m + delta + eps for p - 1 = 12m + 4 delta + 6 eps."""
    m, rest = divmod(p - 1, 12)
    delta, eps = {0: (0, 0), 4: (1, 0), 6: (0, 1), 10: (1, 1)}[rest]
    return m + delta + eps


def atkin_conjecture_check(p: int, r_max: int = 6) -> dict:
    """Compare A^(1)_{u,2} with A^(r)_{u,2r} modulo p for r = 2..r_max."""
    u = conjecture_weights(p)
    base = generalized_atkin(12 * u + 2, 1).poly
    ref = poly_mod(base, p)
    out = {}
    for r in range(2, r_max + 1):
        try:
            g = generalized_atkin(12 * u + 2 * r, r)
            out[r] = poly_mod(g.poly, p) == ref
        except Exception as exc:  # report, do not guess
            out[r] = f"unavailable: {type(exc).__name__}"
    return {"p": p, "u": u, "A1_mod_p": ref, "agrees": out}


# --- integrality ----------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    w: int
    exists: bool
    integral: bool
    first_bad_index: int | None
    primes: tuple
    note: str = ""
    evidence: str = "first-N-coefficients"


def _denominator_primes(s: TruncSeries) -> tuple:
    ps = set()
    for c in s.coeffs:
        d = Fr(c).denominator
        if d != 1:
            for p, _ in factor_smooth(d, d):
                ps.add(p)
    return tuple(sorted(ps))


def scan_weight(w: int, r: int, n: int) -> ScanRow:
    try:
        rec = extremal(w, r, n)
    except (WeightFour, EmptySpace, NonUnique) as exc:
        return ScanRow(w, False, False, None, (), note=f"{type(exc).__name__}: {exc}")
    s = rec.series
    bad = next((i for i, c in enumerate(s.coeffs) if Fr(c).denominator != 1), None)
    return ScanRow(w, True, bad is None, bad, _denominator_primes(s))


def integrality_scan(w_max: int, r: int, n: int, w_min: int = 2) -> list[ScanRow]:
    return [scan_weight(w, r, n) for w in range(max(w_min, 2), w_max + 1, 2)]


def integral_weights(rows) -> list[int]:
    return [row.w for row in rows if row.exists and row.integral]


# --- integral binomial series -------------------------------------------


def scaled_coefficient(m: int, a: int, k: int) -> Fraction:
    if a in (0, 2):
        c = Fr(binomial(2 * m + k, k) * binomial(6 * m + 3 * k, 2 * m + k) * binomial(12 * m + 6 * k, 6 * m + 3 * k))
        if a == 2:
            c *= Fr(12 * m + 6 * k + 1, 12 * m + 6 * k - 1)
        return c
    if a in (6, 8):
        c = Fr(binomial(2 * m + k + 1, k) * binomial(6 * m + 3 * k + 3, 2 * m + k + 1)
               * binomial(12 * m + 6 * k + 6, 6 * m + 3 * k + 3))
        if a == 8:
            c *= Fr(12 * m + 6 * k + 7, 12 * m + 6 * k + 5)
        return c
    raise ValueError("a must be one of 0, 2, 6, 8")


def scaled_series(m: int, a: int, n: int) -> TruncSeries:
    """Coefficients in powers of z/432 of (N_{m,a}/factor) * 2F1(...; 1728 t)."""
    return TruncSeries([scaled_coefficient(m, a, k) for k in range(n)])


def scaled_hypergeometric(m: int, a: int, n: int) -> TruncSeries:
    """(N_{m,a}/factor) * 2F1(...; 1728 t) directly in t."""
    params = {
        0: ((Fr(12 * m + 1, 12), Fr(12 * m + 5, 12)), 2 * m + 1),
        2: ((Fr(12 * m - 1, 12), Fr(12 * m + 7, 12)), 2 * m + 1),
        6: ((Fr(12 * m + 7, 12), Fr(12 * m + 11, 12)), 2 * m + 2),
        8: ((Fr(12 * m + 5, 12), Fr(12 * m + 13, 12)), 2 * m + 2),
    }[a]
    return hyp(params[0], (params[1],), 1728, n).scale(scaling_factor(m, a))


# --- three-term recursions -------------------------------------------------


def _lambda(n: int, sign: int) -> Fraction:
    """lambda_n^-(sign=-1) or lambda_n^+(sign=+1)."""
    if n == 1:
        return Fr(84) if sign < 0 else Fr(-60)
    e = (-1) ** n
    return 12 * (6 + sign * Fr(e, n - 1)) * (6 + sign * Fr(e, n))


def phi_psi(n: int, N: int) -> tuple[TruncSeries, TruncSeries]:
    f1 = F1(N)
    phi = [mul(f1, f1), mul(f1, hyp((Fr(5, 12), Fr(13, 12)), (2,), 1728, N)).shift(1).scale(84)]
    psi = [mul(f1, F2(N)), mul(f1, hyp((Fr(7, 12), Fr(11, 12)), (2,), 1728, N)).shift(1).scale(-60)]
    t = TruncSeries.variable(N)
    for k in range(1, n):
        phi.append(phi[k] - mul(t, phi[k - 1]).scale(_lambda(k, -1)))
        psi.append(psi[k] - mul(t, psi[k - 1]).scale(_lambda(k, 1)))
    return phi[n], psi[n]


def phi_psi_expected(n: int, N: int) -> tuple[TruncSeries, TruncSeries]:
    """Right-hand sides of the correspondence with P_n, Q_n and N_{m,a} (n >= 1)."""
    m, odd = divmod(n, 2)
    if not odd:
        phi = p_series(n, N).shift(n).scale(Fr(normalizing_factor(m, 0), 12))
        psi = q_series(n, N).shift(n).scale(-Fr(normalizing_factor(m, 2), 12))
    else:
        phi = q_series(n, N).shift(n).scale(Fr(normalizing_factor(m, 8), 12))
        psi = p_series(n, N).shift(n).scale(-Fr(normalizing_factor(m, 6), 12))
    return phi, psi


# --- Atkin inner product moments -------------------------------------------


def atkin_moments(n: int) -> list[Fraction]:
    """(j^m, 1) for m < n from 2F1(13/12, 5/12; 1; 1728t) / F1."""
    num = hyp((Fr(13, 12), Fr(5, 12)), (1,), 1728, n)
    return list((num / F1(n)).coeffs)


def c_exponents(n: int) -> list[int]:
    """c(1..n) with 12 sum_{d|m} d c(d) = (j^m, 1)."""
    mom = atkin_moments(n + 1)
    out = []
    for k in range(1, n + 1):
        s = sum(mobius(k // d) * mom[d] for d in divisors(k))
        c = Fr(s) / (12 * k)
        if c.denominator != 1:
            raise NonIntegralExponent(f"c({k}) = {c}")
        out.append(int(c))
    return out


# --- depth 2 ----------------------------------------------------------------


def depth2_t_series(w: int, n: int) -> TruncSeries:
    if w % 2 or w < 2:
        raise OddWeight(w)
    k, b = divmod(w, 4)
    u = U_series(n)
    if b == 0:
        s = mul(power(u, 2 * k - 1), r_series(k, n))
    else:
        s = mul(mul(power(u, 2 * k), sqrt_disc(n)), s_series(k, n))
    return s.shift(k)


def depth2_hypergeometric(w: int, n: int) -> ExtremalRecord:
    ts = depth2_t_series(w, n)
    qs = t_to_q(ts)
    nu = qs.valuation() or 0
    return ExtremalRecord(w, 2, QExpansion(qs, w, 2), nu, t_expansion=ts, method="hypergeometric")


# --- sixth order equation for weight 10, depth 5 ---------------------------


def mlde_g10_depth5(f: QExpansion) -> TruncSeries:
    """Left side of the sixth-order modular differential equation at weight 10, depth 5."""
    n = f.trunc
    e4, e6 = E4(n).series, E6(n).series
    e4_2, e4_3, e6_2 = e4 * e4, e4 * e4 * e4, e6 * e6
    d = [f.series]
    g = f
    for i in range(6):
        g = serre_derivative(g, 5 + 2 * i)
        d.append(g.series)
    terms = [
        (e4_3 - e6_2.scale(Fr(731087, 4380623))) * d[6],
        (e4_2 * e6).scale(Fr(3649536, 4380623)) * d[5],
        -(e4 * (e4_3.scale(845736619) - e6_2.scale(170572459))).scale(Fr(5, 630809712)) * d[4],
        -(e6 * (e4_3.scale(2032753837) - e6_2.scale(164191405))).scale(Fr(5, 946214568)) * d[3],
        (e4_2 * (e4_3.scale(262935868013) - e6_2.scale(746094289517))).scale(Fr(1, 90836598528)) * d[2],
        (e4 * e6 * (e4_3.scale(80592093937) - e6_2.scale(122767956721))).scale(Fr(1, 45418299264)) * d[1],
        ((e4_3 * e4_3).scale(3672965829) - (e4_3 * e6_2).scale(7414522789) - (e6_2 * e6_2).scale(5174923040))
        .scale(Fr(55, 13080470188032)) * d[0],
    ]
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total


# --- depth 1 bases ----------------------------------------------------------


def _canon(e: int, g: int) -> tuple[int, int]:
    # G_{6n+4} = E4 G_{6n}
    if g % 6 == 4:
        return e + 1, g - 4
    return e, g


def depth1_basis_labels(k: int) -> list[tuple[int, int]]:
    """(E4 exponent, G weight) pairs spanning QM_k^(1); G_0 = 1."""
    if k % 2 or k < 0:
        raise OddWeight(k)
    m, b = divmod(k, 12)
    if b == 0:
        out = [(3 * (m - l), 12 * l) for l in range(m + 1)]
        out += [(3 * (m - l) - 2, 12 * l + 8) for l in range(m)]
    elif b == 2:
        out = [(3 * (m - l), 12 * l + 2) for l in range(m + 1)]
        out += [(3 * (m - l) - 2, 12 * l + 10) for l in range(m)]
    elif b == 4:
        out = [(e + 1, g) for e, g in depth1_basis_labels(12 * m)]
    elif b == 6:
        out = [(e + 1, g) for e, g in depth1_basis_labels(12 * m + 2)] + [(0, 12 * m + 6)]
    elif b == 8:
        out = [(e + 2, g) for e, g in depth1_basis_labels(12 * m)] + [(0, 12 * m + 8)]
    else:
        out = [(e + 1, g) for e, g in depth1_basis_labels(12 * m + 6)]
    return [_canon(e, g) for e, g in out]


def _g_or_one(g: int, n: int) -> TruncSeries:
    return TruncSeries.one(n) if g == 0 else extremal_depth1_recursive(g, n).series


def depth1_basis(k: int, n: int | None = None) -> list[tuple[str, TruncSeries]]:
    """Basis of QM_k^(1) sorted by leading exponent 0, 1, ..., m-1."""
    m = dim_quasimodular(k, 1)
    n = max(n or 0, m + 1)
    out = []
    for e, g in depth1_basis_labels(k):
        s = power(E4(n).series, e) * _g_or_one(g, n)
        label = (f"E4^{e}*" if e > 1 else ("E4*" if e == 1 else "")) + (f"G{g}" if g else "1")
        if label.endswith("*1"):
            label = label[:-2]
        out.append((label, s))
    out.sort(key=lambda item: item[1].valuation())
    leads = [s.valuation() for _, s in out]
    if leads != list(range(m)):
        raise AssertionError(f"leading exponents {leads} are not 0..{m - 1}")
    return out


def basis_change_matrix(k: int, forms: list[TruncSeries]) -> list[list[Fraction]]:
    """Rows express each form in the depth-1 basis."""
    basis = depth1_basis(k, max(f.trunc for f in forms))
    m = len(basis)
    system = [[b[i] for _, b in basis] for i in range(m)]
    rows = []
    for f in forms:
        rows.append(solve_exact_linear(system, [f[i] for i in range(m)]))
    return rows


# --- closed forms used as cross-checks --------------------------------------


def g12_closed_form(n: int) -> TruncSeries:
    e2, e4, e6 = (monomial(QMMonomial(1, 0, 0), n).series, E4(n).series, E6(n).series)
    d = delta(n).series
    return (power(e4, 3) - d.scale(1008) - e2 * e4 * e6).scale(Fr(1, 332640))


def g14_closed_form(n: int) -> TruncSeries:
    e2, e4, e6 = (monomial(QMMonomial(1, 0, 0), n).series, E4(n).series, E6(n).series)
    d = delta(n).series
    return (e2 * (power(e4, 3) - d.scale(720)) - e4 * e4 * e6).scale(Fr(1, 393120))


def g26_closed_form(n: int) -> TruncSeries:
    e2, e4, e6 = (monomial(QMMonomial(1, 0, 0), n).series, E4(n).series, E6(n).series)
    d = delta(n).series
    e43 = power(e4, 3)
    top = e2 * (e43 * e43 - (e43 * d).scale(1640) + (d * d).scale(269280))
    return (top - e4 * e4 * e6 * (e43 - d.scale(920))).scale(Fr(1, 69837768000))


def denominator_primes_below_weight(w: int, n: int) -> bool:
    """Every denominator prime of G_w^(1) (first n coefficients) is < w."""
    primes = _denominator_primes(extremal_depth1_recursive(w, n).series)
    return all(p < w for p in primes)


__all__ = [name for name in dir() if not name.startswith("_")]
