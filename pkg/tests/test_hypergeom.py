from fractions import Fraction as F
from math import factorial

import pytest

from exqmf.errors import BadLowerParameter
from exqmf.hypergeom import (
    F1,
    F2,
    HypergeometricSpec,
    U_series,
    V_series,
    a_term,
    catalan,
    euler_theta_shift,
    f6_truncation,
    hyp,
    inv_sqrt_disc,
    p_series,
    pfq,
    q_series,
    r_series,
    s_series,
    sqrt_disc,
    u_sequence,
    z_of_q,
    z_of_t,
)
from exqmf.numeric import PrimePowerModulus, binomial
from exqmf.qforms import E2, E4, E6, j_inverse, t_to_q
from exqmf.series import TruncSeries, compose, exp_series, log_series, mul, power, theta_euler

N = 30


def rpow(base, e):
    """base^e for a series with constant term 1 and rational e."""
    return exp_series(log_series(base).scale(e))


def test_pfq_examples():
    assert power(F1(3), 2).coeffs == (1, 120, 83160)
    assert pfq(HypergeometricSpec((F(1, 3), 2), (F(1, 2),), 0), 5) == TruncSeries.one(5)
    assert hyp((F(1, 2), F(5, 6), F(7, 6)), (1, 1), 1728, 3).coeffs == (1, 840, 1081080)


def test_bad_lower_parameter():
    with pytest.raises(BadLowerParameter):
        HypergeometricSpec((1,), (-2,))
    with pytest.raises(BadLowerParameter):
        HypergeometricSpec((1,), (0,))
    HypergeometricSpec((1,), (F(-1, 2),))


def test_u_and_v_sequences():
    assert u_sequence(3) == (1, 120, 83160)
    assert V_series(3).coeffs == (1, 840, 1081080)
    assert u_sequence(2)[1] % 8 == 0
    for r, u in enumerate(u_sequence(20)):
        assert u == factorial(6 * r) // (factorial(3 * r) * factorial(r) ** 3)
    assert mul(F1(N), F1(N)) == U_series(N)
    assert euler_theta_shift(U_series(N), 6) == V_series(N)


def test_p_and_q_examples():
    assert p_series(2, 3).coeffs == (1, 944, 1054170)
    assert q_series(1, 3).coeffs == (1, 450, 394680)
    assert p_series(0, N) == U_series(N)
    assert q_series(0, N) == mul(F1(N), F2(N))
    assert mul(inv_sqrt_disc(N), p_series(1, N))[1] == 1386


@pytest.mark.parametrize("n", range(0, 12))
def test_first_coefficients_of_p_and_q(n):
    p, q = p_series(n, 3), q_series(n, 3)
    assert p[1] == 60 + 432 * n + F(60, n + 1)
    assert p[2] == 65700 + 305856 * n + 93312 * n * n + F(31320, n + 1) - F(27720, n + 2)
    assert q[1] == 60 + 432 * n - F(84, n + 1)
    assert q[2] == 3492 + 305856 * n + 93312 * n * n - F(37800, n + 1) + F(32760, n + 2)


def test_r_series_examples():
    r1 = r_series(1, 20)
    for r in range(20):
        assert r1[r] == binomial(2 * r + 1, r) * binomial(3 * r + 1, r + 1) * binomial(6 * r + 1, 3 * r)
    assert r1[0] == 1 and r1[1] == 630
    r2 = r_series(2, 20)
    for r in range(20):
        assert r2[r] == F(binomial(2 * r + 2, r) * binomial(3 * r + 4, r + 2) * binomial(6 * r + 7, 3 * r + 3), 210)
    assert r2[0] == 1
    assert r2.is_integral()
    assert s_series(0, 10) == V_series(10)


def test_f6_truncation_examples():
    m = PrimePowerModulus(5, 2)
    _, f2 = f6_truncation(5, 2, 30)
    red = [int(c.numerator * pow(c.denominator, -1, 25)) % 25 for c in f2.coeffs]
    expected = [0] * 25
    for i in (0, 1, 2, 5, 10):
        expected[i] = 1 if i == 0 else 15
    assert red == expected
    _, f1 = f6_truncation(5, 1, 30)
    sub = f1.to_series(5).subs_power(5, 15).reduce(m)
    assert sub == TruncSeries([1, 0, 0, 0, 0, 15, 0, 0, 0, 0, 15, 0, 0, 0, 0], m)
    full, trunc = f6_truncation(2, 3, 10, "A")
    assert full[1] == a_term(1) == 60
    assert trunc.degree == 7


def test_z_parameter():
    assert z_of_t(4).coeffs == (0, 1, 432, 373248)
    zt = z_of_t(20)
    for m in range(1, 20):
        assert zt[m] == 432 ** (m - 1) * catalan(m - 1)
    assert z_of_q(4).coeffs == (0, 1, -312, 87084)
    assert compose(z_of_t(20), j_inverse(20)) == z_of_q(20)


TRIPLES = [(F(1, 12), F(5, 12), 1), (F(-1, 12), F(7, 12), 1), (F(13, 12), F(5, 12), 1)]


@pytest.mark.parametrize("a,b,c", TRIPLES)
def test_euler_transformation(a, b, c):
    lhs = hyp((a, b), (c,), 1728, N)
    base = TruncSeries.from_poly([1, -1728], N)
    rhs = mul(rpow(base, c - a - b), hyp((c - a, c - b), (c,), 1728, N))
    assert lhs == rhs


@pytest.mark.parametrize("a,b,c", TRIPLES)
def test_contiguous_relation(a, b, c):
    lhs = hyp((a + 1, b), (c,), 1728, N)
    f = hyp((a, b), (c,), 1728, N)
    assert lhs == f + theta_euler(f).scale(1 / a)


def test_clausen():
    assert mul(F1(N), F1(N)) == hyp((F(1, 6), F(1, 2), F(5, 6)), (1, 1), 1728, N)


def test_orr():
    a, b = F(7, 12), F(11, 12)
    lhs = mul(hyp((a, b), (a + b - F(1, 2),), 1728, N), hyp((a, b - 1), (a + b - F(1, 2),), 1728, N))
    rhs = hyp((2 * a, 2 * b - 1, a + b - 1), (2 * a + 2 * b - 2, a + b - F(1, 2)), 1728, N)
    assert lhs == rhs
    assert mul(inv_sqrt_disc(N), mul(F1(N), F2(N))) == V_series(N)


def test_quadratic_transformation():
    a, b = F(1, 12), F(5, 12)
    inner = TruncSeries.from_poly([0, 4, -4], N)
    lhs = compose(hyp((a, b), (a + b + F(1, 2),), 1, N), inner)
    assert lhs == hyp((2 * a, 2 * b), (a + b + F(1, 2),), 1, N)


def test_eisenstein_hypergeometric_expressions():
    n = 40
    f1 = F1(n)
    assert t_to_q(power(f1, 4)) == E4(n).series
    assert t_to_q(mul(sqrt_disc(n), power(f1, 6))) == E6(n).series
    assert t_to_q(mul(f1, F2(n))) == E2(n).series
    half = hyp((F(1, 6), F(1, 2), F(5, 6)), (1, 1), 1728, n)
    assert mul(t_to_q(half), t_to_q(half)) == E4(n).series


def test_derivation_on_hypergeometric_ring():
    f1, f2 = F1(N), F2(N)
    e2 = mul(f1, f2)
    lhs = mul(mul(sqrt_disc(N), mul(f1, f1)), theta_euler(e2))
    rhs = (mul(e2, e2) - power(f1, 4)).scale(F(1, 12))
    assert lhs == rhs
