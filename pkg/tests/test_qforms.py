from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals
from exqmf.extremal import extremal_depth1_recursive, extremal_generic
from exqmf.qforms import (
    E2,
    E4,
    E6,
    QExpansion,
    QMMonomial,
    d_operator,
    delta,
    dim_quasimodular,
    eisenstein,
    j_inverse,
    k_up,
    k_up_adjoint,
    l_operator,
    monomial,
    q_expansion_text,
    qm_monomial_basis,
    rankin_cohen,
    serre_derivative,
    theta_r,
)
from exqmf.series import TruncSeries, invert, mul, sqrt_one, theta_euler

N = 40


def _sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def _delta_oracle(n):
    # naive expansion of q prod (1 - q^k)^24
    prod = [1] + [0] * (n - 1)
    for k in range(1, n):
        for _ in range(24):
            prod = [prod[i] - (prod[i - k] if i >= k else 0) for i in range(n)]
    return [0] + prod[: n - 1]


def test_eisenstein_examples():
    assert E2(6).series.coeffs == (1, -24, -72, -96, -168, -144)
    assert E4(3)[1] == 240
    assert E6(3)[1] == -504
    assert E2(5).depth == 1 and E4(5).depth == 0
    for n in range(1, 30):
        assert E4(30)[n] == 240 * _sigma(3, n)
        assert E6(30)[n] == -504 * _sigma(5, n)


def test_eisenstein_rejects_odd_weight():
    with pytest.raises(ValueError):
        eisenstein(3, 5)


def test_delta_and_j_inverse():
    d = delta(N)
    assert list(d.series.coeffs) == _delta_oracle(N)
    assert d[1] == 1 and d[2] == -24
    e4, e6 = E4(N).series, E6(N).series
    assert (e4 ** 3 - e6 ** 2).scale(Fraction(1, 1728)) == d.series
    assert j_inverse(4).coeffs == (0, 1, -744, 356652)


def test_ramanujan_relations():
    n = 60
    e2, e4, e6 = E2(n).series, E4(n).series, E6(n).series
    assert theta_euler(e2) == (e2 * e2 - e4).scale(Fraction(1, 12))
    assert theta_euler(e4) == (e2 * e4 - e6).scale(Fraction(1, 3))
    assert theta_euler(e6) == (e2 * e6 - e4 * e4).scale(Fraction(1, 2))


def test_d_operator_examples():
    assert d_operator(QExpansion(TruncSeries.one(10), 0)).series == TruncSeries.zero(10)
    d = delta(N).series
    # D(Delta)/Delta = E2, comparing after removing the common factor q
    lhs = theta_euler(d).shift(-1).truncate(N - 1)
    assert mul(lhs, invert(d.shift(-1).truncate(N - 1))) == E2(N - 1).series


def test_serre_examples():
    e2, e4, e6 = E2(N), E4(N), E6(N)
    assert serre_derivative(e2, 1).series == e4.series.scale(Fraction(-1, 12))
    assert serre_derivative(e4, 4).series == e6.series.scale(Fraction(-1, 3))
    assert serre_derivative(e6, 6).series == (e4.series * e4.series).scale(Fraction(-1, 2))


def test_rankin_cohen_examples():
    e2, e4 = E2(N), E4(N)
    assert rankin_cohen(e2, e4, 0, 2, 4).series == e2.series * e4.series
    zero = QExpansion(TruncSeries.zero(N), 4)
    assert rankin_cohen(e2, zero, 3, 2, 4).series == TruncSeries.zero(N)
    # direct summation for n = 1: C(2,1) C(4,0) f D(g) - C(2,0) C(4,1) D(f) g
    oracle = (e2.series * theta_euler(e4.series)).scale(2) - (theta_euler(e2.series) * e4.series).scale(4)
    assert rankin_cohen(e2, e4, 1, 2, 4).series == oracle


def test_theta_r_low_orders():
    f = E4(N) * E6(N) + E2(N) * E4(N) ** 2
    assert theta_r(f, 10, 0).series == serre_derivative(f, 10).series
    assert theta_r(f, 9, 1).series == l_operator(f, 10).series


def test_theta_annihilates_extremal_examples():
    g12 = extremal_depth1_recursive(12, N).q_expansion
    assert theta_r(g12, 11, 1).series == TruncSeries.zero(N)
    g42 = extremal_generic(4, 2, N).q_expansion
    assert theta_r(g42, 2, 2).series == TruncSeries.zero(N)


def test_l_operator_examples():
    one = QExpansion(TruncSeries.one(N), 0)
    assert l_operator(one, 0).series == TruncSeries.zero(N)
    g6 = extremal_depth1_recursive(6, N).q_expansion
    assert l_operator(g6, 6).series == TruncSeries.zero(N)


def test_qm_monomial_basis_examples():
    b12 = qm_monomial_basis(12, 1)
    assert {m.render() for m in b12} == {"E4^3", "E6^2", "E2*E4*E6"}
    assert qm_monomial_basis(0, 0) == [QMMonomial(0, 0, 0)]
    assert QMMonomial(0, 0, 0).render() == "1"
    for w in range(0, 40, 2):
        for r in range(0, 7):
            assert len(qm_monomial_basis(w, r)) == dim_quasimodular(w, r)
    assert len(qm_monomial_basis(10, 5)) == dim_quasimodular(10, 5) == 5


def test_half_powers_of_e4_are_integral():
    h = sqrt_one(E4(50).series)
    assert h.is_integral()
    assert invert(h).is_integral()


def test_q_expansion_text():
    assert q_expansion_text(E2(3).series) == "1 - 24 q - 72 q^2"
    assert q_expansion_text(TruncSeries([0, Fraction(-1, 5), 2])) == "-1/5 q + 2 q^2"
    assert q_expansion_text(TruncSeries.zero(3)) == "0"


# --- random quasimodular forms ------------------------------------------

T = 30


@st.composite
def qm_forms(draw, w, r=None):
    r = w // 2 if r is None else r
    basis = qm_monomial_basis(w, r)
    coeffs = draw(st.lists(rationals(30, 5), min_size=len(basis), max_size=len(basis)))
    total = TruncSeries.zero(T)
    for c, mono in zip(coeffs, basis):
        total = total + monomial(mono, T).series.scale(c)
    return QExpansion(total, w, r)


@settings(max_examples=30)
@given(st.data())
def test_leibniz_for_serre(data):
    k = data.draw(st.sampled_from([2, 4, 6, 8]))
    l = data.draw(st.sampled_from([2, 4, 6]))
    f = data.draw(qm_forms(k))
    g = data.draw(qm_forms(l))
    lhs = serre_derivative(f * g, k + l).series
    rhs = serre_derivative(f, k).series * g.series + f.series * serre_derivative(g, l).series
    assert lhs == rhs


@settings(max_examples=20)
@given(st.data())
def test_l_k_up_intertwining(data):
    w = data.draw(st.sampled_from([0, 6, 12]))
    f = data.draw(qm_forms(w, 1) if w else st.just(QExpansion(TruncSeries.constant(data.draw(rationals()), T), 0)))
    lhs = l_operator(k_up(f, w), w + 6).series
    rhs = k_up_adjoint(l_operator(f, w), w).series
    assert lhs == rhs


def _composition_rhs(f, k, r):
    c1 = Fraction((k + r - 1) * (k + 2 * r), 2 * (r - 1) * (k + r))
    c2 = Fraction(k * (k + r + 1), 2 * (r - 1) * (k + r))
    a = theta_r(serre_derivative(f, k), k + 2, r - 1).series
    b = serre_derivative(theta_r(f, k, r - 1), k + 2 * r).series
    return a.scale(c1) - b.scale(c2)


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("k", [4, 6, 8, 12])
@settings(max_examples=10)
@given(data=st.data())
def test_composition_identity(r, k, data):
    f = data.draw(qm_forms(k))
    assert theta_r(f, k, r).series == _composition_rhs(f, k, r)


@pytest.mark.parametrize("k", [4, 6, 8, 12])
@settings(max_examples=10)
@given(data=st.data())
def test_defect_identity_order_five(k, data):
    f = data.draw(qm_forms(k))
    c = Fraction(k * (k + 4) * (k + 6) * (k + 10) * (k * k + 10 * k + 36), 1440)
    lhs = theta_r(f, k, 5).series - _composition_rhs(f, k, 5)
    assert lhs == (delta(T).series * f.series).scale(c)


@pytest.mark.parametrize("k", [4, 6, 8, 12])
@settings(max_examples=10)
@given(data=st.data())
def test_defect_identity_order_six(k, data):
    f = data.draw(qm_forms(k))
    c = Fraction(k * (k + 5) * (k + 7) * (k + 12) * (k * k + 12 * k + 47), 300)
    lhs = theta_r(f, k, 6).series - _composition_rhs(f, k, 6)
    assert lhs == (delta(T).series * serre_derivative(f, k).series).scale(c)
