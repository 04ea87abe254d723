"""Shared hypothesis strategies and profile."""

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from exqmf.numeric import PrimePowerModulus
from exqmf.series import TruncSeries

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")


def rationals(max_num=50, max_den=12):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def series(n, const=None, max_num=20, max_den=6):
    """Random rational series of truncation n; optional fixed constant term."""
    body = st.lists(rationals(max_num, max_den), min_size=n, max_size=n)
    if const is None:
        return body.map(TruncSeries)
    return body.map(lambda cs: TruncSeries([const] + cs[1:]))


def int_series(n, lo=-30, hi=30):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(TruncSeries)


SMALL_MODULI = [PrimePowerModulus(2, 8), PrimePowerModulus(3, 5), PrimePowerModulus(5, 2), PrimePowerModulus(7, 2)]


@st.composite
def p_integral_pair(draw):
    """A modulus from SMALL_MODULI and two rationals whose denominators avoid its prime."""
    m = draw(st.sampled_from(SMALL_MODULI))

    def one():
        num = draw(st.integers(-10**6, 10**6))
        den = draw(st.integers(1, 10**4).filter(lambda d: d % m.p))
        return Fraction(num, den)

    return m, one(), one()
