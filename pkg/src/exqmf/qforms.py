"""q-expansions of E2, E4, E6, Delta, 1/j and the differential operators
acting on quasimodular forms.

Weight and depth carried by ``QExpansion`` are advisory upper bounds; the
coefficients are what every check relies on.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numeric import bernoulli, binomial
from .series import TruncSeries, compose_with_powers, invert, power, theta_euler


@dataclass(frozen=True)
class QExpansion:
    series: TruncSeries
    weight: int
    depth: int = 0

    @property
    def trunc(self):
        return self.series.trunc

    def __getitem__(self, i):
        return self.series[i]

    def __add__(self, other):
        if isinstance(other, QExpansion):
            return QExpansion(self.series + other.series, self.weight, max(self.depth, other.depth))
        return QExpansion(self.series + other, self.weight, self.depth)

    def __sub__(self, other):
        if isinstance(other, QExpansion):
            return QExpansion(self.series - other.series, self.weight, max(self.depth, other.depth))
        return QExpansion(self.series - other, self.weight, self.depth)

    def __neg__(self):
        return QExpansion(-self.series, self.weight, self.depth)

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            return QExpansion(self.series * other.series, self.weight + other.weight, self.depth + other.depth)
        return QExpansion(self.series.scale(other), self.weight, self.depth)

    __rmul__ = __mul__

    def __pow__(self, k):
        return QExpansion(power(self.series, k), self.weight * k, self.depth * k)

    def truncate(self, n):
        return QExpansion(self.series.truncate(n), self.weight, self.depth)


@dataclass(frozen=True)
class QMMonomial:
    """E2^l E4^m E6^n."""

    l: int
    m: int
    n: int

    @property
    def weight(self):
        return 2 * self.l + 4 * self.m + 6 * self.n

    def render(self):
        parts = []
        for name, e in (("E2", self.l), ("E4", self.m), ("E6", self.n)):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) or "1"


_lock = threading.Lock()


def _sigma_table(k, n):
    sig = [0] * n
    for d in range(1, n):
        dk = d ** k
        for m in range(d, n, d):
            sig[m] += dk
    return sig


@lru_cache(maxsize=None)
def _eisenstein_series(k: int, n: int) -> TruncSeries:
    c = -Fraction(2 * k) / bernoulli(k)
    sig = _sigma_table(k - 1, n)
    cs = [1] + [int(c * sig[i]) for i in range(1, n)]
    return TruncSeries(cs)


def eisenstein(k: int, n: int) -> QExpansion:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k % 2 or k < 2:
        raise ValueError("k must be even and >= 2")
    with _lock:
        s = _eisenstein_series(k, n)
    return QExpansion(s, k, 1 if k == 2 else 0)


def E2(n):
    return eisenstein(2, n)


def E4(n):
    return eisenstein(4, n)


def E6(n):
    return eisenstein(6, n)


@lru_cache(maxsize=None)
def _delta_series(n: int) -> TruncSeries:
    # q * prod (1 - q^k)^24
    eta = [0] * n
    eta[0] = 1
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            eta[i] -= eta[i - k]
    p24 = power(TruncSeries(eta), 24)
    d = p24.shift(1)
    e4, e6 = _eisenstein_series(4, n), _eisenstein_series(6, n)
    check = (power(e4, 3) - power(e6, 2)).scale(Fraction(1, 1728))
    if d != check:
        raise AssertionError("eta product disagrees with (E4^3 - E6^2)/1728")
    return d


def delta(n: int) -> QExpansion:
    with _lock:
        return QExpansion(_delta_series(n), 12, 0)


@lru_cache(maxsize=None)
def _jinv(n: int) -> TruncSeries:
    return _delta_series(n) * invert(power(_eisenstein_series(4, n), 3))


def j_inverse(n: int) -> TruncSeries:
    with _lock:
        return _jinv(n)


@lru_cache(maxsize=None)
def _jinv_powers(n: int) -> tuple:
    j = _jinv(n)
    out = [TruncSeries.one(n), j]
    for _ in range(2, n):
        out.append(out[-1] * j)
    return tuple(out[:n])


def t_to_q(f: TruncSeries, n: int | None = None) -> TruncSeries:
    """Substitute t = 1/j(q) into a series in t."""
    n = f.trunc if n is None else n
    with _lock:
        pw = _jinv_powers(n)
    return compose_with_powers(f, pw)


@lru_cache(maxsize=None)
def _gen_power(k: int, e: int, n: int) -> TruncSeries:
    if e == 0:
        return TruncSeries.one(n)
    if e == 1:
        return _eisenstein_series(k, n)
    half = _gen_power(k, e // 2, n)
    out = half * half
    if e % 2:
        out = out * _eisenstein_series(k, n)
    return out


def monomial(mono: QMMonomial, n: int) -> QExpansion:
    with _lock:
        s = _gen_power(2, mono.l, n) * _gen_power(4, mono.m, n) * _gen_power(6, mono.n, n)
    return QExpansion(s, mono.weight, mono.l)


def dim_modular(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def dim_quasimodular(w: int, r: int) -> int:
    return sum(dim_modular(w - 2 * l) for l in range(r + 1))


def qm_monomial_basis(w: int, r: int) -> list[QMMonomial]:
    """All E2^l E4^m E6^n of weight w with l <= r, ordered by l then n."""
    if w < 0 or w % 2:
        raise ValueError("weight must be even and nonnegative")
    out = []
    for l in range(min(r, w // 2) + 1):
        rest = w - 2 * l
        for n in range(rest // 6 + 1):
            if (rest - 6 * n) % 4 == 0:
                out.append(QMMonomial(l, (rest - 6 * n) // 4, n))
    return out


# --- operators ------------------------------------------------------------


def d_operator(f: QExpansion) -> QExpansion:
    """D = q d/dq."""
    return QExpansion(theta_euler(f.series), f.weight + 2, f.depth + 1)


def _d_iter(s: TruncSeries, k: int) -> TruncSeries:
    for _ in range(k):
        s = theta_euler(s)
    return s


def serre_derivative(f: QExpansion, k) -> QExpansion:
    """D f - (k/12) E2 f."""
    e2 = E2(f.trunc).series
    s = theta_euler(f.series) - (e2 * f.series).scale(Fraction(k) / 12)
    return QExpansion(s, f.weight + 2, f.depth + 1)


def serre_iterate(f: QExpansion, k, times: int) -> QExpansion:
    """partial_{k+2(times-1)} o ... o partial_k."""
    for i in range(times):
        f = serre_derivative(f, k + 2 * i)
    return f


def rankin_cohen(f: QExpansion, g: QExpansion, n: int, k, l) -> QExpansion:
    """sum_i (-1)^i C(n+k-1, n-i) C(n+l-1, i) D^i f D^(n-i) g."""
    N = min(f.trunc, g.trunc)
    total = TruncSeries.zero(N)
    for i in range(n + 1):
        c = (-1) ** i * _binom_q(n + k - 1, n - i) * _binom_q(n + l - 1, i)
        if c:
            total = total + (_d_iter(f.series, i) * _d_iter(g.series, n - i)).scale(c)
    return QExpansion(total, f.weight + g.weight + 2 * n, f.depth + g.depth + n)


def _binom_q(a, b):
    # generalized binomial for possibly rational top entry
    if b < 0:
        return 0
    if isinstance(a, int) and a >= 0:
        return binomial(a, b)
    out = Fraction(1)
    for i in range(b):
        out = out * (a - i) / (i + 1)
    return out


def theta_r(f: QExpansion, k, r: int) -> QExpansion:
    """D^(r+1) f - ((k+r)/12) sum_i (-1)^i C(r+1,i+1) C(k+r-1,i) D^i(E2) D^(r-i) f."""
    N = f.trunc
    e2 = E2(N).series
    acc = TruncSeries.zero(N)
    for i in range(r + 1):
        c = (-1) ** i * binomial(r + 1, i + 1) * _binom_q(k + r - 1, i)
        if c:
            acc = acc + (_d_iter(e2, i) * _d_iter(f.series, r - i)).scale(c)
    s = _d_iter(f.series, r + 1) - acc.scale(Fraction(k + r, 12))
    return QExpansion(s, f.weight + 2 * r + 2, f.depth + r + 1)


def l_operator(f: QExpansion, w) -> QExpansion:
    """partial_{w+1} partial_{w-1} f - ((w^2-1)/144) E4 f."""
    e4 = E4(f.trunc).series
    g = serre_derivative(serre_derivative(f, w - 1), w + 1)
    return QExpansion(g.series - (e4 * f.series).scale(Fraction(w * w - 1, 144)), f.weight + 4, f.depth)


def k_up(f: QExpansion, w) -> QExpansion:
    """E4 partial_{w-1} f - ((w+1)/12) E6 f."""
    n = f.trunc
    e4, e6 = E4(n).series, E6(n).series
    s = e4 * serre_derivative(f, w - 1).series - (e6 * f.series).scale(Fraction(w + 1, 12))
    return QExpansion(s, f.weight + 6, f.depth)


def k_up_adjoint(f: QExpansion, w) -> QExpansion:
    """E4 partial_{w+3} f - ((w+9)/12) E6 f."""
    n = f.trunc
    e4, e6 = E4(n).series, E6(n).series
    s = e4 * serre_derivative(f, w + 3).series - (e6 * f.series).scale(Fraction(w + 9, 12))
    return QExpansion(s, f.weight + 6, f.depth)


def q_expansion_text(s: TruncSeries, start: int = 0, var: str = "q") -> str:
    """Human readable rendering, e.g. ``1 - 24 q - 72 q^2``."""
    parts = []
    for i in range(start, s.trunc):
        c = Fraction(s[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a} {mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
