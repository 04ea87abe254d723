"""Exact integer and rational helpers.

Rationals are ``fractions.Fraction`` throughout; they are always stored in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import NonInvertibleDenominator, NotSmooth

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


@dataclass(frozen=True)
class PrimePowerModulus:
    p: int
    s: int = 1
    value: int = field(init=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.s < 1:
            raise ValueError("exponent must be >= 1")
        object.__setattr__(self, "value", self.p ** self.s)

    def __str__(self):
        return f"{self.p}^{self.s}" if self.s > 1 else str(self.p)


@dataclass(frozen=True)
class Residue:
    modulus: PrimePowerModulus
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError("residue out of range")

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        return reduce_mod(other, self.modulus).value

    def __add__(self, other):
        return Residue(self.modulus, (self.value + self._coerce(other)) % self.modulus.value)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.modulus, (self.value - self._coerce(other)) % self.modulus.value)

    def __mul__(self, other):
        return Residue(self.modulus, (self.value * self._coerce(other)) % self.modulus.value)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.modulus, (-self.value) % self.modulus.value)


def reduce_int(x, m: int) -> int:
    """Image of a rational (or int) in Z/mZ; m is the plain integer modulus."""
    if isinstance(x, int):
        return x % m
    den = x.denominator
    if den == 1:
        return x.numerator % m
    try:
        inv = pow(den, -1, m)
    except ValueError:
        raise NonInvertibleDenominator(f"denominator {den} not invertible mod {m}") from None
    return x.numerator * inv % m


def reduce_mod(x, m: PrimePowerModulus) -> Residue:
    """Reduce a p-integral rational modulo p^s."""
    return Residue(m, reduce_int(x, m.value))


def valuation(x, p: int) -> int | float:
    """p-adic valuation of a nonzero rational; +inf for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def factor_smooth(n: int, bound: int) -> list[tuple[int, int]]:
    """Factor n by trial division over primes <= bound."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for p in primes_up_to(bound):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    if n != 1:
        raise NotSmooth(n)
    return out


def format_factorization(fac: list[tuple[int, int]]) -> str:
    if not fac:
        return "1"
    return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fac)


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # Akiyama-Tanigawa; gives B_1 = +1/2, irrelevant for even k
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli(k: int) -> Fraction:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _bernoulli_table(k)[k]


def lcm_denominators(values) -> int:
    out = 1
    for v in values:
        d = v.denominator
        if d != 1:
            out = out * d // math.gcd(out, d)
    return out


def mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def lucas_binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via base-p digits."""
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
        n //= p
        k //= p
    return out
