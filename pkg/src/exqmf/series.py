"""Truncated power series over Q or Z/p^sZ, dense rational polynomials,
and exact linear solving.

A series over Q stores ``int``/``Fraction`` coefficients; a residue series
stores integers in ``[0, p^s)``.  Binary operations keep the smaller
truncation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConstantTermNotOne,
    DegreeExceeded,
    DomainMismatch,
    Inconsistent,
    NonInvertibleDenominator,
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotReversible,
    Underdetermined,
)
from .numeric import PrimePowerModulus, lcm_denominators, reduce_int


def _as_rational(c):
    if isinstance(c, (int, Fraction)):
        return c
    return Fraction(c)


def _scaled_ints(cs):
    """Common denominator d and integer numerators with cs[i] = ints[i]/d."""
    d = lcm_denominators(cs)
    if d == 1:
        return 1, [int(c) for c in cs]
    return d, [c.numerator * (d // c.denominator) for c in cs]


def _convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    la, lb = len(a), len(b)
    for i in range(min(la, n)):
        ai = a[i]
        if not ai:
            continue
        lim = min(lb, n - i)
        for j in range(lim):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


class TruncSeries:
    """c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable, modulus: PrimePowerModulus | None = None):
        if modulus is None:
            cs = tuple(_as_rational(c) for c in coeffs)
        else:
            m = modulus.value
            cs = tuple(reduce_int(_as_rational(c), m) for c in coeffs)
        self.coeffs = cs
        self.modulus = modulus

    @classmethod
    def _raw(cls, coeffs, modulus=None):
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.modulus = modulus
        return obj

    # --- constructors
    @classmethod
    def zero(cls, n, modulus=None):
        return cls._raw([0] * n, modulus)

    @classmethod
    def one(cls, n, modulus=None):
        return cls.constant(1, n, modulus)

    @classmethod
    def constant(cls, c, n, modulus=None):
        return cls([c] + [0] * (n - 1), modulus) if n else cls._raw([], modulus)

    @classmethod
    def variable(cls, n, modulus=None):
        cs = [0] * n
        if n > 1:
            cs[1] = 1
        return cls._raw(cs, modulus)

    @classmethod
    def from_poly(cls, coeffs, n, modulus=None):
        cs = list(coeffs[:n]) + [0] * max(0, n - len(coeffs))
        return cls(cs, modulus)

    # --- basic protocol
    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    @property
    def domain(self) -> str:
        return "Q" if self.modulus is None else f"Z/{self.modulus.value}"

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, trunc={self.trunc}, domain={self.domain})"

    def compare(self, other: "TruncSeries") -> tuple[bool, int]:
        """Equality on the overlap; returns (equal, compared length)."""
        self._check(other)
        n = min(self.trunc, other.trunc)
        return self.coeffs[:n] == other.coeffs[:n], n

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        return self.compare(other)[0]

    __hash__ = None

    def _check(self, other):
        if self.modulus != other.modulus:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")

    def _wrap(self, cs):
        if self.modulus is None:
            return TruncSeries._raw(cs)
        m = self.modulus.value
        return TruncSeries._raw([c % m for c in cs], self.modulus)

    def truncate(self, n: int) -> "TruncSeries":
        if n > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {n}")
        return TruncSeries._raw(self.coeffs[:n], self.modulus)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # --- ring operations
    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        return TruncSeries.constant(other, self.trunc, self.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.trunc, other.trunc)
        return self._wrap([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = min(self.trunc, other.trunc)
        return self._wrap([a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def scale(self, c) -> "TruncSeries":
        if self.modulus is not None:
            c = reduce_int(_as_rational(c), self.modulus.value)
        return self._wrap([c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return mul(self, invert(other))
        if self.modulus is None:
            return self.scale(Fraction(1) / _as_rational(other))
        return self.scale(pow(reduce_int(_as_rational(other), self.modulus.value), -1, self.modulus.value))

    def __pow__(self, k: int):
        return power(self, k)

    # --- structural helpers
    def shift(self, k: int) -> "TruncSeries":
        """Multiply by x^k keeping the truncation (k >= 0), or divide exactly (k < 0)."""
        if k >= 0:
            return TruncSeries._raw(([0] * k + list(self.coeffs))[: self.trunc], self.modulus)
        if any(self.coeffs[:-k]):
            raise ValueError("series not divisible by x^%d" % -k)
        return TruncSeries._raw(self.coeffs[-k:], self.modulus)

    def subs_power(self, p: int, n: int | None = None) -> "TruncSeries":
        """f(x^p); known to order p*trunc, optionally capped at n."""
        full = p * self.trunc
        n = full if n is None else min(n, full)
        cs = [0] * n
        for i, c in enumerate(self.coeffs):
            if i * p >= n:
                break
            cs[i * p] = c
        return TruncSeries._raw(cs, self.modulus)

    def scale_arg(self, c) -> "TruncSeries":
        """f(c x)."""
        out, pw = [], 1
        for a in self.coeffs:
            out.append(a * pw)
            pw *= c
        if self.modulus is None:
            return TruncSeries(out)
        return TruncSeries(out, self.modulus)

    def reduce(self, modulus: PrimePowerModulus) -> "TruncSeries":
        if self.modulus is not None:
            if self.modulus.p != modulus.p or self.modulus.s < modulus.s:
                raise DomainMismatch("cannot reduce to that modulus")
        return TruncSeries(self.coeffs, modulus)

    def lift(self) -> "TruncSeries":
        return TruncSeries._raw(self.coeffs)


# --- free functions --------------------------------------------------------


def mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    f._check(g)
    n = min(f.trunc, g.trunc)
    if f.modulus is not None:
        m = f.modulus.value
        return TruncSeries._raw([c % m for c in _convolve(f.coeffs, g.coeffs, n)], f.modulus)
    da, a = _scaled_ints(f.coeffs[:n])
    db, b = _scaled_ints(g.coeffs[:n])
    c = _convolve(a, b, n)
    d = da * db
    if d == 1:
        return TruncSeries._raw(c)
    return TruncSeries._raw([Fraction(x, d) for x in c])


def _unit_inverse(c, modulus):
    if modulus is None:
        if c == 0:
            raise NonUnitConstantTerm("constant term is zero")
        return Fraction(1) / c if not isinstance(c, int) or abs(c) != 1 else c
    try:
        return pow(c, -1, modulus.value)
    except ValueError:
        raise NonUnitConstantTerm(f"{c} is not a unit mod {modulus.value}") from None


def invert(f: TruncSeries) -> TruncSeries:
    n = f.trunc
    if n == 0:
        return f
    inv0 = _unit_inverse(f.coeffs[0], f.modulus)
    if f.modulus is not None:
        m = f.modulus.value
        a = f.coeffs
        g = [inv0]
        for k in range(1, n):
            s = sum(a[i] * g[k - i] for i in range(1, k + 1) if a[i])
            g.append(-s * inv0 % m)
        return TruncSeries._raw(g, f.modulus)
    # over Q: scale f to integers, invert with integer recurrences
    d, a = _scaled_ints(f.coeffs)
    a0 = a[0]
    # g = d/f; track h_k = g_k * a0^(k+1) to stay in integers
    pw = [1]
    for _ in range(n):
        pw.append(pw[-1] * a0)
    h = [1]
    for k in range(1, n):
        s = 0
        for i in range(1, k + 1):
            if a[i]:
                s += a[i] * h[k - i] * pw[i - 1]
        h.append(-s)
    return TruncSeries._raw([Fraction(d * h[k], pw[k + 1]) for k in range(n)])


def power(f: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        return power(invert(f), -k)
    result = TruncSeries.one(f.trunc, f.modulus)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(x)); g must have zero constant term."""
    f._check(g)
    if g.trunc and g.coeffs[0] != 0:
        raise NonzeroConstantInner("inner series has nonzero constant term")
    v = g.valuation()
    n = g.trunc if v is None else min(g.trunc, v * f.trunc)
    if f.trunc == 0 or n == 0:
        return TruncSeries.zero(n, f.modulus)
    g = g.truncate(n)
    res = TruncSeries.constant(f.coeffs[-1], n, f.modulus)
    for c in reversed(f.coeffs[:-1]):
        res = mul(res, g) + c
    return res


def compose_with_powers(f: TruncSeries, powers: Sequence[TruncSeries]) -> TruncSeries:
    """sum_k f_k g^k with the powers g^k precomputed; they must be integral."""
    n = powers[0].trunc
    kmax = min(f.trunc, len(powers))
    d, a = _scaled_ints(f.coeffs[:kmax])
    out = [0] * n
    for k in range(kmax):
        ak = a[k]
        if not ak:
            continue
        pk = powers[k].coeffs
        for i in range(k, n):
            if pk[i]:
                out[i] += ak * pk[i]
    if d == 1:
        return TruncSeries._raw(out)
    return TruncSeries._raw([Fraction(x, d) for x in out])


def derive(f: TruncSeries) -> TruncSeries:
    return f._wrap([i * f.coeffs[i] for i in range(1, f.trunc)])


def theta_euler(f: TruncSeries) -> TruncSeries:
    return f._wrap([i * c for i, c in enumerate(f.coeffs)])


def integrate(f: TruncSeries) -> TruncSeries:
    """Antiderivative with zero constant; gains one order."""
    if f.modulus is not None:
        raise DomainMismatch("integration needs the rational domain")
    return TruncSeries._raw([0] + [Fraction(c) / (i + 1) for i, c in enumerate(f.coeffs)])


def revert(f: TruncSeries) -> TruncSeries:
    """Compositional inverse by Newton iteration, g <- g - (f(g) - x)/f'(g)."""
    n = f.trunc
    if n < 2 or f.coeffs[0] != 0:
        raise NotReversible("need zero constant term")
    try:
        inv1 = _unit_inverse(f.coeffs[1], f.modulus)
    except NonUnitConstantTerm:
        raise NotReversible("linear coefficient not invertible") from None
    df = derive(f)
    g = TruncSeries.from_poly([0, inv1], 2, f.modulus)
    prec = 2
    while prec < n:
        prec = min(2 * prec, n)
        g = TruncSeries._raw(list(g.coeffs) + [0] * (prec - g.trunc), f.modulus)
        x = TruncSeries.variable(prec, f.modulus)
        num = compose(f.truncate(prec), g) - x
        # num = O(x^(prec/2)), so f'(g) is only needed to about prec/2
        den = compose(df.truncate(min(prec, df.trunc)), g)
        den = TruncSeries._raw(list(den.coeffs) + [0] * (prec - den.trunc), f.modulus)
        g = g - mul(num, invert(den))
    return g.truncate(n)


def sqrt_one(f: TruncSeries) -> TruncSeries:
    """Square root with constant term 1 by Newton iteration g <- (g + f/g)/2."""
    n = f.trunc
    if n == 0:
        return f
    if f.coeffs[0] != 1:
        raise ConstantTermNotOne("constant term must be 1")
    half = Fraction(1, 2) if f.modulus is None else _half(f.modulus)
    g = TruncSeries.one(1, f.modulus)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        g = TruncSeries._raw(list(g.coeffs) + [0] * (prec - g.trunc), f.modulus)
        g = (g + mul(f.truncate(prec), invert(g))).scale(half)
    return g


def _half(modulus):
    try:
        return pow(2, -1, modulus.value)
    except ValueError:
        raise NonInvertibleDenominator("2 is not invertible") from None


def log_series(f: TruncSeries) -> TruncSeries:
    if f.modulus is not None:
        raise DomainMismatch("log needs the rational domain")
    if f.trunc and f.coeffs[0] != 1:
        raise ConstantTermNotOne("log needs constant term 1")
    n = f.trunc
    if n <= 1:
        return TruncSeries.zero(n)
    q = mul(derive(f), invert(f.truncate(n - 1)))
    return integrate(q)


def exp_series(f: TruncSeries) -> TruncSeries:
    """Newton iteration g <- g (1 + f - log g)."""
    if f.modulus is not None:
        raise DomainMismatch("exp needs the rational domain")
    if f.trunc and f.coeffs[0] != 0:
        raise ConstantTermNotOne("exp needs zero constant term")
    n = f.trunc
    g = TruncSeries.one(min(1, n))
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        g = TruncSeries._raw(list(g.coeffs) + [0] * (prec - g.trunc))
        g = mul(g, 1 + f.truncate(prec) - log_series(g))
    return g


def dumps(f: TruncSeries) -> str:
    lines = [f"{f.domain} {f.trunc}"]
    for c in f.coeffs:
        c = Fraction(c)
        lines.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> TruncSeries:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    domain, trunc = lines[0].split()
    coeffs = [Fraction(s) for s in lines[1:]]
    if len(coeffs) != int(trunc):
        raise ValueError("coefficient count does not match header")
    if domain == "Q":
        return TruncSeries(coeffs)
    m = int(domain.split("/")[1])
    p = next(d for d in range(2, m + 1) if m % d == 0)
    s = round(math.log(m, p))
    return TruncSeries(coeffs, PrimePowerModulus(p, s))


# --- polynomials -----------------------------------------------------------


class RationalPoly:
    """Dense polynomial over Q, coefficients in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"RationalPoly({self.render()})"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RationalPoly(out)

    def scale(self, c):
        return RationalPoly([c * x for x in self.coeffs])

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "RationalPoly":
        return self.scale(Fraction(1) / self.leading())

    def denominator_lcm(self) -> int:
        return lcm_denominators(self.coeffs)

    def to_series(self, n: int, modulus=None) -> TruncSeries:
        return TruncSeries.from_poly(list(self.coeffs), n, modulus)

    def render(self, var: str = "X", ascending: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        order = range(len(self.coeffs)) if ascending else range(len(self.coeffs) - 1, -1, -1)
        for k in order:
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if a == 1 and k:
                body = mono
            else:
                body = str(a) if not mono else (f"({a}){mono}" if Fraction(a).denominator != 1 else f"{a}{mono}")
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += sign + body
        return s


def reciprocal_poly(a: RationalPoly, m: int) -> RationalPoly:
    """t^m a(1/t)."""
    if a.degree > m:
        raise DegreeExceeded(f"degree {a.degree} exceeds {m}")
    cs = list(a.coeffs) + [0] * (m + 1 - len(a.coeffs))
    return RationalPoly(cs[::-1])


# --- exact linear algebra --------------------------------------------------


def _row_echelon(rows: list[list[int]], ncols: int):
    """Fraction-free (Bareiss) elimination in place; returns pivot columns."""
    pivots = []
    r = 0
    prev = 1
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            if f == 0:
                for j in range(c, len(ri)):
                    ri[j] = ri[j] * pv // prev
                continue
            for j in range(c, len(ri)):
                ri[j] = (ri[j] * pv - f * pr[j]) // prev
        prev = pv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank_and_solve(system: Sequence[Sequence], rhs: Sequence):
    """Return (rank, particular solution or None, kernel basis)."""
    nrows = len(system)
    ncols = len(system[0]) if nrows else 0
    rows = []
    for row, b in zip(system, rhs):
        full = [_as_rational(x) for x in row] + [_as_rational(b)]
        d, ints = _scaled_ints(full)
        rows.append(ints)
    pivots = _row_echelon(rows, ncols + 1)
    consistent = ncols not in pivots
    pivots = [c for c in pivots if c < ncols]
    rank = len(pivots)
    # back-substitute over Q from the echelon rows
    ech = [[Fraction(x) for x in rows[i]] for i in range(rank)]
    for i in range(rank - 1, -1, -1):
        c = pivots[i]
        pv = ech[i][c]
        ech[i] = [x / pv for x in ech[i]]
        for k in range(i):
            f = ech[k][c]
            if f:
                ech[k] = [a - f * b for a, b in zip(ech[k], ech[i])]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -ech[i][fc]
        kernel.append(v)
    particular = None
    if consistent:
        particular = [Fraction(0)] * ncols
        for i, c in enumerate(pivots):
            particular[c] = ech[i][ncols]
    return rank, particular, kernel


def solve_exact_linear(system: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    rank, particular, kernel = rank_and_solve(system, rhs)
    if particular is None:
        raise Inconsistent(f"inconsistent system (rank {rank})")
    if kernel:
        raise Underdetermined(f"rank {rank}, kernel dimension {len(kernel)}", particular, kernel)
    return particular
