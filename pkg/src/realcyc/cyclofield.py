"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) of
Q[x]/Phi_n(x).  Internally the coefficients are a tuple of integer
numerators over one positive common denominator, reduced so that the gcd of
all of them is 1.  That keeps equality and hashing canonical while making
multiplication a pure integer convolution.

Complex conjugation is the automorphism z -> z^(n-1); the elements it fixes
form the maximal real subfield Q(zeta_n) & R.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import ConductorMismatch, DivisionByZero, NotDivisible

__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "totient",
    "zeta",
    "rational",
    "lift_conductor",
    "conj",
    "is_real",
    "inv",
]


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # integer long division by a monic polynomial, remainder must vanish
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided by Phi_d for every proper divisor d of n.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _FieldData:
    """Per-conductor reduction tables (all integral since Phi_n is monic)."""

    def __init__(self, n: int):
        self.n = n
        self.phi = totient(n)
        self.poly = cyclotomic_polynomial(n)
        phi = self.phi
        # powers[k] = x^k mod Phi_n for 0 <= k < max(n, 2*phi - 1)
        size = max(n, 2 * phi - 1)
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(size):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * self.poly[j]
        self.powers = powers
        # conj_images[i] = reduced power basis vector of z^(-i)
        self.conj_images = [powers[(-i) % n] for i in range(phi)]


@lru_cache(maxsize=None)
def _field(n: int) -> _FieldData:
    return _FieldData(n)


def _canon(num, den: int):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class Cyclotomic:
    """An element of Q(zeta_n).

    ``Cyclotomic(n, coeffs)`` accepts a coefficient list of any length; it is
    read as sum(coeffs[i] * z^i) and reduced modulo Phi_n.
    """

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coeffs=()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        F = _field(conductor)
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        acc = [0] * F.phi
        for i, f in enumerate(fracs):
            c = f.numerator * (den // f.denominator)
            if c:
                row = F.powers[i % conductor]
                for j in range(F.phi):
                    if row[j]:
                        acc[j] += c * row[j]
        self._set(conductor, *_canon(acc, den))

    def _set(self, n, num, den):
        self._n = n
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, n, num, den) -> Cyclotomic:
        obj = cls.__new__(cls)
        obj._set(n, *_canon(num, den))
        return obj

    # constructors -----------------------------------------------------

    @classmethod
    def rational(cls, q, conductor: int = 1) -> Cyclotomic:
        q = Fraction(q)
        num = [0] * _field(conductor).phi
        num[0] = q.numerator
        return cls._raw(conductor, num, q.denominator)

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> Cyclotomic:
        F = _field(conductor)
        return cls._raw(conductor, list(F.powers[k % conductor]), 1)

    @classmethod
    def from_terms(cls, conductor: int, terms) -> Cyclotomic:
        """Build from ``[exponent, numerator, denominator]`` triples."""
        phi = _field(conductor).phi
        coeffs = [Fraction(0)] * phi
        last = -1
        for term in terms:
            e, p, q = term
            if not (isinstance(e, int) and 0 <= e < phi and e > last):
                raise ValueError(f"bad exponent {e!r} for conductor {conductor}")
            if q == 0:
                raise ValueError("zero denominator")
            coeffs[e] = Fraction(p, q)
            last = e
        return cls(conductor, coeffs)

    # accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def terms(self) -> list[list[int]]:
        """Serialized form: ``[exponent, numerator, denominator]`` per nonzero term."""
        out = []
        for e, f in enumerate(self.coeffs):
            if f:
                out.append([e, f.numerator, f.denominator])
        return out

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def is_real(self) -> bool:
        return self.conj() == self

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return (
                self._n == other._n
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._n, self._num, self._den))
        return self._hash

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other._n != self._n:
                raise ConductorMismatch(
                    f"conductors {self._n} and {other._n} differ; lift explicitly"
                )
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.rational(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [a + b for a, b in zip(self._num, other._num)]
            return Cyclotomic._raw(self._n, num, d1)
        num = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
        return Cyclotomic._raw(self._n, num, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._n, [-a for a in self._num], self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return Cyclotomic._raw(
                self._n, [a * q.numerator for a in self._num], self._den * q.denominator
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = _field(self._n)
        phi = F.phi
        a, b = self._num, other._num
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:phi]
        powers = F.powers
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                row = powers[k]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic._raw(self._n, out, self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> Cyclotomic:
        """Multiplicative inverse via the extended Euclidean algorithm with Phi_n."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        n = self._n
        if self.is_rational():
            return Cyclotomic.rational(1 / Fraction(self._num[0], self._den), n)
        s = _poly_inverse_mod(list(self._num), cyclotomic_polynomial(n))
        # self = num/den, so 1/self = den * s
        return Cyclotomic(n, [c * self._den for c in s])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        result = Cyclotomic.rational(1, self._n)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conj(self) -> Cyclotomic:
        F = _field(self._n)
        out = [0] * F.phi
        for i, c in enumerate(self._num):
            if c:
                row = F.conj_images[i]
                for j in range(F.phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic._raw(self._n, out, self._den)

    def lift(self, conductor: int) -> Cyclotomic:
        """The same number written in Q(zeta_conductor)."""
        n = self._n
        if conductor % n:
            raise NotDivisible(f"conductor {n} does not divide {conductor}")
        if conductor == n:
            return self
        F = _field(conductor)
        step = conductor // n
        out = [0] * F.phi
        for i, c in enumerate(self._num):
            if c:
                row = F.powers[(i * step) % conductor]
                for j in range(F.phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic._raw(conductor, out, self._den)

    # debug output ---------------------------------------------------------

    def approx(self) -> complex:
        """Double-precision value under z -> exp(2 pi i / n).

        For display only; nothing in the library branches on this.
        """
        w = cmath.exp(2j * math.pi / self._n)
        return sum(
            (float(Fraction(c, self._den)) * w**i for i, c in enumerate(self._num) if c),
            0j,
        )

    def __repr__(self):
        return f"Cyclotomic({self._n}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
                continue
            z = f"z{self._n}" if e == 1 else f"z{self._n}^{e}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = Fraction(a[-1]) / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a.pop()
        _poly_trim(a)
    return q, a


def _poly_inverse_mod(a, m):
    # s with s*a = 1 mod m, for coprime a and m over Q
    r0, r1 = [Fraction(c) for c in m], _poly_trim([Fraction(c) for c in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        # s2 = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        s2 = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            s2[i] += c
        for i, c in enumerate(prod):
            s2[i] -= c
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim(s2)
    if not r1:
        raise DivisionByZero("element is not invertible")
    g = r1[0]
    return [c / g for c in s1]


def dot(xs, ys, conductor: int | None = None) -> Cyclotomic:
    """sum(x * y) for two equal-length sequences of one conductor.

    Accumulates unreduced integer products over a running common denominator
    and reduces modulo Phi_n once at the end.
    """
    n = None
    acc = None
    phi = 0
    den = 1
    powers = None
    for a, b in zip(xs, ys):
        if n is None:
            n = a._n
            F = _field(n)
            phi = F.phi
            powers = F.powers
            acc = [0] * (2 * phi - 1)
        if a._n != n or b._n != n:
            raise ConductorMismatch("dot product over mixed conductors")
        an, bn = a._num, b._num
        if not any(an) or not any(bn):
            continue
        d2 = a._den * b._den
        if d2 == den:
            f = 1
        else:
            l = den * d2 // math.gcd(den, d2)
            if l != den:
                s = l // den
                acc = [c * s for c in acc]
                den = l
            f = l // d2
        for i, ai in enumerate(an):
            if ai:
                ai *= f
                for j, bj in enumerate(bn):
                    if bj:
                        acc[i + j] += ai * bj
    if n is None:
        if conductor is None:
            raise ValueError("empty dot product needs a conductor")
        return Cyclotomic.rational(0, conductor)
    out = acc[:phi]
    for k in range(phi, 2 * phi - 1):
        c = acc[k]
        if c:
            row = powers[k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return Cyclotomic._raw(n, out, den)


# module-level spellings ----------------------------------------------------


def zeta(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(n, k)


def rational(q, n: int = 1) -> Cyclotomic:
    return Cyclotomic.rational(q, n)


def conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def is_real(a: Cyclotomic) -> bool:
    return a.is_real()


def inv(a: Cyclotomic) -> Cyclotomic:
    return a.inv()


def lift_conductor(a: Cyclotomic, conductor: int) -> Cyclotomic:
    return a.lift(conductor)


def real_subfield_basis(n: int) -> list[Cyclotomic]:
    """A Q-basis of the real subfield: 1 and z^j + z^-j for 1 <= j < phi(n)/2."""
    phi = totient(n)
    if n <= 2:
        return [Cyclotomic.rational(1, n)]
    return [Cyclotomic.rational(1, n)] + [
        Cyclotomic.zeta(n, j) + Cyclotomic.zeta(n, -j) for j in range(1, phi // 2)
    ]
