"""Exact arithmetic: rationals, fractions mod 1 and elements of Q(zeta_n).

Cyclotomic numbers are stored in the power basis 1, z, ..., z^(phi(n)-1) of
Q(z), z = exp(2 pi i / n), as an integer numerator vector over one positive
common denominator. Everything is reduced modulo the n-th cyclotomic
polynomial, so the representation is canonical for a fixed conductor.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rational = Fraction
Number = Union[int, Fraction, "Cyclotomic"]

__all__ = [
    "Rational",
    "Cyclotomic",
    "frac_mod1",
    "root_of_unity",
    "root_sum",
    "cyclotomic_polynomial",
    "euler_phi",
    "rational_str",
    "parse_rational",
]


def frac_mod1(t) -> Fraction:
    """Reduce a rational number into [0, 1)."""
    t = Fraction(t)
    return t - math.floor(t)


def rational_str(q) -> str:
    """Exact decimal-free text form: "3", "-1/2"."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


_poly_lock = threading.Lock()


@lru_cache(maxsize=None)
def _cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    # x^n - 1 divided by all Phi_d, d | n, d < n; coefficients low to high
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, list(_cyclotomic_polynomial(d)))
    return tuple(num)


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    with _poly_lock:
        return _cyclotomic_polynomial(n)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // lead
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the power-basis coordinates of z^k, for 0 <= k < n."""
    poly = cyclotomic_polynomial(n)
    d = len(poly) - 1
    rows = []
    cur = [1] + [0] * (d - 1) if d else []
    for _ in range(n):
        rows.append(tuple(cur))
        if d == 0:
            continue
        # multiply by z and reduce with the monic relation
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for j in range(d):
                nxt[j] -= top * poly[j]
        cur = nxt
    return tuple(rows)


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [a // g for a in nums]
        den //= g
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    return tuple(nums), den


class Cyclotomic:
    """An element of the cyclotomic field Q(zeta_conductor).

    Instances are immutable. Arithmetic between different conductors lifts
    both operands to the lcm conductor; no automatic descent is attempted.
    """

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor: int, coeffs: Iterable = ()):
        conductor = int(conductor)
        if conductor < 1:
            raise ValueError("conductor must be positive")
        d = euler_phi(conductor)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > d:
            # longer input is read as a polynomial in z and reduced
            table = _reduction_table(conductor)
            acc = [Fraction(0)] * d
            for k, c in enumerate(coeffs):
                if c:
                    for j, r in enumerate(table[k % conductor]):
                        if r:
                            acc[j] += c * r
            coeffs = acc
        coeffs = coeffs + [Fraction(0)] * (d - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        self.conductor = conductor
        self._num, self._den = _normalize(nums, den)

    @classmethod
    def _raw(cls, conductor: int, nums, den: int) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj._num, obj._den = _normalize(list(nums), den)
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        q = Fraction(q)
        return cls._raw(1, [q.numerator], q.denominator)

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls._raw(1, [0], 1)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls._raw(1, [1], 1)

    # accessors ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def lift(self, conductor: int) -> "Cyclotomic":
        """Re-express in Q(zeta_conductor); conductor must be a multiple."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot lift from {self.conductor} to {conductor}")
        step = conductor // self.conductor
        table = _reduction_table(conductor)
        acc = [0] * euler_phi(conductor)
        for i, a in enumerate(self._num):
            if a:
                for j, r in enumerate(table[(i * step) % conductor]):
                    if r:
                        acc[j] += a * r
        return Cyclotomic._raw(conductor, acc, self._den)

    def _common(self, other: "Cyclotomic"):
        if self.conductor == other.conductor:
            return self, other
        n = self.conductor * other.conductor // math.gcd(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b = self._common(other)
        da, db = a._den, b._den
        nums = [x * db + y * da for x, y in zip(a._num, b._num)]
        return Cyclotomic._raw(a.conductor, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic._raw(
                self.conductor, [x * q.numerator for x in self._num], self._den * q.denominator
            )
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.conductor == 1:
            return self * Fraction(other._num[0], other._den)
        if self.conductor == 1:
            return other * Fraction(self._num[0], self._den)
        a, b = self._common(other)
        n = a.conductor
        d = len(a._num)
        raw = [0] * (2 * d - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        raw[i + j] += x * y
        table = _reduction_table(n)
        acc = [0] * d
        for k, c in enumerate(raw):
            if c:
                row = table[k % n]
                for j in range(d):
                    r = row[j]
                    if r:
                        acc[j] += c * r
        return Cyclotomic._raw(n, acc, a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via extended Euclid against Phi_n over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.conductor == 1:
            return Cyclotomic.rational(Fraction(self._den, self._num[0]))
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = _trim([Fraction(x, self._den) for x in self._num])
        # invariant: r0 = s0 * a (mod modulus), r1 = s1 * a (mod modulus)
        r0, s0 = modulus, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        # r1 is a nonzero constant
        c = r1[0]
        return Cyclotomic(self.conductor, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Cyclotomic.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        # equal values at different conductors must collide; only the
        # rational part is conductor independent without descent
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash("cyclotomic")

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"Cyclotomic({self.to_rational()})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z{self.conductor}^{i}" if i else f"{c}")
        return "Cyclotomic(" + " + ".join(terms) + ")"

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.conductor), math.sin(2 * math.pi / self.conductor))
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [rational_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyclotomic":
        return cls(data["conductor"], [Fraction(c) for c in data["coeffs"]])


def _coerce(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    return NotImplemented


def root_of_unity(t) -> Cyclotomic:
    """exp(2 pi i t) for rational t, embedded at conductor denominator(t mod 1)."""
    t = frac_mod1(t)
    n = t.denominator
    if n == 1:
        return Cyclotomic.one()
    return Cyclotomic._raw(n, _reduction_table(n)[t.numerator], 1)


def root_sum(terms: Mapping) -> Cyclotomic:
    """Sum of c * exp(2 pi i t) over a mapping t -> c of rationals."""
    acc_terms: dict[Fraction, Fraction] = {}
    for t, c in terms.items():
        t = frac_mod1(t)
        acc_terms[t] = acc_terms.get(t, Fraction(0)) + Fraction(c)
    terms = {t: c for t, c in acc_terms.items() if c}
    if not terms:
        return Cyclotomic.zero()
    n = 1
    for t in terms:
        n = n * t.denominator // math.gcd(n, t.denominator)
    den = 1
    for c in terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    table = _reduction_table(n)
    acc = [0] * euler_phi(n)
    for t, c in terms.items():
        k = (t.numerator * (n // t.denominator)) % n
        w = c.numerator * (den // c.denominator)
        for j, r in enumerate(table[k]):
            if r:
                acc[j] += w * r
    return Cyclotomic._raw(n, acc, den)


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: list, b: list):
    a = list(a)
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    rem = _trim(a[: len(b) - 1] or [Fraction(0)])
    return q, rem
