"""Exact arithmetic in the quadratic field Q(sqrt 5).

A :class:`QuadNum` is ``p + q*sqrt(5)`` with rational ``p`` and ``q``.
Components are stored as reduced :class:`fractions.Fraction` values, so the
representation is canonical and ``==`` is plain componentwise equality.

    >>> PHI * PSI
    QuadNum(-1, 0)
    >>> binet_fib(10)
    QuadNum(55, 0)
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QuadNum:
    __slots__ = ("_p", "_q")

    def __init__(self, p=0, q=0):
        self._p = Fraction(p)
        self._q = Fraction(q)

    @property
    def p(self) -> Fraction:
        return self._p

    @property
    def q(self) -> Fraction:
        return self._q

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, QuadNum):
            return x
        if isinstance(x, Rational):
            return cls(x, 0)
        return NotImplemented

    def __repr__(self):
        return f"QuadNum({self._p}, {self._q})"

    def __str__(self):
        if self._q == 0:
            return str(self._p)
        sign = "-" if self._q < 0 else "+"
        return f"{self._p} {sign} {abs(self._q)}*sqrt(5)"

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._p == other._p and self._q == other._q

    def __hash__(self):
        if self._q == 0:
            return hash(self._p)
        return hash((self._p, self._q))

    def __bool__(self):
        return bool(self._p) or bool(self._q)

    def __neg__(self):
        return QuadNum(-self._p, -self._q)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadNum(self._p + other._p, self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadNum(self._p - other._p, self._q - other._q)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q, r, s = self._p, self._q, other._p, other._q
        return QuadNum(p * r + 5 * q * s, p * s + q * r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return power(self, k)

    def conj(self) -> "QuadNum":
        """Galois conjugate ``p - q*sqrt(5)``."""
        return QuadNum(self._p, -self._q)

    def norm(self) -> Fraction:
        """Field norm ``p**2 - 5*q**2`` (the product with the conjugate)."""
        return self._p * self._p - 5 * self._q * self._q

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            # sqrt(5) is irrational, so the norm vanishes only at zero
            raise ZeroDivisionError("QuadNum division by zero")
        return QuadNum(self._p / n, -self._q / n)

    def is_rational(self) -> bool:
        return self._q == 0

    def is_integer(self) -> bool:
        return self._q == 0 and self._p.denominator == 1


def add(x, y):
    return QuadNum._coerce(x) + y


def sub(x, y):
    return QuadNum._coerce(x) - y


def mul(x, y):
    return QuadNum._coerce(x) * y


def div(x, y):
    return QuadNum._coerce(x) / y


def conj(x) -> QuadNum:
    return QuadNum._coerce(x).conj()


def power(x, k: int) -> QuadNum:
    """``x**k`` for any integer ``k`` by binary exponentiation."""
    x = QuadNum._coerce(x)
    if k < 0:
        x = x.inverse()
        k = -k
    result = ONE
    while k:
        if k & 1:
            result = result * x
        k >>= 1
        if k:
            x = x * x
    return result


ONE = QuadNum(1, 0)
SQRT5 = QuadNum(0, 1)
PHI = QuadNum(Fraction(1, 2), Fraction(1, 2))
PSI = QuadNum(Fraction(1, 2), Fraction(-1, 2))


def binet_fib(n: int) -> QuadNum:
    """(PHI**n - PSI**n) / sqrt(5), evaluated exactly."""
    return (power(PHI, n) - power(PSI, n)) / SQRT5


def binet_lucas(n: int) -> QuadNum:
    """PHI**n + PSI**n, evaluated exactly."""
    return power(PHI, n) + power(PSI, n)
