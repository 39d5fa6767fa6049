"""Exact Fibonacci, Lucas and generalized Fibonacci terms for any integer index.

Terms are computed by fast doubling, so ``fib(n)`` costs O(log |n|) big
integer multiplications.  Negative indices use the reflection formulas

    F(-n) = (-1)**(n+1) * F(n)        L(-n) = (-1)**n * L(n)

which is the unique backward extension of the recurrence.

A generalized sequence G with G(0) = A, G(1) = B satisfies
G(n) = A*F(n-1) + B*F(n), and equivalently
G(n) = ((2B - A)/2) * F(n) + (A/2) * L(n).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexCapError

DEFAULT_INDEX_CAP = 10**6
INDEX_CAP_ENV = "FIBGRID_INDEX_CAP"


def index_cap() -> int:
    """Current default cap on |n|, honouring ``FIBGRID_INDEX_CAP``."""
    raw = os.environ.get(INDEX_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_INDEX_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{INDEX_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{INDEX_CAP_ENV} must be non-negative, got {cap}")
    return cap


def _check_cap(n: int, cap: int | None) -> None:
    if cap is None:
        cap = index_cap()
    if abs(n) > cap:
        raise IndexCapError(n, cap)


@dataclass(frozen=True)
class SeedPair:
    """Initial values G(0) = a and G(1) = b of a generalized sequence."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("seeds must be integers")
        if self.a == 0 and self.b == 0:
            raise ValueError("seeds (0, 0) give the zero sequence")

    def __iter__(self):
        return iter((self.a, self.b))

    @classmethod
    def parse(cls, text: str) -> "SeedPair":
        """Parse ``"A,B"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'A,B', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


FIBONACCI = SeedPair(0, 1)
LUCAS = SeedPair(2, 1)


@dataclass(frozen=True)
class Decomposition:
    """Coefficients with G(n) = kf*F(n) + kl*L(n)."""

    kf: Fraction
    kl: Fraction


@dataclass(frozen=True)
class LinearForm:
    """The expression ``ca*A + cb*B`` in the seeds of a generalized sequence."""

    ca: int
    cb: int

    def __add__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return LinearForm(self.ca + other.ca, self.cb + other.cb)

    def __sub__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return LinearForm(self.ca - other.ca, self.cb - other.cb)

    def __neg__(self):
        return LinearForm(-self.ca, -self.cb)

    def __iter__(self):
        return iter((self.ca, self.cb))

    def is_zero(self) -> bool:
        return self.ca == 0 and self.cb == 0

    def evaluate(self, seeds: SeedPair) -> int:
        return self.ca * seeds.a + self.cb * seeds.b

    def cross(self, other: "LinearForm") -> int:
        """Determinant ``ca*other.cb - cb*other.ca``; zero iff proportional."""
        return self.ca * other.cb - self.cb * other.ca


def _fib_pair(n: int) -> tuple[int, int]:
    # (F(n), F(n+1)) for n >= 0, scanning bits from the top.
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def _fib_neighbours(n: int) -> tuple[int, int, int]:
    """(F(n-1), F(n), F(n+1)) for any integer n."""
    if n >= 0:
        f, g = _fib_pair(n)
        return g - f, f, g
    k = -n
    f, g = _fib_pair(k)
    # F(-k) = (-1)^(k+1) F(k);  F(-k-1) = (-1)^k F(k+1);  F(-k+1) = (-1)^k F(k-1)
    sign = -1 if k % 2 else 1
    return sign * g, -sign * f, sign * (g - f)


def fib(n: int, *, cap: int | None = None) -> int:
    """Fibonacci number F(n), F(0) = 0, F(1) = 1, any integer n."""
    _check_cap(n, cap)
    return _fib_neighbours(n)[1]


def lucas(n: int, *, cap: int | None = None) -> int:
    """Lucas number L(n), L(0) = 2, L(1) = 1, any integer n."""
    _check_cap(n, cap)
    prev, _, nxt = _fib_neighbours(n)
    return prev + nxt


def gen_term(seeds: SeedPair, n: int, *, cap: int | None = None) -> int:
    """Term G(n) of the generalized sequence starting ``seeds``."""
    _check_cap(n, cap)
    prev, cur, _ = _fib_neighbours(n)
    return seeds.a * prev + seeds.b * cur


def gen_linear_form(n: int, *, cap: int | None = None) -> LinearForm:
    """Coefficients (F(n-1), F(n)) such that G(n) = F(n-1)*A + F(n)*B."""
    _check_cap(n, cap)
    prev, cur, _ = _fib_neighbours(n)
    return LinearForm(prev, cur)


def decompose(seeds: SeedPair) -> Decomposition:
    """Express the sequence as a rational combination of F and L.

    Solves [[F0, L0], [F1, L1]] @ (kf, kl) = (A, B) by Cramer's rule;
    the determinant is -2, so the system is always solvable.
    """
    f0, l0, f1, l1 = fib(0), lucas(0), fib(1), lucas(1)
    det = f0 * l1 - l0 * f1
    kf = Fraction(seeds.a * l1 - l0 * seeds.b, det)
    kl = Fraction(f0 * seeds.b - seeds.a * f1, det)
    return Decomposition(kf, kl)
