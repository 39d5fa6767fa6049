"""Sums of equidistant terms G(m*k + i), k = n1..n2.

Two independent evaluations are provided.  :func:`equidistant_sum_direct`
adds the terms one by one; :func:`equidistant_sum_closed` evaluates the
geometric-series closed form in Q(sqrt 5)::

    1/(a^m - b^m) * [ (G(m+i) - b^m G(i)) (a^(m n1) - a^(m(n2+1))) / (1 - a^m)
                    - (G(m+i) - a^m G(i)) (b^(m n1) - b^(m(n2+1))) / (1 - b^m) ]

with a, b the golden ratio and its conjugate.  Both must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClosedFormError
from .qfield import PHI, PSI, QuadNum, power
from .seqcore import SeedPair, gen_term


@dataclass(frozen=True)
class SumQuery:
    seeds: SeedPair
    m: int
    i: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"distance m must be >= 1, got {self.m}")
        if not 0 <= self.i < self.m:
            raise ValueError(f"offset i must satisfy 0 <= i < m, got i={self.i}, m={self.m}")
        if self.n1 > self.n2:
            raise ValueError(f"empty range: n1={self.n1} > n2={self.n2}")


def equidistant_sum_direct(q: SumQuery, *, cap: int | None = None) -> int:
    return sum(gen_term(q.seeds, q.m * k + q.i, cap=cap) for k in range(q.n1, q.n2 + 1))


def equidistant_sum_closed(q: SumQuery, *, cap: int | None = None) -> int:
    """Closed-form value of the sum; raises ClosedFormError if it is not an integer."""
    m = q.m
    am = power(PHI, m)
    bm = power(PSI, m)
    g_i = gen_term(q.seeds, q.i, cap=cap)
    g_mi = gen_term(q.seeds, m + q.i, cap=cap)

    a_span = power(PHI, m * q.n1) - power(PHI, m * (q.n2 + 1))
    b_span = power(PSI, m * q.n1) - power(PSI, m * (q.n2 + 1))
    a_part = (g_mi - bm * g_i) * a_span / (1 - am)
    b_part = (g_mi - am * g_i) * b_span / (1 - bm)
    total: QuadNum = (a_part - b_part) / (am - bm)

    if not total.is_integer():
        raise ClosedFormError(f"closed form gave non-integer {total} for {q}")
    return int(total.p)
