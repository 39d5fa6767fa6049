"""Residual checks for classical Fibonacci/Lucas identities.

Every ``check_*`` function returns ``lhs - rhs`` as an exact integer (or a
tuple of them), so a failure carries its magnitude.  The ``F`` and ``L``
keyword arguments select the evaluators; tests swap in broken ones to make
sure failures are actually detected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple

from .seqcore import fib, lucas

Evaluator = Callable[[int], int]


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def check_simson(n: int, *, F: Evaluator = fib) -> int:
    """F(n-1) F(n+1) - F(n)^2 = (-1)^n."""
    return F(n - 1) * F(n + 1) - F(n) ** 2 - _sign(n)


def check_gelin_cesaro(n: int, *, F: Evaluator = fib) -> int:
    """F(n)^4 - F(n-2) F(n-1) F(n+1) F(n+2) = 1."""
    return F(n) ** 4 - F(n - 2) * F(n - 1) * F(n + 1) * F(n + 2) - 1


def check_hoggatt_bergum(
    n: int, *, F: Evaluator = fib, L: Evaluator = lucas
) -> tuple[int, int, int, int]:
    s = _sign(n + 1)
    return (
        F(n) * F(n + 3) ** 2 - F(n + 2) ** 3 - s * F(n + 1),
        F(n + 3) * F(n) ** 2 - F(n + 1) ** 3 - s * F(n + 2),
        F(n) * F(n + 3) ** 2 - F(n + 4) * F(n + 1) ** 2 - s * L(n + 2),
        F(n) * L(n + 3) ** 2 - F(n + 4) * L(n + 1) ** 2 - s * L(n + 2),
    )


def check_cerin(
    i: int,
    k: int,
    *,
    F: Evaluator = fib,
    L: Evaluator = lucas,
    as_printed: bool = False,
) -> tuple[int, int, int, int, int, int]:
    """The six block-sum identities of Cerin, for i >= 0 and any k.

    Residual order: plain 4i+4 terms, alternating 4i+4 terms, plain 4i+2,
    alternating 4i+2, plain 4i+1, alternating 4i+1.

    The two even-length alternating sums equal the *negative* of the
    products they are usually printed with::

        sum_{j=0}^{4i+3} (-1)^j F(k+j) = -F(2i+2) L(k+2i)
        sum_{j=0}^{4i+1} (-1)^j F(k+j) = -L(2i+1) F(k+2i-1)

    (already at i = 0, k = 0: 0 - 1 + 1 - 2 = -2 = -F(2) L(0)).  Pass
    ``as_printed=True`` to check the unnegated versions instead; their
    residuals are then exactly -2 times the right-hand side.
    """
    if i < 0:
        raise ValueError(f"i must be non-negative, got {i}")
    even_alt_sign = 1 if as_printed else -1

    def plain(last):
        return sum(F(k + j) for j in range(last + 1))

    def alternating(last):
        return sum(_sign(j) * F(k + j) for j in range(last + 1))

    return (
        plain(4 * i + 3) - F(2 * i + 2) * L(k + 2 * i + 3),
        alternating(4 * i + 3) - even_alt_sign * F(2 * i + 2) * L(k + 2 * i),
        plain(4 * i + 1) - L(2 * i + 1) * F(k + 2 * i + 2),
        alternating(4 * i + 1) - even_alt_sign * L(2 * i + 1) * F(k + 2 * i - 1),
        plain(4 * i) - (F(2 * i) * L(k + 2 * i) + L(2 * i + 1) * F(k + 2 * i)),
        alternating(4 * i) - (F(k + 2 * i) * L(2 * i + 1) - L(k + 2 * i) * F(2 * i)),
    )


class ProductResidual(NamedTuple):
    signed: int
    # residual of F(m)L(n) = F(m+n) + F(m-n); only defined for even n
    unsigned: int | None


def check_fib_lucas_product(
    m: int, n: int, *, F: Evaluator = fib, L: Evaluator = lucas
) -> ProductResidual:
    """F(m) L(n) = F(m+n) + (-1)^n F(m-n), and its even-n special case."""
    lhs = F(m) * L(n)
    signed = lhs - F(m + n) - _sign(n) * F(m - n)
    unsigned = lhs - F(m + n) - F(m - n) if n % 2 == 0 else None
    return ProductResidual(signed, unsigned)


@dataclass
class IdentityReport:
    identity_name: str
    index_window: tuple[int, int]
    failures: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_suite(
    window: tuple[int, int],
    *,
    cerin_max_i: int = 10,
    F: Evaluator = fib,
    L: Evaluator = lucas,
) -> list[IdentityReport]:
    """Sweep every identity over the inclusive index window ``(lo, hi)``.

    Single-index identities use every n in the window; Cerin uses every k in
    the window and every 0 <= i <= cerin_max_i; the product identity uses
    every pair (m, n) from the window.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    # per-call memo: each evaluator is asked for the same few hundred indices many times
    F = lru_cache(maxsize=None)(F)
    L = lru_cache(maxsize=None)(L)
    idx = range(lo, hi + 1)

    reports = {}

    def report(name):
        if name not in reports:
            reports[name] = IdentityReport(name, (lo, hi))
        return reports[name]

    def record(name, point, residual):
        rep = report(name)
        if residual:
            rep.failures.append((point, residual))

    for n in idx:
        record("simson", (n,), check_simson(n, F=F))
    for n in idx:
        record("gelin_cesaro", (n,), check_gelin_cesaro(n, F=F))
    for j in range(4):
        report(f"hoggatt_bergum_{j + 1}")
    for n in idx:
        for j, r in enumerate(check_hoggatt_bergum(n, F=F, L=L)):
            record(f"hoggatt_bergum_{j + 1}", (n,), r)
    for j in range(6):
        report(f"cerin_{j + 1}")
    for i in range(cerin_max_i + 1):
        for k in idx:
            for j, r in enumerate(check_cerin(i, k, F=F, L=L)):
                record(f"cerin_{j + 1}", (i, k), r)
    report("fib_lucas_product")
    report("fib_lucas_product_even")
    for m in idx:
        for n in idx:
            res = check_fib_lucas_product(m, n, F=F, L=L)
            record("fib_lucas_product", (m, n), res.signed)
            if res.unsigned is not None:
                record("fib_lucas_product_even", (m, n), res.unsigned)
    return list(reports.values())
