"""Diagonal sums of square grids filled with a generalized Fibonacci sequence.

An ``m x m`` grid with start ``s`` holds term ``s + r*m + c`` in cell (r, c).
The main diagonal visits indices ``s + k*(m+1)`` and the anti-diagonal
``s + (k+1)*(m-1)``, k = 0..m-1.  Each diagonal sum is a linear form in the
seeds (A, B); for odd ``m = 2n+1`` the two forms are proportional, so the
ratio c(n) does not depend on the seeds (nor on ``s``).

c(n) is certified by several independent routes:

* exact linear forms in the seeds (:func:`ratio_c`);
* the closed-form equidistant sums evaluated in Q(sqrt 5);
* ``prefactor(n) * d_f(n)``, with ``d_f(n) == d_l(n)``;
* direct summation over the Fibonacci grid and over the Lucas grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import VerificationError
from .qfield import PHI, PSI, power
from .seqcore import (
    FIBONACCI,
    LUCAS,
    LinearForm,
    SeedPair,
    fib,
    gen_linear_form,
    gen_term,
    lucas,
)
from .sums import SumQuery, equidistant_sum_closed

DISPLAY_CAP = 15

# seed pairs tried, in order, when searching for a non-constancy witness
_WITNESS_CANDIDATES = (
    SeedPair(1, 0),
    SeedPair(0, 1),
    SeedPair(1, 1),
    SeedPair(2, 1),
    SeedPair(1, 2),
    SeedPair(1, -1),
    SeedPair(3, 1),
    SeedPair(1, 3),
)


@dataclass(frozen=True)
class GridSpec:
    order: int
    start: int = 0
    seeds: SeedPair = FIBONACCI

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"grid order must be >= 1, got {self.order}")

    def cell_index(self, r: int, c: int) -> int:
        return self.start + r * self.order + c


@dataclass(frozen=True)
class RatioResult:
    """Outcome of :func:`ratio_general`.

    Exactly one of ``constant`` and ``witness`` is set.  ``witness`` holds two
    (seeds, ratio) pairs with different ratios.  ``null_seeds`` is a primitive
    seed pair whose anti-diagonal sum is zero (so the ratio is undefined
    there); every grid has one up to scaling.
    """

    constant: Fraction | None
    witness: tuple[tuple[SeedPair, Fraction], tuple[SeedPair, Fraction]] | None
    null_seeds: SeedPair | None = None

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


@dataclass(frozen=True)
class DfDlPair:
    d_f: Fraction
    d_l: Fraction
    prefactor: Fraction


@dataclass(frozen=True)
class Theorem2Certificate:
    n: int
    pair: DfDlPair
    constant: Fraction
    routes: dict

    @property
    def d_f(self):
        return self.pair.d_f

    @property
    def d_l(self):
        return self.pair.d_l

    @property
    def prefactor(self):
        return self.pair.prefactor


def main_diag_indices(order: int, start: int = 0) -> list[int]:
    return [start + k * (order + 1) for k in range(order)]


def anti_diag_indices(order: int, start: int = 0) -> list[int]:
    return [start + (k + 1) * (order - 1) for k in range(order)]


def _form_sum(indices, cap):
    total = LinearForm(0, 0)
    for i in indices:
        total = total + gen_linear_form(i, cap=cap)
    return total


def main_diag_form(order: int, start: int = 0, *, cap: int | None = None) -> LinearForm:
    if order < 1:
        raise ValueError(f"grid order must be >= 1, got {order}")
    return _form_sum(main_diag_indices(order, start), cap)


def anti_diag_form(order: int, start: int = 0, *, cap: int | None = None) -> LinearForm:
    if order < 1:
        raise ValueError(f"grid order must be >= 1, got {order}")
    return _form_sum(anti_diag_indices(order, start), cap)


def diagonal_sums(spec: GridSpec, *, cap: int | None = None) -> tuple[int, int]:
    """(main, anti) diagonal sums of the grid, without materialising it."""
    main = main_diag_form(spec.order, spec.start, cap=cap).evaluate(spec.seeds)
    anti = anti_diag_form(spec.order, spec.start, cap=cap).evaluate(spec.seeds)
    return main, anti


def proportionality_certificate(order: int, start: int = 0) -> int:
    """Cross product of the two diagonal forms; zero iff the ratio is seed-free."""
    return main_diag_form(order, start).cross(anti_diag_form(order, start))


def _form_ratio(num: LinearForm, den: LinearForm) -> Fraction:
    # assumes num is proportional to den and den is not the zero form
    if den.ca != 0:
        return Fraction(num.ca, den.ca)
    return Fraction(num.cb, den.cb)


def _null_seeds(form: LinearForm) -> SeedPair:
    g = gcd(form.ca, form.cb)
    a, b = -form.cb // g, form.ca // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return SeedPair(a, b)


def ratio_c(n: int) -> Fraction:
    """Seed-independent diagonal ratio c(n) of the (2n+1) x (2n+1) grid.

    c(0) = 1 by convention: the 1 x 1 grid has one cell on both diagonals.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    order = 2 * n + 1
    main = main_diag_form(order)
    anti = anti_diag_form(order)
    if main.cross(anti) != 0 or anti.is_zero():
        raise VerificationError(
            f"diagonal forms {main} and {anti} are not proportional for n={n}"
        )
    return _form_ratio(main, anti)


def ratio_general(order: int, start: int = 0) -> RatioResult:
    """Constant diagonal ratio of any grid, or a witness that none exists."""
    main = main_diag_form(order, start)
    anti = anti_diag_form(order, start)
    if anti.is_zero():
        raise ValueError(f"anti-diagonal form vanishes for order={order}, start={start}")
    null = _null_seeds(anti)
    if main.cross(anti) == 0:
        return RatioResult(_form_ratio(main, anti), None, null)

    seen: list[tuple[SeedPair, Fraction]] = []
    for seeds in _WITNESS_CANDIDATES:
        den = anti.evaluate(seeds)
        if den == 0:
            continue
        r = Fraction(main.evaluate(seeds), den)
        for other in seen:
            if other[1] != r:
                return RatioResult(None, (other, (seeds, r)), null)
        seen.append((seeds, r))
    # two non-proportional forms cannot agree on three independent directions
    raise VerificationError(f"no witness found for order={order}, start={start}")


def _check_n(n):
    if n < 1:
        raise ValueError(f"n must be >= 1 (denominators vanish at 0), got {n}")


def d_f(n: int) -> Fraction:
    """Fibonacci-form factor of c(n), from F at indices 2n, 2n+2, 4n^2+2n, 4n^2+4n, 4n^2+6n+2."""
    _check_n(n)
    q = 4 * n * n
    num = -fib(2 * n + 2) - fib(q + 4 * n) + fib(q + 6 * n + 2)
    den = -fib(2 * n) - fib(q + 2 * n) + fib(q + 4 * n)
    return Fraction(num, den)


def d_l(n: int) -> Fraction:
    """Lucas-form counterpart of :func:`d_f`; equal to it for every n >= 1."""
    _check_n(n)
    q = 4 * n * n
    num = 2 - lucas(2 * n + 2) + lucas(q + 4 * n) - lucas(q + 6 * n + 2)
    den = -2 + lucas(2 * n) + lucas(q + 2 * n) - lucas(q + 4 * n)
    return Fraction(num, den)


def _rational(x, what):
    if not x.is_rational():
        raise VerificationError(f"{what} is irrational: {x}")
    return x.p


def d_f_binet(n: int) -> Fraction:
    """d_f(n) written in powers of the golden ratio a and its conjugate b."""
    _check_n(n)
    a = lambda k: power(PHI, k)  # noqa: E731
    b = lambda k: power(PSI, k)  # noqa: E731
    t = 4 * n * (n + 1)
    u = 4 * n * n + 6 * n + 2
    num = (
        b(2 * n + 2) * (b(t) - 1)
        + a(u) * (b(2 * n + 2) - 1)
        - a(2 * n + 2) * (b(u) - 1)
    )
    den = b(2 * n) - b(t) - a(t) * (b(2 * n) - 1) + a(2 * n) * (b(t) - 1)
    return _rational(-num / den, "d_f")


def d_l_binet(n: int) -> Fraction:
    """d_l(n) written in powers of the golden ratio a and its conjugate b."""
    _check_n(n)
    a = lambda k: power(PHI, k)  # noqa: E731
    b = lambda k: power(PSI, k)  # noqa: E731
    t = 4 * n * (n + 1)
    u = 4 * n * n + 6 * n + 2
    num = (
        2
        - b(2 * n + 2)
        + (a(2 * n + 2) - 1) * b(u)
        + a(2 * n + 2) * (a(t) * (b(2 * n + 2) - 1) - 1)
    )
    den = b(2 * n) - b(t) + a(t) * (b(2 * n) - 1) + a(2 * n) * (1 - 2 * b(2 * n) + b(t))
    return _rational(num / den, "d_l")


def prefactor(n: int) -> Fraction:
    """(a^2n - 1)(b^2n - 1) / ((a^(2n+2) - 1)(b^(2n+2) - 1)), evaluated in Q(sqrt 5)."""
    _check_n(n)
    num = (power(PHI, 2 * n) - 1) * (power(PSI, 2 * n) - 1)
    den = (power(PHI, 2 * n + 2) - 1) * (power(PSI, 2 * n + 2) - 1)
    return _rational(num / den, "prefactor")


def prefactor_lucas(n: int) -> Fraction:
    """The prefactor simplified with (ab)^2n = 1: (2 - L(2n)) / (2 - L(2n+2))."""
    _check_n(n)
    return Fraction(2 - lucas(2 * n), 2 - lucas(2 * n + 2))


def d_pair(n: int) -> DfDlPair:
    return DfDlPair(d_f(n), d_l(n), prefactor(n))


def _closed_form_ratio(n, seeds):
    main = equidistant_sum_closed(SumQuery(seeds, 2 * (n + 1), 0, 0, 2 * n))
    anti = equidistant_sum_closed(SumQuery(seeds, 2 * n, 0, 1, 2 * n + 1))
    return Fraction(main, anti)


def _direct_ratio(n, term):
    order = 2 * n + 1
    main = sum(term(i) for i in main_diag_indices(order))
    anti = sum(term(i) for i in anti_diag_indices(order))
    return Fraction(main, anti)


def verify_theorem2(n: int) -> Theorem2Certificate:
    """Compute c(n) by every route and raise VerificationError on any mismatch."""
    _check_n(n)
    pair = d_pair(n)
    if pair.d_f != pair.d_l:
        raise VerificationError(f"d_f({n}) = {pair.d_f} but d_l({n}) = {pair.d_l}")
    pl = prefactor_lucas(n)
    if pair.prefactor != pl:
        raise VerificationError(
            f"prefactor({n}) = {pair.prefactor} in Q(sqrt 5) but {pl} from Lucas numbers"
        )
    constant = ratio_c(n)
    routes = {
        "linear_forms": constant,
        "closed_form_fibonacci": _closed_form_ratio(n, FIBONACCI),
        "closed_form_lucas": _closed_form_ratio(n, LUCAS),
        "prefactor_times_d_f": pair.prefactor * pair.d_f,
        "fibonacci_grid": _direct_ratio(n, fib),
        "lucas_grid": _direct_ratio(n, lucas),
    }
    for name, value in routes.items():
        if value != constant:
            raise VerificationError(f"route {name} gives {value} for n={n}, expected {constant}")
    return Theorem2Certificate(n, pair, constant, routes)


def _cross_sides(n):
    q = 4 * n * n
    F, L = fib, lucas
    f_top = -F(2 * n + 2) - F(q + 4 * n) + F(q + 6 * n + 2)
    f_bot = -F(2 * n) - F(q + 2 * n) + F(q + 4 * n)
    l_top = 2 - L(2 * n + 2) + L(q + 4 * n) - L(q + 6 * n + 2)
    l_bot = -2 + L(2 * n) + L(q + 2 * n) - L(q + 4 * n)
    return f_top * l_bot, f_bot * l_top


def verify_cross_identity(n: int) -> int:
    """Residual of d_f = d_l after clearing denominators (all-integer check)."""
    _check_n(n)
    lhs, rhs = _cross_sides(n)
    return lhs - rhs


def cross_identity_reduced(n: int) -> tuple[int, int]:
    """(both sides of the cross identity, the same value after product-to-sum reduction).

    Each product F(x) L(y) with even y is replaced by F(x+y) + F(x-y), which
    collapses the cross identity to a signed sum of 14 Fibonacci numbers.
    """
    _check_n(n)
    q = 4 * n * n
    F = fib
    lhs, _ = _cross_sides(n)
    reduced = (
        2 * F(q + 4 * n) - F(2) - F(2 * n) + F(2 * n + 2) + F(q - 2)
        - F(q + 2 * n) - F(q + 6 * n) - F(2 * q + 6 * n)
        + F(2 * q + 8 * n) - F(q + 2 * n - 2) - F(q + 6 * n + 2)
        + F(q + 8 * n + 2) + F(2 * q + 8 * n + 2) - F(2 * q + 10 * n + 2)
    )
    return lhs, reduced


@dataclass(frozen=True)
class RenderedGrid:
    spec: GridSpec
    rows: tuple[tuple[int, ...], ...]
    main_sum: int
    anti_sum: int

    @property
    def ratio(self) -> Fraction | None:
        if self.anti_sum == 0:
            return None
        return Fraction(self.main_sum, self.anti_sum)

    def is_main(self, r: int, c: int) -> bool:
        return r == c

    def is_anti(self, r: int, c: int) -> bool:
        return r + c == self.spec.order - 1


def render_grid(spec: GridSpec, *, display_cap: int = DISPLAY_CAP) -> RenderedGrid:
    """Materialise the grid (row-major) together with both diagonal sums."""
    if spec.order > display_cap:
        raise ValueError(f"order {spec.order} exceeds display cap {display_cap}")
    m = spec.order
    rows = tuple(
        tuple(gen_term(spec.seeds, spec.cell_index(r, c)) for c in range(m)) for r in range(m)
    )
    main = sum(rows[k][k] for k in range(m))
    anti = sum(rows[k][m - 1 - k] for k in range(m))
    return RenderedGrid(spec, rows, main, anti)
