"""Exit criteria.  Every equality is exact; runtimes are wall-clock limits.

Each test records a one-line summary; conftest prints one PASS/FAIL line per
criterion at the end of the run.
"""

import random
import time
from fractions import Fraction

import pytest

from fibgrid.grid import (
    GridSpec,
    anti_diag_form,
    anti_diag_indices,
    d_f,
    d_l,
    main_diag_form,
    main_diag_indices,
    prefactor,
    ratio_c,
    ratio_general,
    render_grid,
    verify_cross_identity,
)
from fibgrid.identities import run_suite
from fibgrid.qfield import binet_fib, binet_lucas
from fibgrid.seqcore import FIBONACCI, LUCAS, LinearForm, SeedPair, fib, gen_term, lucas
from fibgrid.sums import SumQuery, equidistant_sum_closed, equidistant_sum_direct
from oracles import brute_ratio

criterion = pytest.mark.criterion


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


@criterion(1, "3x3 ratio is 2 with forms 16A+24B and 8A+12B, < 1 ms")
def test_criterion_1_three_by_three(request):
    best = min(_timed(lambda: ratio_c(1))[1] for _ in range(20))
    assert ratio_c(1) == 2
    assert main_diag_form(3) == LinearForm(16, 24)
    assert anti_diag_form(3) == LinearForm(8, 12)
    request.node.acceptance_detail = f"{best * 1e3:.3f} ms"
    assert best < 1e-3


@criterion(2, "3x3 Fibonacci grids from terms 1 and 2 give (40, 20) and (64, 32)")
def test_criterion_2_fibonacci_3x3(request):
    sums = [(g.main_sum, g.anti_sum) for g in (render_grid(GridSpec(3, s)) for s in (1, 2))]
    assert sums == [(40, 20), (64, 32)]
    assert Fraction(40, 20) == Fraction(64, 32) == 2
    request.node.acceptance_detail = f"{sums}"


@criterion(3, "5x5 Fibonacci grids give (79453, 12815) and (128557, 20735) = 31/5")
def test_criterion_3_fibonacci_5x5(request):
    sums = [(g.main_sum, g.anti_sum) for g in (render_grid(GridSpec(5, s)) for s in (1, 2))]
    assert sums == [(79453, 12815), (128557, 20735)]
    assert all(Fraction(m, a) == Fraction(31, 5) for m, a in sums)
    assert Fraction(31, 5) == Fraction("6.2")
    request.node.acceptance_detail = f"{sums}"


def _closed_route(n):
    main = equidistant_sum_closed(SumQuery(FIBONACCI, 2 * (n + 1), 0, 0, 2 * n))
    anti = equidistant_sum_closed(SumQuery(FIBONACCI, 2 * n, 0, 1, 2 * n + 1))
    return Fraction(main, anti)


def _linear_form_route(n):
    m = 2 * n + 1
    main, anti = main_diag_form(m), anti_diag_form(m)
    assert main.cross(anti) == 0
    return Fraction(main.ca, anti.ca)


@criterion(4, "n=1..12: three routes agree, d_F = d_L, cross identity 0, < 10 s")
def test_criterion_4_three_routes(request):
    def sweep():
        values = {}
        for n in range(1, 13):
            routes = (_linear_form_route(n), _closed_route(n), prefactor(n) * d_f(n))
            assert len(set(routes)) == 1, (n, routes)
            assert d_f(n) == d_l(n)
            assert verify_cross_identity(n) == 0
            assert ratio_c(n) == routes[0]
            values[n] = routes[0]
        return values

    values, elapsed = _timed(sweep)
    assert values[1] == 2 and values[2] == Fraction(31, 5)
    # brute-force materialised grids for the first few n
    for n in range(1, 6):
        assert brute_ratio(2 * n + 1, 0, 0, 1) == values[n]
    request.node.acceptance_detail = f"{elapsed:.3f} s"
    assert elapsed < 10


@criterion(5, "seed independence and shift invariance, n=1..8, s in [-20, 20], < 30 s")
def test_criterion_5_seed_and_shift(request):
    rng = random.Random(1729)

    def sweep():
        checked = skipped = 0
        for n in range(1, 9):
            c = ratio_c(n)
            order = 2 * n + 1
            seeds = []
            while len(seeds) < 50:
                a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
                if (a, b) != (0, 0):
                    seeds.append(SeedPair(a, b))
            for s in range(-20, 21):
                main_idx = main_diag_indices(order, s)
                anti_idx = anti_diag_indices(order, s)
                for sp in seeds:
                    main = sum(gen_term(sp, i) for i in main_idx)
                    anti = sum(gen_term(sp, i) for i in anti_idx)
                    if anti == 0:
                        skipped += 1
                        continue
                    assert Fraction(main, anti) == c, (n, s, sp)
                    checked += 1
        return checked, skipped

    (checked, skipped), elapsed = _timed(sweep)
    request.node.acceptance_detail = f"{checked} grids, {skipped} with zero anti-sum, {elapsed:.2f} s"
    assert checked + skipped == 8 * 41 * 50
    assert elapsed < 30


@criterion(6, "orders 2 and 4 have no constant ratio (concrete witnesses)")
def test_criterion_6_even_orders(request):
    details = []
    for order in (2, 4):
        r = ratio_general(order)
        assert r.constant is None and r.witness is not None
        (s1, r1), (s2, r2) = r.witness
        assert r1 != r2
        assert brute_ratio(order, 0, s1.a, s1.b) == r1
        assert brute_ratio(order, 0, s2.a, s2.b) == r2
        details.append(f"m={order}: {r1} vs {r2}")
    request.node.acceptance_detail = "; ".join(details)


@criterion(7, "500 random equidistant sums: closed form == direct sum, < 10 s")
def test_criterion_7_lemma2(request):
    rng = random.Random(500)

    def sweep():
        for _ in range(500):
            a = b = 0
            while a == b == 0:
                a, b = rng.randint(-100, 100), rng.randint(-100, 100)
            m = rng.randint(1, 12)
            n1 = rng.randint(-20, 20)
            q = SumQuery(SeedPair(a, b), m, rng.randrange(m), n1, rng.randint(n1, 20))
            assert equidistant_sum_closed(q) == equidistant_sum_direct(q), q

    _, elapsed = _timed(sweep)
    request.node.acceptance_detail = f"{elapsed:.3f} s"
    assert elapsed < 10


@criterion(8, "identity catalog over [-100, 100], Cerin 0 <= i <= 10, < 10 s")
def test_criterion_8_identities(request):
    reports, elapsed = _timed(lambda: run_suite((-100, 100), cerin_max_i=10))
    failing = [r.identity_name for r in reports if not r.passed]
    assert len(reports) == 14
    assert failing == []
    request.node.acceptance_detail = (
        f"{len(reports)} identities, {elapsed:.2f} s; "
        "Cerin even-length alternating sums checked with their negated right-hand side"
    )
    assert elapsed < 10


@criterion(9, "Binet in Q(sqrt 5) matches fast doubling for |n| <= 200, < 5 s")
def test_criterion_9_binet(request):
    def sweep():
        for n in range(-200, 201):
            f, l = binet_fib(n), binet_lucas(n)
            assert f.q == 0 and f.p == fib(n)
            assert l.q == 0 and l.p == lucas(n)

    _, elapsed = _timed(sweep)
    request.node.acceptance_detail = f"{elapsed:.3f} s"
    assert elapsed < 5
