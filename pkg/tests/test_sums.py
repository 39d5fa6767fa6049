import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibgrid.errors import ClosedFormError
from fibgrid.qfield import QuadNum
from fibgrid.seqcore import FIBONACCI, LUCAS, SeedPair, gen_term
from fibgrid.sums import SumQuery, equidistant_sum_closed, equidistant_sum_direct
from oracles import recurrence_terms


def oracle_sum(q):
    lo = min(q.m * q.n1 + q.i, 0)
    hi = max(q.m * q.n2 + q.i, 1)
    t = recurrence_terms(q.seeds.a, q.seeds.b, lo, hi)
    return sum(t[q.m * k + q.i] for k in range(q.n1, q.n2 + 1))


@pytest.mark.parametrize(
    "seeds, m, i, n1, n2, expected",
    [
        (FIBONACCI, 2, 0, 0, 2, 4),
        (FIBONACCI, 4, 1, 0, 1, 6),
        (LUCAS, 1, 0, 0, 4, 17),
        (FIBONACCI, 4, 0, 0, 2, 24),
        (SeedPair(1, 3), 3, 2, 1, 3, 416),
    ],
)
def test_examples(seeds, m, i, n1, n2, expected):
    q = SumQuery(seeds, m, i, n1, n2)
    assert oracle_sum(q) == expected
    assert equidistant_sum_direct(q) == expected
    assert equidistant_sum_closed(q) == expected


@pytest.mark.parametrize(
    "m, i, n1, n2", [(0, 0, 0, 1), (3, 3, 0, 1), (3, -1, 0, 1), (2, 0, 2, 1)]
)
def test_invalid_queries(m, i, n1, n2):
    with pytest.raises(ValueError):
        SumQuery(FIBONACCI, m, i, n1, n2)


def random_queries(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b = rng.randint(-100, 100), rng.randint(-100, 100)
        if a == b == 0:
            continue
        m = rng.randint(1, 12)
        n1 = rng.randint(-20, 20)
        out.append(SumQuery(SeedPair(a, b), m, rng.randrange(m), n1, rng.randint(n1, 20)))
    return out


def test_closed_equals_direct_and_oracle():
    for q in random_queries(500, seed=20240307):
        d = equidistant_sum_direct(q)
        assert equidistant_sum_closed(q) == d
        assert oracle_sum(q) == d


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_single_term_and_split(data):
    a = data.draw(st.integers(-100, 100))
    b = data.draw(st.integers(-100, 100).filter(lambda x: (a, x) != (0, 0)))
    m = data.draw(st.integers(1, 12))
    i = data.draw(st.integers(0, m - 1))
    n1 = data.draw(st.integers(-20, 20))
    n2 = data.draw(st.integers(n1, 20))
    s = SeedPair(a, b)
    single = SumQuery(s, m, i, n1, n1)
    assert equidistant_sum_closed(single) == equidistant_sum_direct(single) == gen_term(s, m * n1 + i)
    if n2 > n1:
        t = data.draw(st.integers(n1, n2 - 1))
        whole = equidistant_sum_closed(SumQuery(s, m, i, n1, n2))
        left = equidistant_sum_closed(SumQuery(s, m, i, n1, t))
        right = equidistant_sum_closed(SumQuery(s, m, i, t + 1, n2))
        assert whole == left + right


def test_closed_form_rejects_non_integer(monkeypatch):
    import fibgrid.sums as sums

    # a wrong conjugate root leaves an irrational part behind
    monkeypatch.setattr(sums, "PSI", QuadNum(Fraction(1, 2), Fraction(-1, 3)))
    with pytest.raises(ClosedFormError):
        sums.equidistant_sum_closed(SumQuery(FIBONACCI, 2, 0, 0, 2))
