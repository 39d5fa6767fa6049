"""
Sums of equally spaced terms
============================

The sum G(m*n1 + i) + G(m*(n1+1) + i) + ... + G(m*n2 + i) has a closed form
built from powers of the golden ratio.  Evaluated in Q(sqrt 5) it must
come out as exactly the same integer as adding the terms directly.
"""

from fibgrid import SeedPair, SumQuery, equidistant_sum_closed, equidistant_sum_direct

queries = [
    SumQuery(SeedPair(0, 1), m=2, i=0, n1=0, n2=2),
    SumQuery(SeedPair(1, 3), m=3, i=2, n1=1, n2=3),
    SumQuery(SeedPair(2, 1), m=5, i=4, n1=-6, n2=9),
    SumQuery(SeedPair(-17, 40), m=12, i=7, n1=-20, n2=20),
]

for q in queries:
    direct = equidistant_sum_direct(q)
    closed = equidistant_sum_closed(q)
    print(f"seeds={tuple(q.seeds)} m={q.m} i={q.i} k=[{q.n1},{q.n2}]  "
          f"direct={direct}  closed={closed}  equal={direct == closed}")
