"""
Fibonacci, Lucas and generalized sequences
==========================================

Every sequence with G(k) = G(k-1) + G(k-2) is fixed by its two seeds
A = G(0) and B = G(1).  Terms are exact Python integers for any index,
including negative ones.
"""

from fibgrid import FIBONACCI, LUCAS, SeedPair, decompose, fib, gen_linear_form, gen_term, lucas

# The first few terms on both sides of zero
print("k    ", [k for k in range(-6, 9)])
print("F(k) ", [fib(k) for k in range(-6, 9)])
print("L(k) ", [lucas(k) for k in range(-6, 9)])

# Fast doubling makes huge indices cheap
print("bits in F(100000):", fib(10**5).bit_length())

# A generalized sequence, seeds (1, 3)
seeds = SeedPair(1, 3)
print("G(k), seeds 1,3:", [gen_term(seeds, k) for k in range(12)])

# Symbolically, G(n) = F(n-1)*A + F(n)*B
form = gen_linear_form(9)
print("G(9) =", f"{form.ca}*A + {form.cb}*B", "->", form.evaluate(seeds))

# Any such sequence is a half-integer mix of Fibonacci and Lucas
d = decompose(seeds)
print(f"G(n) = {d.kf}*F(n) + {d.kl}*L(n); check at n=20:",
      gen_term(seeds, 20) == d.kf * fib(20) + d.kl * lucas(20))
print(decompose(FIBONACCI), decompose(LUCAS))
