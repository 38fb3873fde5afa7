"""
Cyclotomic polynomials modulo 2
===============================

Reduce cyclotomic polynomials to GF(2), factor them, and look at why only
a handful of factors can occur in the sieve.
"""

from enriques_salem.arith import cyclotomic, totient
from enriques_salem.gf2 import F7, F15, f2_factor, f2_is_irreducible, reduce_mod2

for m in (1, 3, 5, 7, 9, 15, 13, 21, 26, 28, 36, 42):
    red = reduce_mod2(cyclotomic(m))
    print(f"m = {m:2d}  phi = {totient(m):2d}  F_m = {f2_factor(red)}")

# F_7 and F_15 split into two halves that are reverses of each other
for f in (F7, F15):
    (a, _), (b, _) = f2_factor(f)
    print(f"{f}  =  ({a}) * ({b});  reverse of first half is {a.reverse()}")

# ## Even indices add nothing new
# F_{2m} equals F_m, and F_{4m} is its square
for m in (3, 5, 7):
    print(m, reduce_mod2(cyclotomic(2 * m)) == reduce_mod2(cyclotomic(m)),
          reduce_mod2(cyclotomic(4 * m)) == reduce_mod2(cyclotomic(m)) ** 2)

print("x^6 + x^3 + 1 irreducible:", f2_is_irreducible(reduce_mod2(cyclotomic(9))))
