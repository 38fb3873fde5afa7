"""
Possible orders of f_N
======================

Walk through the cyclotomic profiles of the rank-12 lattice N, apply the
three filters and collect the orders that survive.
"""

from collections import Counter

from enriques_salem import spectra

# ## Profiles
# A profile is a multiset of cyclotomic indices whose totients add up to 12.
profiles = list(spectra.enumerate_profiles(12))
print(len(profiles), "profiles of rank 12")

example = spectra.CyclotomicProfile((8, 15), 12)
print(example, "order", example.order)
print("char poly:", example.char_poly)

# ## Filters one at a time
trace = spectra.trace_profile(example)
print(trace)

catalog = spectra.admissible_orders(12)
why = Counter()
for t in catalog.traces:
    if not t.passed_phibound:
        why["phi > 8"] += 1
    elif not t.passed_a:
        why["(x+1)^2 does not divide mod 2"] += 1
    elif not t.passed_b:
        why["p(1)p(-1) not a square"] += 1
    elif not t.passed_order_exclusion:
        why["excluded order"] += 1
    else:
        why["survives"] += 1
for reason, n in why.most_common():
    print(f"{n:5d}  {reason}")

# ## The catalogue
print(len(catalog.orders), "orders:", sorted(catalog.orders, reverse=True))
print("maximal:", catalog.maximal)
for o in catalog.maximal:
    print(f"  {o:3d} witnessed by {catalog.witnesses[o]}")

# Closing the maximal set under divisors gives back the whole list
assert spectra.divisor_closure(catalog.maximal) == catalog.orders
