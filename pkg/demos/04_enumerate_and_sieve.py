"""
The 133 small Salem numbers and the mod-2 sieve
===============================================

Enumerate every Salem number of degree at most 10 up to Dolgachev's
lambda_D and sort them into possible and impossible dynamical degrees.
"""

import time
from collections import Counter

from enriques_salem.salem import certify_salem, enumerate_salem, truncated_lambda
from enriques_salem.sieve import DOLGACHEV, classify, report

lam_d = certify_salem(DOLGACHEV)
t0 = time.perf_counter()
found = enumerate_salem(10, lam_d, inclusive=True)
print(f"{len(found)} Salem numbers in {time.perf_counter() - t0:.1f} s")
print("by degree:", dict(sorted(Counter(s.degree for s in found).items())))

# The first few, smallest first
for s in found[:8]:
    print(" ", s)

# ## Sieve
r = classify(found)
print("\n".join(r.summary_lines()))

# A few rows of the report
print("\n".join(report(r, "tsv").splitlines()[:10]))

smallest = r.smallest_candidate
print("smallest possible dynamical degree:", truncated_lambda(smallest), smallest.poly)
