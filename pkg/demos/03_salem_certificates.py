"""
Certifying Salem polynomials
============================

Every claim about a Salem number here rests on exact Sturm counts of the
trace polynomial T with p(x) = x^d T(x + 1/x).
"""

from enriques_salem.arith import IntPoly, cyclotomic, sturm_count
from enriques_salem.salem import NotSalem, certify_salem, compare_lambda, truncated_lambda

dolgachev = IntPoly([1, -1, -2, -1, 1])
s = certify_salem(dolgachev)
print("p =", s.poly)
print("T =", s.trace.to_str("y"))
print("roots of T in (2, oo):", sturm_count(s.trace, 2, None))
print("roots of T in (-2, 2):", sturm_count(s.trace, -2, 2))
print("lambda in", [float(s.interval.lo), float(s.interval.hi)], "->", truncated_lambda(s))

# ## Rejections come with a reason
for p in (cyclotomic(12), dolgachev * cyclotomic(3), IntPoly([1, -3, 1])):
    try:
        certify_salem(p)
    except NotSalem as exc:
        print(f"{str(p):40s} {exc.reason}")

# ## Exact comparison
lehmer = certify_salem(IntPoly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]))
print(truncated_lambda(lehmer), "<", truncated_lambda(s), ":", compare_lambda(lehmer, s) < 0)
