"""
Good rational approximations beyond the convergents
===================================================

All a/b with |alpha - a/b| < c/b^2 come from two consecutive convergents
with small coefficients.  Enumerate them and compare with a brute-force
scan.
"""

from fractions import Fraction

from cfrsa import ApproxQuery, brute_force_solutions, enumerate_solutions, worley_form_check

alpha = Fraction(355, 113) + Fraction(1, 10**7)

for c in (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5)):
    q = ApproxQuery(alpha, c, 5000)
    sols = enumerate_solutions(q)
    assert [(s.a, s.b) for s in sols] == brute_force_solutions(q)
    print(f"c = {c}: {len(sols)} solutions")
    for s in sols[:6]:
        print(f"   {s.a}/{s.b}  m={s.m} r={s.r} s={s.s} sign={s.sign:+d}")

# at c = 2 each witness is one of a short list of shapes
for s in enumerate_solutions(ApproxQuery(alpha, Fraction(2), 5000)):
    print(f"{s.a}/{s.b}:", worley_form_check(s))
