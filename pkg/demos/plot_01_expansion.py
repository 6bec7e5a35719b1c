"""
Continued fractions of e/n
==========================

Expand a rational number, list its convergents and check how fast they
approach it.
"""

from fractions import Fraction

from cfrsa import cf_expand

n, e = 7978886869909, 3594320245477
cf = cf_expand(Fraction(e, n))
print("quotients:", list(cf.quotients))

# each convergent p_i/q_i is closer than 1/(q_i q_{i+1})
for i, (p, q) in enumerate(cf.convergents[:10]):
    err = abs(Fraction(e, n) - Fraction(p, q))
    print(f"{i:2d}  {p}/{q}  error*q^2 = {float(err * q * q):.4f}")

# consecutive convergents have determinant +-1
p, q = cf.p, cf.q
print([p(i) * q(i - 1) - p(i - 1) * q(i) for i in range(8)])
