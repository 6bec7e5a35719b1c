"""
Exponents past the convergent bound
===================================

When d is a little above n^(1/4), k/d is no longer a convergent but sits
close to one.  Both searches below look for it among combinations of
neighbouring convergents.
"""

import time

from cfrsa import AttackConfig, RsaPublicKey, search_bounds, variant_attack, vvt_attack, wiener_attack

pub = RsaPublicKey(7978886869909, 4603830998027)
cfg = AttackConfig(d_bound=10**7)
print("plain convergents:", wiener_attack(pub, cfg))

b = search_bounds(pub, cfg)
print(f"m = {b.m}, a_(m+1..m+3) = {b.a1}, {b.a2}, {b.a3}")

for attack in (vvt_attack, variant_attack):
    t = time.perf_counter()
    o = attack(pub, cfg)
    print(f"{attack.__name__}: d = {o.d} via {o.witness.family} {o.witness.coefficients}, "
          f"{o.steps} candidates, {time.perf_counter() - t:.2f}s")
    print("   per family:", o.family_steps)
