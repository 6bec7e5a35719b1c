"""
Recovering a small secret exponent from the convergents
========================================================

The fraction k/d is a convergent of e/n when d is small, so testing the
convergents in order factors n.
"""

from cfrsa import AttackConfig, RsaPublicKey, locate_m_shortcut, wiener_attack, wiener_f_attack

pub = RsaPublicKey(7978886869909, 3594320245477)
o = wiener_attack(pub, AttackConfig(d_bound=561))
print(f"d = {o.d}, k = {o.k}, after {o.steps} convergents")
print(f"n = {o.p} * {o.q}")
print("(p+q)/2 =", (o.p + o.q) // 2, " (q-p)/2 =", (o.q - o.p) // 2)

# the index of k/d can be predicted from q_m q_{m+1} alone
print("shortcut index:", locate_m_shortcut(pub))

# approximating by e/f with f = n - 2 sqrt(n) + 1 reaches about 12x larger d
print("wiener-f:", wiener_f_attack(pub).d)
