"""
How many steps do the searches need?
====================================

Fix n = p q and run over every admissible d in a range.  For each d,
record the coefficient product the search would have to reach, scaled by
D^2 = d^2 / sqrt(n).  The full range 1000..10^6 takes a few seconds per
100000 values of d.
"""

import sys

from cfrsa import sweep

n, p, q = 7978886869909, 2323259, 3434351
d_to = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000

stats = sweep(n, p, q, 1000, d_to)
for kind, st in stats.items():
    print(kind, st.summary())
