"""
Boundary corrections of powers
==============================

T^m differs from S^m by a finite-rank correction living near site 0.
"""

# %%
from fractions import Fraction

from shiftalg import corner_rank, corner_support, delta, generic_corner_rank, telescoping_residual

for m in range(1, 6):
    d = delta(m, "forward")
    print(m, d, "rank", generic_corner_rank(d), "support", corner_support(d))

# %%
# the telescoping formula holds identically for every variant
print(all(not telescoping_residual(m, v)
          for m in range(1, 9) for v in ("forward", "backward", "hermitian")))

# %%
# the rank is taken after substituting eps, so it can drop at special values
from shiftalg import C, EPS

x = C(0, 0).scale(EPS - 1) + C(1, 1)
print(corner_rank(x, Fraction(1, 2)), corner_rank(x, 1), generic_corner_rank(x))
