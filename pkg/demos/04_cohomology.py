"""
Boundary cocycles
=================

omega_j(X, Y) = <e_j, [X, Y] e_j> is a 2-cocycle, but it is the coboundary
of the site functional phi_j, so its class is zero.
"""

# %%
from shiftalg import (
    C, boundary_cocycle, d2_check, exactness_witness, independence_matrix, omega,
    random_element, separating_matrix, truncated_H2,
)

print(omega(1, C(1, 0), C(0, 1)))

x, y, z = (random_element(s) for s in (1, 2, 3))
print(d2_check(boundary_cocycle(2), x, y, z))

# %%
for j in range(4):
    print(j, "failing pairs:", exactness_witness(j, 4)[1])

# %%
# brute-force H^2 of the corner window gl(M+1)
for M in (1, 2, 3):
    print(truncated_H2(M).to_dict())

# %%
# the forms themselves are linearly independent, only their classes vanish
for row in independence_matrix(3):
    print([str(v) for v in row])
for row in separating_matrix(3):
    print([str(v) for v in row])
