"""
Finite truncations
==================

Compress to the first N sites and compare against dense linear algebra.
"""

# %%
import numpy as np

from shiftalg import (
    build_T, delta, edge_eigen_sweep, heatmap_dump, operator_norm, oracle_mul_check, power,
    sweep_csv, to_matrix,
)

print(to_matrix(build_T("backward"), 4, 0.3).real)
print(to_matrix(power(build_T("backward"), 2), 4, 0.3).real)

# %%
# symbolic products agree with matrix products on the rows the truncation keeps intact
print(oracle_mul_check(power(build_T("forward"), 3), build_T("backward"), 32, 0.3))

# %%
# ||T^r - S^r|| against (1 + |eps|)^r - 1
for r in range(1, 6):
    print(r, operator_norm(to_matrix(delta(r, "forward"), 64, 0.3)), 1.3 ** r - 1)

# %%
# truncations of the one-sided T are triangular: the only nonzero eigenvalue is eps
rows = edge_eigen_sweep(np.linspace(-1.5, 1.5, 7), 16, "backward")
for row in rows:
    print(row.eps, row.edge_eig)

# the hermitian chain has a split-off eigenvalue once |eps| > 1
for row in edge_eigen_sweep([0.5, 1.5, 3.0], 64, "hermitian"):
    print(row.eps, row.edge_eig.real)

# %%
# CSV output for plotting elsewhere
print(sweep_csv(rows[:1]).splitlines()[:3])
print(heatmap_dump(build_T("backward"), 4, 0.3).splitlines()[:3])
