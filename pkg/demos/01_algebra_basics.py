"""
Working with the shift algebra
==============================

Elements are finite combinations of S^n, S*^n and matrix units
C(a,b) = |e_a><e_b|, with coefficients that are polynomials in eps.
"""

# %%
from shiftalg import C, E, U, Ustar, build_T, commutator, mul, parse_element, power

# S* S = I, but S S* misses the first site
print(mul(Ustar(1), U(1)))
print(mul(U(1), Ustar(1)))

# %%
# text input uses the same grammar as the command line
x = parse_element("U^2*E*U*^3 + (1/2+3/4i)eps^2 C(1,0)")
print(x)

# %%
# corners multiply like matrix units
print(commutator(C(1, 0), C(0, 1)))

# %%
# the deformed shift T = S* + eps E and its square
T = build_T("backward")
print(T)
print(power(T, 2))

# powers of one element always commute
print(commutator(power(T, 3), power(T, 5)))

# %%
# [S^m, E] alone is one-sided; the hermitian hopping gives the antisymmetric pair
print(commutator(U(2), E))
print(commutator(U(2) + Ustar(2), E))
