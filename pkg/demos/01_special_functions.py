"""Fresnel integrals and Jacobi elliptic functions.

Run: python demos/01_special_functions.py
"""

import numpy as np

from leafbend import specfun as sf

# %% Fresnel integrals without the pi/2 factor: C(t) = int_0^t cos(u^2) du
for t in (0.5, 1.0, 2.170803):
    print(f"C({t}) = {sf.fresnel_c(t):.12f}   S({t}) = {sf.fresnel_s(t):.12f}")

# %% The axial-end phase m*s - s^2/2 is a Fresnel integral after completing the square
euler = sf.ShiftedEuler(m=1.5)
print("int_0^2 cos(1.5u - u^2/2) du =", sf.phase_integral(2.0, euler, "cos"))

# %% Jacobi functions take the modulus k; cn degenerates to cos at k=0 and sech at k=1
u = np.linspace(0, 3, 4)
for k in (0.0, 0.3, 1.0):
    print(f"k={k}: cn = {np.round(sf.jacobi_cn(u, k), 6)}")

# %% eps(u, k) = int_0^u dn^2, the second coordinate of the elastica
print("eps(1, 0.3) =", sf.jacobi_epsilon(1.0, 0.3))
