"""Closed forms for the classical families.

Crofton: int (w - sin w) dP = L^2/2 - pi F.
Hurwitz functions f_m pick out a single harmonic energy c_m^2.
Powers of sine have Gamma-function coefficients that vanish beyond k = m for odd m.
For w^m - sin^m w the coefficients come from the moments int w^r cos(jw).
"""
import math

from visangle import M_m, VisualFunction, cw3, ellipse, master_series
from visangle import formulas

e = ellipse(1.5, 1.0, 16)
print(f"Crofton on the ellipse: {formulas.crofton(e):.14f}")
print(f"Masotti (w^2 - sin^2):  {formulas.masotti(e):.14f}")

print("\nHurwitz integrals depend only on a0 and c_m:")
for m in range(2, 7):
    print(f"  m={m}  {formulas.hurwitz_integral(e, m):.14f}   c_m^2 = {e.c2[m] if m <= e.K else 0.0:.3e}")

print("\nsin^m coefficient tables (L^2 coefficient, then pi*beta_k for k = 2..8):")
for m in (3, 4, 5, 6):
    t = formulas.sin_power_terms(m, 8)
    row = "  ".join(f"{math.pi * t.ck_coeffs[k]:9.4f}" for k in range(2, 9))
    print(f"  m={m}  {t.L2_coeff / (2 * math.pi):.6f} L^2   {row}")

print("\nM_m = M(w^m - sin^m w), from a Bernoulli-number series:")
for m in range(1, 9):
    print(f"  M_{m} = {M_m(m):.14f}")
print(f"  M_3 in closed form 12 pi ln 2 - 3 pi/2 = {12 * math.pi * math.log(2) - 1.5 * math.pi:.14f}")

print("\nm = 3 through the digamma function vs the general moment formula:")
print(f"  {formulas.omega_minus_sin_cubed_digamma(e):.14f}  {formulas.omega_minus_sin_power(e, 3):.14f}")

print("\nOdd sine powers are finite combinations of Hurwitz integrals:")
for m in (3, 5, 7):
    lhs, rhs = formulas.hurwitz_decomposition(e, m)
    print(f"  m={m}: {lhs:.14f} vs {rhs:.14f}")

b = cw3(1.0, 0.1)
print("\nFor a constant-width body the sin^m integral is M(sin^m) L^2/(2 pi):")
for m in (3, 4, 5):
    print(f"  m={m}: {formulas.sin_power(b, m):.14f} vs {formulas.M_sin_power(m) * b.length ** 2 / (2 * math.pi):.14f}")
print(f"  quadrature check m=4: {master_series(b, VisualFunction.sin_power(4)).value:.14f}")
