"""Convex bodies from support-function Fourier coefficients.

A planar convex body is stored as p(phi) = a0 + sum a_k cos k phi + b_k sin k phi.
Everything geometric (length, area, deficit, Steiner point) follows from the
coefficients; convexity is the condition p + p'' >= 0.
"""
import math

from visangle import ConvexityError, circle, cw3, ellipse, from_fourier, random_body

# An ellipse is projected onto 32 harmonics; its area is pi a b to roundoff.
e = ellipse(1.5, 1.0, K=32)
print("ellipse 1.5 x 1")
print(f"  area      {e.area:.15f}   (pi a b = {1.5 * math.pi:.15f})")
print(f"  perimeter {e.length:.15f}")
print(f"  deficit   {e.deficit:.6e}   L^2 - 4 pi F")

# Only odd harmonics: every projection has the same length.
b = cw3(1.0, 0.1)
print("\nconstant-width body p = 1 + 0.1 cos 3phi")
print(f"  constant width: {b.is_constant_width()}, min radius of curvature {b.convexity_margin:.3f}")

# Random bodies are reproducible from a seed and always convex.
r = random_body(7)
s = r.summary()
print("\nrandom body, seed 7")
for key, value in s.as_dict().items():
    print(f"  {key:17s} {value}")

# Rigid motions: rotating shifts the phases of the harmonics, translating moves the
# first harmonic. Length, area and the energies c_k^2 do not change.
moved = r.rotated(0.7).translated(0.2, -0.1)
print(f"\nafter a rigid motion: area {moved.area:.15f} vs {r.area:.15f}")
print(f"  Steiner point moved from {r.steiner_point} to {moved.steiner_point}")

# A support function with p + p'' < 0 somewhere is rejected with the location.
try:
    from_fourier(1.0, [(0.0, 0.0), (0.4, 0.0)])
except ConvexityError as exc:
    print(f"\nrejected: {exc}")

print(f"\nunit circle: L = {circle(1).length:.12f}, F = {circle(1).area:.12f}")
