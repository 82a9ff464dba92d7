"""Areas enclosed by the curves of constant visual angle.

The points that see the body under a fixed angle w form a closed curve; the area
F(w) it encloses decreases from infinity (w -> 0) to the body's own area (w = pi).
F(w) sin^2 w tends to H = L^2/pi + 2 pi sum_{even k} c_k^2 as w -> 0.
"""
import math

import numpy as np

from visangle import ellipse, level_set_area, level_set_area_direct

e = ellipse(1.5, 1.0, 16)
print(f"{'w':>6s} {'series F(w)':>20s} {'direct F(w)':>20s}")
for w in (0.25, 0.5, 1.0, 2.0, 3.0, math.pi):
    series = float(level_set_area(e, w))
    direct = level_set_area_direct(e, w) if w < math.pi else e.area
    print(f"{w:6.3f} {series:20.14f} {direct:20.14f}")

# Richardson extrapolation in w^2 recovers H from the direct quadrature.
hs = [0.4, 0.2, 0.1, 0.05]
col = [level_set_area_direct(e, w) * math.sin(w) ** 2 for w in hs]
for j in range(1, len(hs)):
    col = [(4**j * col[i + 1] - col[i]) / (4**j - 1) for i in range(len(col) - 1)]
print(f"\nextrapolated F(w) sin^2 w -> {col[0]:.12f}, H = {e.hurwitz_limit:.12f}")

# For the unit disk the level curve is a circle of radius 1/sin(w/2).
ws = np.array([0.5, 1.0, 2.0])
print("\ndisk check:", np.allclose(level_set_area(ellipse(1, 1, 4), ws), math.pi / np.sin(ws / 2) ** 2))
