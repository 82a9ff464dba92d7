"""Isoperimetric-type inequalities for int (w^m - sin^m w) dP.

* Upper bound -pi^m F + M_m L^2/(2 pi), attained only by disks.
* For m = 2, three lower bounds with a fixed ordering; the strongest is attained
  by curves parallel to an astroid (p = a0 + a2 cos 2phi).
* For constant-width bodies, a lower bound with a positive (3/4)^m margin.
"""
from visangle import bounds_report, circle, cw3, from_fourier, random_body

for name, body in [
    ("disk", circle(1.0)),
    ("random seed 7", random_body(7)),
    ("astroid-parallel", from_fourier(1.0, [(0, 0), (0.2, 0)])),
    ("constant width", cw3(1.0, 0.1)),
]:
    print(f"\n{name}")
    for m in (1, 2, 3, 6):
        rep = bounds_report(body, m)
        parts = ", ".join(f"{b.name} slack {b.slack:+.3e}" for b in rep.bounds)
        print(f"  m={m}  integral {rep.integral_value:12.6f}  {parts}")
        assert rep.all_satisfied

# Sweep: random bodies never violate any applicable bound.
violations = sum(not bounds_report(random_body(seed), m).all_satisfied for seed in range(100) for m in range(1, 9))
print(f"\n100 random bodies, m = 1..8: {violations} violations")
