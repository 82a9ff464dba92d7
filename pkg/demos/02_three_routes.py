"""One integral, three ways.

For a function f of the visual angle with f = O(w^3) at 0, the integral of
f(w) over the exterior of a convex body can be computed

* by direct quadrature in tangent-line coordinates, dP = T T1 / sin(w) dphi dw;
* as a series in the harmonic energies c_k^2 (body-independent coefficients);
* through two numbers attached to f alone, M(f) and beta_k(f):
  -f(pi) F + M(f) L^2/(2 pi) + pi sum beta_k(f) c_k^2.

The three agree to roundoff on smooth bodies.
"""
import time

from visangle import VisualFunction, ellipse, functional_route, integrate_exterior, master_series, random_body

bodies = {"ellipse(1.5,1)": ellipse(1.5, 1.0, 16), "random seed 11": random_body(11, 16)}
functions = [
    VisualFunction.crofton(),
    VisualFunction.masotti(),
    VisualFunction.sin_power(4),
    VisualFunction.hurwitz(3),
    VisualFunction.omega_minus_sin_power(3),
]

print(f"{'body':16s} {'f':14s} {'direct':>20s} {'series rel dev':>15s} {'functional rel dev':>19s} {'ms':>6s}")
for bname, body in bodies.items():
    for f in functions:
        t0 = time.perf_counter()
        d = integrate_exterior(body, f)
        s = master_series(body, f)
        fr = functional_route(body, f)
        ms = (time.perf_counter() - t0) * 1e3
        print(
            f"{bname:16s} {f.label:14s} {d.value:20.14f} {abs(s.value - d.value) / abs(d.value):15.1e}"
            f" {abs(fr.value - d.value) / abs(d.value):19.1e} {ms:6.0f}"
        )

# The direct route refuses functions that are not O(w^3): the integral diverges.
try:
    integrate_exterior(bodies["ellipse(1.5,1)"], VisualFunction.sin_power(2))
except ValueError as exc:
    print("\n" + str(exc))
