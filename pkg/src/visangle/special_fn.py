"""Gamma, log-Gamma, Beta, digamma and Bernoulli numbers.

Double precision only. The closed forms elsewhere in the package need Gamma
at half-integers up to about 20, the reciprocal Gamma at (possibly negative)
half-integers and integers, digamma at half-integers, and the even Bernoulli
numbers for the series of ``M(omega**m)``.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "DomainError",
    "gamma",
    "lgamma",
    "rgamma",
    "beta",
    "digamma",
    "bernoulli",
    "bernoulli_fraction",
    "EULER_GAMMA",
]

EULER_GAMMA = 0.57721566490153286060651209008240243

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


def _is_pole(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def _lanczos_sum(x: float) -> float:
    # x is the shifted argument (z - 1)
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (x + i)
    return acc


def gamma(x: float) -> float:
    """Gamma function for real ``x``.

    Raises
    ------
    DomainError
        At the poles ``0, -1, -2, ...``. Use :func:`rgamma` when the
        reciprocal (which is zero there) is what the formula needs.
    """
    x = float(x)
    if math.isnan(x):
        return math.nan
    if _is_pole(x):
        raise DomainError(f"gamma has a pole at {x!r}")
    if x < 0.5:
        # reflection
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    if x > 171.7:
        raise OverflowError(f"gamma({x}) overflows a double")
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    if x > 140.0:
        # split the power so it does not overflow before the exponential
        half = t ** (0.5 * (z + 0.5))
        return _SQRT_2PI * half * (half * math.exp(-t)) * _lanczos_sum(z)
    return _SQRT_2PI * t ** (z + 0.5) * math.exp(-t) * _lanczos_sum(z)


def lgamma(x: float) -> float:
    """Logarithm of ``|Gamma(x)|``."""
    x = float(x)
    if _is_pole(x):
        raise DomainError(f"lgamma has a pole at {x!r}")
    if x < 0.5:
        return math.log(math.pi / abs(math.sin(math.pi * x))) - lgamma(1.0 - x)
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def rgamma(x: float) -> float:
    """Reciprocal Gamma, ``1/Gamma(x)``, equal to zero at the poles."""
    x = float(x)
    if _is_pole(x):
        return 0.0
    if x > 171.0:
        return math.exp(-lgamma(x))
    return 1.0 / gamma(x)


def beta(x: float, y: float) -> float:
    """Euler Beta function ``Gamma(x) Gamma(y) / Gamma(x + y)`` for ``x, y > 0``."""
    if x <= 0 or y <= 0:
        raise DomainError(f"beta requires positive arguments, got ({x!r}, {y!r})")
    if x + y < 170.0:
        return gamma(x) * gamma(y) / gamma(x + y)
    return math.exp(lgamma(x) + lgamma(y) - lgamma(x + y))


# B_2, B_4, ... coefficients of the asymptotic expansion of digamma
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def digamma(x: float) -> float:
    """Logarithmic derivative of Gamma for ``x > 0``.

    The argument is shifted up to ``x >= 10`` with ``psi(x) = psi(x+1) - 1/x``
    and the asymptotic Bernoulli expansion is summed there.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"digamma is only implemented for x > 0, got {x!r}")
    shift = []
    while x < 10.0:
        shift.append(1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for k, b2k in enumerate(_DIGAMMA_ASYMPTOTIC, start=1):
        tail += b2k / (2 * k) * power
        power *= inv2
    value = math.log(x) - 0.5 / x - tail
    # subtract the small terms last-to-first to keep the sum in a fixed order
    return value - math.fsum(shift)


def _bernoulli_table(nmax: int) -> list[Fraction]:
    """Exact B_0 .. B_nmax from sum_{j=0}^{n} C(n+1, j) B_j = 0."""
    table = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        for j in range(n):
            acc += math.comb(n + 1, j) * table[j]
        table.append(-acc / (n + 1))
    return table


_BERNOULLI_MAX_INDEX = 80  # largest k for bernoulli(k), i.e. B_160
_BERNOULLI = _bernoulli_table(2 * _BERNOULLI_MAX_INDEX)
_BERNOULLI_FLOAT = tuple(float(b) for b in _BERNOULLI)


def bernoulli_fraction(k: int) -> Fraction:
    """Exact even Bernoulli number ``B_{2k}``."""
    if k < 1 or int(k) != k:
        raise DomainError(f"bernoulli index must be a positive integer, got {k!r}")
    if k > _BERNOULLI_MAX_INDEX:
        raise DomainError(f"bernoulli table stops at k = {_BERNOULLI_MAX_INDEX}")
    return _BERNOULLI[2 * int(k)]


def bernoulli(k: int) -> float:
    """Even Bernoulli number ``B_{2k}`` as a float; ``bernoulli(1) == 1/6``."""
    bernoulli_fraction(k)
    return _BERNOULLI_FLOAT[2 * int(k)]
