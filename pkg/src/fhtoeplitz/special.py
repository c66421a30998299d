"""Complex log-Gamma and the Barnes G-function.

Barnes G is evaluated by shifting the argument to large real part with
the recurrence ``G(z+1) = Gamma(z) G(z)`` and summing the Stirling-type
asymptotic series for ``ln G(1+z)`` there.  Everything is carried in log
space; the imaginary part of a returned logarithm is a continuous branch,
not necessarily reduced to ``(-pi, pi]``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.special import bernoulli, loggamma

__all__ = [
    "DomainError",
    "SingularRepresentationError",
    "log_gamma",
    "log_barnes_g",
    "barnes_g",
    "is_barnes_zero",
    "log_barnes_ratio",
    "barnes_ratio",
]

# zeta'(-1) = 1/12 - ln A, A the Glaisher-Kinkelin constant
ZETA_PRIME_M1 = -0.16542114370045092921
LOG_2PI = math.log(2.0 * math.pi)

# real part above which the asymptotic series is used; a low target keeps
# the cancellation between ln G and the ln Gamma shift terms small
_SHIFT_TARGET = 10.0
_N_TERMS = 12
_B = bernoulli(2 * _N_TERMS + 2)
_SERIES = [_B[2 * k + 2] / (4.0 * k * (k + 1)) for k in range(1, _N_TERMS + 1)]


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


class SingularRepresentationError(ArithmeticError):
    """A Barnes factor in a denominator vanishes."""


def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def _nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def log_gamma(z) -> complex:
    """Principal branch of ``ln Gamma(z)``.

    Raises
    ------
    DomainError
        At the poles ``z = 0, -1, -2, ...``.
    """
    z = _as_complex(z)
    if _nonpositive_integer(z):
        raise DomainError(f"Gamma has a pole at z={z.real:g}")
    return complex(loggamma(z))


def is_barnes_zero(z) -> bool:
    """True when ``G(z) = 0``, i.e. ``z`` is a non-positive integer."""
    return _nonpositive_integer(_as_complex(z))


def _log_barnes_g_asymptotic(w: complex) -> complex:
    # ln G(1+w) for large |w|
    lw = cmath.log(w)
    w2 = w * w
    s = 0.5 * w2 * lw - 0.75 * w2 + 0.5 * w * LOG_2PI - lw / 12.0 + ZETA_PRIME_M1
    inv = 1.0 / w2
    p = inv
    for c in _SERIES:
        s += c * p
        p *= inv
    return s


def log_barnes_g(z) -> complex:
    """Logarithm of the Barnes G-function.

    Returns ``complex(-inf, 0)`` at the zeros ``z = 0, -1, -2, ...``.
    """
    z = _as_complex(z)
    if _nonpositive_integer(z):
        return complex(-math.inf, 0.0)
    if z.imag == 0.0 and z.real == math.floor(z.real) and z.real <= 40:
        # G(n) = prod_{k=1}^{n-2} k!
        n = int(z.real)
        return complex(sum(math.log(math.factorial(k)) for k in range(1, n - 1)))
    n = max(0, int(math.ceil(_SHIFT_TARGET - z.real)))
    # ln G(z) = ln G(z+n) - sum_{j<n} ln Gamma(z+j)
    acc = _log_barnes_g_asymptotic(z + n - 1.0)
    if n:
        acc -= complex(np.sum(loggamma(z + np.arange(n))))
    return acc


def barnes_g(z) -> complex:
    """Barnes G-function, ``G(z+1) = Gamma(z) G(z)``, ``G(1) = 1``.

    Exact zero at non-positive integers.  For arguments where ``G``
    overflows use :func:`log_barnes_g`.

    Examples
    --------
    >>> round(barnes_g(0.5).real, 10)
    0.6032442812
    """
    lg = log_barnes_g(z)
    if math.isinf(lg.real):
        return 0j
    return cmath.exp(lg)


def log_barnes_ratio(a, b) -> complex:
    """``ln[G(1+a+b) G(1+a-b) / G(1+2a)]``.

    The real part is ``-inf`` when the numerator vanishes.
    """
    a = complex(a)
    b = complex(b)
    den = log_barnes_g(1.0 + 2.0 * a)
    if math.isinf(den.real):
        raise SingularRepresentationError(f"G(1+2a) = 0 for a={a!r}")
    num1 = log_barnes_g(1.0 + a + b)
    num2 = log_barnes_g(1.0 + a - b)
    if math.isinf(num1.real) or math.isinf(num2.real):
        return complex(-math.inf, 0.0)
    return num1 + num2 - den


def barnes_ratio(a, b) -> complex:
    """``G(1+a+b) G(1+a-b) / G(1+2a)``, computed in log space."""
    lr = log_barnes_ratio(a, b)
    if math.isinf(lr.real):
        return 0j
    return cmath.exp(lr)
