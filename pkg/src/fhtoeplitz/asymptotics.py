"""Generalized Fisher-Hartwig asymptotics of Toeplitz determinants.

For every representation with minimal ``Re sum(b_r**2 - a_r**2)`` the
determinant contributes

    exp(l_0 N) * N**Q * E,

where ``E`` collects the strong Szego factor, the Wiener-Hopf factors
``f_+``/``f_-`` at the singular points, the pairwise interaction of the
singularities and the Barnes G ratios.  All factors are accumulated as
logarithms and exponentiated once.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .special import log_barnes_ratio
from .symbol import (
    DEFAULT_BOUND,
    DEFAULT_TIE_TOL,
    FHSymbol,
    SmoothSymbol,
    enumerate_representations,
    minimal_representations,
)

__all__ = [
    "InvalidSmoothPartError",
    "TruncationWarning",
    "smooth_log_coeffs",
    "smooth_from_function",
    "szego_sum",
    "f_plus_minus",
    "fh_log_E_constant",
    "fh_E_constant",
    "ExpansionTerm",
    "AsymptoticExpansion",
    "fh_expansion",
    "fh_determinant_asymptote",
]


class InvalidSmoothPartError(ValueError):
    """The sampled smooth factor winds around zero or nearly vanishes."""


class TruncationWarning(RuntimeWarning):
    pass


def smooth_log_coeffs(f0_samples, K: int, zero_tol: float = 1e-12) -> SmoothSymbol:
    """Fourier coefficients ``l_k``, ``|k| <= K``, of ``ln f0``.

    ``f0_samples[j]`` is ``f0(2 pi j / G)``.  The logarithm is taken with
    the phase unwrapped along the grid, so the result is the continuous
    branch anchored at the principal value of ``f0(0)``.
    """
    f = np.asarray(f0_samples, dtype=complex)
    G = f.size
    if G < 4 * max(K, 1) or G & (G - 1):
        raise ValueError(f"grid size must be a power of two >= 4K, got {G} for K={K}")
    mag = np.abs(f)
    if mag.min() <= zero_tol * mag.max():
        raise InvalidSmoothPartError("smooth part (nearly) vanishes on the grid")
    phase = np.unwrap(np.angle(f))
    closing = np.angle(f[0] / f[-1])
    winding = round((phase[-1] - phase[0] + closing) / (2 * math.pi))
    if winding != 0:
        raise InvalidSmoothPartError(f"smooth part has winding number {winding}")
    logf = np.log(mag) + 1j * phase
    l_all = np.fft.ifft(logf)
    ks = np.arange(-K, K + 1)
    return SmoothSymbol(l_all[ks % G], truncated=True)


def smooth_from_function(f0, K: int = 256, grid: int | None = None) -> SmoothSymbol:
    """Sample the callable ``f0`` on a uniform grid and take log coefficients."""
    if grid is None:
        grid = 1 << max(2, math.ceil(math.log2(4 * max(K, 1))))
    x = 2 * math.pi * np.arange(grid) / grid
    return smooth_log_coeffs(f0(x), K)


def szego_sum(smooth: SmoothSymbol, tol: float = 1e-12) -> complex:
    """``sum_{k>=1} k l_k l_{-k}``.

    For truncated coefficient sets the last retained terms serve as the
    tail estimate; a warning is raised when they exceed ``tol``.
    """
    K = smooth.order
    if K == 0:
        return 0j
    ks = np.arange(1, K + 1)
    c = smooth.log_coeffs
    terms = ks * c[K + ks] * c[K - ks]
    tail = np.abs(terms[-min(4, K):]).sum()
    if smooth.truncated and tail > tol:
        warnings.warn(f"Szego sum tail {tail:.3g} exceeds {tol:g}", TruncationWarning, stacklevel=2)
    return complex(terms.sum())


def _log_f_plus_minus(smooth: SmoothSymbol, x) -> tuple:
    K = smooth.order
    if K == 0:
        return 0j, 0j
    ks = np.arange(1, K + 1)
    c = smooth.log_coeffs
    e = np.exp(1j * ks * x)
    lp = complex(np.sum(c[K - ks] * e))
    lm = complex(np.sum(c[K + ks] / e))
    return lp, lm


def f_plus_minus(smooth: SmoothSymbol, x: float) -> tuple:
    """``(f_+(x), f_-(x))`` with ``ln f_+ = sum_{k>0} l_{-k} e^{ikx}``,
    ``ln f_- = sum_{k>0} l_k e^{-ikx}``."""
    lp, lm = _log_f_plus_minus(smooth, x)
    return cmath.exp(lp), cmath.exp(lm)


def fh_log_E_constant(symbol: FHSymbol) -> complex:
    """Logarithm of the constant ``E`` for one representation.

    Real part ``-inf`` when a Barnes factor in the numerator vanishes.
    """
    symbol = getattr(symbol, "symbol", symbol)
    smooth = symbol.smooth
    out = szego_sum(smooth)
    sings = symbol.singularities
    for s in sings:
        lp, lm = _log_f_plus_minus(smooth, s.position)
        out += (-s.alpha + s.beta) * lp + (-s.alpha - s.beta) * lm
    for r in sings:
        for s in sings:
            if r is s:
                continue
            # principal log; Re(1 - e^{i theta}) >= 0 keeps it off the cut
            w = cmath.log(1.0 - cmath.exp(1j * (s.position - r.position)))
            out += -(r.alpha + r.beta) * (s.alpha - s.beta) * w
    for s in sings:
        lr = log_barnes_ratio(s.alpha, s.beta)
        if math.isinf(lr.real):
            return complex(-math.inf, 0.0)
        out += lr
    return out


def fh_E_constant(symbol: FHSymbol) -> complex:
    """The constant ``E`` multiplying ``exp(l_0 N) N**Q``.

    Accepts an :class:`FHSymbol` or a ``Representation``.
    """
    le = fh_log_E_constant(symbol)
    if math.isinf(le.real):
        return 0j
    return cmath.exp(le)


@dataclass(frozen=True)
class ExpansionTerm:
    shifts: tuple
    betas: tuple
    l0: complex
    exponent: complex
    log_E: complex

    @property
    def E(self) -> complex:
        return 0j if math.isinf(self.log_E.real) else cmath.exp(self.log_E)

    def log_value(self, N: int) -> complex:
        return N * self.l0 + self.exponent * math.log(N) + self.log_E

    def value(self, N: int) -> complex:
        if math.isinf(self.log_E.real):
            return 0j
        return cmath.exp(self.log_value(N))


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Sum over the minimal representations of one symbol."""

    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise ValueError("expansion needs at least one term")

    @property
    def l0(self) -> complex:
        return self.terms[0].l0

    def __call__(self, N: int) -> complex:
        if N < 1:
            raise ValueError("N must be >= 1")
        return sum((t.value(N) for t in self.terms), 0j)


def fh_expansion(
    symbol: FHSymbol, bound: int = DEFAULT_BOUND, tie_tol: float = DEFAULT_TIE_TOL
) -> AsymptoticExpansion:
    reps = minimal_representations(enumerate_representations(symbol, bound), tie_tol)
    terms = []
    for rep in reps:
        le = fh_log_E_constant(rep.symbol)
        if math.isinf(le.real):
            warnings.warn(
                f"representation {rep.shifts} has a vanishing Barnes factor; term dropped",
                RuntimeWarning,
                stacklevel=2,
            )
        terms.append(
            ExpansionTerm(
                shifts=rep.shifts,
                betas=tuple(complex(b) for b in rep.betas),
                l0=rep.symbol.smooth.l0,
                exponent=rep.exponent,
                log_E=le,
            )
        )
    return AsymptoticExpansion(tuple(terms))


def fh_determinant_asymptote(
    symbol: FHSymbol, N: int, bound: int = DEFAULT_BOUND, tie_tol: float = DEFAULT_TIE_TOL
) -> complex:
    """``D(N) ~ sum_reps exp(l_0 N) N**Q E`` over the minimal representations."""
    return fh_expansion(symbol, bound, tie_tol)(N)
