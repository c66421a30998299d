"""Equal-time correlators of the impenetrable Bose gas and free fermions.

``M`` particles on a ring of length ``L``; ``N(x)`` counts particles in
``(0, x)``.  Each correlator is available as an exact finite-``M``
Toeplitz determinant and as its Fisher-Hartwig asymptote.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .asymptotics import fh_determinant_asymptote
from .exact import toeplitz_det
from .special import barnes_g
from .symbol import (
    density_density_symbol,
    density_matrix_symbol,
    jump_symbol,
)

__all__ = [
    "GasParameters",
    "DEGENERATE_TOL",
    "reduce_alpha",
    "g_alpha_exact",
    "g_alpha_asymptotic",
    "free_fermion_green",
    "free_fermion_green_fh",
    "exp_counting_exact",
    "exp_counting_asymptotic",
    "DensityDensity",
    "density_density",
]

DEGENERATE_TOL = 1e-9


def reduce_alpha(alpha: float) -> float:
    """Fold ``alpha`` into ``(-pi, pi]``."""
    r = math.remainder(alpha, 2 * math.pi)
    return math.pi if r == -math.pi else r


@dataclass(frozen=True)
class GasParameters:
    M: int
    L: float = 1.0
    x: float = 0.5
    alpha: float = 0.0

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"M must be a positive integer, got {self.M}")
        if not self.L > 0:
            raise ValueError("L must be positive")
        if not 0 < self.x < self.L:
            raise ValueError("need 0 < x < L")

    @property
    def rho(self) -> float:
        return self.M / self.L

    @property
    def x_r(self) -> float:
        return 2 * math.pi * self.x / self.L

    @property
    def alpha_reduced(self) -> float:
        return reduce_alpha(self.alpha)

    @property
    def b(self) -> float:
        return self.alpha_reduced / (2 * math.pi)

    @property
    def degenerate(self) -> bool:
        return abs(abs(self.b) - 0.5) < DEGENERATE_TOL

    @property
    def chord(self) -> float:
        """``2 M sin(pi x / L)``."""
        return 2 * self.M * math.sin(math.pi * self.x / self.L)


def g_alpha_exact(p: GasParameters, grid: int | None = None) -> complex:
    """``<phi^+(x) exp(i alpha N(x)) phi(0)> = det_{M-1}[f] / L``."""
    if p.M < 2:
        raise ValueError("need M >= 2")
    sym = density_matrix_symbol(p.alpha_reduced, p.x_r)
    return toeplitz_det(sym, p.M - 1, grid) / p.L


def g_alpha_asymptotic(p: GasParameters) -> complex:
    """Closed-form asymptote for ``|b| < 1/2``.

    exp(i alpha (M x/L - 1/2)) G(3/2+b)^2 G(3/2-b)^2 rho (2M sin(pi x/L))^-(1/2+2b^2)

    with ``alpha`` folded into ``(-pi, pi]``.  At ``b = 0`` this is the
    one-particle density matrix of the impenetrable Bose gas.
    """
    if p.degenerate:
        raise ValueError("|b| = 1/2: use free_fermion_green / free_fermion_green_fh")
    a, b = p.alpha_reduced, p.b
    const = (barnes_g(1.5 + b) * barnes_g(1.5 - b)) ** 2
    phase = cmath.exp(1j * a * (p.M * p.x / p.L - 0.5))
    return phase * const * p.rho * p.chord ** -(0.5 + 2 * b * b)


def free_fermion_green(p: GasParameters) -> float:
    """Dirichlet kernel ``sin(pi M x/L) / (L sin(pi x/L))``."""
    s = math.sin(math.pi * p.x / p.L)
    if abs(s) < 1e-300:
        return p.rho
    return math.sin(math.pi * p.M * p.x / p.L) / (p.L * s)


def free_fermion_green_fh(p: GasParameters, bound: int = 2) -> complex:
    """The two-representation Fisher-Hartwig sum at ``alpha = pi``."""
    sym = density_matrix_symbol(math.pi, p.x_r)
    return fh_determinant_asymptote(sym, p.M - 1, bound) / p.L


def exp_counting_exact(p: GasParameters, grid: int | None = None) -> complex:
    """``<exp(i alpha N(x))> = det_M[f]``, same for bosons and fermions."""
    return toeplitz_det(jump_symbol(p.alpha, p.x_r), p.M, grid)


def exp_counting_asymptotic(p: GasParameters) -> complex:
    """Fisher-Hartwig asymptote of ``<exp(i alpha N(x))>``.

    Generic branch, ``|b| < 1/2``:

        exp(i alpha M x/L) (2M sin(pi x/L))^(-2b^2) [G(1+b) G(1-b)]^2

    Degenerate branch, ``|b| = 1/2``, the sum of the two representations:

        2 cos(pi M x/L) (2M sin(pi x/L))^(-1/2) [G(3/2) G(1/2)]^2

    Each of the two jump points carries one Barnes factor ``G(1+b)G(1-b)``,
    hence the square.
    """
    if p.degenerate:
        const = (barnes_g(1.5) * barnes_g(0.5)).real ** 2
        return complex(2 * math.cos(math.pi * p.M * p.x / p.L) * p.chord**-0.5 * const)
    a, b = p.alpha_reduced, p.b
    const = (barnes_g(1 + b) * barnes_g(1 - b)) ** 2
    return cmath.exp(1j * a * p.M * p.x / p.L) * p.chord ** (-2 * b * b) * const


@dataclass(frozen=True)
class DensityDensity:
    exact: float
    det_identity: float
    leading: float
    det_exact: float
    det_free_fermion: float
    det_fh: float


def density_density(p: GasParameters, grid: int | None = None) -> DensityDensity:
    """``Pi(x) = <rho(x) rho(0)>`` via ``(4/L^2) sin^2(pi x/L) det_{M-2}[f]``.

    ``det_identity`` is ``(M-2)^2 / (4 sin^2(pi x/L))``, the Fisher-Hartwig
    value of ``det_{M-2}``; ``det_fh`` is the same quantity from the general
    asymptotic machinery.  ``det_free_fermion`` is the finite-``M`` value
    implied by Wick's theorem, ``Pi = rho^2 - G_ff^2``:

        det_{M-2} = (M^2 - sin^2(pi M x/L) / sin^2(pi x/L)) / (4 sin^2(pi x/L))

    ``leading = rho^2``.
    """
    if p.M < 4:
        raise ValueError("need M >= 4")
    s2 = math.sin(math.pi * p.x / p.L) ** 2
    sym = density_density_symbol(p.x_r)
    det = toeplitz_det(sym, p.M - 2, grid).real
    return DensityDensity(
        exact=4 / p.L**2 * s2 * det,
        det_identity=(p.M - 2) ** 2 / (4 * s2),
        leading=p.rho**2,
        det_exact=det,
        det_free_fermion=(p.M**2 - (p.L * free_fermion_green(p)) ** 2) / (4 * s2),
        det_fh=fh_determinant_asymptote(sym, p.M - 2).real,
    )
