"""Symbols in canonical Fisher-Hartwig form.

A symbol on the unit circle, ``x in (0, 2*pi)``, is written as

    f(x) = f0(x) * prod_r exp(i b_r (x - x_r - pi sign(x - x_r)))
                        * (2 - 2 cos(x - x_r)) ** a_r

with ``f0`` smooth, non-vanishing and of zero winding.  ``f0`` is stored
through the Fourier coefficients of its logarithm with the convention

    l_k = int_{-pi}^{pi} dx/(2 pi) exp(i k x) ln f0(x),
    ln f0(x) = sum_k l_k exp(-i k x).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace

import numpy as np

TWO_PI = 2.0 * math.pi
DELTA_MIN = 1e-6
DEFAULT_BOUND = 2
DEFAULT_TIE_TOL = 1e-8

__all__ = [
    "FHSingularity",
    "SmoothSymbol",
    "FHSymbol",
    "Representation",
    "evaluate",
    "identity_symbol",
    "jump_symbol",
    "density_matrix_symbol",
    "density_density_symbol",
    "szego_symbol",
    "enumerate_representations",
    "minimal_representations",
]


@dataclass(frozen=True)
class FHSingularity:
    """Singular point at angle ``position`` with zero/pole exponent
    ``alpha`` (``a_r``) and jump parameter ``beta`` (``b_r``)."""

    position: float
    alpha: complex = 0j
    beta: complex = 0j

    def __post_init__(self):
        pos = float(self.position) % TWO_PI
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if not self.alpha.real > -0.5:
            raise ValueError(f"Re a_r must exceed -1/2, got {self.alpha!r}")


@dataclass(frozen=True)
class SmoothSymbol:
    """Smooth factor ``f0`` held as ``l_k`` for ``k = -K..K``.

    ``truncated`` marks coefficients cut from an infinite series (sampled
    data); exactly specified finite series leave it False.
    """

    log_coeffs: np.ndarray = field(default_factory=lambda: np.zeros(1, complex))
    truncated: bool = False

    def __post_init__(self):
        c = np.asarray(self.log_coeffs, dtype=complex).copy()
        if c.ndim != 1 or c.size % 2 != 1:
            raise ValueError("log_coeffs must have odd length 2K+1")
        if not np.all(np.isfinite(c)):
            raise ValueError("log_coeffs must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "log_coeffs", c)

    @classmethod
    def constant(cls, log_value: complex) -> "SmoothSymbol":
        return cls(np.array([complex(log_value)]))

    @property
    def order(self) -> int:
        return (self.log_coeffs.size - 1) // 2

    def coeff(self, k: int) -> complex:
        K = self.order
        if abs(k) > K:
            return 0j
        return complex(self.log_coeffs[k + K])

    @property
    def l0(self) -> complex:
        return self.coeff(0)

    def effective_order(self, tol: float = 1e-15) -> int:
        """Largest ``|k| >= 1`` with a coefficient above ``tol`` (0 if none)."""
        K = self.order
        c = np.abs(self.log_coeffs)
        nz = [k for k in range(1, K + 1) if c[K + k] > tol or c[K - k] > tol]
        return max(nz, default=0)

    def log_f0(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        K = self.order
        ks = np.arange(-K, K + 1)
        return np.exp(-1j * np.multiply.outer(x, ks)) @ self.log_coeffs

    def shifted(self, dl0: complex) -> "SmoothSymbol":
        c = np.array(self.log_coeffs)
        c[self.order] += dl0
        return SmoothSymbol(c, self.truncated)

    def __eq__(self, other):
        if not isinstance(other, SmoothSymbol):
            return NotImplemented
        return np.array_equal(self.log_coeffs, other.log_coeffs)

    def __hash__(self):
        return hash(self.log_coeffs.tobytes())


@dataclass(frozen=True)
class FHSymbol:
    """Smooth part times a finite list of Fisher-Hartwig singularities."""

    smooth: SmoothSymbol = field(default_factory=SmoothSymbol)
    singularities: tuple = ()
    delta_min: float = DELTA_MIN

    def __post_init__(self):
        sings = tuple(sorted(self.singularities, key=lambda s: s.position))
        pos = [s.position for s in sings]
        if len(pos) > 1:
            gaps = np.diff(pos + [pos[0] + TWO_PI])
            if gaps.min() < self.delta_min:
                raise ValueError(f"singularities closer than {self.delta_min:g}")
        object.__setattr__(self, "singularities", sings)

    @property
    def positions(self) -> np.ndarray:
        return np.array([s.position for s in self.singularities])

    @property
    def alphas(self) -> np.ndarray:
        return np.array([s.alpha for s in self.singularities], dtype=complex)

    @property
    def betas(self) -> np.ndarray:
        return np.array([s.beta for s in self.singularities], dtype=complex)

    @property
    def exponent(self) -> complex:
        """``Q = sum_r (a_r**2 - b_r**2)``."""
        return complex(np.sum(self.alphas**2 - self.betas**2))

    def scaled(self, c: complex) -> "FHSymbol":
        """The symbol multiplied by the non-zero constant ``c``."""
        return replace(self, smooth=self.smooth.shifted(np.log(complex(c))))

    def __call__(self, x):
        return evaluate(self, x)


def _singular_log_factor(s: FHSingularity, x: np.ndarray) -> np.ndarray:
    t = x - s.position
    phase = t - math.pi * np.sign(t)
    out = 1j * s.beta * phase
    if s.alpha != 0:
        # 2 - 2cos t = 4 sin^2(t/2), better conditioned near t = 0
        mag = 4.0 * np.sin(0.5 * t) ** 2
        with np.errstate(divide="ignore"):
            lm = np.log(mag)
        # split so a zero of the symbol gives -inf, not nan from 0 * inf
        out = out + s.alpha.real * lm
        if s.alpha.imag:
            out = out + 1j * s.alpha.imag * lm
    return out


def log_evaluate(symbol: FHSymbol, x) -> np.ndarray:
    """``ln f(x)`` on the branch built from the canonical factors."""
    x = np.asarray(x, dtype=float)
    out = symbol.smooth.log_f0(x).astype(complex)
    for s in symbol.singularities:
        out = out + _singular_log_factor(s, x)
    return out


def evaluate(symbol: FHSymbol, x):
    """Evaluate the symbol at angles ``x`` in ``(0, 2*pi)``.

    Raises
    ------
    ValueError
        If ``x`` sits on a singular point with ``Re a_r < 0``.
    """
    xa = np.asarray(x, dtype=float)
    for s in symbol.singularities:
        if s.alpha.real < 0 and np.any(np.isclose((xa - s.position) % TWO_PI, 0.0, atol=0.0)):
            raise ValueError(f"symbol diverges at x={s.position}")
    val = np.exp(log_evaluate(symbol, xa))
    return complex(val) if np.ndim(val) == 0 else val


# -- constructors -----------------------------------------------------------


def identity_symbol() -> FHSymbol:
    return FHSymbol()


def szego_symbol(t: float) -> FHSymbol:
    """Smooth symbol ``exp(t cos x)``: ``l_{+1} = l_{-1} = t/2``."""
    return FHSymbol(SmoothSymbol(np.array([t / 2, 0.0, t / 2], dtype=complex)))


def _two_point(alpha: float, x_r: float, a: float, delta_min: float = DELTA_MIN) -> FHSymbol:
    if not 0.0 < x_r < TWO_PI:
        raise ValueError(f"x_r must lie in (0, 2pi), got {x_r}")
    b = alpha / TWO_PI
    return FHSymbol(
        SmoothSymbol.constant(1j * b * x_r),
        (FHSingularity(0.0, a, -b), FHSingularity(x_r, a, b)),
        delta_min,
    )


def jump_symbol(alpha: float, x_r: float) -> FHSymbol:
    """Phase step: ``exp(i alpha)`` on ``(0, x_r)``, ``1`` on ``(x_r, 2 pi)``.

    ``b = alpha / (2 pi)`` is not reduced; representations with shifted
    ``b`` are found by :func:`enumerate_representations`.
    """
    return _two_point(alpha, x_r, 0.0)


def density_matrix_symbol(alpha: float, x_r: float) -> FHSymbol:
    """Phase step times ``(2-2cos(y-x_r))**(1/2) (2-2cos y)**(1/2)``.

    The phase ``exp(i alpha)`` sits on ``(0, x_r)``, the segment where the
    counting operator picks up the particles.
    """
    return _two_point(alpha, x_r, 0.5)


def density_density_symbol(x_r: float) -> FHSymbol:
    """``(2-2cos y)(2-2cos(y-x_r))``: double zeros at ``0`` and ``x_r``."""
    return _two_point(0.0, x_r, 1.0)


# -- representations --------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """A re-parametrisation of a base symbol with ``b_r -> b_r + n_r``.

    ``symbol`` carries the shifted betas and the compensating constant
    folded into ``l_0``; ``shifts`` sums to zero.
    """

    symbol: FHSymbol
    shifts: tuple
    smooth_constant_shift: complex

    @property
    def exponent(self) -> complex:
        return self.symbol.exponent

    @property
    def betas(self) -> np.ndarray:
        return self.symbol.betas

    @property
    def singularities(self) -> tuple:
        return self.symbol.singularities


def _probe_points(symbol: FHSymbol, per_gap: int = 3) -> np.ndarray:
    pos = symbol.positions
    if pos.size == 0:
        return np.array([1.0, 2.5, 4.0])
    edges = np.concatenate([pos, [pos[0] + TWO_PI]])
    pts = []
    for u, v in zip(edges[:-1], edges[1:]):
        pts.extend(u + (v - u) * (np.arange(per_gap) + 0.5) / per_gap)
    pts = np.mod(pts, TWO_PI)
    return pts[(pts > 0) & (pts < TWO_PI)]


def _shift(symbol: FHSymbol, shifts) -> Representation:
    sings = tuple(
        replace(s, beta=s.beta + n) for s, n in zip(symbol.singularities, shifts)
    )
    # exp(i n (x - x_r - pi sign)) = (-1)^n exp(i n (x - x_r)); with sum n = 0
    # the product over r is exp(-i sum n_r x_r), compensated in f0
    dl0 = 1j * sum(n * s.position for n, s in zip(shifts, symbol.singularities))
    rep_symbol = FHSymbol(symbol.smooth.shifted(dl0), sings, symbol.delta_min)

    x = _probe_points(symbol)
    lhs = evaluate(rep_symbol, x)
    rhs = evaluate(symbol, x)
    if not np.allclose(lhs, rhs, rtol=1e-10, atol=1e-300):
        raise RuntimeError(f"shift {tuple(shifts)} does not reproduce the base symbol")
    return Representation(rep_symbol, tuple(int(n) for n in shifts), dl0)


def enumerate_representations(symbol: FHSymbol, bound: int = DEFAULT_BOUND) -> list:
    """All representations with integer shifts ``|n_r| <= bound``, ``sum n_r = 0``.

    The unshifted representation comes first; the rest follow in
    lexicographic order of the shift vector.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    R = len(symbol.singularities)
    zero = (0,) * R
    vecs = [zero]
    for n in itertools.product(range(-bound, bound + 1), repeat=R):
        if sum(n) == 0 and n != zero:
            vecs.append(n)
    return [_shift(symbol, n) for n in vecs]


def minimal_representations(reps, tie_tol: float = DEFAULT_TIE_TOL) -> list:
    """Representations minimising ``Re sum_r (b_r**2 - a_r**2)``.

    Ties within ``tie_tol`` are all kept, ordered lexicographically by
    shift vector.
    """
    reps = list(reps)
    if not reps:
        raise ValueError("no representations given")
    cost = [(-r.exponent).real for r in reps]
    best = min(cost)
    keep = [r for r, c in zip(reps, cost) if c <= best + tie_tol]
    return sorted(keep, key=lambda r: r.shifts)
