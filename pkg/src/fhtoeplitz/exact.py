"""Exact finite-N Toeplitz determinants and the unitary-average oracle.

Coefficients follow ``M(k) = int_0^{2pi} dx/(2pi) exp(i k x) f(x)`` and the
matrix is ``M_ij = M(i - j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz
from scipy.special import roots_jacobi, roots_legendre

from .symbol import TWO_PI, FHSymbol, evaluate

__all__ = [
    "ToeplitzCoefficients",
    "LogDeterminant",
    "toeplitz_coefficients",
    "toeplitz_determinant",
    "toeplitz_det",
    "cue_average_oracle",
]

_K_CHUNK = 256


@dataclass(frozen=True)
class ToeplitzCoefficients:
    """``M(k)`` for ``k = -(N-1) .. N-1`` stored at index ``k + N - 1``."""

    values: np.ndarray
    grid: int = 0
    method: str = "given"
    error: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).copy()
        if v.ndim != 1 or v.size % 2 != 1:
            raise ValueError("need 2N-1 coefficients")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def N(self) -> int:
        return (self.values.size + 1) // 2

    def __getitem__(self, k: int) -> complex:
        if abs(k) > self.N - 1:
            raise IndexError(k)
        return complex(self.values[k + self.N - 1])

    def scaled(self, c: complex) -> "ToeplitzCoefficients":
        return ToeplitzCoefficients(self.values * c, self.grid, self.method, abs(c) * self.error)

    def matrix(self, N: int | None = None) -> np.ndarray:
        N = self.N if N is None else N
        if N > self.N:
            raise ValueError(f"coefficients only cover N <= {self.N}")
        c0 = self.N - 1
        col = self.values[c0 : c0 + N]
        row = self.values[c0 - N + 1 : c0 + 1][::-1]
        return toeplitz(col, row)


@dataclass(frozen=True)
class LogDeterminant:
    log_modulus: float
    phase: float
    sign_ok: bool = True

    @property
    def value(self) -> complex:
        if math.isinf(self.log_modulus) and self.log_modulus < 0:
            return 0j
        return complex(np.exp(self.log_modulus + 1j * self.phase))


# -- quadrature -------------------------------------------------------------


def _fourier_sum(y, g, N):
    """``sum_j g_j exp(i k y_j)`` for ``k = -(N-1)..N-1``."""
    ks = np.arange(-(N - 1), N)
    out = np.empty(ks.size, dtype=complex)
    for s in range(0, ks.size, _K_CHUNK):
        kk = ks[s : s + _K_CHUNK]
        out[s : s + _K_CHUNK] = np.exp(1j * np.multiply.outer(kk, y)) @ g
    return out


def _segments(symbol: FHSymbol):
    """``(u, v, left_exp, right_exp)`` arcs between consecutive singular points."""
    sings = symbol.singularities
    R = len(sings)
    out = []
    for i in range(R):
        u = sings[i].position
        v = sings[(i + 1) % R].position + (TWO_PI if i == R - 1 else 0.0)
        out.append((u, v, 2 * sings[i].alpha.real, 2 * sings[(i + 1) % R].alpha.real))
    return out


def _gauss_coefficients(symbol: FHSymbol, N: int, n: int) -> np.ndarray:
    total = np.zeros(2 * N - 1, dtype=complex)
    for u, v, el, er in _segments(symbol):
        t, w = roots_jacobi(n, er, el)
        h = 0.5 * (v - u)
        y = 0.5 * (u + v) + h * t
        weight = (1 - t) ** er * (1 + t) ** el
        g = evaluate(symbol, np.mod(y, TWO_PI)) / weight * w
        total += h / TWO_PI * _fourier_sum(y, g, N)
    return total


def _uniform_coefficients(symbol: FHSymbol, N: int, G: int, offset: float) -> np.ndarray:
    x = TWO_PI * (np.arange(G) + offset) / G
    fx = np.fft.ifft(evaluate(symbol, x))
    ks = np.arange(-(N - 1), N)
    return np.exp(1j * math.pi * ks * 2 * offset / G) * fx[ks % G]


def _default_nodes(symbol: FHSymbol, N: int) -> int:
    kmax = N - 1 + 2 * symbol.smooth.effective_order()
    longest = max(v - u for u, v, _, _ in _segments(symbol))
    return int(math.ceil(0.6 * kmax * 0.5 * longest)) + 32


def toeplitz_coefficients(
    symbol: FHSymbol, N: int, grid: int | None = None, method: str = "auto"
) -> ToeplitzCoefficients:
    """Fourier coefficients ``M(k)``, ``|k| < N``, of the symbol.

    Methods
    -------
    ``"gauss"``
        Gauss-Jacobi quadrature on each arc between singular points, the
        Jacobi weight absorbing the ``(2-2cos)**a`` endpoint behaviour.
        ``grid`` is the number of nodes per arc.
    ``"midpoint"``
        Uniform grid of ``grid`` points (power of two, ``>= 8N``) offset
        by half a cell.
    ``"trapezoid"``
        Uniform grid including ``x = 0``; spectrally accurate for smooth
        symbols.
    ``"auto"``
        ``"gauss"`` if the symbol has singular points, else ``"trapezoid"``.

    The error estimate is the largest coefficient change between the
    returned resolution and half of it.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    for s in symbol.singularities:
        if s.alpha.real <= -0.5:
            raise ValueError("non-integrable singularity (Re a <= -1/2)")
    if method == "auto":
        method = "gauss" if symbol.singularities else "trapezoid"

    if method == "gauss":
        if not symbol.singularities:
            raise ValueError("gauss method needs at least one singular point")
        n = grid if grid is not None else _default_nodes(symbol, N)
        lo = _gauss_coefficients(symbol, N, n)
        hi = _gauss_coefficients(symbol, N, 2 * n)
        return ToeplitzCoefficients(hi, 2 * n, method, float(np.max(np.abs(hi - lo))))

    if method in ("midpoint", "trapezoid"):
        offset = 0.5 if method == "midpoint" else 0.0
        if grid is None:
            need = max(8 * N, 4 * symbol.smooth.effective_order(), 64)
            grid = 1 << math.ceil(math.log2(need))
        if grid & (grid - 1) or grid < 8 * N:
            raise ValueError(f"grid must be a power of two >= 8N, got {grid}")
        lo = _uniform_coefficients(symbol, N, grid, offset)
        hi = _uniform_coefficients(symbol, N, 2 * grid, offset)
        return ToeplitzCoefficients(hi, 2 * grid, method, float(np.max(np.abs(hi - lo))))

    raise ValueError(f"unknown method {method!r}")


def toeplitz_determinant(coeffs: ToeplitzCoefficients, N: int | None = None) -> LogDeterminant:
    """Log-determinant of the ``N x N`` Toeplitz matrix (pivoted LU).

    A singular matrix gives ``log_modulus = -inf`` and ``sign_ok = False``.
    """
    N = coeffs.N if N is None else N
    if N < 1:
        raise ValueError("N must be >= 1")
    sign, logabs = np.linalg.slogdet(coeffs.matrix(N))
    if sign == 0:
        return LogDeterminant(-math.inf, 0.0, False)
    return LogDeterminant(float(logabs), float(np.angle(sign)), True)


def toeplitz_det(symbol: FHSymbol, N: int, grid: int | None = None, method: str = "auto") -> complex:
    """Shortcut: ``det_N`` of the symbol as a complex number."""
    return toeplitz_determinant(toeplitz_coefficients(symbol, N, grid, method), N).value


def _legendre_nodes(symbol: FHSymbol, n: int):
    if symbol.singularities:
        arcs = [(u, v) for u, v, _, _ in _segments(symbol)]
    else:
        arcs = [(0.0, TWO_PI)]
    t, w = roots_legendre(n)
    ys, ws = [], []
    for u, v in arcs:
        h = 0.5 * (v - u)
        ys.append(0.5 * (u + v) + h * t)
        ws.append(h * w)
    y = np.mod(np.concatenate(ys), TWO_PI)
    return y, np.concatenate(ws)


def cue_average_oracle(symbol: FHSymbol, M: int, grid: int = 64) -> complex:
    """``(1/M!) prod_i int dx_i/(2pi) f(x_i) prod_{i<j} |z_i - z_j|**2``.

    Direct tensor-product Gauss-Legendre quadrature (``grid`` nodes per arc
    between singular points); only ``M <= 3``.
    """
    if not 1 <= M <= 3:
        raise ValueError("oracle supports 1 <= M <= 3")
    y, w = _legendre_nodes(symbol, grid)
    W = w * evaluate(symbol, y) / TWO_PI
    z = np.exp(1j * y)
    if M == 1:
        return complex(W.sum())
    d2 = np.abs(z[:, None] - z[None, :]) ** 2
    if M == 2:
        return complex(W @ d2 @ W / 2)
    total = np.einsum("i,j,k,ij,ik,jk->", W, W, W, d2, d2, d2, optimize=True)
    return complex(total / 6)
