import cmath
import math
import warnings

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fhtoeplitz.asymptotics import (
    InvalidSmoothPartError,
    TruncationWarning,
    f_plus_minus,
    fh_determinant_asymptote,
    fh_E_constant,
    fh_expansion,
    smooth_from_function,
    smooth_log_coeffs,
    szego_sum,
)
from fhtoeplitz.exact import toeplitz_det
from fhtoeplitz.symbol import (
    FHSingularity,
    FHSymbol,
    SmoothSymbol,
    density_density_symbol,
    density_matrix_symbol,
    evaluate,
    identity_symbol,
    jump_symbol,
    szego_symbol,
)

TWO_PI = 2 * math.pi


def grid(G):
    return TWO_PI * np.arange(G) / G


def test_log_coeffs_identity():
    s = smooth_log_coeffs(np.ones(64), 8)
    assert np.allclose(s.log_coeffs, 0, atol=1e-15)


def test_log_coeffs_exp_cos():
    s = smooth_log_coeffs(np.exp(0.5 * np.cos(grid(64))), 8)
    assert abs(s.coeff(1) - 0.25) < 1e-15 and abs(s.coeff(-1) - 0.25) < 1e-15
    others = [s.coeff(k) for k in range(-8, 9) if abs(k) != 1]
    assert np.allclose(others, 0, atol=1e-15)


def test_log_coeffs_constant():
    s = smooth_log_coeffs(np.full(32, 3.0 + 0j), 4)
    assert abs(s.l0 - math.log(3.0)) < 1e-15
    assert np.allclose(s.log_coeffs[np.arange(9) != 4], 0, atol=1e-15)


def test_log_coeffs_phase_unwrapped():
    # ln f0 = 2.5 i sin x: phase runs beyond (-pi, pi]
    s = smooth_log_coeffs(np.exp(2.5j * np.sin(grid(128))), 8)
    assert abs(s.coeff(1) + 1.25) < 1e-13 and abs(s.coeff(-1) - 1.25) < 1e-13
    assert abs(s.l0) < 1e-13


def test_log_coeffs_winding_rejected():
    with pytest.raises(InvalidSmoothPartError):
        smooth_log_coeffs(np.exp(1j * grid(64)) * 2, 4)


def test_log_coeffs_zero_rejected():
    f = 1 + np.cos(grid(64)) + 0j  # vanishes at x = pi
    with pytest.raises(InvalidSmoothPartError):
        smooth_log_coeffs(f, 4)


def test_log_coeffs_grid_check():
    with pytest.raises(ValueError):
        smooth_log_coeffs(np.ones(48), 4)
    with pytest.raises(ValueError):
        smooth_log_coeffs(np.ones(16), 8)


def test_smooth_from_function_round_trip():
    s = smooth_from_function(lambda x: np.exp(0.3 * np.cos(x) + 0.1j * np.sin(2 * x)), K=16)
    x = np.linspace(0.2, 6.0, 9)
    assert np.allclose(np.exp(s.log_f0(x)), np.exp(0.3 * np.cos(x) + 0.1j * np.sin(2 * x)), atol=1e-13)


def test_szego_sum_examples():
    assert szego_sum(SmoothSymbol()) == 0
    assert abs(szego_sum(szego_symbol(0.5).smooth) - 0.0625) < 1e-16
    assert szego_sum(SmoothSymbol.constant(2.0)) == 0


def test_szego_sum_tail_warning():
    s = smooth_from_function(lambda x: 1 / (1.0 - 0.95 * np.cos(x)), K=4, grid=64)
    with pytest.warns(TruncationWarning):
        szego_sum(s)
    s = smooth_from_function(lambda x: np.exp(0.5 * np.cos(x)), K=8)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        szego_sum(s)


def test_f_plus_minus_examples():
    assert f_plus_minus(SmoothSymbol(), 1.3) == (1, 1)
    assert f_plus_minus(SmoothSymbol.constant(0.7 + 0.2j), 2.0) == (1, 1)
    fp, fm = f_plus_minus(szego_symbol(0.5).smooth, 0.0)
    assert abs(fp - math.exp(0.25)) < 1e-15 and abs(fm - math.exp(0.25)) < 1e-15


def test_f_plus_minus_factorise_f0():
    s = SmoothSymbol(np.array([0.1, 0.2 - 0.1j, 0.05j, 0.3, 0.15]))
    for x in [0.3, 2.0, 5.1]:
        fp, fm = f_plus_minus(s, x)
        assert abs(fp * fm * cmath.exp(s.l0) - np.exp(s.log_f0(x))) < 1e-14


def test_E_identity():
    assert fh_E_constant(identity_symbol()) == 1


def test_E_single_double_zero():
    s = FHSymbol(singularities=(FHSingularity(1.1, 1.0, 0.0),))
    assert abs(fh_E_constant(s) - 1) < 1e-14


@pytest.mark.parametrize("b", [0.1, 0.3, -0.4])
def test_E_jump_symbol(b):
    xr = 2.1
    s = jump_symbol(TWO_PI * b, xr)
    gg = complex(mp.barnesg(1 + b) * mp.barnesg(1 - b))
    expected = (2 * math.sin(xr / 2)) ** (-2 * b * b) * gg**2
    assert abs(fh_E_constant(s) - expected) < 1e-13


def test_E_density_matrix_phase():
    # pairwise factor carries exp(i b (x_r - pi)); Barnes part G^2(3/2+b)G^2(3/2-b)
    b, xr = 0.2, 1.7
    s = density_matrix_symbol(TWO_PI * b, xr)
    gg = complex(mp.barnesg(1.5 + b) * mp.barnesg(1.5 - b)) ** 2
    expected = gg * (2 * math.sin(xr / 2)) ** (-0.5 - 2 * b * b) * cmath.exp(1j * b * (xr - math.pi))
    assert abs(fh_E_constant(s) - expected) < 1e-13


def test_E_accepts_representation():
    from fhtoeplitz.symbol import enumerate_representations

    rep = enumerate_representations(jump_symbol(1.0, 2.0))[0]
    assert fh_E_constant(rep) == fh_E_constant(rep.symbol)


def test_asymptote_identity():
    for N in (1, 5, 100):
        assert fh_determinant_asymptote(identity_symbol(), N) == 1


def test_asymptote_N_check():
    with pytest.raises(ValueError):
        fh_determinant_asymptote(identity_symbol(), 0)


def test_strong_szego_consistency():
    s = szego_symbol(0.5)
    a = fh_determinant_asymptote(s, 64)
    assert abs(a - math.exp(0.0625)) < 1e-6 * math.exp(0.0625)
    assert abs(toeplitz_det(s, 64) - a) < 1e-6 * abs(a)


def test_strong_szego_sampled_smooth_part():
    f0 = lambda x: np.exp(0.4 * np.cos(x) - 0.3 * np.sin(x) + 0.2 * np.cos(3 * x) + 0.1)
    s = FHSymbol(smooth_from_function(f0, K=32))
    for N in (24, 48):
        assert abs(toeplitz_det(s, N) / fh_determinant_asymptote(s, N) - 1) < 1e-10


def test_smooth_part_with_singularities_converges():
    # checks the f_+ / f_- placement: errors shrink with N
    smooth = SmoothSymbol(np.array([0.1j, 0.15, 0.2, 0.3, -0.1j]))
    s = FHSymbol(smooth, (FHSingularity(0.7, 0.25, 0.1), FHSingularity(3.5, 0.0, -0.2)))
    errs = []
    for N in (16, 64, 256):
        e = toeplitz_det(s, N)
        errs.append(abs(e / fh_determinant_asymptote(s, N) - 1))
    assert errs[2] < errs[0] and errs[2] < 0.01


@settings(max_examples=30, deadline=None)
@given(
    c=st.complex_numbers(min_magnitude=0.2, max_magnitude=3, allow_nan=False, allow_infinity=False),
    N=st.integers(1, 60),
)
def test_constant_scaling_covariance(c, N):
    s = density_matrix_symbol(0.8, 2.3)
    a = fh_determinant_asymptote(s, N)
    b = fh_determinant_asymptote(s.scaled(c), N)
    assert abs(b - c**N * a) <= 1e-10 * abs(b)


def test_conjugate_symmetric_symbol_gives_real():
    th = 1.2
    smooth = SmoothSymbol(np.array([0.1, 0.2, 0.3, 0.2, 0.1]))
    s = FHSymbol(
        smooth,
        (
            FHSingularity(th, 0.3, 0.0),
            FHSingularity(TWO_PI - th, 0.3, 0.0),
            FHSingularity(math.pi, 0.2, 0.25),
        ),
    )
    x = np.linspace(0.05, TWO_PI - 0.05, 23)
    assert np.allclose(evaluate(s, TWO_PI - x), np.conj(evaluate(s, x)))
    for N in (4, 33, 100):
        d = fh_determinant_asymptote(s, N)
        assert abs(d.imag) <= 1e-10 * abs(d)


@pytest.mark.parametrize("N", [8, 31, 64, 101])
def test_degenerate_sum_is_real(N):
    d = fh_determinant_asymptote(jump_symbol(math.pi, 2 * math.pi * 0.3), N)
    assert abs(d.imag) <= 1e-12 * max(abs(d), 1e-300)
    assert len(fh_expansion(jump_symbol(math.pi, 1.0)).terms) == 2


@pytest.mark.parametrize("M, x", [(10, 0.23), (21, 0.5), (30, 0.37), (7, 0.11)])
def test_free_fermion_green_two_term_sum_is_exact(M, x):
    d = fh_determinant_asymptote(density_matrix_symbol(math.pi, TWO_PI * x), M - 1)
    assert abs(d - math.sin(math.pi * M * x) / math.sin(math.pi * x)) < 1e-12 * M


def test_density_density_asymptote():
    xr = TWO_PI * 0.3
    N = 18
    d = fh_determinant_asymptote(density_density_symbol(xr), N)
    assert abs(d - N**2 / (4 * math.sin(xr / 2) ** 2)) < 1e-11 * abs(d)


def test_vanishing_barnes_term_dropped():
    # single pure jump with b = 1 is a winding-one symbol: det is zero
    s = FHSymbol(singularities=(FHSingularity(1.0, 0.0, 1.0),))
    with pytest.warns(RuntimeWarning):
        d = fh_determinant_asymptote(s, 10)
    assert d == 0
    assert abs(toeplitz_det(s, 10)) < 1e-10
