"""Acceptance criteria, one marked group per criterion.

A summary line per criterion is printed at the end of the run by conftest.py.
"""
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from quantum_pascal import bounds, combinatorics as cb, operators as ops
from quantum_pascal.spectra import (
    envelope_error,
    gaussian_derivative_form,
    gaussian_envelope,
    hermite_gauss_envelope,
    multiplet_spectrum,
)
from quantum_pascal.verify import Suite, check_golden

BETAS = [k * math.pi / 12 for k in range(25)]
PHIS = (0.0, math.pi / 3)


@pytest.mark.acceptance(1)
def test_golden_fixtures():
    start = time.perf_counter()
    suite = Suite()
    check_golden(suite)
    elapsed = time.perf_counter() - start
    assert suite.passed, suite.failures[:5]
    assert suite.checks > 200
    assert elapsed < 1.0, elapsed


@pytest.mark.acceptance(2)
def test_oracle_equivalence():
    start = time.perf_counter()
    cases = 0
    for N in range(1, 13):
        up = ops.up_counts(N)
        for q in range(N + 1):
            diag = ops.z_operator(N, q).diag
            col = cb.triangle_row(N, q, "jacobi").coeffs
            for k in range(N + 1):
                assert int(diag[up == k].sum()) == math.comb(N, q) * col[k], (N, k, q)
                cases += 1
    elapsed = time.perf_counter() - start
    # sum over N of (N+1)^2 triples, each summing up to 4096 basis states
    assert cases == sum((N + 1) ** 2 for N in range(1, 13)) == 818
    assert elapsed < 30.0, elapsed


@pytest.mark.acceptance(3)
def test_three_methods_agree():
    start = time.perf_counter()
    for N in range(65):
        for q in range(N + 1):
            gf = cb.triangle_row(N, q, "generating_function").coeffs
            assert cb.triangle_row(N, q, "jacobi").coeffs == gf, (N, q)
            if cb.has_special_case(N, q):
                assert cb.triangle_row(N, q, "special_case").coeffs == gf, (N, q)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, elapsed


@pytest.mark.acceptance(4)
@pytest.mark.parametrize("N", range(1, 13))
def test_basis_map_round_trip(N):
    report = ops.verify_basis_maps(N)
    assert report.passed, report.failure
    assert report.max_deviation == 0


@pytest.mark.acceptance(5)
@pytest.mark.parametrize("N", range(1, 9))
def test_rotation_law(N):
    worst = 0.0
    for q in range(N + 1):
        Z = ops.z_operator(N, q).to_dense()
        for phi in PHIS:
            for beta in BETAS:
                proj = ops.liouville_projection(ops.rotated(Z, phi, beta), Z)
                worst = max(worst, abs(proj - math.cos(beta) ** q))
    assert worst < 1e-10


@pytest.mark.acceptance(6)
@pytest.mark.parametrize("N", range(1, 9))
def test_coherence_selection(N):
    for q in range(N + 1):
        parts = ops.coherence_decompose(ops.rotated(ops.z_operator(N, q), 0.0, math.pi / 2), N)
        for p, part in parts.items():
            assert abs(p) <= q and (p - q) % 2 == 0, (q, p)
            assert abs(part.norm() - parts[-p].norm()) < 1e-10, (q, p)
        assert parts[q].norm() > 1e-10 and parts[-q].norm() > 1e-10


@pytest.mark.acceptance(7)
def test_de_moivre_laplace():
    errors = {}
    for N in (12, 20):
        comb = multiplet_spectrum(N, 0, 0.05)
        errors[N] = envelope_error(comb, gaussian_envelope(N, 0.05, comb.nu)).center_error
    assert errors[12] < 0.03
    assert errors[12] == pytest.approx(0.021, abs=2e-3)
    assert errors[20] < errors[12]


@pytest.mark.acceptance(8)
@pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
def test_hermite_gauss_envelope(q):
    N, w = 18, 0.02
    comb = multiplet_spectrum(N, q, w)
    env = hermite_gauss_envelope(N, q, w, comb.nu)
    assert cb.count_sign_changes(env.intensity) == q
    nu = np.linspace(-N / 2, N / 2, 73)
    hg = hermite_gauss_envelope(N, q, w, nu).intensity
    deriv = gaussian_derivative_form(N, q, w, nu)
    assert np.max(np.abs(hg - deriv)) <= 1e-6 * np.max(np.abs(hg))
    report = envelope_error(comb, env)
    assert report.max_line_error <= 0.10, f"max line error {report.max_line_error:.4f}"


@pytest.mark.acceptance(9)
def test_bounds():
    for N in range(1, 65):
        forms = bounds.enhancement_forms(N)
        assert len(set(forms.values())) == 1, N
    for N in range(1, 21):
        assert int(np.abs(ops.z_operator(N, 1).diag).sum()) == bounds.trace_abs_z1(N).closed_form
    for k_gamma in (1.0, 3.98):
        assert bounds.max_enhancement(3, k_gamma).b_max == pytest.approx(1.5 * k_gamma, rel=1e-15)
        assert bounds.max_enhancement(4, k_gamma).b_max == pytest.approx(1.5 * k_gamma, rel=1e-15)
    assert bounds.max_enhancement(3).ratio == bounds.max_enhancement(4).ratio == Fraction(3, 2)
