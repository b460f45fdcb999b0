import cmath
import math

import numpy as np
import pytest

from skeinquant.errors import (DimensionMismatch, NotLatticeFraction, NotPrimitive,
                               QuadratureNotConverged)
from skeinquant.geom import (QuadratureConfig, QuantizationContext,
                             ThetaSection, basis_phi, basis_psi, curve_operator_geom,
                             gram_matrix, halfform_norm_sq, holomorphic_part,
                             inner_product, intertwining_deviation, iso_from_skein,
                             iso_to_skein, lattice_character, modular_phase_check,
                             parity_reflect, phi_coefficients, psi_coefficients,
                             section_eval, translate, translate_ints)
from skeinquant.tqft import TorusVector, curve_operator_skein, rep_S, rep_T

CTX = QuantizationContext(3, 1j)
CTX_SKEW = QuantizationContext(3, 0.3 + 1.7j)


def random_section(ctx, seed=0):
    rng = np.random.default_rng(seed)
    rho = rng.standard_normal(ctx.N) + 1j * rng.standard_normal(ctx.N)
    return ThetaSection(ctx, rho)


def test_context_validation():
    with pytest.raises(ValueError):
        QuantizationContext(2, 1j)
    with pytest.raises(ValueError):
        QuantizationContext(3, 1.0 - 0.5j)
    assert CTX.N == 7


def test_dimension_counts():
    assert len(basis_psi(CTX)) == 2 * CTX.r + 1
    assert len(basis_phi(CTX)) == CTX.r
    # linear independence through the exact coefficient expansion
    mat = np.stack([psi_coefficients(s) for s in basis_psi(CTX)])
    assert np.linalg.matrix_rank(mat) == CTX.N


# -- series evaluation -------------------------------------------------------

def test_vacuum_series_value():
    s0 = basis_psi(CTX)[0]
    scale = s0.rho[0]
    val = holomorphic_part(s0, 0.0, 0.0) / scale
    assert val.real == pytest.approx(1 + 2 * math.exp(-7 * math.pi), rel=1e-12)
    assert abs(val.imag) < 1e-15


def test_vacuum_meridian_periodicity():
    s0 = basis_psi(CTX)[0]
    for (p, q) in ((0.1, 0.2), (0.7, 0.9)):
        a = holomorphic_part(s0, p, q)
        b = holomorphic_part(s0, p + 1.0 / CTX.N, q)
        assert abs(a - b) < 1e-12 * abs(a)


def test_full_period_in_p():
    s = random_section(CTX, 1)
    for (p, q) in ((0.13, 0.41), (0.62, 0.28)):
        a = holomorphic_part(s, p, q)
        b = holomorphic_part(s, p + 1.0, q)
        assert abs(a - b) < 1e-10 * max(1.0, abs(a))


@pytest.mark.parametrize("ctx", (CTX, CTX_SKEW))
@pytest.mark.parametrize("mn", ((1, 0), (0, 1), (1, 1)))
def test_quasi_periodicity(ctx, mn):
    s = random_section(ctx, 2)
    m, n = mn
    N, tau = ctx.N, ctx.tau
    for (p, q) in ((0.21, 0.33), (0.84, 0.07)):
        z = p + tau * q
        lhs = holomorphic_part(s, p + m, q + n)
        rhs = cmath.exp(-1j * N * math.pi * (tau * n * n + 2 * n * z)) * holomorphic_part(s, p, q)
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs), 1.0)


def test_holomorphy_finite_difference_order():
    s = random_section(CTX, 3)
    p, q = 0.37, 0.22

    def residual(h):
        dq = (holomorphic_part(s, p, q + h) - holomorphic_part(s, p, q - h)) / (2 * h)
        dp = (holomorphic_part(s, p + h, q) - holomorphic_part(s, p - h, q)) / (2 * h)
        return abs(dq - CTX.tau * dp)

    r1, r2 = residual(2e-2), residual(1e-2)
    assert 3.0 < r1 / r2 < 5.0  # second-order convergence


# -- translations -------------------------------------------------------------

def test_translate_lattice_fraction_guard():
    s = random_section(CTX, 4)
    with pytest.raises(NotLatticeFraction):
        translate(s, (0.5, 0.0))
    out = translate(s, (1.0 / CTX.N, 2.0 / CTX.N))
    assert np.allclose(out.rho, translate_ints(s, 1, 2).rho)


def test_translate_matches_pointwise_action():
    # (T_x s)(y) = exp(i N pi (x_q p - x_p q)) s(y + x)
    s = random_section(CTX, 5)
    N = CTX.N
    for (j, k) in ((1, 0), (0, 1), (2, 3)):
        t = translate_ints(s, j, k)
        for (p, q) in ((0.15, 0.55), (0.4, 0.9)):
            lhs = section_eval(t, p, q)
            phase = cmath.exp(1j * math.pi * N * (k / N * p - j / N * q))
            rhs = phase * section_eval(s, p + j / N, q + k / N)
            assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(lhs))


def test_frame_section_fixed_by_meridian_fraction():
    # the pure frame factor is invariant under the meridian fraction step
    N, tau = CTX.N, CTX.tau
    for (p, q) in ((0.3, 0.6), (0.8, 0.1)):
        frame = cmath.exp(1j * math.pi * N * q * (p + tau * q))
        stepped = cmath.exp(-1j * math.pi * q) * cmath.exp(
            1j * math.pi * N * q * (p + 1.0 / N + tau * q))
        assert abs(frame - stepped) < 1e-14 * abs(frame)


def test_heisenberg_commutation_operator_identity():
    for ctx in (CTX, CTX_SKEW):
        w = cmath.exp(2j * math.pi / ctx.N)
        for s in basis_psi(ctx):
            ab = translate_ints(translate_ints(s, 0, 1), 1, 0)
            ba = translate_ints(translate_ints(s, 1, 0), 0, 1)
            assert np.max(np.abs(ab.rho - w * ba.rho)) < 1e-10


def test_full_lattice_translation_character():
    # one full step along mu or lambda fixes invariant sections; the
    # diagonal step picks up the character sign
    s = random_section(CTX, 6)
    for (j, k, sign) in ((CTX.N, 0, 1), (0, CTX.N, 1), (CTX.N, CTX.N, -1)):
        t = translate_ints(s, j, k)
        assert np.max(np.abs(t.rho - sign * s.rho)) < 1e-9 * float(np.max(np.abs(s.rho)))
    assert lattice_character(1, 1) == -1
    assert lattice_character(1, 0) == lattice_character(0, 1) == 1


def test_translation_unitarity():
    s = random_section(CTX, 7)
    base = inner_product(s, s).real
    for (j, k) in ((1, 0), (0, 2), (3, 1)):
        t = translate_ints(s, j, k)
        assert inner_product(t, t).real == pytest.approx(base, rel=1e-8)


# -- bases ---------------------------------------------------------------------

def test_psi_eigenrelations():
    for ctx in (CTX, CTX_SKEW):
        psis = basis_psi(ctx)
        for l, s in enumerate(psis):
            t = translate_ints(s, 1, 0)
            ev = cmath.exp(2j * math.pi * l / ctx.N)
            assert np.max(np.abs(t.rho - ev * s.rho)) < 1e-12
        # ladder relation along the longitude fraction
        for l in range(ctx.N - 1):
            up = translate_ints(psis[l], 0, 1)
            assert np.max(np.abs(up.rho - psis[l + 1].rho)) < 1e-12


def test_gram_identity_psi_phi():
    for ctx in (CTX, CTX_SKEW):
        g = gram_matrix(basis_psi(ctx))
        assert np.max(np.abs(g - np.eye(ctx.N))) < 1e-6
        g = gram_matrix(basis_phi(ctx))
        assert np.max(np.abs(g - np.eye(ctx.r))) < 1e-6


def test_vacuum_frame_norm_constant():
    for ctx in (CTX, CTX_SKEW, QuantizationContext(4, 1j)):
        s = ThetaSection(ctx, np.eye(ctx.N, dtype=complex)[0])
        val = inner_product(s, s, include_halfform=False).real
        target = math.sqrt(8 * math.pi ** 2 / (ctx.N * ctx.b))
        assert val == pytest.approx(target, rel=1e-8)
        assert halfform_norm_sq(ctx) == pytest.approx(math.sqrt(ctx.b / (2 * math.pi)))


def test_inner_product_positivity_and_orthogonality():
    psis = basis_psi(CTX)
    assert abs(inner_product(psis[0], psis[1])) < 1e-8
    for seed in range(5):
        s = random_section(CTX, seed)
        v = inner_product(s, s)
        assert v.real > 0 and abs(v.imag) < 1e-10 * v.real


def test_phi_alternating_pointwise():
    for l, s in enumerate(basis_phi(CTX)):
        assert abs(section_eval(s, 0.0, 0.0)) < 1e-12
        v1 = section_eval(s, 0.23, 0.41)
        v2 = section_eval(s, -0.23, -0.41)
        assert abs(v1 + v2) < 1e-9 * max(1.0, abs(v1))
        assert np.max(np.abs(parity_reflect(s).rho + s.rho)) < 1e-12


def test_phi_fold_identity():
    # the (r+1)-st alternating combination is minus the r-th
    r, N = CTX.r, CTX.N
    psis = basis_psi(CTX)
    phi_r1 = (psis[r + 1].rho - psis[N - (r + 1)].rho) / math.sqrt(2)
    phi_r = (psis[r].rho - psis[N - r].rho) / math.sqrt(2)
    assert np.max(np.abs(phi_r1 + phi_r)) < 1e-14


def test_phi_coefficients_roundtrip():
    rng = np.random.default_rng(9)
    beta = rng.standard_normal(CTX.r) + 1j * rng.standard_normal(CTX.r)
    s = iso_from_skein(beta, CTX)
    got, dev = phi_coefficients(s)
    assert dev < 1e-12
    assert np.max(np.abs(got - beta)) < 1e-12


# -- curve operators and the isomorphism ----------------------------------------

def test_geom_meridian_diagonal():
    for ctx in (CTX, CTX_SKEW):
        M = curve_operator_geom((1, 0), ctx)
        expect = np.diag([-2 * math.cos(2 * math.pi * l / ctx.N)
                          for l in range(1, ctx.r + 1)])
        assert np.max(np.abs(M - expect)) < 1e-12


def test_geom_longitude_fold_corner():
    M = curve_operator_geom((0, 1), CTX)
    assert M[CTX.r - 1, CTX.r - 1] == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(M.imag)) < 1e-12


def test_geom_curve_symmetric_in_orientation():
    for gamma in ((1, 0), (0, 1), (1, 1)):
        plus = curve_operator_geom(gamma, CTX)
        minus = curve_operator_geom((-gamma[0], -gamma[1]), CTX)
        assert np.max(np.abs(plus - minus)) < 1e-12


def test_geom_curve_primitive_guard():
    with pytest.raises(NotPrimitive):
        curve_operator_geom((2, 4), CTX)


def test_iso_maps_basis():
    s = iso_from_skein(np.eye(CTX.r)[0], CTX)
    phi1 = basis_phi(CTX)[0]
    assert np.max(np.abs(s.rho - phi1.rho)) < 1e-15


def test_iso_roundtrip_and_guard():
    rng = np.random.default_rng(10)
    v = rng.standard_normal(CTX.r) + 1j * rng.standard_normal(CTX.r)
    back = iso_to_skein(iso_from_skein(TorusVector(CTX.r, tuple(v)), CTX))
    assert np.max(np.abs(back.as_array() - v)) < 1e-12
    with pytest.raises(DimensionMismatch):
        iso_from_skein(np.ones(5), CTX)


def test_intertwining_example():
    # the first basis vector is a meridian eigenvector on both sides
    ctx = CTX
    e0 = np.eye(ctx.r)[0]
    lhs_vec = curve_operator_skein((1, 0), ctx.r) @ e0
    lhs = iso_from_skein(lhs_vec, ctx)
    rhs_mat = curve_operator_geom((1, 0), ctx)
    rhs = rhs_mat @ np.array([1, 0, 0])
    expected = -2 * math.cos(2 * math.pi / 7)
    assert lhs_vec[0] == pytest.approx(expected, abs=1e-12)
    assert rhs[0] == pytest.approx(expected, abs=1e-12)
    got, dev = phi_coefficients(lhs)
    assert dev < 1e-12
    assert np.max(np.abs(got - rhs)) < 1e-12


@pytest.mark.parametrize("tau", (1j, 0.3 + 1.7j))
@pytest.mark.parametrize("gamma", ((1, 0), (0, 1), (1, 1)))
def test_intertwining_operator_norm(tau, gamma):
    for r in (3, 5):
        ctx = QuantizationContext(r, tau)
        assert intertwining_deviation(gamma, ctx) < 1e-8


# -- modular frame changes --------------------------------------------------------

@pytest.mark.parametrize("tau", (1j, 0.3 + 1.7j))
def test_modular_T_phases(tau):
    ctx = QuantizationContext(3, tau)
    rep = modular_phase_check("T", ctx)
    assert rep.max_dev < 1e-6
    assert abs(abs(rep.global_phase) - 1) < 1e-6
    # measured matrix is diagonal
    off = rep.measured - np.diag(np.diag(rep.measured))
    assert np.max(np.abs(off)) < 1e-6
    # relative phase between successive entries carries the twist sign
    d = np.diag(rep.measured)
    t = np.diag(rep_T(3))
    for l in range(1, 3):
        assert abs(d[l] / d[l - 1] - t[l] / t[l - 1]) < 1e-6


@pytest.mark.parametrize("tau", (1j, 0.3 + 1.7j))
def test_modular_S_matrix(tau):
    ctx = QuantizationContext(3, tau)
    rep = modular_phase_check("S", ctx)
    assert rep.max_dev < 1e-6
    assert abs(abs(rep.global_phase) - 1) < 1e-6
    # the vacuum-anchored theta construction lands on the opposite global sign
    assert abs(rep.global_phase + 1) < 1e-6
    assert np.max(np.abs(rep.measured + rep_S(3))) < 1e-6


def test_quadrature_cap_raises():
    ctx = QuantizationContext(3, 1j, quad=QuadratureConfig(n_start=4, refine_until=1e-30, n_cap=8))
    s = random_section(ctx, 11)
    with pytest.raises(QuadratureNotConverged):
        inner_product(s, s)


def test_series_window_cap_raises():
    from skeinquant.errors import NonconvergentSeries
    # a nearly degenerate modular parameter needs more theta terms than
    # the hard cap allows
    ctx = QuantizationContext(3, 0.001j)
    s = random_section(ctx, 12)
    with pytest.raises(NonconvergentSeries):
        section_eval(s, 0.1, 0.1)


def test_alternating_subspace_dimension():
    # the alternating projection of the full basis spans exactly r directions
    phis = basis_phi(CTX)
    mat = np.stack([phi_coefficients(s)[0] for s in phis])
    assert np.linalg.matrix_rank(mat) == CTX.r
    # and every alternating section is reached: residuals vanish
    for s in phis:
        assert phi_coefficients(s)[1] < 1e-12
