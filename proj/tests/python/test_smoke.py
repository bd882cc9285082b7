"""Smoke tests for the ionspec python module."""

import math

import numpy as np
import pytest

import ionspec


def default_params(**overrides):
    p = ionspec.ModelParams()
    for key, value in overrides.items():
        setattr(p, key, value)
    return p


def test_params_and_validation():
    p = default_params()
    assert p.gamma == 1.0
    assert p.coupling == pytest.approx(0.4)
    assert ionspec.validate(p) == []
    p.omega = -1.0
    with pytest.raises(ValueError):
        ionspec.validate(p)


def test_operators_shapes_and_number():
    space = ionspec.make_space(3)
    assert space.dim == 8
    ops = ionspec.canonical_operators(space)
    number = ops.a_dag @ ops.a
    assert np.allclose(np.diag(number).real, [0, 0, 1, 1, 2, 2, 3, 3])
    h = ionspec.build_hamiltonian(default_params(), space, 0.0)
    assert np.max(np.abs(h - h.conj().T)) <= 1e-14
    assert h[1, 2] == pytest.approx(0.4j)


def test_closed_form_susceptibilities():
    chi = ionspec.red_susceptibility(default_params(), 0.0)
    assert chi.chi_double_prime == pytest.approx(0.02 / 0.17, rel=1e-12)
    blue = default_params(sideband=ionspec.Sideband.Blue, omega=15.0)
    chi_b = ionspec.blue_susceptibility(blue, 0.0)
    assert chi_b.chi_double_prime == pytest.approx(1.06 / 1.1349, rel=1e-12)


def test_weak_probe_matches_closed_form():
    p = default_params(sideband=ionspec.Sideband.Blue, omega=25.0)
    for delta in (-2.0, 0.3, 4.5):
        coherence = ionspec.weak_probe_solve(ionspec.Sideband.Blue, p, delta)
        chi = coherence / (1j * p.epsilon)
        reference = ionspec.blue_susceptibility(p, delta)
        assert chi.real == pytest.approx(reference.chi_prime, abs=1e-12)
        assert chi.imag == pytest.approx(reference.chi_double_prime, abs=1e-12)


def test_steady_state_matches_closed_form():
    p = default_params()
    space = ionspec.make_space(3)
    liouvillian = ionspec.make_liouvillian(p, space, 0.0)
    result = ionspec.steady_state(liouvillian)
    chi = result.rho[0, 1] / (1j * p.epsilon)
    assert chi.imag == pytest.approx(0.02 / 0.17, rel=0.01)
    assert result.diagnostics.top_level_population < 1e-6


def test_blue_steady_state_is_gated():
    p = default_params(sideband=ionspec.Sideband.Blue, omega=15.0)
    space = ionspec.make_space(3)
    liouvillian = ionspec.make_liouvillian(p, space, 0.0)
    with pytest.raises(RuntimeError):
        ionspec.steady_state(liouvillian)
    result = ionspec.steady_state(liouvillian, allow_blue=True)
    assert result.diagnostics.top_level_population > 0.1


def test_evolve_decay():
    space = ionspec.make_space(1)
    ops = ionspec.canonical_operators(space)
    liouvillian = ionspec.build_liouvillian(
        np.zeros((4, 4), dtype=complex), [ionspec.Dissipator(ops.sigma_minus, 0.5)]
    )
    rho0 = np.zeros((4, 4), dtype=complex)
    rho0[1, 1] = 1.0
    out = ionspec.evolve(liouvillian, rho0, 1.0, 1e-3)
    assert out.rho[1, 1].real == pytest.approx(math.exp(-1.0), abs=1e-6)


def test_sweep_and_dip_metrics():
    config = ionspec.SweepConfig()
    config.n_points = 201
    spectrum = ionspec.sweep(default_params(), config)
    assert len(spectrum.points) == 201
    chi2 = [pt.chi_double_prime for pt in spectrum.points]
    assert np.allclose(chi2, chi2[::-1], rtol=0, atol=1e-12)  # parity
    metrics = ionspec.dip_metrics(spectrum)
    assert metrics.center_absorption == pytest.approx(0.02 / 0.17, abs=1e-9)
    assert metrics.dip_depth > 0


def test_pole_structure():
    ps = ionspec.pole_structure(ionspec.Sideband.Red, default_params(omega=2.0))
    assert ps.regime == ionspec.Regime.Overdamped
    ps = ionspec.pole_structure(ionspec.Sideband.Red, default_params(omega=8.0))
    assert ps.regime == ionspec.Regime.Underdamped
    assert ps.threshold_coupling == pytest.approx(0.24)


def test_truncated_integration():
    p = default_params()
    state = ionspec.integrate_truncated(ionspec.Sideband.Red, p, 0.0, 500.0)
    chi = state.components[1] / (1j * p.epsilon)
    assert chi.imag == pytest.approx(0.02 / 0.17, rel=0.01)
