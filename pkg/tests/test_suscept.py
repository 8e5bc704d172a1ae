import cmath

import numpy as np
import pytest

from nkerr import effective, model, oracle, suscept
from nkerr.errors import PoleError

from conftest import make_config


def _bridge_chis(cfg, order=3, h_factor=2e-3):
    """Susceptibilities extracted from the coherence series, independently
    of the closed forms."""
    ea, ec = model.perturbation_strengths(cfg)
    ga2 = abs(cfg.mode_a.g) ** 2
    gc2 = abs(cfg.mode_c.g) ** 2
    ev = suscept.coherence_evaluator(cfg, order=order)
    h = h_factor * oracle.characteristic_scale(cfg)
    t10 = oracle.fd_extract(ev, 1, 0, h)
    t30 = oracle.fd_extract(ev, 3, 0, h)
    t12 = oracle.fd_extract(ev, 1, 2, h)
    return (-ga2 * t10 / ea**2,
            -ga2**2 * t30 / (3 * ea**4),
            -ga2 * gc2 * t12 / (6 * ea**2 * ec**2))


# -- closed forms ------------------------------------------------------------

def test_dark_state_zeros():
    cfg = make_config(0.02, 1.0, 0.02, 1, 0, 1, 0.4, 0.4, 0.9,
                      gamma=(0.1, 0.0, 0.05))  # delta_2 = 0, gamma_2 = 0
    assert suscept.chi1(cfg) == 0
    assert suscept.chi3_self(cfg) == 0


def test_chi1_two_level_dispersive_limit():
    # pump off: chi1 -> |g_a|^2 / (eps_a^2 * delta) for delta_1 = delta_2 = delta
    delta = 0.8
    cfg = make_config(0.02, 0.0, 0.02, 1, 0, 1, delta, 0.0, 0.9)
    ea, _ = model.perturbation_strengths(cfg)
    expected = abs(cfg.mode_a.g) ** 2 / (ea**2 * delta)
    assert suscept.chi1(cfg) == pytest.approx(expected, rel=1e-13)


def test_chi1_absorptive_at_raman_resonance_with_decay():
    cfg = make_config(0.02, 1.0, 0.02, 1, 0, 1, 0.0, 0.0, 0.9,
                      gamma=(0.0, 0.3, 0.0))
    val = suscept.chi1(cfg)
    assert val.imag > 0
    assert abs(val.real) < 1e-6 * abs(val.imag)
    # and the coherence route agrees
    c1_bridge, _, _ = _bridge_chis(cfg)
    assert val == pytest.approx(c1_bridge, rel=1e-8)


def test_chi3_self_sign_odd_under_detuning_flip():
    cfg = make_config(0.02, 1.0, 0.02, 1, 0, 1, 0.5, 0.2, 0.9)
    flipped = make_config(0.02, 1.0, 0.02, 1, 0, 1, -0.5, -0.2, 0.9)
    a = suscept.chi3_self(cfg)
    b = suscept.chi3_self(flipped)
    assert a == pytest.approx(-b, rel=1e-12)


def test_chi3_cross_lorentzian_structure():
    cfg = make_config(0.05, 1.0, 0.05, 1, 0, 1, 0.0, 0.0, 0.7,
                      gamma=(0.0, 0.0, 0.4))
    val = suscept.chi3_cross(cfg)
    d3 = 0.7
    g3 = 0.4
    assert val.real / val.imag == pytest.approx(d3 / g3, rel=1e-12)


def test_chi3_cross_detuning_flip_conjugates_pole():
    base = dict(ga=0.05, gb=1.0, gc=0.05, na=1, nb=0, nc=1)
    cfg = make_config(base["ga"], base["gb"], base["gc"], base["na"], base["nb"],
                      base["nc"], 0.0, 0.0, 0.7, gamma=(0.0, 0.0, 0.4))
    neg = make_config(base["ga"], base["gb"], base["gc"], base["na"], base["nb"],
                      base["nc"], 0.0, 0.0, -0.7, gamma=(0.0, 0.0, 0.4))
    a = suscept.chi3_cross(cfg)
    b = suscept.chi3_cross(neg)
    assert b == pytest.approx(-a.conjugate(), rel=1e-12)


def test_conjugate_transition_identity(lossy_config):
    assert (suscept.chi3_cross_conjugate_transition(lossy_config)
            == suscept.chi3_cross(lossy_config))


def test_conjugate_transition_identity_random_batch():
    rng = np.random.default_rng(3)
    for _ in range(100):
        cfg = make_config(rng.uniform(0.005, 0.05), rng.uniform(0.5, 1.5),
                          rng.uniform(0.005, 0.05), int(rng.integers(1, 4)),
                          int(rng.integers(0, 3)), int(rng.integers(1, 4)),
                          rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                          gamma=tuple(rng.uniform(0.01, 0.5, size=3)))
        assert (suscept.chi3_cross_conjugate_transition(cfg)
                == suscept.chi3_cross(cfg))


def test_hermitian_real_couplings_give_real_chis(reference_config):
    for f in (suscept.chi1, suscept.chi3_self, suscept.chi3_cross):
        val = f(reference_config)
        assert abs(val.imag) < 1e-13 * max(1.0, abs(val.real))


def test_chi_poles_raise():
    no_a = make_config(0.0, 1.0, 0.02, 1, 0, 1, 0.4, 0.1, 0.9)
    with pytest.raises(PoleError, match="eps_a"):
        suscept.chi1(no_a)
    no_c = make_config(0.02, 1.0, 0.02, 1, 0, 0, 0.4, 0.1, 0.9)
    with pytest.raises(PoleError, match="eps_c"):
        suscept.chi3_cross(no_c)
    pole3 = make_config(0.02, 1.0, 0.02, 1, 0, 1, 0.4, 0.4, 0.0)  # delta_3 = 0, gamma_3 = 0
    with pytest.raises(PoleError, match="delta_3"):
        suscept.chi3_cross(pole3)


def test_hermitian_limit_matches_kerr_coefficients(reference_config):
    co = effective.coefficients(reference_config)
    ea, ec = model.perturbation_strengths(reference_config)
    assert suscept.chi1(reference_config) == pytest.approx(-co.linear / ea**2, rel=1e-12)
    assert suscept.chi3_self(reference_config) == pytest.approx(
        -2 * co.self_kerr / (3 * ea**4), rel=1e-12)
    assert suscept.chi3_cross(reference_config) == pytest.approx(
        -co.cross_kerr / (6 * ea**2 * ec**2), rel=1e-12)


# -- coherences --------------------------------------------------------------

def test_coherences_vanish_without_a_photons():
    cfg = make_config(0.02, 1.0, 0.02, 0, 0, 1, 0.4, 0.1, 0.9)
    c = suscept.coherences(cfg, 3)
    assert c.rho21 == 0
    assert c.rho43 == 0


def test_coherence_first_order_two_level_limit():
    # pump and c-probe off: rho21 = -eps_a e^{i phi_a} / delta_1 + O(eps^3)
    phi = 0.9
    cfg = make_config(0.01 * cmath.exp(1j * phi), 0.0, 0.0, 1, 0, 0, 0.8, 0.3, 0.9)
    sp = model.split(cfg)
    c = suscept.coherences(cfg, 1)
    assert c.rho21 == pytest.approx(-sp.eps_a * cmath.exp(1j * phi) / 0.8, rel=1e-12)


def test_coherence_gauge_covariance_lossy(lossy_config):
    phi_a, phi_c = 0.7, -1.1
    phased = make_config(lossy_config.mode_a.g * cmath.exp(1j * phi_a),
                         lossy_config.mode_b.g * cmath.exp(0.4j),
                         lossy_config.mode_c.g * cmath.exp(1j * phi_c),
                         lossy_config.mode_a.n, lossy_config.mode_b.n,
                         lossy_config.mode_c.n,
                         lossy_config.mode_a.delta, lossy_config.mode_b.delta,
                         lossy_config.mode_c.delta, gamma=lossy_config.gamma)
    plain = suscept.coherences(lossy_config, 3)
    rot = suscept.coherences(phased, 3)
    assert rot.rho21 == pytest.approx(plain.rho21 * cmath.exp(1j * phi_a), rel=1e-12)
    assert rot.rho43 == pytest.approx(plain.rho43 * cmath.exp(1j * phi_c), rel=1e-12)


@pytest.mark.parametrize("gamma", [(0.0, 0.0, 0.0), (0.12, 0.2, 0.07)])
def test_closed_forms_match_coherence_extraction(gamma):
    cfg = make_config(0.012, 1.1, 0.009, 2, 1, 1, 0.45, -0.2, 0.4, gamma=gamma)
    c1, c3s, c3c = _bridge_chis(cfg)
    assert suscept.chi1(cfg) == pytest.approx(c1, rel=1e-6)
    assert suscept.chi3_self(cfg) == pytest.approx(c3s, rel=1e-6)
    assert suscept.chi3_cross(cfg) == pytest.approx(c3c, rel=1e-6)


def test_coherence_evaluator_rejects_unknown_element(reference_config):
    with pytest.raises(ValueError):
        suscept.coherence_evaluator(reference_config, element="rho31")


# -- sweeps ------------------------------------------------------------------

def test_sweep_two_steps_gives_endpoints(reference_config):
    rows = suscept.sweep(reference_config, "da", -1.0, 1.0, 2)
    assert [r.value for r in rows] == [-1.0, 1.0]
    assert all(r.valid for r in rows)


def test_sweep_chi1_real_part_crosses_raman_point():
    # scanning the a-detuning through delta_2 = 0 flips the dispersive sign
    cfg = make_config(0.02, 1.0, 0.02, 1, 0, 1, 0.0, 0.0, 0.9,
                      gamma=(0.05, 0.05, 0.05))
    rows = suscept.sweep(cfg, "da", -0.25, 0.25, 41)
    re = [r.point.chi1.real for r in rows]
    mid = len(rows) // 2
    assert abs(re[mid]) < 1e-10 * max(abs(x) for x in re)  # dark point
    assert re[mid - 1] * re[mid + 1] < 0


def test_sweep_emits_gap_row_at_pole():
    # gamma_3 = 0 and the grid hits delta_3 = 0 exactly
    cfg = make_config(0.02, 1.0, 0.02, 1, 0, 1, 0.3, 0.3, 0.5)
    rows = suscept.sweep(cfg, "dc", -1.0, 1.0, 3)
    assert [r.valid for r in rows] == [True, False, True]
    assert rows[1].point is None
    assert "delta_3" in rows[1].reason


def test_sweep_rejects_bad_arguments(reference_config):
    with pytest.raises(ValueError):
        suscept.sweep(reference_config, "dx", 0.0, 1.0, 5)
    with pytest.raises(ValueError):
        suscept.sweep(reference_config, "da", 0.0, 1.0, 1)


def test_sweep_even_odd_structure_about_resonance():
    cfg = make_config(0.05, 1.0, 0.05, 1, 0, 1, 0.0, 0.0, 0.0,
                      gamma=(0.0, 0.0, 0.4))
    rows = suscept.sweep(cfg, "dc", -2.0, 2.0, 101)
    im = np.array([r.point.chi3_cross.imag for r in rows])
    re = np.array([r.point.chi3_cross.real for r in rows])
    assert np.max(np.abs(im - im[::-1])) < 1e-12 * np.max(np.abs(im))
    assert np.max(np.abs(re + re[::-1])) < 1e-12 * np.max(np.abs(re))
    assert int(np.argmax(im)) == 50
