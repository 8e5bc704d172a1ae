"""Closed-form linear, self-Kerr and cross-Kerr response of the relaxed atom.

The coefficients are defined in the lossless regime only (decay belongs to
the susceptibility module).  In terms of the multi-photon detunings and
``G_b = |g_b|^2 (n_b + 1)`` the shared pole structure is
``D_K = delta_1*delta_2 - G_b``; the cross-Kerr coefficient additionally
diverges at delta_3 = 0.  The n_a**2 scaling of the fourth-order eigenvalue
correction forces the self-Kerr numerator to carry |g_a|^4; this form is
cross-validated against finite-difference extraction of the exact ground
eigenvalue in the test suite.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import NotHermitianError, NotResonantError, PoleError
from .model import SystemConfig

RESONANCE_RTOL = 1e-12


@dataclass(frozen=True)
class KerrCoefficients:
    """Angular-frequency coefficients of the effective photon-number evolution.

    The relaxed ground state accumulates phase exp(-i*(L*n_a + S*n_a**2 +
    K*n_a*n_c)*t) with L = ``linear``, S = ``self_kerr``, K = ``cross_kerr``.
    """

    linear: float
    self_kerr: float
    cross_kerr: float


def _require_lossless(config: SystemConfig) -> None:
    if not config.is_hermitian:
        raise NotHermitianError(
            "Kerr coefficients are defined for gamma = (0, 0, 0) only; "
            "use the susceptibility module for the lossy response")


def coefficients(config: SystemConfig) -> KerrCoefficients:
    """Linear, self-Kerr and cross-Kerr coefficients of the relaxed ground state."""
    _require_lossless(config)
    d1, d2, d3 = config.detunings()
    ga2 = abs(config.mode_a.g) ** 2
    gc2 = abs(config.mode_c.g) ** 2
    gb2n = abs(config.mode_b.g) ** 2 * (config.mode_b.n + 1)
    dk = d1 * d2 - gb2n
    if d3 == 0:
        raise PoleError("pole: delta_3 = 0")
    if dk == 0:
        raise PoleError("pole: delta_1*delta_2 - |g_b|^2 (n_b+1) = 0")
    linear = -d2 * ga2 / dk
    self_kerr = d2 * (d2**2 + gb2n) * ga2**2 / dk**3
    cross_kerr = -ga2 * gb2n * gc2 / (d3 * dk**2)
    return KerrCoefficients(linear=linear, self_kerr=self_kerr, cross_kerr=cross_kerr)


def pure_cross_kerr(config: SystemConfig) -> float:
    """Cross-Kerr coefficient on Raman resonance, where the response is pure.

    Requires delta_2 = 0 (to within ``RESONANCE_RTOL`` of the detuning
    scale); then the linear and self-Kerr terms vanish identically and the
    full coefficient reduces to -|g_a|^2 |g_c|^2 / (delta_3 |g_b|^2 (n_b+1)).
    """
    _require_lossless(config)
    d1, d2, d3 = config.detunings()
    if abs(d2) > RESONANCE_RTOL * max(1.0, abs(d1), abs(d3)):
        raise NotResonantError(f"delta_2 = {d2!r} is not Raman-resonant")
    gb2n = abs(config.mode_b.g) ** 2 * (config.mode_b.n + 1)
    if d3 == 0:
        raise PoleError("pole: delta_3 = 0")
    if gb2n == 0:
        raise PoleError("pole: |g_b|^2 (n_b+1) = 0")
    return -abs(config.mode_a.g) ** 2 * abs(config.mode_c.g) ** 2 / (d3 * gb2n)


def effective_phase(coeffs: KerrCoefficients, n_a: int, n_c: int, t: float) -> complex:
    """Phase factor exp(-i*(L*n_a + S*n_a**2 + K*n_a*n_c)*t) on a Fock product."""
    if n_a < 0 or n_c < 0:
        raise ValueError("photon numbers must be >= 0")
    phase = (coeffs.linear * n_a + coeffs.self_kerr * n_a**2
             + coeffs.cross_kerr * n_a * n_c) * t
    return cmath.exp(-1j * phase)
