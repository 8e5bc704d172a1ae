"""Independent ground truth: dense eigensolution, propagation, Taylor extraction.

Everything here is deliberately decoupled from the perturbation engine so the
two can cross-check each other: eigensystems come from LAPACK (or, for the
high-precision lane, from the characteristic polynomial in ``mpmath``
arithmetic), time evolution from spectral decomposition, and series
coefficients from central finite differences with Richardson extrapolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import mpmath as mp
import numpy as np

from . import model
from .errors import ConvergenceError, StepError, TrackingError
from .model import PerturbationSplit, SystemConfig

RESIDUAL_TOL = 1e-12
TRACK_STEPS = 32  # fixed path resolution keeps tracking bit-reproducible


@dataclass(frozen=True)
class EigenSolution:
    """All four eigenpairs, sorted by ascending real part then imaginary part."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # unit columns, eigenvectors[:, k] pairs with eigenvalues[k]
    residuals: np.ndarray


def _is_hermitian(h: np.ndarray) -> bool:
    return bool(np.array_equal(h, h.conj().T))


def exact_eigensystem(h: np.ndarray) -> EigenSolution:
    """Dense eigensolution with an explicit residual contract."""
    try:
        if _is_hermitian(h):
            w, v = np.linalg.eigh(h)
            w = w.astype(complex)
        else:
            w, v = np.linalg.eig(h)
            order = np.lexsort((w.imag, w.real))
            w = w[order]
            v = v[:, order]
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    residuals = np.array([np.linalg.norm(h @ v[:, k] - w[k] * v[:, k]) for k in range(4)])
    bound = RESIDUAL_TOL * max(1.0, float(np.linalg.norm(h)))
    if residuals.max() > bound:
        raise ConvergenceError(
            f"eigenpair residual {residuals.max():.3e} exceeds contract {bound:.3e}")
    return EigenSolution(eigenvalues=w, eigenvectors=v, residuals=residuals)


def propagate(h: np.ndarray, psi0: np.ndarray, t: float) -> np.ndarray:
    """exp(-i*h*t) @ psi0 via spectral decomposition (non-defective inputs)."""
    sol = exact_eigensystem(h)
    v = sol.eigenvectors
    coeffs = np.linalg.solve(v, np.asarray(psi0, dtype=complex))
    return v @ (np.exp(-1j * sol.eigenvalues * t) * coeffs)


def track_ground(config: SystemConfig, eps_scale: float, steps: int = TRACK_STEPS) -> complex:
    """Eigenvalue continuously connected to bare level 1 as the probes ramp on.

    Walks ``steps`` uniform increments of the overall probe strength from 0
    to ``eps_scale``, following the eigenvector of maximal overlap with the
    previous step.
    """
    sp = model.split(config)
    lam0 = exact_eigensystem(sp.h0).eigenvalues
    scale = max(1.0, float(np.linalg.norm(sp.h0)))
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(lam0[i] - lam0[j]) < 1e-8 * scale:
                raise TrackingError(
                    f"unperturbed spectrum nearly degenerate "
                    f"(|lambda_{i + 1} - lambda_{j + 1}| = {abs(lam0[i] - lam0[j]):.3e}); "
                    "cannot identify the ground branch")
    prev = np.zeros(4, dtype=complex)
    prev[0] = 1.0
    value = 0.0 + 0.0j
    for k in range(1, steps + 1):
        s = eps_scale * k / steps
        h = sp.h0 + (s * sp.eps_a) * sp.va + (s * sp.eps_c) * sp.vc
        sol = exact_eigensystem(h)
        overlaps = np.abs(prev.conj() @ sol.eigenvectors)
        idx = int(np.argmax(overlaps))
        if overlaps[idx] < 0.5:
            raise TrackingError(
                f"lost the ground branch at ramp step {k}/{steps}: "
                f"best overlap {overlaps[idx]:.3f} < 0.5")
        prev = sol.eigenvectors[:, idx]
        value = complex(sol.eigenvalues[idx])
    return value


def characteristic_scale(config: SystemConfig) -> float:
    """max(1, |delta_1|, |delta_2|, |delta_3|, |Omega_b|); sets default FD steps."""
    d = config.detunings()
    om_b = abs(model.rabi_frequency(config.mode_b))
    return max(1.0, abs(d.delta1), abs(d.delta2), abs(d.delta3), om_b)


def ground_eigenvalue_function(split: PerturbationSplit,
                               dps: int | None = None) -> Callable[[float, float], complex]:
    """Ground eigenvalue of ``h0 + x*va + y*vc`` as a function of (x, y).

    Intended for sampling in a small neighbourhood of (0, 0), where the
    continuation of the zero eigenvalue of the uncoupled level 1 is
    unambiguous.  With ``dps`` set, the eigenvalue is found as the
    smallest-modulus root of the characteristic polynomial in ``mpmath``
    arithmetic, which keeps the *absolute* error of the near-zero eigenvalue
    far below double-precision rounding; this matters when high-order finite
    differences divide by step**4.
    """
    h0, va, vc = split.h0, split.va, split.vc

    if dps is None:
        def f(x: float, y: float) -> complex:
            h = h0 + x * va + y * vc
            sol = exact_eigensystem(h)
            idx = int(np.argmax(np.abs(sol.eigenvectors[0, :])))
            return complex(sol.eigenvalues[idx])
        return f

    def f_mp(x: float, y: float) -> complex:
        h = h0 + x * va + y * vc
        with mp.workdps(dps):
            # char poly of the tridiagonal matrix by the three-term recurrence,
            # as coefficient lists in ascending powers of lambda
            def polymul(pa, pb):
                out = [mp.mpc(0)] * (len(pa) + len(pb) - 1)
                for i, ca in enumerate(pa):
                    for j, cb in enumerate(pb):
                        out[i + j] += ca * cb
                return out

            def polysub(pa, pb):
                out = list(pa) + [mp.mpc(0)] * (len(pb) - len(pa))
                for j, cb in enumerate(pb):
                    out[j] -= cb
                return out

            d_prev = [mp.mpc(1)]
            d_cur = [mp.mpc(h[0, 0]), mp.mpc(-1)]
            for k in range(1, 4):
                diag = [mp.mpc(h[k, k]), mp.mpc(-1)]
                off = mp.mpc(h[k, k - 1]) * mp.mpc(h[k - 1, k])
                nxt = polysub(polymul(diag, d_cur), [off * c for c in d_prev])
                d_prev, d_cur = d_cur, nxt
            roots = mp.polyroots(list(reversed(d_cur)), maxsteps=200, extraprec=40)
            root = min(roots, key=abs)
            return complex(root)

    return f_mp


_STENCILS: dict[int, tuple[tuple[int, float], ...]] = {
    0: ((0, 1.0),),
    1: ((-1, -0.5), (1, 0.5)),
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
    3: ((-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)),
    4: ((-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)),
}


def fd_extract(target: Callable[[float, float], complex], p: int, q: int, step: float,
               rel_tol: float = 1e-5, abs_tol: float = 1e-12) -> complex:
    """Taylor coefficient (1/p!q!) d^{p+q} target / dx^p dy^q at (0, 0).

    Central-difference tensor stencils of second-order accuracy at steps
    ``step`` and ``step/2``, combined by one level of Richardson
    extrapolation.  A second extrapolation from steps ``step/2`` and
    ``step/4`` is evaluated purely as a consistency check: if the two
    extrapolated values disagree by more than 10x the requested tolerance,
    the step is badly chosen and :class:`StepError` is raised.
    """
    if p < 0 or q < 0 or p + q > 4:
        raise ValueError(f"supported derivative orders are 0 <= p+q <= 4, got ({p},{q})")
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    if (p, q) == (0, 0):
        return complex(target(0.0, 0.0))

    cache: dict[tuple[float, float], complex] = {}

    def sample(x: float, y: float) -> complex:
        key = (x, y)
        if key not in cache:
            cache[key] = complex(target(x, y))
        return cache[key]

    norm = math.factorial(p) * math.factorial(q)

    def estimate(h: float) -> complex:
        acc = 0.0 + 0.0j
        for ox, wx in _STENCILS[p]:
            for oy, wy in _STENCILS[q]:
                acc += wx * wy * sample(ox * h, oy * h)
        return acc / h ** (p + q) / norm

    a1 = estimate(step)
    a2 = estimate(step / 2)
    a3 = estimate(step / 4)
    r1 = (4.0 * a2 - a1) / 3.0
    r2 = (4.0 * a3 - a2) / 3.0
    if abs(r1 - r2) > 10.0 * (rel_tol * max(abs(r1), abs(r2)) + abs_tol):
        raise StepError(
            f"extrapolations at steps ({step:.3e}, {step / 2:.3e}) and "
            f"({step / 2:.3e}, {step / 4:.3e}) disagree: {r1} vs {r2}")
    return r1
