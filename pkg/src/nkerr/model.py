"""Single-manifold model of a four-level atom driven by three field modes.

Conventions used throughout the package:

* hbar = 1 and epsilon_0 = 1, so couplings, detunings and decay rates are
  all angular frequencies.
* Atomic levels 1..4 map onto rows/columns 0..3 of the canonical basis, in
  that order.  All matrices are plain complex numpy arrays.
* Mode "a" drives the 1<->2 transition, mode "b" drives 2<->3 and mode "c"
  drives 3<->4, which closes a four-dimensional manifold of atom+photon
  product states under the interaction.
* Decay enters as complex detunings ``delta_j - i*gamma_j`` on the matrix
  diagonal; ``gamma = (0, 0, 0)`` selects the Hermitian (lossless) regime.
* In the single-manifold matrix the (1,2) entry carries the conjugated "a"
  Rabi frequency and (2,1) the unconjugated one, and likewise (3,4)/(4,3)
  for mode "c"; this fixed phase placement is normative for everything
  downstream.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

ModeLabel = Literal["a", "b", "c"]

_LABELS = ("a", "b", "c")


@dataclass(frozen=True)
class FieldMode:
    """One driving mode: complex coupling, single-photon detuning, photon number."""

    label: ModeLabel
    g: complex
    delta: float
    n: int

    def __post_init__(self) -> None:
        if self.label not in _LABELS:
            raise ValueError(f"unknown mode label {self.label!r}; expected one of {_LABELS}")
        if self.n < 0:
            raise ValueError(f"photon number must be >= 0, got {self.n}")


@dataclass(frozen=True)
class SystemConfig:
    """Full scenario: the three modes plus decay rates (gamma_1, gamma_2, gamma_3)."""

    mode_a: FieldMode
    mode_b: FieldMode
    mode_c: FieldMode
    gamma: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        for mode, label in ((self.mode_a, "a"), (self.mode_b, "b"), (self.mode_c, "c")):
            if mode.label != label:
                raise ValueError(f"mode_{label} carries label {mode.label!r}")
        if len(self.gamma) != 3:
            raise ValueError("gamma must hold exactly three decay rates")
        for g in self.gamma:
            if not math.isfinite(g) or g < 0:
                raise ValueError(f"decay rates must be finite and >= 0, got {self.gamma}")

    @property
    def is_hermitian(self) -> bool:
        return self.gamma == (0.0, 0.0, 0.0)

    def detunings(self) -> "MultiPhotonDetunings":
        return multi_photon_detunings(self.mode_a.delta, self.mode_b.delta, self.mode_c.delta)


class MultiPhotonDetunings(NamedTuple):
    delta1: float
    delta2: float
    delta3: float


class ManifoldIndex(NamedTuple):
    """Product basis label |atomic_level, n_a, n_b, n_c>."""

    atomic_level: int
    n_a: int
    n_b: int
    n_c: int


@dataclass(frozen=True)
class PerturbationSplit:
    """Decomposition H = h0 + eps_a*va + eps_c*vc with the probe phases.

    ``va`` is nonzero only on the (1,2)/(2,1) entries and ``vc`` only on
    (3,4)/(4,3), each with unit modulus; the strengths are
    eps_a = |Omega_a|/2 and eps_c = |Omega_c|/2.  Arrays are shared, not
    copied; treat them as read-only.
    """

    h0: np.ndarray
    va: np.ndarray
    vc: np.ndarray
    eps_a: float
    eps_c: float
    phi_a: float
    phi_c: float

    def reconstruct(self) -> np.ndarray:
        return self.h0 + self.eps_a * self.va + self.eps_c * self.vc


def multi_photon_detunings(delta_a: float, delta_b: float, delta_c: float) -> MultiPhotonDetunings:
    """Cumulative detunings (delta_a, delta_a - delta_b, delta_a - delta_b + delta_c)."""
    d1 = delta_a
    d2 = delta_a - delta_b
    d3 = d2 + delta_c
    return MultiPhotonDetunings(d1, d2, d3)


def rabi_frequency(mode: FieldMode) -> complex:
    """Rabi frequency of a mode; mode "b" couples to n+1 photons, "a" and "c" to n."""
    if mode.label == "b":
        return 2.0 * complex(mode.g) * math.sqrt(mode.n + 1)
    return 2.0 * complex(mode.g) * math.sqrt(mode.n)


def perturbation_strengths(config: SystemConfig) -> tuple[float, float]:
    """(eps_a, eps_c) = (|Omega_a|/2, |Omega_c|/2) for the configuration."""
    return (
        abs(rabi_frequency(config.mode_a)) / 2.0,
        abs(rabi_frequency(config.mode_c)) / 2.0,
    )


def build_hamiltonian(config: SystemConfig) -> np.ndarray:
    """Single-manifold 4x4 matrix with complex diagonal delta_j - i*gamma_j."""
    d = config.detunings()
    om_a = rabi_frequency(config.mode_a)
    om_b = rabi_frequency(config.mode_b)
    om_c = rabi_frequency(config.mode_c)
    g1, g2, g3 = config.gamma
    h = np.zeros((4, 4), dtype=complex)
    h[1, 1] = d.delta1 - 1j * g1
    h[2, 2] = d.delta2 - 1j * g2
    h[3, 3] = d.delta3 - 1j * g3
    h[0, 1] = np.conj(om_a) / 2.0
    h[1, 0] = om_a / 2.0
    h[1, 2] = om_b / 2.0
    h[2, 1] = np.conj(om_b) / 2.0
    h[2, 3] = np.conj(om_c) / 2.0
    h[3, 2] = om_c / 2.0
    return h


def split(config: SystemConfig) -> PerturbationSplit:
    """Split the manifold matrix into the pump block plus the two probe couplings."""
    h = build_hamiltonian(config)
    om_a = rabi_frequency(config.mode_a)
    om_c = rabi_frequency(config.mode_c)
    eps_a = abs(om_a) / 2.0
    eps_c = abs(om_c) / 2.0
    phi_a = cmath.phase(om_a)
    phi_c = cmath.phase(om_c)

    h0 = h.copy()
    h0[0, 1] = h0[1, 0] = 0.0
    h0[2, 3] = h0[3, 2] = 0.0

    # unit phases taken directly from the Rabi frequencies; dividing by the
    # modulus loses less precision than a phase/exp round trip
    ua = om_a / abs(om_a) if om_a != 0 else 1.0 + 0.0j
    uc = om_c / abs(om_c) if om_c != 0 else 1.0 + 0.0j
    va = np.zeros((4, 4), dtype=complex)
    va[0, 1] = np.conj(ua)
    va[1, 0] = ua
    vc = np.zeros((4, 4), dtype=complex)
    vc[2, 3] = np.conj(uc)
    vc[3, 2] = uc

    return PerturbationSplit(h0=h0, va=va, vc=vc, eps_a=eps_a, eps_c=eps_c,
                             phi_a=phi_a, phi_c=phi_c)


def manifold_members(seed: ManifoldIndex) -> list[ManifoldIndex]:
    """The four product states closed under the interaction, seeded from level 1.

    The prototype manifold absorbs one "a" photon to reach level 2 and emits
    one "c" photon from level 4, so the seed needs n_a >= 1 and n_c >= 1.
    """
    if seed.atomic_level != 1:
        raise ValueError(f"manifold seed must sit on atomic level 1, got {seed.atomic_level}")
    if seed.n_a < 1:
        raise ValueError("n_a = 0: no 'a' photon to absorb on the 1->2 transition")
    if seed.n_c < 1:
        raise ValueError("n_c = 0: no 'c' photon to absorb on the 3->4 transition")
    na, nb, nc = seed.n_a, seed.n_b, seed.n_c
    return [
        seed,
        ManifoldIndex(2, na - 1, nb, nc),
        ManifoldIndex(3, na - 1, nb + 1, nc),
        ManifoldIndex(4, na - 1, nb + 1, nc - 1),
    ]
