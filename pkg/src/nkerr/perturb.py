"""Two-variable Rayleigh-Schrodinger series for the driven four-level manifold.

The unperturbed operator couples bare levels 2 and 3 through the pump mode
and leaves levels 1 and 4 bare; the two probe couplings act as independent
perturbations of strengths eps_a and eps_c.  Eigenvalues and eigenvectors of
the full matrix are expanded as double power series in (eps_a, eps_c), with
state coefficients expressed in the dressed eigenbasis of the unperturbed
operator.  Entries are filled diagonal by diagonal in the total order
p + q, ascending p within a diagonal, so a table is bit-reproducible and
extending ``max_order`` never changes lower entries.

Pairing convention.  With decay the unperturbed operator is not Hermitian:
its diagonal carries ``delta_j - i*gamma_j``.  Every bra appearing in the
recursion is then the matching *left* eigenvector (biorthogonal pairing,
``left @ right = identity``) rather than a conjugated ket.  For gamma = 0
the left rows are exactly the conjugated kets, so the Hermitian textbook
recursion is recovered without branching; with decay this pairing is the
analytic continuation of the Hermitian formulas in the complex detunings,
which is how the loss model is defined in the first place.

Normalisation.  The diagonal coefficient at each order is fixed by the
order-by-order expansion of the state norm.  The conjugated coefficients
appearing there are supplied by a companion series for the transposed
problem (conjugated couplings, identical complex detunings), which this
module computes in lockstep.  For real couplings the companion series
coincides with the primary one; in the Hermitian case it is its complex
conjugate, which makes the diagonal coefficients real.  The residual phase
freedom is fixed by assigning the same value to both series' diagonal
entries at every order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, MissingOrderError
from .model import PerturbationSplit

DEGENERACY_TOL = 1e-8


@dataclass(frozen=True)
class DressedBasis:
    """Eigensystem of the unperturbed operator in physical label order.

    Index 0 is bare level 1 (eigenvalue 0), indices 1 and 2 are the minus-
    and plus-root dressed combinations of bare levels 2 and 3, index 3 is
    bare level 4.  ``right`` holds kets as columns, ``left`` holds the
    paired bras as rows with ``left @ right = identity``.  ``n_minus`` and
    ``n_plus`` are the dressed-state normalizers, positive reals whenever
    the operator is Hermitian.
    """

    eigenvalues: np.ndarray
    right: np.ndarray
    left: np.ndarray
    n_minus: complex
    n_plus: complex


def dressed_basis(h0: np.ndarray, degeneracy_tol: float = DEGENERACY_TOL) -> DressedBasis:
    """Diagonalise the pump block exactly; reject near-degenerate spectra."""
    d1 = h0[1, 1]
    d2 = h0[2, 2]
    d3 = h0[3, 3]
    x = h0[1, 2]  # Omega_b / 2
    y = h0[2, 1]  # conj(Omega_b) / 2

    lam = np.zeros(4, dtype=complex)
    right = np.zeros((4, 4), dtype=complex)
    left = np.zeros((4, 4), dtype=complex)
    lam[0] = 0.0
    lam[3] = d3
    right[0, 0] = left[0, 0] = 1.0
    right[3, 3] = left[3, 3] = 1.0

    if x == 0 and y == 0:
        # Uncoupled pump: the two-level block is already diagonal.
        lam[1], lam[2] = d1, d2
        right[1, 1] = left[1, 1] = 1.0
        right[2, 2] = left[2, 2] = 1.0
        n_minus = n_plus = 1.0 + 0.0j
    else:
        root = np.sqrt((d1 - d2) ** 2 + 4.0 * x * y + 0.0j)
        lam[1] = 0.5 * ((d1 + d2) - root)
        lam[2] = 0.5 * ((d1 + d2) + root)
        norms = []
        for idx in (1, 2):
            shift = lam[idx] - d1
            pairing = x * y + shift**2
            nrm = np.sqrt(pairing + 0.0j)
            if nrm == 0:
                raise DegeneracyError("dressed pair is defective: left/right pairing vanishes")
            right[1, idx] = x / nrm
            right[2, idx] = shift / nrm
            left[idx, 1] = y / nrm
            left[idx, 2] = shift / nrm
            norms.append(2.0 * nrm)
        n_minus, n_plus = norms

    scale = max(1.0, float(np.linalg.norm(h0)))
    for i in range(4):
        for j in range(i + 1, 4):
            gap = abs(lam[i] - lam[j])
            if gap < degeneracy_tol * scale:
                raise DegeneracyError(
                    f"unperturbed spectrum is near-degenerate: eigenvalues {i + 1} and "
                    f"{j + 1} separated by only {gap:.3e} "
                    f"(tolerance {degeneracy_tol:.1e} x {scale:.3e})"
                )
    return DressedBasis(eigenvalues=lam, right=right, left=left,
                        n_minus=n_minus, n_plus=n_plus)


class SeriesTable:
    """Energy corrections and dressed-basis state coefficients for one split.

    Entries are keyed by eigenstate index n (1-based, physical label order of
    :class:`DressedBasis`) and order (p, q).  Order (0, 0) is seeded for all
    four states; higher orders are filled on demand for the states that are
    actually requested.  The companion series of the transposed problem is
    carried alongside for the normalisation step and for forming bras.
    """

    def __init__(self, split: PerturbationSplit,
                 degeneracy_tol: float = DEGENERACY_TOL) -> None:
        self.split = split
        self.basis = dressed_basis(split.h0, degeneracy_tol)
        r, l = self.basis.right, self.basis.left
        self._lam = self.basis.eigenvalues
        self._vta = l @ split.va @ r
        self._vtc = l @ split.vc @ r
        self._e: dict[tuple[int, int, int], complex] = {}
        self._ed: dict[tuple[int, int, int], complex] = {}
        self._a: dict[tuple[int, int, int], np.ndarray] = {}
        self._ad: dict[tuple[int, int, int], np.ndarray] = {}
        for n in range(1, 5):
            self._e[(n, 0, 0)] = complex(self._lam[n - 1])
            self._ed[(n, 0, 0)] = complex(self._lam[n - 1])
            unit = np.zeros(4, dtype=complex)
            unit[n - 1] = 1.0
            self._a[(n, 0, 0)] = unit
            self._ad[(n, 0, 0)] = unit.copy()

    def has_order(self, n: int, p: int, q: int) -> bool:
        return (n, p, q) in self._e

    def max_order(self, n: int) -> int:
        """Largest total order d such that every (p, q) with p + q <= d is present."""
        d = 0
        while all(self.has_order(n, p, d + 1 - p) for p in range(d + 2)):
            d += 1
        return d

    def energy(self, n: int, p: int, q: int) -> complex:
        try:
            return self._e[(n, p, q)]
        except KeyError:
            raise MissingOrderError(f"energy correction ({p},{q}) for state {n} not computed") from None

    def coefficient(self, n: int, m: int, p: int, q: int) -> complex:
        try:
            return complex(self._a[(n, p, q)][m - 1])
        except KeyError:
            raise MissingOrderError(f"state correction ({p},{q}) for state {n} not computed") from None

    def ket_correction(self, n: int, p: int, q: int) -> np.ndarray:
        """Order-(p, q) ket correction in the bare basis (column vector)."""
        try:
            return self.basis.right @ self._a[(n, p, q)]
        except KeyError:
            raise MissingOrderError(f"state correction ({p},{q}) for state {n} not computed") from None

    def bra_correction(self, n: int, p: int, q: int) -> np.ndarray:
        """Order-(p, q) bra correction in the bare basis (row vector).

        Built from the companion series; in the Hermitian case this equals
        the conjugate of :meth:`ket_correction`.
        """
        try:
            return self._ad[(n, p, q)] @ self.basis.left
        except KeyError:
            raise MissingOrderError(f"state correction ({p},{q}) for state {n} not computed") from None

    def normalization_residual(self, n: int, p: int, q: int) -> complex:
        """Order-(p, q) residual of the norm expansion; zero by construction."""
        total = 0.0 + 0.0j
        for i in range(p + 1):
            for j in range(q + 1):
                total += np.dot(self._ad[(n, i, j)], self._a[(n, p - i, q - j)])
        if (p, q) == (0, 0):
            total -= 1.0
        return total

    # -- recursion ---------------------------------------------------------

    def _require_dependencies(self, n: int, p: int, q: int) -> None:
        for i in range(p + 1):
            for j in range(q + 1):
                if (i, j) == (p, q):
                    continue
                if (n, i, j) not in self._e:
                    raise MissingOrderError(
                        f"order ({p},{q}) for state {n} needs ({i},{j}) computed first")

    def _rhs(self, coeffs, vta, vtc, n: int, p: int, q: int) -> np.ndarray:
        rhs = np.zeros(4, dtype=complex)
        if p >= 1:
            rhs += vta @ coeffs[(n, p - 1, q)]
        if q >= 1:
            rhs += vtc @ coeffs[(n, p, q - 1)]
        return rhs

    def _advance(self, n: int, p: int, q: int) -> None:
        if self.has_order(n, p, q):
            return
        self._require_dependencies(n, p, q)
        rhs = self._rhs(self._a, self._vta, self._vtc, n, p, q)
        rhsd = self._rhs(self._ad, self._vta.T, self._vtc.T, n, p, q)

        corr = np.zeros(4, dtype=complex)
        corrd = np.zeros(4, dtype=complex)
        overlap = 0.0 + 0.0j
        for i in range(p + 1):
            for j in range(q + 1):
                if (i, j) in ((0, 0), (p, q)):
                    continue
                corr += self._e[(n, i, j)] * self._a[(n, p - i, q - j)]
                corrd += self._ed[(n, i, j)] * self._ad[(n, p - i, q - j)]
                overlap += np.dot(self._ad[(n, i, j)], self._a[(n, p - i, q - j)])

        k = n - 1
        e_new = rhs[k] - corr[k]
        ed_new = rhsd[k] - corrd[k]

        a_new = np.zeros(4, dtype=complex)
        ad_new = np.zeros(4, dtype=complex)
        lam_n = self._lam[k]
        for m in range(4):
            if m == k:
                continue
            gap = lam_n - self._lam[m]
            if gap == 0:
                raise DegeneracyError(f"vanishing energy denominator between states {n} and {m + 1}")
            a_new[m] = (rhs[m] - corr[m]) / gap
            ad_new[m] = (rhsd[m] - corrd[m]) / gap
        # Norm expansion fixes the real part; the residual phase freedom is
        # resolved by giving both series the same diagonal entry.
        a_new[k] = ad_new[k] = -0.5 * overlap

        self._e[(n, p, q)] = complex(e_new)
        self._ed[(n, p, q)] = complex(ed_new)
        self._a[(n, p, q)] = a_new
        self._ad[(n, p, q)] = ad_new


def energy_correction(table: SeriesTable, n: int, p: int, q: int) -> complex:
    """Order-(p, q) eigenvalue correction for state n, computing it if needed."""
    if not table.has_order(n, p, q):
        table._advance(n, p, q)
    return table.energy(n, p, q)


def state_correction(table: SeriesTable, n: int, m: int, p: int, q: int) -> complex:
    """Dressed-basis coefficient of state m in the order-(p, q) correction of state n."""
    if not table.has_order(n, p, q):
        table._advance(n, p, q)
    return table.coefficient(n, m, p, q)


def build_series(split: PerturbationSplit, n: int, max_order: int,
                 degeneracy_tol: float = DEGENERACY_TOL) -> SeriesTable:
    """Populate a table for state n with every order p + q <= max_order."""
    if not 1 <= n <= 4:
        raise ValueError(f"state index must lie in 1..4, got {n}")
    if max_order < 0:
        raise ValueError(f"max_order must be >= 0, got {max_order}")
    table = SeriesTable(split, degeneracy_tol)
    for d in range(1, max_order + 1):
        for p in range(d + 1):
            table._advance(n, p, d - p)
    return table


def evaluate_energy(table: SeriesTable, n: int, eps_a: float, eps_c: float,
                    total_order: int) -> complex:
    """Partial sum of the eigenvalue series through the given total order."""
    total = 0.0 + 0.0j
    for d in range(total_order + 1):
        for p in range(d + 1):
            total += eps_a**p * eps_c ** (d - p) * table.energy(n, p, d - p)
    return total
