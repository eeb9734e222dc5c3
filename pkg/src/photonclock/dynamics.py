"""Two-level rotor Hamiltonians, exact propagators, and the static-state residual.

Units: hbar is fixed to 1, so omega is the only scale and energies are in
units of hbar*omega. Every physical result downstream depends on the phase
omega*t only, never on omega and t separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qstate import ATOL, ket, tensor_product

HBAR = 1.0

# truncation threshold for the series propagator and its safety cap
_SERIES_EPS = 1e-16
_SERIES_MAX_TERMS = 128


@dataclass(frozen=True)
class ClockSpec:
    """Angular frequency of the polarization rotor driving both photons."""

    omega: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError("omega must be finite and positive")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega


def single_photon_hamiltonian(spec: ClockSpec) -> np.ndarray:
    """i*hbar*omega*(|H><V| - |V><H|), the generator rotating H into -V."""
    h, v = ket("H"), ket("V")
    return 1j * HBAR * spec.omega * (np.outer(h, v.conj()) - np.outer(v, h.conj()))


def global_hamiltonian(spec: ClockSpec) -> np.ndarray:
    """Sum of the one-photon generators on the pair space, clock factor first."""
    h1 = single_photon_hamiltonian(spec)
    eye = np.eye(2, dtype=complex)
    return tensor_product(h1, eye) + tensor_product(eye, h1)


def _isotropic_square(h: np.ndarray):
    """If h @ h == c2 * I (within roundoff) return (True, c2)."""
    sq = h @ h
    dim = h.shape[0]
    c2 = float(np.real(np.trace(sq))) / dim
    scale = max(1.0, abs(c2))
    deviation = float(np.max(np.abs(sq - c2 * np.eye(dim))))
    return deviation <= ATOL * scale and c2 >= -ATOL * scale, c2


def _expm_series(a: np.ndarray) -> np.ndarray:
    # scaling and squaring; the Taylor tail is truncated once the next term
    # falls below _SERIES_EPS in the infinity norm
    norm = float(np.linalg.norm(a, np.inf))
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm / 0.5)))
    scaled = a / (2.0 ** squarings)
    dim = a.shape[0]
    term = np.eye(dim, dtype=complex)
    total = np.eye(dim, dtype=complex)
    for k in range(1, _SERIES_MAX_TERMS):
        term = term @ scaled / k
        total = total + term
        if float(np.linalg.norm(term, np.inf)) < _SERIES_EPS:
            break
    for _ in range(squarings):
        total = total @ total
    return total


def propagator(h, t: float, method: str = "auto") -> np.ndarray:
    """Unitary exp(-i h t / hbar) for a Hermitian generator h.

    Two independent routes are available. The closed form applies whenever
    h @ h is proportional to the identity (true for the one-photon generator,
    whose square is (hbar*omega)^2 * I) and costs two trig calls. The series
    route is generic scaling-and-squaring and makes no structural assumption.
    ``method`` is one of ``"auto"``, ``"closed"``, ``"series"``.
    """
    hm = np.asarray(h, dtype=complex)
    if hm.ndim != 2 or hm.shape[0] != hm.shape[1]:
        raise ValueError("generator must be a square matrix")
    scale = max(1.0, float(np.max(np.abs(hm))) if hm.size else 0.0)
    if float(np.max(np.abs(hm - hm.conj().T))) > ATOL * scale:
        raise ValueError("generator must be Hermitian")
    if method not in ("auto", "closed", "series"):
        raise ValueError(f"unknown method {method!r}")

    if method in ("auto", "closed"):
        isotropic, c2 = _isotropic_square(hm)
        if isotropic:
            c = math.sqrt(max(c2, 0.0))
            dim = hm.shape[0]
            if c == 0.0:
                return np.eye(dim, dtype=complex)
            angle = c * t / HBAR
            return math.cos(angle) * np.eye(dim, dtype=complex) - 1j * (math.sin(angle) / c) * hm
        if method == "closed":
            raise ValueError("closed form needs h @ h proportional to the identity")
    return _expm_series((-1j * t / HBAR) * hm)


def wd_residual(h, psi) -> float:
    """Euclidean norm of h @ psi; zero iff psi is a static (zero-energy) state."""
    hm = np.asarray(h, dtype=complex)
    vec = np.asarray(psi, dtype=complex)
    if hm.ndim != 2 or vec.ndim != 1 or hm.shape[1] != vec.shape[0]:
        raise ValueError("dimension mismatch between operator and state")
    return float(np.linalg.norm(hm @ vec))


def product_state_phase(phase) -> np.ndarray:
    """Amplitudes over [HH, HV, VH, VV] of the evolving product pair at clock phase omega*t.

    Clock factor cos|H> - sin|V>, system factor cos|V> + sin|H>. Accepts a
    scalar phase or an array of phases (amplitudes land on the last axis).
    """
    ph = np.asarray(phase, dtype=float)
    c, s = np.cos(ph), np.sin(ph)
    return np.stack([s * c, c * c, -s * s, -s * c], axis=-1).astype(complex)


def product_state_at(t: float, spec: ClockSpec) -> np.ndarray:
    """The un-entangled reference pair at time t, starting from |HV> at t = 0."""
    return product_state_phase(spec.omega * float(t))
