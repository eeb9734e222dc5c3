"""Conditional pair probabilities for stationary versus evolving states.

Two preparations are compared. The stationary state is the one-period
amplitude average of the evolving product pair: the polarization singlet
(|HV> - |VH>)/sqrt(2), annihilated by the global generator. The evolving
("time dependent") preparation is the product pair itself, and its
statistics are averaged over one full period.

The headline quantity is P(V on system | H on clock). Closed forms, with
clock and system sharpness lambda_c, lambda_r:

    stationary, sharp        : 1
    time dependent, sharp    : 3/4
    stationary, unsharp      : (1 + lambda_c*lambda_r)/2
    time dependent, unsharp  : (2 + lambda_c*lambda_r)/4

so entanglement buys exactly lambda_c*lambda_r/4. All period integrals are
evaluated in the phase variable theta = omega*t (composite Simpson over
[0, 2*pi]), which makes every result independent of omega bit for bit.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import ClockSpec, product_state_phase
from .errors import DegenerateConditioningError, NumericalIntegrityError
from .measurement import SHARP, Outcome, SharpnessPair, joint_effect, unsharp_effects
from .qstate import projector, tensor_product, trace_of_product

DEGENERATE_DENOMINATOR = 1e-14


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Simpson rule over one full period; panels must be even."""

    panels: int = 4096

    def __post_init__(self):
        if not (isinstance(self.panels, int) and self.panels > 0 and self.panels % 2 == 0):
            raise ValueError("panels must be a positive even integer")


class StateKind(enum.Enum):
    STATIONARY = "stationary"
    TIME_DEPENDENT = "time_dependent"


class MeasurementKind(enum.Enum):
    SHARP = "sharp"
    UNSHARP = "unsharp"


class Formalism(enum.Enum):
    """Two routes to the same number: amplitude inner products, or density
    matrices with the trace rule. They must agree; tests enforce it."""

    AMPLITUDE = "amplitude"
    DENSITY_MATRIX = "density_matrix"


@dataclass(frozen=True)
class ConditionalQuery:
    """What to condition, how sharply, and through which formalism."""

    state_kind: StateKind
    measurement_kind: MeasurementKind
    sharpness: SharpnessPair = SHARP
    formalism: Formalism = Formalism.DENSITY_MATRIX

    @property
    def effective_sharpness(self) -> SharpnessPair:
        # sharp readout ignores the carried pair and uses lambda = 1 on both sides
        return SHARP if self.measurement_kind is MeasurementKind.SHARP else self.sharpness


def _simpson_integral(values: np.ndarray, dx: float) -> np.ndarray:
    n = values.shape[0] - 1
    if n <= 0 or n % 2 != 0:
        raise ValueError("Simpson rule needs an even number of panels")
    weights = np.ones(n + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return (dx / 3.0) * np.tensordot(weights, values, axes=(0, 0))


def period_average(f, spec: ClockSpec, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """(omega / 2 pi) * integral of f(t) over one period [0, 2 pi / omega].

    f may be vectorized over a time array; plain scalar callables work too.
    """
    ts = np.linspace(0.0, spec.period, quad.panels + 1)
    try:
        ys = np.asarray(f(ts), dtype=float)
        if ys.shape != ts.shape:
            raise TypeError
    except TypeError:
        ys = np.asarray([float(f(t)) for t in ts])
    return float(_simpson_integral(ys, spec.period / quad.panels)) / spec.period


def _phase_grid(quad: QuadratureSpec) -> np.ndarray:
    return np.linspace(0.0, 2.0 * math.pi, quad.panels + 1)


def _phase_average(values: np.ndarray, quad: QuadratureSpec) -> np.ndarray:
    return _simpson_integral(values, 2.0 * math.pi / quad.panels) / (2.0 * math.pi)


@functools.lru_cache(maxsize=8)
def _phase_states(panels: int) -> np.ndarray:
    states = product_state_phase(_phase_grid(QuadratureSpec(panels)))
    states.setflags(write=False)
    return states


@functools.lru_cache(maxsize=8)
def _stationary_cached(panels: int) -> np.ndarray:
    quad = QuadratureSpec(panels)
    averaged = _phase_average(_phase_states(panels), quad)
    norm = float(np.linalg.norm(averaged))
    if norm < DEGENERATE_DENOMINATOR:
        raise NumericalIntegrityError("one-period amplitude average vanished")
    state = averaged / norm
    hv = state[1]
    if abs(hv) > DEGENERATE_DENOMINATOR:
        state = state * (hv.conjugate() / abs(hv))
    state.setflags(write=False)
    return state


def stationary_state(spec: ClockSpec, quad: QuadratureSpec = QuadratureSpec()) -> np.ndarray:
    """One-period componentwise amplitude average of the product pair, normalized.

    The global phase is fixed by making the HV amplitude real and positive.
    The result is the polarization singlet up to quadrature roundoff. It does
    not depend on omega: the average is taken in the phase variable.
    """
    return _stationary_cached(quad.panels).copy()


def _single_expectation(state: np.ndarray, effect: np.ndarray, formalism: Formalism) -> float:
    if formalism is Formalism.AMPLITUDE:
        return float(np.real(np.vdot(state, effect @ state)))
    return trace_of_product(effect, projector(state)).real


def _batch_expectation(states: np.ndarray, effect: np.ndarray, formalism: Formalism) -> np.ndarray:
    if formalism is Formalism.AMPLITUDE:
        return np.einsum("ni,ij,nj->n", states.conj(), effect, states).real
    rhos = np.einsum("ni,nj->nij", states, states.conj())
    return np.einsum("ij,nji->n", effect, rhos).real


def conditional_probability(
    query: ConditionalQuery, spec: ClockSpec, quad: QuadratureSpec = QuadratureSpec()
) -> float:
    """P(V on system | H on clock) for the queried preparation and readout.

    Numerator and denominator always go through the same formalism; for the
    evolving preparation both are one-period averages taken before the ratio.
    """
    lam = query.effective_sharpness
    effect_joint = joint_effect(lam, Outcome.H, Outcome.V)
    effect_clock = tensor_product(unsharp_effects(lam.lambda_c)[0], np.eye(2, dtype=complex))

    if query.state_kind is StateKind.STATIONARY:
        psi = _stationary_cached(quad.panels)
        numerator = _single_expectation(psi, effect_joint, query.formalism)
        denominator = _single_expectation(psi, effect_clock, query.formalism)
    else:
        states = _phase_states(quad.panels)
        numerator = float(_phase_average(_batch_expectation(states, effect_joint, query.formalism), quad))
        denominator = float(_phase_average(_batch_expectation(states, effect_clock, query.formalism), quad))

    if denominator < DEGENERATE_DENOMINATOR:
        raise DegenerateConditioningError(
            f"conditioning probability {denominator:.3e} is numerically zero"
        )
    return float(numerator / denominator)


def entanglement_advantage(
    pair: SharpnessPair, spec: ClockSpec, quad: QuadratureSpec = QuadratureSpec()
) -> float:
    """Stationary minus time-dependent unsharp conditional; equals lambda_c*lambda_r/4."""
    stationary = conditional_probability(
        ConditionalQuery(StateKind.STATIONARY, MeasurementKind.UNSHARP, pair), spec, quad
    )
    evolving = conditional_probability(
        ConditionalQuery(StateKind.TIME_DEPENDENT, MeasurementKind.UNSHARP, pair), spec, quad
    )
    return stationary - evolving
