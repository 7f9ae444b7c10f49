"""Point-neuron and plasticity kernels.

Izhikevich membrane dynamics integrated with explicit Euler half-steps,
the spike/reset rule, the exponential spike-timing plasticity rule with
axonal-delay correction, and periodic weight consolidation with clipping.

Everything here is a pure function of its arguments; the array engine
reproduces these scalar definitions bit for bit (see the backend kernels).
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple


class NumericDivergenceError(ArithmeticError):
    """Membrane state or input current left the finite range.

    Signals unstable parameters or unbounded input. ``gid`` carries the
    offending neuron's global id when raised from the engine.
    """

    def __init__(self, message: str, gid: Optional[int] = None):
        super().__init__(message)
        self.gid = gid


@dataclass(frozen=True)
class IzhikevichParams:
    """Parameters (a, b, c, d) of the Izhikevich model plus spike threshold.

    a: recovery rate, b: recovery/membrane coupling, c: reset potential (mV),
    d: post-spike recovery increment, v_peak: spike threshold (mV).
    """

    a: float
    b: float
    c: float
    d: float
    v_peak: float = 30.0

    def __post_init__(self):
        if not self.v_peak > self.c:
            raise ValueError("v_peak must exceed the reset potential c")


# Regular-spiking (excitatory) and fast-spiking (inhibitory) presets.
RS = IzhikevichParams(a=0.02, b=0.2, c=-65.0, d=8.0, v_peak=30.0)
FS = IzhikevichParams(a=0.1, b=0.2, c=-65.0, d=2.0, v_peak=30.0)


@dataclass(frozen=True)
class NeuronState:
    """Membrane potential v (mV), recovery u, and last spike time (ms).

    ``last_spike_time`` is None for a neuron that has never fired.
    """

    v: float
    u: float
    last_spike_time: Optional[int] = None


@dataclass(frozen=True)
class StdpParams:
    """Exponential STDP constants and consolidation bounds.

    a_plus/a_minus are the peak potentiation/depression (a_minus < 0);
    tau_plus/tau_minus the decay constants in ms. Consolidated weights are
    clipped to [w_min, w_max] every consolidation_period_ms.
    """

    a_plus: float = 0.1
    a_minus: float = -0.12
    tau_plus: float = 20.0
    tau_minus: float = 20.0
    w_min: float = 0.0
    w_max: float = 10.0
    consolidation_period_ms: int = 1000

    def __post_init__(self):
        if self.a_plus <= 0:
            raise ValueError("a_plus must be positive")
        if self.a_minus >= 0:
            raise ValueError("a_minus must be negative")
        if self.tau_plus <= 0 or self.tau_minus <= 0:
            raise ValueError("time constants must be positive")
        if self.w_min > self.w_max:
            raise ValueError("w_min must not exceed w_max")
        if self.consolidation_period_ms <= 0:
            raise ValueError("consolidation_period_ms must be positive")


def membrane_substep(
    state: NeuronState, params: IzhikevichParams, current: float, dt: float
) -> NeuronState:
    """One explicit-Euler substep of the below-threshold membrane equations.

    v' = v + dt*(0.04 v^2 + 5v + 140 - u + I), u' = u + dt*a*(b v - u),
    both derivatives evaluated at the incoming state. No reset here.
    """
    dv = 0.04 * state.v * state.v + 5.0 * state.v + 140.0 - state.u + current
    du = params.a * (params.b * state.v - state.u)
    v = state.v + dt * dv
    u = state.u + dt * du
    if not (math.isfinite(v) and math.isfinite(u) and math.isfinite(current)):
        raise NumericDivergenceError(
            f"non-finite membrane state (v={v!r}, u={u!r}, I={current!r})"
        )
    return replace(state, v=v, u=u)


def fire_and_reset(
    state: NeuronState, params: IzhikevichParams, t_now: int
) -> Tuple[NeuronState, bool]:
    """Apply the spike rule: if v >= v_peak, reset v to c, bump u by d,
    stamp the spike time, and report fired=True. Otherwise the state is
    returned unchanged."""
    if state.v >= params.v_peak:
        return (
            NeuronState(v=params.c, u=state.u + params.d, last_spike_time=t_now),
            True,
        )
    return state, False


def stdp_delta(t_post: float, t_pre: float, d_axon: float, params: StdpParams) -> float:
    """Weight change for one pre/post pairing, corrected for axonal delay.

    With t = t_post - t_pre - d_axon (time from the spike's *arrival* at the
    synapse to the postsynaptic spike): potentiation a_plus*exp(-t/tau_plus)
    for t >= 0, depression a_minus*exp(t/tau_minus) for t < 0. A spike that
    arrives just before the postsynaptic one is maximally potentiated.
    """
    t = t_post - t_pre - d_axon
    if t >= 0:
        return params.a_plus * math.exp(-t / params.tau_plus)
    return params.a_minus * math.exp(t / params.tau_minus)


def consolidate_weight(w: float, accumulated_delta: float, params: StdpParams) -> float:
    """Fold an accumulated plasticity delta into a weight, clipped to
    [w_min, w_max]. The caller zeroes the accumulator."""
    w = w + accumulated_delta
    if w < params.w_min:
        return params.w_min
    if w > params.w_max:
        return params.w_max
    return w
