"""Virtual queues turning long-term time/energy constraints into per-slot costs.

Each device carries two nonnegative accumulators, one per constraint. A
slot's observation enters as the ratio of the realized cost to the running
average of past costs; whenever the ratio exceeds its bound, the queue
grows. The per-slot penalty weighs the current queue levels against the
ratio excesses and its negation is the learning reward.

The first observation of a device has no history to normalize against, so
its ratio is defined as 1.0; with queues started at zero this makes the
first slot's penalty contribution exactly zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ConstraintBounds:
    phi_time: float = 0.99
    phi_energy: float = 0.99
    weight_time: float = 1.0     # objective weight on the time term
    weight_energy: float = 1.0   # objective weight on the energy term

    def __post_init__(self):
        if self.phi_time <= 0 or self.phi_energy <= 0:
            raise ValueError("ratio bounds must be > 0")
        if self.weight_time < 0 or self.weight_energy < 0:
            raise ValueError("weights must be >= 0")


@dataclass
class RunningAverages:
    """Per-device cumulative means of observed time and energy costs."""

    t_bar: np.ndarray
    e_bar: np.ndarray
    count: np.ndarray

    @classmethod
    def zeros(cls, n: int) -> "RunningAverages":
        return cls(t_bar=np.zeros(n), e_bar=np.zeros(n), count=np.zeros(n, dtype=np.int64))


@dataclass
class VirtualQueues:
    """Per-device constraint-violation accumulators, always >= 0."""

    v_time: np.ndarray
    v_energy: np.ndarray

    @classmethod
    def zeros(cls, n: int) -> "VirtualQueues":
        return cls(v_time=np.zeros(n), v_energy=np.zeros(n))


def update_averages(avg: RunningAverages, i: int, t_obs: float, e_obs: float) -> None:
    """Fold one observation into device i's cumulative means, in place."""
    if t_obs < 0 or e_obs < 0:
        raise ValueError("observations must be >= 0")
    n = int(avg.count[i])
    avg.t_bar[i] = (avg.t_bar[i] * n + t_obs) / (n + 1)
    avg.e_bar[i] = (avg.e_bar[i] * n + e_obs) / (n + 1)
    avg.count[i] = n + 1


def ratios(avg: RunningAverages, i: int, t_obs: float, e_obs: float) -> tuple[float, float]:
    """Observation-to-average ratios for device i; 1.0 on first observation."""
    if avg.count[i] == 0:
        return 1.0, 1.0
    return t_obs / avg.t_bar[i], e_obs / avg.e_bar[i]


def update_queues(q: VirtualQueues, i: int, ratio_t: float, ratio_e: float,
                  bounds: ConstraintBounds) -> None:
    """Advance device i's queues by the clamped violation recursion, in place."""
    q.v_time[i] = max(q.v_time[i] + ratio_t - bounds.phi_time, 0.0)
    q.v_energy[i] = max(q.v_energy[i] + ratio_e - bounds.phi_energy, 0.0)


def drift_penalty(q: VirtualQueues, i: int, ratio_t: float, ratio_e: float,
                  bounds: ConstraintBounds) -> float:
    """Per-slot queue-weighted violation cost for device i.

    Uses the queue levels before this slot's update; both queues zero means
    zero penalty regardless of the ratios.
    """
    return (bounds.weight_time * q.v_time[i] * (ratio_t - bounds.phi_time)
            + bounds.weight_energy * q.v_energy[i] * (ratio_e - bounds.phi_energy))


def reward(a_val: float) -> float:
    """Learning reward: the negated per-slot penalty."""
    return -a_val
