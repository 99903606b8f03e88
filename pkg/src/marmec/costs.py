"""Execution-time and energy-cost accounting for offloaded tasks.

Time model: a task served on a UAV pays CPU time, one uplink transmission
and the processor's queuing delay; a task relayed to a vessel pays vessel
CPU time, both transmissions and the vessel's queuing delay. Result
backhaul is assumed to fit in a slot and is never charged.

Energy model: each served task is charged its serving UAV's hover energy
for the slot, the UAV's movement energy over the slot, the compute energy
of whichever processor executes it, and (relay branch only) the UAV's
transmit energy toward the vessel. Attribution is per task, so a UAV
serving several tasks in one slot is charged once per task; callers that
want platform totals should deduplicate per UAV (the environment exposes
that as a diagnostic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .world import Task, Uav, Vessel


class InfeasibleLinkError(ValueError):
    """A transmission was requested over a link with nonpositive rate."""


@dataclass(frozen=True)
class TimeBreakdown:
    exec_s: float
    tx_miot_uav_s: float
    tx_uav_vessel_s: float
    queue_s: float

    @property
    def total_s(self) -> float:
        return self.exec_s + self.tx_miot_uav_s + self.tx_uav_vessel_s + self.queue_s


@dataclass(frozen=True)
class EnergyBreakdown:
    move_j: float
    hover_j: float
    compute_j: float
    relay_tx_j: float

    @property
    def total_j(self) -> float:
        return self.move_j + self.hover_j + self.compute_j + self.relay_tx_j


def uav_exec_time(task: Task, uav: Uav, rate_miot_uav: float, queue_s: float) -> TimeBreakdown:
    """Time cost of executing a task on a UAV: cpu + uplink + queue wait."""
    if rate_miot_uav <= 0:
        raise InfeasibleLinkError("MIoT-UAV rate must be > 0")
    return TimeBreakdown(
        exec_s=task.cycles / uav.cpu_rate,
        tx_miot_uav_s=task.input_bits / rate_miot_uav,
        tx_uav_vessel_s=0.0,
        queue_s=queue_s,
    )


def vessel_exec_time(task: Task, vessel: Vessel, rate_miot_uav: float,
                     rate_uav_vessel: float, queue_s: float) -> TimeBreakdown:
    """Time cost of relaying a task through a UAV to a vessel."""
    if rate_miot_uav <= 0 or rate_uav_vessel <= 0:
        raise InfeasibleLinkError("both hop rates must be > 0")
    return TimeBreakdown(
        exec_s=task.cycles / vessel.cpu_rate,
        tx_miot_uav_s=task.input_bits / rate_miot_uav,
        tx_uav_vessel_s=task.input_bits / rate_uav_vessel,
        queue_s=queue_s,
    )


def total_task_time(indicator_row, candidate_totals) -> float:
    """Collapse an indicator-weighted sum of candidate times to the one
    selected term. Exactly one indicator must be set."""
    chosen = [tot for ind, tot in zip(indicator_row, candidate_totals) if ind]
    assert len(chosen) == 1, (
        f"exactly one destination indicator must be set, got {sum(map(bool, indicator_row))}"
    )
    return chosen[0]


def hover_power(uav: Uav, gravity: float = 9.8, air_density: float = 1.225) -> float:
    """Hover power of a rotary-wing UAV from its mass and rotor geometry."""
    if uav.mass_kg <= 0 or uav.prop_radius_m <= 0 or uav.prop_count <= 0:
        raise ValueError("mass, rotor radius and rotor count must be > 0")
    if gravity <= 0 or air_density <= 0:
        raise ValueError("gravity and air density must be > 0")
    env_const = math.sqrt(gravity ** 3 / (2.0 * math.pi * air_density))
    return env_const * math.sqrt(uav.mass_kg ** 3 / (uav.prop_radius_m ** 2 * uav.prop_count))


def trajectory_power(uav: Uav, speed: float,
                     gravity: float = 9.8, air_density: float = 1.225) -> float:
    """Propulsion power above hover, linear in speed up to max speed."""
    if speed < 0 or speed > uav.max_speed:
        raise ValueError(f"speed {speed} outside [0, {uav.max_speed}]")
    p_hover = hover_power(uav, gravity, air_density)
    return (speed / uav.max_speed) * (uav.max_power_w - p_hover)


def compute_energy(task: Task, energy_per_cycle: float) -> float:
    """Energy to execute a task at a given per-cycle cost."""
    return task.cycles * energy_per_cycle


def total_task_energy(task: Task, serving_uav: Uav, displacement_m: float,
                      slot_len_s: float, relay_rate: float | None,
                      vessel: Vessel | None = None,
                      gravity: float = 9.8, air_density: float = 1.225) -> EnergyBreakdown:
    """Per-task energy attribution for one slot.

    relay_rate is None on the UAV-local branch; on the vessel branch it is
    the UAV-to-vessel rate used for the relay transmission. A stationary
    UAV contributes zero movement energy (no division by zero speed).
    """
    p_hover = hover_power(serving_uav, gravity, air_density)
    if displacement_m > 0.0:
        speed = displacement_m / slot_len_s
        # travel time displacement/speed == slot_len by construction
        move_j = trajectory_power(serving_uav, speed, gravity, air_density) * (displacement_m / speed)
    else:
        move_j = 0.0
    hover_j = p_hover * slot_len_s
    if relay_rate is None:
        compute_j = compute_energy(task, serving_uav.energy_per_cycle)
        relay_tx_j = 0.0
    else:
        if relay_rate <= 0:
            raise InfeasibleLinkError("UAV-vessel rate must be > 0")
        if vessel is None:
            raise ValueError("vessel required on the relay branch")
        compute_j = compute_energy(task, vessel.energy_per_cycle)
        relay_tx_j = serving_uav.tx_power_w * task.input_bits / relay_rate
    return EnergyBreakdown(move_j=move_j, hover_j=hover_j,
                           compute_j=compute_j, relay_tx_j=relay_tx_j)
