"""Physical world: node placement, task generation, clock, UAV kinematics.

Everything here is deterministic given a seeded numpy Generator. Positions
use a 3D Cartesian frame in meters; sea-level nodes (devices and vessels)
sit at height 0, UAVs hover at a configured altitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class ConfigError(ValueError):
    """Raised for invalid scenario or agent configuration values."""


@dataclass(frozen=True)
class Position3D:
    x: float
    y: float
    h: float

    def horizontal_distance(self, other: "Position3D") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def distance(self, other: "Position3D") -> float:
        """Full 3D Euclidean distance."""
        return math.sqrt(
            (self.x - other.x) ** 2
            + (self.y - other.y) ** 2
            + (self.h - other.h) ** 2
        )


@dataclass
class MIoTDevice:
    """A marine IoT device. Generates one task per slot (optionally thinned)."""

    id: int
    position: Position3D
    tx_power_w: float


@dataclass
class Uav:
    """A rotary-wing UAV edge server with finite storage and a speed cap."""

    id: int
    position: Position3D
    cpu_rate: float            # cycles/s
    storage_cap: float         # bits
    storage_used: float = 0.0  # bits occupied by resident tasks
    max_speed: float = 12.0    # m/s
    mass_kg: float = 2.0
    prop_radius_m: float = 0.25
    prop_count: int = 4
    max_power_w: float = 120.0
    energy_per_cycle: float = 1.87e-6  # J/cycle
    tx_power_w: float = 10.0


@dataclass
class Vessel:
    """A vessel server: fast CPU, limited number of simultaneous UAV links."""

    id: int
    position: Position3D
    cpu_rate: float            # cycles/s
    antenna_cap: int
    energy_per_cycle: float = 1.87e-6


@dataclass(frozen=True)
class Task:
    """One job generated by a device: payload bits and CPU-cycle demand."""

    origin: int       # MIoT index
    birth_slot: int
    input_bits: float
    cycles: float


@dataclass
class SimClock:
    slot: int
    slot_len: float
    horizon: int


@dataclass
class ScenarioConfig:
    """All physical parameters of a simulation scenario.

    Defaults give the standard desk-scale setup: 30 devices, 10 UAVs and
    3 vessels spread over a 5 km x 5 km sea region, 100 one-second slots.
    """

    num_miot: int = 30
    num_uav: int = 10
    num_vessel: int = 3
    region_side_m: float = 5000.0
    uav_height_m: float = 100.0
    ground_height_m: float = 0.0
    horizon_slots: int = 100
    slot_len_s: float = 1.0
    task_bits_lo: float = 2.4e6
    task_bits_hi: float = 2.6e6
    task_cycles_lo: float = 2.4e6
    task_cycles_hi: float = 3.6e6
    arrival_prob: float = 1.0
    miot_tx_power_w: float = 10.0
    uav_cpu_rate: float = 1.0e6      # cycles/s
    vessel_cpu_rate: float = 1.0e9   # cycles/s
    uav_storage_bits: float = 20.0e6
    uav_max_speed_ms: float = 12.0
    uav_mass_kg: float = 2.0
    uav_prop_radius_m: float = 0.25
    uav_prop_count: int = 4
    uav_max_power_w: float = 120.0
    uav_tx_power_w: float = 10.0
    uav_energy_per_megacycle: float = 1.87    # J per 1e6 cycles
    vessel_energy_per_megacycle: float = 1.87
    vessel_antenna_cap: int = 5
    gravity: float = 9.8
    air_density: float = 1.225

    def validate(self) -> None:
        if self.num_miot < 1:
            raise ConfigError(f"scenario.num_miot must be >= 1, got {self.num_miot}")
        if self.num_uav < 1:
            raise ConfigError(f"scenario.num_uav must be >= 1, got {self.num_uav}")
        if self.num_vessel < 1:
            raise ConfigError(f"scenario.num_vessel must be >= 1, got {self.num_vessel}")
        if self.region_side_m < 0:
            raise ConfigError(f"scenario.region_side_m must be >= 0, got {self.region_side_m}")
        if self.task_bits_lo > self.task_bits_hi:
            raise ConfigError("scenario.task_bits range is inverted")
        if self.task_cycles_lo > self.task_cycles_hi:
            raise ConfigError("scenario.task_cycles range is inverted")
        if not 0.0 < self.arrival_prob <= 1.0:
            raise ConfigError(f"scenario.arrival_prob must be in (0, 1], got {self.arrival_prob}")
        if self.horizon_slots < 1:
            raise ConfigError(f"scenario.horizon_slots must be >= 1, got {self.horizon_slots}")
        if self.slot_len_s <= 0:
            raise ConfigError(f"scenario.slot_len_s must be > 0, got {self.slot_len_s}")
        if self.vessel_antenna_cap < 1:
            raise ConfigError(f"scenario.vessel_antenna_cap must be >= 1, got {self.vessel_antenna_cap}")
        for name in ("uav_cpu_rate", "vessel_cpu_rate", "uav_max_speed_ms",
                     "uav_mass_kg", "uav_prop_radius_m", "uav_prop_count",
                     "gravity", "air_density"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"scenario.{name} must be > 0")

    @property
    def uav_energy_per_cycle(self) -> float:
        return self.uav_energy_per_megacycle / 1e6

    @property
    def vessel_energy_per_cycle(self) -> float:
        return self.vessel_energy_per_megacycle / 1e6


@dataclass
class WorldState:
    """All nodes of a scenario at one instant. Mutated only by a single
    simulation loop; processor queues live in the environment layer."""

    miots: list[MIoTDevice]
    uavs: list[Uav]
    vessels: list[Vessel]
    clock: SimClock
    config: ScenarioConfig = field(repr=False, default=None)

    @property
    def num_nodes(self) -> int:
        return len(self.miots) + len(self.uavs) + len(self.vessels)


def generate_scenario(config: ScenarioConfig, rng: np.random.Generator) -> WorldState:
    """Place all nodes uniformly at random over the square region.

    Devices and vessels sit at the ground height, UAVs at the configured
    altitude with empty storage. Identical (config, seed) always produces
    an identical world.
    """
    config.validate()
    side = config.region_side_m

    def draw_xy() -> tuple[float, float]:
        return float(rng.uniform(0.0, side)), float(rng.uniform(0.0, side))

    miots = []
    for i in range(config.num_miot):
        x, y = draw_xy()
        miots.append(MIoTDevice(
            id=i,
            position=Position3D(x, y, config.ground_height_m),
            tx_power_w=config.miot_tx_power_w,
        ))

    uavs = []
    for j in range(config.num_uav):
        x, y = draw_xy()
        uavs.append(Uav(
            id=j,
            position=Position3D(x, y, config.uav_height_m),
            cpu_rate=config.uav_cpu_rate,
            storage_cap=config.uav_storage_bits,
            storage_used=0.0,
            max_speed=config.uav_max_speed_ms,
            mass_kg=config.uav_mass_kg,
            prop_radius_m=config.uav_prop_radius_m,
            prop_count=config.uav_prop_count,
            max_power_w=config.uav_max_power_w,
            energy_per_cycle=config.uav_energy_per_cycle,
            tx_power_w=config.uav_tx_power_w,
        ))

    vessels = []
    for k in range(config.num_vessel):
        x, y = draw_xy()
        vessels.append(Vessel(
            id=k,
            position=Position3D(x, y, config.ground_height_m),
            cpu_rate=config.vessel_cpu_rate,
            antenna_cap=config.vessel_antenna_cap,
            energy_per_cycle=config.vessel_energy_per_cycle,
        ))

    clock = SimClock(slot=1, slot_len=config.slot_len_s, horizon=config.horizon_slots)
    return WorldState(miots=miots, uavs=uavs, vessels=vessels, clock=clock, config=config)


def spawn_tasks(world: WorldState, t: int, rng: np.random.Generator) -> list[Task]:
    """Draw this slot's new tasks, one per device thinned by arrival_prob.

    Sizes and cycle demands are uniform over the configured ranges. Devices
    are visited in index order so the draw sequence is reproducible.
    """
    cfg = world.config
    if not 1 <= t <= world.clock.horizon:
        raise ValueError(f"slot {t} outside horizon 1..{world.clock.horizon}")
    tasks = []
    for miot in world.miots:
        if cfg.arrival_prob < 1.0 and rng.random() >= cfg.arrival_prob:
            continue
        bits = float(rng.uniform(cfg.task_bits_lo, cfg.task_bits_hi))
        cycles = float(rng.uniform(cfg.task_cycles_lo, cfg.task_cycles_hi))
        tasks.append(Task(origin=miot.id, birth_slot=t, input_bits=bits, cycles=cycles))
    return tasks


def move_uav(uav: Uav, target: Position3D, clock: SimClock) -> tuple[Position3D, float]:
    """Move a UAV toward a target, clipped by its per-slot travel budget.

    The step stays on the segment from the current position to the target
    and never exceeds slot_len * max_speed; the UAV's height is preserved.
    Returns the new position and the distance actually covered.
    """
    cur = uav.position
    dx = target.x - cur.x
    dy = target.y - cur.y
    dist = math.hypot(dx, dy)
    budget = clock.slot_len * uav.max_speed
    if dist <= budget:
        new = Position3D(target.x, target.y, cur.h)
        return new, dist
    scale = budget / dist
    new = Position3D(cur.x + dx * scale, cur.y + dy * scale, cur.h)
    return new, budget


def reset_positions(world: WorldState, initial: list[Position3D]) -> None:
    """Restore UAVs to their episode-start positions (storage untouched)."""
    for uav, pos in zip(world.uavs, initial):
        uav.position = pos
