"""Air-to-surface channel: elevation geometry, path loss and Shannon rate.

The loss model is a sigmoid blend between line-of-sight and non-line-of-sight
excess attenuation (driven by the elevation angle, evaluated in degrees)
plus free-space spreading. Loss is produced in dB and converted to a linear
power gain before entering the SNR, so rate always falls with distance.

All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .world import Position3D


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


@dataclass(frozen=True)
class ChannelParams:
    """Environmental and radio parameters shared by every link."""

    zeta_los: float = 2.3          # LoS excess loss, dB
    zeta_nlos: float = 34.0        # NLoS excess loss, dB
    alpha: float = 5.0188          # sigmoid environment constant
    beta: float = 0.3511           # sigmoid environment constant
    carrier_hz: float = 1.0e6
    light_speed: float = 3.0e8     # propagation speed for the spreading term
    bandwidth_hz: float = 1.0e6
    noise_power_w: float = dbm_to_watts(-114.0)
    fspl_distance: str = "3d"      # "3d" | "horizontal"

    def __post_init__(self):
        if self.bandwidth_hz <= 0:
            raise ValueError("bandwidth_hz must be > 0")
        if self.noise_power_w <= 0:
            raise ValueError("noise_power_w must be > 0")
        if self.carrier_hz <= 0 or self.light_speed <= 0:
            raise ValueError("carrier_hz and light_speed must be > 0")
        if self.fspl_distance not in ("3d", "horizontal"):
            raise ValueError(f"fspl_distance must be '3d' or 'horizontal', got {self.fspl_distance!r}")


def elevation_angle(a: Position3D, b: Position3D) -> float:
    """Elevation angle between two nodes, in radians.

    arctan(|dh| / horizontal distance); a purely vertical link returns pi/2.
    """
    dh = abs(a.h - b.h)
    horiz = a.horizontal_distance(b)
    if horiz == 0.0:
        return math.pi / 2.0
    return math.atan(dh / horiz)


def path_loss_db(a: Position3D, b: Position3D, p: ChannelParams) -> float:
    """Path loss between two nodes, in dB.

    Sigmoid LoS/NLoS blend over the elevation angle in degrees, plus the
    free-space spreading term over the 3D distance (or horizontal distance
    when so configured).
    """
    if p.fspl_distance == "3d":
        dist = a.distance(b)
    else:
        dist = a.horizontal_distance(b)
    if dist <= 0.0:
        raise ValueError("path loss undefined for coincident nodes (zero distance)")
    gamma_deg = math.degrees(elevation_angle(a, b))
    sigmoid = (p.zeta_los - p.zeta_nlos) / (
        1.0 + p.alpha * math.exp(-p.beta * (gamma_deg - p.alpha))
    )
    spreading = 20.0 * math.log10(4.0 * math.pi * dist * p.carrier_hz / p.light_speed)
    return sigmoid + spreading + p.zeta_nlos


def linear_gain(loss_db: float) -> float:
    """Convert a dB loss into a linear power gain in (0, inf)."""
    return 10.0 ** (-loss_db / 10.0)


def link_rate(a, b, p: ChannelParams) -> float:
    """Average achievable rate from transmitter a to receiver b, bits/s.

    a and b are nodes carrying .position; a must also carry .tx_power_w.
    Rate = B * log2(1 + P * g / N) with g the linear gain of the path loss.
    """
    tx_power = a.tx_power_w
    if tx_power <= 0:
        raise ValueError("transmitter power must be > 0")
    loss = path_loss_db(a.position, b.position, p)
    snr = tx_power * linear_gain(loss) / p.noise_power_w
    return p.bandwidth_hz * math.log2(1.0 + snr)
