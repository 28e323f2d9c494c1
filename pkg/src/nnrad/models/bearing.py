"""Rolling-element bearing restoring force from Hertz contact.

Each ball carries load only under positive interference; the clipped
10/9-power law keeps the force and its first derivative continuous
across contact onset, so the AD Jacobian is well defined everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .. import ad

__all__ = ["BearingParams", "cage_speed", "bearing_force"]

HERTZ_EXPONENT = 10.0 / 9.0


@dataclass(frozen=True)
class BearingParams:
    n_balls: int
    k_hertz: float  # contact stiffness, N/m^(10/9)
    clearance: float  # radial clearance, m
    r_inner: float  # inner race radius, m
    r_outer: float  # outer race radius, m
    omega_inner: float = 0.0  # inner ring speed, rad/s
    omega_outer: float = 0.0  # outer ring speed, rad/s

    def __post_init__(self):
        if self.n_balls < 1:
            raise ValueError("n_balls must be at least 1")
        if self.k_hertz <= 0.0 or self.r_inner <= 0.0 or self.r_outer <= 0.0:
            raise ValueError("stiffness and race radii must be positive")
        if self.clearance < 0.0:
            raise ValueError("clearance must be non-negative")


def cage_speed(p: BearingParams) -> float:
    """Cage speed (r_i*omega_outer + r_o*omega_inner) / (r_i + r_o).

    Both ring speeds are explicit fields, so either pairing convention
    is reachable by how the caller assigns them.
    """
    return (p.r_inner * p.omega_outer + p.r_outer * p.omega_inner) / (
        p.r_inner + p.r_outer
    )


def bearing_force(x_i, y_i, x_o, y_o, t, p: BearingParams):
    """(F_x, F_y) Hertz contact force for inner/outer race displacements.

    Ball k sits at angle theta_k = 2*pi*(k-1)/N_b + omega_c*t; its
    interference is the race-relative displacement projected on that
    direction minus the radial clearance.  Inactive balls contribute
    zero smoothly.  All arithmetic runs over ADScalar when the inputs
    carry seeds.
    """
    omega_c = cage_speed(p)
    dx = x_i - x_o
    dy = y_i - y_o
    fx = 0.0
    fy = 0.0
    for k in range(p.n_balls):
        theta = 2.0 * math.pi * k / p.n_balls + omega_c * t
        c, s = math.cos(theta), math.sin(theta)
        delta = dx * c + dy * s - p.clearance
        load = p.k_hertz * ad.relu_pow(delta, HERTZ_EXPONENT)
        fx = fx + load * c
        fy = fy + load * s
    return fx, fy
