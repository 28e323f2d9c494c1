"""Rigid disk inertia, gyroscopic coupling, and unbalance excitation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["DiskProps", "disk_matrices"]


@dataclass(frozen=True)
class DiskProps:
    mass: float  # kg
    j_d: float  # diametral moment of inertia, kg m^2
    j_p: float  # polar moment of inertia, kg m^2
    eccentricity: float = 0.0  # m
    phase: float = 0.0  # rad

    def __post_init__(self):
        if self.mass <= 0.0 or self.j_d <= 0.0 or self.j_p <= 0.0:
            raise ValueError("mass and moments of inertia must be positive")
        if not (math.isfinite(self.eccentricity) and math.isfinite(self.phase)):
            raise ValueError("eccentricity and phase must be finite")


def disk_matrices(p: DiskProps, omega: float):
    """(M_d, J, unbalance Q_d(t)) for one disk spinning at omega.

    M_d = diag(m, J_d) acts per bending plane; J = diag(0, J_p) scaled
    by omega gives the plane-coupling gyroscopic block.  The unbalance
    force is m*omega^2*e*(sin, cos)(omega*t + phase) on the two
    translational DOFs (first plane sin, second plane cos).
    """
    M_d = np.diag([p.mass, p.j_d])
    J = np.diag([0.0, p.j_p])
    amp = p.mass * omega * omega * p.eccentricity

    def q_d(t):
        arg = omega * t + p.phase
        return np.array([amp * math.sin(arg), 0.0]), np.array(
            [amp * math.cos(arg), 0.0]
        )

    return M_d, J, q_d
