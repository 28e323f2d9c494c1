"""Timoshenko shaft element matrices for one lateral bending plane.

Element DOFs are (w1, th1, w2, th2) in a single plane; the rotor
assembly maps these onto the two lateral planes of the 4-DOF-per-node
global ordering and adds the speed-scaled gyroscopic coupling built
from the rotary-inertia matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["ShaftElementProps", "shaft_element_matrices"]


@dataclass(frozen=True)
class ShaftElementProps:
    """Geometry and material of one shaft element.

    shear_factor is the effective shear coefficient entering the shear
    parameter phi = 12*E*I_z / (shear_factor * A * l^2); it carries any
    shear-modulus scaling the caller wants folded in.
    """

    density: float  # kg/m^3
    length: float  # m
    area: float  # m^2
    young: float  # Pa
    i_z: float  # m^4
    shear_factor: float

    def __post_init__(self):
        for name in ("density", "length", "area", "young", "i_z", "shear_factor"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")


def shaft_element_matrices(p: ShaftElementProps):
    """(M_s, J_s, K_s), each 4x4, for one bending plane.

    M_s combines the translational consistent-mass block and the
    rotary-inertia block; J_s is the rotary-inertia matrix that the
    assembly scales by spin speed for the gyroscopic terms; K_s is the
    shear-flexible bending stiffness.
    """
    mu, l, A, E, Iz, kappa = (
        p.density,
        p.length,
        p.area,
        p.young,
        p.i_z,
        p.shear_factor,
    )
    phi = 12.0 * E * Iz / (kappa * A * l * l)

    m1 = 312.0 + 588.0 * phi + 280.0 * phi * phi
    m2 = (44.0 + 77.0 * phi + 35.0 * phi * phi) * l
    m3 = 108.0 + 252.0 * phi + 140.0 * phi * phi
    m4 = -(26.0 + 63.0 * phi + 35.0 * phi * phi) * l
    m5 = (8.0 + 14.0 * phi + 7.0 * phi * phi) * l * l
    m6 = -(6.0 + 14.0 * phi + 7.0 * phi * phi) * l * l
    m7 = 36.0
    m8 = (3.0 - 15.0 * phi) * l
    m9 = (4.0 + 5.0 * phi + 10.0 * phi * phi) * l * l
    m10 = (-1.0 + 5.0 * phi + 5.0 * phi * phi) * l * l

    trans = np.array(
        [
            [m1, m2, m3, m4],
            [m2, m5, -m4, m6],
            [m3, -m4, m1, -m2],
            [m4, m6, -m2, m5],
        ]
    )
    rot = np.array(
        [
            [m7, m8, -m7, m8],
            [m8, m9, -m8, m10],
            [-m7, -m8, m7, -m8],
            [m8, m10, -m8, m9],
        ]
    )
    denom = (1.0 + phi) ** 2
    M_s = (mu * A * l / (840.0 * denom)) * trans + (mu * Iz / (30.0 * l * denom)) * rot
    J_s = (mu * Iz / (15.0 * l * denom)) * rot
    K_s = (E * Iz / (l**3 * (1.0 + phi))) * np.array(
        [
            [12.0, 6.0 * l, -12.0, 6.0 * l],
            [6.0 * l, (4.0 + phi) * l * l, -6.0 * l, (2.0 - phi) * l * l],
            [-12.0, -6.0 * l, 12.0, -6.0 * l],
            [6.0 * l, (2.0 - phi) * l * l, -6.0 * l, (4.0 + phi) * l * l],
        ]
    )
    return M_s, J_s, K_s
