"""Classic single-DOF nonlinear benchmark oscillators."""

from __future__ import annotations

import math

import numpy as np

from .. import ad
from ..system import DynamicSystem

__all__ = ["van_der_pol", "duffing", "pendulum"]


def van_der_pol(eps=1.0) -> DynamicSystem:
    """xdd + eps*(x^2 - 1)*xd + x = 0, the self-excited limit-cycle oscillator."""

    def f_nl(x, v, a, t):
        return [eps * (x[0] * x[0] - 1.0) * v[0]]

    return DynamicSystem(
        n_dof=1,
        M=np.array([[1.0]]),
        C=np.array([[0.0]]),
        K=np.array([[1.0]]),
        F_nl=f_nl,
        name="van_der_pol",
    )


def duffing(delta=1.0, alpha=1.0, beta=3.0, gamma_f=10.0, omega=1.0) -> DynamicSystem:
    """Forced Duffing oscillator: xdd + delta*xd + alpha*x + beta*x^3 = gamma_f*cos(omega*t)."""

    def f_nl(x, v, a, t):
        return [beta * x[0] * x[0] * x[0]]

    def q(t):
        return np.array([gamma_f * math.cos(omega * t)])

    return DynamicSystem(
        n_dof=1,
        M=np.array([[1.0]]),
        C=np.array([[delta]]),
        K=np.array([[alpha]]),
        Q=q,
        F_nl=f_nl,
        name="duffing",
    )


def pendulum() -> DynamicSystem:
    """Undamped pendulum xdd + sin(x) = 0; conserves E = v^2/2 - cos(x)."""

    def f_nl(x, v, a, t):
        return [ad.sin(x[0])]

    return DynamicSystem(
        n_dof=1,
        M=np.array([[1.0]]),
        C=np.array([[0.0]]),
        K=np.array([[0.0]]),
        F_nl=f_nl,
        name="pendulum",
    )
