"""Core dynamic-system and trajectory containers.

A DynamicSystem describes M xdd + C xd + K x + F_nl(xdd, xd, x, t) = Q(t).
The nonlinear force F_nl must be written with the operations from
`nnrad.ad` so that it evaluates both on plain floats and on ADScalars;
the integrators rely on that to obtain exact Jacobians.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = ["State", "DynamicSystem", "Trajectory"]


@dataclass(frozen=True)
class State:
    """System response at one instant: time, displacement, velocity, acceleration."""

    t: float
    x: np.ndarray
    v: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=float))
        object.__setattr__(self, "v", np.asarray(self.v, dtype=float))
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        n = self.x.shape[0]
        if self.v.shape[0] != n or self.a.shape[0] != n:
            raise ValueError("x, v, a must share one dimension")


def _zero_force(n):
    def q(t):
        return np.zeros(n)

    return q


def _zero_nonlinearity(x, v, a, t):
    return [0.0] * len(x)


@dataclass
class DynamicSystem:
    """Second-order system with linear matrices plus a nonlinear force term.

    accel_dependent marks whether F_nl actually uses the acceleration
    argument; systems without acceleration dependence admit the cheap
    first-order reduction and the direct initial-acceleration solve.
    """

    n_dof: int
    M: np.ndarray
    C: np.ndarray
    K: np.ndarray
    Q: Optional[Callable[[float], np.ndarray]] = None
    F_nl: Optional[Callable[[Sequence, Sequence, Sequence, float], Sequence]] = None
    accel_dependent: bool = False
    name: str = ""

    def __post_init__(self):
        n = self.n_dof
        for label in ("M", "C", "K"):
            mat = np.asarray(getattr(self, label), dtype=float)
            if mat.shape != (n, n):
                raise ValueError(f"{label} must be {n}x{n}, got {mat.shape}")
            setattr(self, label, mat)
        if self.Q is None:
            self.Q = _zero_force(n)
        if self.F_nl is None:
            self.F_nl = _zero_nonlinearity


@dataclass
class Trajectory:
    """Uniform-grid time history with per-step convergence diagnostics.

    Row 0 is the initial state; iterations[0] is 0 by convention.  The
    reference integrator emits the identical layout so trajectories from
    the two methods can be diffed directly.
    """

    t: np.ndarray
    x: np.ndarray
    v: np.ndarray
    a: np.ndarray
    iterations: np.ndarray = field(default=None)
    residual_norms: np.ndarray = field(default=None)

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=float)
        self.x = np.atleast_2d(np.asarray(self.x, dtype=float))
        self.v = np.atleast_2d(np.asarray(self.v, dtype=float))
        self.a = np.atleast_2d(np.asarray(self.a, dtype=float))
        n = self.t.shape[0]
        if self.iterations is None:
            self.iterations = np.zeros(n, dtype=int)
        if self.residual_norms is None:
            self.residual_norms = np.zeros(n)

    @property
    def n_samples(self):
        return self.t.shape[0]

    @property
    def n_dof(self):
        return self.x.shape[1]

    @property
    def dt(self):
        if self.t.shape[0] < 2:
            return 0.0
        return float(self.t[1] - self.t[0])

    def state(self, i) -> State:
        return State(float(self.t[i]), self.x[i], self.v[i], self.a[i])

    def tail(self, start_index) -> "Trajectory":
        """Slice off everything before start_index (diagnostics included)."""
        return Trajectory(
            t=self.t[start_index:],
            x=self.x[start_index:],
            v=self.v[start_index:],
            a=self.a[start_index:],
            iterations=self.iterations[start_index:],
            residual_norms=self.residual_norms[start_index:],
        )
