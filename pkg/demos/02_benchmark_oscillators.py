"""Newmark/Newton vs RK4 on the three benchmark oscillators.

Integrates the van der Pol, Duffing, and pendulum systems with the
implicit Newmark scheme (AD Jacobians inside the Newton loop) and with
the explicit fixed-step RK4 reference, then reports the trajectory gap.
Also demonstrates the long-horizon energy behaviour of the undamped
pendulum, where the average-acceleration Newmark variant shines.
"""

import math

import numpy as np

from nnrad import NewmarkConfig, integrate, rk4_integrate, to_first_order
from nnrad.models import duffing, pendulum, van_der_pol

CASES = [
    ("van der Pol (eps=1)", van_der_pol(1.0), [2.0], [0.0]),
    ("Duffing (forced)", duffing(), [1.0], [0.0]),
    ("pendulum (large angle)", pendulum(), [2.0], [0.0]),
]

T_END, DT = 20.0, 1e-3
cfg = NewmarkConfig(dt=DT, strategy="simplified")

print(f"Integrating to t={T_END} at dt={DT}:")
for name, sys_, x0, v0 in CASES:
    nm = integrate(sys_, np.array(x0), np.array(v0), 0.0, T_END, cfg)
    field = to_first_order(sys_)
    rk = rk4_integrate(field, np.concatenate([x0, v0]), 0.0, T_END, DT)
    gap = np.max(np.abs(nm.x[:, 0] - rk.x[:, 0]))
    print(f"  {name:24s} max|x_Newmark - x_RK4| = {gap:.3e}")

# --- Energy conservation ---------------------------------------------------
# The pendulum has invariant E = v^2/2 - cos(x).  Average acceleration
# (beta=1/4, gamma=1/2) introduces no numerical damping, so the energy
# drift over 100 s stays tiny even at dt=1e-3.
sys_ = pendulum()
traj = integrate(sys_, np.array([2.0]), np.array([0.0]), 0.0, 100.0, cfg)
E = 0.5 * traj.v[:, 0] ** 2 - np.cos(traj.x[:, 0])
print(f"\nPendulum energy over [0, 100]: E0 = {E[0]:.6f}, "
      f"max drift = {np.max(np.abs(E - E[0])):.3e}")

# --- Convergence order -----------------------------------------------------
# Halving dt on the pendulum shows the expected O(dt^2) behaviour of
# Newmark and O(dt^4) of RK4 against a fine reference.
t_end = 2.0
field = to_first_order(sys_)
ref = rk4_integrate(field, np.array([2.0, 0.0]), 0.0, t_end, 1e-5)
x_ref = ref.x[-1, 0]
print("\n   dt        Newmark err      RK4 err")
for dt in (4e-3, 2e-3, 1e-3):
    nm = integrate(sys_, np.array([2.0]), np.array([0.0]), 0.0, t_end,
                   NewmarkConfig(dt=dt, strategy="simplified"))
    rk = rk4_integrate(field, np.array([2.0, 0.0]), 0.0, t_end, dt)
    print(f"  {dt:.0e}   {abs(nm.x[-1, 0] - x_ref):.3e}      "
          f"{abs(rk.x[-1, 0] - x_ref):.3e}")
print("(Newmark error quarters per halving; RK4 drops ~16x until it "
      "hits the roundoff floor.)")
