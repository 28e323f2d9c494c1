"""Command-line front end: solve, sweep, spectrum, check-jacobian.

Configs are JSON with schema_version 1, SI units throughout, angles in
radians and rotational speeds in rad/s.  Outputs are CSV with a header
row and full double precision (shortest round-trip formatting).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import ad
from .analysis import spectrum, sweep
from .models import (
    assemble_dual_rotor,
    default_dual_rotor_layout,
    duffing,
    load_rotor_layout,
    pendulum,
    sfd_rotor_system,
    van_der_pol,
)
from .newmark import NewmarkConfig, residual, integrate
from .system import State

SCHEMA_VERSION = 1


class ConfigError(ValueError):
    pass


def _fmt(x):
    return repr(float(x))


def _load_config(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise ConfigError(f"cannot read config {path}: {err}") from err
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ConfigError(
            f"config must declare \"schema_version\": {SCHEMA_VERSION}"
        )
    return doc


def _build_system(spec, speed=None):
    """Instantiate a built-in system from its config description."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ConfigError("system spec must be an object with a \"type\" field")
    kind = spec["type"]
    if kind == "van_der_pol":
        return van_der_pol(eps=spec.get("eps", 1.0))
    if kind == "duffing":
        return duffing(
            delta=spec.get("delta", 1.0),
            alpha=spec.get("alpha", 1.0),
            beta=spec.get("beta", 3.0),
            gamma_f=spec.get("gamma_f", 10.0),
            omega=spec.get("omega", 1.0),
        )
    if kind == "pendulum":
        return pendulum()
    if kind == "sfd_rotor":
        omega = speed if speed is not None else spec.get("omega")
        if omega is None:
            raise ConfigError("sfd_rotor needs an \"omega\" field")
        kwargs = {
            key: spec[key]
            for key in (
                "mass",
                "stiffness",
                "j_d",
                "j_p",
                "l1",
                "l2",
                "damping",
                "unbalance",
            )
            if key in spec
        }
        return sfd_rotor_system(omega=omega, **kwargs)
    if kind == "dual_rotor":
        if "file" in spec:
            layout = load_rotor_layout(spec["file"])
        else:
            layout = default_dual_rotor_layout()
        omega_lp = speed if speed is not None else spec.get("omega_lp")
        if omega_lp is not None:
            layout.omega_lp = float(omega_lp)
            layout.omega_hp = float(spec.get("omega_hp", 1.2 * float(omega_lp)))
        return assemble_dual_rotor(layout)
    raise ConfigError(f"unknown system type {kind!r}")


def _newmark_config(doc, args):
    nm = dict(doc.get("newmark", {}))
    if args.dt is not None:
        nm["dt"] = args.dt
    if args.strategy is not None:
        nm["strategy"] = args.strategy
    if "dt" not in nm:
        raise ConfigError("newmark config needs a \"dt\" field (or pass --dt)")
    try:
        return NewmarkConfig(**nm)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"bad newmark config: {err}") from err


def _write_csv(path, header, rows):
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def cmd_solve(args):
    doc = _load_config(args.config)
    sys_ = _build_system(doc.get("system"))
    cfg = _newmark_config(doc, args)
    n = sys_.n_dof
    x0 = np.asarray(doc.get("x0", np.zeros(n)), dtype=float)
    v0 = np.asarray(doc.get("v0", np.zeros(n)), dtype=float)
    t0 = float(doc.get("t0", 0.0))
    t_end = float(doc["t_end"])
    if t_end == t0:
        from .newmark import initial_acceleration

        a0 = initial_acceleration(sys_, x0, v0, t0)
        traj_rows = [(t0, x0, v0, a0)]
    else:
        traj = integrate(sys_, x0, v0, t0, t_end, cfg)
        traj_rows = [
            (traj.t[i], traj.x[i], traj.v[i], traj.a[i])
            for i in range(traj.n_samples)
        ]
    header = (
        ["t"]
        + [f"x_{i}" for i in range(n)]
        + [f"v_{i}" for i in range(n)]
        + [f"a_{i}" for i in range(n)]
    )
    rows = (
        [_fmt(t)] + [_fmt(v) for v in np.concatenate([x, vel, acc])]
        for t, x, vel, acc in traj_rows
    )
    _write_csv(args.out, header, rows)
    return 0


def cmd_sweep(args):
    doc = _load_config(args.config)
    model_spec = doc.get("model") or doc.get("system")
    cfg = _newmark_config(doc, args)
    speeds_spec = doc.get("speeds")
    if isinstance(speeds_spec, list):
        speeds = [float(s) for s in speeds_spec]
    elif isinstance(speeds_spec, dict):
        try:
            speeds = list(
                np.linspace(
                    float(speeds_spec["start"]),
                    float(speeds_spec["stop"]),
                    int(speeds_spec["count"]),
                )
            )
        except KeyError as err:
            raise ConfigError(f"speed range needs start/stop/count: {err}") from err
    else:
        raise ConfigError("\"speeds\" must be a list or a start/stop/count object")
    if not speeds:
        raise ConfigError("empty speed list")
    probe_nodes = [int(p) for p in doc.get("probe_nodes", [0])]
    rows = sweep(
        model_factory=lambda s: _build_system(model_spec, speed=s),
        speeds=speeds,
        cfg=cfg,
        probe_nodes=probe_nodes,
        t_end=float(doc["t_end"]),
        steady_fraction=float(doc.get("steady_fraction", 0.3)),
    )
    header = ["speed"] + [f"A_node{p}" for p in probe_nodes] + ["error"]
    out_rows = []
    failures = 0
    for row in rows:
        if row.amplitudes is None:
            failures += 1
            out_rows.append(
                [_fmt(row.speed)] + ["nan"] * len(probe_nodes) + [row.error or ""]
            )
        else:
            out_rows.append(
                [_fmt(row.speed)] + [_fmt(a) for a in row.amplitudes] + [""]
            )
    _write_csv(args.out, header, out_rows)
    return 0 if failures == 0 else 1


def cmd_spectrum(args):
    doc = _load_config(args.config)
    path = doc["input"]
    column = doc["column"]
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    if column not in header:
        raise ConfigError(
            f"column {column!r} not in CSV; available: {', '.join(header)}"
        )
    sig = data[:, header.index(column)]
    dt = doc.get("dt")
    if dt is None:
        if "t" not in header:
            raise ConfigError("no \"dt\" in config and no t column in CSV")
        tcol = data[:, header.index("t")]
        dt = float(tcol[1] - tcol[0])
    freqs, mags = spectrum(sig, float(dt))
    _write_csv(
        args.out,
        ["omega_rad_s", "magnitude"],
        ([_fmt(f), _fmt(m)] for f, m in zip(freqs, mags)),
    )
    return 0


def cmd_check_jacobian(args):
    """AD vs central finite differences on randomized step residuals."""
    doc = _load_config(args.config)
    sys_ = _build_system(doc.get("system"))
    cfg = _newmark_config(doc, args)
    n = sys_.n_dof
    seed = args.seed if args.seed is not None else int(doc.get("seed", 0))
    rng = np.random.default_rng(seed)
    n_states = int(doc.get("n_states", 20))
    scale = float(doc.get("scale", 1.0))
    h = float(doc.get("fd_step", 1e-6))
    tol = float(doc.get("tol", 1e-5))

    worst = 0.0
    for _ in range(n_states):
        s = State(
            t=float(rng.uniform(0.0, 1.0)),
            x=scale * rng.standard_normal(n),
            v=scale * rng.standard_normal(n),
            a=scale * rng.standard_normal(n),
        )
        x1 = scale * rng.standard_normal(n)
        t1 = s.t + cfg.dt

        def res(z):
            return residual(z, s, t1, sys_, cfg)

        J_ad = ad.jacobian(res, x1)
        J_fd = np.zeros((n, n))
        for j in range(n):
            e = np.zeros(n)
            e[j] = h
            J_fd[:, j] = (np.asarray(res(x1 + e)) - np.asarray(res(x1 - e))) / (
                2.0 * h
            )
        denom = max(np.max(np.abs(J_fd)), 1e-12)
        worst = max(worst, float(np.max(np.abs(J_ad - J_fd)) / denom))
    print(f"max relative AD-vs-FD discrepancy over {n_states} states: {worst:.3e}")
    if worst > tol:
        print(f"FAIL: exceeds tolerance {tol:.1e}", file=sys.stderr)
        return 1
    print("PASS")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="nnrad",
        description="Implicit Newmark/Newton-Raphson solver with AD Jacobians",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, needs_out in (
        ("solve", cmd_solve, True),
        ("sweep", cmd_sweep, True),
        ("spectrum", cmd_spectrum, True),
        ("check-jacobian", cmd_check_jacobian, False),
    ):
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="JSON config path")
        if needs_out:
            p.add_argument("--out", required=True, help="output CSV path")
        p.add_argument(
            "--strategy",
            choices=["full", "simplified", "broyden"],
            default=None,
            help="override the Newton iteration strategy",
        )
        p.add_argument("--dt", type=float, default=None, help="override time step [s]")
        p.add_argument(
            "--seed", type=int, default=None, help="RNG seed for randomized checks"
        )
        p.set_defaults(fn=fn)
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return 2
    except Exception as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
