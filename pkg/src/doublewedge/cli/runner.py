"""Dispatch a parsed scenario to the library and assemble the report tree."""

from __future__ import annotations

import math

import numpy as np

from .. import bridge, core, fields, mechanics
from ..core import Bivector
from . import verify
from .scenario import Scenario


def bivector_out(m: Bivector) -> dict:
    out = {"matrix": m.entries}
    if m.dim == 3:
        out["axial"] = bridge.to_axial(m)
    return out


def _bivector_in(spec) -> Bivector:
    form, data = spec
    if form == "axial":
        return bridge.to_bivector(data)
    return Bivector(data)


def _field_bivector(spec, dim: int) -> fields.BivectorField:
    form, exprs = spec
    if form == "axial":
        return fields.BivectorField(
            lambda x, t: bridge.to_bivector([e(x, t) for e in exprs]), dim
        )
    return fields.BivectorField(
        lambda x, t: Bivector([[e(x, t) for e in row] for row in exprs]), dim
    )


def _echo_bivector(spec):
    form, data = spec
    if form == "axial":
        return {"axial": [getattr(e, "source", e) for e in data]}
    if isinstance(data, np.ndarray):
        return {"matrix": data}
    return {"matrix": [[e.source for e in row] for row in data]}


def _opt(value):
    return None if value is None or (isinstance(value, float) and math.isnan(value)) else value


def run(scenario: Scenario, h: float | None = None, dt: float | None = None, seed: int | None = None):
    """Execute ``scenario``; returns ``(report, ok)``.

    ``ok`` is False only when a ``verify`` check exceeds its tolerance.
    """
    kind, n, p = scenario.kind, scenario.dim, scenario.payload
    inputs: dict = {}
    results: dict = {}
    ok = True

    if kind == "moment":
        inputs = {"r": p["r"], "f": p["f"]}
        results["moment"] = bivector_out(mechanics.torque(p["r"], p["f"]))

    elif kind == "inertia":
        pole = p["pole"] if p["pole"] is not None else np.zeros(n)
        body = mechanics.PointMassBody.from_particles(p["particles"])
        inputs = {
            "pole": pole,
            "particles": [{"mass": m, "position": x} for m, x, _ in p["particles"]],
        }
        results = {
            "total_mass": body.total_mass,
            "center_of_mass": body.center_of_mass,
            "inertia": mechanics.inertia_matrix(body, pole),
        }

    elif kind == "angular-momentum":
        pole = p["pole"] if p["pole"] is not None else np.zeros(n)
        inputs["pole"] = pole
        if p["omega"] is not None:
            omega = _bivector_in(p["omega"])
            v_pole = p["v_pole"] if p["v_pole"] is not None else np.zeros(n)
            masses = [m for m, _, _ in p["particles"]]
            positions = [x for _, x, _ in p["particles"]]
            body = mechanics.rigid_body(masses, positions, omega, pole, v_pole)
            inputs["omega"] = _echo_bivector(p["omega"])
            inputs["v_pole"] = v_pole
            inputs["particles"] = [{"mass": m, "position": x} for m, x in zip(masses, positions)]
            particle_sum = mechanics.angular_momentum(body, pole)
            rigid = mechanics.rigid_angular_momentum(
                body.total_mass,
                body.center_of_mass,
                pole,
                v_pole,
                mechanics.inertia_matrix(body, pole),
                omega,
            )
            results = {
                "velocities": body.velocities,
                "angular_momentum": bivector_out(particle_sum),
                "rigid_formula": bivector_out(rigid),
                "max_abs_difference": float(np.max(np.abs(particle_sum.entries - rigid.entries))),
            }
        else:
            body = mechanics.PointMassBody.from_particles(p["particles"])
            inputs["particles"] = [
                {"mass": float(m), "position": x, "velocity": v}
                for m, x, v in zip(body.masses, body.positions, body.velocities)
            ]
            results["angular_momentum"] = bivector_out(mechanics.angular_momentum(body, pole))

    elif kind == "power":
        if "r" in p:
            m = mechanics.torque(p["r"], p["f"])
            inputs = {"r": p["r"], "f": p["f"]}
            results["torque"] = bivector_out(m)
        else:
            m = _bivector_in(p["m"])
            inputs = {"m": _echo_bivector(p["m"])}
        omega = _bivector_in(p["omega"])
        inputs["omega"] = _echo_bivector(p["omega"])
        results["power"] = mechanics.power(m, omega)

    elif kind == "volume":
        vs = p["vectors"]
        inputs = {"vectors": vs}
        if p["indices"] is not None:
            i, j, k = p["indices"]
            inputs["indices"] = p["indices"]
            results["three_index_product"] = core.three_index_product(
                core.doublewedge(vs[0], vs[1]), vs[2], i, j, k
            )
        if len(vs) == n:
            results["hypervolume"] = core.hypervolume(vs)
        results["gram_volume"] = core.gram_volume(vs)

    elif kind == "curl":
        x = p["x"]
        step = h if h is not None else _opt(p["h"])
        step = step if step is not None else fields.default_step(x)
        exprs = p["v"]
        field = fields.VectorField(lambda y, t: [e(y, t) for e in exprs], n)
        inputs = {"v": [e.source for e in exprs], "x": x, "t": p["t"]}
        results = {"h": step, "curl": bivector_out(fields.curl(field, x, p["t"], step))}

    elif kind == "faraday":
        x, t = p["x"], p["t"]
        step = h if h is not None else _opt(p["h"])
        step = step if step is not None else fields.default_step(x)
        tstep = dt if dt is not None else _opt(p["dt"])
        tstep = tstep if tstep is not None else 1e-5 * max(1.0, abs(t))
        exprs = p["e"]
        e_field = fields.VectorField(lambda y, s: [e(y, s) for e in exprs], n)
        b_field = _field_bivector(p["b"], n)
        inputs = {"e": [e.source for e in exprs], "b": _echo_bivector(p["b"]), "x": x, "t": t}
        res = fields.faraday_residual(e_field, b_field, x, t, step, tstep)
        results = {
            "h": step,
            "dt": tstep,
            "residual": bivector_out(res),
            "max_abs_residual": float(np.max(np.abs(res.entries))),
        }

    elif kind == "lorentz":
        x = p["x"] if p["x"] is not None else np.zeros(n)
        b = _field_bivector(p["b"], n)(x, p["t"])
        force = fields.lorentz_force(p["charge"], b, p["v"])
        inputs = {"charge": p["charge"], "b": _echo_bivector(p["b"]), "v": p["v"], "x": x, "t": p["t"]}
        results = {
            "b": bivector_out(b),
            "force": force,
            "v_dot_force": float(np.dot(p["v"], force)),
        }

    elif kind == "verify":
        s = seed if seed is not None else p["seed"]
        s = verify.DEFAULT_SEED if s is None else s
        dims = p["dims"] or list(verify.DEFAULT_DIMS)
        samples = p["samples"] or verify.DEFAULT_SAMPLES
        inputs = {"seed": s, "dims": dims, "samples": samples}
        checks = verify.run_identity_suite(s, dims, samples)
        ok = all(c["status"] == "pass" for c in checks)
        results = {"checks": checks, "all_passed": ok}

    report = {"kind": kind}
    if n is not None:
        report["dim"] = n
    report["inputs"] = inputs
    report["results"] = results
    report["status"] = "ok" if ok else "fail"
    return report, ok
