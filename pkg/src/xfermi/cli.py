"""Command line front end.

Every subcommand prints a small table of named quantities, each tagged
with how it was obtained: ``quadrature``, ``series``, ``closed-form``,
``reference`` (a quoted comparison constant), ``enumeration``,
``monte-carlo``, or ``ode``.  Analytic claims and their numerical
cross-checks therefore sit side by side in the output.

Output is deterministic: the same invocation (and, for ``oracle``, the
same seed) produces byte-identical output, which the test suite relies
on.  Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import __version__
from .astro import REFERENCE_MASS_RATIO, compare_star_models
from .constants import codata
from .degenerate import (
    REFERENCE_A1,
    REFERENCE_A2,
    REFERENCE_HEAT_COEFFICIENT,
    chemical_potential_exact,
    chemical_potential_series,
    degeneracy_pressure,
    fermi_energy,
    fermi_scale,
    heat_capacity_series_coefficient,
    mu_series_coefficients,
    sommerfeld_constants,
    specific_heat_exact,
)
from .ensemble import (
    LevelSystem,
    grand_partition_enumerate,
    grand_partition_product,
    mc_occupancy,
    mean_occupancies_enumerate,
)
from .eos import (
    density,
    energy_density,
    fugacity_series,
    pressure,
    solve_fugacity,
    solve_point,
    virial_pressure,
)
from .magnetism import (
    geometric_level_factor,
    landau_level_factor,
    landau_partition_ratio,
    landau_susceptibility,
    pauli_magnetization,
    small_field_series_factor,
)
from .numerics import NumericsError, QuadratureSpec, StepControl
from .occupancy import (
    BOLTZMANN,
    EXCLUSIVE,
    MODELS,
    STANDARD_FD,
    OccupancyModel,
    occupation,
    thermal_wavelength,
)

_LONG_HEADER = ["coord", "quantity", "value", "provenance", "statistics"]
_FORMATS = ("csv", "json", "table")
_CONFIG_KEYS = ("model", "format", "rel-tol", "abs-tol", "seed", "sweep-scale")

_CSV_FMT = "%.10g"
_TABLE_FMT = "%.6g"


class UsageError(Exception):
    """Bad command line or config input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); route through main()
        raise UsageError(message)


@dataclass(frozen=True)
class RunContext:
    fmt: str
    model: OccupancyModel
    spec: QuadratureSpec | None  # None: let each routine use its own default
    sweep: tuple[str, float, float, int] | None
    sweep_scale: str
    seed: int


def _long(coord, quantity, value, provenance, statistics=None) -> list:
    return [coord, quantity, value, provenance, statistics]


# ---------------------------------------------------------------- output

def _cell(value, fmt: str) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return fmt % value
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return float(f"{value:.10g}")  # match the csv precision
    return value


def _emit(fmt: str, meta: dict, header: list[str], records: list[list], out=None) -> None:
    out = sys.stdout if out is None else out
    if fmt == "csv":
        for key, value in meta.items():
            out.write(f"# {key}={_cell(value, _CSV_FMT)}\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for rec in records:
            writer.writerow([_cell(v, _CSV_FMT) for v in rec])
    elif fmt == "json":
        payload = {
            "meta": {k: _json_value(v) for k, v in meta.items()},
            "rows": [dict(zip(header, map(_json_value, rec))) for rec in records],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for key, value in meta.items():
            out.write(f"{key} = {_cell(value, _TABLE_FMT)}\n")
        cells = [header] + [[_cell(v, _TABLE_FMT) for v in rec] for rec in records]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        for i, row in enumerate(cells):
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
            out.write("\n")
            if i == 0:
                out.write("  ".join("-" * w for w in widths) + "\n")


# ------------------------------------------------------------- resolution

def _load_config(path: str) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    cfg: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        cfg[key] = value.strip()
    return cfg


def _resolve(args, cfg: dict, key: str, cast, fallback):
    """Flag beats config file beats built-in default."""
    flag = getattr(args, key.replace("-", "_"), None)
    if flag is not None:
        return flag
    if key in cfg:
        try:
            return cast(cfg[key])
        except ValueError:
            raise UsageError(f"bad config value for {key}: {cfg[key]!r}") from None
    return fallback


def _resolve_seed(args, cfg: dict) -> int:
    flag = getattr(args, "seed", None)
    if flag is not None:
        return flag
    if "seed" in cfg:
        try:
            return int(cfg["seed"])
        except ValueError:
            raise UsageError(f"bad config value for seed: {cfg['seed']!r}") from None
    env = os.environ.get("XFERMI_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"XFERMI_SEED must be an integer, got {env!r}") from None
    return 0


def _sweep_tuple(args) -> tuple[str, float, float, int] | None:
    raw = getattr(args, "sweep", None)
    if raw is None:
        return None
    var, raw_start, raw_stop, raw_points = raw
    try:
        start, stop, points = float(raw_start), float(raw_stop), int(raw_points)
    except ValueError as exc:
        raise UsageError(f"bad --sweep argument: {exc}") from None
    if points < 2:
        raise UsageError("--sweep needs at least 2 points")
    return var, start, stop, points


def _context(args) -> RunContext:
    cfg = _load_config(args.config) if getattr(args, "config", None) else {}
    fmt = _resolve(args, cfg, "format", str, "csv")
    if fmt not in _FORMATS:
        raise UsageError(f"unknown format {fmt!r} (choose from {', '.join(_FORMATS)})")
    model_name = _resolve(args, cfg, "model", str, "exclusive")
    if model_name not in MODELS:
        raise UsageError(f"unknown model {model_name!r} (choose from {', '.join(MODELS)})")
    rel = _resolve(args, cfg, "rel-tol", float, None)
    abs_tol = _resolve(args, cfg, "abs-tol", float, None)
    if rel is None and abs_tol is None:
        spec = None
    else:
        try:
            spec = QuadratureSpec(
                rel if rel is not None else 1e-10,
                abs_tol if abs_tol is not None else 1e-14,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    scale = _resolve(args, cfg, "sweep-scale", str, "linear")
    if scale not in ("linear", "log"):
        raise UsageError(f"unknown sweep scale {scale!r}")
    return RunContext(
        fmt=fmt,
        model=MODELS[model_name],
        spec=spec,
        sweep=_sweep_tuple(args),
        sweep_scale=scale,
        seed=_resolve_seed(args, cfg),
    )


def _spec_args(ctx: RunContext) -> dict:
    return {} if ctx.spec is None else {"spec": ctx.spec}


def _coords(ctx: RunContext, var: str, scalar, default) -> list[float]:
    """Coordinate values for the command: one scalar, or the sweep grid."""
    if ctx.sweep is None:
        if scalar is not None:
            return [float(scalar)]
        if default is None:
            raise UsageError(f"--{var} is required")
        return [float(default)]
    svar, start, stop, points = ctx.sweep
    if svar != var:
        raise UsageError(f"this command sweeps over {var!r}, not {svar!r}")
    if scalar is not None:
        raise UsageError(f"--{var} conflicts with --sweep {var}")
    if ctx.sweep_scale == "log":
        if start <= 0 or stop <= 0:
            raise UsageError("log sweeps need positive endpoints")
        return [float(v) for v in np.geomspace(start, stop, points)]
    return [float(v) for v in np.linspace(start, stop, points)]


def _require_blocking(ctx: RunContext, what: str) -> None:
    if ctx.model.blocking == 0.0:
        raise UsageError(f"{what} needs a blocking model (exclusive or fd)")


# -------------------------------------------------------------- commands

def _cmd_occupation(args, ctx):
    meta = {"command": "occupation", "model": ctx.model.name}
    records = [
        _long(x, "occupation", occupation(x, ctx.model), "closed-form")
        for x in _coords(ctx, "x", args.x, 0.0)
    ]
    return meta, _LONG_HEADER, records


def _point_rows(coord: float, point, eta_provenance: str) -> list[list]:
    return [
        _long(coord, "eta", point.eta, eta_provenance),
        _long(coord, "fugacity", point.fugacity, eta_provenance),
        _long(coord, "n_lambda3", point.n_lambda3, "quadrature"),
        _long(coord, "energy_density", point.energy_density, "quadrature"),
        _long(coord, "pressure", point.pressure, "quadrature"),
        _long(coord, "pv_over_nkt", point.pressure / point.n_lambda3, "quadrature"),
        _long(coord, "u_per_particle", point.energy_density / point.n_lambda3, "quadrature"),
    ]


def _cmd_eos(args, ctx):
    meta = {"command": "eos", "model": ctx.model.name}
    records: list[list] = []
    if args.si:
        if args.temperature is None:
            raise UsageError("--si needs --temperature (kelvin)")
        constants = codata()
        mass = args.mass if args.mass is not None else constants.m_e
        wavelength = thermal_wavelength(mass, args.temperature, constants)
        meta["temperature"] = args.temperature
        meta["mass"] = mass
        scale = constants.k_B * args.temperature / wavelength**3
        for n_si in _coords(ctx, "density", args.density, None):
            point = solve_point(
                ctx.model, n_lambda3=n_si * wavelength**3, **_spec_args(ctx)
            )
            records += [
                _long(n_si, "eta", point.eta, "quadrature"),
                _long(n_si, "n_lambda3", point.n_lambda3, "quadrature"),
                _long(n_si, "chemical_potential_joule",
                      point.eta * constants.k_B * args.temperature, "quadrature"),
                _long(n_si, "pressure_pascal", point.pressure * scale, "quadrature"),
                _long(n_si, "energy_density_joule_m3",
                      point.energy_density * scale, "quadrature"),
            ]
        return meta, _LONG_HEADER, records
    if args.eta is not None and args.n_lambda3 is not None:
        raise UsageError("give either --eta or --n-lambda3, not both")
    sweep_var = ctx.sweep[0] if ctx.sweep else None
    if args.n_lambda3 is not None or sweep_var == "n-lambda3":
        for x in _coords(ctx, "n-lambda3", args.n_lambda3, None):
            point = solve_point(ctx.model, n_lambda3=x, **_spec_args(ctx))
            records += _point_rows(x, point, "quadrature")
    else:
        for eta in _coords(ctx, "eta", args.eta, 0.0):
            point = solve_point(ctx.model, eta=eta, **_spec_args(ctx))
            records += _point_rows(eta, point, "closed-form")
    return meta, _LONG_HEADER, records


def _cmd_virial(args, ctx):
    meta = {"command": "virial", "model": ctx.model.name}
    records: list[list] = []
    for x in _coords(ctx, "n-lambda3", args.n_lambda3, 0.1):
        point = solve_point(ctx.model, n_lambda3=x, **_spec_args(ctx))
        records += [
            _long(x, "pv_over_nkt_series", virial_pressure(x, ctx.model), "series"),
            _long(x, "pv_over_nkt", point.pressure / point.n_lambda3, "quadrature"),
            _long(x, "fugacity_series", fugacity_series(x, ctx.model), "series"),
            _long(x, "fugacity", point.fugacity, "quadrature"),
        ]
    return meta, _LONG_HEADER, records


def _cmd_fermi(args, ctx):
    _require_blocking(ctx, "the Fermi scale")
    meta = {"command": "fermi", "model": ctx.model.name}
    records: list[list] = []
    if args.si:
        constants = codata()
        mass = args.mass if args.mass is not None else constants.m_e
        meta["mass"] = mass
        for n_si in _coords(ctx, "density", args.density, None):
            # fermi_energy is a pure power law, so feeding an SI density
            # and scaling by hbar^2/m lands in joules
            e_f = fermi_energy(n_si, ctx.model) * constants.hbar**2 / mass
            records += [
                _long(n_si, "fermi_energy_joule", e_f, "closed-form"),
                _long(n_si, "fermi_energy_ev", e_f / constants.e_charge, "closed-form"),
                _long(n_si, "fermi_temperature_kelvin", e_f / constants.k_B, "closed-form"),
                _long(n_si, "degeneracy_pressure_pascal", 0.4 * n_si * e_f, "closed-form"),
            ]
        return meta, _LONG_HEADER, records
    for n in _coords(ctx, "density", args.density, 1.0):
        scale = fermi_scale(n, ctx.model)
        records += [
            _long(n, "fermi_energy", scale.fermi_energy, "closed-form"),
            _long(n, "fermi_temperature", scale.fermi_temperature, "closed-form"),
            _long(n, "energy_per_particle", 0.6 * scale.fermi_energy, "closed-form"),
            _long(n, "degeneracy_pressure",
                  degeneracy_pressure(n, scale.fermi_energy), "closed-form"),
        ]
    return meta, _LONG_HEADER, records


def _cmd_sommerfeld(args, ctx):
    _require_blocking(ctx, "the broadened-step moments")
    a = ctx.model.blocking
    result = (
        sommerfeld_constants(a)
        if ctx.spec is None
        else sommerfeld_constants(a, ctx.spec)
    )
    records = [
        _long(a, "a1", result.a1, "quadrature"),
        _long(a, "a1_closed_form", result.closed_form_a1, "closed-form"),
        _long(a, "a2", result.a2, "quadrature"),
        _long(a, "a2_closed_form", result.closed_form_a2, "closed-form"),
    ]
    if ctx.model is EXCLUSIVE:
        records += [
            _long(a, "a1_reference", REFERENCE_A1, "reference"),
            _long(a, "a2_reference", REFERENCE_A2, "reference"),
        ]
    meta = {"command": "sommerfeld", "model": ctx.model.name}
    return meta, _LONG_HEADER, records


def _cmd_mu_of_t(args, ctx):
    _require_blocking(ctx, "the chemical-potential expansion")
    model = ctx.model
    records: list[list] = []
    for t in _coords(ctx, "t", args.t, 0.05):
        if t <= 0:
            raise UsageError("t must be positive")
        records += [
            _long(t, "mu_over_ef",
                  chemical_potential_exact(t, model, **_spec_args(ctx)), "quadrature"),
            _long(t, "mu_over_ef_series",
                  chemical_potential_series(t, model), "series"),
        ]
    slope, curvature = mu_series_coefficients(model)
    records += [
        _long(None, "slope_coefficient", slope, "closed-form"),
        _long(None, "curvature_coefficient", curvature, "closed-form"),
    ]
    if model is EXCLUSIVE:
        # quoted second-order constant, kept for comparison with the
        # closed form above (which is -pi^2/12)
        records.append(
            _long(None, "curvature_reference",
                  9.0 * REFERENCE_A1**2 - REFERENCE_A2 / 2.0, "reference")
        )
    meta = {"command": "mu-of-t", "model": model.name}
    return meta, _LONG_HEADER, records


def _cmd_heat_capacity(args, ctx):
    _require_blocking(ctx, "the heat-capacity expansion")
    model = ctx.model
    records: list[list] = []
    for t in _coords(ctx, "t", args.t, 0.02):
        if t <= 0:
            raise UsageError("t must be positive")
        records.append(
            _long(t, "heat_coefficient",
                  specific_heat_exact(t, model, **_spec_args(ctx)), "quadrature")
        )
    records += [
        _long(None, "heat_coefficient_limit",
              heat_capacity_series_coefficient(model), "closed-form"),
        _long(None, "heat_coefficient_reference",
              REFERENCE_HEAT_COEFFICIENT[model.name], "reference"),
    ]
    meta = {"command": "heat-capacity", "model": model.name}
    return meta, _LONG_HEADER, records


def _cmd_pauli(args, ctx):
    eta = args.eta if args.eta is not None else 0.0
    records: list[list] = []
    for b in _coords(ctx, "field", args.field, 0.5):
        result = pauli_magnetization(eta, b, ctx.model, **_spec_args(ctx))
        records += [
            _long(b, "n_up", result.n_up, "quadrature"),
            _long(b, "n_down", result.n_down, "quadrature"),
            _long(b, "magnetization", result.magnetization, "quadrature"),
            _long(b, "m_per_particle", result.per_particle, "quadrature"),
            _long(b, "tanh_field", math.tanh(b), "closed-form"),
        ]
    meta = {"command": "pauli", "model": ctx.model.name, "eta": eta}
    return meta, _LONG_HEADER, records


def _cmd_landau(args, ctx):
    x = args.n_lambda3 if args.n_lambda3 is not None else 0.1
    if x <= 0:
        raise UsageError("n_lambda3 must be positive")
    z = x / ctx.model.weight
    records: list[list] = []
    for s in _coords(ctx, "field", args.field, 0.5):
        if s <= 0:
            raise UsageError("field must be positive")
        records += [
            _long(s, "partition_ratio",
                  landau_partition_ratio(z, s, ctx.model, **_spec_args(ctx)), "quadrature"),
            _long(s, "level_sum_factor",
                  landau_level_factor(z, s, ctx.model, **_spec_args(ctx)), "quadrature"),
            _long(s, "geometric_factor", geometric_level_factor(s), "closed-form"),
            _long(s, "small_field_factor", small_field_series_factor(s), "series"),
        ]
    records += [
        _long(None, "chi_reduced",
              landau_susceptibility(x, ctx.model, **_spec_args(ctx)), "quadrature"),
        _long(None, "chi_leading_order", -1.0 / 3.0, "closed-form"),
    ]
    meta = {"command": "landau", "model": ctx.model.name, "n_lambda3": x}
    return meta, _LONG_HEADER, records


def _cmd_star(args, ctx):
    control = None
    if args.step is not None:
        if args.step <= 0:
            raise UsageError("--step must be positive")
        control = StepControl(step_size=args.step, horizon=500.0, event_tolerance=1e-12)
    comparison = compare_star_models(control)
    records = [
        _long(None, "k_nr_ratio", comparison.k_nr_ratio, "closed-form"),
        _long(None, "k_ur_ratio", comparison.k_ur_ratio, "closed-form"),
        _long(1.5, "xi1", comparison.nr_solution.xi1, "ode"),
        _long(1.5, "mass_integral", comparison.nr_solution.mass_integral, "ode"),
        _long(3.0, "xi1", comparison.ur_solution.xi1, "ode"),
        _long(3.0, "mass_integral", comparison.ur_solution.mass_integral, "ode"),
        _long(None, "nr_mass_ratio", comparison.nr_mass_ratio, "ode"),
        _long(None, "limiting_mass_ratio", comparison.limiting_mass_ratio, "ode"),
        _long(None, "limiting_mass_ratio_closed_form", math.sqrt(2.0), "closed-form"),
        _long(None, "limiting_mass_ratio_reference", REFERENCE_MASS_RATIO, "reference"),
    ]
    meta = {"command": "star"}
    return meta, _LONG_HEADER, records


def _cmd_oracle(args, ctx):
    _require_blocking(ctx, "ensemble enumeration")
    model = ctx.model
    levels = args.levels if args.levels is not None else 6
    z = args.fugacity if args.fugacity is not None else 0.5
    samples = args.samples if args.samples is not None else 100_000
    rng = np.random.default_rng([ctx.seed, 0])
    system = LevelSystem(tuple(rng.uniform(0.0, 5.0, levels)), model)
    product = grand_partition_product(system, z)
    enumerated = grand_partition_enumerate(system, z)
    occ_enum = mean_occupancies_enumerate(system, z)
    occ_law = np.array(
        [occupation(e - math.log(z), model) for e in system.energies]
    )
    records = [
        _long(None, "log_partition_gap",
              abs(product.log_value - math.log(enumerated)), "enumeration"),
        _long(None, "occupancy_gap",
              float(np.max(np.abs(occ_enum - occ_law))), "enumeration"),
    ]
    for i in range(min(3, levels)):
        energy = system.energies[i]
        mean, se = mc_occupancy(energy, z, samples, ctx.seed, model, stream=i + 1)
        records += [
            _long(energy, "mc_occupancy", mean, "monte-carlo", se),
            _long(energy, "mc_z_score", (mean - occ_law[i]) / se, "monte-carlo"),
        ]
    meta = {
        "command": "oracle",
        "model": model.name,
        "levels": levels,
        "fugacity": z,
        "samples": samples,
        "seed": ctx.seed,
    }
    return meta, _LONG_HEADER, records


def _cmd_compare(args, ctx):
    at = args.at if args.at is not None else 0.0
    n0 = args.density if args.density is not None else 1.0
    if n0 <= 0:
        raise UsageError("--density must be positive")
    spec_args = _spec_args(ctx)
    models = (EXCLUSIVE, STANDARD_FD, BOLTZMANN)

    def row(quantity: str, fn, provenance: str) -> list:
        return [quantity, *(fn(m) for m in models), provenance]

    records = [
        row("occupation", lambda m: occupation(at, m), "closed-form"),
        row("density", lambda m: density(at, m, **spec_args), "quadrature"),
        row("energy_density", lambda m: energy_density(at, m, **spec_args), "quadrature"),
        row("pressure", lambda m: pressure(at, m, **spec_args), "quadrature"),
        row("virial_coefficient",
            lambda m: m.blocking / (m.weight * 4.0 * math.sqrt(2.0)), "closed-form"),
        row("heat_coefficient",
            lambda m: None if m.blocking == 0 else heat_capacity_series_coefficient(m),
            "closed-form"),
        row("fermi_energy",
            lambda m: None if m.blocking == 0 else fermi_energy(n0, m),
            "closed-form"),
    ]
    header = ["quantity", "exclusive", "fd", "boltzmann", "provenance"]
    meta = {"command": "compare", "at": at, "density": n0}
    return meta, header, records


_HANDLERS = {
    "occupation": _cmd_occupation,
    "eos": _cmd_eos,
    "virial": _cmd_virial,
    "fermi": _cmd_fermi,
    "sommerfeld": _cmd_sommerfeld,
    "mu-of-t": _cmd_mu_of_t,
    "heat-capacity": _cmd_heat_capacity,
    "pauli": _cmd_pauli,
    "landau": _cmd_landau,
    "star": _cmd_star,
    "oracle": _cmd_oracle,
    "compare": _cmd_compare,
}


# --------------------------------------------------------------- parser

def _build_parser() -> _Parser:
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--format", choices=_FORMATS, help="output format (default csv)")
    base.add_argument("--config", metavar="PATH",
                      help="key=value file; flags override its entries")

    modeled = argparse.ArgumentParser(add_help=False)
    modeled.add_argument("--model", choices=tuple(MODELS),
                         help="occupancy model (default exclusive)")

    quad = argparse.ArgumentParser(add_help=False)
    quad.add_argument("--rel-tol", type=float, help="quadrature relative tolerance")
    quad.add_argument("--abs-tol", type=float, help="quadrature absolute tolerance")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--sweep", nargs=4, metavar=("VAR", "START", "STOP", "POINTS"),
                       help="evaluate on a grid of the named coordinate")
    sweep.add_argument("--sweep-scale", choices=("linear", "log"),
                       help="grid spacing (default linear)")

    parser = _Parser(
        prog="xfermi",
        description="Thermodynamics of a gas whose orbitals hold at most one fermion.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("occupation", parents=[base, modeled, sweep],
                       help="occupation law f(x) = weight/(e^x + blocking)")
    p.add_argument("--x", type=float, help="reduced energy (eps - mu)/kT (default 0)")

    p = sub.add_parser("eos", parents=[base, modeled, quad, sweep],
                       help="reduced equation of state at one point")
    p.add_argument("--eta", type=float, help="reduced chemical potential mu/kT")
    p.add_argument("--n-lambda3", type=float, help="degeneracy parameter n lambda^3")
    p.add_argument("--si", action="store_true",
                   help="SI mode: solve from --density [m^-3] and --temperature [K]")
    p.add_argument("--density", type=float, help="number density in m^-3 (with --si)")
    p.add_argument("--temperature", type=float, help="temperature in kelvin (with --si)")
    p.add_argument("--mass", type=float, help="particle mass in kg (default electron)")

    p = sub.add_parser("virial", parents=[base, modeled, quad, sweep],
                       help="dilute-limit virial and fugacity series vs quadrature")
    p.add_argument("--n-lambda3", type=float, help="degeneracy parameter (default 0.1)")

    p = sub.add_parser("fermi", parents=[base, modeled, sweep],
                       help="Fermi energy and degeneracy pressure at a density")
    p.add_argument("--density", type=float,
                   help="number density (reduced; m^-3 with --si; default 1)")
    p.add_argument("--si", action="store_true", help="report in SI units")
    p.add_argument("--mass", type=float, help="particle mass in kg (default electron)")

    sub.add_parser("sommerfeld", parents=[base, modeled, quad],
                   help="broadened-step moments A1, A2 vs their closed forms")

    p = sub.add_parser("mu-of-t", parents=[base, modeled, quad, sweep],
                       help="chemical potential vs temperature at fixed density")
    p.add_argument("--t", type=float, help="reduced temperature kT/E_F (default 0.05)")

    p = sub.add_parser("heat-capacity", parents=[base, modeled, quad, sweep],
                       help="low-temperature heat-capacity coefficient")
    p.add_argument("--t", type=float, help="reduced temperature kT/E_F (default 0.02)")

    p = sub.add_parser("pauli", parents=[base, modeled, quad, sweep],
                       help="spin magnetization at a reduced field")
    p.add_argument("--eta", type=float, help="reduced chemical potential (default 0)")
    p.add_argument("--field", type=float, help="reduced field mu_B B/kT (default 0.5)")

    p = sub.add_parser("landau", parents=[base, modeled, quad, sweep],
                       help="orbital response from the quantized level sum")
    p.add_argument("--n-lambda3", type=float, help="degeneracy parameter (default 0.1)")
    p.add_argument("--field", type=float, help="reduced level spacing / 2 (default 0.5)")

    p = sub.add_parser("star", parents=[base],
                       help="degenerate-star consequences of the occupancy step")
    p.add_argument("--step", type=float, help="Lane-Emden integrator step size")

    p = sub.add_parser("oracle", parents=[base, modeled],
                       help="cross-check closed forms against enumeration and Monte Carlo")
    p.add_argument("--levels", type=int, help="number of orbital levels (default 6)")
    p.add_argument("--fugacity", type=float, help="fugacity z (default 0.5)")
    p.add_argument("--samples", type=int, help="Monte Carlo samples (default 100000)")
    p.add_argument("--seed", type=int,
                   help="RNG seed (default: XFERMI_SEED or 0)")

    p = sub.add_parser("compare", parents=[base, quad],
                       help="one quantity per row across all occupancy models")
    p.add_argument("--at", type=float,
                   help="evaluation point: x for the occupation row, eta otherwise (default 0)")
    p.add_argument("--density", type=float, help="density for the Fermi row (default 1)")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        ctx = _context(args)
        meta, header, records = _HANDLERS[args.command](args, ctx)
        _emit(ctx.fmt, meta, header, records)
    except UsageError as exc:
        print(f"xfermi: usage error: {exc}", file=sys.stderr)
        return 1
    except NumericsError as exc:
        print(f"xfermi: numerical failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"xfermi: usage error: {exc}", file=sys.stderr)
        return 1
    return 0
