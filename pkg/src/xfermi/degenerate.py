"""Degenerate-limit behavior: Fermi scale, broadened-step moments, and
low-temperature expansions.

Reduced units hbar = m = k_B = 1 throughout, so energies are interchangeable
with temperatures and the Fermi temperature equals the Fermi energy.

The low-T machinery rests on the moments of the thermally broadened step,

    A_k(a) = Int_{-inf}^{inf} x^k e^x / (e^x + a)^2 dx,

which have closed forms A_0 = 1/a, A_1 = ln(a)/a, A_2 = ((ln a)^2 + pi^2/3)/a.
Series below are written in the ratios R_k = A_k/A_0; the combinations
R_2 - R_1^2 = pi^2/3 and (R_1^2 - R_2)/4 = -pi^2/12 are independent of the
blocking parameter, which is why the linear specific-heat coefficient comes
out the same for single-occupancy and standard Fermi statistics.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .constants import REDUCED
from .eos import energy_density, pressure, solve_fugacity
from .numerics import DEFAULT_QUADRATURE, NumericsError, QuadratureSpec, integrate_semi_infinite
from .occupancy import EXCLUSIVE, OccupancyModel, ValidityWarning, dos_coefficient

# density-of-states coefficient in reduced units
B_REDUCED = dos_coefficient(1.0, REDUCED)

# moment quadrature needs to beat the 1e-10 closed-form cross-check
_MOMENT_SPEC = QuadratureSpec(1e-12, 1e-15, 200)

# series are quoted to second order in t = kT/mu
_SERIES_TRUST = 0.3

# comparison constants quoted in the source derivation (rounded as printed)
REFERENCE_A1 = 0.34657
REFERENCE_A2 = 1.88516
REFERENCE_HEAT_COEFFICIENT = {"exclusive": 5.55, "fd": 4.93}


class StepSizeError(ValueError):
    """A finite-difference step fell below the solver noise floor."""


def fermi_energy(n: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Fermi energy at number density n (reduced units).

    E_F = (1/2) (6 pi^2 n / s)^{2/3} with s the T = 0 step height; the
    single-occupancy gas (s = 1) sits 2^{2/3} above the standard gas
    (s = 2) at equal density.
    """
    if n <= 0:
        raise ValueError("density must be positive")
    return 0.5 * (6.0 * math.pi**2 * n / model.step_height) ** (2.0 / 3.0)


def fermi_density(e_f: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Inverse of :func:`fermi_energy`: density of the filled Fermi sea."""
    if e_f <= 0:
        raise ValueError("Fermi energy must be positive")
    return (2.0 / 3.0) * B_REDUCED * model.step_height * e_f**1.5


@dataclass(frozen=True)
class FermiScale:
    """Characteristic scales of the degenerate gas at a given density."""

    density: float
    fermi_energy: float
    fermi_temperature: float
    model: OccupancyModel


def fermi_scale(n: float, model: OccupancyModel = EXCLUSIVE) -> FermiScale:
    e_f = fermi_energy(n, model)
    return FermiScale(n, e_f, e_f, model)  # k_B = 1


def ground_state_energy(n_particles: float, e_f: float) -> float:
    """Total T = 0 energy, E = (3/5) N E_F."""
    if n_particles <= 0 or e_f <= 0:
        raise ValueError("particle number and Fermi energy must be positive")
    return 0.6 * n_particles * e_f


def degeneracy_pressure(n: float, e_f: float) -> float:
    """T = 0 pressure, P = (2/5) n E_F."""
    if n <= 0 or e_f <= 0:
        raise ValueError("density and Fermi energy must be positive")
    return 0.4 * n * e_f


def sommerfeld_moment(
    order: int,
    blocking: float = 2.0,
    spec: QuadratureSpec = _MOMENT_SPEC,
) -> float:
    """Moment A_k = Int x^k e^x/(e^x + a)^2 dx over the real line, by quadrature."""
    if order < 0:
        raise ValueError("order must be non-negative")
    a = float(blocking)
    if a <= 0:
        raise ValueError("blocking must be positive")

    def kernel(x: float) -> float:
        if abs(x) > 600.0:
            return 0.0
        s = math.exp(0.5 * x) + a * math.exp(-0.5 * x)
        return 1.0 / (s * s)

    positive = integrate_semi_infinite(lambda x: x**order * kernel(x), spec)
    mirrored = integrate_semi_infinite(lambda y: y**order * kernel(-y), spec)
    return positive + (-1.0) ** order * mirrored


def sommerfeld_moment_closed_form(order: int, blocking: float = 2.0) -> float:
    """Closed forms of the step moments for orders 0..2."""
    a = float(blocking)
    if a <= 0:
        raise ValueError("blocking must be positive")
    ln_a = math.log(a)
    if order == 0:
        return 1.0 / a
    if order == 1:
        return ln_a / a
    if order == 2:
        return (ln_a**2 + math.pi**2 / 3.0) / a
    raise ValueError("closed forms available for orders 0, 1, 2 only")


@dataclass(frozen=True)
class SommerfeldConstants:
    """First two step moments, by quadrature and in closed form."""

    blocking: float
    a1: float
    a2: float
    closed_form_a1: float
    closed_form_a2: float


def sommerfeld_constants(
    blocking: float = 2.0, spec: QuadratureSpec = _MOMENT_SPEC
) -> SommerfeldConstants:
    a1 = sommerfeld_moment(1, blocking, spec)
    a2 = sommerfeld_moment(2, blocking, spec)
    cf1 = sommerfeld_moment_closed_form(1, blocking)
    cf2 = sommerfeld_moment_closed_form(2, blocking)
    if abs(a1 - cf1) > 1e-10 or abs(a2 - cf2) > 1e-10:
        raise NumericsError(
            "quadrature moments disagree with their closed forms: "
            f"A1 {a1!r} vs {cf1!r}, A2 {a2!r} vs {cf2!r}"
        )
    return SommerfeldConstants(blocking, a1, a2, cf1, cf2)


def _moment_ratios(model: OccupancyModel) -> tuple[float, float]:
    """R_1 = A_1/A_0 = ln(a) and R_2 = A_2/A_0 = (ln a)^2 + pi^2/3."""
    model.step_height  # rejects blocking = 0
    ln_a = math.log(model.blocking)
    return ln_a, ln_a**2 + math.pi**2 / 3.0


def _warn_series(t: float) -> None:
    if t >= _SERIES_TRUST:
        warnings.warn(
            f"low-temperature series used at t = {t:g} >= {_SERIES_TRUST}",
            ValidityWarning,
            stacklevel=3,
        )


def number_series_factor(t: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Bracketed low-T series factor of the particle number, t = kT/mu.

    N = (2/3) b V s mu^{3/2} [1 + (3/2) R1 t + (3/8) R2 t^2]; for the
    single-occupancy gas the bracket reads 1 + 3 A1 t + (3/4) A2 t^2.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    _warn_series(t)
    r1, r2 = _moment_ratios(model)
    return 1.0 + 1.5 * r1 * t + 0.375 * r2 * t * t


def energy_series_factor(t: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Bracketed low-T series factor of the total energy, t = kT/mu.

    E = (2/5) b V s mu^{5/2} [1 + (5/2) R1 t + (15/8) R2 t^2]; for the
    single-occupancy gas the bracket reads 1 + 5 A1 t + (15/4) A2 t^2.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    _warn_series(t)
    r1, r2 = _moment_ratios(model)
    return 1.0 + 2.5 * r1 * t + 1.875 * r2 * t * t


def series_density(eta: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Series route to n lambda^3 at large eta (quadrature route: eos.density)."""
    if eta <= 0:
        raise ValueError("the low-temperature series needs eta > 0")
    factor = number_series_factor(1.0 / eta, model)
    return (4.0 / (3.0 * math.sqrt(math.pi))) * model.step_height * eta**1.5 * factor


def series_energy_density(eta: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Series route to u at large eta (quadrature route: eos.energy_density)."""
    if eta <= 0:
        raise ValueError("the low-temperature series needs eta > 0")
    factor = energy_series_factor(1.0 / eta, model)
    return (4.0 / (5.0 * math.sqrt(math.pi))) * model.step_height * eta**2.5 * factor


def mu_series_coefficients(model: OccupancyModel = EXCLUSIVE) -> tuple[float, float]:
    """Coefficients (c1, c2) of mu/E_F = 1 + c1 t + c2 t^2, t = kT/E_F.

    Inverting the number series order by order gives c1 = -R1 and
    c2 = (R1^2 - R2)/4 = -pi^2/12 for every blocking parameter.
    """
    r1, r2 = _moment_ratios(model)
    return -r1, 0.25 * (r1 * r1 - r2)


def chemical_potential_series(t: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """Series route to mu/E_F at reduced temperature t = kT/E_F."""
    if t < 0:
        raise ValueError("t must be non-negative")
    _warn_series(t)
    c1, c2 = mu_series_coefficients(model)
    return 1.0 + c1 * t + c2 * t * t


def _degenerate_target(t: float, model: OccupancyModel) -> float:
    """n lambda^3 of a gas held at fixed density, at temperature t = kT/E_F."""
    return (4.0 / (3.0 * math.sqrt(math.pi))) * model.step_height * t**-1.5


def chemical_potential_exact(
    t: float,
    model: OccupancyModel = EXCLUSIVE,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """mu/E_F at t = kT/E_F, from inverting the density integral at fixed density."""
    if t <= 0:
        raise ValueError("t must be positive")
    eta = solve_fugacity(_degenerate_target(t, model), model, spec)
    return eta * t


def reduced_energy_per_particle(
    t: float,
    model: OccupancyModel = EXCLUSIVE,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """E/(N E_F) at fixed density and reduced temperature t = kT/E_F."""
    if t <= 0:
        raise ValueError("t must be positive")
    target = _degenerate_target(t, model)
    eta = solve_fugacity(target, model, spec)
    return energy_density(eta, model, spec) / target * t


def specific_heat_exact(
    t: float,
    model: OccupancyModel = EXCLUSIVE,
    relative_step: float = 1e-3,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Low-temperature heat-capacity coefficient c/(k_B t) per particle.

    Differentiates the exact E/(N E_F) at fixed density by centered
    differences with one Richardson refinement; the result tends to
    pi^2/2 as t -> 0 for every blocking parameter.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    if relative_step < 1e-6:
        raise StepSizeError(
            f"relative step {relative_step:g} is below the solver noise floor"
        )
    h = t * relative_step

    def slope(step: float) -> float:
        above = reduced_energy_per_particle(t + step, model, spec)
        below = reduced_energy_per_particle(t - step, model, spec)
        return (above - below) / (2.0 * step)

    refined = (4.0 * slope(0.5 * h) - slope(h)) / 3.0
    return refined / t


def heat_capacity_series_coefficient(model: OccupancyModel = EXCLUSIVE) -> float:
    """Closed-form linear coefficient (3/2)(R2 - R1^2); equals pi^2/2 always."""
    r1, r2 = _moment_ratios(model)
    return 1.5 * (r2 - r1 * r1)


def pressure_over_degenerate(
    t: float,
    model: OccupancyModel = EXCLUSIVE,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Exact pressure over the T = 0 value (2/5) n E_F, at t = kT/E_F."""
    if t <= 0:
        raise ValueError("t must be positive")
    target = _degenerate_target(t, model)
    eta = solve_fugacity(target, model, spec)
    return pressure(eta, model, spec) / target * t / 0.4
