"""Occupation law and the reduced gas parameterization.

The whole package is built around a two-parameter mean occupancy per
orbital,

    n(x) = weight / (exp(x) + blocking),        x = (eps - mu) / kT.

``weight`` counts the spin states that can feed an orbital and
``blocking`` controls how strongly multiple occupancy is suppressed:
blocking = 2 forbids double occupancy outright (one particle per orbital
even for opposite spins), blocking = 1 is the ordinary spin-1/2 Fermi
gas, and blocking = 0 recovers classical Boltzmann counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import REDUCED, PhysicalConstants

# beyond this the law is replaced by its asymptotic branches
_ASYMPTOTIC_X = 700.0


class ValidityWarning(UserWarning):
    """A result was requested outside its series' trusted range."""


@dataclass(frozen=True)
class OccupancyModel:
    """Mean occupancy n(x) = weight / (exp(x) + blocking) of one orbital."""

    name: str
    weight: float = 2.0
    blocking: float = 2.0

    def __post_init__(self):
        if self.weight <= 0:
            raise ValueError("weight must be positive")
        if self.blocking < 0:
            raise ValueError("blocking must be non-negative")

    @property
    def step_height(self) -> float:
        """Per-orbital occupancy of the T = 0 step (weight / blocking)."""
        if self.blocking == 0:
            raise ValueError(
                f"model {self.name!r} has no degenerate limit (blocking = 0)"
            )
        return self.weight / self.blocking


EXCLUSIVE = OccupancyModel("exclusive", 2.0, 2.0)
STANDARD_FD = OccupancyModel("fd", 2.0, 1.0)
BOLTZMANN = OccupancyModel("boltzmann", 2.0, 0.0)

MODELS: dict[str, OccupancyModel] = {
    m.name: m for m in (EXCLUSIVE, STANDARD_FD, BOLTZMANN)
}


def _occupation_scalar(x: float, model: OccupancyModel) -> float:
    g = model.weight
    a = model.blocking
    if a == 0.0:
        if x <= -709.0:  # exp overflows; the classical law genuinely diverges
            return math.inf
        return g * math.exp(-x)
    if x <= -_ASYMPTOTIC_X:
        return g / a
    if x >= 0.0:
        w = math.exp(-x)  # <= 1, underflows harmlessly to 0 for x >~ 745
        return g * w / (1.0 + a * w)
    return g / (math.exp(x) + a)


def occupation(x, model: OccupancyModel = EXCLUSIVE):
    """Mean occupancy at reduced energy x = (eps - mu)/kT.

    Accepts scalars or arrays.  Stable over the whole double range:
    beyond |x| = 700 the asymptotic branches weight*exp(-x) and
    weight/blocking are used directly.
    """
    if np.ndim(x) == 0:
        return _occupation_scalar(float(x), model)
    arr = np.asarray(x, dtype=float)
    g = model.weight
    a = model.blocking
    out = np.empty_like(arr)
    if a == 0.0:
        with np.errstate(over="ignore"):
            out[...] = g * np.exp(-arr)
        return out
    deep = arr <= -_ASYMPTOTIC_X
    pos = arr >= 0.0
    mid = ~(deep | pos)
    out[deep] = g / a
    w = np.exp(-arr[pos])
    out[pos] = g * w / (1.0 + a * w)
    out[mid] = g / (np.exp(arr[mid]) + a)
    return out


def thermal_wavelength(
    mass: float, temperature: float, constants: PhysicalConstants = REDUCED
) -> float:
    """de Broglie thermal wavelength sqrt(2 pi hbar^2 / (m k_B T))."""
    if mass <= 0 or temperature <= 0:
        raise ValueError("mass and temperature must be positive")
    return math.sqrt(
        2.0 * math.pi * constants.hbar**2 / (mass * constants.k_B * temperature)
    )


def dos_coefficient(mass: float, constants: PhysicalConstants = REDUCED) -> float:
    """Coefficient b of the free-particle density of states D(eps) = b V sqrt(eps).

    b = (2m)^{3/2} / (4 pi^2 hbar^3); the spin weight is carried by the
    occupancy law, not by the density of states.
    """
    if mass <= 0:
        raise ValueError("mass must be positive")
    return (2.0 * mass) ** 1.5 / (4.0 * math.pi**2 * constants.hbar**3)


@dataclass(frozen=True)
class GasParameters:
    """Dimensional description of a gas, used at the unit-system boundary."""

    mass: float
    temperature: float
    chemical_potential: float
    volume: float = 1.0

    def __post_init__(self):
        if self.mass <= 0 or self.temperature <= 0 or self.volume <= 0:
            raise ValueError("mass, temperature and volume must be positive")

    def eta(self, constants: PhysicalConstants = REDUCED) -> float:
        """Reduced chemical potential mu / (k_B T)."""
        return self.chemical_potential / (constants.k_B * self.temperature)

    def fugacity(self, constants: PhysicalConstants = REDUCED) -> float:
        return math.exp(self.eta(constants))

    def wavelength(self, constants: PhysicalConstants = REDUCED) -> float:
        return thermal_wavelength(self.mass, self.temperature, constants)


@dataclass(frozen=True)
class ReducedState:
    """Dimensionless state: eta = mu/kT and the degeneracy parameter n lambda^3."""

    eta: float
    degeneracy_parameter: float

    def __post_init__(self):
        if self.degeneracy_parameter <= 0:
            raise ValueError("degeneracy parameter must be positive")

    @property
    def fugacity(self) -> float:
        return math.exp(self.eta)


def reduced_state(
    gas: GasParameters,
    number_density: float,
    constants: PhysicalConstants = REDUCED,
) -> ReducedState:
    """Collapse dimensional gas parameters onto the reduced description."""
    if number_density <= 0:
        raise ValueError("number density must be positive")
    lam = gas.wavelength(constants)
    return ReducedState(gas.eta(constants), number_density * lam**3)
