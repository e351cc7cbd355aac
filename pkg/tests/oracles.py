"""Brute-force numerical oracles, independent of the package's own kernels.

Everything here works from the occupation law alone, on dense fixed
grids, so that the adaptive-quadrature results in the package can be
checked against a second, dumber route.  The half-line moments use the
substitution u = sqrt(x), which removes the sqrt(x) kink at the origin:
a plain trapezoid on x converges like h^{3/2} there and would stall near
1e-7, far above the tolerances these oracles are held to.
"""

from __future__ import annotations

import math

import numpy as np

from xfermi import EXCLUSIVE, OccupancyModel

_trapezoid = getattr(np, "trapezoid", None) or np.trapz  # numpy < 2 fallback


def occupancy_grid(x: np.ndarray, model: OccupancyModel) -> np.ndarray:
    """Occupation law evaluated directly, clipped for exp stability."""
    x = np.asarray(x, dtype=float)
    return model.weight / (np.exp(np.clip(x, -700.0, 700.0)) + model.blocking)


def halfline_moment(
    power: float,
    eta: float,
    model: OccupancyModel = EXCLUSIVE,
    upper: float | None = None,
    points: int = 1_000_001,
) -> float:
    """Trapezoid estimate of Int_0^inf x^power f(x - eta) dx.

    Evaluated as Int_0^sqrt(upper) 2 u^(2 power + 1) f(u^2 - eta) du.
    """
    if upper is None:
        upper = 60.0 + max(eta, 0.0)
    u = np.linspace(0.0, math.sqrt(upper), points)
    integrand = 2.0 * u ** (2.0 * power + 1.0) * occupancy_grid(u * u - eta, model)
    return float(_trapezoid(integrand, u))


def density_oracle(eta: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """n lambda^3 by dense trapezoid."""
    return (2.0 / math.sqrt(math.pi)) * halfline_moment(0.5, eta, model)


def energy_density_oracle(eta: float, model: OccupancyModel = EXCLUSIVE) -> float:
    """u by dense trapezoid."""
    return (2.0 / math.sqrt(math.pi)) * halfline_moment(1.5, eta, model)
