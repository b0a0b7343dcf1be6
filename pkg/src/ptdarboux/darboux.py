"""First-order Darboux transformation seeded on the ground box mode.

With W(x) = -(d/dx) log sin(2 alpha x) = -2 alpha cot(2 alpha x), the
operator L = d/dx + W annihilates the k = 1 box mode and maps each k >= 2
mode onto an eigenfunction of the partner Hamiltonian
-d^2/dx^2 + W' + W^2 + omega^2 at the unchanged energy 4 alpha^2 k^2,
where omega^2 = 4 alpha^2 is the energy of the annihilated seed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, ParameterError
from .models import WellConfig

__all__ = [
    "DarbouxContext",
    "superpotential",
    "partner_potential",
    "intertwine",
    "transform_normalization",
    "transformed_eigenpair",
]


@dataclass(frozen=True)
class DarbouxContext:
    """Well geometry plus the seed choice (only the ground mode is supported)."""

    cfg: WellConfig
    seed_index: int = 1
    omega_sq: float = field(init=False)

    def __post_init__(self):
        if self.seed_index != 1:
            raise ParameterError(
                f"only the nodeless seed (index 1) is supported, got {self.seed_index}"
            )
        object.__setattr__(self, "omega_sq", 4.0 * self.cfg.alpha * self.cfg.alpha)


def _require_open(ctx: DarbouxContext, x: float) -> None:
    if not (0.0 < x < ctx.cfg.length):
        raise DomainError(f"x={x} outside open interval (0, {ctx.cfg.length})")


def superpotential(ctx: DarbouxContext, x: float) -> float:
    """W(x) = -2 alpha cot(2 alpha x), singular at both walls."""
    _require_open(ctx, x)
    a = ctx.cfg.alpha
    t = 2.0 * a * x
    return -2.0 * a * math.cos(t) / math.sin(t)


def partner_potential(ctx: DarbouxContext, x: float) -> float:
    """W' + W^2 + omega^2, assembled with the analytic derivative
    W'(x) = 4 alpha^2 / sin^2(2 alpha x).  Collapses to
    8 alpha^2 / sin^2(2 alpha x)."""
    _require_open(ctx, x)
    a = ctx.cfg.alpha
    t = 2.0 * a * x
    s = math.sin(t)
    w = -2.0 * a * math.cos(t) / s
    w_prime = 4.0 * a * a / (s * s)
    return w_prime + w * w + ctx.omega_sq


def intertwine(ctx: DarbouxContext, k: int, x: float) -> float:
    """(L phi_k)(x) = sqrt(4 alpha / pi) 2 alpha
    [k cos(2 alpha k x) - cot(2 alpha x) sin(2 alpha k x)].

    Direct form; it loses accuracy near the walls where the cotangent
    blows up.  closed_form.chi_eval provides the stable rewrite.
    """
    if k < 1:
        raise ParameterError(f"box index k must be >= 1, got {k}")
    _require_open(ctx, x)
    a = ctx.cfg.alpha
    t = 2.0 * a * x
    cot = math.cos(t) / math.sin(t)
    return math.sqrt(4.0 * a / math.pi) * 2.0 * a * (
        k * math.cos(k * t) - cot * math.sin(k * t)
    )


def transform_normalization(ctx: DarbouxContext, k: int) -> float:
    """1 / sqrt(eps_k - omega^2) = 1 / (2 alpha sqrt(k^2 - 1)).

    The seed itself (k = 1) sits at eps_1 = omega^2, so its image has zero
    norm; that is reported as a ZeroDivisionError rather than a parameter
    problem.
    """
    if k < 1:
        raise ParameterError(f"box index k must be >= 1, got {k}")
    if k == 1:
        raise ZeroDivisionError(
            "seed mode is annihilated: eps_1 - omega^2 = 0 leaves nothing to normalize"
        )
    a = ctx.cfg.alpha
    return 1.0 / (2.0 * a * math.sqrt(float(k * k - 1)))


def transformed_eigenpair(ctx: DarbouxContext, k: int):
    """Energy 4 alpha^2 k^2 and the normalized partner eigenfunction
    x -> N_k (L phi_k)(x) as a closure over the open interval."""
    if k < 2:
        raise ParameterError(f"partner modes exist for k >= 2, got {k}")
    a = ctx.cfg.alpha
    energy = 4.0 * a * a * (k * k)
    norm = transform_normalization(ctx, k)

    def profile(x: float) -> float:
        return norm * intertwine(ctx, k, x)

    return energy, profile
