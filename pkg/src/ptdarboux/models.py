"""Particle in a box and trigonometric Poschl-Teller well on (0, pi/(2 alpha)).

Both Hamiltonians are -d^2/dx^2 plus a potential (hbar = 2m = 1).  The box
spectrum is 4 alpha^2 k^2 for k >= 1; the Poschl-Teller spectrum is
alpha^2 (2n + kappa + lam)^2.  Energies are written so that for the
symmetric kappa = lam = 2 well the n-th level coincides bit-for-bit with
the box level k = n + 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError
from .hypergeom import TerminatingHypergeometric, f21_eval_real

__all__ = [
    "WellConfig",
    "PTParams",
    "box_eigenfunction",
    "box_energy",
    "pt_potential",
    "pt_energy",
    "pt_eigen_hypergeom",
]


@dataclass(frozen=True)
class WellConfig:
    """Geometry of the interval (0, L) with L = pi / (2 alpha)."""

    alpha: float

    def __post_init__(self):
        if not (self.alpha > 0):
            raise ParameterError(f"alpha must be positive, got {self.alpha}")

    @property
    def length(self) -> float:
        return math.pi / (2.0 * self.alpha)


@dataclass(frozen=True)
class PTParams:
    """Poschl-Teller strength parameters; lam is the coefficient usually
    written with a Greek lambda (reserved word in Python)."""

    kappa: float
    lam: float

    def __post_init__(self):
        if not (self.kappa > 1):
            raise ParameterError(f"kappa must exceed 1, got {self.kappa}")
        if not (self.lam > 1):
            raise ParameterError(f"lam must exceed 1, got {self.lam}")


def _require_closed(cfg: WellConfig, x: float) -> None:
    if not (0.0 <= x <= cfg.length):
        raise DomainError(f"x={x} outside closed interval [0, {cfg.length}]")


def _require_open(cfg: WellConfig, x: float) -> None:
    if not (0.0 < x < cfg.length):
        raise DomainError(f"x={x} outside open interval (0, {cfg.length})")


def box_eigenfunction(cfg: WellConfig, k: int, x: float) -> float:
    """Normalized box mode sqrt(4 alpha / pi) sin(2 alpha k x) on [0, L]."""
    if k < 1:
        raise ParameterError(f"box index k must be >= 1, got {k}")
    _require_closed(cfg, x)
    a = cfg.alpha
    return math.sqrt(4.0 * a / math.pi) * math.sin(2.0 * a * k * x)


def box_energy(cfg: WellConfig, k: int) -> float:
    if k < 1:
        raise ParameterError(f"box index k must be >= 1, got {k}")
    return 4.0 * cfg.alpha * cfg.alpha * (k * k)


def pt_potential(cfg: WellConfig, p: PTParams, x: float) -> float:
    """V(x) = alpha^2 [kappa(kappa-1)/sin^2(alpha x) + lam(lam-1)/cos^2(alpha x)].

    Defined on the open interval only; both walls are infinite.
    """
    _require_open(cfg, x)
    a = cfg.alpha
    s = math.sin(a * x)
    c = math.cos(a * x)
    return a * a * (p.kappa * (p.kappa - 1.0) / (s * s) + p.lam * (p.lam - 1.0) / (c * c))


def pt_energy(cfg: WellConfig, p: PTParams, n: int) -> float:
    if n < 0:
        raise ParameterError(f"level index n must be >= 0, got {n}")
    e = 2 * n + p.kappa + p.lam
    return cfg.alpha * cfg.alpha * (e * e)


def pt_eigen_hypergeom(cfg: WellConfig, p: PTParams, n: int, amplitude: float, x: float) -> float:
    """Bound state amplitude * sin^kappa(alpha x) cos^lam(alpha x)
    * 2F1(-n, n + kappa + lam; kappa + 1/2; sin^2(alpha x)).

    The hypergeometric factor terminates, so this evaluates on the closed
    interval; the prefactor supplies the zeros at both walls.
    """
    if n < 0:
        raise ParameterError(f"level index n must be >= 0, got {n}")
    _require_closed(cfg, x)
    h = TerminatingHypergeometric(
        n,
        Fraction(p.kappa) + Fraction(p.lam) + n,
        Fraction(p.kappa) + Fraction(1, 2),
    )
    a = cfg.alpha
    s = math.sin(a * x)
    c = math.cos(a * x)
    return amplitude * s**p.kappa * c**p.lam * f21_eval_real(h, s * s)
