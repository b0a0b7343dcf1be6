"""Foundation arithmetic: rising factorials, Gauss-Legendre rules, Chebyshev-U.

Rational values are plain :class:`fractions.Fraction` instances throughout the
package — arbitrary precision, always reduced, positive denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConvergenceError, ParameterError

__all__ = [
    "QuadratureRule",
    "pochhammer",
    "gauss_legendre",
    "chebyshev_u",
    "chebyshev_u_derivatives",
]


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial a·(a+1)···(a+n−1); 1 for n = 0.

    `a` may be an int or Fraction; the result is exact.
    """
    if n < 0:
        raise ParameterError("pochhammer order must be nonnegative")
    out = Fraction(1)
    a = Fraction(a)
    for j in range(n):
        out *= a + j
    return out


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on [-1, 1], immutable and shareable."""

    order: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]


def _legendre_pair(order: int, x: float) -> tuple[float, float]:
    """P_order(x) and P_{order-1}(x) by the three-term recurrence."""
    p_prev, p = 1.0, x
    for j in range(1, order):
        p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
    return p, p_prev


def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule of the given order.

    Nodes are the Legendre roots, located by Newton iteration started from
    the Chebyshev-angle guesses cos(pi*(i + 3/4)/(order + 1/2)) and driven
    to 1e-15; weights use w = 2/((1 - x^2) P'_order(x)^2).
    """
    if order < 1:
        raise ParameterError("quadrature order must be >= 1")
    nodes = [0.0] * order
    weights = [0.0] * order
    for i in range((order + 1) // 2):
        x = math.cos(math.pi * (i + 0.75) / (order + 0.5))
        for _ in range(100):
            p, p_prev = _legendre_pair(order, x)
            dp = order * (x * p - p_prev) / (x * x - 1.0)
            dx = p / dp
            x -= dx
            if abs(dx) <= 1e-15:
                break
        else:
            raise ConvergenceError(
                f"Legendre root {i} of order {order} did not converge"
            )
        p, p_prev = _legendre_pair(order, x)
        dp = order * (x * p - p_prev) / (x * x - 1.0)
        w = 2.0 / ((1.0 - x * x) * dp * dp)
        # roots emerge in descending order; mirror into a symmetric rule
        nodes[i] = -x
        weights[i] = w
        nodes[order - 1 - i] = x
        weights[order - 1 - i] = w
    return QuadratureRule(order, tuple(nodes), tuple(weights))


def chebyshev_u(k: int, c: float) -> float:
    """Chebyshev polynomial of the second kind U_k(c), forward recurrence.

    For |c| <= 1, U_k(cos t)·sin t = sin((k+1)t); the package uses this to
    evaluate sin(kt)/sin t without the 0/0 at the nodes of sin t.  Forward
    recurrence is stable to ~1e-13 for the k <= 30 range used here.
    """
    if k < 0:
        raise ParameterError("chebyshev_u index must be nonnegative")
    if k == 0:
        return 1.0
    u_prev, u = 1.0, 2.0 * c
    for _ in range(k - 1):
        u_prev, u = u, 2.0 * c * u - u_prev
    return u


def chebyshev_u_derivatives(k: int, c: float) -> tuple[float, float, float]:
    """(U_k, U_k', U_k'') at c, by differentiating the recurrence."""
    if k < 0:
        raise ParameterError("chebyshev_u index must be nonnegative")
    if k == 0:
        return 1.0, 0.0, 0.0
    u_prev, u = 1.0, 2.0 * c
    d_prev, d = 0.0, 2.0
    s_prev, s = 0.0, 0.0
    for _ in range(k - 1):
        u_prev, u = u, 2.0 * c * u - u_prev
        d_prev, d = d, 2.0 * u_prev + 2.0 * c * d - d_prev
        s_prev, s = s, 4.0 * d_prev + 2.0 * c * s - s_prev
    return u, d, s
