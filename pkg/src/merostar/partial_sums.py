"""Ratio bounds between a function and its partial sums.

Under the weighted hypothesis sum_{k>=1} d_k |a_k| <= 1 with
d_k = 1 + alpha(k+1), both

    Re(f(z)/S_n(z)) > 1 - 1/d_n    and    Re(S_n(z)/f(z)) > d_n/(1 + d_n)

hold on the whole disc, with equality approached by 1/z - z^n/d_n along the
positive real axis. Ratios are evaluated through g, so f/S_n = g_f/g_{S_n}
never sees the pole; the hypothesis keeps both denominators zero-free in
exact arithmetic (tail mass < 1), so degenerate grid points indicate noise
and are excluded but counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classes import coeff_weight
from .series import DiscGrid, LaurentFunction, eval_g, partial_sum
from .tolerances import EXACT_TOL, ZERO_TOL

__all__ = ["RatioBoundReport", "dk", "hypothesis11", "check_ratio_bounds", "eq16_function"]


def dk(alpha: float, k: int) -> float:
    """Weight d_k = 1 + alpha(k+1); strictly increasing in k, > 1 for
    alpha > 0. Identical to the coefficient weight of the sufficient
    condition and the exact negative-coefficient test."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    return coeff_weight(alpha, k)


def hypothesis11(f: LaurentFunction, alpha: float) -> tuple[bool, float]:
    """Weighted tail condition sum_{k>=1} d_k |a_k| <= 1.

    Returns (holds, 1 - sum). Index 0 is not weighed at all; whether a
    nonzero a_0 breaks the ratio bounds is recorded by the suites as an
    observation, not asserted either way.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    total = math.fsum(
        coeff_weight(alpha, k) * abs(c) for k, c in enumerate(f.coeffs) if k >= 1
    )
    return total <= 1.0 + EXACT_TOL, 1.0 - total


def eq16_function(alpha: float, n: int) -> LaurentFunction:
    """Sharp function 1/z - z^n/d_n: hypothesis sum exactly 1 and
    f/S_n = 1 - z^{n+1}/d_n."""
    coeffs = [0j] * (n + 1)
    coeffs[n] = complex(-1.0 / dk(alpha, n))
    return LaurentFunction(tuple(coeffs))


@dataclass(frozen=True)
class RatioBoundReport:
    """Observed grid minima of both ratios against their exact bounds.

    applicable is False when the hypothesis fails (the bounds are then not
    claimed); excluded_points counts grid points skipped because one of the
    denominators was numerically zero.
    """

    n: int
    d_n: float
    bound_f_over_s: float
    bound_s_over_f: float
    observed_min_f_over_s: float
    observed_min_s_over_f: float
    hypothesis_margin: float
    applicable: bool
    excluded_points: int

    @property
    def margins(self) -> tuple[float, float]:
        return (
            self.observed_min_f_over_s - self.bound_f_over_s,
            self.observed_min_s_over_f - self.bound_s_over_f,
        )

    @property
    def holds(self) -> bool:
        m1, m2 = self.margins
        return m1 >= 0 and m2 >= 0


def check_ratio_bounds(
    f: LaurentFunction, alpha: float, n: int, grid: DiscGrid
) -> RatioBoundReport:
    """Evaluate Re(f/S_n) and Re(S_n/f) over the grid and compare with the
    bounds 1 - 1/d_n and d_n/(1 + d_n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d_n = dk(alpha, n)
    holds, margin = hypothesis11(f, alpha)
    pts = grid.points
    gf = eval_g(f, pts)
    gs = eval_g(partial_sum(f, n), pts)
    degenerate = (np.abs(gf) < ZERO_TOL) | (np.abs(gs) < ZERO_TOL)
    excluded = int(np.count_nonzero(degenerate))
    if excluded == len(pts):
        raise ValueError("all grid points degenerate")
    usable = ~degenerate
    f_over_s = np.real(gf[usable] / gs[usable])
    s_over_f = np.real(gs[usable] / gf[usable])
    return RatioBoundReport(
        n=n,
        d_n=d_n,
        bound_f_over_s=1.0 - 1.0 / d_n,
        bound_s_over_f=d_n / (1.0 + d_n),
        observed_min_f_over_s=float(f_over_s.min()),
        observed_min_s_over_f=float(s_over_f.min()),
        hypothesis_margin=margin,
        applicable=holds,
        excluded_points=excluded,
    )
