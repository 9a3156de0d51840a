"""The negative-coefficient subclass: exact membership, extreme points,
distortion bounds.

For f(z) = 1/z - sum_{n>=1} a_n z^n with a_n >= 0, membership in ME(alpha)
is equivalent to sum_n (1 + alpha(n+1)) a_n <= 1 (the sufficient condition
becomes a characterization), which makes everything here exact rather than
sampled: the class is the convex hull of 1/z and the single-term boundary
functions f_n(z) = 1/z - z^n/(1 + alpha(n+1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classes import MembershipVerdict, _verdict_from_margins, coeff_weight, me_margins
from .series import DiscGrid, LaurentFunction, eval_g
from .tolerances import EXACT_TOL

__all__ = [
    "TmeFunction",
    "check_tme_exact",
    "decompose",
    "recompose",
    "distortion_bounds",
    "check_distortion",
    "sharp_function",
]


@dataclass(frozen=True)
class TmeFunction:
    """Magnitudes (a_1, ..., a_N) of f(z) = 1/z - sum a_n z^n; all >= 0.

    Index 0 of the tuple stores a_1 (there is no constant term in this
    form). Converts losslessly to the general series type.
    """

    magnitudes: tuple[float, ...]

    def __post_init__(self) -> None:
        mags = tuple(float(m) for m in self.magnitudes)
        object.__setattr__(self, "magnitudes", mags)
        for i, m in enumerate(mags):
            if not math.isfinite(m) or m < 0:
                raise ValueError(f"magnitudes[{i}] must be finite and >= 0, got {m}")

    def to_laurent(self) -> LaurentFunction:
        return LaurentFunction((0j,) + tuple(-m + 0j for m in self.magnitudes))

    @classmethod
    def from_laurent(cls, f: LaurentFunction) -> "TmeFunction":
        """Strict conversion: requires a_0 = 0 and real nonpositive tail."""
        if f.coeffs and f.coeffs[0] != 0:
            raise ValueError("constant coefficient must be 0 for the negative form")
        mags = []
        for n, c in enumerate(f.coeffs[1:], start=1):
            if c.imag != 0 or c.real > 0:
                raise ValueError(f"coefficient at index {n} must be real and <= 0, got {c}")
            mags.append(-c.real)
        while mags and mags[-1] == 0:
            mags.pop()
        return cls(tuple(mags))


def weighted_sum(f: TmeFunction, alpha: float) -> float:
    return math.fsum(
        coeff_weight(alpha, n) * m for n, m in enumerate(f.magnitudes, start=1)
    )


def check_tme_exact(f: TmeFunction, alpha: float) -> tuple[bool, float]:
    """Exact two-sided membership test: sum (1 + alpha(n+1)) a_n <= 1.

    Returns (member, 1 - sum). Unlike the sampled checks this decides both
    directions; EXACT_TOL of slack keeps boundary functions inside.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    total = weighted_sum(f, alpha)
    return total <= 1.0 + EXACT_TOL, 1.0 - total


def sharp_function(alpha: float, n: int) -> TmeFunction:
    """Boundary member f_n(z) = 1/z - z^n/(1 + alpha(n+1)): weighted sum
    exactly 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    mags = [0.0] * n
    mags[n - 1] = 1.0 / coeff_weight(alpha, n)
    return TmeFunction(tuple(mags))


def decompose(f: TmeFunction, alpha: float) -> tuple[float, ...]:
    """Convex weights (lambda_0, lambda_1, ..., lambda_N) of f over the
    extreme points: lambda_n = (1 + alpha(n+1)) a_n for n >= 1 and lambda_0
    (the weight of the bare pole) absorbs the slack 1 - sum.

    Rejects non-members, whose lambda_0 would be negative.
    """
    member, margin = check_tme_exact(f, alpha)
    if not member:
        raise ValueError(f"not a member: weighted sum exceeds 1 by {-margin}")
    lambdas = [coeff_weight(alpha, n) * m for n, m in enumerate(f.magnitudes, start=1)]
    lambda0 = max(margin, 0.0)  # clamp the certified-boundary dust
    return (lambda0, *lambdas)


def recompose(weights: Sequence[float], alpha: float) -> TmeFunction:
    """Build sum lambda_k f_k from convex weights (lambda_0 first).

    Weights must be nonnegative and sum to 1 within 1e-9. The output always
    passes the exact membership test.
    """
    ws = [float(w) for w in weights]
    if not ws:
        raise ValueError("weights must be non-empty")
    for i, w in enumerate(ws):
        if not math.isfinite(w) or w < 0:
            raise ValueError(f"weights[{i}] must be finite and >= 0, got {w}")
    total = math.fsum(ws)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"weights must sum to 1 within 1e-9, got {total}")
    mags = [w / coeff_weight(alpha, n) for n, w in enumerate(ws[1:], start=1)]
    while mags and mags[-1] == 0:
        mags.pop()
    return TmeFunction(tuple(mags))


def distortion_bounds(alpha: float, r: float) -> tuple[float, float]:
    """Two-sided bound on |f(z)| at |z| = r over the class:
    1/r -+ r/(1 + 2 alpha)."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0,1), got {r}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    spread = r / coeff_weight(alpha, 1)
    return 1.0 / r - spread, 1.0 / r + spread


def check_distortion(f: TmeFunction, alpha: float, grid: DiscGrid) -> MembershipVerdict:
    """Verify lower <= |f(z)| <= upper at every grid point.

    The margin at a point is the smaller of the two slacks; the verdict's
    witness is the point with the least slack on either side.
    """
    member, _ = check_tme_exact(f, alpha)
    if not member:
        raise ValueError("distortion bounds only apply to members")
    lf = f.to_laurent()
    pts = grid.points
    absf = np.abs(eval_g(lf, pts)) / np.abs(pts)
    radii = np.repeat(np.asarray(grid.radii), grid.angular_samples)
    spread = radii / coeff_weight(alpha, 1)
    lower = 1.0 / radii - spread
    upper = 1.0 / radii + spread
    margins = np.minimum(absf - lower, upper - absf)
    return _verdict_from_margins(margins, pts)


def refute_on_axis(f: TmeFunction, alpha: float) -> MembershipVerdict:
    """Targeted non-membership search for the negative-coefficient form.

    The exact test fails exactly when the margin goes negative as r -> 1 on
    the positive real axis, so scan radii 1 - 10^-k there. Returns the
    verdict of that one-dimensional scan.
    """
    lf = f.to_laurent()
    pts = np.array([1.0 - 10.0 ** (-k) for k in range(1, 9)], dtype=complex)
    margins = me_margins(lf, alpha, pts)
    return _verdict_from_margins(margins, pts)
