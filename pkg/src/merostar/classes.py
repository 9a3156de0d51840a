"""Membership functionals and verdicts for the three disc classes.

The classes, all over the punctured unit disc E with g = z*f:

    ME(alpha):       Re g(z) > alpha * |z g'(z)|            (alpha >= 0)
    MF(alpha):       |z g'(z)/g(z)| < 1 - alpha             (0 <= alpha < 1)
    STARLIKE(alpha): Re(z g'(z)/g(z)) < 1 - alpha           (0 <= alpha < 1)

Each check evaluates the corresponding margin on a finite grid. A negative
margin is a proof of non-membership (the witness point is returned);
nonnegative margins everywhere are evidence, not proof, so the best sampled
verdict is SampledMember. CertifiedMember is reserved for the coefficient
certificate, which is a genuine sufficient condition.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .series import DiscGrid, LaurentFunction, eval_g, eval_g_prime
from .tolerances import EXACT_TOL, MARGIN_TOL, ZERO_TOL

__all__ = [
    "Family",
    "ClassSpec",
    "Status",
    "MembershipVerdict",
    "me_functional",
    "check_me",
    "check_mf",
    "check_starlike",
    "coeff_sufficient_me",
    "coeff_bound",
    "coeff_weight",
    "check_remark2",
]


class Family(enum.Enum):
    ME = "me"
    MF = "mf"
    STARLIKE = "starlike"
    TME = "tme"


@dataclass(frozen=True)
class ClassSpec:
    """A class family together with its order parameter."""

    family: Family
    alpha: float

    def __post_init__(self) -> None:
        a = float(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not math.isfinite(a) or a < 0:
            raise ValueError(f"alpha must be finite and >= 0, got {a}")
        if self.family in (Family.MF, Family.STARLIKE) and a >= 1:
            raise ValueError(f"{self.family.value} requires 0 <= alpha < 1, got {a}")


class Status(enum.Enum):
    CERTIFIED_MEMBER = "CertifiedMember"
    SAMPLED_MEMBER = "SampledMember"
    NON_MEMBER = "NonMember"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class MembershipVerdict:
    status: Status
    min_margin: float
    witness: Optional[complex]
    samples_checked: int

    @property
    def is_member(self) -> bool:
        return self.status in (Status.CERTIFIED_MEMBER, Status.SAMPLED_MEMBER)


def _verdict_from_margins(
    margins: np.ndarray,
    points: np.ndarray,
    degenerate: np.ndarray | None = None,
    samples: int | None = None,
) -> MembershipVerdict:
    """Fold pointwise margins into a verdict.

    degenerate marks points whose margin is meaningless (e.g. |g| ~ 0); they
    force Indeterminate unless a strict violation exists elsewhere.
    """
    if degenerate is None:
        degenerate = np.zeros(margins.shape, dtype=bool)
    usable = ~degenerate
    if not usable.any():
        raise ValueError("all grid points degenerate; margin undefined everywhere")
    idx = int(np.argmin(np.where(usable, margins, np.inf)))
    min_margin = float(margins[idx])
    witness = complex(points[idx])
    n = int(margins.size if samples is None else samples)
    if min_margin < -MARGIN_TOL:
        return MembershipVerdict(Status.NON_MEMBER, min_margin, witness, n)
    if degenerate.any() or min_margin < MARGIN_TOL:
        return MembershipVerdict(Status.INDETERMINATE, min_margin, witness, n)
    return MembershipVerdict(Status.SAMPLED_MEMBER, min_margin, witness, n)


def me_functional(f: LaurentFunction, alpha: float, z: complex) -> float:
    """Margin of the ME(alpha) condition at one point: Re g - alpha*|z g'|.

    Positive on all of E means f in ME(alpha). Supports ndarray z.
    """
    g = eval_g(f, z)
    zgp = np.asarray(z) * eval_g_prime(f, z)
    out = np.real(g) - alpha * np.abs(zgp)
    return float(out) if out.ndim == 0 else out


def me_margins(f: LaurentFunction, alpha: float, points: np.ndarray) -> np.ndarray:
    g = eval_g(f, points)
    zgp = points * eval_g_prime(f, points)
    return np.real(g) - alpha * np.abs(zgp)


def check_me(f: LaurentFunction, alpha: float, grid: DiscGrid) -> MembershipVerdict:
    """Sample the ME(alpha) margin on the grid."""
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    pts = grid.points
    return _verdict_from_margins(me_margins(f, alpha, pts), pts)


def _ratio_margins(f: LaurentFunction, points: np.ndarray):
    """zg'/g on the grid plus the degeneracy mask where |g| ~ 0."""
    g = eval_g(f, points)
    zgp = points * eval_g_prime(f, points)
    degenerate = np.abs(g) < ZERO_TOL
    safe_g = np.where(degenerate, 1.0, g)
    return zgp / safe_g, degenerate


def check_mf(f: LaurentFunction, alpha: float, grid: DiscGrid) -> MembershipVerdict:
    """Sample the MF(alpha) margin (1 - alpha) - |z g'/g| on the grid."""
    if not 0 <= alpha < 1:
        raise ValueError(f"mf order must satisfy 0 <= alpha < 1, got {alpha}")
    pts = grid.points
    ratio, degenerate = _ratio_margins(f, pts)
    margins = (1.0 - alpha) - np.abs(ratio)
    return _verdict_from_margins(margins, pts, degenerate)


def check_starlike(f: LaurentFunction, alpha: float, grid: DiscGrid) -> MembershipVerdict:
    """Sample the starlikeness margin (1 - alpha) - Re(z g'/g).

    Re(zf'/f) < -alpha rewrites to Re(zg'/g) < 1 - alpha via zf'/f + 1 = zg'/g.
    """
    if not 0 <= alpha < 1:
        raise ValueError(f"starlike order must satisfy 0 <= alpha < 1, got {alpha}")
    pts = grid.points
    ratio, degenerate = _ratio_margins(f, pts)
    margins = (1.0 - alpha) - np.real(ratio)
    return _verdict_from_margins(margins, pts, degenerate)


def coeff_weight(alpha: float, n: int) -> float:
    """Weight 1 + alpha*(n+1) of the tail coefficient a_n.

    One shared definition backs the sufficient condition, the exact
    negative-coefficient characterization and the partial-sum hypothesis.
    """
    return 1.0 + alpha * (n + 1)


def coeff_sufficient_me(f: LaurentFunction, alpha: float) -> tuple[bool, float]:
    """Sufficient condition: sum_n (1 + alpha(n+1)) |a_n| <= 1.

    Returns (certified, 1 - sum). True certifies membership in ME(alpha) for
    the represented truncation; False is inconclusive, never a refutation.
    The comparison allows EXACT_TOL of dust so boundary functions whose sum
    is exactly 1 in real arithmetic stay certified.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    total = math.fsum(coeff_weight(alpha, n) * abs(c) for n, c in enumerate(f.coeffs))
    return total <= 1.0 + EXACT_TOL, 1.0 - total


def coeff_bound(alpha: float, n: int) -> float:
    """Sharp bound on |a_n| over ME(alpha): 2/(sqrt(alpha^2(n+1)^2+1) + alpha(n+1)).

    Algebraically 2*(sqrt(alpha^2(n+1)^2+1) - alpha(n+1)); the reciprocal form
    avoids the cancellation of the difference form for large alpha*(n+1).
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if n < 0:
        raise ValueError(f"coefficient index must be >= 0, got {n}")
    m = alpha * (n + 1)
    return 2.0 / (math.sqrt(m * m + 1.0) + m)


def check_remark2(f: LaurentFunction, grid: DiscGrid) -> MembershipVerdict:
    """Sample the margin -Re(z^2 f'(z)) = Re g - Re(z g').

    Negative real part of z^2 f' everywhere is implied by membership in
    ME(alpha) for alpha >= 1; this check is the sampled form of that
    implication (it carries no alpha of its own).
    """
    pts = grid.points
    g = eval_g(f, pts)
    zgp = pts * eval_g_prime(f, pts)
    margins = np.real(g) - np.real(zgp)
    return _verdict_from_margins(margins, pts)
