"""Convolution characterization of ME(alpha) and neighborhood stability.

The characterizing family of kernels, one per phase gamma in (-pi, pi]:

    h_gamma(z) = (1 + z*(alpha e^{i gamma} - 1)) / (z (1-z)^2)
               = 1/z + sum_{k>=0} (1 + alpha (k+1) e^{i gamma}) z^k

and the identity z*(f * h_gamma)(z) = g(z) + alpha e^{i gamma} z g'(z), whose
real part is positive for every gamma exactly when f is in ME(alpha):
minimizing over gamma gives Re g - alpha |z g'|, the ME margin itself.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .classes import Status, MembershipVerdict, _verdict_from_margins, check_me, coeff_weight
from .reporting import CheckResult, CheckStatus, VerificationReport
from .series import DiscGrid, LaurentFunction, eval_g, eval_g_prime

__all__ = [
    "KernelSpec",
    "kernel",
    "check_thm31",
    "thm31_margins",
    "stability_premise",
    "neighborhood_sample",
    "check_thm32",
]

TAU = 2.0 * math.pi


@dataclass(frozen=True)
class KernelSpec:
    """Order parameter and phase of one characterizing kernel."""

    alpha: float
    gamma: float

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        # normalize the phase into (-pi, pi]
        g = math.remainder(float(self.gamma), TAU)
        if g <= -math.pi:
            g += TAU
        object.__setattr__(self, "gamma", g)


def kernel(spec: KernelSpec, degree: int) -> LaurentFunction:
    """Expansion of h_gamma truncated at the given degree.

    Closed-form coefficients c_k = 1 + alpha (k+1) e^{i gamma}; at alpha = 0
    every c_k is 1 and the kernel degenerates to the convolution identity.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    phase = complex(math.cos(spec.gamma), math.sin(spec.gamma))
    return LaurentFunction(
        tuple(1.0 + spec.alpha * (k + 1) * phase for k in range(degree + 1))
    )


def thm31_margins(
    f: LaurentFunction, alpha: float, points: np.ndarray, gamma_samples: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-point margins of Re[g + alpha e^{i gamma} z g'] over gamma.

    Returns (exact, sampled): the exact minimum over all phases, which is
    Re g - alpha |z g'|, and the minimum over gamma_samples equispaced
    phases gamma_j = 2 pi j / gamma_samples. The sampled value never drops
    below the exact one; the gap is at most alpha |z g'| pi^2 / (2 M^2).
    """
    g = eval_g(f, points)
    w = alpha * points * eval_g_prime(f, points)
    exact = np.real(g) - np.abs(w)
    # min_j cos(arg w + gamma_j) = -cos(distance from the nearest sampled
    # angle to pi), computed directly instead of looping over j
    step = TAU / gamma_samples
    residue = np.mod(math.pi - np.angle(w), step)
    dist = np.minimum(residue, step - residue)
    sampled = np.real(g) - np.abs(w) * np.cos(dist)
    return exact, sampled


def check_thm31(
    f: LaurentFunction, alpha: float, grid: DiscGrid, gamma_samples: int = 256
) -> MembershipVerdict:
    """Membership via the kernel family: positive real part for all phases.

    The verdict uses the exact minimum over gamma (no discretization), so it
    agrees with check_me pointwise. samples_checked counts the grid-phase
    combinations the sampled variant covers.
    """
    if gamma_samples < 4:
        raise ValueError(f"gamma_samples must be >= 4, got {gamma_samples}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    pts = grid.points
    exact, _ = thm31_margins(f, alpha, pts, gamma_samples)
    return _verdict_from_margins(exact, pts, samples=len(pts) * gamma_samples)


def convolve_with_kernel(f: LaurentFunction, alpha: float, gamma: float, z):
    """z*(f*h_gamma)(z) computed from the right-hand side of the identity."""
    phase = complex(math.cos(gamma), math.sin(gamma))
    return eval_g(f, z) + alpha * phase * np.asarray(z) * eval_g_prime(f, z)


def stability_premise(
    f: LaurentFunction, alpha: float, eps: float, grid: DiscGrid
) -> MembershipVerdict:
    """Check that (f - eps/z)/(1 - eps) is a sampled member of ME(alpha).

    The shifted function keeps the pole and divides every tail coefficient
    by (1 - eps); its ME margin at z is (margin_f(z) - eps)/(1 - eps), so the
    premise says the margin of f itself stays above eps.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0,1), got {eps}")
    shifted = LaurentFunction(tuple(c / (1.0 - eps) for c in f.coeffs))
    return check_me(shifted, alpha, grid)


def neighborhood_sample(
    f: LaurentFunction, delta: float, count: int, seed: int
) -> list[LaurentFunction]:
    """Deterministic perturbations of f with weighted tail distance <= delta.

    Every third sample lies exactly on the sphere sum k|a_k - b_k| = delta;
    the first eight of those are single-index axis spikes b_k = a_k + delta/k
    for k = 1..8 (worst-case directions, independent of the seed), the rest
    spread sphere mass over random index sets with random phases. Interior
    samples scale the same construction by u ~ U(0,1).
    """
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    base = list(f.coeffs)
    samples: list[LaurentFunction] = []
    spikes_placed = 0
    for i in range(count):
        on_sphere = i % 3 == 0
        if on_sphere and spikes_placed < 8:
            spikes_placed += 1
            k = spikes_placed
            coeffs = base + [0j] * max(0, k + 1 - len(base))
            coeffs[k] = coeffs[k] + delta / k
            samples.append(LaurentFunction(tuple(coeffs)))
            continue
        n_active = int(rng.integers(1, 13))
        indices = rng.choice(np.arange(1, 41), size=n_active, replace=False)
        weights = rng.dirichlet(np.ones(n_active))
        phases = np.exp(1j * rng.uniform(0.0, TAU, n_active))
        scale = delta if on_sphere else delta * float(rng.uniform(0.0, 1.0))
        top = int(indices.max())
        coeffs = base + [0j] * max(0, top + 1 - len(base))
        for k, t, ph in zip(indices, weights, phases):
            coeffs[int(k)] = coeffs[int(k)] + (scale * float(t) / int(k)) * complex(ph)
        samples.append(LaurentFunction(tuple(coeffs)))
    return samples


def check_thm32(
    f: LaurentFunction,
    alpha: float,
    eps: float,
    count: int,
    grid: DiscGrid,
    seed: int,
    scale: float = 1.0,
) -> VerificationReport:
    """Neighborhood stability: if the strengthened premise holds, every
    sampled function within delta of f must be a member of ME(alpha).

    delta = delta_star * scale where delta_star = 1/(1 + 2 alpha) is the
    radius the conclusion covers; scale <= 1 keeps samples inside it, and
    delta < eps < 1 is required for the premise to have any force. A premise
    failure makes the remaining checks inapplicable rather than failed.
    """
    t0 = time.perf_counter()
    if not 0.0 < scale <= 1.0:
        raise ValueError(f"scale must lie in (0,1], got {scale}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    delta_star = 1.0 / coeff_weight(alpha, 1)  # 1/(1+2*alpha)
    delta = delta_star * scale
    if not delta < eps < 1.0:
        raise ValueError(
            f"need delta < eps < 1 (delta={delta}, eps={eps}); "
            "raise eps or shrink scale"
        )
    inputs = {
        "alpha": alpha,
        "eps": eps,
        "delta_star": delta_star,
        "delta": delta,
        "scale": scale,
        "count": count,
        "seed": seed,
        "grid": {"radii": list(grid.radii), "angular_samples": grid.angular_samples},
    }
    checks: list[CheckResult] = []
    premise = stability_premise(f, alpha, eps, grid)
    if premise.is_member:
        checks.append(
            CheckResult("premise", CheckStatus.PASS, premise.min_margin, premise.witness)
        )
        worst = math.inf
        worst_witness = None
        refuted = 0
        undecided = 0
        for sample in neighborhood_sample(f, delta, count, seed):
            verdict = check_me(sample, alpha, grid)
            if verdict.min_margin < worst:
                worst = verdict.min_margin
                worst_witness = verdict.witness
            if verdict.status is Status.NON_MEMBER:
                refuted += 1
            elif not verdict.is_member:
                undecided += 1
        if refuted:
            status = CheckStatus.FAIL
            detail = f"{refuted} of {count} samples refuted"
        elif undecided:
            status = CheckStatus.INDETERMINATE
            detail = f"{undecided} of {count} samples within margin tolerance"
        else:
            status = CheckStatus.PASS
            detail = f"all {count} samples are members"
        checks.append(
            CheckResult("neighborhood_members", status, worst, worst_witness, detail)
        )
    else:
        checks.append(
            CheckResult(
                "premise",
                CheckStatus.INAPPLICABLE,
                premise.min_margin,
                premise.witness,
                "premise margin does not clear eps; conclusion not claimed",
            )
        )
        checks.append(
            CheckResult(
                "neighborhood_members",
                CheckStatus.INAPPLICABLE,
                None,
                None,
                "skipped: premise not established",
            )
        )
    runtime_ms = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("thm3.2", inputs, tuple(checks), runtime_ms)
