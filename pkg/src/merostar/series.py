"""Truncated Laurent series with a simple pole of residue 1 at the origin.

Every function handled by this package has the shape

    f(z) = 1/z + a_0 + a_1 z + ... + a_N z^N,

represented by its tail coefficients alone. All evaluation goes through the
analytic companion g(z) = z*f(z), a polynomial with g(0) = 1, so nothing ever
touches the pole. The identities used downstream:

    z^2 f'(z) + z f(z) = z g'(z)
    z f'(z)/f(z) + 1   = z g'(z)/g(z)
    z^2 f'(z)          = z g'(z) - g(z)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

__all__ = [
    "LaurentFunction",
    "DiscGrid",
    "from_coeffs",
    "eval_g",
    "eval_g_prime",
    "hadamard",
    "partial_sum",
    "delta_distance",
]

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999, 0.9999)
DEFAULT_ANGULAR_SAMPLES = 2048


def _require_finite(values: Iterable[complex], what: str) -> None:
    for i, v in enumerate(values):
        c = complex(v)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ValueError(f"{what}[{i}] is not finite: {c!r}")


@dataclass(frozen=True)
class LaurentFunction:
    """Tail coefficients (a_0, ..., a_N); the 1/z term is implicit.

    The empty tuple encodes the bare pole f(z) = 1/z (truncation degree -1).
    Instances are immutable and hashable; equality is exact coefficient
    equality.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        _require_finite(self.coeffs, "coeffs")

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    @cached_property
    def g_coeffs(self) -> np.ndarray:
        # ascending coefficients of g(z) = z*f(z) = 1 + sum a_n z^{n+1}
        return np.concatenate(([1.0 + 0.0j], np.asarray(self.coeffs, dtype=complex)))

    @cached_property
    def g_prime_coeffs(self) -> np.ndarray:
        return npoly.polyder(self.g_coeffs)

    def __repr__(self) -> str:
        return f"LaurentFunction(degree={self.truncation_degree})"


def from_coeffs(coeffs: Sequence[complex]) -> LaurentFunction:
    """Build the series 1/z + sum coeffs[n] * z^n.

    An empty sequence gives the bare pole. Non-finite entries are rejected.
    """
    return LaurentFunction(tuple(complex(c) for c in coeffs))


def eval_g(f: LaurentFunction, z: complex):
    """Evaluate g(z) = z*f(z) = 1 + sum a_n z^{n+1} by Horner recurrence.

    Accepts a scalar or an ndarray of points; g(0) = 1 is legal.
    """
    return npoly.polyval(z, f.g_coeffs)


def eval_g_prime(f: LaurentFunction, z: complex):
    """Evaluate g'(z) = sum (n+1) a_n z^n; consistent with eval_g under
    finite differencing."""
    return npoly.polyval(z, f.g_prime_coeffs)


def hadamard(f: LaurentFunction, g: LaurentFunction) -> LaurentFunction:
    """Coefficient-wise product; the shared 1/z term is preserved.

    Truncation of the result is the shorter of the two inputs.
    """
    n = min(len(f.coeffs), len(g.coeffs))
    return LaurentFunction(tuple(a * b for a, b in zip(f.coeffs[:n], g.coeffs[:n])))


def partial_sum(f: LaurentFunction, n: int) -> LaurentFunction:
    """Return S_n = 1/z + sum_{k=1}^{n-1} a_k z^k.

    Index 0 is dropped by definition. n = 1 gives the bare pole. Trailing
    zeros of the result are stripped, so S_1 compares equal to from_coeffs([]).
    """
    if n < 1:
        raise ValueError(f"partial sum index must be >= 1, got {n}")
    kept = list(f.coeffs[:n])
    if kept:
        kept[0] = 0j
    for k in range(n, len(kept)):
        kept[k] = 0j
    while kept and kept[-1] == 0:
        kept.pop()
    return LaurentFunction(tuple(kept))


def delta_distance(f: LaurentFunction, g: LaurentFunction) -> float:
    """Weighted tail distance sum_{k>=1} k * |a_k - b_k|.

    Index 0 carries no weight; shorter series are padded with zeros. This is
    a pseudometric (it ignores a_0).
    """
    terms = []
    longest = max(len(f.coeffs), len(g.coeffs))
    for k in range(1, longest):
        a = f.coeffs[k] if k < len(f.coeffs) else 0j
        b = g.coeffs[k] if k < len(g.coeffs) else 0j
        if a != b:
            terms.append(k * abs(a - b))
    return math.fsum(terms)


@dataclass(frozen=True)
class DiscGrid:
    """Sampling grid: circles of the given radii, equispaced angles on each.

    Radii must lie strictly inside (0,1) and increase; the default schedule
    piles radii toward the boundary because the class conditions are open
    inequalities whose failures concentrate there. z = 0 never appears.
    """

    radii: tuple[float, ...] = DEFAULT_RADII
    angular_samples: int = DEFAULT_ANGULAR_SAMPLES

    def __post_init__(self) -> None:
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))
        if not self.radii:
            raise ValueError("grid needs at least one radius")
        for r in self.radii:
            if not 0.0 < r < 1.0:
                raise ValueError(f"radius {r} outside (0,1)")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if self.angular_samples < 8:
            raise ValueError("angular_samples must be >= 8")

    @classmethod
    def default(cls) -> "DiscGrid":
        return cls()

    @classmethod
    def with_rmax(cls, rmax: float, angular_samples: int = DEFAULT_ANGULAR_SAMPLES) -> "DiscGrid":
        """Default radius schedule capped at rmax (rmax itself included)."""
        if not 0.0 < rmax < 1.0:
            raise ValueError(f"rmax {rmax} outside (0,1)")
        radii = [r for r in DEFAULT_RADII if r < rmax]
        radii.append(rmax)
        return cls(tuple(radii), angular_samples)

    @cached_property
    def thetas(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angular_samples) / self.angular_samples

    @cached_property
    def points(self) -> np.ndarray:
        """All grid points as a flat complex array, radius-major order."""
        ring = np.exp(1j * self.thetas)
        return (np.asarray(self.radii)[:, None] * ring[None, :]).ravel()

    def __len__(self) -> int:
        return len(self.radii) * self.angular_samples

    def point_label(self, index: int) -> tuple[float, float]:
        """(radius, theta) of the flat point index, for reporting."""
        r = self.radii[index // self.angular_samples]
        th = float(self.thetas[index % self.angular_samples])
        return r, th


def refinement_grid(angular_samples: int = 64) -> DiscGrid:
    """Radii 1 - 10^-k, k = 1..8: a boundary-chasing grid for refutation
    searches whose violations only appear extremely close to |z| = 1."""
    radii = tuple(1.0 - 10.0 ** (-k) for k in range(1, 9))
    return DiscGrid(radii, angular_samples)


def serialize_coeffs(f: LaurentFunction) -> dict:
    """JSON-ready form: {"coeffs": [[re, im], ...]}, index i -> a_i."""
    return {"coeffs": [[c.real, c.imag] for c in f.coeffs]}


def deserialize_coeffs(data: dict) -> LaurentFunction:
    """Inverse of serialize_coeffs. Unknown keys are ignored; non-finite or
    malformed entries are rejected with the offending index."""
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError('series JSON must be an object with a "coeffs" key')
    raw = data["coeffs"]
    if not isinstance(raw, list):
        raise ValueError('"coeffs" must be a list of [re, im] pairs')
    out = []
    for i, entry in enumerate(raw):
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(x, (int, float)) for x in entry)
        ):
            raise ValueError(f"coeffs[{i}] is not an [re, im] pair: {entry!r}")
        c = complex(entry[0], entry[1])
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ValueError(f"coeffs[{i}] is not finite: {entry!r}")
        out.append(c)
    return LaurentFunction(tuple(out))


def horner_scalar(coeffs: Sequence[complex], z: complex) -> complex:
    """Plain scalar Horner evaluation of an ascending-coefficient polynomial.

    Reference path used by tests and by code that wants no numpy round trip
    for a single point.
    """
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def exp_tail(degree: int) -> LaurentFunction:
    """Truncation of e^z/z = 1/z + sum_{n>=0} z^n/(n+1)!."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    coeffs = []
    fact = 1.0
    for n in range(degree + 1):
        fact *= n + 1
        coeffs.append(1.0 / fact)
    return LaurentFunction(tuple(complex(c) for c in coeffs))
