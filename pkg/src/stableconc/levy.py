"""Exact arithmetic of the stable Levy measure.

The jump measure factorizes as a finite measure on the unit sphere (the
spectral measure, atoms ``(direction, weight)``) times the radial density
``r**(-1-alpha) dr``.  Everything here is closed-form: tail masses beyond a
truncation radius, truncated norm moments, and the two-sided sandwich for
``E||Z_R||`` (the norm of the compound-Poisson tail part).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

_UNIT_TOL = 1e-12
_MASS_TOL = 1e-12


@dataclass(frozen=True)
class SpectralMeasure:
    """Discrete spectral measure on the unit sphere of R^d.

    directions: (m, d) array, rows of Euclidean norm 1 (checked to 1e-12).
    weights:    (m,) array of strictly positive masses.
    total_mass: cached sum of weights, revalidated on construction.
    """

    directions: np.ndarray
    weights: np.ndarray
    total_mass: float

    def __post_init__(self):
        dirs = np.atleast_2d(np.asarray(self.directions, dtype=float))
        w = np.asarray(self.weights, dtype=float).ravel()
        if dirs.shape[0] != w.shape[0]:
            raise ValueError("one weight per direction required")
        norms = np.linalg.norm(dirs, axis=1)
        if np.any(np.abs(norms - 1.0) > _UNIT_TOL):
            raise ValueError("directions must be unit vectors (1e-12 tolerance)")
        if np.any(w <= 0.0):
            raise ValueError("weights must be strictly positive")
        total = float(np.sum(w))
        if not math.isclose(total, float(self.total_mass), rel_tol=_MASS_TOL):
            raise ValueError(
                f"total_mass {self.total_mass} disagrees with atom sum {total}"
            )
        dirs.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "directions", dirs)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "total_mass", total)

    @property
    def dimension(self) -> int:
        return self.directions.shape[1]

    @property
    def n_atoms(self) -> int:
        return self.directions.shape[0]

    @classmethod
    def from_atoms(cls, atoms) -> "SpectralMeasure":
        """Build from an iterable of (direction, weight) pairs."""
        dirs = np.array([np.asarray(d, dtype=float) for d, _ in atoms])
        w = np.array([float(wt) for _, wt in atoms])
        return cls(dirs, w, float(w.sum()))

    @classmethod
    def symmetric_axes(cls, d: int, total_mass: float) -> "SpectralMeasure":
        """2d atoms at +-e_j, equal weights summing to total_mass."""
        if d < 1:
            raise ValueError("dimension must be >= 1")
        if total_mass <= 0:
            raise ValueError("total_mass must be positive")
        eye = np.eye(d)
        dirs = np.vstack([eye, -eye])
        w = np.full(2 * d, total_mass / (2 * d))
        return cls(dirs, w, float(total_mass))


@dataclass(frozen=True)
class StableModel:
    """A stable law: index alpha, dimension, spectral measure, optional shift.

    The shift is the ``b`` of the infinitely divisible representation with
    jumps of norm <= 1 compensated; it defaults to zero and none of the
    bounds depend on it.
    """

    alpha: float
    d: int
    spectral: SpectralMeasure
    shift: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not (0.0 < self.alpha < 2.0):
            raise ValueError("alpha must lie in (0, 2)")
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        if self.spectral.dimension != self.d:
            raise ValueError("spectral measure dimension mismatch")
        shift = self.shift
        if shift is None:
            shift = np.zeros(self.d)
        shift = np.asarray(shift, dtype=float).ravel()
        if shift.shape != (self.d,):
            raise ValueError("shift must be a length-d vector")
        shift.setflags(write=False)
        object.__setattr__(self, "shift", shift)

    @property
    def sigma_bar(self) -> float:
        """Total spectral mass."""
        return self.spectral.total_mass

    def require_alpha_above_one(self, what: str) -> None:
        if self.alpha <= 1.0:
            raise ValueError(f"{what} requires alpha > 1 (got alpha={self.alpha})")


def _check_radius(R: float) -> float:
    R = float(R)
    if not R > 0.0:
        raise ValueError("truncation radius R must be positive")
    return R


def tail_mass(model: StableModel, R: float) -> float:
    """Levy mass beyond radius R: nu(||u|| > R) = sigma_bar / (alpha R^alpha).

    This is also the linear upper bound for P(Z_R != 0).
    """
    R = _check_radius(R)
    return model.sigma_bar / (model.alpha * R**model.alpha)


def tail_event_probability(model: StableModel, R: float) -> float:
    """Exact P(Z_R != 0) = 1 - exp(-tail_mass); Z_R is compound Poisson."""
    return -math.expm1(-tail_mass(model, R))


def truncated_norm_moment(model: StableModel, k: int, R: float) -> float:
    """k-th norm moment of nu on B(0,R): sigma_bar R^(k-alpha) / (k-alpha).

    Requires k > alpha for the integral to converge at 0.
    """
    R = _check_radius(R)
    if k <= model.alpha:
        raise ValueError(f"moment order k={k} must exceed alpha={model.alpha}")
    return model.sigma_bar * R ** (k - model.alpha) / (k - model.alpha)


def tail_norm_mean_bounds(model: StableModel, R: float) -> tuple[float, float]:
    """Sandwich for E||Z_R||, valid for alpha > 1.

    upper = sigma_bar / ((alpha-1) R^(alpha-1)); lower = upper * P-ish factor
    exp(-sigma_bar/(alpha R^alpha)).  lower <= E||Z_R|| <= upper.
    """
    model.require_alpha_above_one("tail_norm_mean_bounds")
    R = _check_radius(R)
    a, s = model.alpha, model.sigma_bar
    upper = s / ((a - 1.0) * R ** (a - 1.0))
    lower = upper * math.exp(-s / (a * R**a))
    return lower, upper
