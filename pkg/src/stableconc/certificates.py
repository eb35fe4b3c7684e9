"""Bound certificates: a formula, its parameters, and its certified x-range.

A certificate never raises on out-of-range queries; it carries an
``in_range`` flag instead so range scans (the envelope, the verifier) can
interrogate many inapplicable certificates cheaply.  Certified intervals
are half-open ``(lo, hi]``; an interval with ``lo >= hi`` marks an
inapplicable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

REGIMES = (
    "truncated-lemma",
    "small-x",
    "small-x-parameter-free",
    "intermediate-v1",
    "intermediate-v2",
    "median-v1",
    "median-v2",
    "median-small-x",
    "gaussian-limit",
    "envelope",
)

EMPTY_RANGE = (0.0, 0.0)


@dataclass
class BoundCertificate:
    """A certified tail bound curve with provenance.

    regime:   one of REGIMES.
    params:   every number that produced the certificate (n, delta, eps,
              lambda, R, solver outputs, ...).
    valid_x:  half-open certified interval (lo, hi]; lo >= hi means
              inapplicable.
    curve:    the bound formula, clipped at 1 (a tail probability bound
              above 1 is vacuous but never wrong).
    x/bound/in_range: the queried point, its bound value, and whether the
              query fell inside valid_x.
    note:     human-readable caveat (empty range reason, non-explicit
              endpoint, ...).
    """

    regime: str
    params: dict
    valid_x: tuple[float, float]
    curve: Callable[[float], float] = field(repr=False)
    x: float | None = None
    bound: float | None = None
    in_range: bool = False
    note: str = ""

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.x is not None and self.bound is None:
            self.bound = self.evaluate(self.x)
            self.in_range = self.contains(self.x)

    @property
    def applicable(self) -> bool:
        lo, hi = self.valid_x
        return lo < hi

    def contains(self, x: float) -> bool:
        lo, hi = self.valid_x
        return lo < x <= hi

    def evaluate(self, x: float) -> float:
        return min(1.0, self.curve(x))

    def at(self, x: float) -> "BoundCertificate":
        """Copy of this certificate anchored at a new query point."""
        return BoundCertificate(
            regime=self.regime,
            params=dict(self.params),
            valid_x=self.valid_x,
            curve=self.curve,
            x=x,
            note=self.note,
        )
