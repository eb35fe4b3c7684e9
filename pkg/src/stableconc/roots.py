"""Bracketed solvers for the implicit constants of the bound pipeline.

Every quantity solved here has an analytic bracket, so bisection-style
(Brent) iteration converges unconditionally; unbracketed Newton is never
used.  Each solver re-substitutes its result and enforces a residual
tolerance.

Residual convention: for the exponential balance equations
(``exp(u) - 1 - c*u = 0`` and ``exp(u) - A*u = 0``) the residual is checked
in the scale-free form ``(exp(u)-1)/(c*u) - 1`` (resp. ``exp(u)/(A*u) - 1``).
The raw difference is below the float64 rounding floor of ``exp(u)`` once
``c*u`` is large (for example c ~ 500 makes the raw residual unmeasurable
beyond ~1e-11), while the normalized form stays resolvable to ~1e-15 for
the whole parameter domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import NonConvergenceError, NoPositiveRootError

__all__ = [
    "RootConfig",
    "UStarResult",
    "solve_un",
    "un_residual",
    "u_k_candidate",
    "solve_u_star",
    "solve_h_roots",
    "h_root_residual",
    "solve_delta0",
    "delta0_residual",
    "theta",
    "theta_inverse",
    "theta_domain_edge",
    "solve_u0_lambda",
    "u0_lambda_coefficient",
    "u0_lambda_residual",
    "u0_lambda_lower_bound",
]


@dataclass(frozen=True)
class RootConfig:
    """Solver tolerances: residual bound and iteration budget."""

    abs_tol: float = 1e-13
    max_iter: int = 200

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise ValueError("abs_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


_DEFAULT = RootConfig()


def _brent(f, lo: float, hi: float, config: RootConfig) -> float:
    try:
        return brentq(
            f, lo, hi, xtol=1e-300, rtol=4 * math.ulp(1.0), maxiter=config.max_iter
        )
    except (RuntimeError, ValueError) as exc:
        raise NonConvergenceError(f"bracketed solve failed on [{lo}, {hi}]: {exc}")


def _exp_coefficient(n: int, alpha: float, delta: float) -> float:
    if n < 2:
        raise ValueError("n must be >= 2")
    if not (0.0 < alpha < 2.0):
        raise ValueError("alpha must lie in (0, 2)")
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    return delta * (n - 1) / (2.0 - alpha)


def un_residual(u: float, n: int, alpha: float, delta: float = 1.0) -> float:
    """Scale-free residual of exp(u) - 1 - c*u = 0 at u."""
    c = _exp_coefficient(n, alpha, delta)
    return math.expm1(u) / (c * u) - 1.0


def solve_un(
    n: int, alpha: float, delta: float = 1.0, config: RootConfig = _DEFAULT
) -> float:
    """Unique positive root of exp(u) - 1 - (delta(n-1)/(2-alpha)) u = 0.

    Exists iff the slope c = delta(n-1)/(2-alpha) exceeds 1; the root then
    lies strictly between log(c) and 2 log(c), which is the bracket used.
    """
    c = _exp_coefficient(n, alpha, delta)
    if c <= 1.0:
        raise NoPositiveRootError(
            f"delta(n-1)/(2-alpha) = {c} <= 1: no positive root"
        )
    f = lambda u: math.expm1(u) / (c * u) - 1.0
    root = _brent(f, math.log(c), 2.0 * math.log(c), config)
    if abs(f(root)) > config.abs_tol:
        raise NonConvergenceError(f"u_n residual {f(root)} above {config.abs_tol}")
    return root


def u_k_candidate(k: int, n: int, alpha: float, delta: float = 1.0) -> float:
    """Taylor-term crossover candidate for index k (proof form, factor delta(n-1)):

    u_k = (k! * delta(n-1)(k+1-alpha) / ((n-k)(2-alpha)))^(1/(k-1)).
    """
    if not (1 < k < (n - 1 + alpha) / 2.0):
        raise ValueError("k outside the admissible Taylor range")
    num = math.factorial(k) * delta * (n - 1) * (k + 1 - alpha)
    den = (n - k) * (2.0 - alpha)
    return (num / den) ** (1.0 / (k - 1))


@dataclass(frozen=True)
class UStarResult:
    """Breakdown of the u* minimization: the winner and all candidates."""

    u_star: float
    argmin_k: int | str  # Taylor index, or "exponential-root" when u_n wins
    u_n: float
    k_candidates: tuple[tuple[int, float], ...]


def solve_u_star(
    n: int, alpha: float, delta: float = 1.0, config: RootConfig = _DEFAULT
) -> UStarResult:
    """u* = min over Taylor candidates u_k, wedged with the exponential root u_n.

    The integer range 1 < k < (n-1+alpha)/2 is empty for n <= 3, in which
    case u* = u_n.
    """
    u_n = solve_un(n, alpha, delta, config)
    k_max = math.floor((n - 1 + alpha) / 2.0)
    if (n - 1 + alpha) / 2.0 == k_max:
        k_max -= 1
    candidates = tuple(
        (k, u_k_candidate(k, n, alpha, delta)) for k in range(2, k_max + 1)
    )
    u_star = u_n
    argmin: int | str = "exponential-root"
    for k, val in candidates:
        if val < u_star:
            u_star, argmin = val, k
    return UStarResult(u_star, argmin, u_n, candidates)


def h_root_residual(u: float, n_delta: float, alpha: float, eps: float) -> float:
    """Scale-free residual of exp(u) - A*u = 0, A = 2 n_delta alpha eps/(2-alpha)."""
    A = 2.0 * n_delta * alpha * eps / (2.0 - alpha)
    return math.exp(u) / (A * u) - 1.0


def solve_h_roots(
    n_delta: float, alpha: float, eps: float, config: RootConfig = _DEFAULT
) -> tuple[float, float]:
    """Both positive roots u1 < u2 of exp(u) = A u, A = 2 n_delta alpha eps/(2-alpha).

    Two distinct roots exist iff A > e, i.e. eps > (2-alpha) e / (2 alpha
    n_delta); A = e is the tangency (double root at u=1) and is rejected.
    The minimum of exp(u) - A u sits at u0 = log(A), and u1 < u0 < u2.
    """
    if n_delta < 1.0:
        raise ValueError("n_delta must be >= 1")
    if not (0.0 < alpha < 2.0):
        raise ValueError("alpha must lie in (0, 2)")
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    A = 2.0 * n_delta * alpha * eps / (2.0 - alpha)
    if A <= math.e:
        raise NoPositiveRootError(
            f"2 n_delta alpha eps/(2-alpha) = {A} <= e: no two positive roots "
            "(eps at or below its threshold)"
        )
    u0 = math.log(A)
    f = lambda u: math.exp(u) / (A * u) - 1.0 if u > 0 else 1.0
    u1 = _brent(f, 1e-300, u0, config)
    hi = 2.0 * u0 + 5.0
    while math.exp(hi) / (A * hi) < 1.0:
        hi *= 2.0
    u2 = _brent(f, u0, hi, config)
    for r in (u1, u2):
        if abs(f(r)) > config.abs_tol:
            raise NonConvergenceError(f"h-root residual {f(r)} above {config.abs_tol}")
    return u1, u2


def delta0_residual(delta: float, n: int, alpha: float) -> float:
    """Residual of delta*log(1/(1/2-delta)) = (2-alpha)/(2 n alpha)."""
    target = (2.0 - alpha) / (2.0 * n * alpha)
    return delta * math.log(1.0 / (0.5 - delta)) - target


def solve_delta0(n: int, alpha: float, config: RootConfig = _DEFAULT) -> float:
    """Unique root in (0, 1/2) of delta*log(1/(1/2-delta)) = (2-alpha)/(2 n alpha).

    The left side increases from 0 to infinity on (0, 1/2), so the root is
    bracketed by expanding toward 1/2.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not (0.0 < alpha < 2.0):
        raise ValueError("alpha must lie in (0, 2)")
    f = lambda d: delta0_residual(d, n, alpha)
    hi = 0.5 - 1e-8
    while f(hi) < 0.0:
        hi = 0.5 - (0.5 - hi) * 1e-4
        if hi >= 0.5 - 1e-300:
            raise NonConvergenceError("delta0 bracket collapsed at 1/2")
    root = _brent(f, 1e-300, hi, config)
    if abs(f(root)) > config.abs_tol:
        raise NonConvergenceError(f"delta0 residual {f(root)} above {config.abs_tol}")
    return root


def theta_domain_edge(alpha: float, sigma_bar: float) -> float:
    """Left edge of theta's range: theta(sigma_bar) = alpha sigma_bar^(1/alpha)/(alpha-1)."""
    return alpha * sigma_bar ** (1.0 / alpha) / (alpha - 1.0)


def theta(u: float, alpha: float, sigma_bar: float) -> float:
    """Increasing bijection u -> u^(1/alpha) (1 + sigma_bar/((alpha-1) u)).

    Maps [sigma_bar, inf) onto [alpha sigma_bar^(1/alpha)/(alpha-1), inf);
    it converts truncation levels R^alpha into deviation levels x.
    Requires alpha > 1.
    """
    if alpha <= 1.0:
        raise ValueError("theta requires alpha > 1")
    if u < sigma_bar * (1.0 - 1e-12):
        raise ValueError(f"theta argument {u} below domain edge {sigma_bar}")
    return u ** (1.0 / alpha) * (1.0 + sigma_bar / ((alpha - 1.0) * u))


def theta_inverse(
    x: float, alpha: float, sigma_bar: float, config: RootConfig = _DEFAULT
) -> float:
    """Inverse of theta on its bijection domain, by bracketed solve."""
    if alpha <= 1.0:
        raise ValueError("theta requires alpha > 1")
    edge = theta_domain_edge(alpha, sigma_bar)
    if x < edge * (1.0 - 1e-12):
        raise ValueError(f"theta_inverse argument {x} below range edge {edge}")
    if x <= edge:
        return sigma_bar
    hi = max(2.0 * sigma_bar, x**alpha)
    while theta(hi, alpha, sigma_bar) < x:
        hi *= 2.0
    return _brent(lambda u: theta(u, alpha, sigma_bar) - x, sigma_bar, hi, config)


def u0_lambda_coefficient(n: int, alpha: float, lam: float, sigma_bar: float) -> float:
    """Exponential rate c1 = (2-alpha)(lambda - sigma_bar/(alpha-1))^2 / (2 n sigma_bar^(1/(alpha-1)))."""
    if alpha <= 1.0:
        raise ValueError("requires alpha > 1")
    t = lam - sigma_bar / (alpha - 1.0)
    return (2.0 - alpha) * t * t / (2.0 * n * sigma_bar ** (1.0 / (alpha - 1.0)))


def u0_lambda_residual(
    u: float, n: int, alpha: float, lam: float, sigma_bar: float
) -> float:
    """Residual of exp(-c1 u) + (sigma_bar/alpha) u = 1."""
    c1 = u0_lambda_coefficient(n, alpha, lam, sigma_bar)
    return math.exp(-c1 * u) + (sigma_bar / alpha) * u - 1.0


def u0_lambda_lower_bound(n: int, alpha: float, lam: float, sigma_bar: float) -> float:
    """Closed-form lower bound (1/c1) log(alpha c1 / sigma_bar) for the u0 root."""
    c1 = u0_lambda_coefficient(n, alpha, lam, sigma_bar)
    arg = alpha * c1 / sigma_bar
    if arg <= 1.0:
        raise NoPositiveRootError("alpha c1 / sigma_bar <= 1: bound undefined")
    return math.log(arg) / c1


def solve_u0_lambda(
    n: int,
    alpha: float,
    lam: float,
    sigma_bar: float,
    config: RootConfig = _DEFAULT,
) -> float:
    """Unique positive root of exp(-c1 u) + (sigma_bar/alpha) u = 1.

    Exists iff c1 > sigma_bar/alpha (the function dips below 1 before the
    linear part recovers).  Bracketed between the stationary point
    log(alpha c1/sigma_bar)/c1 and alpha/sigma_bar, where the function is
    provably negative resp. positive.
    """
    c1 = u0_lambda_coefficient(n, alpha, lam, sigma_bar)
    ratio = sigma_bar / alpha
    if c1 <= ratio:
        raise NoPositiveRootError(f"c1 = {c1} <= sigma_bar/alpha = {ratio}: no root")
    f = lambda u: math.exp(-c1 * u) + ratio * u - 1.0
    u_min = math.log(c1 / ratio) / c1
    root = _brent(f, u_min, alpha / sigma_bar, config)
    if abs(f(root)) > config.abs_tol:
        raise NonConvergenceError(f"u0 residual {f(root)} above {config.abs_tol}")
    return root
