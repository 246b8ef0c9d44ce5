"""Pointwise model mathematics for the two-good habit economy.

The planner splits one unit of labor between a habit-forming good
(share ``ell``) and a second good produced at productivity ``B``.
Habits ``h`` accumulate as ``h' = phi*(ell - h)`` and enter utility
through the ratio ``ell / h**gamma``:

    u(ell, h) = (ell / h**gamma)**(1-sigma) / (1-sigma)
    v(ell)    = Btilde * (1-ell)**(1-sigma) / (1-sigma),  Btilde = B**(1-sigma)

Controls and habit stocks are plain floats throughout (numpy arrays are
accepted wherever the formulas broadcast).  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError

#: Distinguished upper control bound for the one-good simplified problem
#: (an unbounded control set).  Only the closed-form/quadrature routines
#: accept it; the HJB and costate machinery require a bounded interval.
UNBOUNDED = math.inf


@dataclass(frozen=True)
class ModelParams:
    """Economy constants, validated on construction.

    The admissible region is sigma > 1, 0 < gamma < 1 and
    gamma*(sigma-1) > 1: utility is then negative, decreasing in habits,
    concave in each argument separately but never jointly concave.
    """

    sigma: float
    gamma: float
    rho: float
    phi: float
    B: float
    ell_lo: float
    ell_hi: float
    Btilde: float = field(init=False)

    def __post_init__(self):
        if not self.sigma > 1.0:
            raise ParameterError(f"sigma must exceed 1 (got {self.sigma})")
        if not 0.0 < self.gamma < 1.0:
            raise ParameterError(f"gamma must lie in (0, 1) (got {self.gamma})")
        if not self.gamma * (self.sigma - 1.0) > 1.0:
            raise ParameterError(
                "gamma*(sigma-1) must exceed 1, i.e. sigma > 1 + 1/gamma "
                f"(got gamma*(sigma-1) = {self.gamma * (self.sigma - 1.0)})"
            )
        if not self.rho > 0.0:
            raise ParameterError(f"rho must be positive (got {self.rho})")
        if not self.phi > 0.0:
            raise ParameterError(f"phi must be positive (got {self.phi})")
        if not self.B > 0.0:
            raise ParameterError(f"B must be positive (got {self.B})")
        if math.isinf(self.ell_hi):
            # Simplified model: good-2 utility unused, so ell_lo = 0 is legal
            # (it is required by the scaling property of the one-good value).
            if not self.ell_lo >= 0.0:
                raise ParameterError(f"ell_lo must be >= 0 (got {self.ell_lo})")
        else:
            if not self.ell_lo > 0.0:
                raise ParameterError(f"ell_lo must be positive (got {self.ell_lo})")
            if not self.ell_lo < self.ell_hi:
                raise ParameterError(
                    f"ell_lo must be below ell_hi (got {self.ell_lo} >= {self.ell_hi})"
                )
            if not self.ell_hi < 1.0:
                raise ParameterError(
                    "ell_hi must be below 1 while the good-2 term is active "
                    f"(got {self.ell_hi})"
                )
        object.__setattr__(self, "Btilde", self.B ** (1.0 - self.sigma))

    @property
    def is_bounded(self) -> bool:
        return not math.isinf(self.ell_hi)

    @property
    def habit_exponent(self) -> float:
        """gamma*(sigma-1), the power of h in the good-1 utility."""
        return self.gamma * (self.sigma - 1.0)


def _require_interior(ell, h):
    if np.any(np.asarray(ell) <= 0.0):
        raise DomainError(f"ell must be positive (got {ell})")
    if np.any(np.asarray(h) <= 0.0):
        raise DomainError(f"h must be positive (got {h})")


def utility_u(ell, h, p: ModelParams):
    """Good-1 utility ell**(1-sigma) * h**(gamma*(sigma-1)) / (1-sigma), < 0."""
    _require_interior(ell, h)
    return ell ** (1.0 - p.sigma) * h ** p.habit_exponent / (1.0 - p.sigma)


def utility_v(ell, p: ModelParams):
    """Good-2 utility Btilde*(1-ell)**(1-sigma)/(1-sigma); diverges at ell = 1."""
    if np.any(np.asarray(ell) >= 1.0):
        raise DomainError(f"ell must be below 1 for the good-2 term (got {ell})")
    return p.Btilde * (1.0 - ell) ** (1.0 - p.sigma) / (1.0 - p.sigma)


def utility_U(ell, h, p: ModelParams):
    """Total flow utility u + v."""
    return utility_u(ell, h, p) + utility_v(ell, p)


def du_dl(ell, h, p: ModelParams):
    """d u / d ell = ell**(-sigma) * h**(gamma*(sigma-1)) > 0."""
    _require_interior(ell, h)
    return ell ** (-p.sigma) * h ** p.habit_exponent


def du_dh(ell, h, p: ModelParams):
    """d u / d h = -gamma * ell**(1-sigma) * h**(gamma*(sigma-1)-1) < 0."""
    _require_interior(ell, h)
    return -p.gamma * ell ** (1.0 - p.sigma) * h ** (p.habit_exponent - 1.0)


def dv_dl(ell, p: ModelParams):
    """d v / d ell = -Btilde*(1-ell)**(-sigma) < 0."""
    if np.any(np.asarray(ell) >= 1.0):
        raise DomainError(f"ell must be below 1 for the good-2 term (got {ell})")
    return -p.Btilde * (1.0 - ell) ** (-p.sigma)


def hamiltonian(ell, h, p_costate, params: ModelParams):
    """Current-value Hamiltonian U(ell, h) + p_costate*phi*(ell - h)."""
    return utility_U(ell, h, params) + p_costate * params.phi * (ell - h)


def foc(ell, h, p_costate, params: ModelParams):
    """First-order condition du_dl + dv_dl + p_costate*phi (strictly decreasing in ell)."""
    return du_dl(ell, h, params) + dv_dl(ell, params) + p_costate * params.phi


def argmax_hamiltonian(
    h: float,
    p_costate: float,
    params: ModelParams,
    tol: float = 1e-12,
    max_iter: int = 100,
) -> float:
    """Unique maximizer of ell -> hamiltonian(ell, h, p_costate) on [ell_lo, ell_hi].

    The Hamiltonian is strictly concave in ell, so the first-order
    condition is strictly decreasing and the maximizer is either its
    unique root or the corner where the FOC sign is one-sided.  Uses
    safeguarded Newton with a bisection fallback; pure scalar math so it
    is cheap inside ODE right-hand sides.
    """
    if h <= 0.0:
        raise DomainError(f"h must be positive (got {h})")
    if not params.is_bounded:
        raise ParameterError("argmax_hamiltonian requires a bounded control interval")
    sigma = params.sigma
    btil = params.Btilde
    hk = h ** params.habit_exponent
    drift = p_costate * params.phi
    lo = params.ell_lo
    hi = params.ell_hi

    def f(x):
        return x ** -sigma * hk - btil * (1.0 - x) ** -sigma + drift

    if f(lo) <= 0.0:
        return lo
    if f(hi) >= 0.0:
        return hi

    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx = f(x)
        if fx == 0.0:
            return x
        if fx > 0.0:
            lo = x
        else:
            hi = x
        fpx = -sigma * (x ** (-sigma - 1.0) * hk + btil * (1.0 - x) ** (-sigma - 1.0))
        x_new = x - fx / fpx
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= tol or (hi - lo) <= tol:
            # one polishing step squares the remaining FOC residual
            fx = f(x_new)
            fpx = -sigma * (
                x_new ** (-sigma - 1.0) * hk + btil * (1.0 - x_new) ** (-sigma - 1.0)
            )
            x_pol = x_new - fx / fpx
            return x_pol if lo < x_pol < hi else x_new
        x = x_new
    raise ConvergenceError(
        f"argmax_hamiltonian did not converge in {max_iter} iterations "
        f"(h={h}, p={p_costate})"
    )


def argmax_hamiltonian_many(
    h: np.ndarray,
    p_costate: np.ndarray,
    params: ModelParams,
    lo=None,
    hi=None,
    tol: float = 1e-13,
    max_iter: int = 120,
) -> np.ndarray:
    """Vectorized argmax over per-node brackets [lo, hi] (defaults to the control box).

    Same safeguarded Newton/bisection as the scalar routine, run
    lockstep over all nodes; used by the grid solvers where thousands of
    maximizations happen per sweep.  ``lo``/``hi`` may be arrays to
    restrict the feasible set node by node (drift-sign branches).
    """
    if not params.is_bounded:
        raise ParameterError("argmax_hamiltonian_many requires a bounded control interval")
    h = np.asarray(h, dtype=float)
    if np.any(h <= 0.0):
        raise DomainError("h must be positive")
    sigma = params.sigma
    btil = params.Btilde
    hk = h ** params.habit_exponent
    drift = np.asarray(p_costate, dtype=float) * params.phi
    lo = np.broadcast_to(
        np.asarray(params.ell_lo if lo is None else lo, dtype=float), h.shape
    ).copy()
    hi = np.broadcast_to(
        np.asarray(params.ell_hi if hi is None else hi, dtype=float), h.shape
    ).copy()
    if np.any(lo > hi):
        raise DomainError("empty control bracket")

    def f(x):
        return x ** -sigma * hk - btil * (1.0 - x) ** -sigma + drift

    lo0, hi0 = lo.copy(), hi.copy()
    at_lo = f(lo) <= 0.0
    at_hi = f(hi) >= 0.0
    interior = ~(at_lo | at_hi)

    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx = f(x)
        lo = np.where(fx > 0.0, x, lo)
        hi = np.where(fx < 0.0, x, hi)
        fpx = -sigma * (x ** (-sigma - 1.0) * hk + btil * (1.0 - x) ** (-sigma - 1.0))
        x_new = x - fx / fpx
        outside = (x_new <= lo) | (x_new >= hi)
        x_new = np.where(outside, 0.5 * (lo + hi), x_new)
        done = (np.abs(x_new - x) <= tol) | (hi - lo <= tol)
        x = x_new
        if np.all(done | ~interior):
            break
    # polishing Newton step (squares the FOC residual on interior lanes)
    fx = f(x)
    fpx = -sigma * (x ** (-sigma - 1.0) * hk + btil * (1.0 - x) ** (-sigma - 1.0))
    x_pol = x - fx / fpx
    x = np.where((x_pol > lo) & (x_pol < hi), x_pol, x)
    return np.where(at_lo, lo0, np.where(at_hi, hi0, x))


def u_hessian_determinant(ell, h, p: ModelParams):
    """det of the (ell, h) Hessian of u; negative under the maintained parameters.

    Joint concavity of u would need sigma <= gamma/(1-gamma), which the
    admissible region excludes, so this determinant is a convenient
    non-concavity witness.
    """
    _require_interior(ell, h)
    k = p.habit_exponent
    u_ll = -p.sigma * ell ** (-p.sigma - 1.0) * h ** k
    u_hh = -p.gamma * (k - 1.0) * ell ** (1.0 - p.sigma) * h ** (k - 2.0)
    u_lh = k * ell ** (-p.sigma) * h ** (k - 1.0)
    return u_ll * u_hh - u_lh ** 2
