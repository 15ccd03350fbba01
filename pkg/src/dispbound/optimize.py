"""Min-max solvers for the bound-function family.

Two independent routes to the optimum.  The analytic route exploits the
symmetry of the family: at the optimizer all coordinates of one word class
share a value, the dominant functions are all equal to a common level a,
and eliminating the class values against the simplex constraint closes to
a one-variable residual in a.  Bisecting that residual (and checking the
result against an explicit quartic-in-a polynomial) gives the level to
machine precision.  The numeric route runs entropic mirror descent on the
simplex against the pointwise maximum of the family, with a criticality
check at the end via linear programming.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .functions import (
    SIGMA_FLOOR,
    FunctionSpec,
    active_specs,
    family_arrays,
    family_values,
    profile_hessian,
    region_x_limit,
    sigma,
)
from .words import PsiTable, word_class


def poly_eval(coeffs: list[float], x: float) -> float:
    """Horner evaluation, coefficients in descending degree order."""
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_deriv(coeffs: list[float]) -> list[float]:
    d = len(coeffs) - 1
    return [c * (d - i) for i, c in enumerate(coeffs[:-1])]


def pn_coefficients(n: int) -> list[int]:
    """Quartic satisfied by the optimal level, descending degree order."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    return [
        8 * n**3 - 12 * n**2 + 2 * n + 1,
        -64 * n**6 + 192 * n**5 - 192 * n**4 + 64 * n**3 + 4 * n**2 + 2 * n - 4,
        -96 * n**5 + 224 * n**4 - 168 * n**3 + 52 * n**2 - 18 * n + 6,
        32 * n**5 - 112 * n**4 + 128 * n**3 - 68 * n**2 + 22 * n - 4,
        16 * n**4 - 32 * n**3 + 24 * n**2 - 8 * n + 1,
    ]


def cauchy_bound(coeffs: list[float]) -> float:
    lead = abs(coeffs[0])
    return 1.0 + max(abs(c) / lead for c in coeffs[1:])


def real_roots(coeffs: list[float], tol: float = 1e-12) -> list[float]:
    """All real roots of a polynomial, Newton-polished and deduplicated."""
    deriv = poly_deriv(coeffs)
    roots = []
    for z in np.roots(coeffs):
        if abs(z.imag) > 1e-8 * (1.0 + abs(z)):
            continue
        x = float(z.real)
        for _ in range(200):
            d = poly_eval(deriv, x)
            if d == 0.0:
                break
            step = poly_eval(coeffs, x) / d
            x -= step
            if abs(step) < tol * (1.0 + abs(x)):
                break
        roots.append(x)
    roots.sort()
    out: list[float] = []
    for r in roots:
        if not out or abs(r - out[-1]) > 1e-9 * (1.0 + abs(r)):
            out.append(r)
    return out


def analytic_classes(n: int, alpha: float) -> dict[str, float]:
    """Class values of the symmetric point at a given level.

    The square value and the three-letter head value come from the two
    dominant-function shapes directly; the remaining classes follow from
    the per-head block sum forced by the simplex constraint.
    """
    q = 2 * n - 1
    square = 1.0 / (1.0 + q * alpha)
    conj = q / (q + alpha)
    block = (1.0 / (2 * n) - square) / (2 * (n - 1))
    inner = 1.0 - block
    other = sigma(inner) / (sigma(inner) + alpha)
    out = {"conj": conj, "aba": other, "abb": other, "square": square}
    if n > 2:
        out["cross"] = other
    return out


def class_counts(n: int) -> dict[str, int]:
    out = {
        "conj": 4 * n * (n - 1),
        "aba": 4 * n * (n - 1),
        "abb": 4 * n * (n - 1),
        "square": 2 * n,
    }
    if n > 2:
        out["cross"] = 8 * n * (n - 1) * (n - 2)
    return out


def chain_residual(n: int, alpha: float) -> float:
    """Total simplex mass of the symmetric point minus one."""
    cls = analytic_classes(n, alpha)
    counts = class_counts(n)
    return sum(counts[c] * cls[c] for c in counts) - 1.0


def solve_alpha(n: int, tol: float = 1e-14) -> float:
    """Bisect the chain residual for the optimal level.

    The bracket starts just above (2n-1)^2, where the head-class mass
    alone already exceeds one, and ends at the Cauchy bound of the level
    polynomial, beyond which all mass has decayed below one.
    """
    lo = (2 * n - 1) ** 2 + 1e-9
    hi = cauchy_bound([float(c) for c in pn_coefficients(n)])
    flo = chain_residual(n, lo)
    fhi = chain_residual(n, hi)
    if not (flo > 0.0 > fhi):
        raise ValueError("bisection bracket does not straddle the root")
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if chain_residual(n, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lift_symmetric(n: int, classes: dict[str, float]) -> np.ndarray:
    """Expand per-class values to a full simplex point in table order."""
    table = PsiTable.build(n)
    return np.array([classes[word_class(w)] for w in table.words])


@dataclass(frozen=True)
class SolveResult:
    n: int
    alpha: float
    poly: tuple[int, ...]
    xstar_classes: dict[str, float]
    half_log: float
    bound: float
    residual: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "poly": list(self.poly),
            "xstar_classes": dict(self.xstar_classes),
            "half_log": self.half_log,
            "bound": self.bound,
            "residual": self.residual,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


def analytic_solve(n: int) -> SolveResult:
    alpha = solve_alpha(n)
    coeffs = pn_coefficients(n)
    residual = abs(
        poly_eval([float(c) for c in coeffs], alpha)
        / poly_eval([float(c) for c in poly_deriv(coeffs)], alpha)
    )
    return SolveResult(
        n=n,
        alpha=alpha,
        poly=tuple(coeffs),
        xstar_classes=analytic_classes(n, alpha),
        half_log=0.5 * math.log(alpha),
        bound=2.0 * math.sinh(0.25 * math.log(alpha)) ** 2,
        residual=residual,
    )


# ---------------------------------------------------------------------------
# numeric route: entropic mirror descent on the simplex


def _value_and_subgrad(
    A: np.ndarray, k: np.ndarray, x: np.ndarray, tie_tol: float
) -> tuple[float, np.ndarray]:
    """Max of the family and the averaged gradient of its active specs."""
    s = np.maximum(A @ x, SIGMA_FLOOR)
    xk = np.maximum(x[k], SIGMA_FLOOR)
    sig_s = 1.0 / s - 1.0
    sig_k = 1.0 / xk - 1.0
    vals = sig_s * sig_k
    vmax = float(vals.max())
    act = vals >= vmax - tie_tol * (1.0 + abs(vmax))
    w = sig_k[act] / s[act] ** 2
    g = -(w @ A[act])
    np.add.at(g, k[act], -sig_s[act] / xk[act] ** 2)
    g /= int(act.sum())
    return vmax, g


def _descend(
    A: np.ndarray,
    k: np.ndarray,
    x0: np.ndarray,
    iters: int,
    c0: float,
    rounds: int,
    floor: float,
    tie_tol: float,
) -> tuple[np.ndarray, float]:
    """Mirror descent with geometric step decay and best-point restarts.

    Each round restarts from the best point seen so far and halves the
    step scale; within a round the step is c / sqrt(t) normalized by the
    sup norm of the subgradient.
    """
    best_x = x0.copy()
    best_v, _ = _value_and_subgrad(A, k, x0, tie_tol)
    per_round = max(1, iters // rounds)
    c = c0
    for _ in range(rounds):
        x = best_x.copy()
        for t in range(1, per_round + 1):
            v, g = _value_and_subgrad(A, k, x, tie_tol)
            if v < best_v:
                best_v = v
                best_x = x.copy()
            step = c / (math.sqrt(t) * max(1.0, float(np.abs(g).max())))
            x = x * np.exp(-step * g)
            x = np.maximum(x, floor)
            x /= x.sum()
        c *= 0.5
    v, _ = _value_and_subgrad(A, k, best_x, tie_tol)
    if v < best_v:
        best_v = v
    return best_x, best_v


def minmax_numeric(
    specs: list[FunctionSpec],
    iters: int = 200000,
    starts: int = 10,
    seed: int = 0,
    c0: float = 1.0,
    rounds: int = 20,
    floor: float = 1e-12,
    tie_tol: float = 1e-9,
) -> dict:
    """Minimize the family maximum over the simplex, multi-start.

    The first start is the barycenter; the rest are log-normal
    perturbations of it.  The iteration budget is split evenly across
    starts.  Deterministic for fixed arguments.
    """
    A, k = family_arrays(specs)
    m = A.shape[1]
    rng = np.random.default_rng(seed)
    per_start = max(1, iters // max(1, starts))
    best_x = None
    best_v = math.inf
    per_start_values = []
    for s in range(starts):
        if s == 0:
            x0 = np.full(m, 1.0 / m)
        else:
            x0 = np.exp(0.3 * rng.standard_normal(m))
            x0 /= x0.sum()
        x, v = _descend(A, k, x0, per_start, c0, rounds, floor, tie_tol)
        per_start_values.append(v)
        if v < best_v:
            best_v = v
            best_x = x
    return {
        "x": best_x,
        "value": best_v,
        "per_start": per_start_values,
        "iters": iters,
        "starts": starts,
        "seed": seed,
    }


def criticality_check(
    specs: list[FunctionSpec],
    x: np.ndarray,
    eps: float = 1e-6,
    tie_tol: float = 1e-9,
) -> dict:
    """Linear program for a common descent direction of the active specs.

    Minimizes t subject to grad_i . v <= t over directions v in the
    tangent cone of the simplex with box bounds.  A nonnegative optimum
    (up to eps) certifies first-order criticality; a negative one returns
    the violating direction.
    """
    from scipy.optimize import linprog

    act = active_specs(specs, x, tol=tie_tol)
    m = specs[0].m
    grads = [sp.gradient(x) for sp in act]
    c = np.zeros(m + 1)
    c[-1] = 1.0
    A_ub = np.array([np.append(g, -1.0) for g in grads])
    b_ub = np.zeros(len(grads))
    A_eq = np.append(np.ones(m), 0.0).reshape(1, -1)
    b_eq = np.array([0.0])
    bounds = [(-1.0, 1.0)] * m + [(None, None)]
    res = linprog(
        c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=bounds,
        method="highs",
    )
    if not res.success:
        raise RuntimeError(f"criticality LP failed: {res.message}")
    lp_value = float(res.x[-1])
    return {
        "critical": lp_value >= -eps,
        "lp_value": lp_value,
        "active_labels": [sp.label for sp in act],
        "direction": res.x[:-1],
    }


def family_minmax_gap(specs: list[FunctionSpec], x: np.ndarray, alpha: float) -> float:
    return float(family_values(specs, x).max()) - alpha


# ---------------------------------------------------------------------------
# convexity certificate for the two-variable profile


def level_curve_u(alpha: float, v: float) -> float:
    """u with sigma(u + v) sigma(v) = alpha, as a function of v."""
    return 1.0 / (1.0 + alpha / sigma(v)) - v


def convexity_certificate(
    alpha: float | None = None,
    samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
) -> dict:
    """Numeric certificate that the level-curve analysis is sound.

    Checks three things: the profile Hessian is positive semidefinite on a
    sample of the claimed region; the level curve of the optimal value
    stays inside the region between its closed-form entry ordinate (where
    it crosses the region boundary) and exit ordinate (where u reaches
    zero); and the symmetric optimizer projects into the region.
    """
    if alpha is None:
        alpha = solve_alpha(2)
    rng = np.random.default_rng(seed)

    y_low = (1.0 + 3.0 * alpha - math.sqrt(1.0 - 10.0 * alpha + 9.0 * alpha**2)) / (
        8.0 * alpha
    )
    y_high = 1.0 / (1.0 + math.sqrt(alpha))
    u_low = level_curve_u(alpha, y_low)
    region_gap_low = u_low + 2 * y_low - u_low * y_low - y_low**2 - 0.75
    u_high = level_curve_u(alpha, y_high)

    inside = True
    for v in rng.uniform(y_low, y_high, size=samples):
        u = level_curve_u(alpha, float(v))
        gap = u + 2 * v - u * v - v * v - 0.75
        if u < -1e-12 or gap > 1e-12:
            inside = False
            break

    min_eig = math.inf
    count = 0
    while count < samples:
        v = float(rng.uniform(1e-3, 0.45))
        u_cap = min(region_x_limit(v), 1.0 - v - 1e-3)
        if u_cap <= 1e-3:
            continue
        u = float(rng.uniform(1e-3, u_cap))
        h = profile_hessian(u, v)
        scale = 1.0 + float(np.abs(h).max())
        min_eig = min(min_eig, float(np.linalg.eigvalsh(h)[0]) / scale)
        count += 1

    classes = analytic_classes(2, alpha)
    v_sym = classes["conj"]
    u_sym = 0.25 - v_sym
    sym_gap = u_sym + 2 * v_sym - u_sym * v_sym - v_sym**2 - 0.75

    return {
        "alpha": alpha,
        "y_low": y_low,
        "y_high": y_high,
        "boundary_residual_low": region_gap_low,
        "u_residual_high": u_high,
        "level_curve_inside": inside,
        "hessian_min_eig": min_eig,
        "hessian_samples": count,
        "sym_point": (u_sym, v_sym),
        "sym_region_gap": sym_gap,
        "sym_inside": sym_gap < 0.0,
    }
