"""Solve the min-max problem two ways and certify the optimum.

Run:  python3 demos/minmax.py
"""

import numpy as np

from dispbound import (
    analytic_solve,
    criticality_check,
    dominant_specs,
    family_max,
    function_family,
    lift_symmetric,
    minmax_numeric,
    pn_coefficients,
    real_roots,
)


def main() -> None:
    coeffs = pn_coefficients(2)
    print(f"level polynomial coefficients: {coeffs}")
    print(f"real roots: {[round(r, 6) for r in real_roots(coeffs)]}")

    sol = analytic_solve(2)
    print(f"\nanalytic optimum: {sol.alpha:.10f}  (residual {sol.residual:.2e})")
    print(f"optimal point by class: "
          + ", ".join(f"{k}={v:.6f}" for k, v in sol.xstar_classes.items()))
    print(f"half log: {sol.half_log:.6f}   trace bound: {sol.bound:.6f}")

    family = function_family(2)
    dominant = dominant_specs(family)
    res = minmax_numeric(dominant, iters=20000, starts=1, seed=0)
    print(f"\ndescent from the barycenter: {res['value']:.10f}")
    print(f"gap to analytic value: {abs(res['value'] - sol.alpha):.2e}")

    xstar = lift_symmetric(2, sol.xstar_classes)
    bary = np.full(28, 1.0 / 28.0)
    for name, x in (("barycenter", bary), ("optimum", xstar)):
        value, label = family_max(family, x)
        crit = criticality_check(dominant, x)
        print(
            f"\nat the {name}: max = {value:.6f} ({label}), "
            f"critical = {crit['critical']}, "
            f"lp value = {crit['lp_value']:.4f}, "
            f"active = {len(crit['active_labels'])}"
        )


if __name__ == "__main__":
    main()
