"""The same pipeline at rank three: bigger tables, a new level.

Run:  python3 demos/general_rank.py
"""

from collections import Counter

from dispbound import (
    PsiTable,
    enumerate_relations,
    enumerate_shift_words,
    function_family,
    minmax_numeric,
    pn_coefficients,
    real_roots,
    solve_alpha,
)


def main() -> None:
    for n in (2, 3):
        table = PsiTable.build(n)
        shifts = enumerate_shift_words(n)
        relations = enumerate_relations(n)
        hist = dict(sorted(Counter(r.cancellation for r in relations).items(),
                           reverse=True))
        print(f"rank {n}: table {table.size}, shifts {len(shifts)}, "
              f"relations {len(relations)} {hist}")

    coeffs = pn_coefficients(3)
    print(f"\nrank 3 level polynomial: {coeffs}")
    print(f"real roots: {[round(r, 6) for r in real_roots(coeffs)]}")
    alpha = solve_alpha(3)
    print(f"level: {alpha:.10f}")

    family = function_family(3)
    res = minmax_numeric(family, iters=20000, starts=1, seed=0)
    print(f"descent over all {len(family)} functions: {res['value']:.10f}"
          f"  (gap {abs(res['value'] - alpha):.2e})")


if __name__ == "__main__":
    main()
