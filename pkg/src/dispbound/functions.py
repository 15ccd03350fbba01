"""Displacement bound functions on the probability simplex.

Every tiling relation compiles to a spec: a numerator index set A (the
outside cylinders) and a denominator index k (the position of the tiled
word), read against the head table of the same rank.  The spec's value at
a simplex point x is

    sigma(sum of x over A) * sigma(x_k),     sigma(t) = 1/t - 1,

a lower bound construction for displacements; smaller numerator sets give
pointwise larger functions.  This module compiles relations to specs,
assembles the labeled rank-2 family of sixty, picks the dominant spec per
denominator, and exposes the symmetries that permute the family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .relations import (
    Relation,
    derive_relation,
    enumerate_relations,
    is_swap_candidate,
    sibling_relation,
)
from .words import (
    Letter,
    PsiTable,
    Word,
    inverse_letter,
    reduce_word,
    word_class,
    word_to_str,
)

SIGMA_FLOOR = 1e-15


def sigma(t: float) -> float:
    """1/t - 1 with the argument floored at SIGMA_FLOOR."""
    return 1.0 / max(t, SIGMA_FLOOR) - 1.0


@dataclass(frozen=True)
class FunctionSpec:
    """One compiled bound function: label, numerator set, denominator index."""

    label: str
    denom: int
    numer: tuple[int, ...]
    n: int
    m: int
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def numer_sum(self, x: np.ndarray) -> float:
        return float(sum(x[i - 1] for i in self.numer))

    def value(self, x: np.ndarray) -> float:
        return sigma(self.numer_sum(x)) * sigma(float(x[self.denom - 1]))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        s = max(self.numer_sum(x), SIGMA_FLOOR)
        xk = max(float(x[self.denom - 1]), SIGMA_FLOOR)
        g = np.zeros(self.m)
        for i in self.numer:
            g[i - 1] = -sigma(xk) / s**2
        g[self.denom - 1] += -sigma(s) / xk**2
        return g

    def to_dict(self) -> dict:
        return {"label": self.label, "denom": self.denom, "numer": list(self.numer)}


def compile_spec(
    rel: Relation, table: PsiTable, label: str = "", meta: dict | None = None
) -> FunctionSpec:
    """Numerator = outside cylinder indices, denominator = index of s."""
    return FunctionSpec(
        label=label,
        denom=table.index(rel.s),
        numer=tuple(sorted(rel.all_out)),
        n=rel.n,
        m=table.size,
        meta=meta or {},
    )


def dominant_numerator(numers: list[frozenset[int]]) -> frozenset[int]:
    """The winning numerator among competitors at one denominator.

    A unique inclusion-minimal set contained in every competitor wins
    outright.  Failing that, a unique minimal of smallest cardinality wins.
    Anything else is ambiguous and raises.
    """
    unique = list(dict.fromkeys(numers))
    minimal = [
        a for a in unique if not any(b < a for b in unique if b != a)
    ]
    if len(minimal) == 1 and all(minimal[0] <= b for b in unique):
        return minimal[0]
    smallest = min(len(a) for a in minimal)
    small = [a for a in minimal if len(a) == smallest]
    if len(small) == 1:
        return small[0]
    raise ValueError(
        "ambiguous dominance: incomparable minimal numerators of equal size"
    )


def dominant_specs(specs: list[FunctionSpec]) -> list[FunctionSpec]:
    """One spec per denominator, chosen by dominant_numerator."""
    by_denom: dict[int, list[FunctionSpec]] = {}
    for sp in specs:
        by_denom.setdefault(sp.denom, []).append(sp)
    out: list[FunctionSpec] = []
    for denom in sorted(by_denom):
        group = by_denom[denom]
        winner = dominant_numerator([frozenset(sp.numer) for sp in group])
        chosen = sorted(
            (sp for sp in group if frozenset(sp.numer) == winner),
            key=lambda sp: sp.label,
        )[0]
        out.append(chosen)
    return out


def _published_label(
    spec: FunctionSpec,
    winner: frozenset[int],
    denom_class: str,
    swapped: bool,
    gamma: Word,
) -> str:
    if frozenset(spec.numer) == winner:
        return f"f{spec.denom}"
    if swapped:
        return f"h{spec.denom}"
    if denom_class == "square":
        middle = gamma[1]
        return f"h{spec.denom}" if middle[1] < 0 else f"u{spec.denom}"
    return f"g{spec.denom}"


def function_family(n: int) -> list[FunctionSpec]:
    """The labeled family of bound functions for one rank.

    Built from the shift-set relations with one adjustment: each relation
    whose pair is a letter conjugate against an aba-shaped word (collapsing
    to a square) is replaced by its transported sibling, which is what the
    rank-2 reference family tabulates.  Rank 2 carries the f/g/h/u labels:
    f marks the dominant spec per denominator, the transported rows are h,
    the remaining square-denominator rows split h/u by the sign of the
    middle letter of the source conjugate, and the rest are g.  Higher
    ranks label by cancellation count and denominator.
    """
    table = PsiTable.build(n)
    compiled: list[tuple[Relation, bool]] = []
    for rel in enumerate_relations(n):
        if is_swap_candidate(rel):
            compiled.append((sibling_relation(rel, table), True))
        else:
            compiled.append((rel, False))

    raw = [
        compile_spec(
            rel,
            table,
            meta={
                "gamma": word_to_str(rel.gamma),
                "cancellation": rel.cancellation,
                "swapped": swapped,
            },
        )
        for rel, swapped in compiled
    ]

    by_denom: dict[int, list[int]] = {}
    for idx, sp in enumerate(raw):
        by_denom.setdefault(sp.denom, []).append(idx)

    classes = table.classes()
    labeled: list[FunctionSpec | None] = [None] * len(raw)
    for denom, idxs in by_denom.items():
        if n == 2:
            winner = dominant_numerator([frozenset(raw[i].numer) for i in idxs])
        seen: dict[str, int] = {}
        for i in idxs:
            rel, swapped = compiled[i]
            if n == 2:
                label = _published_label(
                    raw[i], winner, classes[denom], swapped, rel.gamma
                )
            else:
                label = f"c{rel.cancellation}_{denom}"
                count = seen.get(label, 0)
                seen[label] = count + 1
                if count:
                    label = f"{label}_{count + 1}"
            labeled[i] = FunctionSpec(
                label=label,
                denom=raw[i].denom,
                numer=raw[i].numer,
                n=n,
                m=raw[i].m,
                meta=raw[i].meta,
            )
    return [sp for sp in labeled if sp is not None]


def family_arrays(specs: list[FunctionSpec]) -> tuple[np.ndarray, np.ndarray]:
    """Indicator matrix of numerators and the 0-based denominator vector."""
    m = specs[0].m
    A = np.zeros((len(specs), m))
    k = np.zeros(len(specs), dtype=int)
    for r, sp in enumerate(specs):
        for i in sp.numer:
            A[r, i - 1] = 1.0
        k[r] = sp.denom - 1
    return A, k


def family_values(specs: list[FunctionSpec], x: np.ndarray) -> np.ndarray:
    A, k = family_arrays(specs)
    xs = np.maximum(x, SIGMA_FLOOR)
    return (1.0 / np.maximum(A @ xs, SIGMA_FLOOR) - 1.0) * (1.0 / xs[k] - 1.0)


def family_max(specs: list[FunctionSpec], x: np.ndarray) -> tuple[float, str]:
    vals = family_values(specs, x)
    r = int(np.argmax(vals))
    return float(vals[r]), specs[r].label


def active_specs(
    specs: list[FunctionSpec], x: np.ndarray, tol: float = 1e-9
) -> list[FunctionSpec]:
    """Specs within a relative band of the maximum value at x."""
    vals = family_values(specs, x)
    vmax = float(vals.max())
    band = tol * (1.0 + abs(vmax))
    return [sp for sp, v in zip(specs, vals) if v >= vmax - band]


def specs_to_json(specs: list[FunctionSpec], indent: int | None = 2) -> str:
    return json.dumps([sp.to_dict() for sp in specs], indent=indent, sort_keys=True)


# ---------------------------------------------------------------------------
# symmetries


def symmetry_letter_maps(n: int) -> list[dict[Letter, Letter]]:
    """Letter substitutions preserving the head table as a set.

    Rank 2 returns the three reference substitutions: negate x2, negate x1,
    and the cross map x1 -> x2', x2 -> x1'.  Higher ranks return the n sign
    flips and the n-1 adjacent generator swaps.
    """

    def close(partial: dict[Letter, Letter]) -> dict[Letter, Letter]:
        full = dict(partial)
        for a, img in partial.items():
            full[inverse_letter(a)] = inverse_letter(img)
        return full

    if n == 2:
        return [
            close({(1, 1): (1, 1), (2, 1): (2, -1)}),
            close({(1, 1): (1, -1), (2, 1): (2, 1)}),
            close({(1, 1): (2, -1), (2, 1): (1, -1)}),
        ]
    maps: list[dict[Letter, Letter]] = []
    for g in range(1, n + 1):
        maps.append(
            close(
                {
                    (h, 1): ((h, -1) if h == g else (h, 1))
                    for h in range(1, n + 1)
                }
            )
        )
    for g in range(1, n):
        swap = {g: g + 1, g + 1: g}
        maps.append(
            close({(h, 1): (swap.get(h, h), 1) for h in range(1, n + 1)})
        )
    return maps


def apply_letter_map(mapping: dict[Letter, Letter], w: Word) -> Word:
    return reduce_word(tuple(mapping[a] for a in w))


def word_permutation(
    mapping: dict[Letter, Letter], table: PsiTable
) -> tuple[int, ...]:
    """1-based permutation of head-table indices induced by a letter map."""
    return tuple(
        table.index(apply_letter_map(mapping, w)) for w in table.words
    )


def symmetry_permutations(n: int) -> list[tuple[int, ...]]:
    table = PsiTable.build(n)
    return [word_permutation(m, table) for m in symmetry_letter_maps(n)]


def permute_point(perm: tuple[int, ...], x: np.ndarray) -> np.ndarray:
    """Push a simplex point forward: coordinate i moves to position perm[i]."""
    y = np.empty_like(x)
    for i, img in enumerate(perm):
        y[img - 1] = x[i]
    return y


def transport_spec(perm: tuple[int, ...], spec: FunctionSpec) -> FunctionSpec:
    return FunctionSpec(
        label=spec.label,
        denom=perm[spec.denom - 1],
        numer=tuple(sorted(perm[i - 1] for i in spec.numer)),
        n=spec.n,
        m=spec.m,
    )


# ---------------------------------------------------------------------------
# convexity region of the two-variable profile sigma(u + v) sigma(v)


def convexity_region(u: float, v: float) -> bool:
    """Where the profile's Hessian in (u, v) is positive semidefinite.

    The determinant condition reduces to (1 - u - v)(1 - v) >= 1/4, which
    rearranges to the quadratic below.
    """
    return 0.0 < v and 0.0 < u and u + v < 1.0 and u + 2 * v - u * v - v * v < 0.75


def region_x_limit(v: float) -> float:
    """Largest u keeping (u, v) inside the region boundary."""
    return (3.0 - 8.0 * v + 4.0 * v * v) / (4.0 * (1.0 - v))


def profile_hessian(u: float, v: float) -> np.ndarray:
    s = u + v
    sig_v = sigma(v)
    sig_s = sigma(s)
    f_uu = 2.0 * sig_v / s**3
    f_uv = f_uu + 1.0 / (s * v) ** 2
    f_vv = f_uu + 2.0 / (s * v) ** 2 + 2.0 * sig_s / v**3
    return np.array([[f_uu, f_uv], [f_uv, f_vv]])
