"""Cylinder tilings: how a shifted prefix cylinder decomposes.

For a shift word gamma and a head-table word s, the shifted cylinder
``gamma . J_s`` (J_s is the set of reduced words with prefix s) may tile
against the head table: every head cylinder J_phi lies entirely inside or
entirely outside it, and whatever the cylinders miss is a handful of words
of length at most one.  When that happens the complement of ``gamma . J_s``
within the reduced words, excluding the two-letter mixed-generator words,
is exactly

    (union of J_phi over the outside set S)  +  residue.

``derive_relation`` detects this, ``enumerate_relations`` runs it over the
whole shift set, and ``validate_relation`` brute-checks the partition on
every short word.  Pairs that multiply without cancellation are excluded
even when they tile; the shifted cylinder then is itself a head cylinder
and the decomposition carries no information about the pair.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .words import (
    PsiTable,
    Word,
    bad_pairs,
    cylinder_words,
    has_prefix,
    invert,
    multiply,
    reduce_word,
    short_words,
    word_class,
    word_from_str,
    word_to_str,
)


def in_shifted_cylinder(gamma: Word, s: Word, w: Word) -> bool:
    """Is w a member of gamma . J_s?"""
    return has_prefix(multiply(invert(gamma), w), s)


def classify_cylinder(gamma: Word, s: Word, phi: Word, n: int) -> str:
    """Position of the cylinder J_phi relative to gamma . J_s.

    Returns "in", "out", or "mixed".  Every member of J_phi is phi plus a
    reduced continuation u, and gamma^-1 phi u reduces to r u with
    r = gamma^-1 phi as long as the cancellation does not swallow phi
    entirely; membership is then a prefix test on r alone, or on the one
    continuation of r that could still reach s.
    """
    if phi == gamma:
        # gamma^-1 w is exactly the continuation u; u never starts with the
        # inverse of phi's last letter.
        if s[0] == (phi[-1][0], -phi[-1][1]):
            return "out"
        return "mixed"
    r = multiply(invert(gamma), phi)
    cancelled = (len(gamma) + len(phi) - len(r)) // 2
    if cancelled >= len(phi):
        # phi swallowed with leftover; continuations cancel unpredictably.
        return classify_cylinder_brute(gamma, s, phi, n)
    if len(r) >= len(s):
        return "in" if has_prefix(r, s) else "out"
    if r != s[: len(r)]:
        return "out"
    tail = s[len(r) :]
    if tail[0] == (phi[-1][0], -phi[-1][1]):
        return "out"
    return "mixed"


def classify_cylinder_brute(gamma: Word, s: Word, phi: Word, n: int) -> str:
    """Same classification by enumerating J_phi members up to the depth
    |gamma| + |s| past which membership is decided by the prefix."""
    depth = max(len(phi), len(gamma) + len(s))
    saw_in = saw_out = False
    for w in cylinder_words(phi, n, depth):
        if in_shifted_cylinder(gamma, s, w):
            saw_in = True
        else:
            saw_out = True
        if saw_in and saw_out:
            return "mixed"
    return "in" if saw_in else "out"


@dataclass(frozen=True)
class Relation:
    """One verified tiling of a shifted cylinder against the head table."""

    n: int
    gamma: Word
    s: Word
    all_in: tuple[int, ...]
    all_out: tuple[int, ...]
    residue: tuple[Word, ...]
    cancellation: int

    def to_dict(self) -> dict:
        return {
            "gamma": word_to_str(self.gamma),
            "s": word_to_str(self.s),
            "S": list(self.all_out),
            "residue": [word_to_str(w) for w in self.residue],
            "cancellation": self.cancellation,
        }

    @classmethod
    def from_dict(cls, data: dict, n: int) -> "Relation":
        table = PsiTable.build(n)
        gamma = word_from_str(data["gamma"])
        s = word_from_str(data["s"])
        all_out = tuple(sorted(data["S"]))
        all_in = tuple(i for i in range(1, table.size + 1) if i not in set(all_out))
        return cls(
            n=n,
            gamma=gamma,
            s=s,
            all_in=all_in,
            all_out=all_out,
            residue=tuple(word_from_str(t) for t in data["residue"]),
            cancellation=int(data["cancellation"]),
        )


def derive_relation(
    gamma: Word, s: Word, n: int, table: PsiTable | None = None
) -> Relation | None:
    """Tile gamma . J_s against the head table, or report that it fails.

    Returns None when some head cylinder straddles the shifted cylinder or
    when gamma and s multiply without cancellation.
    """
    if table is None:
        table = PsiTable.build(n)
    table.index(s)  # s must be a head-table word
    gamma = reduce_word(gamma)
    if not gamma:
        return None
    product = multiply(gamma, s)
    cancellation = (len(gamma) + len(s) - len(product)) // 2
    if cancellation < 1:
        return None
    all_in: list[int] = []
    all_out: list[int] = []
    for i, phi in enumerate(table.words):
        side = classify_cylinder(gamma, s, phi, n)
        if side == "mixed":
            return None
        (all_in if side == "in" else all_out).append(i + 1)
    residue = tuple(
        w for w in short_words(n) if not in_shifted_cylinder(gamma, s, w)
    )
    return Relation(
        n=n,
        gamma=gamma,
        s=s,
        all_in=tuple(all_in),
        all_out=tuple(all_out),
        residue=residue,
        cancellation=cancellation,
    )


def enumerate_relations(
    n: int, gammas: list[Word] | None = None
) -> list[Relation]:
    """All tilings over the shift set, or over an explicit gamma list.

    Order is by gamma position then head-table index of s.  The default
    shift set yields 2n(8n^2 - 10n + 3) relations.
    """
    from .words import enumerate_shift_words

    table = PsiTable.build(n)
    if gammas is None:
        gammas = enumerate_shift_words(n)
    out: list[Relation] = []
    for gamma in gammas:
        for s in table.words:
            rel = derive_relation(gamma, s, n, table)
            if rel is not None:
                out.append(rel)
    return out


def validate_relation(
    rel: Relation, depth: int, table: PsiTable | None = None
) -> bool:
    """Brute-force the partition over every reduced word up to depth.

    Each word must lie in the shifted cylinder or in the claimed complement
    (an outside head cylinder or the residue), never both, never neither.
    The two-letter mixed-generator words belong to no head cylinder and are
    skipped.
    """
    if table is None:
        table = PsiTable.build(rel.n)
    excluded = set(bad_pairs(rel.n))
    out_words = [table.word(i) for i in rel.all_out]
    residue = set(rel.residue)
    from .words import reduced_words

    for w in reduced_words(rel.n, depth):
        if w in excluded:
            continue
        inside = in_shifted_cylinder(rel.gamma, rel.s, w)
        covered = w in residue or any(has_prefix(w, phi) for phi in out_words)
        if inside == covered:
            return False
    return True


def is_swap_candidate(rel: Relation) -> bool:
    """Rows whose mirrored form replaces them in the published family:
    a letter conjugate times an aba-shaped word collapsing to a square."""
    if rel.cancellation != 2 or len(rel.gamma) != 3 or len(rel.s) != 3:
        return False
    if word_class(rel.gamma) != "conj" or word_class(rel.s) != "aba":
        return False
    product = multiply(rel.gamma, rel.s)
    return len(product) == 2 and product[0] == product[1]


def sibling_relation(rel: Relation, table: PsiTable | None = None) -> Relation:
    """The transported tiling (gamma, s) -> (s, s^-1 gamma s).

    Shares the product of the source pair; defined whenever the transported
    pair tiles, which it does for every swap candidate.
    """
    if table is None:
        table = PsiTable.build(rel.n)
    gamma2 = rel.s
    s2 = reduce_word(invert(rel.s) + rel.gamma + rel.s)
    out = derive_relation(gamma2, s2, rel.n, table)
    if out is None:
        raise ValueError(
            f"transported pair ({word_to_str(gamma2)}, {word_to_str(s2)}) "
            "does not tile"
        )
    return out


def relations_to_json(relations: list[Relation], n: int, indent: int | None = 2) -> str:
    return json.dumps(
        {"n": n, "relations": [r.to_dict() for r in relations]},
        indent=indent,
        sort_keys=True,
    )


def relations_from_json(text: str) -> list[Relation]:
    data = json.loads(text)
    return [Relation.from_dict(d, data["n"]) for d in data["relations"]]


def relations_to_csv(relations: list[Relation]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["gamma", "s", "cancellation", "S", "residue"])
    for r in relations:
        writer.writerow(
            [
                word_to_str(r.gamma),
                word_to_str(r.s),
                r.cancellation,
                ";".join(str(i) for i in r.all_out),
                ";".join(word_to_str(w) for w in r.residue),
            ]
        )
    return buf.getvalue()
