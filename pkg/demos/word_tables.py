"""Walk the word tables: head words, shift words, derived relations.

Run:  python3 demos/word_tables.py
"""

from collections import Counter

from dispbound import (
    PsiTable,
    derive_relation,
    enumerate_relations,
    enumerate_shift_words,
    reduce_word,
    word_from_str,
    word_to_str,
)


def main() -> None:
    table = PsiTable.build(2)
    print(f"head table, rank 2: {table.size} words")
    for i in range(1, table.size + 1):
        w = table.word(i)
        print(f"  {i:>2}  {word_to_str(w):<12} {table.classes()[i]}")

    shifts = enumerate_shift_words(2)
    print(f"\nshift words: {len(shifts)}")
    print("  " + ", ".join(word_to_str(w) for w in shifts))

    relations = enumerate_relations(2)
    hist = Counter(r.cancellation for r in relations)
    print(f"\nderived relations: {len(relations)}")
    print(f"  by cancellation: {dict(sorted(hist.items(), reverse=True))}")
    for rel in relations[:3]:
        inside = ",".join(str(i) for i in rel.all_out)
        print(
            f"  gamma={word_to_str(rel.gamma):<10} s={word_to_str(rel.s):<10}"
            f" cancel={rel.cancellation}  S={{{inside}}}"
        )
    print("  ...")

    # The same derivation runs over any word list. Over all reduced words of
    # length at most three the count is reported here, not asserted anywhere.
    universe: set = set()
    letters = [(g, e) for g in (1, 2) for e in (1, -1)]
    frontier = [()]
    for _ in range(3):
        frontier = [
            reduce_word(w + (l,)) for w in frontier for l in letters
        ]
        universe.update(w for w in frontier if w)
    extended = [
        rel
        for gamma in sorted(universe)
        for rel in [derive_relation(gamma, s, 2, table) for s in table.words]
        if rel is not None
    ]
    fresh = [r for r in extended if r.gamma not in set(shifts)]
    print(f"\nrelations over every word of length <= 3: {len(extended)}")
    print(f"  from the {len(shifts)} shift words: {len(extended) - len(fresh)}")
    print(f"  from words outside the shift set: {len(fresh)}")
    sample = word_from_str("x1 x2")
    hits = [r for r in extended if r.gamma == sample]
    print(f"  rows with gamma = {word_to_str(sample)}: {len(hits)}")


if __name__ == "__main__":
    main()
