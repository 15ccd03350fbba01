"""Reduced words in a free group of rank n and the canonical word tables.

Letters are pairs ``(generator, sign)`` with ``generator`` in ``1..n`` and
``sign`` in ``{+1, -1}``.  A word is a tuple of letters; the empty tuple is
the identity.  The text form writes generator i as ``x<i>`` and its inverse
as ``x<i>'``, tokens separated by single spaces, with ``1`` for the identity.

Three word families drive everything downstream:

* the head table: all reduced three-letter words whose first two letters use
  different generators, plus the squares of the 2n letters (one block of
  ``2(n-1)(2n-1) + 1`` words per leading letter),
* the shift set: the 2n letters together with all conjugates ``w a w^-1``
  of a letter by a letter of a different generator,
* the excluded pairs: two-letter words mixing two generators, which belong
  to no cylinder of the head table and are left out of tiling checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

Letter = tuple[int, int]
Word = tuple[Letter, ...]

IDENTITY: Word = ()


def letters(n: int) -> list[Letter]:
    """All 2n letters, generator-major, positive sign first."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    out: list[Letter] = []
    for g in range(1, n + 1):
        out.append((g, 1))
        out.append((g, -1))
    return out


def inverse_letter(a: Letter) -> Letter:
    return (a[0], -a[1])


def is_reduced(seq: tuple[Letter, ...]) -> bool:
    return all(seq[i] != inverse_letter(seq[i + 1]) for i in range(len(seq) - 1))


def reduce_word(seq: tuple[Letter, ...]) -> Word:
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    out: list[Letter] = []
    for a in seq:
        if out and out[-1] == inverse_letter(a):
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(w: Word) -> Word:
    return tuple(inverse_letter(a) for a in reversed(w))


def multiply(u: Word, v: Word) -> Word:
    return reduce_word(u + v)


def has_prefix(w: Word, p: Word) -> bool:
    return len(w) >= len(p) and w[: len(p)] == p


def word_to_str(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(f"x{g}" if s > 0 else f"x{g}'" for g, s in w)


def word_from_str(text: str) -> Word:
    text = text.strip()
    if text == "1" or not text:
        return IDENTITY
    out: list[Letter] = []
    for tok in text.split():
        sign = 1
        if tok.endswith("'"):
            sign = -1
            tok = tok[:-1]
        if not tok.startswith("x") or not tok[1:].isdigit():
            raise ValueError(f"bad letter token {tok!r}")
        g = int(tok[1:])
        if g < 1:
            raise ValueError(f"bad generator index in {tok!r}")
        out.append((g, sign))
    w = tuple(out)
    if not is_reduced(w):
        raise ValueError(f"word {text!r} is not reduced")
    return w


def generator_heads(n: int) -> list[Letter]:
    """Leading-letter order of the head table.

    Rank 2 uses the fixed order x1, x2', x2, x1' that the reference tables
    are indexed by; higher ranks run through letters(n).
    """
    if n == 2:
        return [(1, 1), (2, -1), (2, 1), (1, -1)]
    return letters(n)


def _rank2_block(a: Letter) -> list[Word]:
    # For head a the block lists the six three-letter words then the square.
    # Second letters are the other generator's negative then positive letter;
    # the doubled-letter word comes first when the second letter is positive,
    # last when it is negative.
    other = 2 if a[0] == 1 else 1
    own_neg, own_pos = (a[0], -1), (a[0], 1)
    block: list[Word] = []
    for b in [(other, -1), (other, 1)]:
        if b[1] > 0:
            thirds = [b, own_neg, own_pos]
        else:
            thirds = [own_neg, own_pos, b]
        for c in thirds:
            block.append((a, b, c))
    block.append((a, a))
    return block


def _general_block(a: Letter, n: int) -> list[Word]:
    block: list[Word] = []
    for b in letters(n):
        if b[0] == a[0]:
            continue
        for c in letters(n):
            if c == inverse_letter(b):
                continue
            block.append((a, b, c))
    block.append((a, a))
    return block


def enumerate_psi(n: int) -> list[Word]:
    """The head table: (2n-1)^3 + 1 words grouped by leading letter."""
    out: list[Word] = []
    for a in generator_heads(n):
        out.extend(_rank2_block(a) if n == 2 else _general_block(a, n))
    return out


def enumerate_shift_words(n: int) -> list[Word]:
    """The shift set: 2n letters then the letter conjugates, 2n(2n-1) words.

    Letters come first, each the inverse of the corresponding head, so the
    letter gamma covering the cylinders of head block i sits at position i.
    Conjugates follow by head order of the conjugating letter.
    """
    heads = generator_heads(n)
    out: list[Word] = [(inverse_letter(h),) for h in heads]
    for w in heads:
        for a in letters(n):
            if a[0] == w[0]:
                continue
            out.append((w, a, inverse_letter(w)))
    return out


def bad_pairs(n: int) -> list[Word]:
    """Two-letter words mixing two generators; 2n(2n-2) of them."""
    out: list[Word] = []
    for a in letters(n):
        for b in letters(n):
            if b[0] != a[0]:
                out.append((a, b))
    return out


def short_words(n: int) -> list[Word]:
    """Identity plus the 2n letters, the only possible residue members."""
    return [IDENTITY] + [(a,) for a in letters(n)]


def word_class(w: Word) -> str:
    """Shape of a head-table word.

    square    a a
    conj      a b a^-1
    aba       a b a
    abb       a b b
    cross     a b c with three distinct generators (rank 3 and up)
    """
    if len(w) == 2:
        if w[0] != w[1]:
            raise ValueError(f"not a head-table word: {word_to_str(w)}")
        return "square"
    if len(w) != 3:
        raise ValueError(f"not a head-table word: {word_to_str(w)}")
    a, b, c = w
    if c == inverse_letter(a):
        return "conj"
    if c == a:
        return "aba"
    if c == b:
        return "abb"
    if c[0] != a[0] and c[0] != b[0]:
        return "cross"
    raise ValueError(f"not a head-table word: {word_to_str(w)}")


def reduced_words(n: int, max_len: int):
    """Yield every reduced word of length at most max_len, shortest first."""
    alphabet = letters(n)
    layer: list[Word] = [IDENTITY]
    yield IDENTITY
    for _ in range(max_len):
        nxt: list[Word] = []
        for w in layer:
            for a in alphabet:
                if w and w[-1] == inverse_letter(a):
                    continue
                ext = w + (a,)
                nxt.append(ext)
                yield ext
        layer = nxt


def cylinder_words(phi: Word, n: int, max_len: int):
    """Yield the reduced words with prefix phi, lengths |phi|..max_len."""
    alphabet = letters(n)
    layer = [phi]
    if len(phi) <= max_len:
        yield phi
    for _ in range(max_len - len(phi)):
        nxt: list[Word] = []
        for w in layer:
            for a in alphabet:
                if w and w[-1] == inverse_letter(a):
                    continue
                ext = w + (a,)
                nxt.append(ext)
                yield ext
        layer = nxt


@dataclass(frozen=True)
class PsiTable:
    """Indexed head table for one rank; indices are 1-based."""

    n: int
    words: tuple[Word, ...]

    @classmethod
    def build(cls, n: int) -> "PsiTable":
        return cls(n=n, words=tuple(enumerate_psi(n)))

    @property
    def size(self) -> int:
        return len(self.words)

    def word(self, idx: int) -> Word:
        if not 1 <= idx <= len(self.words):
            raise IndexError(f"index {idx} out of range 1..{len(self.words)}")
        return self.words[idx - 1]

    def index(self, w: Word) -> int:
        try:
            return self._index_map()[w]
        except KeyError:
            raise KeyError(f"not a head-table word: {word_to_str(w)}") from None

    def _index_map(self) -> dict[Word, int]:
        cached = getattr(self, "_imap", None)
        if cached is None:
            cached = {w: i + 1 for i, w in enumerate(self.words)}
            object.__setattr__(self, "_imap", cached)
        return cached

    def classes(self) -> dict[int, str]:
        return {i + 1: word_class(w) for i, w in enumerate(self.words)}

    def class_indices(self, name: str) -> list[int]:
        return [i + 1 for i, w in enumerate(self.words) if word_class(w) == name]

    def head_blocks(self) -> list[list[int]]:
        """Index blocks sharing a leading letter, in head order."""
        blocks: list[list[int]] = []
        seen: dict[Letter, int] = {}
        for i, w in enumerate(self.words):
            if w[0] not in seen:
                seen[w[0]] = len(blocks)
                blocks.append([])
            blocks[seen[w[0]]].append(i + 1)
        return blocks

    def pair_blocks(self) -> dict[Word, list[int]]:
        """Index triples sharing a two-letter mixed prefix, insertion order."""
        blocks: dict[Word, list[int]] = {}
        for i, w in enumerate(self.words):
            if len(w) == 3:
                blocks.setdefault(w[:2], []).append(i + 1)
        return blocks

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"idx": i + 1, "word": word_to_str(w)}
                for i, w in enumerate(self.words)
            ],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "PsiTable":
        entries = sorted(data["entries"], key=lambda e: e["idx"])
        if [e["idx"] for e in entries] != list(range(1, len(entries) + 1)):
            raise ValueError("entry indices must be 1..size")
        return cls(
            n=int(data["n"]),
            words=tuple(word_from_str(e["word"]) for e in entries),
        )

    @classmethod
    def from_json(cls, text: str) -> "PsiTable":
        return cls.from_dict(json.loads(text))
