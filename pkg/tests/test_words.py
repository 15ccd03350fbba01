"""Free-group arithmetic and the canonical head table."""

from hypothesis import given
from hypothesis import strategies as st

import dispbound.reference as ref
from dispbound import (
    IDENTITY,
    PsiTable,
    enumerate_psi,
    enumerate_shift_words,
    invert,
    multiply,
    reduce_word,
    word_class,
    word_from_str,
    word_to_str,
)

letters = st.tuples(st.integers(min_value=1, max_value=3), st.sampled_from((1, -1)))
raw_words = st.lists(letters, max_size=12).map(tuple)


def test_reduce_cancels_adjacent_inverse_pairs():
    assert reduce_word(((1, 1), (2, 1), (2, -1), (1, -1))) == IDENTITY
    assert reduce_word(((1, 1), (1, -1), (2, 1))) == ((2, 1),)


def test_identity_prints_as_one():
    assert word_to_str(IDENTITY) == "1"
    assert word_from_str("1") == IDENTITY


def test_string_roundtrip():
    for text in ("x1", "x2'", "x1 x2' x1'", "x2 x1 x2'"):
        assert word_to_str(word_from_str(text)) == text


@given(raw_words)
def test_reduce_is_idempotent(seq):
    w = reduce_word(seq)
    assert reduce_word(w) == w


@given(raw_words)
def test_invert_is_an_involution(seq):
    w = reduce_word(seq)
    assert invert(invert(w)) == w


@given(raw_words, raw_words)
def test_multiplying_by_an_inverse_cancels(a, b):
    u, v = reduce_word(a), reduce_word(b)
    assert multiply(multiply(u, v), invert(v)) == u


@given(raw_words, raw_words, raw_words)
def test_multiplication_is_associative(a, b, c):
    u, v, w = reduce_word(a), reduce_word(b), reduce_word(c)
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


def test_head_table_matches_frozen_order(table2):
    assert [word_to_str(w) for w in table2.words] == list(ref.WORDS)
    assert enumerate_psi(2) == list(table2.words)


def test_table_sizes_by_rank():
    assert PsiTable.build(2).size == 28
    assert PsiTable.build(3).size == 126


def test_shift_words_match_frozen_order():
    assert [word_to_str(w) for w in enumerate_shift_words(2)] == list(ref.SHIFT_WORDS)
    assert len(enumerate_shift_words(3)) == 30


def test_index_and_word_are_inverse_bijections(table2):
    for i in range(1, table2.size + 1):
        assert table2.index(table2.word(i)) == i
    assert table2.index(word_from_str("x1 x2' x1'")) == 1
    assert word_to_str(table2.word(28)) == "x1' x1'"


def test_head_blocks_partition_the_table(table2):
    blocks = table2.head_blocks()
    assert len(blocks) == 4
    assert all(len(b) == 7 for b in blocks)
    assert sorted(i for b in blocks for i in b) == list(range(1, 29))


def test_classes_partition_matches_frozen_index_sets(table2):
    assert table2.class_indices("conj") == list(ref.CONJ_INDICES)
    assert table2.class_indices("aba") == list(ref.ABA_INDICES)
    assert table2.class_indices("abb") == list(ref.ABB_INDICES)
    assert table2.class_indices("square") == list(ref.SQUARE_INDICES)
    assert {i: word_class(table2.word(i)) for i in range(1, 29)} == table2.classes()


def test_serialization_roundtrip(table2):
    again = PsiTable.from_json(table2.to_json())
    assert again.n == table2.n
    assert list(again.words) == list(table2.words)
