"""Derived tiling relations: inventory, row data, brute-force validation."""

import dataclasses
import json
from collections import Counter

import pytest

import dispbound.reference as ref
from dispbound import (
    derive_relation,
    enumerate_relations,
    enumerate_shift_words,
    multiply,
    sibling_relation,
    validate_relation,
    word_from_str,
    word_to_str,
)
from dispbound.relations import is_swap_candidate, relations_to_csv, relations_to_json


def _row_key(rel, table):
    residue = tuple(sorted(word_to_str(w) for w in rel.residue))
    return (word_to_str(rel.gamma), table.index(rel.s), tuple(rel.all_out),
            residue, rel.cancellation)


def test_rank_two_inventory(relations2):
    assert len(relations2) == 60
    hist = Counter(r.cancellation for r in relations2)
    assert hist == {1: 36, 2: 16, 3: 8}


def test_rows_match_frozen_tables(relations2, table2):
    assert len(relations2) == len(ref.RELATION_ROWS)
    for rel, row in zip(relations2, ref.RELATION_ROWS):
        expected = (row[0], row[1], tuple(row[2]), tuple(sorted(row[3])), row[4])
        assert _row_key(rel, table2) == expected


def test_enumeration_is_complete(table2):
    # Every (shift word, head word) pair either yields exactly the row the
    # enumeration lists or derives to nothing.
    listed = {(word_to_str(r.gamma), table2.index(r.s))
              for r in enumerate_relations(2)}
    hits, misses = 0, 0
    for gamma in enumerate_shift_words(2):
        for s in table2.words:
            rel = derive_relation(gamma, s, 2, table2)
            if rel is None:
                misses += 1
                assert (word_to_str(gamma), table2.index(s)) not in listed
            else:
                hits += 1
                assert (word_to_str(rel.gamma), table2.index(rel.s)) in listed
    assert hits == 60
    assert misses == 12 * 28 - 60


def test_brute_force_validation_on_sample(relations2):
    for rel in relations2[::7]:
        assert validate_relation(rel, 6)


def test_validation_rejects_a_corrupted_row(relations2):
    bad = dataclasses.replace(relations2[0], all_out=relations2[0].all_out[:-1])
    assert not validate_relation(bad, 5)
    worse = dataclasses.replace(relations2[0], residue=relations2[0].residue[:-1])
    assert not validate_relation(worse, 5)


def test_swap_candidates_and_their_siblings(relations2):
    cands = [r for r in relations2 if is_swap_candidate(r)]
    assert len(cands) == 8
    for rel in cands:
        sib = sibling_relation(rel)
        assert multiply(sib.gamma, sib.s) == multiply(rel.gamma, rel.s)
        assert sib.cancellation == rel.cancellation
        assert validate_relation(sib, 5)


def test_higher_rank_counts_follow_the_closed_form():
    for n in (2, 3, 4):
        assert len(enumerate_relations(n)) == 2 * n * (8 * n * n - 10 * n + 3)


def test_json_serialization_shape(relations2):
    doc = json.loads(relations_to_json(relations2, 2))
    assert doc["n"] == 2
    assert len(doc["relations"]) == 60
    first = doc["relations"][0]
    assert set(first) == {"gamma", "s", "S", "residue", "cancellation"}


def test_csv_serialization_shape(relations2):
    lines = relations_to_csv(relations2).strip().splitlines()
    assert lines[0] == "gamma,s,cancellation,S,residue"
    assert len(lines) == 61


def test_nonmember_head_word_is_rejected(table2):
    gamma = enumerate_shift_words(2)[0]
    with pytest.raises(KeyError):
        derive_relation(gamma, word_from_str("x1 x2 x1' x2'"), 2, table2)
