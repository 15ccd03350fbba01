"""Compiled bound functions: frozen tables, calculus, symmetry."""

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import dispbound.reference as ref
from dispbound import (
    family_max,
    family_values,
    function_family,
    sigma,
    symmetry_permutations,
)


def _by_label(specs):
    return {sp.label: sp for sp in specs}


def test_sigma_values():
    assert sigma(0.5) == 1.0
    assert sigma(0.25) == 3.0
    assert sigma(0.1) == pytest.approx(9.0)


def test_rank_two_family_matches_frozen_tables(family2):
    assert len(family2) == 60
    by_label = _by_label(family2)
    assert len(by_label) == 60
    for label, denom, numer, gamma, canc in ref.FUNCTION_ROWS:
        sp = by_label[label]
        assert sp.denom == denom
        assert tuple(sp.numer) == tuple(numer)
        assert sp.meta["gamma"] == gamma
        assert sp.meta["cancellation"] == canc


def test_label_histogram(family2):
    hist = Counter(sp.label[0] for sp in family2)
    assert hist == {"f": 28, "g": 16, "h": 12, "u": 4}


def test_dominant_specs_are_the_f_rows(family2, dominant2):
    assert [sp.label for sp in dominant2] == [f"f{i}" for i in range(1, 29)]
    # Dominance means: at every point of the domain the family maximum is
    # attained on the dominant subset.
    rng = np.random.default_rng(11)
    for _ in range(25):
        x = rng.uniform(0.2, 1.0, size=28)
        x /= x.sum()
        full = family_values(family2, x).max()
        dom = family_values(dominant2, x).max()
        assert dom == pytest.approx(full, rel=1e-12)


def test_value_and_gradient_at_the_barycenter(family2):
    f1 = _by_label(family2)["f1"]
    bary = np.full(28, 1.0 / 28.0)
    assert f1.value(bary) == pytest.approx(81.0, abs=1e-9)
    grad = f1.gradient(bary)
    assert grad[0] == pytest.approx(-2784.0, abs=1e-6)
    assert grad[1] == pytest.approx(-432.0, abs=1e-6)
    assert grad[7] == pytest.approx(0.0, abs=1e-12)


def test_gradient_matches_central_differences(family2):
    rng = np.random.default_rng(3)
    h = 1e-5
    for _ in range(10):
        x = rng.uniform(0.2, 1.0, size=28)
        x /= x.sum()
        sp = family2[rng.integers(len(family2))]
        grad = sp.gradient(x)
        for j in rng.choice(28, size=6, replace=False):
            xp, xm = x.copy(), x.copy()
            xp[j] += h
            xm[j] -= h
            fd = (sp.value(xp) - sp.value(xm)) / (2 * h)
            assert grad[j] == pytest.approx(fd, rel=1e-6, abs=1e-6)


def test_family_is_closed_under_coordinate_symmetries(family2):
    perms = symmetry_permutations(2)
    assert tuple(perms) == ref.PERMUTATIONS
    keys = {(sp.denom, frozenset(sp.numer)) for sp in family2}
    for perm in perms:
        for sp in family2:
            moved = (perm[sp.denom - 1], frozenset(perm[i - 1] for i in sp.numer))
            assert moved in keys


def test_symmetries_intertwine_the_family_maximum(family2):
    rng = np.random.default_rng(5)
    perms = symmetry_permutations(2)
    for _ in range(20):
        x = rng.uniform(0.2, 1.0, size=28)
        x /= x.sum()
        base = sorted(family_values(family2, x))
        for perm in perms:
            y = np.empty_like(x)
            for i in range(28):
                y[perm[i] - 1] = x[i]
            moved = sorted(family_values(family2, y))
            assert np.allclose(moved, base, rtol=1e-12, atol=0.0)


def test_family_max_reports_a_witness(family2):
    x = np.full(28, 1.0 / 28.0)
    value, label = family_max(family2, x)
    assert value == pytest.approx(81.0, abs=1e-9)
    assert label in {sp.label for sp in family2}


FAMILY2 = function_family(2)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=59))
def test_values_decrease_when_active_mass_grows(seed, pick):
    sp = FAMILY2[pick]
    rng = np.random.default_rng(seed)
    x = rng.uniform(1e-3, 0.03, size=28)
    before = sp.value(x)
    active = set(sp.numer) | {sp.denom}
    i = int(rng.choice(sorted(active)))
    bumped = x.copy()
    bumped[i - 1] += 1e-3
    assert sp.value(bumped) < before
    outside = sorted(set(range(1, 29)) - active)
    if outside:
        j = int(rng.choice(outside))
        unmoved = x.copy()
        unmoved[j - 1] += 1e-3
        assert sp.value(unmoved) == pytest.approx(before, rel=1e-12)


def test_rank_three_family_size_and_labels():
    fam = function_family(3)
    assert len(fam) == 270
    assert all(sp.m == 126 for sp in fam)
    assert any(sp.label.startswith("c3_") for sp in fam)
