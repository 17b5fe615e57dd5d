import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from orientcolor.census import (ClassTable, build_class_table, census_coefficients, flip_parity,
                                out_degree_vector, residue_class, tally_range, merge_tallies)
from orientcolor.errors import CapExceeded
from orientcolor.graph import Multigraph, Orientation, complete, cycle, empty

from conftest import multigraphs

LOOP = Multigraph(1, ((0, 0),))
EDGE = Multigraph(2, ((0, 1),))


def brute_table(g, k):
    """One Orientation object per mask; shares nothing with the vectorised tally."""
    cells = {}
    for mask in range(1 << g.m):
        o = Orientation.from_mask(g, mask)
        cell = cells.setdefault(residue_class(o, k), [0, 0])
        cell[flip_parity(o)] += 1
    return {key: tuple(v) for key, v in cells.items()}


def test_out_degrees():
    k3 = complete(3)
    assert out_degree_vector(Orientation.reference(k3)) == (2, 1, 0)
    assert out_degree_vector(Orientation(k3, (True, True, True))) == (0, 1, 2)
    assert out_degree_vector(Orientation(LOOP, (False,))) == (1,)
    assert out_degree_vector(Orientation(LOOP, (True,))) == (1,)


def test_flip_parity():
    k3 = complete(3)
    assert flip_parity(Orientation.reference(k3)) == 0
    assert flip_parity(Orientation(k3, (True, False, False))) == 1
    assert flip_parity(Orientation(k3, (True, False, True))) == 0


def test_residue_class():
    k3 = complete(3)
    assert residue_class(Orientation.reference(k3), 3) == (2, 1, 0)
    # 1->2, 2->3, 3->1: edge (1,3) reversed
    assert residue_class(Orientation(k3, (False, True, False)), 3) == (1, 1, 1)
    assert residue_class(Orientation.reference(cycle(4)), 2) == (1, 1, 1, 1)


def test_single_edge_table():
    t = build_class_table(EDGE, 2)
    assert t.entries == {(0, 1): (0, 1), (1, 0): (1, 0)}
    assert census_coefficients(t) == {(0, 1): -1, (1, 0): 1}


def test_c4_classes_have_two_orientations():
    t = build_class_table(cycle(4), 2)
    assert len(t) == 8
    assert all(a + d == 2 for a, d in t.entries.values())
    assert census_coefficients(t)[(1, 1, 1, 1)] == 2


def test_empty_graph_single_orientation():
    for k in (1, 2, 5):
        assert build_class_table(empty(2), k).entries == {(0, 0): (1, 0)}


def test_triangle_coefficients():
    coeffs = census_coefficients(build_class_table(complete(3), 3))
    assert coeffs[(1, 1, 1)] == 0
    perms = {(2, 1, 0): 1, (2, 0, 1): -1, (1, 0, 2): 1, (1, 2, 0): -1, (0, 2, 1): 1, (0, 1, 2): -1}
    assert {key: c for key, c in coeffs.items() if c} == perms


def test_k_equals_one_single_class():
    t = build_class_table(complete(3), 1)
    assert list(t.entries) == [(0, 0, 0)]
    assert t.entries[(0, 0, 0)] == (4, 4)


def test_cap():
    with pytest.raises(CapExceeded):
        build_class_table(cycle(5), 2, max_edges=4)
    with pytest.raises(ValueError):
        build_class_table(cycle(3), 0)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=5, max_m=8), st.integers(1, 5))
def test_matches_brute_force(g, k):
    assert build_class_table(g, k).entries == dict(sorted(brute_table(g, k).items()))


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=6, max_m=10), st.integers(1, 5))
def test_mass_conservation(g, k):
    assert build_class_table(g, k).total() == 2 ** g.m


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=5, max_m=8, loops=False), st.integers(1, 5), st.data())
def test_reversal_antisymmetry(g, k, data):
    if g.m == 0:
        return
    e = data.draw(st.integers(0, g.m - 1))
    before = census_coefficients(build_class_table(g, k))
    after = census_coefficients(build_class_table(g.reversed_edge(e), k))
    assert after == {key: -c for key, c in before.items()}


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=5, max_m=8), st.integers(1, 5), st.randoms(use_true_random=False))
def test_relabeling_equivariance(g, k, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    t = build_class_table(g, k)
    moved = build_class_table(g.relabeled(perm), k)
    expected = {}
    for key, cell in t.entries.items():
        new = [0] * g.n
        for i, r in enumerate(key):
            new[perm[i]] = r
        expected[tuple(new)] = cell
    assert moved.entries == dict(sorted(expected.items()))


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=4, max_m=6), st.integers(1, 4))
def test_loop_annihilation(g, k):
    g = Multigraph(g.n, g.edges + ((0, 0),))
    assert all(a == d for a, d in build_class_table(g, k).entries.values())


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_n=5, max_m=9), st.integers(1, 4), st.lists(st.integers(0, 512), max_size=5))
def test_partition_independence(g, k, cuts):
    total = 1 << g.m
    points = sorted({0, total, *(c % (total + 1) for c in cuts)})
    parts = [tally_range(g, k, lo, hi) for lo, hi in zip(points, points[1:])]
    random.Random(0).shuffle(parts)
    assert merge_tallies(parts, k, g.n, g.m) == build_class_table(g, k)


def test_threaded_equals_sequential():
    g = Multigraph(6, tuple((i, j) for i in range(6) for j in range(i + 1, 6)) + ((0, 1), (2, 3)))
    seq = build_class_table(g, 3)
    assert build_class_table(g, 3, workers=4).to_json() == seq.to_json()


def test_serialisation_round_trip():
    t = build_class_table(cycle(4), 2)
    assert ClassTable.from_dict(json.loads(t.to_json())) == t
    lines = t.to_text().splitlines()
    assert lines[2] == "(0,0,0,0) 2 0 2"
    keys = [row["class"] for row in json.loads(t.to_json())["classes"]]
    assert keys == sorted(keys)


def test_wide_residue_vectors_use_row_path():
    # 7**40 does not fit in int64, so rows are deduplicated directly
    g = Multigraph(40, tuple((i, (3 * i + 1) % 40) for i in range(9)) + ((5, 5),))
    assert build_class_table(g, 7).entries == dict(sorted(brute_table(g, 7).items()))
