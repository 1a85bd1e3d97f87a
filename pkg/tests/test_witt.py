from itertools import combinations

import numpy as np
import pytest

from pacecode.errors import PreconditionError, StructuralError
from pacecode.gf3 import mat_rank
from pacecode.perm import M12_GENERATORS, m12
from pacecode.witt import (
    GOLAY_P,
    PRINTED_INTERSECTION_NUMBERS,
    WittDesign,
    blocks_to_json,
    blocks_to_text,
    classify_six_sets,
    golay_code,
    golay_generator,
    intersection_count,
    intersection_table,
    table_from_recurrence,
    witt_design,
)


def test_golay_matrix_entries():
    g = golay_generator()
    assert g.shape == (6, 12)
    assert GOLAY_P[0, 0] == 0
    assert GOLAY_P[1, 4] == 2
    assert GOLAY_P[0].tolist() == [0, 1, 1, 1, 1, 1]
    assert np.array_equal(g[:, :6], np.eye(6))


def test_golay_parameters():
    code = golay_code()
    assert (code.n, code.k, code.min_distance()) == (12, 6, 6)


def test_classification_counts():
    blocks, info = classify_six_sets()
    assert len(blocks) == 132
    assert len(info) == 792
    assert (1, 2, 3, 4, 5, 6) in info
    assert blocks == sorted(blocks) and info == sorted(info)


def test_block_submatrices_have_rank_five():
    g = golay_generator()
    assert {mat_rank(g[:, [x - 1 for x in b]]) for b in witt_design().blocks} == {5}


def test_classification_rejects_degenerate_matrix():
    g = golay_generator().copy()
    g[:, :2] = 0
    with pytest.raises(StructuralError):
        classify_six_sets(g)


def test_matches_golden_blocks(golden_blocks):
    assert list(witt_design().blocks) == golden_blocks


def test_steiner_property_and_complements():
    d = witt_design()
    assert d.steiner_violations() == []
    assert all(d.complement[d.complement[b]] == b for b in d.blocks)
    assert all(set(b).isdisjoint(c) for b, c in d.complement.items())


def test_steiner_check_catches_missing_block():
    d = witt_design()
    broken = WittDesign(d.blocks[1:])
    assert len(broken.steiner_violations()) == 6


def test_blocks_through_point():
    d = witt_design()
    assert all(sum(1 for b in d.blocks if p in b) == 66 for p in range(1, 13))


@pytest.mark.parametrize(
    "A, B, expected",
    [((1, 2), (), 30), ((3,), (9,), 36), ((1, 5, 12), (2, 7), 5), ((), (), 132), ((1, 2, 3, 4, 5), (), 1)],
)
def test_intersection_count(A, B, expected):
    assert intersection_count(witt_design(), A, B) == expected


def test_intersection_count_preconditions():
    d = witt_design()
    with pytest.raises(PreconditionError):
        intersection_count(d, (1, 2), (2, 3))
    with pytest.raises(PreconditionError):
        intersection_count(d, (1, 2, 3), (4, 5, 6))


def test_intersection_table_matches_printed_values():
    table = intersection_table(witt_design())
    for key, val in PRINTED_INTERSECTION_NUMBERS.items():
        assert table[key] == val
        assert table[key[::-1]] == val
    assert table[(0, 0)] == 132


def test_intersection_table_recurrence_oracle():
    table = intersection_table(witt_design())
    assert table_from_recurrence({a: table[(a, 0)] for a in range(6)}) == table


def test_intersection_table_rejects_non_homogeneous_family():
    d = witt_design()
    with pytest.raises(StructuralError):
        intersection_table(WittDesign(d.blocks[:-1]))


def test_m12_permutes_blocks():
    d = witt_design()
    for p in M12_GENERATORS.values():
        assert sorted(tuple(sorted(p.image_set(b))) for b in d.blocks) == list(d.blocks)
    assert m12().orbit_of_set(d.blocks[0]) == list(d.blocks)


def test_every_five_set_count():
    d = witt_design()
    for s in list(combinations(range(1, 13), 5))[::37]:
        assert sum(1 for b in d.blocks if set(s) <= set(b)) == 1


def test_exports():
    d = witt_design()
    assert blocks_to_text(d.blocks[:2]) == "1 2 3 4 5 12\n1 2 3 4 6 11\n"
    assert blocks_to_json(d.blocks[:1]) == "[[1, 2, 3, 4, 5, 12]]"
