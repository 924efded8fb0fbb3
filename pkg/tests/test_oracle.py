import pytest

from helixspan.diagram import bfs_distance, is_r_canonical
from helixspan.oracle import (
    Histogram,
    SizeLimitExceeded,
    enumerate_dot_brackets,
    enumerate_structures,
    enumerate_tableaux,
    histogram,
)
from helixspan.series import canonical_series
from helixspan.tableaux import beta, tableau_distance


def test_enumerate_small():
    assert list(enumerate_dot_brackets(3)) == ["(.)", "..."]
    assert sum(1 for _ in enumerate_structures(6)) == 17


def test_enumerate_r2_length5():
    got = {str(s) for s in enumerate_structures(5, 2)}
    assert got == {"((.))", "....."}


def test_lexicographic_and_deterministic():
    first = list(enumerate_dot_brackets(11))
    assert first == sorted(first)
    assert len(set(first)) == len(first)
    assert first == list(enumerate_dot_brackets(11))


def test_r_filter_matches_definition():
    every = list(enumerate_structures(12))
    for r in (2, 3):
        assert list(enumerate_structures(12, r)) == [s for s in every if is_r_canonical(s, r)]


def test_cap():
    with pytest.raises(SizeLimitExceeded):
        next(enumerate_structures(23))
    with pytest.raises(SizeLimitExceeded):
        histogram(5, cap=4)
    assert sum(1 for _ in enumerate_structures(5, cap=5)) == 8


def test_histograms():
    assert histogram(3) == Histogram(3, 1, {1: 1, 2: 1})
    assert histogram(2).counts == {1: 1}
    assert histogram(1).counts == {0: 1}
    h = histogram(8, 2)
    assert h.total == canonical_series(2, 8)[8]
    assert all(0 <= d < 8 for d in h.counts)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_count_identity(r):
    series = canonical_series(r, 16)
    for n in range(1, 17):
        assert sum(1 for _ in enumerate_structures(n, r)) == series[n]


def test_per_structure_cross_check():
    for n in range(1, 13):
        for s in enumerate_structures(n):
            assert bfs_distance(s) == tableau_distance(beta(s))


def test_tableaux_enumeration_counts():
    assert [sum(1 for _ in enumerate_tableaux(n)) for n in range(1, 9)] == [1, 1, 2, 4, 8, 17, 37, 82]
