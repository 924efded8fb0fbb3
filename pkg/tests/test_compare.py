from fractions import Fraction

import pytest

from helixspan.compare import compare_distribution
from helixspan.diagram import EmptyInput, SecondaryStructure, parse_dot_bracket
from helixspan.limitlaw import q_series
from helixspan.oracle import enumerate_structures
from helixspan.tables import distance_table, probability_row


def test_full_enumeration_reproduces_exact_row():
    sample = list(enumerate_structures(10))
    result = compare_distribution(sample)
    assert result.reference == "exact-n" and result.length == 10
    assert all(emp == ref for _, emp, ref in result.rows)
    assert result.sample_size == len(sample)


def test_arcless_sample_concentrates_on_n_minus_one():
    result = compare_distribution([SecondaryStructure(20, frozenset())] * 3)
    emp = {d: e for d, e, _ in result.rows}
    assert emp[19] == 1
    assert result.mean_empirical() == 19


def test_mixed_lengths_default_to_limit(caplog):
    sample = [parse_dot_bracket("((...))"), parse_dot_bracket("(((...)))..")]
    result = compare_distribution(sample, d_max=5)
    assert result.reference == "limit"
    law = q_series(5)
    assert [ref for _, _, ref in result.rows] == list(law.q)
    assert "mixed" in caplog.text


def test_exact_n_with_mixed_lengths_uses_modal_length():
    sample = [parse_dot_bracket("(...)"), parse_dot_bracket("(...)."), parse_dot_bracket(".(...)")]
    result = compare_distribution(sample, reference="exact-n", d_max=5)
    assert result.length == 6
    p = probability_row(distance_table(1, 6), 6)
    assert [ref for _, _, ref in result.rows][: len(p)] == p[: len(result.rows)]


def test_limit_reference_for_r_above_one():
    sample = list(enumerate_structures(12, 2))
    result = compare_distribution(sample, r=2, reference="limit", d_max=6, limit_n=300)
    # rows extend to the largest observed distance, 11
    assert len(result.rows) == 12
    p = probability_row(distance_table(2, 300, d_max=11), 300)
    assert all(isinstance(ref, Fraction) for _, _, ref in result.rows)
    assert [ref for _, _, ref in result.rows] == p


def test_empty_input():
    with pytest.raises(EmptyInput):
        compare_distribution([])
