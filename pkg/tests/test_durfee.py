import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fullrank.durfee import (
    DurfeeSymbol,
    InvalidSymbolError,
    MarkedDurfeeSymbol2,
    conjugate_2marked,
    durfee_to_partition,
    enumerate_2marked,
    full_rank,
    full_rank_counts_enumeration,
    full_rank_distribution,
    nf2_exact,
    nf2_totals,
    partition_to_durfee,
    validate_2marked,
)
from fullrank.genfun import R2_double_sum
from fullrank.partitions import Partition, enumerate_partitions, rank

partitions = st.lists(st.integers(1, 15), max_size=15).map(Partition.from_parts)


def test_durfee_symbol_example():
    s = partition_to_durfee(Partition((6, 4, 4, 2, 1)))
    assert s == DurfeeSymbol(3, (3, 1, 1), (2, 1))
    assert str(s) == "(3 1 1 / 2 1)_3"
    assert s.rank() == 1
    assert durfee_to_partition(s) == Partition((6, 4, 4, 2, 1))


@given(partitions)
def test_durfee_bijection_preserves_size_and_rank(p):
    if not p.parts:
        return
    s = partition_to_durfee(p)
    assert s.n == p.n
    assert s.rank() == rank(p)
    assert durfee_to_partition(s) == p


def brute_force_2marked(n):
    """Oracle: every way to label a Durfee symbol's entries with subscripts 1/2, filtered by the rules."""
    out = set()
    for p in enumerate_partitions(n):
        if not p.parts:
            continue
        s = partition_to_durfee(p)
        for labels in itertools.product((1, 2), repeat=len(s.top) + len(s.bottom)):
            top = list(zip(s.top, labels[: len(s.top)]))
            bottom = list(zip(s.bottom, labels[len(s.top):]))
            # within a row, equal parts can be labelled in only one non-increasing order
            if any(i < j for (_, i), (_, j) in zip(top, top[1:])) or any(
                i < j for (_, i), (_, j) in zip(bottom, bottom[1:])
            ):
                continue
            try:
                sym = MarkedDurfeeSymbol2.from_rows(s.side, top, bottom)
            except InvalidSymbolError:
                continue
            if validate_2marked(sym)[0]:
                out.add(sym)
    return out


@pytest.mark.parametrize("n", range(0, 13))
def test_enumeration_matches_labelling_oracle(n):
    listed = list(enumerate_2marked(n))
    assert len(listed) == len(set(listed))
    assert set(listed) == brute_force_2marked(n)
    for s in listed:
        assert s.n == n and validate_2marked(s) == (True, None)


def test_small_symbols():
    assert list(enumerate_2marked(0)) == []
    assert list(enumerate_2marked(1)) == []
    (only,) = enumerate_2marked(2)
    assert only == MarkedDurfeeSymbol2(1, (), (1,))
    assert full_rank(only) == 0
    assert str(only) == "(1_1 / )_1"


def test_rank_vector_and_pretty_print():
    s = MarkedDurfeeSymbol2.from_rows(3, [(3, 2), (1, 1)], [(2, 1)])
    assert s.top2 == (3,) and s.top1 == (1,) and s.bottom1 == (2,)
    ok, why = validate_2marked(s)
    assert not ok and "condition (3)" in why
    s = MarkedDurfeeSymbol2.from_rows(3, [(3, 2), (2, 1), (1, 1)], [(2, 1)])
    assert validate_2marked(s) == (True, None)
    assert s.rank_vector() == (0, 1)
    assert full_rank(s) == 2
    assert str(s) == "(3_2 2_1 1_1 / 2_1)_3"


def test_validation_reports_each_condition():
    assert "condition (2)" in validate_2marked(MarkedDurfeeSymbol2(2, (2,), ()))[1]
    assert "condition (1)" in validate_2marked(MarkedDurfeeSymbol2(3, (1,), (2,)))[1]
    assert "condition (3)" in validate_2marked(MarkedDurfeeSymbol2(3, (2,), (2,), (1,)))[1]
    assert "side" in validate_2marked(MarkedDurfeeSymbol2(0, (), (1,)))[1]
    assert "[1, 2]" in validate_2marked(MarkedDurfeeSymbol2(2, (), (3,)))[1]
    with pytest.raises(InvalidSymbolError):
        MarkedDurfeeSymbol2.from_rows(2, [(1, 1), (2, 1)])
    with pytest.raises(InvalidSymbolError):
        full_rank(MarkedDurfeeSymbol2(2, (2,), ()))


def test_interval_boundaries_are_inclusive():
    # bottom subscript-1 parts may equal M; subscript-2 parts may equal M and the side
    s = MarkedDurfeeSymbol2(3, (3, 2), (2,), (3, 2), (2, 1))
    assert validate_2marked(s) == (True, None)


@pytest.mark.parametrize("n", range(2, 15))
def test_conjugation_is_an_involution_negating_full_rank(n):
    for s in enumerate_2marked(n):
        c = conjugate_2marked(s)
        assert validate_2marked(c) == (True, None)
        assert c.n == s.n
        assert full_rank(c) == -full_rank(s)
        assert tuple(-x for x in c.rank_vector()) == s.rank_vector()
        assert conjugate_2marked(c) == s


def test_full_rank_one_and_two_are_equinumerous():
    dist = full_rank_distribution(18)
    assert nf2_exact(1, 18, dist) == nf2_exact(2, 18, dist)


def test_enumeration_matches_series():
    dist = full_rank_distribution(16)
    assert nf2_totals(16, dist) == R2_double_sum(1, 16).component(0).coefficients()
    for t in (3, 4, 7):
        table = full_rank_counts_enumeration(t, 16, dist)
        assert [list(row) for row in table.counts] == [R2_double_sum(t, 16).component(r).coefficients() for r in range(t)]


def test_invalid_modulus():
    with pytest.raises(ValueError):
        full_rank_counts_enumeration(0, 4)


def test_size_20_mod_7_counts_by_enumeration():
    # the (0, 3) comparison at size 20 = 7*2 + 6 read directly off the symbols
    table = full_rank_counts_enumeration(7, 20, full_rank_distribution(20))
    assert [table[r, 20] for r in range(7)] == [1449, 1449, 1449, 1448, 1448, 1449, 1449]
    assert table[0, 20] > table[3, 20]
