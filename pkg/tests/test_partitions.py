import math

import pytest

from symsod.partitions import (
    MultiplicityVector,
    Partition,
    binomial,
    multiplicity_vectors,
    partition_count,
    partitions_of,
    q_length,
    weak_compositions,
)


def brute_force_partitions(n):
    """Independent oracle: ascending-parts recursion, re-sorted to compare."""

    def rec(remaining, min_part):
        if remaining == 0:
            yield ()
            return
        for part in range(min_part, remaining + 1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    return {tuple(sorted(p, reverse=True)) for p in rec(n, 1)}


def test_partitions_of_trivial_cases():
    assert partitions_of(0) == [Partition(())]
    assert partitions_of(1) == [Partition((1,))]


def test_partitions_of_4_matches_enumeration():
    got = partitions_of(4)
    assert [p.parts for p in got] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert {p.parts for p in got} == brute_force_partitions(4)


@pytest.mark.parametrize("n", range(12))
def test_partitions_of_matches_brute_force(n):
    assert {p.parts for p in partitions_of(n)} == brute_force_partitions(n)


def test_partitions_sorted_decreasing_lex():
    for n in range(10):
        parts = [p.parts for p in partitions_of(n)]
        assert parts == sorted(parts, reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_count_values():
    assert partition_count(0) == 1
    assert partition_count(5) == 7
    assert partition_count(10) == 42


def test_partition_count_matches_enumeration_up_to_30():
    for n in range(31):
        assert partition_count(n) == len(partitions_of(n))


def test_weak_compositions_trivial():
    assert [c.entries for c in weak_compositions(0, 3)] == [(0, 0, 0)]
    assert [c.entries for c in weak_compositions(5, 1)] == [(5,)]


def test_weak_compositions_2_3():
    got = [c.entries for c in weak_compositions(2, 3)]
    assert len(got) == 6  # C(4, 2)
    assert got == sorted(got)
    assert set(got) == {(0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0)}


def test_weak_composition_counts():
    for n in range(16):
        for l in range(1, 7):
            assert len(weak_compositions(n, l)) == math.comb(n + l - 1, l - 1)


def test_q_length_degenerate_cases():
    for n in range(10):
        assert q_length(n, 1) == partition_count(n)
    for l in range(1, 7):
        assert q_length(1, l) == l
    assert q_length(0, 4) == 1


def test_q_length_2_3_by_hand():
    # compositions of 2 into 3 slots: three with a lone 2 (p(2) = 2 each)
    # and three with two 1s (product 1 each)
    assert q_length(2, 3) == 3 * 2 + 3 * 1 == 9


def test_q_length_recurrence():
    for l in range(1, 6):
        for n in range(15):
            rhs = sum(partition_count(i) * q_length(n - i, l) for i in range(n + 1))
            assert q_length(n, l + 1) == rhs


def test_multiplicity_vectors_weight_2():
    got = multiplicity_vectors(2)
    assert [v.a for v in got] == [{2: 1}, {1: 2}]


def test_multiplicity_vectors_bijection():
    for n in range(16):
        vectors = multiplicity_vectors(n)
        parts = partitions_of(n)
        assert len(vectors) == partition_count(n)
        for vec, part in zip(vectors, parts):
            assert vec.weight == n
            assert vec.as_partition() == part


def test_multiplicity_vector_validation():
    with pytest.raises(ValueError):
        MultiplicityVector({0: 1})
    with pytest.raises(ValueError):
        MultiplicityVector({2: 0})


def test_binomial_out_of_range():
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(5, 2) == 10
