"""Partition enumeration, statistics, and enumerated generating functions."""

from collections import Counter

import pytest

from kmeasure.partitions import (
    PartitionStats,
    consecutive_runs,
    durfee,
    durfee_gf,
    enumerate_partitions,
    format_partition,
    kmeasure,
    kmeasure_bruteforce,
    measure_gf,
    measure_gfs,
    parse_partition,
    partition_stats,
    sylvester_counts,
)
from kmeasure.series import Monomial, Q, TriSeries, YQ, pochhammer_infinite


def test_enumerate_all_of_four():
    assert list(enumerate_partitions(4)) == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_enumerate_zero_is_empty_partition():
    assert list(enumerate_partitions(0)) == [()]
    assert list(enumerate_partitions(0, "distinct")) == [()]


def test_enumerate_distinct_of_six():
    assert list(enumerate_partitions(6, "distinct")) == [(6,), (5, 1), (4, 2), (3, 2, 1)]


def test_enumerate_odd_families():
    assert list(enumerate_partitions(5, "odd")) == [(5,), (3, 1, 1), (1, 1, 1, 1, 1)]
    assert list(enumerate_partitions(8, "distinct-odd")) == [(7, 1), (5, 3)]


def test_enumerate_rejects_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        list(enumerate_partitions(4, "even"))


def test_kmeasure_examples():
    assert kmeasure((4, 3, 1), 2) == 2
    assert kmeasure((3, 1, 1), 1) == 2   # 1-measure counts distinct values
    assert kmeasure((3, 1, 1), 3) == 1
    assert kmeasure((), 7) == 0


def test_kmeasure_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        kmeasure((2, 1), 0)
    with pytest.raises(ValueError):
        kmeasure_bruteforce((2, 1), -1)


def test_bruteforce_examples():
    assert kmeasure_bruteforce((4, 3, 1), 2) == 2
    assert kmeasure_bruteforce((), 3) == 0
    assert kmeasure_bruteforce((5, 3, 1), 2) == 3


def test_bruteforce_scope():
    too_many = tuple(range(26, 0, -1))
    with pytest.raises(ValueError, match="oracle scope exceeded"):
        kmeasure_bruteforce(too_many, 1)


def test_greedy_matches_bruteforce_small():
    for n in range(13):
        for parts in enumerate_partitions(n):
            for k in range(1, 5):
                assert kmeasure(parts, k) == kmeasure_bruteforce(parts, k)


def test_durfee_examples():
    assert durfee((4, 3, 1)) == 2
    assert durfee((1,)) == 1
    assert durfee(()) == 0
    assert durfee((3, 3, 3)) == 3


def test_durfee_bounds():
    for n in range(15):
        for parts in enumerate_partitions(n):
            d = durfee(parts)
            assert d * d <= n
            assert d <= len(parts)


def test_measure_monotone_in_k():
    for n in range(13):
        for parts in enumerate_partitions(n):
            values = [kmeasure(parts, k) for k in range(1, 6)]
            assert all(a >= b for a, b in zip(values, values[1:]))
            assert values[0] == len(set(parts))


def test_consecutive_runs():
    assert consecutive_runs((5, 4, 2, 1)) == 2
    assert consecutive_runs((3, 2, 1)) == 1
    assert consecutive_runs((6, 4, 2)) == 3
    assert consecutive_runs(()) == 0
    with pytest.raises(ValueError, match="requires distinct parts"):
        consecutive_runs((3, 3, 1))


def test_measure_gf_layers_k1():
    # partitions of 3: (3)->y z, (2,1)->y^2 z^2, (1,1,1)->y^3 z
    gf = measure_gf(3, 1)
    assert sorted(
        (e, f, c) for (j, e, f, c) in gf.terms() if j == 3
    ) == [(1, 1, 1), (2, 2, 1), (3, 1, 1)]


def test_measure_gf_zero_order():
    assert measure_gf(0, 2) == TriSeries.one(0)


def test_measure_gf_distinct_k2_layer_from_oracle():
    expected = Counter()
    for parts in enumerate_partitions(3, "distinct"):
        expected[(len(parts), kmeasure_bruteforce(parts, 2))] += 1
    gf = measure_gf(3, 2, "distinct")
    got = Counter()
    for j, e, f, c in gf.terms():
        if j == 3:
            got[(e, f)] = c
    assert got == expected
    assert got == Counter({(1, 1): 1, (2, 1): 1})  # (3) and (2,1), both measure 1


def test_measure_gfs_consistent_with_single():
    gfs = measure_gfs(6, [1, 3], "distinct")
    assert gfs[1] == measure_gf(6, 1, "distinct")
    assert gfs[3] == measure_gf(6, 3, "distinct")


def test_measure_gf_z_marginal_independent_of_k():
    # summing out z must give the (length, size) series whatever k is
    gfs = measure_gfs(10, [1, 2, 3])
    collapsed = {k: gf.set_z(1) for k, gf in gfs.items()}
    assert collapsed[1] == collapsed[2] == collapsed[3]
    # and that series is the inverse Pochhammer product
    assert collapsed[1] == pochhammer_infinite(YQ, 1, 10).invert()


def test_measure_gf_total_mass_is_partition_count():
    gf = measure_gf(12, 2).set_z(1).set_y(1)
    product = pochhammer_infinite(Q, 1, 12).invert()
    assert gf == product
    gfd = measure_gf(12, 2, "distinct").set_z(1).set_y(1)
    distinct_product = pochhammer_infinite(Monomial(-1, q=1), 1, 12)
    assert gfd == distinct_product


def test_durfee_gf_layers():
    gf = durfee_gf(4)
    assert [(j, e, f, c) for (j, e, f, c) in gf.terms() if j == 1] == [(1, 1, 1, 1)]
    assert gf.coefficient(4, 2, 2) == 1  # only (2,2) has a 2x2 square with 2 parts
    assert gf.coefficient(0, 0, 0) == 1


def test_sylvester_counts_examples():
    assert sylvester_counts(5) == (Counter({1: 2, 2: 1}), Counter({1: 2, 2: 1}))
    assert sylvester_counts(0) == (Counter({0: 1}), Counter({0: 1}))
    assert sylvester_counts(1) == (Counter({1: 1}), Counter({1: 1}))


def test_sylvester_histograms_agree_medium():
    for n in range(26):
        by_distinct, by_runs = sylvester_counts(n)
        assert by_distinct == by_runs


def test_parse_partition():
    assert parse_partition("4,3,1") == (4, 3, 1)
    assert parse_partition("") == ()
    assert parse_partition(" 5 , 5 , 2 ") == (5, 5, 2)
    with pytest.raises(ValueError, match="weakly decreasing"):
        parse_partition("1,3")
    with pytest.raises(ValueError, match="positive"):
        parse_partition("3,0")
    with pytest.raises(ValueError, match="not an integer"):
        parse_partition("3,x")


def test_format_partition_round_trip():
    assert format_partition((4, 3, 1)) == "4,3,1"
    assert format_partition(()) == ""
    assert parse_partition(format_partition((7, 7, 2))) == (7, 7, 2)


def test_partition_stats_bundle():
    stats = partition_stats((4, 3, 1), ks=(1, 2, 3))
    assert stats == PartitionStats(
        size=8, length=3, smallest=1, durfee=2, measures={1: 3, 2: 2, 3: 2}
    )
    empty = partition_stats((), ks=(1, 2))
    assert empty.size == 0 and empty.smallest == 0 and empty.durfee == 0
    assert empty.measures == {1: 0, 2: 0}
