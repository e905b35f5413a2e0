"""Partition counts, the enumeration oracle, and the count correspondences."""

import pytest

from qpartid.bigpoly import coeff_at
from qpartid.partitions import (
    UNBOUNDED,
    CountTable,
    PartitionSpec,
    check_pnmp_correspondence,
    check_qnmp_correspondence,
    count_P,
    count_P_most,
    count_P_nm,
    count_P_of,
    count_P_star,
    count_Q,
    count_Q_most,
    count_Q_nm,
    count_Q_of,
    count_Q_star,
    enumerate_partitions,
)
from qpartid.qbinom import gaussian


def test_count_P_examples():
    assert count_P(5, 2, 3) == 1  # only 3+2
    for p in range(6):
        assert count_P(0, 0, p) == 1
    assert count_P(4, 2, UNBOUNDED) == 2  # 3+1, 2+2
    assert count_P(3, 0, 5) == 0
    assert count_P(-1, 2, 3) == 0
    assert count_P(4, 2, -1) == 0


def test_count_Q_examples():
    assert count_Q(6, 3, 3) == 1  # only 3+2+1
    for n in range(1, 8):
        for p in range(8):
            assert count_Q(n, 1, p) == (1 if 1 <= n <= p else 0)
    assert count_Q(5, 2, 4) == 2  # 4+1, 3+2
    assert count_Q(5, 2, 3) == 1  # 3+2 only


def test_star_and_most_examples():
    assert count_P_star(2, 2, 2) == 2  # 2 and 1+1
    for m in range(5):
        for p in range(5):
            assert count_P_star(0, m, p) == 1
            assert count_Q_star(0, m, p) == 1
    assert count_Q_star(3, 2, 3) == 2  # 3 and 2+1
    for n in range(1, 6):
        assert count_Q_star(n, 0, 3) == 0
    assert count_P_most(4, 2) == 3  # 2+2, 2+1+1, 1+1+1+1


def test_unrestricted_counts():
    assert count_P_of(5) == 7
    assert count_Q_of(5) == 3  # 5, 4+1, 3+2
    known_p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, expected in enumerate(known_p):
        assert count_P_of(n) == expected


def test_enumerate_examples():
    assert enumerate_partitions(PartitionSpec(4, exact_parts=2)) == [[3, 1], [2, 2]]
    assert enumerate_partitions(PartitionSpec(0)) == [[]]
    assert enumerate_partitions(
        PartitionSpec(6, exact_parts=3, max_part=3, distinct=True)
    ) == [[3, 2, 1]]


def test_enumerate_guards():
    with pytest.raises(ValueError):
        enumerate_partitions(PartitionSpec(31))
    enumerate_partitions(PartitionSpec(31), oracle_limit=40)  # raised limit is fine
    with pytest.raises(ValueError):
        PartitionSpec(4, exact_parts=2, max_parts=3)
    with pytest.raises(ValueError):
        PartitionSpec(-1)


def test_oracle_equivalence_small():
    for n in range(13):
        for m in range(n + 1):
            for p in range(n + 1):
                plain = enumerate_partitions(PartitionSpec(n, exact_parts=m, max_part=p))
                assert len(plain) == count_P(n, m, p), (n, m, p)
                distinct = enumerate_partitions(
                    PartitionSpec(n, exact_parts=m, max_part=p, distinct=True)
                )
                assert len(distinct) == count_Q(n, m, p), (n, m, p)


def test_enumerate_max_parts_matches_star_counts():
    for n in range(11):
        for m in range(n + 1):
            for p in range(n + 1):
                got = enumerate_partitions(PartitionSpec(n, max_parts=m, max_part=p))
                assert len(got) == count_P_star(n, m, p)


def test_gaussian_coefficients_from_counts():
    for m in range(7):
        for p in range(7):
            g = gaussian(m, p)
            for n in range(m * p + 1):
                assert coeff_at(g, n) == count_P_star(n, m, p)


def test_pnmp_correspondence():
    assert check_pnmp_correspondence(2, 2, 2)
    assert check_pnmp_correspondence(0, 0, 0)
    assert check_pnmp_correspondence(5, 3, 4)
    for n in range(9):
        for m in range(9):
            for p in range(9):
                assert check_pnmp_correspondence(n, m, p)


def test_qnmp_correspondence():
    assert check_qnmp_correspondence(6, 3, 3)
    for n in range(7):
        for p in range(7):
            assert check_qnmp_correspondence(n, 0, p)
    assert check_qnmp_correspondence(9, 2, 5)
    for n in range(9):
        for m in range(9):
            for p in range(9):
                assert check_qnmp_correspondence(n, m, p)


def test_conjugation_chain():
    for n in range(9):
        for p in range(9):
            most = count_P_most(n, p)
            assert most == count_P_star(n, n, p)
            assert most == count_P(2 * n, n, p + 1)
            assert most == count_P_nm(n + p, p)


def test_two_argument_reduction():
    # P(n, m) equals P(n - m) whenever 2m >= n
    for n in range(31):
        for m in range((n + 1) // 2, n + 1):
            assert count_P_nm(n, m) == count_P_of(n - m)


def test_monotone_saturation():
    for n in range(9):
        for p in range(9):
            for m in range(n, n + 4):
                assert count_P_star(n, m, p) == count_P_most(n, p)
                assert count_Q_star(n, m, p) == count_Q_most(n, p)


def test_count_table_isolation():
    table = CountTable()
    assert table.count_P(5, 2, 3) == 1
    assert table.count_Q(6, 3, 3) == 1
    assert (5, 2, 3) in table.memo_P
    assert table.p_cap is UNBOUNDED


def test_distinct_nm():
    assert count_Q_nm(5, 2) == 2  # 4+1, 3+2
    assert count_Q_nm(0, 0) == 1
    assert count_Q_nm(3, 3) == 0
