import pytest

from nablachains import Dimension, build_adjacency, is_composable, successors


def test_dimension_rejects_small_n():
    with pytest.raises(ValueError):
        Dimension(2)
    with pytest.raises(ValueError):
        is_composable(1, 2, 2)


def test_dimension_m():
    assert Dimension(3).m == 1
    assert Dimension(10).m == 5


@pytest.mark.parametrize(
    "i,j,n,expected",
    [
        (1, 2, 3, True),
        (3, 2, 3, False),
        (2, 2, 3, True),  # i + j = n + 1
        (2, 3, 4, True),  # j = i + 1
        (1, 1, 3, False),
    ],
)
def test_is_composable(i, j, n, expected):
    assert is_composable(i, j, n) is expected


def test_index_out_of_range():
    with pytest.raises(ValueError):
        is_composable(0, 1, 3)
    with pytest.raises(ValueError):
        is_composable(1, 4, 3)
    with pytest.raises(ValueError):
        successors(5, 4)


def test_adjacency_n3_matches_known_table():
    assert build_adjacency(3) == [[0, 1, 1], [0, 1, 1], [1, 0, 0]]


def test_adjacency_n4_row_sums():
    assert [sum(row) for row in build_adjacency(4)] == [2, 1, 2, 1]


@pytest.mark.parametrize("n", range(3, 13))
def test_every_operator_has_a_successor(n):
    for i in range(1, n + 1):
        assert successors(i, n)


@pytest.mark.parametrize("n", range(3, 13))
def test_wraparound_clause(n):
    # i + j = n + 1 always gives a composable pair; in particular (n, 1)
    for i in range(1, n + 1):
        assert is_composable(i, n + 1 - i, n)
    assert build_adjacency(n)[n - 1][0] == 1


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_even_middle_pair_fires_both_clauses(n):
    i = n // 2
    assert is_composable(i, i + 1, n)


@pytest.mark.parametrize("n", range(3, 13))
def test_row_sums_are_one_or_two(n):
    for row in build_adjacency(n):
        assert sum(row) in (1, 2)


@pytest.mark.parametrize("n", range(3, 10))
def test_adjacency_agrees_with_is_composable(n):
    a = build_adjacency(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert a[i - 1][j - 1] == int(is_composable(i, j, n))


@pytest.mark.parametrize(
    "i,n,expected",
    [(1, 3, [2, 3]), (3, 3, [1]), (2, 4, [3]), (2, 5, [3, 4])],
)
def test_successors(i, n, expected):
    assert successors(i, n) == expected
