import pytest

from garside_census.matrices import b_delta, b_of_simple, b_total
from garside_census.oracle import brute_count, dp_count
from garside_census.permutations import identity, partial_flip


def test_brute_examples():
    assert brute_count(3, 2) == 19
    assert brute_count(2, 5, last=identity(2)) == 5
    assert brute_count(4, 3, last=partial_flip(4, 2)) == 83


def test_brute_degenerate():
    assert brute_count(1, 4) == 1
    assert brute_count(3, 1) == 6
    assert brute_count(3, 1, last=identity(3)) == 1


def test_brute_budget():
    with pytest.raises(ValueError):
        brute_count(4, 5, budget=1000)


def test_brute_validation():
    with pytest.raises(ValueError):
        brute_count(3, 2, last=identity(4))
    with pytest.raises(ValueError):
        brute_count(0, 1)


def test_brute_workers_agree():
    assert brute_count(3, 3, workers=2) == brute_count(3, 3)
    assert brute_count(3, 3, last=partial_flip(3, 2), workers=2) == brute_count(
        3, 3, last=partial_flip(3, 2)
    )


def test_dp_examples():
    assert dp_count(6, 6, last=identity(6)) == 49477263360
    for n in (1, 2, 3, 4):
        assert dp_count(n, 1) == b_total(n, 1)
    # the contested table cell: the dp agrees with the matrix pipeline
    assert dp_count(6, 4, last=partial_flip(6, 5)) == 1956


def test_dp_cap_and_validation():
    with pytest.raises(ValueError):
        dp_count(8, 2)
    with pytest.raises(ValueError):
        dp_count(3, 0)
    with pytest.raises(ValueError):
        dp_count(3, 2, last=identity(5))


@pytest.mark.parametrize("n", (2, 3))
def test_brute_matches_pipeline(n):
    for d in range(1, 6):
        assert brute_count(n, d) == b_total(n, d)
        for r in range(1, n + 1):
            last = partial_flip(n, n - r)
            assert brute_count(n, d, last=last) == b_delta(n, d, r)


def test_brute_matches_pipeline_n4():
    for d in range(1, 4):
        assert brute_count(4, d) == b_total(4, d)
        for r in range(1, 5):
            assert brute_count(4, d, last=partial_flip(4, 4 - r)) == b_delta(4, d, r)


@pytest.mark.parametrize("n", range(1, 7))
def test_dp_matches_pipeline(n):
    for d in range(1, 7):
        assert dp_count(n, d) == b_total(n, d)
        for r in range(1, n + 1):
            assert dp_count(n, d, last=partial_flip(n, n - r)) == b_delta(n, d, r)


def test_dp_matches_arbitrary_last_factor():
    from garside_census.permutations import simple_enumeration

    for x in simple_enumeration(4):
        for d in (1, 2, 3, 4):
            assert dp_count(4, d, last=x) == b_of_simple(4, d, x)
