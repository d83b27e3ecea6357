import pytest

from coprime_rns import DomainError, RangeError, estimate
from coprime_rns.complexity import REFERENCE_TABLE, table_report


@pytest.mark.parametrize("X, Y, k, T", [(2, 32, 11, 73_344), (2, 256, 54, 56_957_184), (17, 31, 7, 17_608)])
def test_estimate_examples(X, Y, k, T):
    est = estimate(X, Y, k)
    assert est.operations == T
    assert est.range_size == Y - X + 1
    assert est.set_size == k


def test_estimate_errors():
    with pytest.raises(RangeError):
        estimate(4, 4, 1)
    with pytest.raises(DomainError):
        estimate(2, 10, 0)


def test_estimate_is_exact_for_huge_inputs():
    est = estimate(2, 2**32 - 1, 10**6)
    n = 2**32 - 2
    assert est.operations == (2**32 - 1) * (n * n + 10**18)


def test_strictly_increasing():
    base = estimate(10, 100, 20).operations
    assert estimate(10, 101, 20).operations > base  # larger Y and N
    assert estimate(9, 100, 20).operations > base  # larger N
    assert estimate(10, 100, 21).operations > base


def test_table_flags_exactly_three_inconsistent_rows():
    flags = {(row.lo, row.hi): flag for row, _, flag in table_report()}
    bad = {key for key, flag in flags.items() if flag == "inconsistent"}
    assert bad == {(2, 512), (2, 1024), (2, 2048)}
    assert all(flag == "ok" for key, flag in flags.items() if key not in bad)
    assert len(REFERENCE_TABLE) == 11
