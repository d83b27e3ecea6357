import pytest

from coprime_rns import GuardError, RangeError, exact_range, generate, optimal_set
from reference import PUBLISHED_SETS, best_subset_bruteforce, pairwise_coprime


def test_oracle_2_10():
    r = optimal_set(2, 10)
    assert list(r.best_set.moduli) == [9, 8, 7, 5]
    assert r.best_product == 2520
    assert r.nodes_explored > 0


def test_oracle_takes_everything_when_coprime():
    r = optimal_set(5, 6)
    assert list(r.best_set.moduli) == [6, 5]
    assert r.best_product == 30


def test_oracle_2_32_matches_published_set():
    assert optimal_set(2, 32).best_product == exact_range(PUBLISHED_SETS[(2, 32)]).product


@pytest.mark.parametrize("X, Y", [(2, 14), (3, 15), (6, 17), (9, 20), (11, 16)])
def test_oracle_matches_subset_enumeration(X, Y):
    assert optimal_set(X, Y).best_product == best_subset_bruteforce(X, Y)[0]


@pytest.mark.parametrize("X, Y", [(2, 40), (33, 64), (20, 50), (40, 64)])
def test_branch_order_does_not_change_optimum(X, Y):
    a = optimal_set(X, Y)
    b = optimal_set(X, Y, branch_order="ascending")
    assert a.best_product == b.best_product
    assert pairwise_coprime(b.best_set.moduli)


def test_tie_break_is_lexicographically_largest():
    for Y in range(3, 13):
        for X in range(2, Y):
            product, chosen = best_subset_bruteforce(X, Y)
            r = optimal_set(X, Y)
            assert (r.best_product, list(r.best_set.moduli)) == (product, chosen)


def test_result_invariants():
    for X, Y in [(2, 64), (33, 64), (17, 31)]:
        r = optimal_set(X, Y)
        m = r.best_set.moduli
        assert pairwise_coprime(m)
        assert all(X <= v <= Y for v in m)
        assert r.best_product == exact_range(m).product
        assert r.best_product >= generate(X, Y).product


def test_oracle_beats_greedy_on_33_64():
    # greedy swaps 49 for 63 and then cannot place 57
    assert optimal_set(33, 64).best_product > generate(33, 64).product


def test_guard():
    with pytest.raises(GuardError):
        optimal_set(2, 65)
    with pytest.raises(RangeError):
        optimal_set(5, 5)
