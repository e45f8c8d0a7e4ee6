import pytest

from conftest import sieve_primes
from normscan.arith import jacobi
from normscan.representation import (
    Representation,
    cornacchia,
    represent_bruteforce,
)


def xy(rep):
    return (rep.x, rep.y)


def test_cornacchia_reference_values():
    assert xy(cornacchia(7, 113)) == (1, 4)
    assert xy(cornacchia(7, 140737471578113)) == (5732351, 3925696)
    assert xy(cornacchia(3, 2269)) == (41, 14)
    assert xy(cornacchia(31, 2147483647)) == (5176, 8271)


def test_cornacchia_small_cases():
    assert xy(cornacchia(7, 127)) == (8, 3)
    # 11 = 2^2 + 7*1^2; brute force agrees
    assert xy(cornacchia(7, 11)) == (2, 1) == xy(represent_bruteforce(7, 11))
    assert xy(cornacchia(1, 5)) == (2, 1)
    assert cornacchia(7, 5) is None
    assert cornacchia(7, 3) is None


def test_cornacchia_preconditions():
    with pytest.raises(ValueError):
        cornacchia(7, 15)  # composite
    with pytest.raises(ValueError):
        cornacchia(7, 7)  # p divides d
    with pytest.raises(ValueError):
        cornacchia(14, 7)
    with pytest.raises(ValueError):
        cornacchia(0, 11)
    with pytest.raises(ValueError):
        cornacchia(7, 2)  # even prime out of domain


def test_bruteforce_cases():
    assert xy(represent_bruteforce(7, 113)) == (1, 4)
    assert xy(represent_bruteforce(3, 4)) == (2, 0)
    # smallest-y canonical pick for the symmetric d = 1 case
    assert xy(represent_bruteforce(1, 5)) == (2, 1)
    assert represent_bruteforce(7, 3) is None
    assert xy(represent_bruteforce(7, 7)) == (0, 1)


def test_representation_validates_itself():
    Representation(7, 113, 1, 4)
    with pytest.raises(ValueError):
        Representation(7, 113, 2, 4)
    with pytest.raises(ValueError):
        Representation(7, 113, -1, 4)
    with pytest.raises(ValueError):
        Representation(0, 4, 2, 0)


@pytest.mark.parametrize("d", [1, 2, 3, 7, 14, 21, 31])
def test_oracle_equivalence_small(d):
    # the d-values of the scans and their doubled companions
    for p in sieve_primes(2000):
        if p == 2 or d % p == 0:
            continue
        fast = cornacchia(d, p)
        slow = represent_bruteforce(d, p)
        assert (fast is None) == (slow is None), (d, p)
        if fast is not None:
            assert xy(fast) == xy(slow), (d, p)
            assert jacobi(-d, p) in (0, 1)
