import pytest
from hypothesis import given, strategies as st

from powersym.arith import (is_prime, legendre_symbol, solve_legendre_ternary,
                            sqrt_mod_p)
from powersym.errors import BoundExceeded, InvalidModulus, NonResidue, NotAdmissible

SMALL_PRIMES = [p for p in range(2, 400) if all(p % d for d in range(2, p))]


def test_is_prime_matches_trial_division():
    assert [n for n in range(400) if is_prime(n)] == SMALL_PRIMES


def test_is_prime_large():
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to 2, 3, 5, 7


@pytest.mark.parametrize("a, p, expected", [(2, 7, 1), (3, 7, -1), (14, 7, 0), (-1, 13, 1)])
def test_legendre_examples(a, p, expected):
    assert legendre_symbol(a, p) == expected


@pytest.mark.parametrize("p", [2, 9, 1, -7])
def test_legendre_rejects_bad_modulus(p):
    with pytest.raises(InvalidModulus):
        legendre_symbol(3, p)


@given(st.sampled_from(SMALL_PRIMES[1:]), st.integers(-10 ** 6, 10 ** 6),
       st.integers(-10 ** 6, 10 ** 6))
def test_legendre_multiplicative(p, a, b):
    assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)


@given(st.sampled_from(SMALL_PRIMES[1:]), st.integers(1, 10 ** 6))
def test_sqrt_mod_p(p, a):
    if legendre_symbol(a, p) != 1:
        with pytest.raises(NonResidue):
            sqrt_mod_p(a, p)
    else:
        r = sqrt_mod_p(a, p)
        assert r * r % p == a % p
        assert r <= p - r


@pytest.mark.parametrize("p1, p2, expected", [(13, 17, (-15, 4, 1)), (5, 29, (7, 2, 1))])
def test_ternary_examples(p1, p2, expected):
    sol = solve_legendre_ternary(p1, p2, 50)
    assert (sol.x, sol.y, sol.z) == expected
    assert sol.check() == []


def test_ternary_invariants_on_many_pairs():
    ps = [p for p in SMALL_PRIMES if p % 4 == 1][:15]
    n = 0
    for p1 in ps:
        for p2 in ps:
            if p1 != p2 and legendre_symbol(p1, p2) == 1:
                sol = solve_legendre_ternary(p1, p2, 10 ** 4)
                assert sol.check() == []
                n += 1
    assert n > 10


def test_ternary_errors():
    with pytest.raises(NotAdmissible):
        solve_legendre_ternary(5, 7, 100)
    with pytest.raises(BoundExceeded):
        solve_legendre_ternary(13, 17, 0)
