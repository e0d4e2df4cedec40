from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affnorm.arith import (
    crt_combine,
    farey_reconstruct,
    is_prime,
    random_primes,
    reduce_rational_mod_p,
)
from affnorm.errors import CoprimalityError, PrimeRangeExhausted


def test_crt_basic():
    assert crt_combine([2, 3], [3, 5]) == (8, 15)
    assert crt_combine([1, 1, 1], [3, 5, 7]) == (1, 105)
    assert crt_combine([0], [97]) == (0, 97)


def test_crt_rejects_common_factor():
    with pytest.raises(CoprimalityError):
        crt_combine([1, 2], [6, 10])


@given(st.lists(st.sampled_from([101, 103, 107, 109, 113]), min_size=1, unique=True).flatmap(
    lambda mods: st.tuples(
        st.just(mods),
        st.lists(st.integers(0, 200), min_size=len(mods), max_size=len(mods)),
    )
))
def test_crt_round_trip(mods_res):
    mods, res = mods_res
    res = [r % m for r, m in zip(res, mods)]
    r, n = crt_combine(res, mods)
    assert n == 1 if not mods else True
    for ri, mi in zip(res, mods):
        assert r % mi == ri


def test_farey_recovers_22_over_7():
    n = 10007 * 10009 * 10037
    r = 22 * pow(7, -1, n) % n
    got = farey_reconstruct(r, n)
    assert got == Fraction(22, 7)
    # independent oracle: 22 = 7 r (mod n)
    assert (22 - 7 * r) % n == 0


def test_farey_small_integer():
    assert farey_reconstruct(5, 10**18) == Fraction(5)
    assert farey_reconstruct(0, 101) == Fraction(0)


def test_farey_error_tolerant():
    # residues of -17/12 modulo four good primes, garbage mod a fifth
    good = [10007, 10009, 10037, 10039]
    bad = 10061
    res = [(-17) * pow(12, -1, p) % p for p in good] + [1234]
    r, n = crt_combine(res, good + [bad])
    got = farey_reconstruct(r, n)
    assert got == Fraction(-17, 12)
    n1 = 1
    for p in good:
        n1 *= p
    assert (-17 - 12 * (r % n1)) % n1 == 0


def test_farey_failure_is_none():
    # the modulus is too small for any reconstruction to sit safely inside
    # the uniqueness zone a^2 + b^2 < N, so the plausibility filter rejects
    assert farey_reconstruct(2, 5) is None


@settings(max_examples=300)
@given(
    st.integers(-(10**6), 10**6),
    st.integers(1, 10**6),
)
def test_farey_round_trip_with_safety_bound(a, b):
    g = gcd(a, b)
    if g:
        a, b = a // g, b // g
    if b == 0:
        b = 1
    primes = [2**29 - 3, 2**29 - 33, 2**29 - 43, 2**29 - 63]
    n = 1
    use = []
    for p in primes:
        use.append(p)
        n *= p
        if n >= 4 * max(a * a, b * b):
            break
    res = []
    for p in use:
        if b % p == 0:
            return
        res.append(a * pow(b, -1, p) % p)
    r, n = crt_combine(res, use)
    assert farey_reconstruct(r, n) == Fraction(a, b)


def test_reduce_rational_mod_p():
    assert reduce_rational_mod_p(Fraction(1, 2), 5) == 3
    assert reduce_rational_mod_p(Fraction(7), 7) == 0
    assert reduce_rational_mod_p(Fraction(1, 7), 7) is None


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
)
def test_reduction_is_ring_homomorphism(x, y):
    p = 10007
    fx = reduce_rational_mod_p(x, p)
    fy = reduce_rational_mod_p(y, p)
    if fx is None or fy is None:
        return
    s = reduce_rational_mod_p(x + y, p)
    m = reduce_rational_mod_p(x * y, p)
    assert s == (fx + fy) % p
    assert m == (fx * fy) % p


def test_random_primes_deterministic_and_distinct():
    a = random_primes(3, 100, 200, seed=42)
    b = random_primes(3, 100, 200, seed=42)
    assert a == b
    assert len(set(a)) == 3
    assert all(100 <= p < 200 and is_prime(p) for p in a)


def test_random_primes_tiny_range():
    assert random_primes(1, 2, 3, seed=0) == [2]


def test_random_primes_exclusion_never_repeats():
    first = random_primes(5, 100, 150, seed=7)
    second = random_primes(3, 100, 150, seed=7, exclude=set(first))
    assert not set(first) & set(second)


def test_random_primes_exhaustion():
    with pytest.raises(PrimeRangeExhausted):
        random_primes(30, 100, 110, seed=1)


def test_miller_rabin_spot_checks():
    assert is_prime(2) and is_prime(3) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(3215031751)
    carmichael = 561
    assert not is_prime(carmichael)
