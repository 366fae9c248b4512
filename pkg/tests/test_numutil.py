import random

import pytest

from apsumset.numutil import (
    PrimeSet,
    factor_over,
    ilog,
    iroot,
    is_prime,
    ord_p,
    power_exponent,
    smooth_enumerate,
)


def is_smooth_by_trial_division(n, primes):
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


class TestPowerExponent:
    def test_one_is_zeroth_power(self):
        assert power_exponent(1, 3) == 0

    def test_3_pow_12(self):
        # 3^12 = 531441 by repeated multiplication
        n = 1
        for _ in range(12):
            n *= 3
        assert n == 531441
        assert power_exponent(531441, 3) == 12

    def test_3_pow_12_plus_one(self):
        assert power_exponent(531442, 3) is None

    def test_round_trip(self):
        for base in range(2, 11):
            for e in range(0, 65):
                assert power_exponent(base**e, base) == e

    def test_rejects_bad_base(self):
        with pytest.raises(ValueError):
            power_exponent(8, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            power_exponent(0, 2)


class TestOrdP:
    def test_48(self):
        assert ord_p(48, 2) == 4

    def test_coprime(self):
        assert ord_p(7, 2) == 0

    def test_3_pow_12(self):
        assert ord_p(531441, 3) == 12

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            ord_p(0, 2)

    def test_ord_of_scaled_coprime(self):
        rng = random.Random(7)
        for _ in range(200):
            p = rng.choice([2, 3, 5, 7, 11])
            a = rng.randrange(0, 20)
            m = rng.randrange(1, 10**6)
            while m % p == 0:
                m += 1
            assert ord_p(p**a * m, p) == a


class TestSmoothEnumerate:
    def test_23_up_to_10(self):
        assert smooth_enumerate(PrimeSet.of(2, 3), 10) == [1, 2, 3, 4, 6, 8, 9]

    def test_single_prime_limit_one(self):
        assert smooth_enumerate(PrimeSet.of(2), 1) == [1]

    def test_deweger_primes_up_to_100(self):
        primes = PrimeSet.of(2, 3, 5, 7, 11, 13)
        got = smooth_enumerate(primes, 100)
        oracle = [n for n in range(1, 101) if is_smooth_by_trial_division(n, primes)]
        assert got == oracle
        assert len(got) == 62

    def test_members_are_smooth_and_bounded(self):
        primes = PrimeSet.of(2, 5, 11)
        for n in smooth_enumerate(primes, 10**6):
            assert n <= 10**6
            assert is_smooth_by_trial_division(n, primes)

    def test_monotone_in_limit_and_primes(self):
        small = smooth_enumerate(PrimeSet.of(2, 3), 500)
        large = smooth_enumerate(PrimeSet.of(2, 3), 5000)
        wider = smooth_enumerate(PrimeSet.of(2, 3, 5), 500)
        assert len(small) <= len(large)
        assert len(small) <= len(wider)
        assert set(small) <= set(large)
        assert set(small) <= set(wider)

    def test_sorted_no_duplicates(self):
        got = smooth_enumerate(PrimeSet.of(2, 3, 5), 10**4)
        assert got == sorted(set(got))


class TestPrimeSet:
    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            PrimeSet((2, 3, 9))

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            PrimeSet((3, 2))

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            PrimeSet((2, 2, 3))

    def test_of_sorts(self):
        assert tuple(PrimeSet.of(13, 2, 7)) == (2, 7, 13)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(2, 50):
        assert is_prime(n) == (n in primes)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)


def test_iroot_matches_definition():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randrange(1, 10**18)
        k = rng.randrange(1, 12)
        r = iroot(n, k)
        assert r**k <= n < (r + 1) ** k


def test_ilog():
    assert ilog(1, 2) == 0
    assert ilog(8, 2) == 3
    assert ilog(9, 2) == 3
    assert ilog(10**12, 10) == 12


def test_factor_over():
    exps, cof = factor_over(48, (2, 3))
    assert exps == {2: 4, 3: 1} and cof == 1
    exps, cof = factor_over(40, (2, 3))
    assert exps == {2: 3, 3: 0} and cof == 5
