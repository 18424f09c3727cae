"""Arithmetic kernel checked against slow trial-division oracles."""
from __future__ import annotations

import math
import random

import pytest

from quadprimes import arith
from quadprimes.errors import CapacityError


def _is_prime_slow(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factor_slow(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def test_is_prime_matches_trial_division_up_to_2000():
    for n in range(2001):
        assert arith.is_prime(n) == _is_prime_slow(n), n


def test_is_prime_handles_nonpositive():
    assert arith.is_prime(0) is False
    assert arith.is_prime(1) is False
    assert arith.is_prime(-7) is False


def test_is_prime_known_values():
    assert arith.is_prime(2**61 - 1)
    assert arith.is_prime(arith.LARGEST_U64_PRIME)
    assert not arith.is_prime(561)  # Carmichael
    assert not arith.is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    assert not arith.is_prime(2**61 + 1)


def test_no_prime_between_largest_u64_prime_and_word_boundary():
    for n in range(arith.LARGEST_U64_PRIME + 1, 2**64):
        assert not arith.is_prime(n)


def test_next_prime_above():
    assert arith.next_prime_above(1) == 2
    assert arith.next_prime_above(2) == 3
    assert arith.next_prime_above(16) == 17
    assert arith.next_prime_above(100) == 101
    assert arith.next_prime_above(89) == 97
    with pytest.raises(ValueError):
        arith.next_prime_above(0)
    with pytest.raises(OverflowError):
        arith.next_prime_above(arith.LARGEST_U64_PRIME)


def test_factorize_round_trips_small_range():
    for n in range(1, 1500):
        fac = arith.factorize(n)
        assert dict(fac.factors) == _factor_slow(n), n
        assert fac.value == n
        assert [p for p, _ in fac.factors] == sorted(p for p, _ in fac.factors)


def test_factorize_random_64_bit_products():
    rng = random.Random(20240817)
    for _ in range(40):
        parts = [rng.randrange(2, 2**31) for _ in range(2)]
        n = parts[0] * parts[1]
        fac = arith.factorize(n)
        assert fac.value == n
        assert all(arith.is_prime(p) for p, _ in fac.factors)


def test_factorize_semiprime_with_large_factors():
    p, q = 2147483647, 2147483629  # both prime, product near 2**62
    fac = arith.factorize(p * q)
    assert dict(fac.factors) == {q: 1, p: 1}


def test_factorize_perfect_square_of_prime():
    p = 1000000007
    fac = arith.factorize(p * p)
    assert dict(fac.factors) == {p: 1 * 2}


def test_factorize_rejects_out_of_range():
    with pytest.raises(ValueError):
        arith.factorize(0)
    with pytest.raises(ValueError):
        arith.factorize(2**64)


def test_prime_power_base():
    assert arith.prime_power_base(1) is None
    assert arith.prime_power_base(2) == (2, 1)
    assert arith.prime_power_base(8) == (2, 3)
    assert arith.prime_power_base(729) == (3, 6)
    assert arith.prime_power_base(12) is None
    assert arith.prime_power_base(2**61 - 1) == (2**61 - 1, 1)
    assert arith.prime_power_base(5**27) == (5, 27)


def test_prime_power_base_agrees_with_factorization_sweep():
    for n in range(2, 3000):
        fac = dict(arith.factorize(n).factors)
        expected = None
        if len(fac) == 1:
            ((p, k),) = fac.items()
            expected = (p, k)
        assert arith.prime_power_base(n) == expected, n


def test_integer_root():
    assert arith.integer_root(26, 3) == 2
    assert arith.integer_root(27, 3) == 3
    assert arith.integer_root(10**18, 2) == 10**9
    big = 10**30
    assert arith.integer_root(big**5 - 1, 5) == big - 1
    for n in range(1, 200):
        for k in (2, 3, 5):
            r = arith.integer_root(n, k)
            assert r**k <= n < (r + 1) ** k


def test_multiplicative_functions_against_slow_oracle():
    for n in range(1, 600):
        fac = _factor_slow(n)
        mob = 0 if any(e > 1 for e in fac.values()) else (-1) ** len(fac)
        assert arith.mobius(n) == mob, n
        phi = 1
        for p, e in fac.items():
            phi *= (p - 1) * p ** (e - 1)
        assert arith.euler_phi(n) == phi, n
        assert arith.liouville(n) == (-1) ** sum(fac.values()), n


def test_von_mangoldt_structure():
    vm = arith.von_mangoldt(8)
    assert vm.is_prime_power and vm.base_prime == 2 and vm.exponent == 3
    assert vm.log_weight == math.log(2)
    assert arith.von_mangoldt(1).log_weight == 0.0
    assert arith.von_mangoldt(6).is_prime_power is False
    assert arith.von_mangoldt(97).log_weight == math.log(97)
    with pytest.raises(ValueError):
        arith.von_mangoldt(0)


def test_chebyshev_psi_partial_sum():
    # psi(100) as ln(lcm(1..100)), an independent route to the same sum.
    lcm = 1
    for n in range(2, 101):
        lcm = lcm * n // math.gcd(lcm, n)
    psi = math.fsum(arith.von_mangoldt(n).log_weight for n in range(1, 101))
    assert psi == pytest.approx(math.log(lcm), rel=1e-12)


def test_jacobi_against_euler_criterion():
    for p in arith.primes_up_to(200):
        if p == 2:
            continue
        for a in range(0, p):
            euler = pow(a, (p - 1) // 2, p)
            expected = 0 if euler == 0 else (1 if euler == 1 else -1)
            assert arith.jacobi(a, p) == expected, (a, p)


def test_jacobi_multiplicative_in_top_argument():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(1, 500) * 2 + 1
        a, b = rng.randrange(0, 1000), rng.randrange(0, 1000)
        assert arith.jacobi(a * b, n) == arith.jacobi(a, n) * arith.jacobi(b, n)


def test_jacobi_rejects_bad_modulus():
    with pytest.raises(ValueError):
        arith.jacobi(3, 10)
    with pytest.raises(ValueError):
        arith.jacobi(3, -5)


def test_primes_up_to_matches_trial_division():
    assert arith.primes_up_to(1) == []
    got = arith.primes_up_to(1000)
    assert got == [n for n in range(2, 1001) if _is_prime_slow(n)]
    assert arith.primes_up_to(29)[-1] == 29  # bound is inclusive


def test_iter_primes_matches_list_sieve():
    assert list(arith.iter_primes(7)) == [2, 3, 5, 7]
    assert list(arith.iter_primes(10**5)) == arith.primes_up_to(10**5)


def test_sieve_spf():
    table = arith.sieve_spf(1000)
    for n in range(2, 1001):
        assert table.spf(n) == min(_factor_slow(n)), n
    with pytest.raises(CapacityError):
        arith.sieve_spf(arith.SPF_LIMIT_MAX + 1)
    with pytest.raises(ValueError):
        table.spf(1001)
