"""Integer arithmetic on the 64-bit value range.

Key functions:
    factorize(n): complete prime factorization (trial division + Pollard rho)
    is_prime(n): deterministic Miller-Rabin, exact for n < 2**64
    mobius(n), euler_phi(n), liouville(n): multiplicative functions
    von_mangoldt(n): structured prime-power weight (base, exponent, ln base)
    prime_power_base(n): fast prime-power predicate without full factorization
    jacobi(a, n): Jacobi symbol via binary reciprocity
    sieve_spf(limit): dense smallest-prime-factor table
    primes_up_to(limit), iter_primes(limit): plain and segmented sieves
    next_prime_above(x): successor prime within the 64-bit range

All functions are pure and deterministic.  Values above 2**64 - 1 are outside
the supported domain; factorize rejects them, is_prime answers on a best-effort
basis (its witness set is proven well past 2**64).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Iterator, Optional

import numpy as np

from .errors import CapacityError

U64_MAX = 2**64 - 1

# Largest prime below 2**64.  next_prime_above cannot pass it without leaving
# the 64-bit contract.
LARGEST_U64_PRIME = 18446744073709551557

# Trial division handles factors up to this bound; Pollard rho takes over for
# anything larger.  Small enough that the worst case (no small factor at all)
# stays in the microsecond range.
TRIAL_DIVISION_BOUND = 4096

SPF_LIMIT_MAX = 10**8       # uint32 entries, ~400 MB at the cap
_SEGMENT_SIZE = 1 << 20

# Deterministic Miller-Rabin witness tiers.  Each row (bound, bases) is proven:
# the bases are sound for every n below the bound.  The final row covers the
# full 64-bit range.
_MR_TIERS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (2**64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


# --------------------------------------------------------------------------- #
# domain types
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class Factorization:
    """Prime factorization as an ordered tuple of (prime, exponent) pairs.

    Attributes:
        factors: pairs with strictly increasing primes; empty only for n = 1.
    """

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        """Reconstruct the factored integer."""
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n


@dataclass(frozen=True)
class VonMangoldtValue:
    """Structured value of the von Mangoldt function.

    Attributes:
        is_prime_power: whether n = p**k for a prime p and k >= 1.
        base_prime: p when is_prime_power, else None.
        exponent: k when is_prime_power, else None.
        log_weight: ln(p) when is_prime_power, else 0.0.
    """

    is_prime_power: bool
    base_prime: Optional[int]
    exponent: Optional[int]
    log_weight: float


@dataclass(frozen=True)
class SpfTable:
    """Dense smallest-prime-factor table for 2..limit.

    Attributes:
        limit: largest index covered.
        smallest_prime_factor: uint32 array of length limit + 1; entries 0 and
            1 are 0, entry at a prime p is p itself.
    """

    limit: int
    smallest_prime_factor: np.ndarray

    def spf(self, n: int) -> int:
        if not 2 <= n <= self.limit:
            raise ValueError(f"n={n} outside table range 2..{self.limit}")
        return int(self.smallest_prime_factor[n])


# --------------------------------------------------------------------------- #
# primality
# --------------------------------------------------------------------------- #

def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 2**64.

    Args:
        n: nonnegative integer.

    Returns:
        True if n is prime.  The witness tiers are proven for the 64-bit
        range; larger inputs reuse the widest tier (sound far beyond 2**64
        but outside this module's contract).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_TIERS[-1][1]
    for bound, tier in _MR_TIERS:
        if n < bound:
            bases = tier
            break
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_above(x: int) -> int:
    """Smallest prime strictly greater than x.

    Raises:
        OverflowError: if the successor prime would exceed 2**64 - 1.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if x >= LARGEST_U64_PRIME:
        raise OverflowError("no prime above x within the 64-bit range")
    if x < 2:
        return 2
    candidate = x + 1 if x % 2 == 0 else x + 2
    if x == 2:
        return 3
    while not is_prime(candidate):
        candidate += 2
    return candidate


# --------------------------------------------------------------------------- #
# factorization
# --------------------------------------------------------------------------- #

@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(primes_up_to(TRIAL_DIVISION_BOUND))


def _pollard_brent(n: int) -> int:
    """Brent-cycle Pollard rho.  Returns a nontrivial factor of composite n.

    The polynomial constant c walks a fixed schedule, so the result is
    deterministic for a given n.
    """
    for c in count(1):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            # Batch overshot; replay single steps from the last checkpoint.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # This c found only the trivial factor; try the next one.


def _factor_large(n: int, out: list[int]) -> None:
    """Append the prime factors of n (> trial bound, no small factors) to out."""
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    root = math.isqrt(n)
    if root * root == n:
        # Perfect squares stall the rho cycle; split them directly.
        tail: list[int] = []
        _factor_large(root, tail)
        out.extend(tail)
        out.extend(tail)
        return
    d = _pollard_brent(n)
    _factor_large(d, out)
    _factor_large(n // d, out)


@lru_cache(maxsize=1 << 16)
def _factorize_raw(n: int) -> tuple[tuple[int, int], ...]:
    m = n
    primes: list[int] = []
    for p in _trial_primes():
        if p * p > m:
            break
        while m % p == 0:
            primes.append(p)
            m //= p
    if m > 1:
        if m <= TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND:
            # No factor below the trial bound and m below its square: prime.
            primes.append(m)
        else:
            large: list[int] = []
            _factor_large(m, large)
            primes.extend(large)
    primes.sort()
    out = []
    for p in sorted(set(primes)):
        out.append((p, primes.count(p)))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n.

    Args:
        n: integer with 1 <= n <= 2**64 - 1.

    Returns:
        Factorization with primes strictly increasing; empty for n = 1.

    Raises:
        ValueError: if n is 0, negative, or beyond the 64-bit range.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n > U64_MAX:
        raise ValueError("factorize supports the 64-bit range only")
    return Factorization(_factorize_raw(n))


def prime_power_base(n: int) -> Optional[tuple[int, int]]:
    """Return (p, k) when n = p**k for prime p and k >= 1, else None.

    Uses primality plus perfect-power detection rather than factorization,
    so it stays fast on values with two large prime factors.
    """
    if n < 2:
        return None
    if is_prime(n):
        return (n, 1)
    # A proper prime power is a perfect e-th power for some prime e.
    for e in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59):
        if 1 << e > n:
            break
        r = integer_root(n, e)
        if r**e == n:
            inner = prime_power_base(r)
            if inner is None:
                return None
            p, k = inner
            return (p, k * e)
    return None


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of n, exact integer arithmetic."""
    if n < 0 or k < 1:
        raise ValueError("integer_root requires n >= 0, k >= 1")
    if n in (0, 1) or k == 1:
        return n
    try:
        r = max(1, int(round(n ** (1.0 / k))))
    except OverflowError:
        r = 1 << ((n.bit_length() + k - 1) // k)
    # Newton steps close the float-seed gap in O(log) iterations; the final
    # nudges fix rounding at the boundary.
    while True:
        t = ((k - 1) * r + n // r ** (k - 1)) // k
        if t >= r:
            break
        r = t
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


# --------------------------------------------------------------------------- #
# multiplicative functions
# --------------------------------------------------------------------------- #

def mobius(n: int) -> int:
    """Mobius function: 0 on squareful n, else (-1)**(distinct prime count)."""
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    factors = _factorize_raw(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler totient: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    for p, _ in _factorize_raw(n):
        result = result // p * (p - 1)
    return result


def liouville(n: int) -> int:
    """Liouville function: (-1)**Omega(n), prime factors counted with multiplicity."""
    if n < 1:
        raise ValueError("liouville requires n >= 1")
    omega = sum(e for _, e in _factorize_raw(n))
    return -1 if omega % 2 else 1


def von_mangoldt(n: int) -> VonMangoldtValue:
    """von Mangoldt function as a structured value.

    Args:
        n: positive integer.

    Returns:
        VonMangoldtValue with log_weight = ln(p) when n = p**k, else 0.
    """
    if n < 1:
        raise ValueError("von_mangoldt requires n >= 1")
    factors = _factorize_raw(n)
    if len(factors) == 1:
        p, e = factors[0]
        return VonMangoldtValue(True, p, e, math.log(p))
    return VonMangoldtValue(False, None, None, 0.0)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a | n) for odd positive n.

    Equals the Legendre symbol when n is prime.  Implemented with the binary
    reciprocity loop: factors of two flip the sign according to n mod 8, and
    each swap flips it when both operands are 3 mod 4.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("jacobi requires odd n >= 1")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# --------------------------------------------------------------------------- #
# sieves
# --------------------------------------------------------------------------- #

def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return np.nonzero(flags)[0].tolist()


def iter_primes(limit: int) -> Iterator[int]:
    """Yield primes <= limit in ascending order via a segmented sieve.

    Memory use is bounded by the segment size regardless of limit, which is
    what makes Euler products up to 10**8 practical.
    """
    if limit < 2:
        return
    base = primes_up_to(math.isqrt(limit))
    yield from (p for p in base if p <= limit)
    start = math.isqrt(limit) + 1
    while start <= limit:
        stop = min(start + _SEGMENT_SIZE, limit + 1)
        seg = np.ones(stop - start, dtype=bool)
        for p in base:
            first = ((start + p - 1) // p) * p
            if first < stop:
                seg[first - start:: p] = False
        for offset in np.nonzero(seg)[0]:
            yield start + int(offset)
        start = stop


def sieve_spf(limit: int) -> SpfTable:
    """Smallest-prime-factor table for 2..limit.

    Raises:
        CapacityError: if limit exceeds the memory cap.
    """
    if limit < 2:
        raise ValueError("sieve_spf requires limit >= 2")
    if limit > SPF_LIMIT_MAX:
        raise CapacityError(f"spf limit {limit} exceeds cap {SPF_LIMIT_MAX}")
    arr = np.zeros(limit + 1, dtype=np.uint32)
    for p in range(2, math.isqrt(limit) + 1):
        if arr[p] == 0:
            arr[p] = p
            sl = arr[p * p:: p]
            sl[sl == 0] = p
    remaining = np.nonzero(arr[2:] == 0)[0] + 2
    arr[remaining] = remaining
    arr.setflags(write=False)
    return SpfTable(limit, arr)
