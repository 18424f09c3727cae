"""Ramanujan sums by three independent methods, and parity checks at N = 2p.

The sum c_q(m) runs e^(2*pi*i*a*m/q) over residues a coprime to q.  Three
routes are exposed so each can cross-check the others:

    ramanujan_direct: literal complex summation (float path, capped q)
    ramanujan_closed: mu(q/d) * phi(q) / phi(q/d) with d = gcd(|m|, q)
    ramanujan_divisor: sum of mu(q/d) * d over d | gcd(|m|, q)

For a modulus N = 2p with p prime and p > x, c_N(m) with 0 < |m| < p only
depends on the parity of m.  parity_value checks the sign prediction (-1)**s
for m = s - n or s*s - n; parity_sum accumulates those values over s and
checks the claimed 0 / -1 total.  Mismatches raise LemmaCounterexample with
the measured value attached.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from . import arith
from .errors import CapacityError, LemmaCounterexample, PrecisionError

DIRECT_Q_CAP = 10**6

ParityMode = Literal["linear", "quadratic"]


@dataclass(frozen=True)
class ModulusContext:
    """Modulus N = 2p with a prime p exceeding the range bound x.

    Attributes:
        x: range bound for n (and s <= sqrt(x)).
        p: prime with p > x.
        N: 2 * p.
        floor_sqrt_x: integer square root of x.
        floor_sqrt_parity: "even" or "odd", the parity of floor_sqrt_x.
    """

    x: int
    p: int
    N: int
    floor_sqrt_x: int
    floor_sqrt_parity: str

    def __post_init__(self) -> None:
        if self.x < 1:
            raise ValueError("x must be >= 1")
        if not arith.is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.p <= self.x:
            raise ValueError(f"p={self.p} must exceed x={self.x}")
        if self.N != 2 * self.p:
            raise ValueError(f"N={self.N} must equal 2p={2 * self.p}")
        if self.floor_sqrt_x != math.isqrt(self.x):
            raise ValueError(f"floor_sqrt_x={self.floor_sqrt_x} is not isqrt({self.x})")
        expected = "even" if self.floor_sqrt_x % 2 == 0 else "odd"
        if self.floor_sqrt_parity != expected:
            raise ValueError(f"floor_sqrt_parity must be {expected!r}")


@dataclass(frozen=True)
class RamanujanEvaluation:
    """One evaluation of c_q(m), tagged with the method that produced it."""

    q: int
    m: int
    value: int
    method: str


@lru_cache(maxsize=4)
def _unit_roots(q: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * k / q) for k in range(q))


@lru_cache(maxsize=4)
def _coprime_residues(q: int) -> tuple[int, ...]:
    # Residues mod q coprime to q.  For q = 1 this is (0,), which makes the
    # direct sum equal 1 and keeps all three methods consistent at q = 1.
    return tuple(a for a in range(q) if math.gcd(a, q) == 1)


def ramanujan_direct(q: int, m: int) -> RamanujanEvaluation:
    """c_q(m) by literal complex summation.

    Args:
        q: modulus, 1 <= q <= 10**6 (float-path cap).
        m: any integer.

    Returns:
        RamanujanEvaluation with the rounded integer value.

    Raises:
        CapacityError: q beyond the float-path cap.
        PrecisionError: imaginary part or rounding residual >= 1e-6.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if q > DIRECT_Q_CAP:
        raise CapacityError(f"direct path capped at q <= {DIRECT_Q_CAP}")
    roots = _unit_roots(q)
    total = 0j
    for a in _coprime_residues(q):
        total += roots[a * m % q]
    value = round(total.real)
    residual = max(abs(total.imag), abs(total.real - value))
    if residual >= 1e-6:
        raise PrecisionError(f"c_{q}({m}) residual {residual:.3e} >= 1e-6")
    return RamanujanEvaluation(q, m, value, "direct")


def ramanujan_closed(q: int, m: int) -> RamanujanEvaluation:
    """c_q(m) by the closed form mu(q/d) * phi(q) / phi(q/d), d = gcd(|m|, q).

    Exact integer arithmetic; gcd(0, q) = q so that c_q(0) = phi(q).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    d = math.gcd(abs(m), q)
    qd = q // d
    mu = arith.mobius(qd)
    if mu == 0:
        return RamanujanEvaluation(q, m, 0, "closed")
    quotient, remainder = divmod(arith.euler_phi(q), arith.euler_phi(qd))
    if remainder:
        raise ArithmeticError(f"phi({q}) not divisible by phi({qd})")
    return RamanujanEvaluation(q, m, mu * quotient, "closed")


def _divisors_ascending(n: int) -> list[int]:
    divs = [1]
    for p, e in arith.factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def ramanujan_divisor(q: int, m: int) -> RamanujanEvaluation:
    """c_q(m) by the divisor sum of mu(q/d) * d over d | gcd(|m|, q)."""
    if q < 1:
        raise ValueError("q must be >= 1")
    g = math.gcd(abs(m), q)
    value = sum(arith.mobius(q // d) * d for d in _divisors_ascending(g))
    return RamanujanEvaluation(q, m, value, "divisor")


def _parity_shift(ctx: ModulusContext, s: int, n: int, mode: str) -> int:
    if mode not in ("linear", "quadratic"):
        raise ValueError(f"unknown mode {mode!r}")
    if not 1 <= s <= ctx.floor_sqrt_x:
        raise ValueError(f"s={s} outside 1..{ctx.floor_sqrt_x}")
    if n % 2 == 0 or not 1 <= n <= ctx.x:
        raise ValueError(f"n={n} must be odd and within 1..{ctx.x}")
    return s - n if mode == "linear" else s * s - n


def parity_value(ctx: ModulusContext, s: int, n: int, mode: ParityMode) -> int:
    """c_N(s - n) or c_N(s*s - n), checked against the sign prediction (-1)**s.

    Args:
        ctx: modulus context with p > x.
        s: 1 <= s <= floor_sqrt_x.
        n: odd, 1 <= n <= x.
        mode: "linear" (shift s - n) or "quadratic" (shift s*s - n).

    Returns:
        The exact integer c_N value.

    Raises:
        ValueError: zero shift (s = n or s*s = n) or out-of-range arguments.
        LemmaCounterexample: the value differs from (-1)**s.
    """
    shift = _parity_shift(ctx, s, n, mode)
    if shift == 0:
        raise ValueError(f"{mode} mode requires a nonzero shift (s={s}, n={n})")
    value = ramanujan_closed(ctx.N, shift).value
    predicted = -1 if s % 2 else 1
    if value != predicted:
        raise LemmaCounterexample(
            "parity-sign",
            {"x": ctx.x, "p": ctx.p, "s": s, "n": n, "mode": mode},
            predicted,
            value,
        )
    return value


def parity_sum(ctx: ModulusContext, n: int, mode: ParityMode, strict: bool = True) -> int:
    """Sum of c_N shifts over 1 <= s <= floor_sqrt_x, zero shifts skipped.

    The claimed total is 0 when floor_sqrt_x is even and -1 when odd.  With
    strict=True (the default) a differing total raises LemmaCounterexample;
    strict=False returns the measured total for data collection.

    Every term is also checked against the alternating prediction (-1)**s, so
    a raised counterexample pinpoints whether a single term or only the total
    went wrong.
    """
    _parity_shift(ctx, 1, n, mode)  # validates n and mode
    total = 0
    alternating = 0
    for s in range(1, ctx.floor_sqrt_x + 1):
        shift = s - n if mode == "linear" else s * s - n
        if shift == 0:
            continue
        term = ramanujan_closed(ctx.N, shift).value
        predicted = -1 if s % 2 else 1
        if term != predicted:
            raise LemmaCounterexample(
                "parity-sign",
                {"x": ctx.x, "p": ctx.p, "s": s, "n": n, "mode": mode},
                predicted,
                term,
            )
        total += term
        alternating += predicted
    if total != alternating:
        raise LemmaCounterexample(
            "alternating-total",
            {"x": ctx.x, "p": ctx.p, "n": n, "mode": mode},
            alternating,
            total,
        )
    claimed = 0 if ctx.floor_sqrt_x % 2 == 0 else -1
    if strict and total != claimed:
        raise LemmaCounterexample(
            "parity-sum-value",
            {"x": ctx.x, "p": ctx.p, "n": n, "mode": mode},
            claimed,
            total,
        )
    return total
