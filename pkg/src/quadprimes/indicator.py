"""Characteristic functions for perfect squares.

Three independent routes to the same predicate:

    square_char_exp: exponential-sum form at modulus N = 2p, exact integers
    square_char_liouville: divisor-sum of the Liouville function
    square_char_isqrt: integer square root, the ground-truth oracle

The exponential-sum route evaluates (1/phi(N)) * sum over s <= sqrt(x) of the
u-sum of e^(2*pi*i*(s*s - n)*u/N) with u coprime to N.  Each inner u-sum is
phi(N) when s*s = n and the Ramanujan sum c_N(s*s - n) otherwise, so the whole
expression is an exact rational.  The claim under check is that it equals the
0/1 square indicator; any other value raises LemmaCounterexample carrying the
measured rational.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import arith, ramanujan
from .errors import LemmaCounterexample


@dataclass(frozen=True)
class SquareVerdict:
    """Square / not-square answer with the method that produced it."""

    n: int
    is_square: bool
    root: Optional[int]
    method: str


def isqrt(n: int) -> int:
    """Floor of the square root by integer Newton iteration.

    A float seed starts the iteration; the final exact correction loop
    guards against misrounding near 2**53 and beyond.
    """
    if n < 0:
        raise ValueError("isqrt requires n >= 0")
    if n == 0:
        return 0
    try:
        r = max(1, int(math.sqrt(n)))
    except OverflowError:
        r = 1 << ((n.bit_length() + 1) // 2)
    while True:
        nxt = (r + n // r) // 2
        if nxt >= r:
            break
        r = nxt
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def nearest_even_parity_x(x: int) -> int:
    """Largest x' <= x whose floor square root is even."""
    if x < 1:
        raise ValueError("x must be >= 1")
    r = isqrt(x)
    return x if r % 2 == 0 else r * r - 1


def _require_even_parity(ctx: ramanujan.ModulusContext) -> None:
    if ctx.floor_sqrt_parity != "even":
        raise ValueError(
            f"floor(sqrt(x)) is odd for x={ctx.x}; "
            f"nearest valid x is {nearest_even_parity_x(ctx.x)}"
        )


def square_char_exp_value(ctx: ramanujan.ModulusContext, n: int) -> Fraction:
    """Exact rational value of the exponential-sum expression at odd n <= x.

    This is the measurement behind square_char_exp, exposed separately so
    out-of-range values can be inspected rather than only raised.
    """
    _require_even_parity(ctx)
    if n % 2 == 0 or not 1 <= n <= ctx.x:
        raise ValueError(f"n={n} must be odd and within 1..{ctx.x}")
    phi_n = arith.euler_phi(ctx.N)
    numerator = 0
    for s in range(1, ctx.floor_sqrt_x + 1):
        shift = s * s - n
        if shift == 0:
            numerator += phi_n
        else:
            numerator += ramanujan.ramanujan_closed(ctx.N, shift).value
    return Fraction(numerator, phi_n)


def square_char_exp(ctx: ramanujan.ModulusContext, n: int) -> SquareVerdict:
    """Square indicator via the exponential sum at modulus N = 2p.

    Requires even floor(sqrt(x)) and odd n <= x.  The expression must come
    out exactly 0 or 1; anything else raises LemmaCounterexample with the
    measured rational attached.
    """
    value = square_char_exp_value(ctx, n)
    if value == 0:
        return SquareVerdict(n, False, None, "exp_sum")
    if value == 1:
        return SquareVerdict(n, True, isqrt(n), "exp_sum")
    raise LemmaCounterexample(
        "square-indicator-value",
        {"x": ctx.x, "p": ctx.p, "n": n},
        "0 or 1",
        value,
    )


def liouville_divisor_sum(n: int) -> int:
    """Literal divisor sum of the Liouville function, the slow cross-check."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += arith.liouville(d)
            other = n // d
            if other != d:
                total += arith.liouville(other)
    return total


def square_char_liouville(n: int) -> SquareVerdict:
    """Square indicator via exponent parities of the factorization.

    Equivalent to the divisor sum of the Liouville function: the sum is 1 on
    squares and 0 otherwise, and n is a square exactly when every prime
    exponent is even.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if all(e % 2 == 0 for _, e in arith.factorize(n).factors):
        return SquareVerdict(n, True, isqrt(n), "liouville")
    return SquareVerdict(n, False, None, "liouville")


def square_char_isqrt(n: int) -> SquareVerdict:
    """Square indicator via the integer square root (ground truth)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r = isqrt(n)
    if r * r == n:
        return SquareVerdict(n, True, r, "isqrt")
    return SquareVerdict(n, False, None, "isqrt")
