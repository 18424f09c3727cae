"""Ramanujan sums: method agreement, algebraic laws, parity behavior."""
from __future__ import annotations

import math
import random

import pytest

from quadprimes import arith, ramanujan
from quadprimes.errors import CapacityError, LemmaCounterexample


def _ctx(x: int) -> ramanujan.ModulusContext:
    p = arith.next_prime_above(x)
    r = arith.integer_root(x, 2)
    parity = "even" if r % 2 == 0 else "odd"
    return ramanujan.ModulusContext(x=x, p=p, N=2 * p, floor_sqrt_x=r, floor_sqrt_parity=parity)


def test_frozen_spot_values():
    assert ramanujan.ramanujan_closed(5, 0).value == 4
    assert ramanujan.ramanujan_closed(6, 4).value == -1
    assert ramanujan.ramanujan_closed(4, 2).value == -2
    assert ramanujan.ramanujan_closed(1, 7).value == 1
    assert ramanujan.ramanujan_closed(202, -5).value == 1
    assert ramanujan.ramanujan_closed(202, -6).value == -1
    assert ramanujan.ramanujan_direct(202, 9).value == 1


def test_three_way_agreement_small_sweep():
    for q in range(1, 61):
        for m in range(-60, 61):
            direct = ramanujan.ramanujan_direct(q, m).value
            closed = ramanujan.ramanujan_closed(q, m).value
            divisor = ramanujan.ramanujan_divisor(q, m).value
            assert direct == closed == divisor, (q, m)


def test_method_tags():
    assert ramanujan.ramanujan_direct(6, 2).method == "direct"
    assert ramanujan.ramanujan_closed(6, 2).method == "closed"
    assert ramanujan.ramanujan_divisor(6, 2).method == "divisor"


def test_special_arguments():
    for q in range(1, 80):
        assert ramanujan.ramanujan_closed(q, 0).value == arith.euler_phi(q)
        assert ramanujan.ramanujan_closed(q, 1).value == arith.mobius(q)


def test_symmetry_and_periodicity():
    rng = random.Random(99)
    for _ in range(200):
        q = rng.randrange(1, 150)
        m = rng.randrange(-300, 301)
        c = ramanujan.ramanujan_closed(q, m).value
        assert c == ramanujan.ramanujan_closed(q, -m).value
        assert c == ramanujan.ramanujan_closed(q, m + q).value


def test_multiplicative_in_q():
    rng = random.Random(5)
    for _ in range(150):
        q1 = rng.randrange(1, 40)
        q2 = rng.randrange(1, 40)
        if math.gcd(q1, q2) != 1:
            continue
        m = rng.randrange(-50, 51)
        lhs = ramanujan.ramanujan_closed(q1 * q2, m).value
        rhs = ramanujan.ramanujan_closed(q1, m).value * ramanujan.ramanujan_closed(q2, m).value
        assert lhs == rhs, (q1, q2, m)


def test_direct_capacity_cap():
    with pytest.raises(CapacityError):
        ramanujan.ramanujan_direct(ramanujan.DIRECT_Q_CAP + 1, 1)


def test_context_validation():
    with pytest.raises(ValueError):
        ramanujan.ModulusContext(x=16, p=15, N=30, floor_sqrt_x=4, floor_sqrt_parity="even")
    with pytest.raises(ValueError):
        ramanujan.ModulusContext(x=16, p=13, N=26, floor_sqrt_x=4, floor_sqrt_parity="even")
    with pytest.raises(ValueError):
        ramanujan.ModulusContext(x=16, p=17, N=36, floor_sqrt_x=4, floor_sqrt_parity="even")
    with pytest.raises(ValueError):
        ramanujan.ModulusContext(x=16, p=17, N=34, floor_sqrt_x=5, floor_sqrt_parity="odd")
    with pytest.raises(ValueError):
        ramanujan.ModulusContext(x=16, p=17, N=34, floor_sqrt_x=4, floor_sqrt_parity="odd")


def test_parity_value_sign_alternation():
    ctx = _ctx(16)
    for mode in ("linear", "quadratic"):
        for s in range(1, ctx.floor_sqrt_x + 1):
            for n in range(1, 17, 2):
                shift = (s - n) if mode == "linear" else (s * s - n)
                if shift == 0:
                    with pytest.raises(ValueError):
                        ramanujan.parity_value(ctx, s, n, mode)
                    continue
                value = ramanujan.parity_value(ctx, s, n, mode)
                assert value == (-1) ** s, (mode, s, n)


def test_parity_sum_even_floor_inventory():
    # floor(sqrt(16)) = 4 is even, so every claimed sum is 0.  The measured
    # value is 1 exactly when the diagonal term got dropped from the
    # alternating sum: linear mode at n <= 4, quadratic mode at odd squares.
    ctx = _ctx(16)
    expected_fail = {"linear": {1, 3}, "quadratic": {1, 9}}
    for mode in ("linear", "quadratic"):
        for n in range(1, 17, 2):
            measured = ramanujan.parity_sum(ctx, n, mode, strict=False)
            if n in expected_fail[mode]:
                assert measured == 1, (mode, n)
                with pytest.raises(LemmaCounterexample) as info:
                    ramanujan.parity_sum(ctx, n, mode, strict=True)
                assert info.value.check == "parity-sum-value"
                assert info.value.expected == 0
                assert info.value.actual == 1
                assert info.value.inputs["n"] == n
            else:
                assert measured == 0, (mode, n)
                assert ramanujan.parity_sum(ctx, n, mode, strict=True) == 0


def test_parity_sum_odd_floor_inventory():
    # floor(sqrt(9)) = 3 is odd, claimed sums are -1; dropped-term cases
    # measure 0 instead.
    ctx = _ctx(9)
    expected_fail = {"linear": {1, 3}, "quadratic": {1, 9}}
    for mode in ("linear", "quadratic"):
        for n in range(1, 10, 2):
            measured = ramanujan.parity_sum(ctx, n, mode, strict=False)
            if n in expected_fail[mode]:
                assert measured == 0, (mode, n)
            else:
                assert measured == -1, (mode, n)


def test_parity_sum_rejects_even_n():
    ctx = _ctx(16)
    with pytest.raises(ValueError):
        ramanujan.parity_sum(ctx, 2, "linear")
