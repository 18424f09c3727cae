"""Quadratic-to-linear identity and its main/error term decompositions.

The central claim under test: the Lambda-weighted count over qn^2 + a for odd
n <= sqrt(x) can be rewritten as a sum over the linear argument qn + a for odd
n <= x against the exponential-sum square indicator at modulus N = 2p.  The
rewritten sum is then split, after a sampling step that replaces e(u s^2 / N)
by e(u s / N), into a diagonal main term M0 plus an off-diagonal M1 claimed to
vanish, and a Liouville-weighted error term E0 + E1.

Every operation here is a measurement.  The exact paths work in integer
Ramanujan values scaled by shared Lambda weights, so a failed identity is a
property of the formula and not of float noise; strict modes raise
LemmaCounterexample with the measured value attached.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import arith, ramanujan
from .errors import CapacityError, LemmaCounterexample, PrecisionError
from .indicator import nearest_even_parity_x

# Work caps keep the desk-scale checks interactive.
FLOAT_WORK_CAP = 10**9
ERROR_TERM_X_CAP = 10**4


@dataclass(frozen=True)
class PolynomialSpec:
    """Admissibility record for f(t) = q t^2 + a.

    Attributes:
        q: leading coefficient, q >= 1.
        a: constant term.
        admissible: coprime_ok and parity_ok and fixed_divisor == 1.
        parity_ok: q + a is odd, so f(odd) is odd.
        coprime_ok: gcd(a, q) == 1.
        fixed_divisor: gcd(f(0), f(1), f(2)), the fixed divisor of f over Z.
    """

    q: int
    a: int
    admissible: bool
    parity_ok: bool
    coprime_ok: bool
    fixed_divisor: int

    def value_at(self, n: int) -> int:
        return self.q * n * n + self.a


@dataclass(frozen=True)
class DecompositionReport:
    """Assembled measurement of the identity and both decompositions."""

    ctx: ramanujan.ModulusContext
    spec: PolynomialSpec
    lhs: float
    rhs_exact: float
    rhs_float: Optional[float]
    M0: float
    M1: float
    E0: float
    E1: float
    records: tuple[tuple[int, arith.VonMangoldtValue], ...]
    lower_bound_holds: bool


def check_admissible(q: int, a: int) -> PolynomialSpec:
    """Populate every admissibility flag for f(t) = q t^2 + a.

    Inadmissible pairs come back flagged, never rejected: negative results
    are data.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    coprime_ok = math.gcd(a, q) == 1
    parity_ok = (q + a) % 2 == 1
    fixed_divisor = math.gcd(a, q + a, 4 * q + a)
    admissible = coprime_ok and parity_ok and fixed_divisor == 1
    return PolynomialSpec(q, a, admissible, parity_ok, coprime_ok, fixed_divisor)


def make_context(x: int, regime: str = "minimal", c: float = 1.0) -> ramanujan.ModulusContext:
    """Pick a prime p > x and wrap it in a ModulusContext.

    The minimal regime takes the next prime above x.  The inflated regime
    takes the next prime at or above ceil(x * e^(c * sqrt(ln x))), matching
    the growth rate the error analysis assumes; c is unpinned upstream and
    defaults to 1.
    """
    if x < 4:
        raise ValueError("x must be >= 4")
    if regime not in ("minimal", "inflated"):
        raise ValueError(f"unknown regime {regime!r}")
    if regime == "minimal":
        p = arith.next_prime_above(x)
    else:
        if not c > 0:
            raise ValueError("c must be positive")
        target = math.ceil(x * math.exp(c * math.sqrt(math.log(x))))
        p = target if arith.is_prime(target) else arith.next_prime_above(target)
    r = math.isqrt(x)
    parity = "even" if r % 2 == 0 else "odd"
    return ramanujan.ModulusContext(x=x, p=p, N=2 * p, floor_sqrt_x=r, floor_sqrt_parity=parity)


def _require_admissible(spec: PolynomialSpec) -> None:
    if spec.admissible:
        return
    reasons = []
    if not spec.coprime_ok:
        reasons.append(f"gcd(a={spec.a}, q={spec.q}) > 1")
    if not spec.parity_ok:
        reasons.append(f"q + a = {spec.q + spec.a} is even")
    if spec.fixed_divisor != 1:
        reasons.append(f"fixed divisor {spec.fixed_divisor}")
    raise ValueError(f"(q={spec.q}, a={spec.a}) is not admissible: " + "; ".join(reasons))


def _require_even_context(ctx: ramanujan.ModulusContext) -> None:
    if ctx.floor_sqrt_parity != "even":
        raise ValueError(
            f"floor(sqrt(x)) is odd for x={ctx.x}; "
            f"nearest valid x is {nearest_even_parity_x(ctx.x)}"
        )


def _guard_range(spec: PolynomialSpec, x: int) -> None:
    # Both sides evaluate Lambda at arguments bounded by q*x + a.
    if spec.q * x + spec.a > arith.U64_MAX:
        raise OverflowError(f"q*x + a = {spec.q * x + spec.a} exceeds 64-bit range")


def lhs_quadratic_psi(
    spec: PolynomialSpec, x: int
) -> tuple[float, tuple[tuple[int, arith.VonMangoldtValue], ...]]:
    """Lambda-weighted sum over q n^2 + a for odd n <= sqrt(x), with records.

    Records keep every odd n in range, including the zero-weight ones, so a
    report can show which terms failed to contribute and why.
    """
    _require_admissible(spec)
    if x < 1:
        raise ValueError("x must be >= 1")
    _guard_range(spec, x)
    records = tuple(
        (n, arith.von_mangoldt(spec.value_at(n)))
        for n in range(1, math.isqrt(x) + 1, 2)
    )
    value = math.fsum(vm.log_weight for _, vm in records)
    return value, records


def _c_N(cache: dict[int, int], N: int, shift: int) -> int:
    # Shifts repeat heavily across n; a per-call cache keeps the exact path
    # cheap without module-level state.
    value = cache.get(shift)
    if value is None:
        value = ramanujan.ramanujan_closed(N, shift).value
        cache[shift] = value
    return value


def rhs_linear_expansion(
    spec: PolynomialSpec,
    ctx: ramanujan.ModulusContext,
    float_path: bool | str = "auto",
) -> tuple[float, Optional[float]]:
    """Linear-argument expansion of the quadratic sum, exact and float paths.

    Exact path: for each odd n <= x the inner double sum over s and u
    collapses to the integer phi(N) * [s^2 = n] + c_N(s^2 - n), so the term
    is Lambda(q n + a) times an exact rational coefficient.  Float path:
    direct complex-exponential summation in fixed order (ascending n, s, u),
    refused via CapacityError when the triple-sum size exceeds
    FLOAT_WORK_CAP.  float_path may be True, False, or "auto" (run it only
    when within cap).
    """
    _require_admissible(spec)
    _require_even_context(ctx)
    _guard_range(spec, ctx.x)
    phi_n = arith.euler_phi(ctx.N)
    R = ctx.floor_sqrt_x
    cache: dict[int, int] = {}

    work = ((ctx.x + 1) // 2) * R * phi_n
    if float_path == "auto":
        float_path = work <= FLOAT_WORK_CAP
    elif float_path and work > FLOAT_WORK_CAP:
        raise CapacityError(f"float path needs {work} evaluations, cap is {FLOAT_WORK_CAP}")

    weights: list[tuple[int, float]] = []
    for n in range(1, ctx.x + 1, 2):
        weights.append((n, arith.von_mangoldt(spec.q * n + spec.a).log_weight))

    exact_terms: list[float] = []
    for n, lw in weights:
        if lw == 0.0:
            continue
        coeff = 0
        for s in range(1, R + 1):
            shift = s * s - n
            coeff += phi_n if shift == 0 else _c_N(cache, ctx.N, shift)
        if coeff:
            exact_terms.append(float(Fraction(coeff, phi_n)) * lw)
    rhs_exact = math.fsum(exact_terms)

    if not float_path:
        return rhs_exact, None

    # Independent route on purpose: local tables, no shared Ramanujan code.
    roots = [cmath.exp(2j * math.pi * k / ctx.N) for k in range(ctx.N)]
    coprime = [u for u in range(1, ctx.N) if math.gcd(u, ctx.N) == 1]
    real_parts: list[float] = []
    imag_parts: list[float] = []
    for n, lw in weights:
        if lw == 0.0:
            continue
        for s in range(1, R + 1):
            shift = (s * s - n) % ctx.N
            for u in coprime:
                z = roots[(shift * u) % ctx.N]
                real_parts.append(lw * z.real)
                imag_parts.append(lw * z.imag)
    imag_total = math.fsum(imag_parts) / phi_n
    if abs(imag_total) >= 1e-6:
        raise PrecisionError(f"imaginary residue {imag_total} in float path")
    rhs_float = math.fsum(real_parts) / phi_n
    return rhs_exact, rhs_float


def main_term_decomposition(
    spec: PolynomialSpec, ctx: ramanujan.ModulusContext, strict: bool = True
) -> tuple[float, float]:
    """Diagonal main term M0 and the off-diagonal M1 after the sampling step.

    M0 sums Lambda(q n + a) over odd n <= sqrt(x), the s = n diagonal.  M1
    sums Lambda(q n + a) * c_N(s - n) over odd n <= x and s != n, evaluated
    on the exact integer path.  The claim is M1 = 0; under strict=True any
    nonzero M1 raises LemmaCounterexample, under strict=False the measured
    value is returned.
    """
    _require_admissible(spec)
    _require_even_context(ctx)
    _guard_range(spec, ctx.x)
    phi_n = arith.euler_phi(ctx.N)
    R = ctx.floor_sqrt_x
    cache: dict[int, int] = {}

    m0_terms: list[float] = []
    m1_terms: list[float] = []
    exactly_zero = True
    for n in range(1, ctx.x + 1, 2):
        lw = arith.von_mangoldt(spec.q * n + spec.a).log_weight
        if n <= R:
            m0_terms.append(lw)
        if lw == 0.0:
            continue
        coeff = 0
        for s in range(1, R + 1):
            if s != n:
                coeff += _c_N(cache, ctx.N, s - n)
        if coeff:
            exactly_zero = False
            m1_terms.append(coeff * lw)
    M0 = math.fsum(m0_terms)
    M1 = math.fsum(m1_terms) / phi_n
    if strict and not exactly_zero:
        raise LemmaCounterexample(
            "main-term-vanishing",
            {"q": spec.q, "a": spec.a, "x": ctx.x, "p": ctx.p},
            0,
            M1,
        )
    return M0, M1


def dyadic_pairs(R: int) -> list[tuple[int, int, int]]:
    """All (d, m, d*m) with 1 < d <= R and d*m <= R, ascending d then m."""
    pairs = []
    for d in range(2, R + 1):
        for m in range(1, R // d + 1):
            pairs.append((d, m, d * m))
    return pairs


def error_term_decomposition(
    spec: PolynomialSpec, ctx: ramanujan.ModulusContext
) -> tuple[float, float]:
    """Liouville-weighted error terms E0 (diagonal) and E1 (off-diagonal).

    Reindexing s = d m over divisors 1 < d of s turns the error part into a
    sum over pairs (d, m) with d m <= sqrt(x).  E0 collects the n = d m
    diagonal, E1 the rest via exact c_N values.  Capped at x <=
    ERROR_TERM_X_CAP because the pair-by-shift loop is quadratic in x.
    """
    _require_admissible(spec)
    _require_even_context(ctx)
    _guard_range(spec, ctx.x)
    if ctx.x > ERROR_TERM_X_CAP:
        raise CapacityError(f"error-term decomposition capped at x = {ERROR_TERM_X_CAP}")
    phi_n = arith.euler_phi(ctx.N)
    pairs = dyadic_pairs(ctx.floor_sqrt_x)
    cache: dict[int, int] = {}

    e0_terms = [
        arith.liouville(d) * arith.von_mangoldt(spec.q * dm + spec.a).log_weight
        for d, _, dm in pairs
        if dm % 2 == 1
    ]
    E0 = math.fsum(e0_terms)

    signed = [(arith.liouville(d), dm) for d, _, dm in pairs]
    e1_terms: list[float] = []
    for n in range(1, ctx.x + 1, 2):
        lw = arith.von_mangoldt(spec.q * n + spec.a).log_weight
        if lw == 0.0:
            continue
        coeff = 0
        for lam, dm in signed:
            if dm != n:
                coeff += lam * _c_N(cache, ctx.N, dm - n)
        if coeff:
            e1_terms.append(coeff * lw)
    E1 = math.fsum(e1_terms) / phi_n
    return E0, E1


def error_term_total(spec: PolynomialSpec, ctx: ramanujan.ModulusContext) -> float:
    """Error term evaluated directly from divisor weights, no reindexing.

    For each s the weight is the Liouville sum over divisors d > 1 of s,
    computed literally.  Reconciling this against E0 + E1 checks the
    reindexing step on its own.
    """
    _require_admissible(spec)
    _require_even_context(ctx)
    _guard_range(spec, ctx.x)
    if ctx.x > ERROR_TERM_X_CAP:
        raise CapacityError(f"error-term total capped at x = {ERROR_TERM_X_CAP}")
    phi_n = arith.euler_phi(ctx.N)
    R = ctx.floor_sqrt_x
    cache: dict[int, int] = {}
    # w(s) = sum of liouville(d) over divisors d of s with d > 1.
    w = [0] * (R + 1)
    for s in range(1, R + 1):
        w[s] = sum(arith.liouville(d) for d in range(2, s + 1) if s % d == 0)

    terms: list[float] = []
    for n in range(1, ctx.x + 1, 2):
        lw = arith.von_mangoldt(spec.q * n + spec.a).log_weight
        if lw == 0.0:
            continue
        coeff = 0
        for s in range(1, R + 1):
            if w[s] == 0:
                continue
            coeff += w[s] * (phi_n if s == n else _c_N(cache, ctx.N, s - n))
        if coeff:
            terms.append(coeff * lw)
    return math.fsum(terms) / phi_n


def lower_bound_check(
    spec: PolynomialSpec, ctx: ramanujan.ModulusContext
) -> DecompositionReport:
    """Assemble lhs, rhs, M and E terms and compare lhs against their sum.

    Pure measurement: strict checks are off, the verdict is a field.  The
    float rhs path runs only when it fits the work cap.
    """
    lhs, records = lhs_quadratic_psi(spec, ctx.x)
    rhs_exact, rhs_float = rhs_linear_expansion(spec, ctx, float_path="auto")
    M0, M1 = main_term_decomposition(spec, ctx, strict=False)
    E0, E1 = error_term_decomposition(spec, ctx)
    holds = lhs >= M0 + M1 + E0 + E1
    return DecompositionReport(
        ctx=ctx,
        spec=spec,
        lhs=lhs,
        rhs_exact=rhs_exact,
        rhs_float=rhs_float,
        M0=M0,
        M1=M1,
        E0=E0,
        E1=E1,
        records=records,
        lower_bound_holds=holds,
    )
