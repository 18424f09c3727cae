"""Large-scale counts over f(t) = q t^2 + a and conjectured densities.

The weighted count psi2 walks odd n <= sqrt(x) and tests each f(n) with a
primality-plus-perfect-power predicate, deliberately avoiding the
factorization route the identity module uses so the two stay independent
cross-checks.  Density constants come from truncated Euler products over odd
primes in two variants that differ in their denominator convention; both are
computed rather than picking one, and compare_asymptotic tabulates the
measured psi2 against the predicted (c_f / 2) * sqrt(x) curve.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import arith
from .errors import CapacityError
from .identity import PolynomialSpec, _guard_range, _require_admissible

DEFAULT_EULER_CUTOFF = 10**6
EULER_CUTOFF_MAX = 10**8


@dataclass(frozen=True)
class CountResult:
    """Outcome of a counting run over f(n) = q n^2 + a.

    Attributes:
        spec: the polynomial counted.
        n_max: largest n examined.
        psi_value: sum of ln(base prime) over prime-power hits.
        prime_count: hits with exponent exactly 1.
        hits: optional (n, f(n), base_prime, exponent) tuples, ascending n.
    """

    spec: PolynomialSpec
    n_max: int
    psi_value: float
    prime_count: int
    hits: Optional[tuple[tuple[int, int, int, int], ...]]


@dataclass(frozen=True)
class EulerProductReport:
    """Truncated Euler product for the density constant of f."""

    spec: PolynomialSpec
    variant: str
    cutoff: int
    epsilon: Fraction
    estimate: float
    trace: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class ComparisonRow:
    """One empirical-versus-conjectured entry of a comparison table."""

    x: int
    psi2: float
    conjectured: float
    ratio: float


def psi2_count(spec: PolynomialSpec, x: int, collect_hits: bool = False) -> CountResult:
    """Lambda-weighted count of prime-power values f(n) over odd n <= sqrt(x).

    Uses primality testing plus perfect-power detection per value; this is
    the scale path, independent of the factorization-backed identity path.
    """
    _require_admissible(spec)
    if x < 1:
        raise ValueError("x must be >= 1")
    _guard_range(spec, x)
    n_max = math.isqrt(x)
    hits: list[tuple[int, int, int, int]] = []
    log_terms: list[float] = []
    prime_count = 0
    for n in range(1, n_max + 1, 2):
        value = spec.value_at(n)
        if value < 2:
            continue
        pp = arith.prime_power_base(value)
        if pp is None:
            continue
        base, exponent = pp
        log_terms.append(math.log(base))
        if exponent == 1:
            prime_count += 1
        if collect_hits:
            hits.append((n, value, base, exponent))
    return CountResult(
        spec=spec,
        n_max=n_max,
        psi_value=math.fsum(log_terms),
        prime_count=prime_count,
        hits=tuple(hits) if collect_hits else None,
    )


def linear_psi_odd(spec: PolynomialSpec, X: int) -> tuple[float, float]:
    """Lambda sum over q n + a for odd n <= X, with its lower-bound reference.

    Returns (value, reference) where reference = (q / (2 phi(q))) * X, the
    progression-density comparison line.
    """
    _require_admissible(spec)
    if X < 1:
        raise ValueError("X must be >= 1")
    if spec.q * X + spec.a > arith.U64_MAX:
        raise OverflowError("q*X + a exceeds 64-bit range")
    value = math.fsum(
        arith.von_mangoldt(spec.q * n + spec.a).log_weight for n in range(1, X + 1, 2)
    )
    reference = spec.q * X / (2 * arith.euler_phi(spec.q))
    return value, reference


def count_primes_poly(spec: PolynomialSpec, n_max: int) -> CountResult:
    """All n <= n_max with f(n) prime, admissible or not.

    Inadmissible specs are allowed here on purpose: counting primes in a
    family like t^2 + 1 is meaningful even though the parity hypothesis of
    the quadratic-to-linear machinery excludes q = 1.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if spec.q * n_max * n_max + spec.a > arith.U64_MAX:
        raise OverflowError("q*n_max^2 + a exceeds 64-bit range")
    hits: list[tuple[int, int, int, int]] = []
    log_terms: list[float] = []
    for n in range(1, n_max + 1):
        value = spec.value_at(n)
        if value >= 2 and arith.is_prime(value):
            hits.append((n, value, value, 1))
            log_terms.append(math.log(value))
    return CountResult(
        spec=spec,
        n_max=n_max,
        psi_value=math.fsum(log_terms),
        prime_count=len(hits),
        hits=tuple(hits),
    )


def epsilon_factor(q: int) -> Fraction:
    """Front factor of the density constant: 1/2 for odd q, 1 for even q."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return Fraction(1, 1) if q % 2 == 0 else Fraction(1, 2)


def bateman_horn_constant(
    spec: PolynomialSpec, cutoff: int, variant: str = "hl"
) -> EulerProductReport:
    """Truncated Euler product over odd primes p <= cutoff.

    Two conventions are implemented side by side rather than reconciled:

        paper: epsilon * prod of p/(p-1) for p | q, else (1 - chi(p)/p)
        hl:    prod of p/(p-1) for p | q, else (1 - chi(p)/(p-1))

    with chi(p) the Jacobi symbol (-a q | p).  Only the "hl" variant
    reproduces the reference value 1.37281346 for t^2 + 1; the "paper"
    variant is kept as reported data.  The trace samples the partial
    product after each power of ten.
    """
    if cutoff < 3:
        raise ValueError("cutoff must be >= 3")
    if cutoff > EULER_CUTOFF_MAX:
        raise CapacityError(f"cutoff capped at {EULER_CUTOFF_MAX}")
    if variant not in ("paper", "hl"):
        raise ValueError(f"unknown variant {variant!r}")
    if spec.q < 1:
        raise ValueError("q must be >= 1")

    epsilon = epsilon_factor(spec.q)
    character_of_one = spec.q == 1 and spec.a == 1
    product = float(epsilon) if variant == "paper" else 1.0
    trace: list[tuple[int, float]] = []
    marks = [10**k for k in range(1, 9) if 10**k <= cutoff]
    mark_index = 0
    last_prime = 0

    for p in arith.iter_primes(cutoff):
        if p == 2:
            continue
        while mark_index < len(marks) and p > marks[mark_index]:
            trace.append((last_prime, product))
            mark_index += 1
        if spec.q % p == 0:
            factor = p / (p - 1)
        else:
            chi = arith.jacobi((-spec.a * spec.q) % p, p)
            factor = 1.0 - chi / p if variant == "paper" else 1.0 - chi / (p - 1)
        if character_of_one and variant == "hl":
            # For t^2 + 1 the factor must straddle 1 according to p mod 4.
            if (factor < 1.0) != (p % 4 == 1):
                raise ArithmeticError(f"factor {factor} on wrong side of 1 at p={p}")
        product *= factor
        last_prime = p

    if not trace or trace[-1][0] != last_prime:
        trace.append((last_prime, product))
    return EulerProductReport(
        spec=spec,
        variant=variant,
        cutoff=cutoff,
        epsilon=epsilon,
        estimate=product,
        trace=tuple(trace),
    )


def compare_asymptotic(
    spec: PolynomialSpec,
    x_max: int,
    steps: int,
    cutoff: int = DEFAULT_EULER_CUTOFF,
) -> list[ComparisonRow]:
    """Measured psi2 against (c_f / 2) * sqrt(x) at geometrically spaced x.

    The constant is the hl-variant product at the given cutoff, the only
    convention that matches the stated numeric value for t^2 + 1.
    """
    _require_admissible(spec)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if x_max < 1:
        raise ValueError("x_max must be >= 1")
    _guard_range(spec, x_max)

    constant = bateman_horn_constant(spec, cutoff, "hl").estimate
    xs: list[int] = []
    for i in range(1, steps + 1):
        x = round(x_max ** (i / steps))
        if x >= 1 and (not xs or x > xs[-1]):
            xs.append(x)
    if xs[-1] != x_max:
        xs[-1] = x_max

    rows: list[ComparisonRow] = []
    for x in xs:
        psi = psi2_count(spec, x).psi_value
        conjectured = 0.5 * constant * math.sqrt(x)
        rows.append(ComparisonRow(x=x, psi2=psi, conjectured=conjectured, ratio=psi / conjectured))
    return rows
