"""Verification suites that tabulate counterexamples instead of raising.

Each suite runs a family of checks, counts cases, and collects structured
counterexamples.  A suite never stops at the first failure; the point is an
exhaustive inventory, which the CLI then turns into an exit code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import arith, asymptotics, identity, indicator, ramanujan
from .errors import LemmaCounterexample

# Shared identity-check grid: every admissible pair crossed with every x.
IDENTITY_PAIRS = ((4, 1), (2, 1), (3, 2), (5, 2), (8, 3))
IDENTITY_X_VALUES = (16, 36, 100, 144)


@dataclass(frozen=True)
class Counterexample:
    """One failed check with its inputs and both sides of the disagreement."""

    inputs: dict[str, Any]
    expected: Any
    actual: Any


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    cases_run: int
    cases_passed: int
    counterexamples: tuple[Counterexample, ...]

    @property
    def all_passed(self) -> bool:
        return self.cases_passed == self.cases_run


def _from_exception(exc: LemmaCounterexample) -> Counterexample:
    return Counterexample(inputs=dict(exc.inputs), expected=exc.expected, actual=exc.actual)


def verify_ramanujan(q_max: int = 300, m_max: int = 300) -> VerificationReport:
    """Three-way agreement of the direct, closed-form, and divisor sums."""
    if q_max < 1 or m_max < 0:
        raise ValueError("q_max must be >= 1 and m_max >= 0")
    run = 0
    rows: list[Counterexample] = []
    for q in range(1, q_max + 1):
        for m in range(-m_max, m_max + 1):
            run += 1
            closed = ramanujan.ramanujan_closed(q, m).value
            divisor = ramanujan.ramanujan_divisor(q, m).value
            direct = ramanujan.ramanujan_direct(q, m).value
            if not (closed == divisor == direct):
                rows.append(
                    Counterexample(
                        inputs={"q": q, "m": m},
                        expected="direct = closed = divisor",
                        actual={"direct": direct, "closed": closed, "divisor": divisor},
                    )
                )
    return VerificationReport("ramanujan", run, run - len(rows), tuple(rows))


def verify_parity(x: int, regime: str = "minimal", c: float = 1.0) -> VerificationReport:
    """Parity sign and sum-value checks for both shift modes at every odd n."""
    ctx = identity.make_context(x, regime, c)
    run = 0
    rows: list[Counterexample] = []
    for mode in ("linear", "quadratic"):
        for n in range(1, x + 1, 2):
            run += 1
            try:
                ramanujan.parity_sum(ctx, n, mode, strict=True)
            except LemmaCounterexample as exc:
                rows.append(_from_exception(exc))
    return VerificationReport("parity", run, run - len(rows), tuple(rows))


def verify_char(x: int, regime: str = "minimal", c: float = 1.0) -> VerificationReport:
    """Exponential-sum square indicator against the integer-root oracle."""
    ctx = identity.make_context(x, regime, c)
    run = 0
    rows: list[Counterexample] = []
    for n in range(1, x + 1, 2):
        run += 1
        reference = indicator.square_char_isqrt(n)
        try:
            verdict = indicator.square_char_exp(ctx, n)
        except LemmaCounterexample as exc:
            rows.append(_from_exception(exc))
            continue
        if verdict.is_square != reference.is_square:
            rows.append(
                Counterexample(
                    inputs={"x": x, "p": ctx.p, "n": n},
                    expected=reference.is_square,
                    actual=verdict.is_square,
                )
            )
    return VerificationReport("char", run, run - len(rows), tuple(rows))


def verify_liouville(limit: int = 10**5) -> VerificationReport:
    """Factorization-parity square indicator against the integer-root oracle."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    run = 0
    rows: list[Counterexample] = []
    for n in range(1, limit + 1):
        run += 1
        reference = indicator.square_char_isqrt(n)
        verdict = indicator.square_char_liouville(n)
        if verdict.is_square != reference.is_square:
            rows.append(
                Counterexample(
                    inputs={"n": n},
                    expected=reference.is_square,
                    actual=verdict.is_square,
                )
            )
    return VerificationReport("liouville", run, run - len(rows), tuple(rows))


def _identity_grid(
    configs: Optional[Sequence[tuple[int, int, int]]],
    regime: str = "minimal",
    c: float = 1.0,
) -> list[tuple[identity.PolynomialSpec, ramanujan.ModulusContext]]:
    if configs is None:
        configs = [(q, a, x) for q, a in IDENTITY_PAIRS for x in IDENTITY_X_VALUES]
    grid = []
    for q, a, x in configs:
        grid.append((identity.check_admissible(q, a), identity.make_context(x, regime, c)))
    return grid


def verify_identity(
    configs: Optional[Sequence[tuple[int, int, int]]] = None,
    regime: str = "minimal",
    c: float = 1.0,
) -> VerificationReport:
    """Exact-path equality with the quadratic sum, plus float-path agreement."""
    run = 0
    rows: list[Counterexample] = []
    for spec, ctx in _identity_grid(configs, regime, c):
        lhs, _ = identity.lhs_quadratic_psi(spec, ctx.x)
        rhs_exact, rhs_float = identity.rhs_linear_expansion(spec, ctx, float_path="auto")
        run += 1
        rel = abs(rhs_exact - lhs) / abs(lhs) if lhs else abs(rhs_exact)
        if rel > 1e-9:
            rows.append(
                Counterexample(
                    inputs={"q": spec.q, "a": spec.a, "x": ctx.x, "p": ctx.p,
                            "check": "rhs-exact-equals-lhs"},
                    expected=lhs,
                    actual=rhs_exact,
                )
            )
        if rhs_float is not None:
            run += 1
            if abs(rhs_float - rhs_exact) >= 1e-6:
                rows.append(
                    Counterexample(
                        inputs={"q": spec.q, "a": spec.a, "x": ctx.x, "p": ctx.p,
                                "check": "float-matches-exact"},
                        expected=rhs_exact,
                        actual=rhs_float,
                    )
                )
    return VerificationReport("identity", run, run - len(rows), tuple(rows))


def verify_main_term(
    configs: Optional[Sequence[tuple[int, int, int]]] = None,
    regime: str = "minimal",
    c: float = 1.0,
) -> VerificationReport:
    """M1 = 0 on the exact integer path for every grid configuration."""
    run = 0
    rows: list[Counterexample] = []
    for spec, ctx in _identity_grid(configs, regime, c):
        run += 1
        try:
            identity.main_term_decomposition(spec, ctx, strict=True)
        except LemmaCounterexample as exc:
            rows.append(_from_exception(exc))
    return VerificationReport("main-term", run, run - len(rows), tuple(rows))


def verify_error_term(
    configs: Optional[Sequence[tuple[int, int, int]]] = None,
    regime: str = "minimal",
    c: float = 1.0,
) -> VerificationReport:
    """Reconciliation and trivial-bound checks for the error decomposition."""
    run = 0
    rows: list[Counterexample] = []
    for spec, ctx in _identity_grid(configs, regime, c):
        E0, E1 = identity.error_term_decomposition(spec, ctx)
        total = identity.error_term_total(spec, ctx)

        run += 1
        if abs((E0 + E1) - total) > 1e-9:
            rows.append(
                Counterexample(
                    inputs={"q": spec.q, "a": spec.a, "x": ctx.x, "p": ctx.p,
                            "check": "split-reconciliation"},
                    expected=total,
                    actual=E0 + E1,
                )
            )

        run += 1
        phi_n = arith.euler_phi(ctx.N)
        pair_count = len(identity.dyadic_pairs(ctx.floor_sqrt_x))
        lambda_total, _ = asymptotics.linear_psi_odd(spec, ctx.x)
        bound = pair_count * lambda_total / phi_n
        if abs(E1) > bound + 1e-12:
            rows.append(
                Counterexample(
                    inputs={"q": spec.q, "a": spec.a, "x": ctx.x, "p": ctx.p,
                            "check": "trivial-bound"},
                    expected=f"|E1| <= {bound}",
                    actual=abs(E1),
                )
            )
    return VerificationReport("error-term", run, run - len(rows), tuple(rows))
