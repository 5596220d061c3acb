"""Cross-validation suite tying the independent computation routes together.

Four checks, each pitting at least two unrelated implementations against
each other:

  count-agreement    convolution table vs closed form vs Lagrange
                     extraction vs exhaustive enumeration
  series-identity    T(1-T)^2 = z coefficientwise, and zT' = T(1-T)/(1-3T)
  additive-agreement both cumulative GF forms, and GF totals vs enumeration
  sampler-smoke      coverage and chi-square at n = 4 under a fixed seed

Used by the CLI verify subcommand; returns structured results so callers
decide presentation and exit codes.  A check that raises is reported as a
failure, not propagated: the suite must survive a corrupted table.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import counting
from .additive import builtin_tolls, cumulative_by_enumeration, cumulative_gf, \
    cumulative_gf_via_sequences
from .sampler import SamplerState, sample_tree
from .series import solve_tree_gf, verify_functional_identity, z_times_derivative
from .trees import enumerate_forests, enumerate_trees, serialize

#: Chi-square critical value at alpha = 0.001 for 29 degrees of freedom
#: (the 30 tree shapes of size 4), frozen from a one-time quantile
#: computation so the check needs no statistics dependency.
CHI2_CRIT_29DOF_999 = 58.301173489794905

_SMOKE_SEED = 7
_SMOKE_SIZE = 4
_SMOKE_SAMPLES = 30000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_counts(table: counting.CountTable, oracle_limit: int) -> CheckResult:
    for n in range(1, table.n_max + 1):
        a = table.tree_count(n)
        b = counting.count_closed_form(n)
        c = counting.lagrange_coefficient(n)
        if not a == b == c:
            return CheckResult(
                "count-agreement",
                False,
                f"n={n}: table {a}, closed form {b}, Lagrange {c}",
            )
    for n in range(1, oracle_limit + 1):
        if len(enumerate_trees(n, limit=oracle_limit)) != table.tree_count(n):
            return CheckResult(
                "count-agreement", False, f"enumeration cardinality differs at n={n}"
            )
    for m in range(oracle_limit + 1):
        if len(enumerate_forests(m, limit=oracle_limit)) != table.forest_count(m):
            return CheckResult(
                "count-agreement", False, f"forest cardinality differs at m={m}"
            )
    return CheckResult(
        "count-agreement",
        True,
        f"three routes agree for n=1..{table.n_max}, enumeration to n={oracle_limit}",
    )


def _check_series(series_terms: int) -> CheckResult:
    T = solve_tree_gf(series_terms)
    ok_to = verify_functional_identity(T)
    if ok_to != series_terms:
        return CheckResult(
            "series-identity", False, f"T(1-T)^2 = z fails beyond order {ok_to}"
        )
    lhs = z_times_derivative(T)
    rhs = T * (1 - T) * (3 * T).quasi_inverse()
    if lhs != rhs:
        return CheckResult("series-identity", False, "zT' != T(1-T)/(1-3T)")
    return CheckResult(
        "series-identity",
        True,
        f"functional and derivative identities hold to order {series_terms}",
    )


def _check_additive(oracle_limit: int, series_terms: int) -> CheckResult:
    T = solve_tree_gf(series_terms)
    for toll in builtin_tolls():
        E = toll.toll_series(series_terms)
        C = cumulative_gf(E, T)
        if C != cumulative_gf_via_sequences(E, T):
            return CheckResult(
                "additive-agreement", False, f"toll {toll.name}: the two GF forms differ"
            )
        for n in range(1, oracle_limit + 1):
            direct = cumulative_by_enumeration(toll, n, limit=oracle_limit)
            if C.coefficient(n) != direct:
                return CheckResult(
                    "additive-agreement",
                    False,
                    f"toll {toll.name}, n={n}: GF {C.coefficient(n)} vs oracle {direct}",
                )
    return CheckResult(
        "additive-agreement",
        True,
        f"both GF forms and oracle totals agree (order {series_terms}, oracle n<={oracle_limit})",
    )


def _check_sampler(table: counting.CountTable) -> CheckResult:
    shapes = [serialize(t) for t in enumerate_trees(_SMOKE_SIZE)]
    state = SamplerState(table, _SMOKE_SEED)
    observed = Counter(
        serialize(sample_tree(_SMOKE_SIZE, state)) for _ in range(_SMOKE_SAMPLES)
    )
    if set(observed) != set(shapes):
        missing = len(set(shapes) ^ set(observed))
        return CheckResult(
            "sampler-smoke", False, f"{missing} shape(s) missing or foreign at n={_SMOKE_SIZE}"
        )
    expected = _SMOKE_SAMPLES / len(shapes)
    chi2 = sum((observed[s] - expected) ** 2 / expected for s in shapes)
    if chi2 >= CHI2_CRIT_29DOF_999:
        return CheckResult(
            "sampler-smoke",
            False,
            f"chi-square {chi2:.2f} >= {CHI2_CRIT_29DOF_999:.2f} (29 dof, alpha 0.001)",
        )
    return CheckResult(
        "sampler-smoke",
        True,
        f"{_SMOKE_SAMPLES} draws, all {len(shapes)} shapes, chi-square {chi2:.2f}",
    )


def _guarded(name: str, thunk) -> CheckResult:
    try:
        return thunk()
    except Exception as exc:  # noqa: BLE001  - any crash is a finding here
        return CheckResult(name, False, f"raised {type(exc).__name__}: {exc}")


def run_verification(
    oracle_limit: int = 8,
    series_terms: int = 64,
    table: counting.CountTable | None = None,
) -> list[CheckResult]:
    """Run all checks; an injected table lets tests exercise failures."""
    if oracle_limit < 1:
        raise ValueError(f"need oracle_limit >= 1, got {oracle_limit}")
    if series_terms < _SMOKE_SIZE:
        raise ValueError(f"need series_terms >= {_SMOKE_SIZE}, got {series_terms}")
    if table is None:
        table = counting.build_count_table(max(series_terms, oracle_limit))
    return [
        _guarded("count-agreement", lambda: _check_counts(table, oracle_limit)),
        _guarded("series-identity", lambda: _check_series(series_terms)),
        _guarded(
            "additive-agreement", lambda: _check_additive(oracle_limit, series_terms)
        ),
        _guarded("sampler-smoke", lambda: _check_sampler(table)),
    ]
