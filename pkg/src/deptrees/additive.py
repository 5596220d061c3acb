"""Additive tree parameters: tolls, cumulative generating functions, means.

An additive parameter is defined by a toll function e mapping each tree to a
nonnegative integer; the parameter itself is the recursion

    c(t) = e(t) + sum of c(r) over all root subtrees r (left and right).

Its cumulative generating function C(z) = sum over all trees of c(t) z^{|t|}
satisfies, with E(z) = sum of e(t) z^{|t|},

    C(z) = E(z) / (1 - 2z/(1-T)^3) = E(z) (1-T) / (1-3T).

Both forms are implemented independently (:func:`cumulative_gf` is the
simplified right-hand form, :func:`cumulative_gf_via_sequences` the raw
sequence form) so they can be cross-checked coefficient by coefficient, and
both are cross-checked against literal enumeration for small sizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .counting import CountTable
from .series import PowerSeries, _shift_up, solve_tree_gf, z_times_derivative
from .trees import DEFAULT_ORACLE_LIMIT, DepTree, enumerate_trees, size


@dataclass(frozen=True)
class TollSpec:
    """A toll e(t) plus, for builtins, a closed form for E(z).

    ``evaluate`` must be a pure function of the tree value returning a
    nonnegative int.  ``toll_gf`` maps a truncation order to E(z); tolls
    without one fall back to enumeration (oracle-limited).
    """

    name: str
    evaluate: Callable[[DepTree], int]
    toll_gf: Optional[Callable[[int], PowerSeries]] = None
    description: str = ""

    def toll_series(self, order: int, limit: int = DEFAULT_ORACLE_LIMIT) -> PowerSeries:
        """E(z) to ``order``, from the closed form or else by enumeration."""
        if self.toll_gf is not None:
            E = self.toll_gf(order)
            if E.order != order:
                raise ValueError(
                    f"toll {self.name!r}: toll_gf returned order {E.order}, wanted {order}"
                )
            return E
        return toll_gf_by_enumeration(self, order, limit=limit)


@dataclass(frozen=True)
class CumulativeResult:
    """C(z) together with its per-size totals and means.

    per_n_totals[n] = [z^n] C; per_n_means[n] = per_n_totals[n] / t_n.
    Index 0 is the empty size: no trees, total 0, mean fixed at 0.
    """

    toll_name: str
    C: PowerSeries
    per_n_totals: tuple
    per_n_means: tuple


def _checked_toll_value(toll: TollSpec, t: DepTree) -> int:
    v = toll.evaluate(t)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ValueError(f"toll {toll.name!r} must yield a nonnegative int, got {v!r}")
    return v


def fold_cost(t: DepTree, toll: TollSpec) -> int:
    """c(t) = e(t) + sum of c(r) over root subtrees, evaluated iteratively.

    Post-order over an explicit stack; chains make the natural recursion
    as deep as the tree size.
    """
    schedule = []
    stack = [t]
    while stack:
        node = stack.pop()
        schedule.append(node)
        stack.extend(node.left)
        stack.extend(node.right)
    cost: dict[int, int] = {}
    for node in reversed(schedule):
        c = _checked_toll_value(toll, node)
        for child in node.left + node.right:
            c += cost[id(child)]
        cost[id(node)] = c
    return cost[id(t)]


def _unit_gf(order: int) -> PowerSeries:
    return solve_tree_gf(order) if order >= 1 else PowerSeries.zero(0)


def _leaf_gf(order: int) -> PowerSeries:
    # only the single-node tree has e = 1, so E(z) = z exactly
    if order == 0:
        return PowerSeries.zero(0)
    return PowerSeries.monomial(order, 1)


def _size_gf(order: int) -> PowerSeries:
    return z_times_derivative(_unit_gf(order))


_BUILTINS = (
    TollSpec("unit", lambda t: 1, _unit_gf, "e = 1 at every node; c(t) = |t|"),
    TollSpec(
        "leaf",
        lambda t: 1 if not t.left and not t.right else 0,
        _leaf_gf,
        "e = 1 exactly on the single node; c(t) counts leaves",
    ),
    TollSpec("size", size, _size_gf, "e(t) = |t|; c(t) is the total path length plus |t|"),
)


def builtin_tolls() -> list[TollSpec]:
    """The three builtin tolls: unit (E = T), leaf (E = z), size (E = zT')."""
    return list(_BUILTINS)


def toll_by_name(name: str) -> TollSpec:
    for spec in _BUILTINS:
        if spec.name == name:
            return spec
    known = ", ".join(s.name for s in _BUILTINS)
    raise ValueError(f"unknown toll {name!r}; builtins are: {known}")


def toll_gf_by_enumeration(
    toll: TollSpec, order: int, limit: int = DEFAULT_ORACLE_LIMIT
) -> PowerSeries:
    """E(z) to ``order`` by summing e(t) over every tree of each size.

    Only viable below the oracle limit; closed forms are reserved for the
    builtin tolls.
    """
    coeffs = [0] * (order + 1)
    for n in range(1, order + 1):
        coeffs[n] = sum(_checked_toll_value(toll, t) for t in enumerate_trees(n, limit=limit))
    return PowerSeries(coeffs)


def _reciprocal(a: PowerSeries) -> PowerSeries:
    """1/a for a series with constant term exactly 1."""
    if a.coeffs[0] != 1:
        raise ValueError("reciprocal requires constant term 1")
    return (1 - a).quasi_inverse()


def cumulative_gf(E: PowerSeries, T: PowerSeries) -> PowerSeries:
    """C = E (1-T) / (1-3T), truncated to the smaller input order."""
    n = min(E.order, T.order)
    E = E.truncate(n)
    T = T.truncate(n)
    return E * (1 - T) * (3 * T).quasi_inverse()


def cumulative_gf_via_sequences(E: PowerSeries, T: PowerSeries) -> PowerSeries:
    """C = E / (1 - 2z/(1-T)^3), the unsimplified sequence form.

    Kept deliberately separate from :func:`cumulative_gf`; agreement of the
    two routes is one of the verification checks.
    """
    n = min(E.order, T.order)
    E = E.truncate(n)
    T = T.truncate(n)
    one_minus_T_cubed = (1 - T).square() * (1 - T)
    kernel = _shift_up(_reciprocal(one_minus_T_cubed)) * 2
    return E * kernel.quasi_inverse()


def cumulative_by_enumeration(
    toll: TollSpec, n: int, limit: int = DEFAULT_ORACLE_LIMIT
) -> int:
    """Sum of fold_cost over every size-n tree, straight from the oracle."""
    if n < 1:
        raise ValueError(f"tree sizes start at 1, got {n}")
    return sum(fold_cost(t, toll) for t in enumerate_trees(n, limit=limit))


def mean_parameter(toll: TollSpec, n: int, table: CountTable) -> Fraction:
    """[z^n] C / t_n as an exact rational."""
    if n < 1:
        raise ValueError(f"tree sizes start at 1, got {n}")
    t_n = table.tree_count(n)
    E = toll.toll_series(n)
    C = cumulative_gf(E, solve_tree_gf(n))
    return Fraction(C.coefficient(n), t_n)


def cumulative_summary(toll: TollSpec, n_max: int, table: CountTable) -> CumulativeResult:
    """C(z) to order n_max with the total and mean at every size."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    if n_max > table.n_max:
        raise IndexError(f"n_max={n_max} outside table range 1..{table.n_max}")
    E = toll.toll_series(n_max)
    C = cumulative_gf(E, solve_tree_gf(n_max))
    totals = []
    means = [Fraction(0)]
    for n in range(n_max + 1):
        total = C.coefficient(n)
        if not isinstance(total, int) or total < 0:
            raise AssertionError(f"cumulative total at n={n} not a natural: {total!r}")
        totals.append(total)
        if n >= 1:
            means.append(Fraction(total, table.tree_count(n)))
    return CumulativeResult(toll.name, C, tuple(totals), tuple(means))
