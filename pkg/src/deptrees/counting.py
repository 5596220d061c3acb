"""Exact counting of dependency trees, with asymptotic diagnostics.

Three independent routes produce the same numbers:

* :func:`build_count_table` runs the convolution recurrences that come
  straight out of the class construction (a tree is a left forest, a root,
  and a right forest; a forest is a sequence of trees),
* :func:`count_closed_form` evaluates binom(3n-2, n-1) / n directly,
* :func:`lagrange_coefficient` extracts the same number as the u^(n-1)
  coefficient of 1/(1-u)^(2n) scaled by 1/n, walking the binomial series
  term by term.

Keeping the routes independent is the point: each one cross-checks the
others, and all three are checked against exhaustive enumeration at small
sizes.  The counts are 1, 2, 7, 30, 143, ... (OEIS A006013) and grow like
(27/4)^n, so everything here is exact big-integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from operator import mul

#: t_{n+1}/t_n converges to 27/4; equivalently the generating function has
#: its dominant singularity at z = 4/27.
GROWTH_RATE = Fraction(27, 4)
SINGULARITY = Fraction(4, 27)

_AMPLITUDE_LOG = -0.5 * math.log(27.0 * math.pi)
_LOG_GROWTH = math.log(6.75)


@dataclass(frozen=True)
class AsymptoticConstants:
    growth_rate: Fraction
    singularity: Fraction
    amplitude_log: float
    exponent: float


#: Constants of the leading-order approximation
#: t_n ~ (27/4)^n / (sqrt(27 pi) n^(3/2)).
ASYMPTOTICS = AsymptoticConstants(
    growth_rate=GROWTH_RATE,
    singularity=SINGULARITY,
    amplitude_log=_AMPLITUDE_LOG,
    exponent=-1.5,
)


@dataclass(frozen=True)
class CountTable:
    """Immutable tables of tree counts t_n and forest counts s_m.

    ``t[n]`` counts trees of size n (``t[0]`` is the 0 sentinel); ``s[m]``
    counts forests of total size m.  Both tuples run through index
    ``n_max``.
    """

    t: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.t) - 1

    def tree_count(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside the table range 1..{self.n_max}")
        return self.t[n]

    def forest_count(self, m: int) -> int:
        if not 0 <= m <= self.n_max:
            raise IndexError(f"m={m} outside the table range 0..{self.n_max}")
        return self.s[m]


def build_count_table(n_max: int) -> CountTable:
    """Fill t_1..t_N and s_0..s_N by the convolution recurrences.

    t_m = sum_{i+j=m-1} s_i s_j   (left/right forest split at the root)
    s_m = sum_{k=1..m} t_k s_{m-k}   (size of the first tree in the forest)

    O(N^2) big-integer multiply-adds; the t convolution uses its symmetry
    to halve the work.
    """
    if n_max < 1:
        raise ValueError(f"table size must be at least 1, got {n_max}")
    t = [0] * (n_max + 1)
    s = [0] * (n_max + 1)
    s[0] = 1
    for m in range(1, n_max + 1):
        acc = 0
        for i in range((m - 2) // 2 + 1):
            acc += s[i] * s[m - 1 - i]
        acc *= 2
        if (m - 1) % 2 == 0:
            acc += s[(m - 1) // 2] ** 2
        t[m] = acc
        s[m] = sum(map(mul, t[1 : m + 1], s[m - 1 :: -1]))
    return CountTable(tuple(t), tuple(s))


def count_closed_form(n: int) -> int:
    """Exact t_n = binom(3n-2, n-1) / n; the division is checked exact."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    q, r = divmod(math.comb(3 * n - 2, n - 1), n)
    assert r == 0, f"n={n} does not divide binom(3n-2, n-1)"
    return q


def lagrange_coefficient(n: int) -> int:
    """t_n by coefficient extraction from the implicit equation z = T(1-T)^2.

    Expands 1/(1-u)^(2n) = sum_k binom(k+2n-1, k) u^k term by term via the
    multiplicative recurrence c_k = c_{k-1} (2n-1+k) / k, takes the term at
    k = n-1, and divides by n.  Deliberately shares no code with
    :func:`count_closed_form`.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    c = 1  # binom(2n-1, 0)
    for k in range(1, n):
        c = c * (2 * n - 1 + k) // k
    q, r = divmod(c, n)
    assert r == 0, f"n={n} does not divide the extracted coefficient"
    return q


def stirling_log_approx(n: int) -> float:
    """ln of the approximation (27/4)^n / (sqrt(27 pi) n^(3/2)).

    Stays in log space; (27/4)^n itself overflows a float near n = 360.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return _AMPLITUDE_LOG - 1.5 * math.log(n) + n * _LOG_GROWTH


def relative_error(n: int, table: CountTable) -> float:
    """approx(n)/t_n - 1, with ln t_n taken exactly from the big integer."""
    exact_log = math.log(table.tree_count(n))
    return math.expm1(stirling_log_approx(n) - exact_log)


def growth_ratio(n: int, table: CountTable) -> Fraction:
    """t_{n+1}/t_n as an exact rational (converges to 27/4)."""
    return Fraction(table.tree_count(n + 1), table.tree_count(n))
