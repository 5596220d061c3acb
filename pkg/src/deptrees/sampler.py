"""Exactly uniform random trees and forests, driven by the count tables.

Sampling inverts the counting recurrences.  A tree of size n is built by
choosing its root split (i, j), i + j = n - 1, with probability
s_i s_j / t_n, then sampling the two forests; a forest of size m > 0 picks
its first tree's size k with probability t_k s_{m-k} / s_m.  Every choice
is made by drawing a uniform big integer below the exact total weight and
walking cumulative sums, so the output distribution is uniform by
construction, with no floating point anywhere.

The pseudo-random stream is the stdlib Mersenne Twister
(:class:`random.Random`), consumed only through ``getrandbits``; uniform
draws below an arbitrary bound use rejection from fixed-width words.
Reproducibility is per build: the same seed and table give the same
samples on the same Python version.
"""
from __future__ import annotations

import random

from .counting import CountTable
from .trees import DepTree, Forest, parse, parse_forest


class SamplerState:
    """A seeded random stream bound to an immutable count table.

    Single-owner mutable: each draw advances the stream.  Distinct states
    (even over a shared table) can be used concurrently.
    """

    def __init__(self, table: CountTable, seed: int):
        self.table = table
        self.seed = seed
        self._rng = random.Random(seed)

    def draw_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection from fixed-width words.

        The word width is the bit length of bound - 1, so each attempt
        succeeds with probability > 1/2 regardless of bound's size.
        A bound of 1 consumes no randomness.
        """
        if bound < 1:
            raise ValueError(f"draw bound must be positive, got {bound}")
        if bound == 1:
            return 0
        bits = (bound - 1).bit_length()
        while True:
            word = self._rng.getrandbits(bits)
            if word < bound:
                return word


# token-emission sampler: grows an output string over an explicit work
# stack instead of recursing, since chains reach depth n
_TREE = 0
_FOREST = 1
_LITERAL = 2


def _emit(start_kind: int, start_size: int, state: SamplerState) -> str:
    table = state.table
    out = []
    stack = [(start_kind, start_size)]
    while stack:
        kind, m = stack.pop()
        if kind == _LITERAL:
            out.append(m)
        elif kind == _TREE:
            target = state.draw_below(table.tree_count(m))
            acc = 0
            i = -1
            while target >= acc:
                i += 1
                acc += table.forest_count(i) * table.forest_count(m - 1 - i)
            stack.append((_LITERAL, "]"))
            stack.append((_FOREST, m - 1 - i))
            stack.append((_LITERAL, "|"))
            stack.append((_FOREST, i))
            stack.append((_LITERAL, "["))
        elif m > 0:
            target = state.draw_below(table.forest_count(m))
            acc = 0
            k = 0
            while target >= acc:
                k += 1
                acc += table.tree_count(k) * table.forest_count(m - k)
            stack.append((_FOREST, m - k))
            stack.append((_TREE, k))
    return "".join(out)


def sample_tree(n: int, state: SamplerState) -> DepTree:
    """One uniform tree of size exactly n; needs n within the table range."""
    state.table.tree_count(n)  # range check before consuming randomness
    return parse(_emit(_TREE, n, state))


def sample_forest(m: int, state: SamplerState) -> Forest:
    """One uniform forest of total size m (m = 0 gives the empty forest)."""
    state.table.forest_count(m)
    return parse_forest(_emit(_FOREST, m, state))
