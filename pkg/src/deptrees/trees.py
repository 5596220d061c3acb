"""Dependency trees: the data model, canonical text form, and exhaustive enumeration.

A dependency tree is a rooted plane tree whose root carries an ordered
sequence of left subtrees and an ordered sequence of right subtrees.  A
forest is an ordered (possibly empty) sequence of dependency trees.

Canonical grammar (ASCII, no separators)::

    tree := "[" tree* "|" tree* "]"

The left children appear before the "|", the right children after it.
Serialization is injective, and byte-lexicographic order of serializations
defines the total order on trees.  All traversals in this module use
explicit stacks, so chains thousands of nodes deep are safe.

Exhaustive enumeration is intentionally capped (default 10, where there are
already 690690 trees); it exists as ground truth for the formula-based
modules, not as a production path.
"""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ORACLE_LIMIT = 10


class ParseError(ValueError):
    """Malformed tree text; ``offset`` is the first offending byte."""

    def __init__(self, reason: str, offset: int):
        super().__init__(f"parse error at byte {offset}: {reason}")
        self.offset = offset


class OracleLimitError(ValueError):
    """Requested size is beyond the exhaustive-enumeration limit."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"size {n} exceeds the enumeration limit {limit}; "
            f"pass a larger limit explicitly to enumerate beyond it"
        )
        self.limit = limit


@dataclass(frozen=True, eq=False, repr=False)
class DepTree:
    """An immutable dependency tree node.

    Equality, ordering, and hashing all go through the canonical
    serialization, which keeps them iterative (structural recursion would
    overflow on deep chains).
    """

    left: tuple[DepTree, ...] = ()
    right: tuple[DepTree, ...] = ()

    def __post_init__(self):
        if not isinstance(self.left, tuple):
            object.__setattr__(self, "left", tuple(self.left))
        if not isinstance(self.right, tuple):
            object.__setattr__(self, "right", tuple(self.right))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DepTree):
            return NotImplemented
        return serialize(self) == serialize(other)

    def __hash__(self):
        return hash(serialize(self))

    def __lt__(self, other):
        if not isinstance(other, DepTree):
            return NotImplemented
        return serialize(self) < serialize(other)

    def __repr__(self):
        text = serialize(self)
        if len(text) > 48:
            return f"<DepTree size={size(self)}>"
        return f"<DepTree {text}>"


Forest = tuple[DepTree, ...]


def size(t: DepTree) -> int:
    """Number of nodes in ``t`` (always at least 1)."""
    total = 0
    stack = [t]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(node.left)
        stack.extend(node.right)
    return total


def total_size(forest: Forest) -> int:
    """Sum of the sizes of the trees in ``forest`` (0 for the empty forest)."""
    return sum(size(t) for t in forest)


def iter_subtrees(t: DepTree):
    """Yield every subtree of ``t`` (including ``t`` itself), one per node."""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(node.left)
        stack.extend(node.right)


def serialize(t: DepTree) -> str:
    """Canonical text form of ``t`` per the grammar above."""
    out: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append("[")
        stack.append("]")
        stack.extend(reversed(item.right))
        stack.append("|")
        stack.extend(reversed(item.left))
    return "".join(out)


def serialize_forest(forest: Forest) -> str:
    """Concatenated serializations; uniquely decodable (trees self-delimit)."""
    return "".join(serialize(t) for t in forest)


def _parse_tree_at(s: str, pos: int) -> tuple[DepTree, int]:
    if pos >= len(s):
        raise ParseError("unexpected end of input, expected '['", pos)
    if s[pos] != "[":
        raise ParseError(f"expected '[', found {s[pos]!r}", pos)
    pos += 1
    # each frame: (left children, right children or None while before the '|')
    stack: list[tuple[list, list | None]] = [([], None)]
    while True:
        if pos >= len(s):
            raise ParseError("unexpected end of input (unclosed bracket)", pos)
        ch = s[pos]
        if ch == "[":
            stack.append(([], None))
        elif ch == "|":
            left, right = stack[-1]
            if right is not None:
                raise ParseError("second '|' within one node", pos)
            stack[-1] = (left, [])
        elif ch == "]":
            left, right = stack.pop()
            if right is None:
                raise ParseError("missing '|' before ']'", pos)
            node = DepTree(tuple(left), tuple(right))
            pos += 1
            if not stack:
                return node, pos
            parent_left, parent_right = stack[-1]
            (parent_left if parent_right is None else parent_right).append(node)
            continue
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos += 1


def parse(s: str) -> DepTree:
    """Inverse of :func:`serialize`; raises :class:`ParseError` on bad input."""
    tree, end = _parse_tree_at(s, 0)
    if end != len(s):
        raise ParseError("trailing input after a complete tree", end)
    return tree


def parse_forest(s: str) -> Forest:
    """Parse a concatenation of serialized trees (possibly empty)."""
    pos = 0
    out = []
    while pos < len(s):
        tree, pos = _parse_tree_at(s, pos)
        out.append(tree)
    return tuple(out)


# ── exhaustive enumeration (the oracle) ─────────────────────────────────────
#
# A size-n tree decomposes uniquely into a left forest of size i and a right
# forest of size j with i + j = n - 1; a nonempty forest decomposes uniquely
# by the size of its first tree.  Cross products over those decompositions
# therefore enumerate without duplicates.

_TREES: dict[int, tuple[DepTree, ...]] = {}
_FORESTS: dict[int, tuple[Forest, ...]] = {0: ((),)}


def _trees(n: int) -> tuple[DepTree, ...]:
    cached = _TREES.get(n)
    if cached is not None:
        return cached
    out = []
    for i in range(n):
        for lf in _forests(i):
            for rf in _forests(n - 1 - i):
                out.append(DepTree(lf, rf))
    out.sort(key=serialize)
    result = tuple(out)
    _TREES[n] = result
    return result


def _forests(m: int) -> tuple[Forest, ...]:
    cached = _FORESTS.get(m)
    if cached is not None:
        return cached
    out = []
    for k in range(1, m + 1):
        for first in _trees(k):
            for rest in _forests(m - k):
                out.append((first,) + rest)
    out.sort(key=serialize_forest)
    result = tuple(out)
    _FORESTS[m] = result
    return result


def enumerate_trees(n: int, limit: int = DEFAULT_ORACLE_LIMIT) -> list[DepTree]:
    """Every tree of size ``n`` exactly once, sorted by serialization.

    Refuses ``n > limit``: the counts grow like (27/4)^n, so unbounded
    enumeration is never what you want by accident.
    """
    if n < 1:
        raise ValueError(f"tree size must be at least 1, got {n}")
    if n > limit:
        raise OracleLimitError(n, limit)
    return list(_trees(n))


def enumerate_forests(m: int, limit: int = DEFAULT_ORACLE_LIMIT) -> list[Forest]:
    """Every forest of total size ``m``, sorted by concatenated serialization."""
    if m < 0:
        raise ValueError(f"forest size must be nonnegative, got {m}")
    if m > limit:
        raise OracleLimitError(m, limit)
    return list(_forests(m))
