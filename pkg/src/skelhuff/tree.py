"""Huffman trees, q-sources, and code costs.

The q-source of a prefix-free code is the vector whose entry at position
l counts the codewords of length l.  Everything here uses exact integer
arithmetic: equal weights must compare equal, otherwise the weight-class
structure built downstream falls apart.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import (
    ArityMismatchError,
    EmptyInputError,
    NonPositiveWeightError,
    NotFullTreeError,
    WeightOverflowError,
)

# On-disk inputs are capped so every node weight fits an unsigned 64-bit
# integer; in-memory arithmetic is arbitrary precision.
MAX_TOTAL_WEIGHT = 1 << 63


class Node:
    """Full binary tree node.  Leaves carry a symbol id and no children."""

    __slots__ = ("weight", "left", "right", "symbol")

    def __init__(
        self,
        weight: int,
        left: "Node | None" = None,
        right: "Node | None" = None,
        symbol: int | None = None,
    ):
        self.weight = weight
        self.left = left
        self.right = right
        self.symbol = symbol

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"Node({self.weight}, symbol={self.symbol})"
        return f"Node({self.weight}, <2 children>)"


def check_weights(w) -> None:
    """Validate a weight sequence: non-empty, positive integers only."""
    if len(w) == 0:
        raise EmptyInputError("at least one weight is required")
    for x in w:
        if not isinstance(x, int) or isinstance(x, bool):
            raise NonPositiveWeightError(f"weight {x!r} is not an integer")
        if x < 1:
            raise NonPositiveWeightError(f"weight {x} is not positive")


def build_huffman_tree(w, seed: int | None = None) -> Node:
    """Build a Huffman tree over positive integer weights.

    Uses the classic two-queue construction: sorted leaves in one queue,
    merged nodes in FIFO order in the other.  With ``seed=None`` ties are
    broken deterministically (the leaf queue wins, equal leaves keep their
    input order).  With an integer seed every pick among the equal-weight
    front candidates of both queues is uniformly random, which samples the
    distinct Huffman trees that exist for the same weights.

    Leaf symbols are indices into ``w``.
    """
    check_weights(w)
    n = len(w)
    if n == 1:
        return Node(w[0], symbol=0)
    order = sorted(range(n), key=w.__getitem__)
    leaves = [Node(w[i], symbol=i) for i in order]
    internals: list[Node] = []
    rng = random.Random(seed) if seed is not None else None
    li = ii = 0

    def pop_smallest() -> Node:
        nonlocal li, ii
        lw = leaves[li].weight if li < len(leaves) else None
        iw = internals[ii].weight if ii < len(internals) else None
        if rng is None:
            if iw is None or (lw is not None and lw <= iw):
                li += 1
                return leaves[li - 1]
            ii += 1
            return internals[ii - 1]
        low = lw if iw is None or (lw is not None and lw <= iw) else iw
        cl = 0
        while li + cl < len(leaves) and leaves[li + cl].weight == low:
            cl += 1
        ci = 0
        while ii + ci < len(internals) and internals[ii + ci].weight == low:
            ci += 1
        j = rng.randrange(cl + ci)
        if j < cl:
            leaves[li], leaves[li + j] = leaves[li + j], leaves[li]
            li += 1
            return leaves[li - 1]
        j -= cl
        internals[ii], internals[ii + j] = internals[ii + j], internals[ii]
        ii += 1
        return internals[ii - 1]

    remaining = n
    while remaining > 1:
        a = pop_smallest()
        b = pop_smallest()
        internals.append(Node(a.weight + b.weight, a, b))
        remaining -= 1
    return internals[-1]


def iter_nodes(root: Node):
    """Yield every node of a full binary tree, parents before children."""
    stack = [root]
    while stack:
        node = stack.pop()
        if (node.left is None) != (node.right is None):
            raise NotFullTreeError("node has exactly one child")
        yield node
        if node.left is not None:
            stack.append(node.right)
            stack.append(node.left)


def q_source_of(root: Node) -> tuple[int, ...]:
    """Return the q-source of a full code tree, padded to length n.

    Entry l-1 counts the leaves of depth l.  A single-leaf tree has the
    empty q-source by convention.
    """
    counts: dict[int, int] = {}
    n = 0
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        if (node.left is None) != (node.right is None):
            raise NotFullTreeError("node has exactly one child")
        if node.left is None:
            counts[depth] = counts.get(depth, 0) + 1
            n += 1
        else:
            stack.append((node.right, depth + 1))
            stack.append((node.left, depth + 1))
    if n == 1:
        return ()
    q = [0] * n
    for depth, c in counts.items():
        q[depth - 1] = c
    return tuple(q)


def kraft_sum(q) -> Fraction:
    """Exact value of sum q_l / 2**l with l starting at 1."""
    L = len(q)
    num = 0
    for i, c in enumerate(q):
        num += c << (L - 1 - i)
    return Fraction(num, 1 << L)


def code_cost(q, w) -> int:
    """Total encoded length sum l_i * w_i under the cheapest assignment.

    Codeword lengths are taken from the q-source in ascending order and
    paired with the weights in descending order.
    """
    n = len(w)
    if n == 1 and sum(q) == 0:
        return 0
    if sum(q) != n:
        raise ArityMismatchError(f"q-source describes {sum(q)} symbols, got {n} weights")
    lengths = []
    for i, c in enumerate(q):
        lengths.extend([i + 1] * c)
    return sum(l * x for l, x in zip(lengths, sorted(w, reverse=True)))


def parse_weights_text(text: str) -> list[int]:
    """Parse one positive decimal integer per line; '#' starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        token = raw.split("#", 1)[0].strip()
        if not token:
            continue
        try:
            x = int(token)
        except ValueError:
            raise ValueError(f"line {lineno}: not an integer: {token!r}") from None
        if x < 1:
            raise NonPositiveWeightError(f"line {lineno}: weight {x} is not positive")
        out.append(x)
    return out


def load_weights_file(path) -> list[int]:
    """Load a weights file, enforcing the on-disk total-weight cap."""
    with open(path, "r", encoding="utf-8") as fh:
        w = parse_weights_text(fh.read())
    check_weights(w)
    if sum(w) > MAX_TOTAL_WEIGHT:
        raise WeightOverflowError(f"total weight exceeds {MAX_TOTAL_WEIGHT}")
    return w


def byte_frequency_weights(data: bytes) -> list[int]:
    """Frequencies of the byte values present in data, ascending by byte."""
    counts = [0] * 256
    for b in data:
        counts[b] += 1
    return [c for c in counts if c > 0]
