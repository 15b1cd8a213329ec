"""Weight classes of a Huffman tree.

Group the nodes of a Huffman tree by exact node weight, heaviest class
first.  The resulting table is a property of the weights alone: every
Huffman tree for the same multiset produces the same table, which is why
the layer dynamic program can run on the table instead of a tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, NotFullTreeError


@dataclass(frozen=True)
class WeightClass:
    """One row of the class table.

    wprime/wsecond are the child weights (wprime <= wsecond) of any
    internal node in the class, or None for an all-leaf class.  delta is 1
    when some node of weight wprime has a strictly lighter sibling.  t is
    the first table index at or after this row whose class contains an
    internal node, or None when every class from here on is all leaves.
    """

    weight: int
    size: int
    leaves: int
    wprime: int | None
    wsecond: int | None
    delta: int
    t: int | None


class ClassTable:
    """Immutable table of weight classes in strictly decreasing weight order."""

    __slots__ = (
        "rows", "n", "weight", "size", "leaves",
        "wprime", "wsecond", "delta", "t", "_index", "_lam_prefix",
    )

    def __init__(self, rows: list[WeightClass], n: int):
        self.rows = tuple(rows)
        self.n = n
        self.weight = tuple(r.weight for r in rows)
        self.size = tuple(r.size for r in rows)
        self.leaves = tuple(r.leaves for r in rows)
        self.wprime = tuple(r.wprime for r in rows)
        self.wsecond = tuple(r.wsecond for r in rows)
        self.delta = tuple(r.delta for r in rows)
        self.t = tuple(r.t for r in rows)
        self._index = {w: i for i, w in enumerate(self.weight)}
        prefix = [0]
        for lam in self.leaves:
            prefix.append(prefix[-1] + lam)
        self._lam_prefix = tuple(prefix)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, u: int) -> WeightClass:
        return self.rows[u]

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassTable) and self.rows == other.rows and self.n == other.n

    def __hash__(self):
        return hash((self.rows, self.n))

    def index_of(self, weight: int) -> int:
        """Table index of the class with this exact weight."""
        u = self._index.get(weight)
        if u is None:
            raise InternalInconsistencyError(f"no class of weight {weight}")
        return u

    def lam_suffix(self, u: int) -> int:
        """Leaves in all classes strictly lighter than class u."""
        return self._lam_prefix[-1] - self._lam_prefix[u + 1]

    def lam_between(self, u: int, v: int) -> int:
        """Leaves in the classes strictly between indices u and v."""
        return self._lam_prefix[v] - self._lam_prefix[u + 1]

    def k_range(self, u: int, h: int) -> tuple[int, int]:
        """Admissible count of leaves among h class-u nodes on one layer.

        The other size-h nodes of the class sit one layer higher, so the
        leaves not on this layer must fit among them.
        """
        lo = self.leaves[u] - self.size[u] + h
        if lo < 0:
            lo = 0
        return lo, min(h, self.leaves[u])

    def to_json_rows(self) -> list[dict]:
        """Rows as JSON-ready dicts; t is 1-based with 0 meaning 'none'."""
        return [
            {
                "weight": r.weight,
                "size": r.size,
                "leaves": r.leaves,
                "wprime": r.wprime,
                "wsecond": r.wsecond,
                "delta": r.delta,
                "t": 0 if r.t is None else r.t + 1,
            }
            for r in self.rows
        ]


def build_class_table(root) -> ClassTable:
    """Build the weight-class table from any Huffman tree for the weights."""
    sizes: dict[int, int] = {}
    leaf_counts: dict[int, int] = {}
    children: dict[int, tuple[int, int]] = {}
    lighter_sibling: dict[int, int] = {}

    stack = [root]
    n = 0
    while stack:
        node = stack.pop()
        if (node.left is None) != (node.right is None):
            raise NotFullTreeError("node has exactly one child")
        w = node.weight
        sizes[w] = sizes.get(w, 0) + 1
        if node.left is None:
            leaf_counts[w] = leaf_counts.get(w, 0) + 1
            n += 1
            continue
        a, b = node.left.weight, node.right.weight
        if a + b != w:
            raise InternalInconsistencyError("node weight is not the sum of its children")
        pair = (a, b) if a <= b else (b, a)
        prev = children.get(w)
        if prev is None:
            children[w] = pair
        elif prev != pair:
            raise InternalInconsistencyError(
                f"internal nodes of weight {w} have different child weights"
            )
        if a != b:
            heavy = max(a, b)
            lighter_sibling[heavy] = lighter_sibling.get(heavy, 0) + 1
            if lighter_sibling[heavy] > 1:
                raise InternalInconsistencyError(
                    f"two nodes of weight {heavy} have strictly lighter siblings"
                )
        stack.append(node.left)
        stack.append(node.right)

    weights_desc = sorted(sizes, reverse=True)
    r = len(weights_desc)
    t_vals: list[int | None] = [None] * r
    nxt: int | None = None
    for u in range(r - 1, -1, -1):
        w = weights_desc[u]
        if leaf_counts.get(w, 0) != sizes[w]:
            nxt = u
        t_vals[u] = nxt

    rows = []
    for u, w in enumerate(weights_desc):
        pair = children.get(w)
        wprime, wsecond = pair if pair is not None else (None, None)
        delta = 1 if wprime is not None and lighter_sibling.get(wprime) else 0
        rows.append(
            WeightClass(
                weight=w,
                size=sizes[w],
                leaves=leaf_counts.get(w, 0),
                wprime=wprime,
                wsecond=wsecond,
                delta=delta,
                t=t_vals[u],
            )
        )
    return ClassTable(rows, n)
