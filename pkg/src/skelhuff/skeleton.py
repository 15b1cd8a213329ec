"""Shrinking code trees and rebuilding them from length profiles.

A skeleton is what remains of a code tree after every maximal perfect
subtree is collapsed into a single leaf that remembers the height m of
what it replaced (m = 0 for an ordinary leaf).  A profile q with leaf
count q_l at depth l yields a skeleton with one leaf of height m at depth
l - m per set bit m of q_l, so the skeleton has sum(popcount(q_l)) leaves
and twice that minus one nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ArityMismatchError,
    InternalInconsistencyError,
    KraftNotOneError,
    NonPositiveWeightError,
)
from .tree import Node, check_weights, q_source_of
from .classes import build_class_table
from .dp import optimal_q_source

_popcount = int.bit_count


class SkelNode:
    """Skeleton tree node.

    Leaves carry height (the collapsed subtree's height m), and when the
    skeleton was shrunk from a weighted tree also weight and source (the
    root of the collapsed subtree).  Internal nodes have height None.
    """

    __slots__ = ("left", "right", "height", "weight", "source")

    def __init__(self, left=None, right=None, height=None, weight=None, source=None):
        self.left = left
        self.right = right
        self.height = height
        self.weight = weight
        self.source = source

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"SkelNode(height={self.height}, weight={self.weight})"
        return "SkelNode(<2 children>)"


def shrink_tree(root: Node) -> SkelNode:
    """Collapse every maximal perfect subtree of a code tree into a leaf."""
    post: list[Node] = []
    stack = [root]
    while stack:
        node = stack.pop()
        post.append(node)
        if node.left is not None:
            stack.append(node.left)
            stack.append(node.right)
    perfect: dict[int, tuple[bool, int]] = {}
    for node in reversed(post):
        if node.left is None:
            perfect[id(node)] = (True, 0)
        else:
            pl, hl = perfect[id(node.left)]
            pr, hr = perfect[id(node.right)]
            ok = pl and pr and hl == hr
            perfect[id(node)] = (ok, hl + 1 if ok else -1)

    out: dict[int, SkelNode] = {}
    for node in reversed(post):
        ok, height = perfect[id(node)]
        if ok:
            out[id(node)] = SkelNode(height=height, weight=node.weight, source=node)
        else:
            out[id(node)] = SkelNode(left=out[id(node.left)], right=out[id(node.right)])
    return out[id(root)]


def count_skeleton_nodes(skel: SkelNode) -> int:
    stack = [skel]
    total = 0
    while stack:
        node = stack.pop()
        total += 1
        if node.left is not None:
            stack.append(node.left)
            stack.append(node.right)
    return total


def iter_skeleton_leaves(skel: SkelNode):
    """Skeleton leaves in left-to-right order."""
    stack = [skel]
    while stack:
        node = stack.pop()
        if node.left is None:
            yield node
        else:
            stack.append(node.right)
            stack.append(node.left)


def _check_profile(q) -> int:
    """Validate a nonempty profile; returns its symbol count."""
    total = 0
    for x in q:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise KraftNotOneError(f"profile entry {x!r} is not a nonnegative integer")
        total += x
    L = len(q)
    mass = sum(x << (L - l) for l, x in enumerate(q, start=1))
    if mass != 1 << L:
        raise KraftNotOneError("profile does not satisfy the Kraft equality")
    return total


def _height_rows(q) -> list[list[int]]:
    """Per-depth sorted collapsed heights of the skeleton leaves for q."""
    rows: list[list[int]] = [[] for _ in range(len(q) + 1)]
    for l, x in enumerate(q, start=1):
        m = 0
        while x:
            if x & 1:
                rows[l - m].append(m)
            x >>= 1
            m += 1
    while rows and not rows[-1]:
        rows.pop()
    for row in rows:
        row.sort()
    return rows


def q_prime_of(q) -> tuple[int, ...]:
    """Skeleton leaf counts per depth, indexed from depth 0."""
    if len(q) == 0:
        return (1,)
    _check_profile(q)
    return tuple(len(row) for row in _height_rows(q))


def skeleton_from_q_source(q) -> SkelNode:
    """Minimum skeleton for a profile: leftmost leaves, heights ascending.

    At every depth the leaves occupy the leftmost positions in increasing
    height order and the internal nodes fill the rest.  No two leaves at
    one depth share a height, so re-expanding and shrinking gives the same
    skeleton back.
    """
    if len(q) == 0:
        return SkelNode(height=0)
    _check_profile(q)
    rows = _height_rows(q)
    levels: list[list[SkelNode]] = []
    width = 1
    for d, heights in enumerate(rows):
        if len(heights) > width:
            raise InternalInconsistencyError(f"depth {d} holds too many leaves")
        level = [SkelNode(height=m) for m in heights]
        internal = width - len(heights)
        level.extend(SkelNode() for _ in range(internal))
        levels.append(level)
        width = 2 * internal
    if width != 0:
        raise InternalInconsistencyError("dangling internal nodes below last depth")
    for d in range(len(levels) - 1):
        parents = [node for node in levels[d] if node.height is None]
        for i, parent in enumerate(parents):
            parent.left = levels[d + 1][2 * i]
            parent.right = levels[d + 1][2 * i + 1]
    return levels[0][0]


def _expand(skel: SkelNode) -> tuple[Node, list[list[Node]]]:
    """Blow skeleton leaves back up into perfect subtrees of their height.

    Returns the code tree root plus its leaves grouped by depth, each
    group in left-to-right order.  Leaf nodes start with weight None.
    """
    by_depth: dict[int, list[Node]] = {}

    root = Node(0)
    stack = [(skel, root, 0)]
    while stack:
        snode, cnode, depth = stack.pop()
        if snode.height is None:
            cnode.left = Node(0)
            cnode.right = Node(0)
            stack.append((snode.right, cnode.right, depth + 1))
            stack.append((snode.left, cnode.left, depth + 1))
            continue
        frontier = [cnode]
        d = depth
        for _ in range(snode.height):
            nxt = []
            for node in frontier:
                node.left = Node(0)
                node.right = Node(0)
                nxt.append(node.left)
                nxt.append(node.right)
            frontier = nxt
            d += 1
        by_depth.setdefault(d, []).extend(frontier)

    grouped = [by_depth[d] for d in sorted(by_depth)]
    return root, grouped


def code_tree_from_q_source(q, w) -> Node:
    """Canonical code tree for profile q with symbols assigned by weight.

    Depths are filled heaviest symbol first, scanning the leaves of the
    expanded minimum skeleton depth by depth and left to right; equal
    weights keep their index order.  Leaf symbols are indices into w.
    """
    check_weights(w)
    n = len(w)
    if n == 1:
        if len(q) != 0 and sum(q) != 0:
            raise ArityMismatchError("profile does not fit a single symbol")
        return Node(w[0], symbol=0)
    if sum(q) != n:
        raise ArityMismatchError(f"profile holds {sum(q)} codewords for {n} symbols")
    skel = skeleton_from_q_source(q)
    root, grouped = _expand(skel)

    order = sorted(range(n), key=lambda i: (-w[i], i))
    pos = 0
    for group in grouped:
        for leaf in group:
            sym = order[pos]
            pos += 1
            leaf.symbol = sym
            leaf.weight = w[sym]

    post: list[Node] = []
    stack = [root]
    while stack:
        node = stack.pop()
        post.append(node)
        if node.left is not None:
            stack.append(node.left)
            stack.append(node.right)
    for node in reversed(post):
        if node.left is not None:
            node.weight = node.left.weight + node.right.weight
    return root


@dataclass(frozen=True)
class SkeletonResult:
    """Everything the planner produces for one weight multiset."""

    q: tuple[int, ...]
    min_pop: int
    skeleton_nodes: int
    skeleton: SkelNode
    code_tree: Node


def optimal_skeleton(w, algo: str = "fast") -> SkeletonResult:
    """Smallest skeleton over all optimal prefix codes for the weights."""
    check_weights(w)
    if len(w) == 1:
        return SkeletonResult(
            q=(),
            min_pop=1,
            skeleton_nodes=1,
            skeleton=SkelNode(height=0, weight=w[0]),
            code_tree=Node(w[0], symbol=0),
        )
    from .tree import build_huffman_tree

    ct = build_class_table(build_huffman_tree(w))
    q = optimal_q_source(ct, algo=algo)
    min_pop = sum(_popcount(x) for x in q)
    code_tree = code_tree_from_q_source(q, w)
    skeleton = shrink_tree(code_tree)
    nodes = count_skeleton_nodes(skeleton)
    if nodes != 2 * min_pop - 1:
        raise InternalInconsistencyError(
            f"skeleton has {nodes} nodes, expected {2 * min_pop - 1}"
        )
    return SkeletonResult(
        q=q,
        min_pop=min_pop,
        skeleton_nodes=nodes,
        skeleton=skeleton,
        code_tree=code_tree,
    )
