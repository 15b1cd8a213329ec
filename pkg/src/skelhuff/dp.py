"""Minimum-popcount codeword-length profiles via a class-layer DP.

Every optimal prefix-free code for a weight multiset corresponds to some
Huffman tree, and all Huffman trees for the same weights share one class
table: nodes grouped by exact weight, heaviest class first.  Reading any
such tree level by level, node weights never increase, so each weight
class occupies at most two adjacent levels.  A level is therefore summed
up by a state (u, h, k): class u is the heaviest class with nodes on the
level, h of its nodes sit there, and k of those h are leaves.  The classes
strictly between u and the next state's class lie entirely on the current
level, which pins down the number of leaves per level, i.e. the length
profile q of the code.

The value minimized is the total popcount of q, because a profile with
leaf count q_l on level l contributes exactly popcount(q_l) shrunken
subtrees there once maximal perfect subtrees are collapsed.  f(u, h, k)
is the best popcount total for the levels from this one down; the answer
for n >= 2 symbols is f at the root state (0, 1, 0).

Two evaluators share the state graph.  The cubic one scans every k' of
the successor state directly.  The fast one splits the scanned interval
into aligned blocks on which popcount is additive, so each block is
resolved by a halving recursion g over block prefixes; memoised block
values are shared between states that scan overlapping intervals.
"""

from __future__ import annotations

from .classes import ClassTable
from .errors import EmptyKRangeError, EmptyRangeError, InternalInconsistencyError

_popcount = int.bit_count

# Below this successor-interval width the block machinery costs more than
# the plain scan, so the fast evaluator falls back to scanning.
_DIRECT_SCAN_LIMIT = 8


def split_pop_ranges(a: int, b: int) -> list[tuple[int, int]]:
    """Split [a, b) into aligned blocks [i, i + 2**d) with popcount additive.

    Each block starts at i whose d lowest bits are zero, so for every
    r < 2**d the identity popcount(i + r) == popcount(i) + popcount(r)
    holds.  Greedy from the left; at most 2 * log2(b) blocks come out.
    """
    if a >= b:
        raise EmptyRangeError(f"empty range [{a}, {b})")
    if a < 0:
        raise EmptyRangeError(f"range start {a} is negative")
    out = []
    i = a
    while i < b:
        if i == 0:
            d = (b - i).bit_length() - 1
        else:
            d = (i & -i).bit_length() - 1
            while i + (1 << d) > b:
                d -= 1
        out.append((i, d))
        i += 1 << d
    return out


def successor_layer(ct: ClassTable, u: int, h: int, k: int) -> tuple[int, int] | None:
    """Next level's state (u', h') below state (u, h, k), or None.

    None means no node remains below this level: every class from u on is
    all leaves, or the lighter-child class of the pending internal nodes
    is the lightest class and this level already absorbs everything.
    """
    t = ct.t[u]
    if t is None:
        return None
    wp = ct.wprime[t]
    ws = ct.wsecond[t]
    if wp < ws:
        if t != u or k != h:
            nxt = (ct.index_of(ws), 1)
        else:
            c = ct.index_of(wp)
            if ct.size[c] >= 2:
                nxt = (c, ct.size[c] - 1)
            elif c + 1 < len(ct):
                nxt = (c + 1, ct.size[c + 1])
            else:
                return None
    else:
        half = ct.index_of(wp)
        if t != u:
            nxt = (half, 2 * (ct.size[t] - ct.leaves[t]) + ct.delta[t])
        elif 2 * (h - k) + ct.delta[u] != 0:
            nxt = (half, 2 * (h - k) + ct.delta[u])
        elif half + 1 < len(ct):
            nxt = (half + 1, ct.size[half + 1])
        else:
            return None
    u2, h2 = nxt
    if u2 <= u or not 1 <= h2 <= ct.size[u2]:
        raise InternalInconsistencyError(
            f"state ({u}, {h}, {k}) stepped to invalid ({u2}, {h2})"
        )
    return nxt


def _reachable_pairs(ct: ClassTable) -> set[tuple[int, int]]:
    """All (u, h) pairs reachable from the root state (0, 1)."""
    seen = {(0, 1)}
    stack = [(0, 1)]
    while stack:
        u, h = stack.pop()
        lo, hi = ct.k_range(u, h)
        for k in range(lo, hi + 1):
            nxt = successor_layer(ct, u, h, k)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _g(u, h, kmax, d, fval, gval):
    """min over r < 2**d of f(u, h, kmax - r) + popcount(r), memoised."""
    key = (u, h, kmax, d)
    v = gval.get(key)
    if v is not None:
        return v
    if d == 0:
        v = fval[(u, h, kmax)]
    else:
        v0 = _g(u, h, kmax, d - 1, fval, gval)
        v1 = _g(u, h, kmax - (1 << (d - 1)), d - 1, fval, gval) + 1
        v = v0 if v0 <= v1 else v1
    gval[key] = v
    return v


def _evaluate(ct: ClassTable, fast: bool):
    """Fill f over the reachable states, bottom-up in class order.

    Returns (fval, fchoice, gval).  fchoice records how each state's
    minimum was realised: None at terminal states, ("scan", k') for a
    direct scan, ("block", (kmax, d)) for a popcount-aligned block whose
    inner argmin the replay re-derives from gval.
    """
    pairs = sorted(_reachable_pairs(ct), key=lambda p: -p[0])
    fval: dict = {}
    fchoice: dict = {}
    gval: dict = {}
    for u, h in pairs:
        lo, hi = ct.k_range(u, h)
        if lo > hi:
            raise EmptyKRangeError(f"state ({u}, {h}) admits no leaf count")
        for k in range(lo, hi + 1):
            nxt = successor_layer(ct, u, h, k)
            if nxt is None:
                fval[(u, h, k)] = _popcount(k + ct.lam_suffix(u))
                fchoice[(u, h, k)] = None
                continue
            u2, h2 = nxt
            lo2, hi2 = ct.k_range(u2, h2)
            delta = k + ct.lam_between(u, u2) + ct.leaves[u2]
            sub = fval
            if not fast or hi2 - lo2 < _DIRECT_SCAN_LIMIT:
                best = None
                bestk = lo2
                for k2 in range(lo2, hi2 + 1):
                    v = sub[(u2, h2, k2)] + _popcount(delta - k2)
                    if best is None or v < best:
                        best = v
                        bestk = k2
                fval[(u, h, k)] = best
                fchoice[(u, h, k)] = ("scan", bestk)
            else:
                best = None
                bestblock = None
                for i, d in split_pop_ranges(delta - hi2, delta - lo2 + 1):
                    v = _popcount(i) + _g(u2, h2, delta - i, d, sub, gval)
                    if best is None or v < best:
                        best = v
                        bestblock = (delta - i, d)
                fval[(u, h, k)] = best
                fchoice[(u, h, k)] = ("block", bestblock)
    return fval, fchoice, gval


def _replay(ct: ClassTable, fval, fchoice, gval) -> list[int]:
    """Walk the recorded choices from the root state; leaf count per level."""
    layers = []
    u, h, k = 0, 1, 0
    while True:
        choice = fchoice[(u, h, k)]
        if choice is None:
            layers.append(k + ct.lam_suffix(u))
            break
        u2, h2 = successor_layer(ct, u, h, k)
        kind, data = choice
        if kind == "scan":
            k2 = data
        else:
            kmax, d = data
            while d:
                d -= 1
                if gval[(u2, h2, kmax - (1 << d), d)] + 1 < gval[(u2, h2, kmax, d)]:
                    kmax -= 1 << d
            k2 = kmax
        delta = k + ct.lam_between(u, u2) + ct.leaves[u2]
        layers.append(delta - k2)
        u, h, k = u2, h2, k2
    return layers


def min_pop_cubic(ct: ClassTable) -> int:
    """Minimum total popcount of q over all optimal codes, direct scans."""
    if ct.n == 1:
        return 1
    fval, _, _ = _evaluate(ct, fast=False)
    return fval[(0, 1, 0)]


def min_pop_fast(ct: ClassTable) -> int:
    """Minimum total popcount of q, block-accelerated evaluation."""
    if ct.n == 1:
        return 1
    fval, _, _ = _evaluate(ct, fast=True)
    return fval[(0, 1, 0)]


def optimal_q_source(ct: ClassTable, algo: str = "fast") -> tuple[int, ...]:
    """A length profile q realising the minimum popcount total.

    Indexed from codeword length 1 and zero-padded to n entries; the
    empty tuple stands in for the single-symbol code.
    """
    if algo not in ("fast", "cubic"):
        raise ValueError(f"unknown algorithm {algo!r}")
    if ct.n == 1:
        return ()
    fval, fchoice, gval = _evaluate(ct, fast=algo == "fast")
    layers = _replay(ct, fval, fchoice, gval)
    if layers[0] != 0:
        raise InternalInconsistencyError("replay put a leaf on the root level")
    if sum(layers) != ct.n:
        raise InternalInconsistencyError("replay lost or invented leaves")
    if sum(_popcount(x) for x in layers) != fval[(0, 1, 0)]:
        raise InternalInconsistencyError("replay value differs from the optimum")
    q = layers[1:]
    return tuple(q + [0] * (ct.n - len(q)))
