"""Exhaustive reference answers for small inputs.

Enumerates every codeword-length profile that an optimal prefix-free code
for the given weights can have, by searching non-decreasing length
vectors against the sorted weights under the Kraft equality.  Intended
for cross-checking the DP on small n, not for production use.
"""

from __future__ import annotations

from .errors import TooLargeError
from .tree import build_huffman_tree, check_weights, code_cost, q_source_of

_popcount = int.bit_count


def enumerate_optimal_q_sources(w, max_n: int = 14) -> set[tuple[int, ...]]:
    """All length profiles of optimal codes, zero-padded to n entries."""
    check_weights(w)
    n = len(w)
    if n > max_n:
        raise TooLargeError(f"{n} symbols exceeds the search limit {max_n}")
    if n == 1:
        return {()}

    ws = sorted(w, reverse=True)
    cap = n - 1
    full = 1 << cap
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ws[i]

    # Optimal cost is known up front, so the cost bound is exact.
    best = code_cost(q_source_of(build_huffman_tree(w)), w)

    found: set[tuple[int, ...]] = set()
    lengths = [0] * n

    def dfs(i: int, prev: int, used: int, cost: int) -> None:
        if i == n:
            if used == full:
                q = [0] * n
                for l in lengths:
                    q[l - 1] += 1
                found.add(tuple(q))
            return
        s = n - i
        for l in range(prev, cap + 1):
            c = 1 << (cap - l)
            if used + c * s < full:
                break
            if used + c + (s - 1) > full:
                continue
            nc = cost + l * ws[i]
            if nc + l * suffix[i + 1] > best:
                break
            lengths[i] = l
            dfs(i + 1, l, used + c, nc)

    dfs(0, 1, 0, 0)
    return found


def brute_min_pop(w, max_n: int = 14) -> int:
    """Smallest popcount total over the enumerated optimal profiles."""
    if len(w) == 1:
        check_weights(w)
        return 1
    return min(
        sum(_popcount(x) for x in q)
        for q in enumerate_optimal_q_sources(w, max_n=max_n)
    )
