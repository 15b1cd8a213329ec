import random

import pytest

import skelhuff as sh

popc = int.bit_count


def collect_codes(root):
    out = {}
    stack = [(root, "")]
    while stack:
        node, pref = stack.pop()
        if node.left is None:
            out[node.symbol] = pref
        else:
            stack.append((node.right, pref + "1"))
            stack.append((node.left, pref + "0"))
    return out


def skeleton_shape(skel):
    """Nested tuples of leaf heights, for structural comparison."""
    if skel.left is None:
        return skel.height
    return (skeleton_shape(skel.left), skeleton_shape(skel.right))


def test_shrink_perfect_tree_to_one_leaf():
    root = sh.build_huffman_tree([1, 1, 1, 1])
    skel = sh.shrink_tree(root)
    assert skel.is_leaf and skel.height == 2
    assert skel.weight == 4 and skel.source is root


def test_shrink_keeps_irregular_parts():
    root = sh.build_huffman_tree([2, 2, 3, 3, 4, 5])
    skel = sh.shrink_tree(root)
    assert sh.count_skeleton_nodes(skel) == 7
    heights = sorted(leaf.height for leaf in sh.iter_skeleton_leaves(skel))
    assert heights == [0, 0, 1, 1]


def test_q_prime_goldens():
    assert sh.q_prime_of(()) == (1,)
    assert sh.q_prime_of((0, 4)) == (1,)
    assert sh.q_prime_of((0, 2, 4)) == (0, 2)
    assert sh.q_prime_of((1, 1, 2)) == (0, 1, 2)


def test_profile_validation():
    with pytest.raises(sh.KraftNotOneError):
        sh.q_prime_of((1,))
    with pytest.raises(sh.KraftNotOneError):
        sh.skeleton_from_q_source((0, 3))
    with pytest.raises(sh.KraftNotOneError):
        sh.skeleton_from_q_source((2, -1, 2))


def test_skeleton_from_profile_shapes():
    assert skeleton_shape(sh.skeleton_from_q_source((0, 4))) == 2
    assert skeleton_shape(sh.skeleton_from_q_source((0, 2, 4))) == (1, 2)
    assert skeleton_shape(sh.skeleton_from_q_source(())) == 0
    skel = sh.skeleton_from_q_source((1, 1, 2))
    assert sh.count_skeleton_nodes(skel) == 5
    assert skeleton_shape(skel) == (0, (0, 1))


def test_skeleton_leaf_count_matches_popcounts():
    for q in [(2,), (0, 4), (0, 2, 4), (1, 1, 2), (1, 2, 0), (0, 2, 3, 2, 0, 0, 0)]:
        skel = sh.skeleton_from_q_source(q)
        leaves = sum(1 for _ in sh.iter_skeleton_leaves(skel))
        want = sum(popc(x) for x in q)
        assert leaves == want
        assert sh.count_skeleton_nodes(skel) == 2 * want - 1


def test_code_tree_assignment():
    w = [2, 2, 3, 3, 4, 5]
    tree = sh.code_tree_from_q_source((0, 2, 4, 0, 0, 0), w)
    assert collect_codes(tree) == {5: "00", 4: "01", 2: "100", 3: "101", 0: "110", 1: "111"}
    assert tree.weight == 19
    tree = sh.code_tree_from_q_source((2, 0), [5, 7])
    assert collect_codes(tree) == {1: "0", 0: "1"}
    tree = sh.code_tree_from_q_source((0, 4, 0, 0), [1, 1, 1, 1])
    assert collect_codes(tree) == {0: "00", 1: "01", 2: "10", 3: "11"}


def test_code_tree_validation():
    with pytest.raises(sh.ArityMismatchError):
        sh.code_tree_from_q_source((2, 0), [1, 2, 3])
    with pytest.raises(sh.KraftNotOneError):
        sh.code_tree_from_q_source((1, 1, 1), [1, 2, 3])
    single = sh.code_tree_from_q_source((), [8])
    assert single.is_leaf and single.symbol == 0


def test_expand_then_shrink_is_identity():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randint(2, 24)
        w = [rng.randint(1, 30) for _ in range(n)]
        q = sh.q_source_of(sh.build_huffman_tree(w, seed=rng.randrange(10**6)))
        direct = sh.skeleton_from_q_source(q)
        rebuilt = sh.shrink_tree(sh.code_tree_from_q_source(q, w))
        assert skeleton_shape(rebuilt) == skeleton_shape(direct)


def test_optimal_skeleton_pipeline():
    res = sh.optimal_skeleton([2, 2, 3, 3, 4, 5])
    assert res.q == (0, 2, 4, 0, 0, 0)
    assert res.min_pop == 2
    assert res.skeleton_nodes == 3
    assert sh.count_skeleton_nodes(res.skeleton) == 3
    assert res.code_tree.weight == 19


def test_optimal_skeleton_single_symbol():
    res = sh.optimal_skeleton([10])
    assert res.q == () and res.min_pop == 1 and res.skeleton_nodes == 1
    assert res.skeleton.height == 0
    assert res.code_tree.is_leaf
