import random
from fractions import Fraction

import pytest

import skelhuff as sh


def leaf_depths(root):
    out = {}
    stack = [(root, 0)]
    while stack:
        node, d = stack.pop()
        if node.left is None:
            out[node.symbol] = d
        else:
            stack.append((node.left, d + 1))
            stack.append((node.right, d + 1))
    return out


def test_deterministic_tree_shape():
    root = sh.build_huffman_tree([2, 2, 3, 3, 4, 5])
    assert root.weight == 19
    assert sh.q_source_of(root) == (0, 2, 4, 0, 0, 0)
    depths = leaf_depths(root)
    assert depths[4] == 2 and depths[5] == 2
    assert depths[0] == depths[1] == depths[2] == depths[3] == 3


def test_single_symbol_tree():
    root = sh.build_huffman_tree([9])
    assert root.is_leaf and root.symbol == 0 and root.weight == 9
    assert sh.q_source_of(root) == ()


def test_two_symbols():
    root = sh.build_huffman_tree([5, 7])
    assert sh.q_source_of(root) == (2, 0)
    assert root.left.weight == 5 and root.right.weight == 7


def test_weight_validation():
    with pytest.raises(sh.EmptyInputError):
        sh.build_huffman_tree([])
    for bad in ([0], [-3], [1.5], [True], [2, None]):
        with pytest.raises(sh.NonPositiveWeightError):
            sh.build_huffman_tree(bad)


def test_seeded_trees_are_valid():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(2, 12)
        w = [rng.randint(1, 15) for _ in range(n)]
        root = sh.build_huffman_tree(w, seed=rng.randrange(10**6))
        assert root.weight == sum(w)
        q = sh.q_source_of(root)
        assert len(q) == n and sum(q) == n
        assert sh.kraft_sum(q) == 1
        # every seeded tree costs the same as the deterministic one
        base = sh.code_cost(sh.q_source_of(sh.build_huffman_tree(w)), w)
        assert sh.code_cost(q, w) == base


def test_iter_nodes_counts_and_rejects_partial():
    root = sh.build_huffman_tree([1, 2, 3, 4])
    assert sum(1 for _ in sh.iter_nodes(root)) == 7
    broken = sh.Node(3, sh.Node(3, symbol=0), None)
    with pytest.raises(sh.NotFullTreeError):
        list(sh.iter_nodes(broken))


def test_kraft_sum():
    assert sh.kraft_sum(()) == 0
    assert sh.kraft_sum((2,)) == 1
    assert sh.kraft_sum((1, 1)) == Fraction(3, 4)
    assert sh.kraft_sum((0, 2, 4, 0, 0, 0)) == 1


def test_code_cost():
    assert sh.code_cost((0, 2, 4, 0, 0, 0), [2, 2, 3, 3, 4, 5]) == 48
    assert sh.code_cost((2, 0), [5, 7]) == 12
    assert sh.code_cost((), [42]) == 0
    with pytest.raises(sh.ArityMismatchError):
        sh.code_cost((2, 0), [1, 2, 3])


def test_parse_weights_text():
    text = "# header\n5\n 7 \n\n# tail\n3\n"
    assert sh.parse_weights_text(text) == [5, 7, 3]
    with pytest.raises(ValueError) as err:
        sh.parse_weights_text("5\nx\n")
    assert "line 2" in str(err.value)
    with pytest.raises(sh.NonPositiveWeightError):
        sh.parse_weights_text("5\n0\n")


def test_load_weights_file(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("4\n1\n1\n")
    assert sh.load_weights_file(path) == [4, 1, 1]
    big = tmp_path / "big.txt"
    big.write_text(f"{1 << 62}\n{1 << 62}\n1\n")
    with pytest.raises(sh.WeightOverflowError):
        sh.load_weights_file(big)
    edge = tmp_path / "edge.txt"
    edge.write_text(f"{1 << 62}\n{1 << 62}\n")
    assert sum(sh.load_weights_file(edge)) == sh.MAX_TOTAL_WEIGHT


def test_byte_frequency_weights():
    assert sh.byte_frequency_weights(b"abca") == [2, 1, 1]
    assert sh.byte_frequency_weights(b"") == []
    assert sh.byte_frequency_weights(bytes([255, 0, 255])) == [1, 2]
