import random

import pytest

import skelhuff as sh

popc = int.bit_count


def test_two_symbols_unique_profile():
    assert sh.enumerate_optimal_q_sources([5, 7]) == {(2, 0)}
    assert sh.brute_min_pop([5, 7]) == 1


def test_three_equal_weights():
    assert sh.enumerate_optimal_q_sources([1, 1, 1]) == {(1, 2, 0)}


def test_known_multi_profile_input():
    found = sh.enumerate_optimal_q_sources([1, 1, 1, 3, 3, 9, 9])
    assert (1, 1, 1, 1, 1, 2, 0) in found
    assert (0, 2, 3, 2, 0, 0, 0) in found
    assert sh.brute_min_pop([1, 1, 1, 3, 3, 9, 9]) == 4


def test_six_symbol_input():
    found = sh.enumerate_optimal_q_sources([2, 2, 3, 3, 4, 5])
    assert (0, 2, 4, 0, 0, 0) in found
    assert sh.brute_min_pop([2, 2, 3, 3, 4, 5]) == 2


def test_single_symbol():
    assert sh.enumerate_optimal_q_sources([3]) == {()}
    assert sh.brute_min_pop([3]) == 1


def test_size_cap():
    with pytest.raises(sh.TooLargeError):
        sh.enumerate_optimal_q_sources([1] * 15)
    assert sh.enumerate_optimal_q_sources([1] * 15, max_n=15) != set()


def test_enumerated_profiles_are_optimal_codes():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 9)
        w = [rng.randint(1, 20) for _ in range(n)]
        best = sh.code_cost(sh.q_source_of(sh.build_huffman_tree(w)), w)
        found = sh.enumerate_optimal_q_sources(w)
        assert found
        for q in found:
            assert len(q) == n and sum(q) == n
            assert sh.kraft_sum(q) == 1
            assert sh.code_cost(q, w) == best


def test_every_tree_profile_is_enumerated():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(2, 9)
        w = [rng.randint(1, 12) for _ in range(n)]
        found = sh.enumerate_optimal_q_sources(w)
        for s in range(12):
            q = sh.q_source_of(sh.build_huffman_tree(w, seed=s))
            assert q in found
