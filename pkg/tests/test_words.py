import math
import random

import pytest

from pdef import (
    EPSILON,
    Word,
    cyclic_reduce,
    nu_p,
    primitive_root,
    reduce,
    word_power,
)
from oracles import brute_force_nu, random_reduced_word


def W(*letters):
    return Word(tuple(letters))


def test_reduce_examples():
    assert reduce([1, -1]) == EPSILON
    assert reduce([1, 2, -2, 1]) == W(1, 1)
    assert reduce([1, 2, -1]) == W(1, 2, -1)


def test_reduce_rejects_bad_letters():
    with pytest.raises(ValueError):
        reduce([0])
    with pytest.raises(ValueError):
        reduce([3], n_generators=2)
    with pytest.raises(ValueError):
        Word((1, -1))


def test_cyclic_reduce_examples():
    assert cyclic_reduce(W(2, 1, 1, -2)) == (W(2), W(1, 1))
    assert cyclic_reduce(W(1, 2)) == (EPSILON, W(1, 2))
    assert cyclic_reduce(EPSILON) == (EPSILON, EPSILON)


def test_primitive_root_examples():
    d = primitive_root(W(1, 2, 1, 2, 1, 2))
    assert (d.root, d.exponent, d.conjugator) == (W(1, 2), 3, EPSILON)

    d = primitive_root(W(1))
    assert (d.root, d.exponent, d.conjugator) == (W(1), 1, EPSILON)

    # y x x y^-1 = (y x y^-1)^2
    d = primitive_root(W(2, 1, 1, -2))
    assert d.exponent == 2
    assert d.exact_root() == W(2, 1, -2)
    assert word_power(d.exact_root(), 2) == W(2, 1, 1, -2)

    d = primitive_root(EPSILON)
    assert d.root == EPSILON and d.exponent == 0


def test_nu_p_examples():
    assert nu_p(W(1, 1, 1), 3) == 1
    assert nu_p(word_power(W(1, 2), 4), 2) == 2
    assert nu_p(W(1, -2, 1), 5) == 0
    assert nu_p(EPSILON, 7) == math.inf
    with pytest.raises(ValueError):
        nu_p(W(1), 4)


def test_word_power_examples():
    assert word_power(W(1), 3) == W(1, 1, 1)
    assert word_power(W(1, 2), 0) == EPSILON
    assert word_power(W(1, 2, -1), 2) == W(1, 2, 2, -1)
    assert word_power(W(1, 2), -2) == W(-2, -1, -2, -1)


def test_reduce_idempotent_and_inverse_cancels():
    rng = random.Random(7)
    for _ in range(200):
        w = random_reduced_word(rng, 3, rng.randrange(0, 12))
        assert reduce(w.letters) == w
        assert w * w.inverse() == EPSILON


def test_power_multiplies_root_exponent():
    rng = random.Random(11)
    for _ in range(100):
        u = random_reduced_word(rng, 2, rng.randrange(1, 7))
        e = primitive_root(u).exponent
        for m in range(1, 9):
            assert primitive_root(word_power(u, m)).exponent == m * e


def test_nu_p_additive_in_p_powers():
    rng = random.Random(13)
    for p in (2, 3, 5):
        for _ in range(40):
            u = random_reduced_word(rng, 2, rng.randrange(1, 6))
            base = nu_p(u, p)
            for k in range(0, 4):
                assert nu_p(word_power(u, p**k), p) == k + base


def test_root_reassembly():
    rng = random.Random(17)
    for _ in range(300):
        w = random_reduced_word(rng, 3, rng.randrange(1, 14))
        d = primitive_root(w)
        assert d.reassemble() == w
        assert d.conjugator * word_power(d.root, d.exponent) * d.conjugator.inverse() == w
        assert primitive_root(d.root).exponent == 1


def test_nu_p_matches_brute_force():
    rng = random.Random(19)
    for p in (2, 3):
        for _ in range(60):
            base = random_reduced_word(rng, 2, rng.randrange(1, 5))
            w = word_power(base, rng.randrange(1, 9))
            assert nu_p(w, p) == brute_force_nu(w, p)
