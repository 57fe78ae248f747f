"""Group law, lengths and reduced words of the affine Weyl group against a BFS oracle."""

import random

import pytest

from affine_nichols import affine_weyl as aw
from affine_nichols.affine_weyl import AffineRootLabel
from affine_nichols.roots import preset


def _random_element(sys, rng, n=8):
    return aw.from_word(sys, [rng.randrange(sys.rank + 1) for _ in range(n)])


@pytest.mark.parametrize("name, max_len", [("A2", 8), ("B2", 8), ("G2", 8), ("A3", 6)])
def test_length_agrees_with_bfs_oracle(name, max_len):
    sys = preset(name)
    oracle = aw.bfs_oracle(sys, max_len)
    for x, d in oracle.items():
        assert aw.length(x) == d


def test_oracle_small_counts(a2):
    assert len(aw.bfs_oracle(a2, 0)) == 1
    assert len(aw.bfs_oracle(a2, 1)) == 4
    gens = [aw.simple_affine_reflection(a2, i) for i in range(3)]
    products = {aw.identity(a2), *gens, *(s * t for s in gens for t in gens)}
    assert len(aw.bfs_oracle(a2, 2)) == len(products)


def test_oracle_resource_bound(a2):
    with pytest.raises(aw.LengthBoundError):
        aw.bfs_oracle(a2, 30, max_elements=100)


def test_group_law(b2):
    rng = random.Random(3)
    e = aw.identity(b2)
    for _ in range(30):
        x, y, z = (_random_element(b2, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert (x * x.inverse()).is_identity()
        assert x * e == x == e * x


def test_label_action_is_group_action(g2):
    rng = random.Random(5)
    for _ in range(30):
        x, y = _random_element(g2, rng), _random_element(g2, rng)
        v = AffineRootLabel.make(g2, rng.choice(g2.roots), rng.randint(-3, 3))
        assert aw.act_on_label(x * y, v) == aw.act_on_label(x, aw.act_on_label(y, v))


def test_length_properties(a3):
    rng = random.Random(11)
    for _ in range(40):
        x = _random_element(a3, rng, 10)
        n = aw.length(x)
        assert aw.length(x.inverse()) == n
        for i in range(a3.rank + 1):
            assert abs(aw.length(x * aw.simple_affine_reflection(a3, i)) - n) == 1


def test_label_examples(a2):
    t = aw.translation(a2, (1, 0))
    assert aw.act_on_label(t, AffineRootLabel.make(a2, (1, 0), 0)) == AffineRootLabel.make(a2, (1, 0), 2)
    s1 = aw.simple_affine_reflection(a2, 1)
    img = aw.act_on_label(s1, AffineRootLabel.make(a2, (1, 0), 5))
    assert img == AffineRootLabel.make(a2, (-1, 0), 5) == -AffineRootLabel.make(a2, (1, 0), -5)
    s0 = aw.simple_affine_reflection(a2, 0)
    theta1 = AffineRootLabel.make(a2, a2.highest_root, 1)
    assert aw.act_on_label(s0, theta1) == -theta1
    assert (s0 * s0).is_identity()


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_coxeter_exponents(name):
    sys = preset(name)
    expected = {"A2": {(1, 2): 3, (0, 1): 3, (0, 2): 3},
                "B2": {(1, 2): 4, (0, 1): 2, (0, 2): 4},
                "G2": {(1, 2): 6, (0, 1): 2, (0, 2): 3}}[name]
    for (i, j), m in expected.items():
        assert aw.coxeter_exponent(sys, i, j) == m


def test_translation_length_and_word(a2):
    t = aw.translation(a2, (1, 0))
    assert aw.length(t) == 4
    word = aw.reduced_word(t)
    assert word == [2, 0, 2, 1]
    assert aw.from_word(a2, word) == t
    assert aw.reduced_word(aw.identity(a2)) == []
    assert aw.reduced_word(aw.simple_affine_reflection(a2, 2)) == [2]


def test_reduced_words_reproduce_element(g2):
    for x in aw.bfs_oracle(g2, 5):
        words = aw.all_reduced_words(x)
        assert aw.reduced_word(x) == min(words, key=lambda w: [(i or 99) for i in w])
        for w in words:
            assert aw.from_word(g2, w) == x


def test_cover_examples(a2):
    e = aw.identity(a2)
    s1 = aw.simple_affine_reflection(a2, 1)
    s2 = aw.simple_affine_reflection(a2, 2)
    assert aw.is_cover(e, s1)
    assert not aw.is_cover(e, s1 * s2)
    assert aw.reflection_data(aw.affine_reflection(a2, (1, 1), -2)) == ((1, 1), -2)
    assert aw.reflection_data(s1 * s2) is None


def test_json_round_trip(b2):
    x = aw.element(b2, [1, 2], (3, -1))
    assert x.to_json() == {"w": [1, 2], "lam": [3, -1]}
    assert aw.from_json(b2, x.to_json()) == x
