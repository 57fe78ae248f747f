"""Superregular chambers, the contraction rule and affine Bruhat operators."""

import random

import pytest

from affine_nichols import affine_weyl as aw
from affine_nichols import alcove
from affine_nichols import bruhat_ops as bo
from affine_nichols import verify
from affine_nichols.bruhat_ops import MarginExhausted, RegularModuleElement
from affine_nichols.poly import Polynomial
from affine_nichols.roots import preset


def test_threshold(a2, g2):
    assert bo.superregular_threshold(a2) == 14
    assert bo.superregular_threshold(g2) == 26


def test_superregular_boundary(a2):
    # pairings with alpha_1, alpha_2 equal to the coordinates' negatives when lam = (c, c)
    assert bo.is_superregular(aw.translation(a2, (-15, -15)))
    assert not bo.is_superregular(aw.translation(a2, (-14, -14)))
    assert bo.regularity_slack(aw.translation(a2, (-15, -15))) == 1


def test_singular_translation_has_no_chamber(a2):
    with pytest.raises(bo.ChamberUndefined, match="chamber undefined"):
        bo.decompose(aw.translation(a2, (1, 2)))  # <alpha_1, lam> = 0


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_decompose_round_trip(name):
    sys = preset(name)
    rng = random.Random(0)
    for v in sys.elements():
        x = bo.random_superregular(sys, rng, v=v)
        d = bo.decompose(x)
        assert d.v == v
        assert d.recompose() == x
        assert all(sys.pairing_index(s, d.lam) < 0 for s in sys.simple_indices)


def test_sampler_respects_slack(g2):
    rng = random.Random(1)
    for _ in range(20):
        x = bo.random_superregular(g2, rng, slack=6)
        assert bo.regularity_slack(x) >= 6


def test_contraction_rule_needs_positive_level(a2):
    with pytest.raises(ValueError):
        bo.lemma41_rule(aw.identity(a2), (1, 0), 0)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_contraction_levels_cover_every_drop(name):
    sys = preset(name)
    rng = random.Random(2)
    for _ in range(6):
        x = bo.random_superregular(sys, rng)
        for root in sys.roots:
            levels = set(bo.contraction_levels(x, root, 1))
            top = max(levels) + 6
            for k in range(1, top):
                y = x * aw.affine_reflection(sys, root, k)
                drops = aw.length(y) == aw.length(x) - 1
                assert (bo.lemma41_rule(x, root, k) is not None) == drops
                if drops:
                    assert k in levels


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_cover_classification_against_lengths(name):
    ok, stats = verify.cover_scan(preset(name), 8, seed=3)
    assert ok, stats["failures"]
    assert all(stats["kinds"][k] > 0 for k in bo.COVER_KINDS)


def test_near_covers_stay_in_chamber(b2):
    rng = random.Random(4)
    x = bo.random_superregular(b2, rng)
    covers = bo.near_covers(x)
    assert covers
    for alpha, k, kind, y in covers:
        assert aw.is_cover(y, x)
        assert bo.chamber(y) == bo.chamber(x)
        assert y == bo.cover_closed_form(x, alpha, kind)


@pytest.mark.parametrize("name, per_chamber", [("B2", 5), ("G2", 3)])
def test_beta_matches_bruhat_operator_other_types(name, per_chamber):
    ok, stats = verify.prop42_samples(preset(name), per_chamber, seed=5)
    assert ok, stats["first"]


def test_level_one_contributions_break_agreement(a2):
    ok, stats = verify.prop42_samples(a2, 5, seed=0, k_lower_bound=1)
    assert not ok and stats["mismatches"] > 0


def test_non_equivariant_operators_agree(a3):
    rng = random.Random(6)
    for _ in range(5):
        x = bo.random_superregular(a3, rng, slack=4)
        m = RegularModuleElement.basis(x)
        for j in range(3):
            mu = tuple(int(i == j) for i in range(3))
            lhs = bo.beta_op(mu, m, equivariant=False)
            rhs = bo.iota(bo.affine_bruhat_operator(mu, x, equivariant=False), a3)
            assert lhs == rhs
            assert lhs == bo.beta_op(mu, m).non_equivariant()


def test_margin_exhaustion(a2):
    x = aw.translation(a2, (-16, -16))  # slack 2
    with pytest.raises(MarginExhausted):
        bo.affine_bruhat_operator((1, 0), x, margin=5)
    with pytest.raises(MarginExhausted):
        RegularModuleElement.basis(aw.translation(a2, (-3, -3)))


def test_module_element_arithmetic_and_json(a2):
    x = aw.translation(a2, (-20, -20))
    y = aw.element(a2, [1], (-20, -21))
    m = RegularModuleElement.basis(x, 2) + RegularModuleElement.basis(y).scale(Polynomial.variable(2, 0))
    assert (m - m).is_zero()
    assert m.chamber == a2.identity
    assert bo.regular_module_from_json(a2, m.to_json()) == m


def test_tensor_representative_sign(a2):
    s1 = aw.simple_affine_reflection(a2, 1)
    assert bo.tensor_representative(s1) == -alcove.bracket(s1)


def test_theta_map(a2):
    rng = random.Random(7)
    lam = bo.superregular_antidominant(a2, rng, slack=3)
    mu = (-1, 0)
    for w in a2.elements():
        for v in a2.elements():
            z = bo.theta_map(w, lam, mu, v, a2)
            d = bo.decompose(z)
            assert d.w == v * w.inverse()
            assert d.v == w
            assert d.lam == tuple(a + b for a, b in zip(lam, mu))
    with pytest.raises(MarginExhausted):
        bo.theta_map(a2.identity, (-14, -14), (0, 0), a2.identity, a2)
