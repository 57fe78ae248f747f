"""Tensor model: symmetrizer, braiding, differentials and the polynomial extension."""

import random
from fractions import Fraction

import pytest

from affine_nichols import affine_weyl as aw
from affine_nichols import nichols as nc
from affine_nichols.nichols import BAfSElement, TensorElement, label
from affine_nichols.poly import Polynomial
from affine_nichols.roots import preset

A2 = preset("A2")
B2 = preset("B2")


def _random_word(sys, rng, n, levels=(-1, 0, 1, 2)):
    return tuple(label(sys, rng.choice(sys.roots), rng.choice(levels)) for _ in range(n))


def _random_tensor(sys, rng, n, terms=3):
    t = TensorElement(sys)
    for _ in range(terms):
        t = t + TensorElement.word(sys, _random_word(sys, rng, n), rng.randint(-3, 3))
    return t


def test_canonical_labels():
    a = label(A2, (-1, 0), 3)
    assert a == -label(A2, (1, 0), -3)
    t = TensorElement.letter(A2, a)
    assert t == TensorElement.letter(A2, label(A2, (1, 0), -3)) * -1


@pytest.mark.parametrize("sys", [A2, B2], ids=["A2", "B2"])
def test_fast_symmetrizer_matches_reference(sys):
    rng = random.Random(1)
    for n in (2, 3, 4):
        for _ in range(6):
            t = _random_tensor(sys, rng, n)
            assert nc.symmetrize(t) == nc.symmetrize_reference(t)


def test_braiding_is_the_grading_action():
    rng = random.Random(2)
    for _ in range(20):
        a, b = _random_word(A2, rng, 2)
        s = aw.affine_reflection(A2, a.root, a.level)
        (word, c), = nc.braiding(A2, a, b).terms.items()
        expect = TensorElement.word(A2, (aw.act_on_label(s, b), a))
        assert TensorElement(A2, {word: c}) == expect


def test_squares_vanish():
    for sys in (A2, B2):
        for root in sys.positive_roots:
            for k in (-2, 0, 3):
                a = label(sys, root, k)
                assert nc.is_zero_in_B(TensorElement.word(sys, (a, a)))


def test_distinct_generators_do_not_commute():
    a1, a2 = label(A2, (1, 0)), label(A2, (0, 1))
    t = TensorElement.word(A2, (a1, a2)) - TensorElement.word(A2, (a2, a1))
    assert not nc.is_zero_in_B(t)


def test_braided_leibniz_rule():
    """(F G) D_v = F (G D_v) + (F D_v) s_v(G)."""
    rng = random.Random(3)
    for _ in range(25):
        f = _random_tensor(A2, rng, 2)
        g = _random_tensor(A2, rng, 2)
        v = _random_word(A2, rng, 1)[0]
        s = aw.affine_reflection(A2, v.root, v.level)
        lhs = nc.differential(f * g, v)
        rhs = f * nc.differential(g, v) + nc.differential(f, v) * nc.act_on_tensor(s, g)
        assert lhs == rhs


def test_kernel_detected_by_differentials():
    """Positive-degree elements vanish in the quotient iff every differential kills them."""
    rng = random.Random(4)
    letters = [label(A2, r, k) for r in A2.positive_roots for k in (-1, 0, 1)]
    for _ in range(30):
        t = _random_tensor(A2, rng, 2, terms=2)
        alphabet = {a for w in t.terms for a in w}
        all_killed = all(nc.is_zero_in_B(nc.differential(t, b)) for b in alphabet | set(letters))
        assert nc.is_zero_in_B(t) == all_killed
    a, b, c = label(A2, (1, 0), 1), label(A2, (0, 1), 0), label(A2, (1, 1), 1)
    cyc = (TensorElement.word(A2, (a, b)) + TensorElement.word(A2, (b, label(A2, (-1, -1), -1)))
           + TensorElement.word(A2, (label(A2, (-1, -1), -1), a)))
    for t in (TensorElement.word(A2, (c, c)), cyc):
        assert nc.is_zero_in_B(t)
        assert all(nc.is_zero_in_B(nc.differential(t, d)) for d in letters)


def test_symmetrizer_cap():
    w = TensorElement.word(A2, [label(A2, (1, 0), k) for k in range(3)])
    with pytest.raises(nc.SymmetrizerCapError):
        nc.symmetrize(w, cap=2)


def test_formatting_and_json():
    t = (TensorElement.word(A2, (label(A2, (1, 1), 1), label(A2, (0, 1), 0))) * Fraction(-3, 2)
         + TensorElement.scalar(A2, 2))
    assert nc.format_tensor(t) == "2 - 3/2*[13,1][23,0]"
    assert nc.tensor_from_json(A2, t.to_json()) == t
    assert nc.format_label(B2, label(B2, (1, 2), 1)) == "[a:1 2,1]"


def test_polynomial_extension_cross_relation():
    w1, w2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    a1 = TensorElement.letter(A2, label(A2, (1, 0)))
    lhs = BAfSElement.from_tensor(a1) * w1
    # [a1] w1 = d_{a1}(w1) + s_1(w1) [a1]
    rhs = BAfSElement.from_polynomial(A2, Polynomial.constant(2, 1)) + (w2 - w1) * BAfSElement.from_tensor(a1)
    assert lhs == rhs


def test_tensor_action_on_polynomials():
    w1 = Polynomial.variable(2, 0)
    t = TensorElement.word(A2, (label(A2, (0, 1)), label(A2, (1, 0))))
    # d_2 d_1 (w1^2) = d_2(w2) = 1
    assert nc.act_tensor_on_S(t, w1 * w1) == Polynomial.constant(2, 1)


def test_phi_requires_system_for_bare_polynomial():
    with pytest.raises(TypeError):
        nc.phi(Polynomial.variable(2, 0))
    assert nc.phi(Polynomial.variable(2, 0), A2) == BAfSElement.from_polynomial(A2, Polynomial.variable(2, 0))
