from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affine_nichols import poly
from affine_nichols.poly import (Polynomial, divided_difference, format_polynomial, parse_polynomial,
                                 reflect_polynomial, root_polynomial, simple_divided_difference)
from affine_nichols.roots import preset

A2 = preset("A2")
G2 = preset("G2")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(monomials, coeffs, max_size=5).map(lambda t: Polynomial(2, t))


@given(polys2, polys2, polys2)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f - f == Polynomial(2)


@given(polys2)
def test_format_parse_round_trip(f):
    assert parse_polynomial(format_polynomial(f), 2) == f


@settings(max_examples=60)
@given(polys2, st.sampled_from([A2, G2]), st.integers(0, 5))
def test_divided_difference_defining_identity(f, sys, b):
    b = b % sys.npos
    d = divided_difference(sys, b, f)
    assert d * root_polynomial(sys, sys.roots[b]) == f - reflect_polynomial(sys, b, f)


@settings(max_examples=40)
@given(polys2, polys2)
def test_twisted_leibniz(f, g):
    for i in range(3):
        lhs = simple_divided_difference(A2, i, f * g)
        # the reflection attached to generator i: s_0 acts as s_theta on S
        root = A2.highest_root if i == 0 else A2.roots[A2.simple_indices[i - 1]]
        rhs = (simple_divided_difference(A2, i, f) * g
               + reflect_polynomial(A2, A2.index(root), f) * simple_divided_difference(A2, i, g))
        assert lhs == rhs


def test_known_values():
    w1, w2 = poly.variables(A2)
    assert simple_divided_difference(A2, 1, w1 * w1) == w2
    assert simple_divided_difference(A2, 1, w1) == poly.one(A2)
    assert simple_divided_difference(A2, 0, w1) == -poly.one(A2)
    assert reflect_polynomial(A2, A2.simple_indices[0], w1) == w2 - w1
    assert format_polynomial(Fraction(3, 2) * w1 * w1 * w2 - w2 + 1) == "3/2*w1^2*w2 - w2 + 1"


def test_exact_division_error():
    w1, w2 = poly.variables(A2)
    with pytest.raises(ArithmeticError):
        (w1 * w1 + 1).divide_exact(w2)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_polynomial("w1 + $", 2)


def test_weyl_action_is_an_action():
    w1, w2 = poly.variables(G2)
    f = w1 ** 3 - 2 * w1 * w2 + 7
    for u in G2.elements()[:6]:
        for v in G2.elements()[:6]:
            assert poly.weyl_act(G2, u * v, f) == poly.weyl_act(G2, u, poly.weyl_act(G2, v, f))


def test_json_round_trip():
    w1, w2 = poly.variables(A2)
    f = Fraction(-1, 3) * w1 * w2 + w2 ** 2
    assert poly.polynomial_from_json(f.to_json()) == f
