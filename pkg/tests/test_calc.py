import pytest

from affine_nichols.calc import CalcError, calc, tokenize
from affine_nichols.roots import preset

A2 = preset("A2")


@pytest.mark.parametrize("expr, expected", [
    ("tau1 * w1", "1 + (w2 - w1)*tau1"),
    ("tau[0]*w1", "-1 - w2*tau0"),
    ("d1(w1^2)", "w2"),
    ("d[0](w1)", "-1"),
    ("s1(w1)", "w2 - w1"),
    ("3/2 - 1/2", "1"),
    ("(w1 + w2)^2 - w1^2", "w2^2 + 2*w1*w2"),
    ("tau1*tau1", "0"),
    ("tau1*tau2*tau1 - tau2*tau1*tau2", "0"),
    ("gamma(t[1])", "-[23,0][12,1][13,1][12,2]"),
    ("gamma(t[1]) . Dword(2,0,2,1)", "1"),
    ("gamma(t[1 0]) . Dword(2,0,2,1)", "1"),
    ("[12,1] . D[12,1]", "1"),
    ("[1 2,1]*[23] . D 2", "[12,1]"),
    ("zeroB([13,1]*[13,1])", "true"),
    ("zeroB([12]*[23])", "false"),
    ("zeroB([theta,1]*[23]*[theta,1] + [23]*[theta,1]*[23])", "true"),
    ("gamma(word(1,2)) . D 1 . D 2", "1"),
])
def test_expressions(expr, expected):
    assert calc(A2, expr) == expected


def test_general_labels_other_types():
    g2 = preset("G2")
    assert calc(g2, "zeroB([theta,1]*[a:0 1]*[theta,1] + [a:0 1]*[theta,1]*[a:0 1])") == "true"
    assert calc(g2, "[a:3 2,1]") == "[a:3 2,1]"
    with pytest.raises(CalcError, match="type A"):
        calc(g2, "[12,0]")


@pytest.mark.parametrize("expr, pos", [
    ("tau1 +", 6),
    ("w1 $ w2", 3),
    ("tau9", 0),
    ("w1 . D 1", 3),
    ("[14,0]", 0),
    ("[a:2 2,0]", 0),
    ("foo(1)", 0),
])
def test_parse_errors_report_position(expr, pos):
    with pytest.raises(CalcError) as err:
        calc(A2, expr)
    assert err.value.pos == pos
    assert f"at position {pos}" in str(err.value)


def test_cannot_mix_layers():
    with pytest.raises(CalcError, match="cannot mix"):
        calc(A2, "tau1 * [12]")


def test_tokenizer():
    kinds = [k for k, _, _ in tokenize("d[1](w1^2) . D[12,3]")]
    assert kinds == ["name", "label", "op", "name", "num", "op", "num", "op", "op", "name", "label", "end"]
