import pytest

from sparsekron.blackbox import parse_expr
from sparsekron.errors import ParseError, UnknownVariable
from sparsekron.poly import parse_sparse
from sparsekron.rings import Integers, PrimeField
from sparsekron.verify import expand_expression

ZZ = Integers()


@pytest.mark.parametrize("text, n, expected", [
    ("(x1 + x2)^2 - x1^2 - x2^2", 2, "2*x1*x2"),
    ("(x1 - 1)*(x1 + 1)", 1, "x1^2 - 1"),
    ("x1*(x2 - x3) + x3*x1", 3, "x1*x2"),
    ("x1 - x1", 1, "0"),
    ("-(x2^3)", 2, "-x2^3"),
])
def test_expand(text, n, expected):
    assert expand_expression(text, n, ZZ) == parse_sparse(expected, n, ZZ)


def test_expand_over_prime_field():
    f = expand_expression("(x1 + 1)^5", 1, PrimeField(5))
    assert str(f) == "x1^5 + 1"


def test_agrees_with_expression_black_box():
    text = "(2*x1 - x2)^3 + x1*x2*(x2 + 4)"
    f = expand_expression(text, 2, ZZ)
    tree = parse_expr(text, 2, ZZ)
    for point in [(0, 0), (1, -2), (3, 5), (-4, 7)]:
        assert f.evaluate(list(point)) == tree.evaluate(list(point))


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as e:
        expand_expression("x1 + x3", 2, ZZ)
    assert e.value.position == 5


@pytest.mark.parametrize("text", ["x1 +", "x1/2", "1/x1"])
def test_not_a_polynomial(text):
    with pytest.raises(ParseError):
        expand_expression(text, 1, ZZ)
