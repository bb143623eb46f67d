import pytest

from qpring.intpoly import IntPolynomial, X
from qpring.parser import ExprSyntaxError, NestedQuasiLiteral, parse_ast, parse_expr, parse_matrix, parse_poly
from qpring.quasipoly import QuasiPolynomial as Q

from conftest import rand_quasi


def test_spec_examples():
    assert parse_expr("x^3 + 2") == Q.from_poly(X**3 + 2)
    f = parse_expr("{2; x; 2*x+1}")
    assert f == Q(2, [X, 2 * X + 1])
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("x^x")
    assert "INT" in info.value.expected
    assert (info.value.line, info.value.column) == (1, 3)


@pytest.mark.parametrize("text, poly", [
    ("2*x^2", 2 * X**2),
    ("-x^2", -(X**2)),
    ("x^2^2", X**4),
    ("(x+1)^2", X**2 + 2 * X + 1),
    ("--x", X),
    ("3 - -x", X + 3),
    ("1 - 2 - 3", IntPolynomial((-4,))),
    ("2 * 3 + 4 * x", 4 * X + 6),
    ("x^0", IntPolynomial((1,))),
])
def test_precedence(text, poly):
    assert parse_poly(text) == poly


def test_right_associative_exponent():
    assert parse_expr("2^3^2") == 512


def test_quasi_literal_inside_expression():
    f = parse_expr("x * {2; 1; 0} + 1")
    assert [f(n) for n in range(6)] == [1, 1, 3, 1, 5, 1]


@pytest.mark.parametrize("text", ["x +", "(x", "x)", "{2; x}", "{0; x}", "x $ 1", "", "{2; x; 1", "2 x"])
def test_syntax_errors(text):
    with pytest.raises(ExprSyntaxError):
        parse_expr(text)


def test_nested_literal():
    with pytest.raises(NestedQuasiLiteral):
        parse_expr("{2; {1; x}; x}")


def test_error_position_multiline():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("x +\n  * 2")
    assert (info.value.line, info.value.column) == (2, 3)


def test_not_polynomial():
    with pytest.raises(ValueError):
        parse_poly("{2; 1; 0}")


def test_ast_shape():
    node = parse_ast("-x^2")
    assert type(node).__name__ == "Neg"


def test_print_parse_roundtrip(rng):
    for _ in range(200):
        f = rand_quasi(rng, max_deg=3, lo=-20, hi=20)
        assert parse_expr(str(f)) == f


def test_matrix_formats():
    m1 = parse_matrix('[["x", "x+2"], ["{2; 1; 0}", "3"]]')
    m2 = parse_matrix("x, x+2\n{2; 1; 0}, 3\n")
    assert m1 == m2
    assert m1[1][0] == Q(2, [IntPolynomial((1,)), IntPolynomial(())])
