from fractions import Fraction

import pytest

from qpring.intpoly import (
    MINUS_INFINITY,
    IntPolynomial,
    Order,
    RatPolynomial,
    X,
    abs_poly,
    bezout_modulus,
    content,
    gcd_zx,
    integer_roots,
    interpolate,
    positivity_threshold,
    rat_divmod,
    sign_class,
)
from qpring.oracle import int_gcd

from conftest import rand_poly


def P(*cs):
    return IntPolynomial(cs)


def test_basic_arithmetic():
    assert (X + 1) + (X - 1) == 2 * X
    assert (X * X + 1)(3) == 10
    assert content(6 * X**2 + 9 * X) == 3
    assert content(6 * X**2 + 9 * X) == int_gcd([6, 9])


def test_zero_degree_is_marker():
    z = IntPolynomial(())
    assert z.degree is MINUS_INFINITY
    assert z.degree < 0
    with pytest.raises(TypeError):
        z.degree + 1


def test_string_form():
    assert str(3 * X**2 - X + 1) == "3*x^2 - x + 1"
    assert str(IntPolynomial(())) == "0"
    assert (X - 1).to_string("m") == "m - 1"


def test_compose_affine_examples():
    tri = RatPolynomial([0, Fraction(1, 2), Fraction(1, 2)])
    assert tri.compose_affine(2, 0) == RatPolynomial([0, 1, 2])
    assert tri.compose_affine(2, 1) == RatPolynomial([1, 3, 2])
    assert X.compose_affine(3, 2) == 3 * X + 2


def test_compose_affine_agrees_pointwise(rng):
    for _ in range(50):
        f = rand_poly(rng, 4)
        a, b = rng.choice([-3, -1, 1, 2, 5]), rng.randint(-5, 5)
        g = f.compose_affine(a, b)
        for m in range(-6, 7):
            assert g(m) == f(a * m + b)


def test_ring_axioms_polys(rng):
    for _ in range(100):
        p, q, r = (rand_poly(rng, 3) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        for n in range(-5, 6):
            assert (p * q)(n) == p(n) * q(n)
            assert (p + q)(n) == p(n) + q(n)


def test_gcd_zx_examples():
    assert gcd_zx([2 * X + 2, 4 * X + 4]) == 2 * X + 2
    assert gcd_zx([X, X + 2]) == 1
    assert gcd_zx([-3 * X + 1, IntPolynomial(())]) == 3 * X - 1


def test_gcd_zx_divides_and_is_greatest(rng):
    for _ in range(60):
        common = rand_poly(rng, 2, nonzero=True)
        ps = [common * rand_poly(rng, 2, nonzero=True) for _ in range(rng.randint(1, 3))]
        g = gcd_zx(ps)
        for p in ps:
            q, r = rat_divmod(p.to_rational(), g.to_rational())
            assert not r and q.is_integral()
        q, r = rat_divmod(g.to_rational(), common.to_rational())
        assert not r and q.is_integral()


def test_bezout_modulus_examples():
    a0, ws = bezout_modulus([X, X + 2])
    assert a0 == 2 and sum((w * p for w, p in zip(ws, [X, X + 2])), IntPolynomial(())) == 2
    a0, ws = bezout_modulus([X, IntPolynomial((1,))])
    assert a0 == 1
    a0, ws = bezout_modulus([2 * X + 1, 2 * X + 3])
    assert a0 == 2


def test_bezout_modulus_identity(rng):
    done = 0
    while done < 40:
        ps = [rand_poly(rng, 3, nonzero=True) for _ in range(rng.randint(2, 3))]
        if gcd_zx(ps).degree > 0:
            continue
        a0, ws = bezout_modulus(ps)
        total = IntPolynomial(())
        for w, p in zip(ws, ps):
            total = total + w * p
        assert total == a0 and a0 > 0
        done += 1


def test_sign_and_abs():
    assert sign_class(X - 1000) is Order.STRICTLY_POSITIVE
    assert sign_class(-2 * X + 5) is Order.STRICTLY_NEGATIVE
    assert sign_class(IntPolynomial(())) is Order.ZERO
    assert abs_poly(-2 * X + 5) == 2 * X - 5
    assert abs_poly(X**2) == X**2
    assert abs_poly(IntPolynomial(())) == 0


def test_positivity_threshold_examples():
    c = positivity_threshold(X - 7)
    assert c >= 7 and all((X - 7)(n) > 0 for n in range(c + 1, c + 51))
    assert positivity_threshold(IntPolynomial((3,))) == 0
    assert positivity_threshold(X**2 - 100) >= 10
    with pytest.raises(ValueError):
        positivity_threshold(-X)


def test_positivity_threshold_sound(rng):
    for _ in range(60):
        p = rand_poly(rng, 4, nonzero=True)
        if p.leading_coeff < 0:
            p = -p
        c = positivity_threshold(p)
        assert all(p(n) > 0 for n in range(c + 1, c + 1001))


def test_interpolate_examples():
    assert interpolate([(0, 0), (1, 1), (2, 2)], 1) == X.to_rational()
    assert interpolate([(0, 0), (1, 1), (2, 3)], 2) == RatPolynomial([0, Fraction(1, 2), Fraction(1, 2)])
    assert interpolate([(5, 7)], 0) == RatPolynomial([7])


def test_integer_roots():
    assert integer_roots((X - 3) * (2 * X + 1) * (X + 4)) == [-4, 3]
    assert integer_roots(X**2 + 1) == []
