import pytest

from qpring.errors import AllZeroAtPoint
from qpring.euclid import divide_R, rem_R
from qpring.ggcd import (
    POINTWISE,
    SUCCESSIVE_DIVISION,
    ggcd,
    ggcd_euclidean,
    ggcd_pointwise,
    ideal_pointwise_equal,
)
from qpring.intpoly import IntPolynomial, X
from qpring.oracle import int_gcd
from qpring.quasipoly import QuasiPolynomial as Q

from conftest import rand_poly, rand_quasi

ONE, TWO = IntPolynomial((1,)), IntPolynomial((2,))
THREE_INPUTS = [X**3 + 2, 3 * X**2 - 3 * X, 7 * X]


def test_example_three_inputs():
    want = Q(2, [TWO, ONE])
    e = ggcd_euclidean(THREE_INPUTS)
    assert e.d == want and e.method == SUCCESSIVE_DIVISION
    assert ggcd_pointwise(THREE_INPUTS) == want
    assert e.d.least_period() == 2


def test_small_cases():
    assert ggcd_euclidean([-(2 * X + 1), 0]).d == Q.from_poly(2 * X + 1)
    assert ggcd_pointwise([-(2 * X + 1), 0]) == Q.from_poly(2 * X + 1)
    assert ggcd_euclidean([6, 4]).d == 2
    assert ggcd_pointwise([6, 4]) == 2


def test_two_generator_ideals():
    a = ggcd_pointwise([2, X + 1])
    assert [a(n) for n in range(6)] == [1, 2, 1, 2, 1, 2]
    assert a == ggcd_pointwise([4, X**2 + 1])
    assert ggcd_euclidean([2, X + 1]).d == ggcd_euclidean([4, X**2 + 1]).d == a


def test_ideal_pointwise_equal():
    assert ideal_pointwise_equal([2, X + 1], [4, X**2 + 1])
    # equal gcds although <2, x^2> and <2, x> differ as ideals
    assert ideal_pointwise_equal([2, X**2], [2, X])
    assert not ideal_pointwise_equal([2, X**2], [3, X])
    assert ideal_pointwise_equal([1], [X, X + 1])


def test_method_dispatch():
    assert ggcd(THREE_INPUTS, method="pointwise").method == POINTWISE
    both = ggcd(THREE_INPUTS, method="both")
    assert both.d == Q(2, [TWO, ONE]) and len(both.bezout) == 3
    with pytest.raises(ValueError):
        ggcd(THREE_INPUTS, method="nope")


def check_gcd(fs):
    fs = [Q.from_poly(f) if isinstance(f, IntPolynomial) else f for f in fs]
    e = ggcd_euclidean(fs)
    p = ggcd_pointwise(fs)
    assert e.d == p
    total = Q.zero()
    for u, f in zip(e.bezout, fs):
        total = total + u * f
    assert total == e.d
    for n in range(-50, 51):
        vals = [f(n) for f in fs]
        g = int_gcd(vals)
        assert abs(p(n)) == g
        assert sum(u(n) * v for u, v in zip(e.bezout, vals)) == e.d(n)
        if g:
            assert all(v % p(n) == 0 for v in vals)
    return e


def test_random_polynomial_lists(rng):
    for _ in range(30):
        check_gcd([rand_poly(rng, 3, -2, 2, nonzero=True) for _ in range(rng.randint(1, 4))])


def test_random_quasi_lists(rng):
    for _ in range(20):
        check_gcd([rand_quasi(rng, periods=(1, 2, 3), max_deg=1, lo=-3, hi=3) for _ in range(rng.randint(2, 3))])


def test_pointwise_against_oracle_wide_coefficients(rng):
    for _ in range(40):
        fs = [rand_poly(rng, 3, nonzero=True) for _ in range(rng.randint(2, 4))]
        d = ggcd_pointwise(fs)
        for n in range(-50, 51):
            assert abs(d(n)) == int_gcd([f(n) for f in fs])


def test_permutation_invariance(rng):
    for _ in range(15):
        fs = [rand_poly(rng, 3, -2, 2, nonzero=True) for _ in range(3)]
        shuffled = fs[:]
        rng.shuffle(shuffled)
        assert ggcd_euclidean(fs).d == ggcd_euclidean(shuffled).d


def test_remainder_replacement_invariance(rng):
    for _ in range(15):
        f1 = Q.from_poly(rand_poly(rng, 3, -3, 3))
        f2 = Q.from_poly(rand_poly(rng, 2, -3, 3, nonzero=True))
        f3 = Q.from_poly(rand_poly(rng, 2, -3, 3))
        assert ggcd_pointwise([f1, f2, f3]) == ggcd_pointwise([rem_R(f1, f2), f2, f3])


def test_common_divisor_divides_gcd(rng):
    for _ in range(15):
        p = Q.from_poly(rand_poly(rng, 1, -3, 3, nonzero=True))
        fs = [p * Q.from_poly(rand_poly(rng, 2, -2, 2, nonzero=True)) for _ in range(2)]
        d = ggcd_pointwise(fs)
        assert divide_R(d, p).rem.is_zero()


def test_all_zero_class_relaxed_and_strict():
    fs = [Q(2, [IntPolynomial(()), X]), Q(2, [IntPolynomial(()), 2 * X])]
    d = ggcd_pointwise(fs)
    assert d == Q(2, [IntPolynomial(()), X])
    assert ggcd_euclidean(fs).d == d
    with pytest.raises(AllZeroAtPoint) as info:
        ggcd_pointwise(fs, strict=True)
    assert info.value.n == 0


def test_common_integer_root_strict():
    fs = [X * (X - 3), 2 * X - 6]
    d = ggcd_pointwise(fs)
    assert d(3) == 0
    with pytest.raises(AllZeroAtPoint) as info:
        ggcd_pointwise(fs, strict=True)
    assert info.value.n == 3
