from fractions import Fraction

import pytest

from qpring.contfrac import expand, format_pcf, format_terms
from qpring.errors import DivisionByZeroPoly, GHasIntegerRoot, OutOfDomain
from qpring.intpoly import IntPolynomial, X
from qpring.oracle import int_cf

from conftest import rand_poly


@pytest.fixture(scope="module")
def example():
    return expand(X**2, 2 * X + 1)


def test_example_branch_polynomials(example):
    pos, neg = example.pos, example.neg
    assert pos.period == 2 and neg.period == 2
    assert pos.classes[0] == (X - 1, IntPolynomial((1,)), IntPolynomial((3,)), X)
    assert pos.classes[1] == (X, IntPolynomial((3,)), IntPolynomial((1,)), X)
    assert neg.classes[0] == (X - 1, IntPolynomial((1,)), IntPolynomial((2,)), IntPolynomial((1,)), -X - 1)
    assert neg.classes[1] == (X, IntPolynomial((4,)), -X - 1)
    assert pos.threshold <= 4 and neg.threshold <= 4


def test_example_matches_stated_formulas(example):
    # the formulas written with n = 2m and n = 2m - 1
    for n in range(5, 400):
        if n % 2 == 0:
            m = n // 2
            assert example.terms_at(n) == [m - 1, 1, 3, m]
        else:
            m = (n + 1) // 2
            assert example.terms_at(n) == [m - 1, 3, 1, m - 1]
    for n in range(-400, -4):
        if n % 2 == 0:
            m = n // 2
            assert example.terms_at(n) == [m - 1, 1, 2, 1, -m - 1]
        else:
            m = (n + 1) // 2
            assert example.terms_at(n) == [m - 1, 4, -m]


def test_example_values(example):
    assert example.terms_at(-6) == [-4, 1, 2, 1, 2]
    assert example(-6) == Fraction(-36, 11)
    assert example(6) == Fraction(36, 13)
    assert example(5) == Fraction(25, 11)
    assert example.terms_at(1) == [0, 3] and example(1) == Fraction(1, 3)
    assert example.term_bound == 5


def test_example_oracle_sweep(example):
    for n in range(-80, 81):
        assert example.terms_at(n) == int_cf(n * n, 2 * n + 1)
    L = example.term_bound
    assert all(len(int_cf(n * n, 2 * n + 1)) <= L for n in range(-10**4, 10**4 + 1))


def test_exact_multiple_and_trivial():
    h = X**2 - 3
    pcf = expand((2 * X + 1) * h, 2 * X + 1)
    assert pcf.term_bound == 1
    assert all(len(c) == 1 for c in pcf.pos.classes + pcf.neg.classes)
    one = IntPolynomial((1,))
    pcf = expand(one, one)
    assert pcf.term_bound == 1 and pcf.terms_at(17) == [1]


def test_denominator_checks():
    with pytest.raises(GHasIntegerRoot) as info:
        expand(X, X - 3)
    assert info.value.n == 3
    with pytest.raises(DivisionByZeroPoly):
        expand(X, IntPolynomial(()))


def test_out_of_domain_never_raised_for_integers(example):
    for n in range(-10, 11):
        example.terms_at(n)
    bad = expand(X, 2 * X + 1)
    object.__setattr__(bad, "exceptional", {})
    with pytest.raises(OutOfDomain):
        bad.terms_at(0)


def test_random_oracle_equivalence(rng):
    done = 0
    while done < 40:
        # branch periods grow roughly like the product of leading
        # coefficients met in the cascade, so keep them small
        f = rand_poly(rng, 3, -3, 3)
        g = rand_poly(rng, 2, -2, 2, nonzero=True)
        if any(g(n) == 0 for n in range(-100, 101)):
            continue
        pcf = expand(f, g)
        for n in range(-80, 81):
            terms = pcf.terms_at(n)
            assert terms == int_cf(f(n), g(n))
            assert all(t >= 1 for t in terms[1:])
            assert len(terms) <= pcf.term_bound
        done += 1


def test_formatting(example):
    lines = format_pcf(example)
    assert "when n > 3:" in lines
    assert "  n=2m: [m - 1; 1, 3, m]" in lines
    assert lines[-1] == "term bound L = 5"
    assert format_terms([5]) == "[5]"
