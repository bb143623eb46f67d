"""Generalized Euclidean division in R.

For ``f, g`` in Z[x] there are unique ``quo, rem`` in R with
``f = quo*g + rem`` and ``0 <= rem < |g|`` in the eventual order.  The
quotient is built by peeling leading terms on nested residue classes
modulo powers of ``|lc(g)|``; each peeled term ``lc(S)/lc(g) * (n - c)^h``
is integer valued on its class once the class modulus is large enough.
"""

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DivisionByZeroPoly
from .intpoly import IntPolynomial, RatPolynomial, Order, abs_poly, positivity_threshold, sign_class
from .quasipoly import QuasiPolynomial, as_quasi, assemble, common_period


@dataclass(frozen=True, eq=False)
class DivisionResult:
    """Quotient and remainder of ``f`` by ``g`` in R.

    ``threshold_pos`` and ``threshold_neg`` are computed on first access.
    Beyond ``threshold_pos`` the pair ``(quo(n), rem(n))`` is the integer
    division of ``f(n)`` by ``g(n)`` with ``0 <= rem < |g(n)|``.  Below
    ``-threshold_neg`` the same holds for ``(neg_quo(n), neg_rem(n))``,
    which come from dividing ``f(-x)`` by ``g(-x)``.
    """

    f: QuasiPolynomial
    g: QuasiPolynomial
    quo: QuasiPolynomial
    rem: QuasiPolynomial

    @cached_property
    def threshold_pos(self):
        return agreement_threshold(self.g, self.rem)

    @cached_property
    def _reflected(self):
        return divide_R(self.f.reflect(), self.g.reflect())

    @cached_property
    def neg_quo(self):
        return self._reflected.quo.reflect()

    @cached_property
    def neg_rem(self):
        return self._reflected.rem.reflect()

    @cached_property
    def threshold_neg(self):
        return self._reflected.threshold_pos

    def pointwise(self, n):
        """Integer ``(q, r)`` predicted for ``n`` outside the finite window, else None."""
        if n > self.threshold_pos:
            return self.quo(n), self.rem(n)
        if n < -self.threshold_neg:
            return self.neg_quo(n), self.neg_rem(n)
        return None

    def __iter__(self):
        return iter((self.quo, self.rem))


def _piece_threshold(p):
    """C with p(m) > 0 for m > C; p must be strictly positive."""
    return positivity_threshold(p)


def agreement_threshold(g, rem):
    """C such that 0 <= rem(n) < |g(n)| for n > C wherever g(n) != 0."""
    g, rem = as_quasi(g), as_quasi(rem)
    T = common_period(g, rem)
    gr, rr = g.refine(T), rem.refine(T)
    C = 0
    for i, (gi, ri) in enumerate(zip(gr.pieces, rr.pieces)):
        if not gi:
            continue
        ga = abs_poly(gi)
        c = _piece_threshold(ga)
        if ri:
            c = max(c, _piece_threshold(ri))
        c = max(c, _piece_threshold(ga - ri))
        C = max(C, T * c + i)
    return C


def _peel(S, g, b, M, c):
    """Divide S by g on the class n = c (mod M); yields (M, c, quo, rem) in n."""
    l = g.degree
    lc = g.leading_coeff
    if not S:
        yield M, c, RatPolynomial(()), S
        return
    d = S.degree
    if d > l:
        sigma = S.leading_coeff
        h = d - l
        e = 0
        while (sigma * (M * b ** e) ** h / lc).denominator != 1:
            e += 1
        step = b ** e
        coef = sigma / lc
        for j in range(step):
            c2 = c + M * j
            t = RatPolynomial.monomial(coef, 0) * RatPolynomial((-c2, 1)) ** h
            for M3, c3, q3, r3 in _peel(S - t * g, g, b, M * step, c2):
                yield M3, c3, q3 + t, r3
        return
    sgn = 1 if lc > 0 else -1
    gpos = g * sgn
    if d < l:
        if sign_class(S) is Order.STRICTLY_POSITIVE:
            yield M, c, RatPolynomial(()), S
        else:
            # S < 0: take one more copy of |g|
            yield M, c, RatPolynomial((-sgn,)), S + gpos
        return
    # equal degrees: constant quotient, the largest P with P*|g| <= S
    P = math.floor(S.leading_coeff / gpos.leading_coeff)
    r = S - gpos * P
    if sign_class(r) is Order.STRICTLY_NEGATIVE:
        P -= 1
        r = r + gpos
    yield M, c, RatPolynomial((sgn * P,)), r


def _leaf_pieces(leaves, T, which):
    by_mod = {}
    for M, c, q, r in leaves:
        by_mod.setdefault(M, {})[c] = q if which == 0 else r
    pieces = []
    for s in range(T):
        for M, table in by_mod.items():
            poly = table.get(s % M)
            if poly is not None:
                break
        else:  # pragma: no cover - leaves always partition the residues
            raise AssertionError(f"no leaf covers residue {s}")
        piece = poly.compose_affine(T, s)
        if not piece.is_integral():
            raise AssertionError(f"non-integral piece {piece} at residue {s}")
        pieces.append(piece.to_int())
    return pieces


@lru_cache(maxsize=4096)
def _divide_polys(f, g):
    if not g:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if not f:
        zero = QuasiPolynomial.zero()
        return zero, zero
    b = abs(g.leading_coeff)
    if g.degree == 0:
        quo, rem = _divide_by_constant(f, g.leading_coeff)
        _check_division(QuasiPolynomial(1, (f,)), QuasiPolynomial(1, (g,)), quo, rem)
        return quo, rem
    leaves = list(_peel(f.to_rational(), g.to_rational(), b, 1, 0))
    T = max(M for M, _, _, _ in leaves)
    quo = QuasiPolynomial(T, _leaf_pieces(leaves, T, 0)).canonical()
    rem = QuasiPolynomial(T, _leaf_pieces(leaves, T, 1)).canonical()
    _check_division(QuasiPolynomial(1, (f,)), QuasiPolynomial(1, (g,)), quo, rem)
    return quo, rem


def _divide_by_constant(f, c):
    # On n = |c|*m + i the remainder is the constant f(i) mod |c|.
    b = abs(c)
    quos, rems = [], []
    for i in range(b):
        r = f(i) % b
        shifted = f.compose_affine(b, i) - r
        quos.append(IntPolynomial([v // c for v in shifted.coeffs]))
        rems.append(IntPolynomial.constant(r))
    return QuasiPolynomial(b, quos).canonical(), QuasiPolynomial(b, rems).canonical()


def _check_division(f, g, quo, rem):
    if quo * g + rem != f:
        raise AssertionError(f"division identity fails for f={f}, g={g}")
    T = common_period(g, rem)
    for gi, ri in zip(g.refine(T).pieces, rem.refine(T).pieces):
        if not gi:
            continue
        if sign_class(ri) is Order.STRICTLY_NEGATIVE:
            raise AssertionError(f"negative remainder piece {ri} for f={f}, g={g}")
        if sign_class(abs_poly(gi) - ri) is not Order.STRICTLY_POSITIVE:
            raise AssertionError(f"remainder piece {ri} not below |{gi}|")


def poly_divide(f, g):
    """Generalized division of ``f`` by ``g`` in Z[x]."""
    f = f if isinstance(f, IntPolynomial) else IntPolynomial(f)
    g = g if isinstance(g, IntPolynomial) else IntPolynomial(g)
    quo, rem = _divide_polys(f, g)
    return DivisionResult(QuasiPolynomial(1, (f,)), QuasiPolynomial(1, (g,)), quo, rem)


def divide_R(f, g):
    """Generalized division in R; classes where g vanishes pass f through."""
    f, g = as_quasi(f).canonical(), as_quasi(g).canonical()
    T = common_period(f, g)
    fr, gr = f.refine(T), g.refine(T)
    quos, rems = [], []
    for fi, gi in zip(fr.pieces, gr.pieces):
        if gi:
            q, r = _divide_polys(fi, gi)
        else:
            q, r = QuasiPolynomial.zero(), QuasiPolynomial(1, (fi,))
        quos.append(q)
        rems.append(r)
    quo, rem = assemble(T, quos), assemble(T, rems)
    _check_division(f, g, quo, rem)
    return DivisionResult(f, g, quo, rem)


def quo_R(f, g):
    return divide_R(f, g).quo


def rem_R(f, g):
    return divide_R(f, g).rem


def divides(g, f):
    """True iff rem(f, g) == 0; meaningful when g has no zero values."""
    return divide_R(f, g).rem.is_zero()


def pointwise_agreement_check(f, g):
    """Return (C1, C2): generalized and integer division agree for n > C1 and n < -C2."""
    res = poly_divide(f, g)
    return res.threshold_pos, res.threshold_neg
