"""The ring R of integer-valued quasi-polynomials.

An element is stored as a representation ``(T, (f_0, ..., f_{T-1}))`` with
``f_i`` in Z[x]; its value at an integer ``n = T*m + i`` (``0 <= i < T``,
floor division for negative ``n``) is ``f_i(m)``.  Every arithmetic result
is returned in canonical form: the least period admitting integer
pieces.  Equality compares canonical forms, which is value equality.
"""

import math
from fractions import Fraction
from functools import reduce

from .errors import NotIntegerValued, PeriodNotMultiple, PeriodNotDivisor, NotNonnegative
from .intpoly import (
    IntPolynomial,
    RatPolynomial,
    MINUS_INFINITY,
    Order,
    abs_poly,
    divisors,
    positivity_threshold,
    sign_class,
)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _as_intpoly(p):
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, RatPolynomial):
        if not p.is_integral():
            raise NotIntegerValued(f"piece {p} has non-integer coefficients")
        return p.to_int()
    if isinstance(p, int):
        return IntPolynomial.constant(p)
    return IntPolynomial(p)


class QuasiPolynomial:
    """Element of R given by a period and one Z[x] piece per residue class."""

    __slots__ = ("period", "pieces", "_canon")

    def __init__(self, period, pieces):
        if not isinstance(period, int) or period < 1:
            raise ValueError("period must be a positive integer")
        pieces = tuple(_as_intpoly(p) for p in pieces)
        if len(pieces) != period:
            raise ValueError(f"expected {period} pieces, got {len(pieces)}")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("quasi-polynomials are immutable")

    # construction ----------------------------------------------------

    @classmethod
    def from_poly(cls, p):
        return cls(1, (p,)).canonical()

    @classmethod
    def constant(cls, c):
        return cls(1, (IntPolynomial.constant(c),))

    @classmethod
    def zero(cls):
        return cls(1, (IntPolynomial(()),))

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def x(cls):
        return cls(1, (IntPolynomial.x(),))

    @classmethod
    def from_rational_rep(cls, period, pieces):
        """Build an element from pieces in Q[x] that are integer valued.

        With ``a`` the common denominator of all coefficients, the piece
        for residue ``j*T0 + i`` of the period ``a*T0`` representation is
        ``g_i(a*x + j)``; all of these lie in Z[x] exactly when every
        ``g_i`` is integer valued.
        """
        rat = [p if isinstance(p, RatPolynomial) else RatPolynomial(getattr(p, "coeffs", p))
               for p in pieces]
        if len(rat) != period:
            raise ValueError(f"expected {period} pieces, got {len(rat)}")
        a = reduce(_lcm, (p.denominator() for p in rat), 1)
        out = [None] * (a * period)
        for i, g in enumerate(rat):
            for j in range(a):
                h = g.compose_affine(a, j)
                if not h.is_integral():
                    raise NotIntegerValued(f"{g} is not integer valued on residue class {i}")
                out[j * period + i] = h.to_int()
        return cls(a * period, out).canonical()

    @classmethod
    def from_function(cls, period, fn, degree):
        """Interpolate pieces from a Python function of n (test helper)."""
        from .intpoly import interpolate

        pieces = []
        for i in range(period):
            pts = [(m, fn(period * m + i)) for m in range(degree + 1)]
            pieces.append(interpolate(pts, degree))
        return cls(period, pieces).canonical()

    # basic queries ---------------------------------------------------

    def __call__(self, n):
        return self.pieces[n % self.period](n // self.period)

    eval = __call__

    @property
    def degree(self):
        return max((p.degree for p in self.pieces), default=MINUS_INFINITY)

    def is_zero(self):
        return all(p.is_zero() for p in self.pieces)

    def __bool__(self):
        return not self.is_zero()

    def is_polynomial(self):
        return self.canonical().period == 1

    def as_polynomial(self):
        c = self.canonical()
        if c.period != 1:
            raise ValueError(f"{c} is not a polynomial")
        return c.pieces[0]

    # representations -------------------------------------------------

    def refine(self, period):
        """Same function written with a period that is a multiple of ours."""
        if period % self.period:
            raise PeriodNotMultiple(f"{period} is not a multiple of {self.period}")
        c = period // self.period
        if c == 1:
            return self
        T = self.period
        pieces = [self.pieces[s % T].compose_affine(c, s // T) for s in range(period)]
        return QuasiPolynomial(period, pieces)

    def has_period(self, d):
        """Whether the function admits a representation with period ``d``.

        The only candidate piece for residue ``r`` is ``f_r(x / c)`` with
        ``c = T / d``; it must have integer coefficients and reproduce
        every stored piece ``f_{d*t + r}`` as ``q_r(c*x + t)``.
        """
        T = self.period
        if d < 1 or T % d:
            raise PeriodNotDivisor(f"{d} does not divide {T}")
        return self._collapse(d) is not None

    def _collapse(self, d):
        T = self.period
        c = T // d
        if c == 1:
            return self.pieces
        out = []
        for r in range(d):
            q = collapse_pieces([self.pieces[d * t + r] for t in range(c)])
            if q is None:
                return None
            out.append(q)
        return out

    def least_period(self):
        return self.canonical().period

    def least_rational_period(self):
        """Least period when pieces may be taken in Q[x] rather than Z[x]."""
        canon = self.canonical()
        T = canon.period
        for d in divisors(T):
            c = T // d
            ok = True
            for r in range(d):
                q = canon.pieces[r].to_rational().compose(RatPolynomial((0, Fraction(1, c))))
                if any(q.compose_affine(c, t) != canon.pieces[d * t + r].to_rational()
                       for t in range(1, c)):
                    ok = False
                    break
            if ok:
                return d
        return T

    def canonical(self):
        if self._canon is not None:
            return self._canon
        T = self.period
        result = self
        if self.is_zero():
            result = QuasiPolynomial(1, (IntPolynomial(()),))
        elif T > 1:
            for d in divisors(T):
                if d == T:
                    break
                pieces = self._collapse(d)
                if pieces is not None:
                    result = QuasiPolynomial(d, pieces)
                    break
        object.__setattr__(result, "_canon", result)
        object.__setattr__(self, "_canon", result)
        return result

    canonicalize = canonical

    def __eq__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            other = _coerce(other)
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.period == b.period and a.pieces == b.pieces

    def __hash__(self):
        c = self.canonical()
        return hash((c.period, c.pieces))

    # ring operations -------------------------------------------------

    def _binary(self, other, op):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        T = _lcm(self.period, other.period)
        a, b = self.refine(T), other.refine(T)
        return QuasiPolynomial(T, [op(p, q) for p, q in zip(a.pieces, b.pieces)]).canonical()

    def __add__(self, other):
        return self._binary(other, lambda p, q: p + q)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda p, q: p - q)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._binary(other, lambda p, q: p * q)

    __rmul__ = __mul__

    def __neg__(self):
        return QuasiPolynomial(self.period, [-p for p in self.pieces]).canonical()

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        c = self.canonical()
        return QuasiPolynomial(c.period, [p ** e for p in c.pieces]).canonical()

    # structure -------------------------------------------------------

    def is_zero_divisor(self):
        """Return ``(flag, witness)``; the witness g satisfies g != 0, self*g == 0."""
        c = self.canonical()
        if c.is_zero():
            return False, None
        for i0, p in enumerate(c.pieces):
            if p.is_zero():
                pieces = [IntPolynomial(())] * c.period
                pieces[i0] = IntPolynomial.x()
                return True, QuasiPolynomial(c.period, pieces).canonical()
        return False, None

    def is_unit(self):
        return all(p.coeffs in ((1,), (-1,)) for p in self.canonical().pieces)

    def order_class(self):
        signs = {sign_class(p) for p in self.canonical().pieces}
        if signs == {Order.ZERO}:
            return Order.ZERO
        if signs == {Order.STRICTLY_POSITIVE}:
            return Order.STRICTLY_POSITIVE
        if signs == {Order.STRICTLY_NEGATIVE}:
            return Order.STRICTLY_NEGATIVE
        if signs == {Order.ZERO, Order.STRICTLY_POSITIVE}:
            return Order.NONNEGATIVE_MIXED
        if signs == {Order.ZERO, Order.STRICTLY_NEGATIVE}:
            return Order.NONPOSITIVE_MIXED
        return Order.INDEFINITE

    def is_nonnegative(self):
        return self.order_class() in _NONNEG

    def is_strictly_positive(self):
        return self.order_class() is Order.STRICTLY_POSITIVE

    def nonneg_threshold(self):
        """C with value(n) >= 0 for every integer n > C."""
        if not self.is_nonnegative():
            raise NotNonnegative(f"{self} is not eventually nonnegative")
        T = self.period
        C = 0
        for i, p in enumerate(self.pieces):
            if p:
                C = max(C, T * positivity_threshold(p) + i)
        return C

    def abs(self):
        return QuasiPolynomial(self.period, [abs_poly(p) for p in self.pieces]).canonical()

    __abs__ = abs

    def reflect(self):
        """Element n -> self(-n)."""
        T = self.period
        pieces = []
        for i in range(T):
            # -(T*m + i) = T*(-m - 1) + (T - i) for i > 0
            pieces.append(self.pieces[(-i) % T].compose_affine(-1, -1 if i else 0))
        return QuasiPolynomial(T, pieces).canonical()

    def sign_unit(self):
        """Unit e (pieces +-1) with e*self nonnegative canonical."""
        c = self.canonical()
        return QuasiPolynomial(c.period, [-1 if p.leading_coeff < 0 else 1 for p in c.pieces]).canonical()

    # presentation ----------------------------------------------------

    def __repr__(self):
        return f"QuasiPolynomial({self.period}, {[list(p.coeffs) for p in self.pieces]!r})"

    def __str__(self):
        if self.period == 1:
            return str(self.pieces[0])
        return "{" + f"{self.period}; " + "; ".join(str(p) for p in self.pieces) + "}"

    def piecewise_lines(self, var="m"):
        """One line per residue class, e.g. ``n=2m+1: m + 3``."""
        T = self.period
        lines = []
        for i, p in enumerate(self.pieces):
            lhs = f"n={T}{var}" if T > 1 else f"n={var}"
            if i:
                lhs += f"+{i}"
            lines.append(f"{lhs}: {p.to_string(var)}")
        return lines


_NONNEG = (Order.STRICTLY_POSITIVE, Order.ZERO, Order.NONNEGATIVE_MIXED)


def collapse_pieces(pieces):
    """Return q with q(c*x + t) == pieces[t] for c = len(pieces), or None.

    The only candidate is ``pieces[0](x / c)``; it must have integer
    coefficients and reproduce every other piece.
    """
    c = len(pieces)
    base = pieces[0]
    if c == 1:
        return base
    coeffs = []
    scale = Fraction(1)
    inv = Fraction(1, c)
    for a in base.coeffs:
        v = a * scale
        if v.denominator != 1:
            return None
        coeffs.append(v.numerator)
        scale *= inv
    q = IntPolynomial(coeffs)
    for t in range(1, c):
        if q.compose_affine(c, t) != pieces[t]:
            return None
    return q


def _coerce(v):
    if isinstance(v, QuasiPolynomial):
        return v
    if isinstance(v, bool):
        v = int(v)
    if isinstance(v, int):
        return QuasiPolynomial.constant(v)
    if isinstance(v, IntPolynomial):
        return QuasiPolynomial(1, (v,))
    return None


def as_quasi(v):
    q = _coerce(v)
    if q is None:
        raise TypeError(f"cannot interpret {v!r} as a quasi-polynomial")
    return q


def from_poly(p):
    return QuasiPolynomial.from_poly(p)


def from_rational_rep(period, pieces):
    return QuasiPolynomial.from_rational_rep(period, pieces)


def common_period(*fs):
    return reduce(_lcm, (f.period for f in fs), 1)


def refine_all(fs, period=None):
    """Refine every element to a shared period (their lcm by default)."""
    T = period or common_period(*fs)
    return T, [f.refine(T) for f in fs]


def assemble(period, inner):
    """Element h with h(period*m + i) = inner[i](m)."""
    inner = [as_quasi(f) for f in inner]
    if len(inner) != period:
        raise ValueError(f"expected {period} inner elements, got {len(inner)}")
    t = common_period(*inner)
    refined = [f.refine(t) for f in inner]
    pieces = [None] * (period * t)
    for i, f in enumerate(refined):
        for j in range(t):
            pieces[period * j + i] = f.pieces[j]
    return QuasiPolynomial(period * t, pieces).canonical()


def degree_R(f):
    return as_quasi(f).degree


def order_classify(f):
    return as_quasi(f).order_class()


def nonneg_threshold(f):
    return as_quasi(f).nonneg_threshold()


def abs_R(f):
    return as_quasi(f).abs()


def is_zero_divisor(f):
    return as_quasi(f).is_zero_divisor()


def is_unit(f):
    return as_quasi(f).is_unit()


def has_period(f, d):
    return f.has_period(d)


def least_period(f):
    return f.least_period()


def refine(f, period):
    return f.refine(period)
