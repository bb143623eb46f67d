"""Dense univariate polynomials over Z and Q.

Coefficients are stored in ascending order of degree, trailing zeros
stripped, so the zero polynomial is the empty tuple.  Integer arithmetic
is Python's arbitrary precision ``int``; rational arithmetic uses
:class:`fractions.Fraction`.
"""

import enum
import math
from fractions import Fraction
from functools import reduce

from .errors import NotCoprime, DivisionByZeroPoly


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but supports no arithmetic, so code that
    forgets the zero case fails loudly instead of computing with -1.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-oo"


MINUS_INFINITY = _MinusInfinity()


class Order(enum.Enum):
    """Eventual-sign classes.  Polynomials only use the first three."""

    STRICTLY_POSITIVE = "StrictlyPositive"
    STRICTLY_NEGATIVE = "StrictlyNegative"
    ZERO = "Zero"
    NONNEGATIVE_MIXED = "NonnegativeMixed"
    NONPOSITIVE_MIXED = "NonpositiveMixed"
    INDEFINITE = "Indefinite"


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _fmt_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c})"
    return str(int(c))


class _DensePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(self._coerce(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    # subclasses override
    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, d):
        return cls((0,) * d + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if d == 0:
                body = _fmt_coeff(a)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic ------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, _DensePoly):
            if isinstance(self, RatPolynomial) or isinstance(other, RatPolynomial):
                return RatPolynomial, other.coeffs
            return IntPolynomial, other.coeffs
        if isinstance(other, Fraction):
            return RatPolynomial, (other,)
        if isinstance(other, int):
            return type(self), (other,)
        return None, None

    def __add__(self, other):
        cls, oc = self._lift(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, oc
        n = max(len(a), len(b))
        return cls([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        cls, oc = self._lift(other)
        if cls is None:
            return NotImplemented
        return self + cls([-c for c in oc])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        cls, oc = self._lift(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if not a or not b:
            return cls(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self).constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, n):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def compose(self, other):
        acc = type(other)(())
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def compose_affine(self, a, b):
        """Return ``self(a*x + b)``; ``a`` may be any nonzero integer."""
        return compose_affine(self, a, b)

    def reflect(self):
        """Return ``self(-x)``."""
        return type(self)([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def to_rational(self):
        return RatPolynomial(self.coeffs)


class IntPolynomial(_DensePoly):
    """Polynomial with integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, bool):
            return int(c)
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"non-integer coefficient {c!r}")

    def content(self):
        return reduce(math.gcd, self.coeffs, 0)

    def primitive_part(self):
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return IntPolynomial([a // c for a in self.coeffs])

    def sign_class(self):
        return sign_class(self)


class RatPolynomial(_DensePoly):
    """Polynomial with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        raise TypeError(f"non-rational coefficient {c!r}")

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self):
        return IntPolynomial(self.coeffs)

    def denominator(self):
        """Least common denominator of the coefficients."""
        return reduce(_lcm, (c.denominator for c in self.coeffs), 1)

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return RatPolynomial([c / lc for c in self.coeffs])


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def compose_affine(f, a, b):
    """Expand ``f(a*x + b)``, keeping the coefficient type of ``f``."""
    out = []
    for c in reversed(f.coeffs):
        # out <- out*(a*x + b) + c
        nxt = [0] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i] += v * b
            nxt[i + 1] += v * a
        nxt[0] += c
        out = nxt
    return type(f)(out)


def rat_divmod(f, g):
    """Quotient and remainder of ``f`` by ``g`` in Q[x]."""
    f, g = f.to_rational() if isinstance(f, IntPolynomial) else f, \
        g.to_rational() if isinstance(g, IntPolynomial) else g
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lc = g.coeffs[-1]
    if len(rem) - 1 < dg:
        return RatPolynomial(()), f
    quo = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] / lc
        quo[k - dg] = c
        if c:
            for j, gj in enumerate(g.coeffs):
                rem[k - dg + j] -= c * gj
    return RatPolynomial(quo), RatPolynomial(rem[:dg])


def exact_quotient(f, g):
    """``f / g`` in Z[x]; raises ValueError if the division is not exact."""
    q, r = rat_divmod(f, g)
    if r or not q.is_integral():
        raise ValueError(f"{g} does not divide {f} in Z[x]")
    return q.to_int()


def rat_xgcd(f, g):
    """Extended Euclid over Q[x]: returns ``(d, s, t)`` with s*f + t*g = d monic."""
    r0, r1 = f.to_rational(), g.to_rational()
    s0, s1 = RatPolynomial((1,)), RatPolynomial(())
    t0, t1 = RatPolynomial(()), RatPolynomial((1,))
    while r1:
        q, r = rat_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0:
        lc = r0.leading_coeff
        r0, s0, t0 = r0 * (1 / lc), s0 * (1 / lc), t0 * (1 / lc)
    return r0, s0, t0


def rat_gcd(f, g):
    return rat_xgcd(f, g)[0]


def content(p):
    return p.content()


def gcd_zx(ps):
    """Greatest common divisor in Z[x], normalized with positive leading coefficient."""
    ps = [p if isinstance(p, IntPolynomial) else IntPolynomial(p) for p in ps]
    if not ps:
        raise ValueError("gcd_zx needs at least one polynomial")
    c = reduce(math.gcd, (p.content() for p in ps), 0)
    if c == 0:
        return IntPolynomial(())
    g = RatPolynomial(())
    for p in ps:
        g = rat_gcd(g, p) if g else p.to_rational()
        if g.degree == 0:
            break
    # Gauss: the primitive gcd is the primitive part of the Q[x] gcd.
    den = g.denominator()
    prim = IntPolynomial([x * den for x in g.coeffs]).primitive_part()
    return prim * c


def bezout_modulus(ps):
    """Integer certificate that polynomials coprime in Q[x] generate a constant.

    Returns ``(a0, ws)`` with ``sum(p*w for p, w in zip(ps, ws)) == a0``,
    ``a0 >= 1``.  ``a0`` is the least common denominator of a Q[x] Bezout
    certificate, not the least possible modulus.
    """
    ps = [p if isinstance(p, IntPolynomial) else IntPolynomial(p) for p in ps]
    g = RatPolynomial(())
    us = []
    for p in ps:
        d, s, t = rat_xgcd(g, p)
        us = [u * s for u in us] + [t]
        g = d
    if g.degree != 0:
        raise NotCoprime(f"inputs share the factor {g}")
    # rat_xgcd returns a monic gcd, so g == 1 here.
    a0 = reduce(_lcm, (u.denominator() for u in us), 1)
    ws = [(u * a0).to_int() for u in us]
    return a0, ws


def sign_class(p):
    if not p.coeffs:
        return Order.ZERO
    return Order.STRICTLY_POSITIVE if p.coeffs[-1] > 0 else Order.STRICTLY_NEGATIVE


def abs_poly(p):
    return -p if p.coeffs and p.coeffs[-1] < 0 else p


def _ceil_div(a, b):
    return -((-a) // b)


def positivity_threshold(p):
    """C such that p(n) > 0 for every integer n > C (Cauchy root bound)."""
    if sign_class(p) is not Order.STRICTLY_POSITIVE:
        raise ValueError(f"{p} is not eventually positive")
    if len(p.coeffs) == 1:
        return 0
    lc = abs(p.coeffs[-1])
    big = max(abs(c) for c in p.coeffs[:-1])
    # ceil(1 + big/lc) for Fraction or int coefficients
    bound = 1 + Fraction(big) / Fraction(lc)
    return math.ceil(bound)


def interpolate(points, d):
    """Polynomial of degree <= d through the first d+1 points (Lagrange form)."""
    pts = list(points)[: d + 1]
    if len(pts) < d + 1:
        raise ValueError("not enough points to interpolate")
    xs = [Fraction(px) for px, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be distinct")
    result = RatPolynomial(())
    for j, (xj, yj) in enumerate(pts):
        basis = RatPolynomial((1,))
        denom = Fraction(1)
        for i, (xi, _) in enumerate(pts):
            if i != j:
                basis = basis * RatPolynomial((-xi, 1))
                denom *= xj - xi
        result = result + basis * (Fraction(yj) / denom)
    return result


def integer_roots(p):
    """All integer roots of a nonzero integer polynomial."""
    if not p.coeffs:
        raise ValueError("the zero polynomial vanishes everywhere")
    coeffs = list(p.coeffs)
    roots = []
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(0)
    c0 = abs(coeffs[0])
    q = IntPolynomial(coeffs)
    for dv in _divisors(c0):
        for r in (dv, -dv):
            if q(r) == 0:
                roots.append(r)
    return sorted(set(roots))


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def divisors(n):
    """Positive divisors of ``n`` in increasing order."""
    return _divisors(n)


X = IntPolynomial.x()
