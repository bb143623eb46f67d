"""Greatest common divisors in R.

Two independent routes:

* :func:`ggcd_euclidean` runs successive generalized division and carries
  Bezout cofactors along;
* :func:`ggcd_pointwise` works residue class by residue class: divide out
  the Z[x] gcd, then read off the periodic pattern of integer gcds of the
  cofactors, whose period divides a Bezout modulus ``a0``.

Both return the canonical nonnegative generator (every piece zero or with
positive leading coefficient); :func:`ggcd` can run both and compare.
"""

import math
import os
from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import AllZeroAtPoint, QPRingError
from .euclid import poly_divide
from .intpoly import IntPolynomial, bezout_modulus, exact_quotient, gcd_zx, integer_roots
from .quasipoly import QuasiPolynomial, as_quasi, assemble, common_period

SUCCESSIVE_DIVISION = "SuccessiveDivision"
POINTWISE = "Pointwise"


class GgcdMismatch(QPRingError):
    """The two gcd algorithms disagreed (should never happen)."""


@dataclass(frozen=True)
class GgcdResult:
    d: QuasiPolynomial
    bezout: tuple
    method: str


def strict_from_env():
    return os.environ.get("QPRING_STRICT", "") not in ("", "0")


@lru_cache(maxsize=4096)
def _xgcd_class(a, b):
    """Extended successive division of a by b in Z[x]: (d, s, t), s*a + t*b = d.

    Results live in R (variable m of the class).  Division steps that do
    not split the class are folded into a 2x2 cofactor matrix over Z[x];
    a step that does split recurses on each subclass, and a subclass stops
    as soon as its remainder is zero, which keeps classes that finish
    early from cycling.
    """
    one, zero = IntPolynomial.constant(1), IntPolynomial(())
    # a_cur = sa*a + ta*b,  b_cur = sb*a + tb*b
    a_cur, b_cur = a, b
    sa, ta, sb, tb = one, zero, zero, one
    while b_cur:
        q, r = poly_divide(a_cur, b_cur)
        if not r:
            return tuple(QuasiPolynomial(1, (p,)) for p in (b_cur, sb, tb))
        P = common_period(q, r)
        if P == 1:
            q0, r0 = q.pieces[0], r.pieces[0]
            a_cur, b_cur = b_cur, r0
            sa, ta, sb, tb = sb, tb, sa - q0 * sb, ta - q0 * tb
            continue
        bs = QuasiPolynomial(1, (b_cur,)).refine(P).pieces
        rs = r.refine(P).pieces
        parts = [_xgcd_class(bk, rk) for bk, rk in zip(bs, rs)]
        d, s1, t1 = (assemble(P, [part[i] for part in parts]) for i in range(3))
        # d = s1*b_cur + t1*(a_cur - q*b_cur) = t1*a_cur + (s1 - t1*q)*b_cur
        u, v = t1, s1 - t1 * q
        return d, u * sa + v * sb, u * ta + v * tb
    return tuple(QuasiPolynomial(1, (p,)) for p in (a_cur, sa, ta))


def _xgcd_R(f, g):
    T = common_period(f, g)
    fr, gr = f.refine(T), g.refine(T)
    parts = [_xgcd_class(a, b) for a, b in zip(fr.pieces, gr.pieces)]
    return tuple(assemble(T, [part[i] for part in parts]) for i in range(3))


def _fold_cost(f):
    if not f:
        return (1, 0, 0)
    return (0, f.degree, max(abs(p.leading_coeff) for p in f.pieces), f.period)


def ggcd_euclidean(fs):
    """gcd by successive division, with cofactors u_i such that sum(u_i*f_i) = d."""
    fs = [as_quasi(f).canonical() for f in fs]
    if not fs:
        raise ValueError("ggcd needs at least one element")
    # Folding the cheapest inputs first keeps the class splitting small:
    # a constant c caps every later period at a divisor of a power of c.
    order = sorted(range(len(fs)), key=lambda i: _fold_cost(fs[i]))
    d = fs[order[0]]
    us = [QuasiPolynomial.one()]
    for i in order[1:]:
        d, s, t = _xgcd_R(d, fs[i])
        us = [u * s for u in us] + [t]
    us = [u for _, u in sorted(zip(order, us), key=lambda pair: pair[0])]
    eps = d.sign_unit()
    d = eps * d
    us = [eps * u for u in us]
    total = reduce(lambda a, b: a + b, (u * f for u, f in zip(us, fs)))
    if total != d:
        raise AssertionError("Bezout identity failed")
    return GgcdResult(d, tuple(us), SUCCESSIVE_DIVISION)


def _factor(n):
    from sympy import factorint

    return factorint(n)


def _mod_poly_gcd(ps, p):
    """gcd over F_p of integer polynomials; returns coefficient list (ascending)."""

    def norm(c):
        c = [x % p for x in c]
        while c and c[-1] == 0:
            c.pop()
        return c

    def rem(a, b):
        a = a[:]
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            k = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - k * bi) % p
            a = norm(a)
        return a

    g = []
    for q in ps:
        a, b = g, norm(list(q.coeffs))
        while b:
            a, b = b, rem(a, b)
        g = a
    return g


def _prime_power_pattern(bars, p, e):
    """Least period and table of min(v_p(gcd(bars(i))), e) for i mod p^e."""
    pe = p ** e
    if len(_mod_poly_gcd(bars, p)) <= 1:
        return 1
    vals = []
    for i in range(pe):
        g = 0
        for b in bars:
            g = math.gcd(g, b(i) % pe)
        vals.append(math.gcd(g, pe))
    period = pe
    for k in range(e + 1):
        q = p ** k
        if all(vals[i] == vals[i % q] for i in range(pe)):
            period = q
            break
    return period


def _residue_gcd_pattern(bars):
    """Periodic integer gcd pattern of polynomials coprime in Q[x]."""
    a0, _ = bezout_modulus(bars)
    period = 1
    if a0 > 1:
        for p, e in _factor(a0).items():
            period *= _prime_power_pattern(bars, p, e)
    values = [reduce(math.gcd, (b(i) for b in bars), 0) for i in range(period)]
    return QuasiPolynomial(period, values).canonical()


def _class_gcd(pieces, j, T, strict):
    nonzero = [p for p in pieces if p]
    if not nonzero:
        if strict:
            raise AllZeroAtPoint(j, f"all inputs vanish on the class n = {j} (mod {T})")
        return QuasiPolynomial.zero()
    d0 = gcd_zx(nonzero)
    if strict and d0.degree > 0:
        roots = integer_roots(d0)
        if roots:
            raise AllZeroAtPoint(T * roots[0] + j)
    bars = [exact_quotient(p, d0) for p in nonzero]
    pattern = _residue_gcd_pattern(bars)
    return QuasiPolynomial.from_poly(d0) * pattern


def ggcd_pointwise(fs, strict=False):
    """gcd assembled from per-class integer gcd patterns.

    With ``strict`` set, any integer at which every input vanishes raises
    :class:`AllZeroAtPoint`; otherwise the gcd there is 0.
    """
    fs = [as_quasi(f).canonical() for f in fs]
    if not fs:
        raise ValueError("ggcd needs at least one element")
    T = common_period(*fs)
    refined = [f.refine(T) for f in fs]
    classes = [_class_gcd([f.pieces[j] for f in refined], j, T, strict) for j in range(T)]
    return assemble(T, classes)


def ggcd(fs, method="euclid", strict=False):
    """Dispatch on ``method`` in {"euclid", "pointwise", "both"}.

    ``both`` runs the two algorithms and raises :class:`GgcdMismatch` if
    their generators differ; the returned result carries the cofactors.
    """
    if method == "pointwise":
        return GgcdResult(ggcd_pointwise(fs, strict=strict), (), POINTWISE)
    if method not in ("euclid", "both"):
        raise ValueError(f"unknown method {method!r}")
    res = ggcd_euclidean(fs)
    if strict and method == "euclid":
        ggcd_pointwise(fs, strict=True)
    if method == "both":
        other = ggcd_pointwise(fs, strict=strict)
        if other != res.d:
            raise GgcdMismatch(f"euclid gave {res.d}, pointwise gave {other}")
    return res


def ideal_pointwise_equal(gens1, gens2):
    """Whether the two generator lists give the same ideal of Z at every n."""
    return ggcd_pointwise(gens1) == ggcd_pointwise(gens2)
