"""Parametric simple continued fractions of f(n)/g(n).

Successive generalized division, run separately on every residue class,
gives closed-form term lists valid for all large ``n``; the same on
``f(-x)/g(-x)`` covers large negative ``n``.  The finitely many integers
in between are expanded directly and stored in an exceptional table.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import GHasIntegerRoot, OutOfDomain, DivisionByZeroPoly
from .euclid import poly_divide
from .intpoly import IntPolynomial, Order, divisors, integer_roots, positivity_threshold, sign_class
from .oracle import canonical_cf, fold_cf, int_cf
from .quasipoly import collapse_pieces, common_period


@dataclass(frozen=True)
class Branch:
    """Term lists per residue class: for n = period*m + i, terms are classes[i](m)."""

    threshold: int
    period: int
    classes: tuple

    def terms_at(self, n):
        i, m = n % self.period, n // self.period
        return [t(m) for t in self.classes[i]]


@dataclass(frozen=True)
class PiecewiseContinuedFraction:
    f: IntPolynomial
    g: IntPolynomial
    pos: Branch
    neg: Branch
    exceptional: dict
    term_bound: int

    def terms_at(self, n):
        if n > self.pos.threshold:
            return self.pos.terms_at(n)
        if n < -self.neg.threshold:
            return self.neg.terms_at(n)
        try:
            return list(self.exceptional[n])
        except KeyError:
            raise OutOfDomain(f"no expansion stored for n={n}") from None

    def eval(self, n):
        return fold_cf(self.terms_at(n))

    __call__ = eval


class _Leaf:
    """Class n = M*m + c with terms and positivity side conditions in m."""

    __slots__ = ("M", "c", "terms", "positive", "nonneg")

    def __init__(self, M, c, terms, positive, nonneg):
        self.M, self.c = M, c
        self.terms, self.positive, self.nonneg = terms, positive, nonneg

    def split(self, P, k):
        sub = [p.compose_affine(P, k) for p in self.terms]
        pos = [p.compose_affine(P, k) for p in self.positive]
        nn = [p.compose_affine(P, k) for p in self.nonneg]
        return _Leaf(self.M * P, self.c + self.M * k, sub, pos, nn)


def _expand_classes(F, G):
    """Run the division cascade on every class; returns finished leaves."""
    leaves = []
    start = _Leaf(1, 0, [], [], [])
    if sign_class(G) is Order.STRICTLY_NEGATIVE:
        F, G = -F, -G
    stack = [(start, F, G)]
    while stack:
        leaf, A, B = stack.pop()
        q, r = poly_divide(A, B)
        P = common_period(q, r)
        qs, rs = q.refine(P).pieces, r.refine(P).pieces
        for k in range(P):
            sub = leaf.split(P, k)
            Ak, Bk = A.compose_affine(P, k), B.compose_affine(P, k)
            sub.terms.append(qs[k])
            sub.positive.extend([Bk, Bk - rs[k]])
            if rs[k]:
                sub.nonneg.append(rs[k])
            if rs[k]:
                stack.append((sub, Bk, rs[k]))
            else:
                leaves.append(sub)
    return leaves


def _leaf_ok(leaf, m):
    return all(p(m) > 0 for p in leaf.positive) and all(p(m) >= 0 for p in leaf.nonneg)


def _sound_threshold(leaf):
    c = 0
    for p in leaf.positive:
        c = max(c, positivity_threshold(p))
    for p in leaf.nonneg:
        c = max(c, positivity_threshold(p))
    return leaf.M * c + leaf.c


def _collapse_branch(T, classes):
    """Shrink the period while every class list collapses term by term."""
    for d in divisors(T):
        if d == T:
            break
        c = T // d
        out = []
        for r in range(d):
            group = [classes[d * t + r] for t in range(c)]
            if len({len(g) for g in group}) != 1:
                break
            merged = []
            for k in range(len(group[0])):
                q = collapse_pieces([g[k] for g in group])
                if q is None:
                    break
                merged.append(q)
            else:
                out.append(merged)
                continue
            break
        else:
            return d, out
    return T, classes


def _merge_tail(terms):
    terms = list(terms)
    while len(terms) > 1 and terms[-1] == IntPolynomial.constant(1):
        terms.pop()
        terms[-1] = terms[-1] + 1
    return terms


def _branch(F, G):
    """Branch valid for large positive argument, in the argument's own residues."""
    leaves = _expand_classes(F, G)
    T = 1
    for leaf in leaves:
        T = T * leaf.M // _gcd(T, leaf.M)
    by_mod = {}
    for leaf in leaves:
        by_mod.setdefault(leaf.M, {})[leaf.c] = leaf
    classes = []
    for s in range(T):
        leaf = next(tab[s % M] for M, tab in by_mod.items() if s % M in tab)
        a = T // leaf.M
        b = (s - leaf.c) // leaf.M
        classes.append(_merge_tail([t.compose_affine(a, b) for t in leaf.terms]))

    # Every side condition holds beyond the Cauchy bound; walk down from
    # there checking them exactly to find where the formulas stop holding.
    C = max(_sound_threshold(leaf) for leaf in leaves)

    def ok(n):
        for M, tab in by_mod.items():
            leaf = tab.get(n % M)
            if leaf is not None:
                return _leaf_ok(leaf, (n - leaf.c) // M)
        return False  # pragma: no cover

    while C > 0 and ok(C):
        C -= 1
    T, classes = _collapse_branch(T, classes)
    return C, T, classes


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _to_negative(T, classes):
    """Rewrite a branch in y = -n back into residues of n."""
    out = []
    for i in range(T):
        s = (-i) % T
        delta = (s + i) // T
        # y = T*m' + s  with  m' = -m - delta
        out.append([t.compose_affine(-1, -delta) for t in classes[s]])
    return out


def check_denominator(g):
    if not g:
        raise DivisionByZeroPoly("denominator is the zero polynomial")
    roots = integer_roots(g)
    if roots:
        raise GHasIntegerRoot(roots[0])


def expand(f, g):
    """Piecewise simple continued fraction of f(n)/g(n) over all integers n."""
    f = f if isinstance(f, IntPolynomial) else IntPolynomial(f)
    g = g if isinstance(g, IntPolynomial) else IntPolynomial(g)
    check_denominator(g)
    C1, T1, pos = _branch(f, g)
    C2, T2, negy = _branch(f.reflect(), g.reflect())
    neg = _to_negative(T2, negy)
    exceptional = {n: int_cf(f(n), g(n)) for n in range(-C2, C1 + 1)}
    L = max([len(t) for t in pos] + [len(t) for t in neg] + [len(t) for t in exceptional.values()])
    return PiecewiseContinuedFraction(
        f, g,
        Branch(C1, T1, tuple(tuple(t) for t in pos)),
        Branch(C2, T2, tuple(tuple(t) for t in neg)),
        exceptional,
        L,
    )


def eval_cf(pcf, n):
    return pcf.eval(n)


def term_bound(pcf):
    return pcf.term_bound


def format_terms(terms, var="m"):
    strs = [t.to_string(var) if hasattr(t, "to_string") else str(t) for t in terms]
    if len(strs) == 1:
        return f"[{strs[0]}]"
    return f"[{strs[0]}; " + ", ".join(strs[1:]) + "]"


def format_branch(branch, sign, var="m"):
    lines = []
    T = branch.period
    for i, terms in enumerate(branch.classes):
        lhs = f"n={T}{var}" if T > 1 else f"n={var}"
        if i:
            lhs += f"+{i}"
        lines.append(f"{lhs}: {format_terms(terms, var)}")
    cond = f"n > {branch.threshold}" if sign > 0 else f"n < {-branch.threshold}"
    return [f"when {cond}:"] + ["  " + ln for ln in lines]


def format_pcf(pcf):
    lines = [f"{pcf.f} / ({pcf.g})"]
    lines += format_branch(pcf.pos, +1)
    lines += format_branch(pcf.neg, -1)
    if pcf.exceptional:
        lines.append("exceptional:")
        for n in sorted(pcf.exceptional):
            lines.append(f"  n={n}: {format_terms(pcf.exceptional[n])}")
    lines.append(f"term bound L = {pcf.term_bound}")
    return lines
