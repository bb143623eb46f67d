"""Smith theory for integer matrices with one integer parameter.

Entries are elements of R.  Determinantal factors are gcds (in R) of all
k x k minors, invariant factors are quotients of consecutive determinantal
factors, and two matrices are equivalent over Z at every integer exactly
when their determinantal factors agree.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import BadOrder, DimensionMismatch, InternalDivisibilityFailure
from .euclid import divide_R
from .ggcd import GgcdMismatch, ggcd_euclidean, ggcd_pointwise
from .quasipoly import QuasiPolynomial, as_quasi


class ParamMatrix:
    """m x n matrix over R, stored with m <= n (wider inputs are transposed)."""

    def __init__(self, rows):
        rows = [[as_quasi(e).canonical() for e in row] for row in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix rows have different lengths")
        self.transposed = len(rows) > width
        if self.transposed:
            rows = [list(col) for col in zip(*rows)]
        self.entries = tuple(tuple(r) for r in rows)
        self.rows = len(rows)
        self.cols = len(rows[0])

    @property
    def shape(self):
        return self.rows, self.cols

    def __call__(self, n):
        return [[e(n) for e in row] for row in self.entries]

    def __repr__(self):
        return f"ParamMatrix({[[str(e) for e in row] for row in self.entries]})"


def _det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = QuasiPolynomial.zero()
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def minors(A, k):
    """All k x k minors, ordered by (row set, column set) lexicographically."""
    if not 1 <= k <= A.rows:
        raise BadOrder(f"order {k} outside 1..{A.rows}")
    out = []
    for rs in combinations(range(A.rows), k):
        for cs in combinations(range(A.cols), k):
            out.append(_det([[A.entries[i][j] for j in cs] for i in rs]))
    return out


def det_factors(A, strict=False, cross_check=True):
    """D_1..D_m; with ``cross_check`` each is recomputed by successive division."""
    out = []
    for k in range(1, A.rows + 1):
        ms = minors(A, k)
        D = ggcd_pointwise(ms, strict=strict)
        if cross_check:
            other = ggcd_euclidean(ms).d
            if other != D:
                raise GgcdMismatch(f"D_{k}: pointwise {D} vs euclid {other}")
        out.append(D)
    return out


@dataclass(frozen=True)
class SmithData:
    det_factors: tuple
    inv_factors: tuple
    shape: tuple
    transposed: bool

    @property
    def smith(self):
        m, n = self.shape
        zero = QuasiPolynomial.zero()
        return [[self.inv_factors[i] if i == j else zero for j in range(n)] for i in range(m)]

    def at(self, n):
        return [d(n) for d in self.inv_factors]


def invariant_factors(D):
    d = [D[0]]
    for k in range(1, len(D)):
        res = divide_R(D[k], D[k - 1])
        if res.rem:
            raise InternalDivisibilityFailure(f"D_{k} does not divide D_{k + 1}: remainder {res.rem}")
        d.append(res.quo)
    return d


def smith_form(A, strict=False, cross_check=True):
    D = det_factors(A, strict=strict, cross_check=cross_check)
    return SmithData(tuple(D), tuple(invariant_factors(D)), A.shape, A.transposed)


def equivalent_everywhere(A, B, strict=False, cross_check=True):
    """Whether A(n) and B(n) are equivalent over Z for every integer n."""
    if A.shape != B.shape:
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    DA = det_factors(A, strict=strict, cross_check=cross_check)
    DB = det_factors(B, strict=strict, cross_check=cross_check)
    return all(a == b for a, b in zip(DA, DB))
