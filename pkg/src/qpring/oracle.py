"""Brute-force integer referees.

Nothing here imports the parametric machinery; tests and runtime
cross-checks rely on that independence.
"""

from fractions import Fraction

from .errors import DivByZero, BadModulus


def int_divmod(a, b):
    """(q, r) with a = q*b + r and 0 <= r < |b|."""
    if b == 0:
        raise DivByZero("division by zero")
    r = a % abs(b)
    return (a - r) // b, r


def int_gcd(xs):
    g = 0
    for x in xs:
        a, b = abs(g), abs(x)
        while b:
            a, b = b, a % b
        g = a
    return g


def canonical_cf(terms):
    """Merge a trailing 1 into its predecessor: [..., a, 1] -> [..., a+1]."""
    terms = list(terms)
    while len(terms) > 1 and terms[-1] == 1:
        terms.pop()
        terms[-1] += 1
    return terms


def int_cf(p, q):
    """Simple continued fraction of p/q by the floor algorithm."""
    if q == 0:
        raise DivByZero("zero denominator")
    terms = []
    while q:
        a = p // q
        terms.append(a)
        p, q = q, p - a * q
    return canonical_cf(terms)


def fold_cf(terms):
    """Exact value of [a0; a1, ..., ak]."""
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a + 1 / value
    return value


def int_det(M):
    """Determinant by cofactor expansion along the first row."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * int_det(minor)
    return total


def int_smith(M):
    """Invariant factors d_1 | d_2 | ... of an integer matrix (min(rows, cols) of them)."""
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    factors = []
    for t in range(min(rows, cols)):
        # pivot: smallest nonzero |entry| in the trailing block
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                factors.extend([0] * (min(rows, cols) - t))
                return factors
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    for j in range(t, cols):
                        A[i][j] -= q * A[t][j]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for i in range(t, rows):
                        A[i][j] -= q * A[i][t]
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            # enforce p | every remaining entry
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for j in range(t, cols):
                A[t][j] += A[bad][j]
        factors.append(abs(A[t][t]))
    return factors


def int_det_divisors(M):
    """Determinantal divisors D_k = d_1 * ... * d_k."""
    out = []
    acc = 1
    for d in int_smith(M):
        acc *= d
        out.append(acc)
    return out


def int_jacobi(a, b):
    """Jacobi symbol (a/b) for odd positive b."""
    if b <= 0 or b % 2 == 0:
        raise BadModulus(f"modulus must be odd and positive, got {b}")
    a %= b
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0
