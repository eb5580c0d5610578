"""Exact linear algebra over Z and Q used by the geometry kernel.

Vectors are plain tuples of ints (or Fractions where noted); matrices are
lists/tuples of row vectors.  Everything here is exact: no floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ZeroVectorError


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero(u):
    return all(a == 0 for a in u)


def content(v) -> int:
    """gcd of the entries; 0 for the zero vector."""
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive_part(v):
    """v divided by the gcd of its entries.  Raises on the zero vector."""
    g = content(v)
    if g == 0:
        raise ZeroVectorError(f"zero vector {v!r} has no primitive part")
    return tuple(a // g for a in v)


def canonical_sign(v):
    """Flip sign so the first nonzero entry is positive."""
    for a in v:
        if a > 0:
            return tuple(v)
        if a < 0:
            return vneg(v)
    return tuple(v)


def integerize(v):
    """Scale a rational vector by the lcm of denominators to a primitive int vector."""
    scale = 1
    for a in v:
        if isinstance(a, Fraction):
            d = a.denominator
            scale = scale * d // gcd(scale, d)
    w = tuple(int(a * scale) for a in v)
    return primitive_part(w)


def xgcd(a: int, b: int):
    """Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def kernel_basis(rows, dim: int):
    """Basis of the saturated integer lattice {x in Z^dim : <r,x> = 0 for all rows}.

    Unimodular column elimination: starting from the identity columns, each row
    is absorbed by gcd-combining columns so that at most one column keeps a
    nonzero pairing with the row; that column is dropped.  All updates are
    unimodular, so the surviving columns are a genuine lattice basis of the
    kernel (not merely a spanning set).
    """
    cols = [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]
    for r in rows:
        vals = [dot(r, c) for c in cols]
        pivot = None
        for j in range(len(cols)):
            if vals[j] == 0:
                continue
            if pivot is None:
                pivot = j
                continue
            a, b = vals[pivot], vals[j]
            g, x, y = xgcd(a, b)
            cp, cj = cols[pivot], cols[j]
            cols[pivot] = tuple(x * p + y * q for p, q in zip(cp, cj))
            cols[j] = tuple((-b // g) * p + (a // g) * q for p, q in zip(cp, cj))
            vals[pivot], vals[j] = g, 0
        if pivot is not None:
            del cols[pivot]
            del vals[pivot]
    return cols


def rank(rows, dim: int) -> int:
    return dim - len(kernel_basis(rows, dim))


def det(matrix) -> Fraction | int:
    """Determinant by fraction-free (Bareiss) elimination; exact for int input."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    m[i][j] = num // prev
                else:
                    m[i][j] = num / prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cross_nd(vectors, dim: int):
    """The vector of signed maximal minors of (dim-1) row vectors in R^dim.

    Orthogonal to every input row; zero iff the rows are linearly dependent.
    Generalizes the 3D cross product.
    """
    n = dim
    assert len(vectors) == n - 1
    result = []
    for j in range(n):
        minor = [[row[i] for i in range(n) if i != j] for row in vectors]
        result.append((-1) ** j * det(minor))
    return tuple(result)


def gram_matrix(vectors):
    return [[dot(u, v) for v in vectors] for u in vectors]


def gram_det(vectors):
    return det(gram_matrix(vectors))


def solve(matrix, rhs):
    """Solve a square rational system exactly; returns tuple of Fractions or None."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(aug[i][n] for i in range(n))


class ChartSolver:
    """Exact coordinates with respect to a full-column-rank basis.

    Given independent integer columns B (as a tuple of vectors), solves
    B y = x for points x known to lie in the column span, via the normal
    equations (B^T B) y = B^T x — exact because B^T B is invertible over Q.
    """

    def __init__(self, basis):
        self.basis = tuple(tuple(b) for b in basis)
        g = gram_matrix(self.basis)
        k = len(self.basis)
        # invert the Gram matrix once
        aug = [[Fraction(g[i][j]) for j in range(k)] + [Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
        for col in range(k):
            piv = next(i for i in range(col, k) if aug[i][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [a * inv for a in aug[col]]
            for i in range(k):
                if i != col and aug[i][col] != 0:
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
        self._ginv = [row[k:] for row in aug]

    def coords(self, x):
        """Chart coordinates y with B y = x.  x must lie in the span."""
        bt_x = [dot(b, x) for b in self.basis]
        y = tuple(sum(self._ginv[i][j] * bt_x[j] for j in range(len(bt_x)))
                  for i in range(len(self.basis)))
        return tuple(a if a.denominator != 1 else int(a) for a in map(Fraction, y))

    def embed(self, y):
        """Ambient point B y for chart coordinates y."""
        n = len(self.basis[0])
        out = [0] * n
        for c, b in zip(y, self.basis):
            for i in range(n):
                out[i] += c * b[i]
        return tuple(out)
