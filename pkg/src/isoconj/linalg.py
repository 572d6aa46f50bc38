"""Exact integer and rational matrix algebra.

Matrices are tuples of row tuples holding Python ints (or Fractions for the
rational helpers).  Sublattices of Z^n are stored in column-style Hermite
normal form, which makes equality a plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


# ---------------------------------------------------------------------------
# small matrix helpers


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> IntMatrix:
    return tuple((0,) * n for _ in range(m))


def transpose(A, ncols: Optional[int] = None):
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(v):
    return tuple(-a for a in v)


def columns_of(A) -> list[IntVector]:
    return [tuple(col) for col in transpose(A)]


def from_columns(cols: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


def det_int(A: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form (column style, lower echelon)


def _column_echelon(cols: list[list[int]], nrows: int, track: Optional[list[list[int]]] = None):
    """Reduce ``cols`` in place to column-style HNF by unimodular column ops.

    ``track`` (if given) receives the same column operations, so that with
    ``track`` starting as the identity we end with A * track = echelon.
    Returns the number of nonzero columns, which come first.
    """

    def swap(a, b):
        cols[a], cols[b] = cols[b], cols[a]
        if track is not None:
            track[a], track[b] = track[b], track[a]

    def axpy(dst, q, src):
        # cols[dst] -= q * cols[src]
        if q == 0:
            return
        cd, cs = cols[dst], cols[src]
        for i in range(nrows):
            cd[i] -= q * cs[i]
        if track is not None:
            td, ts = track[dst], track[src]
            for i in range(len(td)):
                td[i] -= q * ts[i]

    def negate(c):
        cols[c] = [-x for x in cols[c]]
        if track is not None:
            track[c] = [-x for x in track[c]]

    k = 0
    ncols = len(cols)
    for r in range(nrows):
        if k == ncols:
            break
        while True:
            piv = None
            for j in range(k, ncols):
                x = cols[j][r]
                if x and (piv is None or abs(x) < abs(cols[piv][r])):
                    piv = j
            if piv is None:
                break
            swap(k, piv)
            p = cols[k][r]
            done = True
            for j in range(k + 1, ncols):
                if cols[j][r]:
                    axpy(j, cols[j][r] // p, k)
                    if cols[j][r]:
                        done = False
            if done:
                break
        if cols[k][r] == 0:
            continue
        if cols[k][r] < 0:
            negate(k)
        p = cols[k][r]
        for j in range(k):
            axpy(j, cols[j][r] // p, k)
        k += 1
    return k


def hnf_columns(cols: Sequence[Sequence[int]], nrows: int) -> tuple[IntVector, ...]:
    work = [list(c) for c in cols]
    r = _column_echelon(work, nrows)
    return tuple(tuple(c) for c in work[:r])


def hnf(A: IntMatrix) -> tuple[IntMatrix, int]:
    """Column-style Hermite normal form of the column span of ``A``.

    Zero columns are dropped; pivots are positive and the entries to the
    left of each pivot lie in ``[0, pivot)``.

    >>> hnf(((2, 1), (0, 1)))
    (((1, 0), (1, 2)), 2)
    """
    nrows = len(A)
    cols = hnf_columns(columns_of(A) if A and A[0] else [], nrows)
    return from_columns(cols, nrows), len(cols)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    V: IntMatrix
    divisors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d)


def snf(A: IntMatrix, ncols: Optional[int] = None) -> SmithDecomposition:
    """Smith decomposition ``U * A * V = diag(divisors)``.

    Pivot rule: smallest nonzero absolute value in the active block, ties to
    the lowest (row, col).
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    a = [list(row) for row in A]
    U = [list(row) for row in identity(m)]
    V = [list(row) for row in identity(n)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_axpy(dst, q, src):
        # row dst -= q * row src
        for M in (a, U):
            rd, rs = M[dst], M[src]
            for c in range(len(rd)):
                rd[c] -= q * rs[c]

    def col_axpy(dst, q, src):
        for M in (a, V):
            for row in M:
                row[dst] -= q * row[src]

    divisors = []
    for t in range(min(m, n)):
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (piv is None or abs(x) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            row_swap(t, piv[0])
            col_swap(t, piv[1])
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    row_axpy(i, a[i][t] // p, t)
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    col_axpy(j, a[t][j] // p, t)
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_axpy(t, -1, bad)
        if a[t][t] < 0:
            for M in (a, U):
                M[t] = [-x for x in M[t]]
        divisors.append(a[t][t])

    return SmithDecomposition(as_matrix(U), as_matrix(V), tuple(divisors))


def solve_integer(A: IntMatrix, b: Sequence[int], ncols: Optional[int] = None) -> Optional[IntVector]:
    """Some integer ``x`` with ``A x = b``, or ``None`` if there is none."""
    m = len(A)
    if len(b) != m:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
    dec = snf(A, ncols)
    n = len(dec.V)
    c = matvec(dec.U, b)
    y = [0] * n
    for i, ci in enumerate(c):
        d = dec.divisors[i] if i < len(dec.divisors) else 0
        if d == 0:
            if ci:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return matvec(dec.V, y)


# ---------------------------------------------------------------------------
# sublattices


def _pivot_rows(cols) -> tuple[int, ...]:
    return tuple(next(i for i, x in enumerate(c) if x) for c in cols)


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of Z^n given by its column-style HNF basis."""

    dim: int
    columns: tuple[IntVector, ...]
    pivots: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cols = hnf_columns(self.columns, self.dim)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "pivots", _pivot_rows(cols))

    @classmethod
    def spanned_by(cls, A: IntMatrix, dim: Optional[int] = None) -> "Sublattice":
        """Column span of the matrix ``A``."""
        n = len(A) if dim is None else dim
        return cls(n, tuple(columns_of(A)) if A and A[0] else ())

    @classmethod
    def zero(cls, n: int) -> "Sublattice":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Sublattice":
        return cls(n, tuple(identity(n)))

    @property
    def rank(self) -> int:
        return len(self.columns)

    @property
    def basis(self) -> IntMatrix:
        return from_columns(self.columns, self.dim)

    def reduce(self, v: Sequence[int]) -> IntVector:
        """Canonical representative of ``v`` modulo this lattice."""
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in a rank-{self.dim} ambient lattice")
        w = list(v)
        for col, p in zip(self.columns, self.pivots):
            q = w[p] // col[p]
            if q:
                for i in range(p, self.dim):
                    w[i] -= q * col[i]
        return tuple(w)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def issubset(self, other: "Sublattice") -> bool:
        _check_dims(self, other)
        return all(c in other for c in self.columns)

    def image(self, M: IntMatrix) -> "Sublattice":
        """The sublattice ``M * self``."""
        return Sublattice(len(M), tuple(matvec(M, c) for c in self.columns))

    def __add__(self, other: "Sublattice") -> "Sublattice":
        _check_dims(self, other)
        return Sublattice(self.dim, self.columns + other.columns)


def _check_dims(a, b):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


@dataclass(frozen=True)
class AffineSublattice:
    """A coset ``offset + lattice`` with the offset reduced modulo the lattice."""

    offset: IntVector
    lattice: Sublattice

    def __post_init__(self):
        object.__setattr__(self, "offset", self.lattice.reduce(tuple(self.offset)))

    @property
    def dim(self) -> int:
        return self.lattice.dim

    def __contains__(self, v) -> bool:
        return vec_sub(tuple(v), self.offset) in self.lattice

    def translate(self, v: Sequence[int]) -> "AffineSublattice":
        return AffineSublattice(vec_add(self.offset, v), self.lattice)

    def image(self, M: IntMatrix) -> "AffineSublattice":
        return AffineSublattice(matvec(M, self.offset), self.lattice.image(M))

    def points_in_box(self, radius: int) -> list[IntVector]:
        """All coset points with every coordinate in ``[-radius, radius]``.

        Walks the echelon structure row by row, so the cost is proportional
        to the number of points returned (times n), not to the box volume.
        """
        n = self.dim
        cols = self.lattice.columns
        pivots = self.lattice.pivots
        out = []

        def rows_ok(v, lo, hi):
            return all(-radius <= v[i] <= radius for i in range(lo, hi))

        def walk(j, v):
            lo = pivots[j - 1] + 1 if j else 0
            if j == len(cols):
                if rows_ok(v, lo, n):
                    out.append(tuple(v))
                return
            p = pivots[j]
            if not rows_ok(v, lo, p):
                return
            col = cols[j]
            step = col[p]
            # c * step + v[p] in [-radius, radius]
            cmin = -((radius + v[p]) // step)
            cmax = (radius - v[p]) // step
            for c in range(cmin, cmax + 1):
                walk(j + 1, [x + c * y for x, y in zip(v, col)])

        walk(0, list(self.offset))
        return sorted(out)


def coset_contains(C: AffineSublattice, v: Sequence[int]) -> bool:
    if len(v) != C.dim:
        raise ValueError(f"dimension mismatch: {C.dim} vs {len(v)}")
    return v in C


def coset_equal(C: AffineSublattice, D: AffineSublattice) -> bool:
    _check_dims(C, D)
    return C == D


def sublattice_equal(S: Sublattice, T: Sublattice) -> bool:
    _check_dims(S, T)
    return S == T


def integer_kernel(A: IntMatrix, ncols: Optional[int] = None) -> Sublattice:
    """The saturated sublattice ``{x in Z^n : A x = 0}``."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if m == 0:
        return Sublattice.full(n)
    cols = [list(c) for c in columns_of(A)]
    track = [list(c) for c in identity(n)]
    r = _column_echelon(cols, m, track)
    return Sublattice(n, tuple(tuple(c) for c in track[r:]))


def saturation(S: Sublattice) -> Sublattice:
    """Smallest saturated sublattice containing ``S``: span_Q(S) cut with Z^n."""
    n = S.dim
    # integer annihilator of S, then its integer kernel
    annihilator = integer_kernel(tuple(S.columns), ncols=n)
    return integer_kernel(tuple(annihilator.columns), ncols=n)


def is_saturated(S: Sublattice) -> bool:
    return saturation(S) == S


# ---------------------------------------------------------------------------
# rational helpers (Gram forms, subspace bases)


def as_fraction(x) -> Fraction:
    """Parse an int or a ``"p/q"`` string exactly; floats are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(ch in s for ch in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot read {x!r} as a rational")


def rref(A) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        i = next((i for i in range(r, m) if M[i][c] != 0), None)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for k in range(m):
            if k != r and M[k][c] != 0:
                f = M[k][c]
                M[k] = [x - f * y for x, y in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return M, pivots


def rank(A) -> int:
    return len(rref(A)[1]) if A else 0


def column_space(A) -> tuple[tuple[Fraction, ...], ...]:
    """Canonical rational basis (the nonzero rows of rref(A^T)) of the column space."""
    if not A or not A[0]:
        return ()
    R, piv = rref(transpose(A))
    return tuple(tuple(R[i]) for i in range(len(piv)))


def nullspace(A, ncols: Optional[int] = None) -> tuple[tuple[Fraction, ...], ...]:
    """Rational basis of ``{x : A x = 0}``, one vector per free column."""
    n = len(A[0]) if A else (ncols or 0)
    if not A:
        return tuple(tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n))
    R, piv = rref(A)
    basis = []
    for f in (c for c in range(n) if c not in piv):
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        basis.append(tuple(v))
    return tuple(basis)


def inverse(A) -> Optional[tuple[tuple[Fraction, ...], ...]]:
    """Rational inverse of a square matrix, or ``None`` if singular."""
    n = len(A)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in R)


def is_positive_definite(G) -> bool:
    """Symmetric and all pivots of the LDL^T elimination positive."""
    n = len(G)
    if any(len(row) != n for row in G):
        return False
    M = [[Fraction(x) for x in row] for row in G]
    if any(M[i][j] != M[j][i] for i in range(n) for j in range(n)):
        return False
    for k in range(n):
        if M[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] -= f * M[k][j]
    return True
