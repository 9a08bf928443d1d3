"""Exact linear algebra over the rationals.

Rank, kernel, and solve are fraction-free Bareiss eliminations with
first-nonzero partial pivoting, so identical inputs take identical pivot
paths.  Entries are cleared to integers row by row (row scaling changes
neither rank nor kernel) and manipulated as gmpy2 integers when gmpy2 is
available; results come back as fractions.Fraction.

rank_mod_prime is the one deliberately inexact-looking routine here: it
computes the rank of the reduction mod a fixed word-size prime, which is a
certified lower bound for the rational rank.  Callers combine it with an
a-priori upper bound to certify exact dimensions cheaply; nothing in this
module ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

# Mersenne prime 2^31 - 1: products of two residues stay under 2^62, so the
# modular elimination fits in int64 without overflow.
WORD_PRIME = 2147483647

Scalar = Fraction | int
RowSeq = Sequence[Sequence[Scalar]]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class MatrixQ:
    """Immutable dense matrix with Fraction entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("rows have mismatched lengths")

    @classmethod
    def from_rows(cls, rows: RowSeq) -> "MatrixQ":
        return cls(tuple(tuple(_as_fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def transpose(self) -> "MatrixQ":
        return MatrixQ(tuple(zip(*self.entries))) if self.entries else MatrixQ(())

    def matmul(self, other: "MatrixQ") -> "MatrixQ":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        cols = other.transpose().entries
        return MatrixQ(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def scaled(self, c: Scalar) -> "MatrixQ":
        c = _as_fraction(c)
        return MatrixQ(tuple(tuple(c * x for x in row) for row in self.entries))

    def to_json(self) -> list[list[str]]:
        """Entries as exact 'p/q' strings (integers print without '/q')."""
        return [[fraction_str(x) for x in row] for row in self.entries]


def fraction_str(x: Fraction) -> str:
    x = _as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class SubspaceBasis:
    """Ordered list of linearly independent coordinate vectors."""

    ambient_dim: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise ValueError("vector length does not match ambient dimension")

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @classmethod
    def from_spanning(cls, vectors: RowSeq, ambient_dim: int) -> "SubspaceBasis":
        """Reduce a spanning set to its reduced-echelon basis.

        The result depends only on the span, so it is a canonical
        representative: unit pivots, pivot columns cleared, rows ordered by
        pivot column.
        """
        rows = [[_as_fraction(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        reduced = _rref(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced))

    def verify(self) -> None:
        assert span_dim(self.vectors) == self.dimension, "basis vectors are dependent"

    def contains(self, vector: Sequence[Scalar]) -> bool:
        if len(vector) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        if not self.vectors:
            return all(_as_fraction(x) == 0 for x in vector)
        stacked = list(self.vectors) + [tuple(_as_fraction(x) for x in vector)]
        return span_dim(stacked) == self.dimension

    def same_span(self, other: "SubspaceBasis") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        if self.dimension != other.dimension:
            return False
        if self.dimension == 0:
            return True
        return span_dim(list(self.vectors) + list(other.vectors)) == self.dimension


def _integer_rows(rows: RowSeq) -> list[list]:
    """Scale each row to coprime integers (mpz); preserves rank and kernel."""
    out = []
    for row in rows:
        fracs = [_as_fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        ints = [int(f * mult) for f in fracs]
        content = 0
        for v in ints:
            content = gcd(content, v)
            if content == 1:
                break
        if content > 1:
            ints = [v // content for v in ints]
        out.append([mpz(v) for v in ints])
    return out


def _triangularize(rows: list[list], ncols: int) -> list[tuple[int, list]]:
    """Fraction-free forward elimination (Bareiss), destroying `rows`.

    Returns pivot records (col, tail) in pivot order, where tail[k] is the
    surviving entry of the pivot row in column col + k.  Active rows are kept
    trimmed to the columns not yet processed; the Bareiss divisions are exact,
    so every intermediate entry is an integer (a minor of the input).
    """
    active = [row for row in rows if any(row)]
    pivots: list[tuple[int, list]] = []
    prev = mpz(1)
    for c in range(ncols):
        if not active:
            break
        pivot_tail = None
        for i, tail in enumerate(active):
            if tail[0]:
                pivot_tail = active.pop(i)
                break
        if pivot_tail is None:
            # Free column: every active row already has a zero here.
            active = [tail[1:] for tail in active]
            continue
        pv = pivot_tail[0]
        nxt = []
        for tail in active:
            f = tail[0]
            if f:
                new = [(pv * a - f * b) // prev for a, b in zip(tail[1:], pivot_tail[1:])]
            else:
                new = [(pv * a) // prev for a in tail[1:]]
            if any(new):
                nxt.append(new)
        active = nxt
        pivots.append((c, pivot_tail))
        prev = pv
    return pivots


def _entry_rows(m) -> RowSeq:
    if isinstance(m, MatrixQ):
        return m.entries
    return m


def rank(m) -> int:
    """Exact rank of a rational matrix."""
    rows = _entry_rows(m)
    if not rows:
        return 0
    ncols = len(rows[0])
    if ncols == 0:
        return 0
    return len(_triangularize(_integer_rows(rows), ncols))


def _kernel_vectors(pivots: list[tuple[int, list]], ncols: int) -> list[tuple[Fraction, ...]]:
    pivot_cols = [c for c, _ in pivots]
    free_cols = sorted(set(range(ncols)) - set(pivot_cols))
    zero = Fraction(0)
    out = []
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = Fraction(1)
        for c, tail in reversed(pivots):
            if c > fc:
                continue
            s = Fraction(0)
            for k in range(1, len(tail)):
                coeff = tail[k]
                if coeff and v[c + k]:
                    s += int(coeff) * v[c + k]
            v[c] = -s / int(tail[0])
        out.append(tuple(v))
    return out


def kernel_basis(m) -> SubspaceBasis:
    """Reduced-echelon basis of the right kernel.

    One vector per free column in ascending order, each carrying a unit in
    its own free position and zeros in the other free positions.
    """
    rows = _entry_rows(m)
    ncols = len(rows[0]) if rows else 0
    if ncols == 0:
        return SubspaceBasis(0, ())
    pivots = _triangularize(_integer_rows(rows), ncols)
    vectors = _kernel_vectors(pivots, ncols)
    assert len(vectors) == ncols - len(pivots), "rank-nullity violated"
    return SubspaceBasis(ncols, tuple(vectors))


def span_dim(vectors: Iterable[Sequence[Scalar]]) -> int:
    """Dimension of the span of coordinate vectors (0 for an empty family)."""
    vecs = list(vectors)
    if not vecs:
        return 0
    width = {len(v) for v in vecs}
    if len(width) > 1:
        raise ValueError("vectors have mismatched lengths")
    return rank(vecs)


def _rref(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Reduced row echelon form over Fraction, zero rows dropped."""
    pivots = _triangularize(_integer_rows(rows), ncols)
    reduced: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for c, tail in reversed(pivots):
        pv = int(tail[0])
        row = [Fraction(0)] * ncols
        row[c] = Fraction(1)
        for k in range(1, len(tail)):
            if tail[k]:
                row[c + k] = Fraction(int(tail[k]), pv)
        for pc, prow in zip(pivot_cols, reduced):
            f = row[pc]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
        reduced.insert(0, row)
        pivot_cols.insert(0, c)
    return reduced


def block_solve(a, b) -> MatrixQ:
    """Return -A^{-1} B for invertible A, by Gauss-Jordan on [A | B]."""
    a_rows = _entry_rows(a)
    b_rows = _entry_rows(b)
    n = len(a_rows)
    if any(len(r) != n for r in a_rows):
        raise ValueError("block_solve needs a square left block")
    if len(b_rows) != n:
        raise ValueError("right block has wrong row count")
    width = len(b_rows[0]) if n else 0
    aug = [
        [_as_fraction(x) for x in ar] + [_as_fraction(x) for x in br]
        for ar, br in zip(a_rows, b_rows)
    ]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return MatrixQ.from_rows([[-x for x in row[n:]] for row in aug])


def matrix_inverse(a) -> MatrixQ:
    """Exact inverse of a square rational matrix."""
    a_rows = _entry_rows(a)
    n = len(a_rows)
    neg_id = [[Fraction(-1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return block_solve(a_rows, neg_id)


def determinant(a) -> Fraction:
    """Exact determinant via Bareiss (the last pivot is the determinant)."""
    rows = [list(map(_as_fraction, r)) for r in _entry_rows(a)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        mult = lcm(*(f.denominator for f in row))
        scale *= mult
        int_rows.append([mpz(int(f * mult)) for f in row])
    sign = 1
    prev = mpz(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if int_rows[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            int_rows[c], int_rows[piv] = int_rows[piv], int_rows[c]
            sign = -sign
        pv = int_rows[c][c]
        for i in range(c + 1, n):
            f = int_rows[i][c]
            int_rows[i] = [(pv * a - f * b) // prev for a, b in zip(int_rows[i], int_rows[c])]
        prev = pv
    return Fraction(sign * int(prev), 1) / scale


def rank_mod_prime(rows: Sequence[Sequence[int]], prime: int = WORD_PRIME) -> int:
    """Rank of an integer matrix reduced mod `prime`.

    Always a lower bound for the rational rank (specialization can only drop
    rank).  Entries must be integers; clear denominators first.  Integer-only
    numpy arithmetic, word-size residues.
    """
    import numpy as np

    if not rows or not len(rows[0]):
        return 0
    a = np.array([[int(x) % prime for x in row] for row in rows], dtype=np.int64)
    nrows, ncols = a.shape
    if nrows < ncols:
        a = a.T
        nrows, ncols = ncols, nrows
    r = 0
    for c in range(ncols):
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, prime)
        a[r, c:] = (a[r, c:] * inv) % prime
        if r + 1 < nrows:
            factors = a[r + 1 :, c]
            a[r + 1 :, c:] = (a[r + 1 :, c:] - np.outer(factors, a[r, c:])) % prime
        r += 1
        if r == nrows:
            break
    return r
