"""Exact arithmetic and linear algebra over the prime field GF(p).

Scalars are plain Python ints in [0, p); the modulus lives in a shared
GF context object that every compound value carries.  Mixing values
from different contexts raises immediately rather than producing
garbage residues.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class GF:
    """Prime-field context.  All operations reduce into [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int) -> None:
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        return range(self.p)


def _check_same_field(a: "GF", b: "GF") -> None:
    if a != b:
        raise ValueError(f"mixed field contexts: {a} vs {b}")


class DenseMatrix:
    """Immutable row-major matrix of GF(p) residues."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: GF, rows: int, cols: int, entries: Iterable[int]) -> None:
        ent = tuple(v % field.p for v in entries)
        if len(ent) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = ent

    @classmethod
    def from_rows(cls, field: GF, rows: Sequence[Sequence[int]]) -> "DenseMatrix":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(field, r, c, [v for row in rows for v in row])

    @classmethod
    def identity(cls, field: GF, n: int) -> "DenseMatrix":
        return cls(field, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            self.field,
            self.cols,
            self.rows,
            [self.get(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        _check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        p = self.field.p
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.get(k, j) for k in range(self.cols)) % p)
        return DenseMatrix(self.field, self.rows, other.cols, out)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return self.mul(other)

    def add(self, other: "DenseMatrix") -> "DenseMatrix":
        _check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        p = self.field.p
        return DenseMatrix(
            self.field, self.rows, self.cols,
            [(a + b) % p for a, b in zip(self.entries, other.entries)],
        )

    def sub(self, other: "DenseMatrix") -> "DenseMatrix":
        _check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        p = self.field.p
        return DenseMatrix(
            self.field, self.rows, self.cols,
            [(a - b) % p for a, b in zip(self.entries, other.entries)],
        )

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum(self.get(i, i) for i in range(self.rows)) % self.field.p

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DenseMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"DenseMatrix({self.field}, {self.to_rows()})"


def rref(m: DenseMatrix) -> tuple[int, DenseMatrix, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (rank, reduced matrix, pivot columns).  The reduction is the
    unique RREF over GF(p); the row space is preserved.
    """
    field = m.field
    p = field.p
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = field.inv(a[r][c])
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    reduced = DenseMatrix.from_rows(field, a) if m.rows else DenseMatrix(field, 0, m.cols, [])
    return r, reduced, tuple(pivots)


def det(m: DenseMatrix) -> int:
    """Determinant by Gaussian elimination with row swaps."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    field = m.field
    p = field.p
    a = m.to_rows()
    n = m.rows
    result = 1
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            result = (-result) % p
        result = (result * a[c][c]) % p
        inv = field.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = (a[i][c] * inv) % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return result


def inverse(m: DenseMatrix) -> DenseMatrix:
    """Inverse via Gauss-Jordan on the augmented matrix."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = DenseMatrix(
        m.field, n, 2 * n,
        [m.get(i, j) if j < n else (1 if j - n == i else 0)
         for i in range(n) for j in range(2 * n)],
    )
    rank, red, piv = rref(aug)
    if piv[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return DenseMatrix(m.field, n, n, [red.get(i, n + j) for i in range(n) for j in range(n)])


class SparseMatrix:
    """Sparse matrix stored as (row, col) -> nonzero residue triples."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: GF, rows: int, cols: int,
                 triples: Iterable[tuple[int, int, int]] = ()) -> None:
        self.field = field
        self.rows = rows
        self.cols = cols
        data: dict[tuple[int, int], int] = {}
        for r, c, v in triples:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"index ({r}, {c}) out of bounds")
            v %= field.p
            if v == 0:
                raise ValueError("stored values must be nonzero")
            if (r, c) in data:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            data[(r, c)] = v
        self.data = data

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for (r, c), v in self.data.items())

    def nnz(self) -> int:
        return len(self.data)

    def densify(self) -> DenseMatrix:
        ent = [0] * (self.rows * self.cols)
        for (r, c), v in self.data.items():
            ent[r * self.cols + c] = v
        return DenseMatrix(self.field, self.rows, self.cols, ent)


def sparse_rank(m: SparseMatrix) -> int:
    """Rank by sparse elimination with Markowitz pivot selection.

    At every step the pivot minimizes (nnz(row)-1)*(nnz(col)-1) to limit
    fill-in; ties break on (row, col) so the elimination order is
    deterministic.  Agrees with rref on the densified matrix.
    """
    field = m.field
    p = field.p
    rows: dict[int, dict[int, int]] = {}
    col_members: dict[int, set[int]] = {}
    for (r, c), v in m.data.items():
        rows.setdefault(r, {})[c] = v
        col_members.setdefault(c, set()).add(r)

    rank = 0
    while rows:
        best = None
        best_cost = None
        for r, row in rows.items():
            rw = len(row) - 1
            for c in row:
                cost = rw * (len(col_members[c]) - 1)
                key = (cost, r, c)
                if best_cost is None or key < best_cost:
                    best_cost = key
                    best = (r, c)
        pr, pc = best
        pivot_row = rows.pop(pr)
        inv = field.inv(pivot_row[pc])
        pivot_row = {c: (v * inv) % p for c, v in pivot_row.items()}
        for c in pivot_row:
            col_members[c].discard(pr)
        for r in list(col_members[pc]):
            row = rows[r]
            f = row[pc]
            for c, v in pivot_row.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    if c not in row:
                        col_members[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    col_members[c].discard(r)
            if not row:
                del rows[r]
        rank += 1
    return rank
