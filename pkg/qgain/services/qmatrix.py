"""
Dense quaternion matrices and their ranks.

`row_left_rank` eliminates with left row operations only, which is the rank
used for gain graph adjacency matrices. `column_right_rank` eliminates with
right column operations and is implemented independently. The complex
adjoint gives a third, commutative oracle: its rank is twice the row left
rank.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..config import Config
from .quaternion import ONE, ZERO, Quaternion, format_token

ComplexRational = Tuple[Fraction, Fraction]


class QMatrix:
    """Immutable rows x cols matrix of exact quaternions (row-major)."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Quaternion]):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"Expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Quaternion]]) -> "QMatrix":
        rows = [list(row) for row in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise ValueError("All rows must have the same length")
        return cls(len(rows), cols, (q for row in rows for q in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, (ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Quaternion]) -> "QMatrix":
        n = len(values)
        return cls(n, n, (values[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Quaternion:
        i, j = index
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> List[Quaternion]:
        return list(self._entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List[Quaternion]]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
        entries = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for t in range(self.cols):
                    a = self[i, t]
                    if a:
                        b = other[t, j]
                        if b:
                            acc = acc + a * b
                entries.append(acc)
        return QMatrix(self.rows, other.cols, entries)

    def conj_transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       (self[i, j].conj() for j in range(self.cols) for i in range(self.rows)))

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.conj_transpose()

    def scale_row(self, i: int, q: Quaternion) -> "QMatrix":
        """Left-multiply row i by q."""
        rows = self.to_rows()
        rows[i] = [q * a for a in rows[i]]
        return QMatrix.from_rows(rows) if rows else self

    def swap_rows(self, i: int, j: int) -> "QMatrix":
        rows = self.to_rows()
        rows[i], rows[j] = rows[j], rows[i]
        return QMatrix.from_rows(rows) if rows else self

    def to_float(self) -> np.ndarray:
        """Array of shape (rows, cols, 4)."""
        out = np.zeros((self.rows, self.cols, 4), dtype=float)
        for i in range(self.rows):
            for j in range(self.cols):
                q = self[i, j]
                if q:
                    out[i, j] = q.to_float()
        return out

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


class ComplexMatrix:
    """Matrix of exact complex rationals, each entry a (real, imaginary) pair."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[ComplexRational]):
        entries = tuple((Fraction(re), Fraction(im)) for re, im in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"Expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ComplexRational]]) -> "ComplexMatrix":
        rows = [list(row) for row in rows]
        cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, (z for row in rows for z in row))

    def __getitem__(self, index: Tuple[int, int]) -> ComplexRational:
        i, j = index
        return self._entries[i * self.cols + j]

    def to_rows(self) -> List[List[ComplexRational]]:
        return [list(self._entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if self.cols != other.rows:
            raise ValueError("Shape mismatch")
        entries = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = (Fraction(0), Fraction(0))
                for t in range(self.cols):
                    acc = _cadd(acc, _cmul(self[i, t], other[t, j]))
                entries.append(acc)
        return ComplexMatrix(self.rows, other.cols, entries)

    def __repr__(self) -> str:
        return f"ComplexMatrix({self.rows}x{self.cols})"


def _cadd(a: ComplexRational, b: ComplexRational) -> ComplexRational:
    return (a[0] + b[0], a[1] + b[1])


def _cmul(a: ComplexRational, b: ComplexRational) -> ComplexRational:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cinv(a: ComplexRational) -> ComplexRational:
    n = a[0] * a[0] + a[1] * a[1]
    return (a[0] / n, -a[1] / n)


def _add_scaled_left(target: List[Quaternion], q: Quaternion, source: List[Quaternion], start: int) -> None:
    """target += q * source, in place, from column `start` on."""
    for j in range(start, len(target)):
        s = source[j]
        if s:
            target[j] = target[j] + q * s


def row_left_rank(A: QMatrix) -> int:
    """
    Maximum number of left linearly independent rows of A.

    Gaussian elimination with left row operations row_i <- row_i + q * row_p,
    q = -a_ip * a_pp^-1, pivoting on the first nonzero entry of each column.

    Args:
        A: exact quaternion matrix

    Returns:
        The row left rank
    """
    rows = A.to_rows()
    m, n = A.rows, A.cols
    rank = 0
    for col in range(n):
        if rank == m:
            break
        pivot = next((r for r in range(rank, m) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_row = rows[rank]
        pivot_inv = pivot_row[col].inverse()
        for r in range(rank + 1, m):
            a = rows[r][col]
            if not a:
                continue
            q = -(a * pivot_inv)
            _add_scaled_left(rows[r], q, pivot_row, col)
        rank += 1
    return rank


def column_right_rank(A: QMatrix) -> int:
    """
    Maximum number of right linearly independent columns of A.

    Elimination with right column operations col_j <- col_j + col_p * q,
    q = -a_pp^-1 * a_pj. Independent of `row_left_rank`; the two always agree.
    """
    m, n = A.rows, A.cols
    cols = [[A[i, j] for i in range(m)] for j in range(n)]
    rank = 0
    for row in range(m):
        if rank == n:
            break
        pivot = next((c for c in range(rank, n) if cols[c][row]), None)
        if pivot is None:
            continue
        cols[rank], cols[pivot] = cols[pivot], cols[rank]
        pivot_col = cols[rank]
        pivot_inv = pivot_col[row].inverse()
        for c in range(rank + 1, n):
            a = cols[c][row]
            if not a:
                continue
            q = -(pivot_inv * a)
            target = cols[c]
            for i in range(row, m):
                s = pivot_col[i]
                if s:
                    target[i] = target[i] + s * q
        rank += 1
    return rank


def complex_adjoint(A: QMatrix) -> ComplexMatrix:
    """
    2m x 2n complex representation [[Z, W], [-conj(W), conj(Z)]].

    Each entry is split as q = z + w*j with z = x0 + x1*i and w = x2 + x3*i.
    The map is multiplicative: adjoint(A @ B) = adjoint(A) @ adjoint(B).
    """
    m, n = A.rows, A.cols
    out = [[(Fraction(0), Fraction(0))] * (2 * n) for _ in range(2 * m)]
    for i in range(m):
        for j in range(n):
            x0, x1, x2, x3 = A[i, j].components
            out[i][j] = (x0, x1)
            out[i][n + j] = (x2, x3)
            out[m + i][j] = (-x2, x3)
            out[m + i][n + j] = (x0, -x1)
    return ComplexMatrix.from_rows(out) if m else ComplexMatrix(0, 2 * n, [])


def complex_rank(M: ComplexMatrix) -> int:
    """Rank over the exact complex rationals."""
    rows = M.to_rows()
    m, n = M.rows, M.cols
    rank = 0
    for col in range(n):
        if rank == m:
            break
        pivot = next((r for r in range(rank, m) if rows[r][col] != (0, 0)), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_row = rows[rank]
        pivot_inv = _cinv(pivot_row[col])
        for r in range(rank + 1, m):
            a = rows[r][col]
            if a == (0, 0):
                continue
            factor = _cmul(a, pivot_inv)
            factor = (-factor[0], -factor[1])
            target = rows[r]
            for j in range(col, n):
                s = pivot_row[j]
                if s != (0, 0):
                    target[j] = _cadd(target[j], _cmul(factor, s))
        rank += 1
    return rank


def adjoint_rank(A: QMatrix) -> int:
    """Row left rank recovered from the complex adjoint (half its complex rank)."""
    return complex_rank(complex_adjoint(A)) // 2


# Float mode

def qmul_float(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Quaternion product over the last axis of broadcastable float arrays."""
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def qinv_float(q: np.ndarray) -> np.ndarray:
    return q * np.array([1.0, -1.0, -1.0, -1.0]) / np.dot(q, q)


def row_left_rank_float(A: Union[QMatrix, np.ndarray], pivot_tol: float = None) -> int:
    """
    Row left rank in floating point with largest-modulus pivoting.

    Args:
        A: QMatrix or float array of shape (rows, cols, 4)
        pivot_tol: relative zero threshold; entries with modulus at most
            pivot_tol times the largest initial modulus count as zero

    Returns:
        The numerical row left rank
    """
    pivot_tol = Config.FLOAT_PIVOT_TOL if pivot_tol is None else pivot_tol
    if pivot_tol <= 0:
        raise ValueError(f"pivot_tol must be positive, got {pivot_tol}")
    a = A.to_float() if isinstance(A, QMatrix) else np.array(A, dtype=float, copy=True)
    if a.ndim != 3 or a.shape[-1] != 4:
        raise ValueError(f"Expected an array of shape (rows, cols, 4), got {a.shape}")
    m, n = a.shape[:2]
    if a.size == 0:
        return 0
    moduli = np.linalg.norm(a, axis=-1)
    scale = moduli.max()
    if scale == 0:
        return 0
    threshold = pivot_tol * scale
    rank = 0
    for col in range(n):
        if rank == m:
            break
        column_moduli = np.linalg.norm(a[rank:, col], axis=-1)
        best = int(np.argmax(column_moduli))
        if column_moduli[best] <= threshold:
            continue
        pivot = rank + best
        a[[rank, pivot]] = a[[pivot, rank]]
        pivot_inv = qinv_float(a[rank, col])
        below = a[rank + 1:, col]
        factors = -qmul_float(below, pivot_inv)
        # Broadcast each row's left factor against the pivot row.
        a[rank + 1:] += qmul_float(factors[:, None, :], a[rank][None, :, :])
        a[rank + 1:, col] = 0.0
        rank += 1
    logging.debug(f"Float elimination finished: rank {rank} of {m}x{n}, threshold {threshold:.3e}")
    return rank


def dump(A: QMatrix) -> str:
    """One row per line, entries as quaternion tokens separated by spaces."""
    return "\n".join(" ".join(format_token(q) for q in A.row(i)) for i in range(A.rows))
