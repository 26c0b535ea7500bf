"""Dense matrices over a FieldSpec: rank, determinants, minors, solving.

The decoding path and every minor criterion run through these.  Indices
are 0-based throughout; printed 1-based row/column sets from the
literature must be converted once at the call boundary (`one_based`).

Characteristic 2 dispatches to the table kernels; odd characteristic has
a slow generic path sufficient for smoke tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import errors
from ._kernels import _det, _gauss_solve, _rank
from .gf import FieldElement, FieldSpec


def one_based(indices):
    """Convert a 1-based index collection (as printed in the coding
    literature) to the 0-based form used everywhere in this package."""
    out = [int(i) - 1 for i in indices]
    if any(i < 0 for i in out):
        raise errors.BadIndex("1-based indices start at 1")
    return out


@dataclass
class SolveReport:
    solvable: bool
    unique: bool
    solution: np.ndarray | None
    kernel_rank: int
    unique_mask: np.ndarray | None = None  # per-coordinate uniqueness


class FieldMatrix:
    """Immutable dense matrix of field elements (stored as uint32)."""

    def __init__(self, spec: FieldSpec, arr):
        arr = np.ascontiguousarray(np.asarray(arr, dtype=np.uint32))
        if arr.ndim != 2:
            raise errors.DimMismatch("matrix must be 2-D")
        if arr.size and int(arr.max()) >= spec.q:
            raise errors.BadParams("entry outside the field")
        self.spec = spec
        self.arr = arr
        self.arr.flags.writeable = False

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, spec, rows, cols):
        return cls(spec, np.zeros((rows, cols), dtype=np.uint32))

    @classmethod
    def identity(cls, spec, n):
        return cls(spec, np.eye(n, dtype=np.uint32))

    @classmethod
    def from_rows(cls, spec, rows):
        return cls(spec, np.array(rows, dtype=np.uint32))

    # -- basics -------------------------------------------------------------

    @property
    def rows(self):
        return self.arr.shape[0]

    @property
    def cols(self):
        return self.arr.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.spec == other.spec
            and self.arr.shape == other.arr.shape
            and bool(np.array_equal(self.arr, other.arr))
        )

    def __getitem__(self, idx):
        v = self.arr[idx]
        if np.isscalar(v) or v.ndim == 0:
            return FieldElement(self.spec, int(v))
        return FieldMatrix(self.spec, np.atleast_2d(v))

    def transpose(self):
        return FieldMatrix(self.spec, self.arr.T.copy())

    def submatrix(self, row_idx, col_idx):
        return FieldMatrix(self.spec, self.arr[np.ix_(row_idx, col_idx)])

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols} over GF({self.spec.q}))"

    # -- arithmetic -----------------------------------------------------------

    def matmul(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.spec != self.spec:
            raise errors.FieldMismatch("matmul across fields")
        if self.cols != other.rows:
            raise errors.DimMismatch("inner dimensions differ")
        s = self.spec
        if s.p != 2:
            return FieldMatrix(s, _matmul_generic(s, self.arr, other.arr))
        out = np.zeros((self.rows, other.cols), dtype=np.uint32)
        for k in range(self.cols):
            out ^= mul_outer(s, self.arr[:, k], other.arr[k, :])
        return FieldMatrix(s, out)

    def matvec(self, vec) -> np.ndarray:
        vec = np.asarray(vec, dtype=np.uint32)
        if vec.shape != (self.cols,):
            raise errors.DimMismatch("vector length mismatch")
        s = self.spec
        if s.p == 2:
            out = np.zeros(self.rows, dtype=np.uint32)
            for k in range(self.cols):
                if vec[k]:
                    out ^= mul_vec(s, self.arr[:, k], int(vec[k]))
            return out
        return _matmul_generic(s, self.arr, vec.reshape(-1, 1)).ravel()

    # -- rank / determinant / solving ----------------------------------------

    def rank(self) -> int:
        if self.arr.size == 0:
            return 0
        s = self.spec
        if s.p == 2:
            return int(_rank(self.arr, s.log_table, s.exp_table, s.order))
        return _rank_generic(s, self.arr)

    def det(self) -> FieldElement:
        if self.rows != self.cols:
            raise errors.DimMismatch("determinant of a non-square matrix")
        s = self.spec
        if self.rows == 0:
            return FieldElement(s, 1 % s.q)
        if s.p == 2:
            return FieldElement(s, int(_det(self.arr, s.log_table, s.exp_table, s.order)))
        return FieldElement(s, _det_generic(s, self.arr))

    def minor_det(self, row_idx, col_idx) -> FieldElement:
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        if len(row_idx) != len(col_idx):
            raise errors.BadIndex("minor needs equally many rows and columns")
        for seq, n in ((row_idx, self.rows), (col_idx, self.cols)):
            if any(not 0 <= i < n for i in seq):
                raise errors.BadIndex("index out of range")
            if any(b <= a for a, b in zip(seq, seq[1:])):
                raise errors.BadIndex("indices must be strictly increasing")
        return self.submatrix(row_idx, col_idx).det()

    def solve(self, b) -> SolveReport:
        b = np.asarray(b, dtype=np.uint32)
        if b.shape != (self.rows,):
            raise errors.DimMismatch("rhs length != row count")
        s = self.spec
        if s.p == 2:
            status, x, uniq, rank = _gauss_solve(
                self.arr, b, s.log_table, s.exp_table, s.order
            )
        else:
            status, x, uniq, rank = _solve_generic(s, self.arr, b)
        kernel_rank = self.cols - int(rank)
        if not status:
            return SolveReport(False, False, None, kernel_rank, None)
        return SolveReport(
            True, kernel_rank == 0, x, kernel_rank, uniq.astype(bool)
        )

    def kernel_basis(self) -> np.ndarray:
        """Rows form a basis of the right kernel."""
        s = self.spec
        R, piv = rref(s, self.arr)
        free = [c for c in range(self.cols) if c not in piv]
        basis = np.zeros((len(free), self.cols), dtype=np.uint32)
        for bi, fc in enumerate(free):
            basis[bi, fc] = 1
            for r, pc in enumerate(piv):
                basis[bi, pc] = s.neg(int(R[r, fc]))
        return basis

    def inverse(self) -> "FieldMatrix":
        if self.rows != self.cols:
            raise errors.DimMismatch("inverse of a non-square matrix")
        s = self.spec
        n = self.rows
        aug = np.concatenate([self.arr, np.eye(n, dtype=np.uint32)], axis=1)
        R, piv = rref(s, aug)
        if piv[:n] != list(range(n)):
            raise errors.Singular("matrix is singular")
        return FieldMatrix(s, R[:, n:])


# ---------------------------------------------------------------------------
# vectorised characteristic-2 helpers (log/exp gathers)
# ---------------------------------------------------------------------------


def mul_vec(spec, vec, scalar):
    """vec * scalar elementwise, char-2 tables."""
    if scalar == 0:
        return np.zeros_like(vec)
    out = np.zeros_like(vec)
    mask = vec != 0
    if mask.any():
        out[mask] = spec.exp_table[
            spec.log_table[vec[mask]].astype(np.int64) + spec.log_table[scalar]
        ]
    return out


def mul_elemwise(spec, a, b):
    out = np.zeros_like(a)
    mask = (a != 0) & (b != 0)
    if mask.any():
        out[mask] = spec.exp_table[
            spec.log_table[a[mask]].astype(np.int64)
            + spec.log_table[b[mask]].astype(np.int64)
        ]
    return out


def mul_outer(spec, col, row):
    out = np.zeros((col.shape[0], row.shape[0]), dtype=np.uint32)
    cm = col != 0
    rm = row != 0
    if cm.any() and rm.any():
        logs = spec.log_table[col[cm]].astype(np.int64)[:, None] + spec.log_table[
            row[rm]
        ].astype(np.int64)[None, :]
        out[np.ix_(cm, rm)] = spec.exp_table[logs]
    return out


def rref(spec, arr):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    M = arr.copy()
    M.flags.writeable = True
    rows, cols = M.shape
    piv = []
    r = 0
    for c in range(cols):
        sel = None
        for rr in range(r, rows):
            if M[rr, c]:
                sel = rr
                break
        if sel is None:
            continue
        if sel != r:
            M[[r, sel]] = M[[sel, r]]
        inv = spec.inv(int(M[r, c]))
        if spec.p == 2:
            M[r] = mul_vec(spec, M[r], inv)
            nz = np.nonzero(M[:, c])[0]
            for rr in nz:
                if rr != r:
                    M[rr] ^= mul_vec(spec, M[r], int(M[rr, c]))
        else:
            M[r] = np.array([spec.mul(int(v), inv) for v in M[r]], dtype=np.uint32)
            for rr in range(rows):
                f = int(M[rr, c])
                if rr != r and f:
                    M[rr] = np.array(
                        [
                            spec.sub(int(x), spec.mul(f, int(y)))
                            for x, y in zip(M[rr], M[r])
                        ],
                        dtype=np.uint32,
                    )
        piv.append(c)
        r += 1
        if r == rows:
            break
    return M, piv


# ---------------------------------------------------------------------------
# generic odd-characteristic fallbacks (small matrices only)
# ---------------------------------------------------------------------------


def _matmul_generic(spec, A, B):
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint32)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0
            for k in range(A.shape[1]):
                acc = spec.add(acc, spec.mul(int(A[i, k]), int(B[k, j])))
            out[i, j] = acc
    return out


def _outer_generic(spec, col, row):
    out = np.zeros((col.shape[0], row.shape[0]), dtype=np.uint32)
    for i, a in enumerate(col):
        for j, b in enumerate(row):
            out[i, j] = spec.mul(int(a), int(b))
    return out


def _rank_generic(spec, arr):
    _, piv = rref(spec, arr)
    return len(piv)


def _det_generic(spec, arr):
    M = [[int(v) for v in row] for row in arr]
    n = len(M)
    det = 1
    for c in range(n):
        sel = next((r for r in range(c, n) if M[r][c]), None)
        if sel is None:
            return 0
        if sel != c:
            M[c], M[sel] = M[sel], M[c]
            det = spec.neg(det)
        det = spec.mul(det, M[c][c])
        inv = spec.inv(M[c][c])
        for r in range(c + 1, n):
            if M[r][c]:
                f = spec.mul(M[r][c], inv)
                for j in range(c, n):
                    M[r][j] = spec.sub(M[r][j], spec.mul(f, M[c][j]))
    return det


def _solve_generic(spec, A, b):
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, piv = rref(spec, aug)
    C = A.shape[1]
    if C in piv:  # pivot in the rhs column: inconsistent
        piv = [p for p in piv if p < C]
        return 0, np.zeros(C, dtype=np.uint32), np.zeros(C, dtype=np.uint8), len(piv)
    x = np.zeros(C, dtype=np.uint32)
    uniq = np.zeros(C, dtype=np.uint8)
    free = [c for c in range(C) if c not in piv]
    for r, c in enumerate(piv):
        x[c] = R[r, C]
        uniq[c] = 1 if all(R[r, f] == 0 for f in free) else 0
    return 1, x, uniq, len(piv)
