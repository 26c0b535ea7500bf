"""MDS block-code erasure decoding (comparison baseline).

The parity-check matrix is Vandermonde on distinct nonzero points,
H[i][j] = a_j^i, so every (N-K)-column submatrix is itself Vandermonde
and invertible: the code is MDS and a block decodes exactly when at most
N-K of its symbols are erased.  Blocks are consecutive, non-interleaved
N-symbol groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import errors
from ._kernels import _splitmix_stream
from .gf import FieldSpec
from .linalg import FieldMatrix


@dataclass
class BlockCode:
    spec: FieldSpec
    N: int
    K: int
    parity: FieldMatrix  # (N-K) x N

    @property
    def rate(self):
        return self.K / self.N


@dataclass
class BlockResult:
    recovered: bool  # False = BLOCK_LOST, symbols pass through unrecovered
    values: np.ndarray
    erasures: int


def rs_new(N: int, K: int, spec: FieldSpec, *, self_check_limit: int = 8) -> BlockCode:
    """Vandermonde-based [N, K] MDS code over the given field."""
    if not (0 < K < N):
        raise errors.BadParams("need 0 < K < N")
    if N > spec.q - 1:
        raise errors.BadParams(f"N={N} exceeds q-1={spec.q - 1} evaluation points")
    points = [spec.antilog(j) if spec.p == 2 else spec.pow(spec.p, j) for j in range(N)]
    r = N - K
    arr = np.zeros((r, N), dtype=np.uint32)
    for j, a in enumerate(points):
        v = 1
        for i in range(r):
            arr[i, j] = v
            v = spec.mul(v, a)
    parity = FieldMatrix(spec, arr)
    if N <= self_check_limit:
        for cols in itertools.combinations(range(N), r):
            if int(parity.minor_det(list(range(r)), list(cols))) == 0:
                raise AssertionError("Vandermonde parity lost the MDS property")
    return BlockCode(spec, N, K, parity)


def rs_encode_block(code: BlockCode, info) -> np.ndarray:
    """Systematic-ish encoding: info symbols in the first K positions,
    parity solved from the last N-K columns."""
    info = np.asarray(info, dtype=np.uint32)
    if info.shape != (code.K,):
        raise errors.DimMismatch("need K information symbols")
    spec = code.spec
    r = code.N - code.K
    rhs = np.zeros(r, dtype=np.uint32)
    for j in range(code.K):
        v = int(info[j])
        if v:
            for i in range(r):
                c = int(code.parity.arr[i, j])
                if c:
                    rhs[i] = spec.sub(int(rhs[i]), spec.mul(c, v))
    tailcols = list(range(code.K, code.N))
    tail = code.parity.submatrix(list(range(r)), tailcols).inverse().matvec(rhs)
    return np.concatenate([info, tail]).astype(np.uint32)


def rs_random_block(code: BlockCode, seed: int) -> np.ndarray:
    words = _splitmix_stream(seed, code.K)
    info = (np.asarray(words) % np.uint64(code.spec.q)).astype(np.uint32)
    return rs_encode_block(code, info)


def rs_erasure_decode(code: BlockCode, values, known) -> BlockResult:
    """Decode one N-symbol block; recovers iff erasures <= N-K."""
    values = np.asarray(values, dtype=np.uint32).copy()
    known = np.asarray(known, dtype=bool)
    if values.shape != (code.N,) or known.shape != (code.N,):
        raise errors.DimMismatch("block must have exactly N symbols")
    erased = [int(i) for i in np.nonzero(~known)[0]]
    if not erased:
        return BlockResult(True, values, 0)
    if len(erased) > code.N - code.K:
        return BlockResult(False, values, len(erased))
    spec = code.spec
    values[~known] = 0
    r = code.N - code.K
    rhs = np.zeros(r, dtype=np.uint32)
    for j in range(code.N):
        if known[j] and values[j]:
            v = int(values[j])
            for i in range(r):
                c = int(code.parity.arr[i, j])
                if c:
                    rhs[i] = spec.sub(int(rhs[i]), spec.mul(c, v))
    rep = code.parity.submatrix(list(range(r)), erased).solve(rhs)
    if not rep.solvable or not rep.unique:
        raise errors.Singular("MDS block system unexpectedly singular")
    for idx, pos in enumerate(erased):
        values[pos] = rep.solution[idx]
    return BlockResult(True, values, len(erased))


def rs_check_block(code: BlockCode, values) -> bool:
    return not code.parity.matvec(np.asarray(values, dtype=np.uint32)).any()


def rs_decode_stream(code: BlockCode, values, known):
    """Blockwise decode of a whole stream; returns (values, recovered
    erasure count, occurred erasure count, lost block count)."""
    values = np.asarray(values, dtype=np.uint32).copy()
    known = np.asarray(known, dtype=bool)
    if values.size % code.N:
        raise errors.DimMismatch("stream length must be a multiple of N")
    occurred = int((~known).sum())
    recovered = 0
    lost = 0
    for b in range(values.size // code.N):
        sl = slice(b * code.N, (b + 1) * code.N)
        res = rs_erasure_decode(code, values[sl], known[sl])
        if res.recovered:
            recovered += res.erasures
            values[sl] = res.values
        else:
            lost += 1
    return values, recovered, occurred, lost
