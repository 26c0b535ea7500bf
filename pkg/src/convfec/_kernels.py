"""Hot numeric kernels, written once and optionally numba-compiled.

All kernels work on characteristic-2 fields represented by log/antilog
tables: ``log_t[x]`` for x in 1..q-1, ``exp_t`` of length 2(q-1) so a sum
of two logs never needs a modulo.  Addition is XOR.  Matrices are 2-D
``uint32`` arrays.

The same source runs under both backends (see `_backend`); numba only
changes the execution speed, never the results.
"""

import numpy as np

from ._backend import jit

GOLDEN64 = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _gf_mul(a, b, log_t, exp_t):
    if a == 0 or b == 0:
        return np.uint32(0)
    return exp_t[log_t[a] + log_t[b]]


def _gf_div(a, b, log_t, exp_t, order):
    # b != 0 assumed
    if a == 0:
        return np.uint32(0)
    return exp_t[log_t[a] + order - log_t[b]]


_gf_mul = jit(_gf_mul)
_gf_div = jit(_gf_div)


def _build_exp_table(modulus_int, m, exp_t):
    """Fill exp_t (length 2(q-1)) with powers of x mod the modulus.

    Returns the multiplicative order of x; the caller checks whether x
    generates the full group.
    """
    q = 1 << m
    top = 1 << m
    x = 1
    order = 0
    for i in range(q - 1):
        exp_t[i] = x
        x <<= 1
        if x & top:
            x ^= modulus_int
        order += 1
        if x == 1:
            break
    return order


_build_exp_table = jit(_build_exp_table)


def _gauss_solve(A, b, log_t, exp_t, order):
    """Solve A x = b over GF(2^m); A is (R, C) uint32, b is (R,).

    Returns (status, x, unique) where status is 0 if inconsistent and 1
    otherwise, x is one solution (free coordinates set to 0) and
    unique[j] = 1 iff coordinate j has the same value in every solution.
    Deterministic: first-nonzero pivoting, columns processed left to
    right.
    """
    R, C = A.shape
    M = np.zeros((R, C + 1), dtype=np.uint32)
    M[:, :C] = A
    M[:, C] = b
    piv_col = np.full(R, -1, dtype=np.int64)
    row = 0
    for col in range(C):
        sel = -1
        for r in range(row, R):
            if M[r, col] != 0:
                sel = r
                break
        if sel < 0:
            continue
        if sel != row:
            tmp = M[sel].copy()
            M[sel] = M[row]
            M[row] = tmp
        # normalise pivot row
        inv = exp_t[order - log_t[M[row, col]]]
        for j in range(col, C + 1):
            M[row, j] = _gf_mul(M[row, j], inv, log_t, exp_t)
        # eliminate below and above
        for r in range(R):
            if r != row and M[r, col] != 0:
                f = M[r, col]
                for j in range(col, C + 1):
                    M[r, j] ^= _gf_mul(f, M[row, j], log_t, exp_t)
        piv_col[row] = col
        row += 1
        if row == R:
            break
    rank = row
    # consistency: no row 0...0 | nonzero
    for r in range(rank, R):
        if M[r, C] != 0:
            return 0, np.zeros(C, dtype=np.uint32), np.zeros(C, dtype=np.uint8), rank
    x = np.zeros(C, dtype=np.uint32)
    unique = np.zeros(C, dtype=np.uint8)
    is_piv = np.zeros(C, dtype=np.uint8)
    for r in range(rank):
        is_piv[piv_col[r]] = 1
    for r in range(rank):
        c = piv_col[r]
        x[c] = M[r, C]
        uniq = True
        for j in range(C):
            if is_piv[j] == 0 and M[r, j] != 0:
                uniq = False
                break
        unique[c] = 1 if uniq else 0
    return 1, x, unique, rank


_gauss_solve = jit(_gauss_solve)


def _rank(A, log_t, exp_t, order):
    R, C = A.shape
    M = A.copy()
    row = 0
    for col in range(C):
        sel = -1
        for r in range(row, R):
            if M[r, col] != 0:
                sel = r
                break
        if sel < 0:
            continue
        if sel != row:
            tmp = M[sel].copy()
            M[sel] = M[row]
            M[row] = tmp
        pv = M[row, col]
        for r in range(row + 1, R):
            if M[r, col] != 0:
                f = _gf_div(M[r, col], pv, log_t, exp_t, order)
                for j in range(col, C):
                    M[r, j] ^= _gf_mul(f, M[row, j], log_t, exp_t)
        row += 1
        if row == R:
            break
    return row


_rank = jit(_rank)


def _det(A, log_t, exp_t, order):
    n = A.shape[0]
    M = A.copy()
    det = np.uint32(1)
    for col in range(n):
        sel = -1
        for r in range(col, n):
            if M[r, col] != 0:
                sel = r
                break
        if sel < 0:
            return np.uint32(0)
        if sel != col:
            tmp = M[sel].copy()
            M[sel] = M[col]
            M[col] = tmp
            # char 2: row swap does not change the determinant sign
        pv = M[col, col]
        det = _gf_mul(det, pv, log_t, exp_t)
        for r in range(col + 1, n):
            if M[r, col] != 0:
                f = _gf_div(M[r, col], pv, log_t, exp_t, order)
                for j in range(col, n):
                    M[r, j] ^= _gf_mul(f, M[col, j], log_t, exp_t)
    return det


_det = jit(_det)


def _admissible_minors_dfs(M, lo, hi, log_t, exp_t, order):
    """Check that every full-size column-selected minor within bounds is
    nonzero.

    Enumerates all strictly increasing column tuples c_1 < ... < c_R
    (0-based) with lo[t] <= c_t <= hi[t]; bounds must already be
    propagated so that any in-bounds prefix extends to a full tuple.
    Shares elimination work across the enumeration tree: a dependent
    prefix proves a zero admissible minor.

    Returns (ok, checked, witness); witness is a length-R array of column
    indices (all -1 when ok).
    """
    R, C = M.shape
    red = np.zeros((R, R), dtype=np.uint32)
    pivrow = np.zeros(R, dtype=np.int64)
    choice = np.full(R, -1, dtype=np.int64)
    witness = np.full(R, -1, dtype=np.int64)
    checked = 0
    d = 0
    nextc = lo[0]
    while True:
        if nextc > hi[d]:
            d -= 1
            if d < 0:
                return True, checked, witness
            nextc = choice[d] + 1
            continue
        c = nextc
        v = M[:, c].copy()
        for t in range(d):
            f = v[pivrow[t]]
            if f != 0:
                lf = log_t[f]
                for r in range(R):
                    if red[t, r] != 0:
                        v[r] ^= exp_t[lf + log_t[red[t, r]]]
        pr = -1
        for r in range(R):
            if v[r] != 0:
                pr = r
                break
        if pr < 0:
            # dependent prefix: greedy completion is a zero admissible minor
            for t in range(d):
                witness[t] = choice[t]
            witness[d] = c
            prev = c
            for t in range(d + 1, R):
                nxt = prev + 1
                if nxt < lo[t]:
                    nxt = lo[t]
                witness[t] = nxt
                prev = nxt
            checked += 1
            return False, checked, witness
        inv = exp_t[order - log_t[v[pr]]]
        linv = log_t[inv]
        for r in range(R):
            if v[r] != 0:
                v[r] = exp_t[linv + log_t[v[r]]]
        red[d] = v
        pivrow[d] = pr
        choice[d] = c
        if d == R - 1:
            checked += 1
            nextc = c + 1
        else:
            d += 1
            nextc = c + 1
            if nextc < lo[d]:
                nextc = lo[d]
    # unreachable


_admissible_minors_dfs = jit(_admissible_minors_dfs)


def _admissible_minors_sample(M, lo, hi, n_samples, seed, log_t, exp_t, order):
    """Monte-Carlo variant: test randomly sampled in-bounds column tuples.

    Sampling walks positions left to right choosing uniformly inside the
    feasible range at each step (not uniform over tuples, but covers the
    whole admissible family).  Returns (ok, checked, witness).
    """
    R, C = M.shape
    witness = np.full(R, -1, dtype=np.int64)
    cols = np.zeros(R, dtype=np.int64)
    sub = np.zeros((R, R), dtype=np.uint32)
    state = np.uint64(seed)
    checked = 0
    for _ in range(n_samples):
        prev = -1
        for t in range(R):
            a = prev + 1
            if a < lo[t]:
                a = lo[t]
            b = hi[t]
            state = (state + GOLDEN64)
            z = state
            z = (z ^ (z >> np.uint64(30))) * _MIX1
            z = (z ^ (z >> np.uint64(27))) * _MIX2
            z = z ^ (z >> np.uint64(31))
            c = a + np.int64(z % np.uint64(b - a + 1))
            cols[t] = c
            prev = c
        for t in range(R):
            sub[:, t] = M[:, cols[t]]
        checked += 1
        if _det(sub, log_t, exp_t, order) == 0:
            for t in range(R):
                witness[t] = cols[t]
            return False, checked, witness
    return True, checked, witness


_admissible_minors_sample = jit(_admissible_minors_sample)


def _proper_minors_dfs(T, block_r, block_c, log_t, exp_t, order):
    """Check every proper sub-matrix of a lower block-triangular matrix
    for a nonzero determinant.

    Properness of rows i_1<...<i_s / columns j_1<...<j_s (0-based here)
    means (j_t+1) <= ceil((i_t+1)/block_r) * block_c for all t; with
    block_r = block_c = 1 this is the plain triangular rule j_t <= i_t.
    Determinants are maintained incrementally through the bordered
    inverse, so each node costs O(s^2).

    Returns (ok, checked, wit_rows, wit_cols, wit_len).
    """
    RR, CC = T.shape
    smax = RR if RR < CC else CC
    inv_stack = np.zeros((smax + 1, smax, smax), dtype=np.uint32)
    rows = np.zeros(smax, dtype=np.int64)
    cols = np.zeros(smax, dtype=np.int64)
    wit_r = np.full(smax, -1, dtype=np.int64)
    wit_c = np.full(smax, -1, dtype=np.int64)
    u = np.zeros(smax, dtype=np.uint32)
    vv = np.zeros(smax, dtype=np.uint32)
    bu = np.zeros(smax, dtype=np.uint32)
    cv = np.zeros(smax, dtype=np.uint32)
    checked = 0
    d = 0
    ni = 0
    nj = 0
    while True:
        # advance (ni, nj) to the next valid pair at depth d
        placed = False
        while ni < RR:
            blk = (ni + block_r) // block_r  # ceil((i+1)/block_r), 0-based i
            bj = blk * block_c - 1
            if bj > CC - 1:
                bj = CC - 1
            if nj > bj:
                ni += 1
                nj = cols[d - 1] + 1 if d > 0 else 0
                continue
            placed = True
            break
        if not placed:
            d -= 1
            if d < 0:
                return True, checked, wit_r, wit_c, 0
            # next pair after (rows[d], cols[d]): same row, next column
            ni = rows[d]
            nj = cols[d] + 1
            continue
        i = ni
        j = nj
        inv = inv_stack[d]
        s = T[i, j]
        for t in range(d):
            u[t] = T[rows[t], j]
            vv[t] = T[i, cols[t]]
        # bu <- inv @ u ; cv <- vv @ inv ; s <- T[i,j] - vv . bu
        for r in range(d):
            acc = np.uint32(0)
            for t in range(d):
                acc ^= _gf_mul(inv[r, t], u[t], log_t, exp_t)
            bu[r] = acc
        for t in range(d):
            acc = np.uint32(0)
            for r in range(d):
                acc ^= _gf_mul(vv[r], inv[r, t], log_t, exp_t)
            cv[t] = acc
        for t in range(d):
            s ^= _gf_mul(vv[t], bu[t], log_t, exp_t)
        checked += 1
        if s == 0:
            for t in range(d):
                wit_r[t] = rows[t]
                wit_c[t] = cols[t]
            wit_r[d] = i
            wit_c[d] = j
            return False, checked, wit_r, wit_c, d + 1
        rows[d] = i
        cols[d] = j
        if d + 1 < smax and i + 1 < RR:
            si = exp_t[order - log_t[s]]
            lsi = log_t[si]
            nxt = inv_stack[d + 1]
            for r in range(d):
                ur = _gf_mul(bu[r], si, log_t, exp_t)
                for t in range(d):
                    nxt[r, t] = inv[r, t] ^ _gf_mul(ur, cv[t], log_t, exp_t)
                nxt[r, d] = ur
            for t in range(d):
                nxt[d, t] = _gf_mul(si, cv[t], log_t, exp_t)
            nxt[d, d] = si
            d += 1
            ni = i + 1
            nj = j + 1
        else:
            # leaf: continue with the next pair at this depth
            ni = i
            nj = j + 1
    # unreachable


_proper_minors_dfs = jit(_proper_minors_dfs)


def _splitmix_stream_impl(seed, n):
    """Counter-mode splitmix64 outputs for indices 1..n (uint64 array)."""
    out = np.empty(n, dtype=np.uint64)
    s = np.uint64(seed)
    for i in range(n):
        s = s + GOLDEN64
        z = s
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        out[i] = z ^ (z >> np.uint64(31))
    return out


_splitmix_stream_impl = jit(_splitmix_stream_impl)


def _splitmix_stream(seed, n):
    return _splitmix_stream_impl(np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF), n)


def _ge_chain(seed, p_ce, p_ee, n):
    """Gilbert-Elliot scan: returns uint8 array, 1 = erased.

    State starts at `correct`; uniform deviates come from the splitmix64
    counter stream (53-bit mantissa).
    """
    out = np.zeros(n, dtype=np.uint8)
    s = np.uint64(seed)
    state = 0
    scale = 1.0 / 9007199254740992.0  # 2**-53
    for i in range(n):
        s = s + GOLDEN64
        z = s
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        z = z ^ (z >> np.uint64(31))
        u = np.float64(z >> np.uint64(11)) * scale
        thr = p_ee if state == 1 else p_ce
        state = 1 if u < thr else 0
        out[i] = state
    return out


_ge_chain_seq = jit(_ge_chain)


def _ge_chain_numpy(seed, p_ce, p_ee, n):
    """Vectorised fallback identical to the sequential scan.

    Uses the closed form of the two-state recursion
    s_t = a_t or (s_{t-1} and b_t) with a_t = (u_t < p_ce),
    b_t = (u_t < p_ee): s_t = 1 iff the last a-hit is more recent than
    the last b-miss.
    """
    idx = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(seed) + idx * GOLDEN64
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z = z ^ (z >> np.uint64(31))
    u = (z >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)
    a = u < p_ce
    b = u < p_ee
    t = np.arange(n, dtype=np.int64)
    last_a = np.maximum.accumulate(np.where(a, t, -2))
    last_bmiss = np.maximum.accumulate(np.where(~b, t, -1))
    return ((last_a >= 0) & (last_bmiss <= last_a)).astype(np.uint8)
