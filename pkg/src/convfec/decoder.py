"""Sliding-window erasure recovery.

Streams are sequences of n-symbol vectors over the code's field, each
symbol tagged known/erased.  Positions outside the stream are treated as
correctly received zeros, which lets windows overhang both ends.

Recovery strategies:

- forward: scan left to right; at the first erased vector with nu known
  vectors before it, try window sizes j = L down to 0 and solve the
  non-homogeneous system of the window's parity checks.  Only uniquely
  determined symbols are ever committed (the first erased vector is
  guaranteed for MDP codes; an optional fast path commits every
  uniquely-determined coordinate).
- backward: when no forward window fits, scan right from the last
  erasure of the maximal window for nu consecutive known vectors and
  solve mirror-image windows anchored on that guard, pulling leftwards
  while budgets allow.
- guard: for codes certified complete-MDP, solve one whole
  (nu+L+1)n-symbol window through the partial parity-check matrix
  whenever the erasure count and boundary distribution permit, which
  re-establishes a guard space mid-stream.

Committed symbols are always uniquely determined by received data, so a
miscorrection is impossible over an erasure channel; failed regions are
reported, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import errors
from ._kernels import _splitmix_stream
from .convcode import ConvCode
from .gf import FieldSpec
from .linalg import FieldMatrix


@dataclass
class SymbolStream:
    """A transmitted/received sequence of field symbols in n-blocks."""

    spec: FieldSpec
    n: int
    values: np.ndarray  # uint32, flat
    known: np.ndarray  # bool, flat

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.uint32).copy()
        self.known = np.asarray(self.known, dtype=bool).copy()
        if self.values.shape != self.known.shape or self.values.ndim != 1:
            raise errors.DimMismatch("values/known must be equal-length 1-D")
        if self.values.size % self.n:
            raise errors.DimMismatch("stream length must be divisible by n")

    @classmethod
    def fully_known(cls, spec, n, values):
        values = np.asarray(values, dtype=np.uint32)
        return cls(spec, n, values, np.ones(len(values), dtype=bool))

    def erase(self, positions) -> "SymbolStream":
        known = self.known.copy()
        known[list(positions)] = False
        return SymbolStream(self.spec, self.n, self.values, known)

    def with_pattern(self, known) -> "SymbolStream":
        return SymbolStream(self.spec, self.n, self.values, np.asarray(known, dtype=bool))

    @property
    def num_vectors(self) -> int:
        return self.values.size // self.n

    @property
    def num_symbols(self) -> int:
        return self.values.size

    def erased_positions(self):
        return np.nonzero(~self.known)[0]

    def copy(self) -> "SymbolStream":
        return SymbolStream(self.spec, self.n, self.values, self.known)


# -- pattern / symbol text formats -------------------------------------------


def parse_pattern(text: str) -> np.ndarray:
    """'v' = known, '*' = erased; whitespace ignored. Returns known-mask."""
    marks = [c for c in text if not c.isspace()]
    bad = set(marks) - {"v", "*"}
    if bad:
        raise errors.FormatError(f"pattern may contain only 'v' and '*', got {bad}")
    return np.array([c == "v" for c in marks], dtype=bool)


def render_pattern(known) -> str:
    return "".join("v" if k else "*" for k in known)


def read_symbols(path) -> list:
    with open(path) as fh:
        return [int(tok, 16) for tok in fh.read().split()]


def write_symbols(values, path, per_line=16):
    toks = [f"{int(v):x}" for v in values]
    with open(path, "w") as fh:
        for i in range(0, len(toks), per_line):
            fh.write(" ".join(toks[i : i + per_line]) + "\n")


# -- window machinery ---------------------------------------------------------


@dataclass
class WindowStep:
    direction: str  # forward | backward | guard
    start_vector: int
    window_vectors: int  # j+1 (or nu+L+1 for guard)
    solved: int


@dataclass
class RecoveryReport:
    recovered_positions: list
    unresolved_positions: list
    window_trace: list
    phi: float
    zero_erasures: bool
    r_omega_min: float | None
    notes: list = field(default_factory=list)


class _Work:
    """Mutable decoding state; erased values are zeroed on entry so the
    decoding path can never read them."""

    def __init__(self, code: ConvCode, stream: SymbolStream):
        if code.parity is None:
            raise errors.UnsupportedParams("decoding needs a parity-check matrix")
        if stream.spec != code.spec or stream.n != code.n:
            raise errors.FieldMismatch("stream does not match the code")
        self.code = code
        self.spec = code.spec
        self.n = code.n
        self.nk = code.n - code.k
        self.nu = code.nu
        self.L = code.L
        self.vals = stream.values.copy()
        self.known = stream.known.copy()
        self.vals[~self.known] = 0
        self.num_vectors = stream.num_vectors
        self.H = [np.asarray(c) for c in code.parity.coeffs]

    # vectors outside [0, num_vectors) are virtual known zeros
    def vector_known(self, t: int) -> bool:
        if t < 0 or t >= self.num_vectors:
            return True
        s = t * self.n
        return bool(self.known[s : s + self.n].all())

    def vectors_known(self, a: int, b: int) -> bool:
        return all(self.vector_known(t) for t in range(a, b))

    def erased_in(self, a: int, b: int):
        """Flat erased positions within vectors [a, b)."""
        lo = max(a, 0) * self.n
        hi = min(b, self.num_vectors) * self.n
        if lo >= hi:
            return []
        idx = np.nonzero(~self.known[lo:hi])[0]
        return [int(i) + lo for i in idx]

    def first_erased_vector(self, start: int):
        for t in range(max(start, 0), self.num_vectors):
            if not self.vector_known(t):
                return t
        return None

    def last_erased_vector(self, a: int, b: int):
        for t in range(min(b, self.num_vectors) - 1, max(a, 0) - 1, -1):
            if not self.vector_known(t):
                return t
        return None

    def build_system(self, check_lo: int, check_hi: int, unknowns):
        """Parity checks at times check_lo..check_hi restricted to the
        given unknown flat positions; returns (A, rhs)."""
        spec, n, nk, nu = self.spec, self.n, self.nk, self.nu
        col_of = {pos: i for i, pos in enumerate(unknowns)}
        rows = (check_hi - check_lo + 1) * nk
        A = np.zeros((rows, len(unknowns)), dtype=np.uint32)
        rhs = np.zeros(rows, dtype=np.uint32)
        for ti, t in enumerate(range(check_lo, check_hi + 1)):
            r0 = ti * nk
            for i in range(nu + 1):
                v = t - i
                if v < 0 or v >= self.num_vectors:
                    continue  # virtual zero vector
                Hi = self.H[i]
                base = v * n
                for s in range(n):
                    pos = base + s
                    col = col_of.get(pos)
                    if col is not None:
                        A[r0 : r0 + nk, col] = Hi[:, s]
                    else:
                        val = int(self.vals[pos])
                        if val:
                            for r in range(nk):
                                c = int(Hi[r, s])
                                if c:
                                    rhs[r0 + r] = spec.sub(
                                        int(rhs[r0 + r]), spec.mul(c, val)
                                    )
        return A, rhs

    def solve_window(self, check_lo, check_hi, unknowns):
        A, rhs = self.build_system(check_lo, check_hi, unknowns)
        rep = FieldMatrix(self.spec, A).solve(rhs)
        if not rep.solvable:
            raise errors.DecodeInconsistent(
                "window system inconsistent: stream is not a codeword fragment"
            )
        return rep

    def commit(self, unknowns, rep, which) -> list:
        """Write back the selected uniquely-determined coordinates."""
        out = []
        for i in which:
            if not rep.unique_mask[i]:
                raise errors.Singular("coordinate not uniquely determined")
            pos = unknowns[i]
            self.vals[pos] = rep.solution[i]
            self.known[pos] = True
            out.append(pos)
        return out

    def to_stream(self) -> SymbolStream:
        return SymbolStream(self.spec, self.n, self.vals, self.known)


def _forward(work: _Work, t: int, j: int, commit_all_unique: bool) -> list:
    n, nk, nu = work.n, work.nk, work.nu
    if not work.vectors_known(t - nu, t):
        raise errors.NotEnoughGuard(f"vectors {t - nu}..{t - 1} not fully known")
    unknowns = work.erased_in(t, t + j + 1)
    if not unknowns:
        return []
    if len(unknowns) > (j + 1) * nk:
        raise errors.TooManyErasures(
            f"{len(unknowns)} erasures exceed the budget {(j + 1) * nk}"
        )
    rep = work.solve_window(t, t + j, unknowns)
    first_vec = unknowns[0] // n
    first = [i for i, p in enumerate(unknowns) if p // n == first_vec]
    if commit_all_unique:
        chosen = [i for i in range(len(unknowns)) if rep.unique_mask[i]]
        if not all(rep.unique_mask[i] for i in first):
            raise errors.Singular("first erased vector not uniquely determined")
    else:
        chosen = first
    return work.commit(unknowns, rep, chosen)


def _backward(work: _Work, t_end: int, j: int, commit_all_unique: bool) -> list:
    n, nk, nu = work.n, work.nk, work.nu
    if not work.vectors_known(t_end + 1, t_end + nu + 1):
        raise errors.NotEnoughGuard(
            f"vectors {t_end + 1}..{t_end + nu} not fully known"
        )
    unknowns = work.erased_in(t_end - j, t_end + 1)
    if not unknowns:
        return []
    if len(unknowns) > (j + 1) * nk:
        raise errors.TooManyErasures(
            f"{len(unknowns)} erasures exceed the budget {(j + 1) * nk}"
        )
    rep = work.solve_window(t_end - j + nu, t_end + nu, unknowns)
    last_vec = unknowns[-1] // n
    last = [i for i, p in enumerate(unknowns) if p // n == last_vec]
    if commit_all_unique:
        chosen = [i for i in range(len(unknowns)) if rep.unique_mask[i]]
        if not all(rep.unique_mask[i] for i in last):
            raise errors.Singular("last erased vector not uniquely determined")
    else:
        chosen = last
    return work.commit(unknowns, rep, chosen)


def _guard_conditions(work: _Work, u: int):
    """Theorem-style admissibility of the window starting at vector u:
    at most (L+1)(n-k) erasures in the (nu+L+1)n window, with at most
    s(n-k) of them in the first sn and in the last sn symbols,
    s = 1..L+1.  Returns None if fine, else a reason string."""
    n, nk, nu, L = work.n, work.nk, work.nu, work.L
    W = (nu + L + 1) * n
    lo = u * n
    erased = [p - lo for p in work.erased_in(u, u + nu + L + 1)]
    if len(erased) > (L + 1) * nk:
        return f"count {len(erased)} > {(L + 1) * nk}"
    for s in range(1, L + 2):
        pre = sum(1 for e in erased if e < s * n)
        if pre > s * nk:
            return f"first {s * n} symbols hold {pre} > {s * nk} erasures"
        suf = sum(1 for e in erased if e >= W - s * n)
        if suf > s * nk:
            return f"last {s * n} symbols hold {suf} > {s * nk} erasures"
    return None


def _guard(work: _Work, u: int) -> list:
    reason = _guard_conditions(work, u)
    if reason is not None:
        raise errors.ConditionsViolated(reason)
    unknowns = work.erased_in(u, u + work.nu + work.L + 1)
    if not unknowns:
        return []
    rep = work.solve_window(u + work.nu, u + work.nu + work.L, unknowns)
    if not all(rep.unique_mask):
        raise errors.Singular("guard window not uniquely solvable")
    return work.commit(unknowns, rep, list(range(len(unknowns))))


# -- public single-window operations -----------------------------------------


def forward_window(code, stream, t, j, *, commit_all_unique=False):
    """Solve one forward window [t, t+j]; returns (stream, committed)."""
    work = _Work(code, stream)
    committed = _forward(work, t, j, commit_all_unique)
    return work.to_stream(), committed


def backward_window(code, stream, t_end, j, *, commit_all_unique=False):
    """Solve one backward window [t_end-j, t_end] anchored on the guard
    after it; returns (stream, committed)."""
    from .convcode import reverse_code

    reverse_code(code)  # raises UnsupportedParams when the mirror is undefined
    work = _Work(code, stream)
    committed = _backward(work, t_end, j, commit_all_unique)
    return work.to_stream(), committed


def guard_recover(code, stream, start_vector):
    """Solve one whole (nu+L+1)n window through the partial parity-check
    matrix; returns (stream, committed).

    Raises ConditionsViolated when the erasure count or boundary
    distribution rules out unique recovery, and Singular when the window
    system is not uniquely solvable (a non-complete-MDP code)."""
    work = _Work(code, stream)
    committed = _guard(work, start_vector)
    return work.to_stream(), committed


# -- the full sequence loop ---------------------------------------------------

STRATEGIES = ("forward", "forward-backward", "full")


def recover_sequence(
    code: ConvCode,
    stream: SymbolStream,
    *,
    strategy: str = "full",
    commit_all_unique: bool = False,
    trace: bool = True,
) -> tuple[SymbolStream, RecoveryReport]:
    """Run the sequence-level recovery loop.

    Scans left to right.  At each erased vector with a guard before it,
    forward windows are tried from j = L down to 0; failing that, a
    trailing guard is sought (within one maximal window of the last
    erasure) and backward windows pull left from it; failing that, and
    when the guard strategy is enabled, whole-window recovery through
    the partial parity-check matrix is attempted for every placement
    covering the stuck vector.  Unrecoverable vectors are skipped and
    reported; scanning resumes after them.
    """
    if strategy not in STRATEGIES:
        raise errors.BadParams(f"strategy must be one of {STRATEGIES}")
    use_backward = strategy in ("forward-backward", "full")
    use_guard = strategy == "full"
    work = _Work(code, stream)
    n, nk, nu, L = work.n, work.nk, work.nu, work.L
    initially_erased = stream.erased_positions()
    steps: list = []
    notes: list = []
    recovered: list = []

    t = 0
    while t < work.num_vectors:
        if work.vector_known(t):
            t += 1
            continue
        if not work.vectors_known(t - nu, t):
            t += 1  # lost: no guard; the scan resumes further right
            continue
        # forward descent
        progressed = False
        for j in range(L, -1, -1):
            count = len(work.erased_in(t, t + j + 1))
            if count == 0 or count > (j + 1) * nk:
                continue
            try:
                got = _forward(work, t, j, commit_all_unique)
            except errors.Singular:
                continue
            recovered.extend(got)
            if trace:
                steps.append(WindowStep("forward", t, j + 1, len(got)))
            progressed = True
            break
        if progressed:
            continue  # re-enter at the same t; its first vector is now known
        if use_backward:
            e_last = work.last_erased_vector(t, t + L + 1)
            cap = min(e_last + 1 + (L + 1), work.num_vectors)
            hit_cap = True
            back_progress = False
            for g in range(e_last + 1, cap + 1):
                if not work.vectors_known(g, g + nu):
                    continue
                hit_cap = False
                while True:
                    t_end = work.last_erased_vector(0, g)
                    if t_end is None:
                        break
                    solved = False
                    for j in range(L, -1, -1):
                        count = len(work.erased_in(t_end - j, t_end + 1))
                        if count == 0 or count > (j + 1) * nk:
                            continue
                        try:
                            got = _backward(work, t_end, j, commit_all_unique)
                        except errors.Singular:
                            continue
                        recovered.extend(got)
                        if trace:
                            steps.append(
                                WindowStep("backward", t_end - j, j + 1, len(got))
                            )
                        solved = True
                        back_progress = True
                        break
                    if not solved:
                        break
                if back_progress:
                    break
            if hit_cap and cap < work.num_vectors and trace:
                notes.append(f"backward guard scan capped at vector {cap}")
            if back_progress:
                continue  # rescan from t with the enlarged known set
        if use_guard:
            guard_done = False
            for u in range(t - (nu + L), t + 1):
                if _guard_conditions(work, u) is not None:
                    continue
                try:
                    got = _guard(work, u)
                except (errors.Singular, errors.DecodeInconsistent):
                    continue
                recovered.extend(got)
                if trace:
                    steps.append(WindowStep("guard", u, nu + L + 1, len(got)))
                guard_done = True
                break
            if guard_done:
                continue
        t += 1  # this vector stays unresolved; restart scanning after it

    recovered_set = set(recovered)
    unresolved = [int(p) for p in initially_erased if p not in recovered_set]
    occurred = len(initially_erased)
    phi = 1.0 if occurred == 0 else (occurred - len(unresolved)) / occurred
    rates = [s.solved / (s.window_vectors * n) for s in steps if s.solved]
    r_omega = min(rates) if rates else None
    report = RecoveryReport(
        recovered_positions=sorted(int(p) for p in recovered_set),
        unresolved_positions=unresolved,
        window_trace=steps,
        phi=phi,
        zero_erasures=occurred == 0,
        r_omega_min=r_omega,
        notes=notes,
    )
    return work.to_stream(), report


# -- encoding -----------------------------------------------------------------


def encode_stream(code: ConvCode, num_vectors: int, seed: int = 1) -> SymbolStream:
    """Draw a random finite codeword of the given length.

    Information coordinates are filled from the seeded splitmix64
    stream and parity coordinates solved step by step; the tail is
    chosen so the trailing virtual-zero checks hold (the stream is a
    complete polynomial codeword, matching the decoder's boundary
    convention), with leftover tail freedom randomised.
    """
    if code.parity is None:
        raise errors.UnsupportedParams("encoding works off the parity-check matrix")
    spec, n, nk, nu = code.spec, code.n, code.n - code.k, code.nu
    k = code.k
    if num_vectors < 1:
        raise errors.BadParams("need at least one vector")
    H0 = FieldMatrix(spec, code.parity.coeffs[0])
    parity_cols = _independent_columns(H0)
    if len(parity_cols) < nk:
        raise errors.UnsupportedParams("H_0 is rank-deficient: cannot encode")
    info_cols = [c for c in range(n) if c not in parity_cols]
    Pinv = H0.submatrix(list(range(nk)), parity_cols).inverse()

    tail = max(1, -(-nu * nk // k))  # ceil(nu*nk/k)
    rng = _splitmix_stream(seed, num_vectors * k + 16)
    vals = np.zeros(num_vectors * n, dtype=np.uint32)
    work = _Work(code, SymbolStream(spec, n, vals, np.ones(num_vectors * n, bool)))

    head = max(0, num_vectors - tail)
    ri = 0
    for t in range(head):
        for ci, c in enumerate(info_cols):
            work.vals[t * n + c] = int(rng[ri] % np.uint64(spec.q))
            ri += 1
        # solve H_0[:, parity] x = -(sum_{i>=1} H_i v_{t-i} + H_0[:, info] u_t)
        rhs = np.zeros(nk, dtype=np.uint32)
        for i in range(0, nu + 1):
            v = t - i
            if v < 0:
                continue
            Hi = work.H[i]
            base = v * n
            for s in range(n):
                if i == 0 and s in parity_cols:
                    continue
                val = int(work.vals[base + s])
                if val:
                    for r in range(nk):
                        c = int(Hi[r, s])
                        if c:
                            rhs[r] = spec.sub(int(rhs[r]), spec.mul(c, val))
        x = Pinv.matvec(rhs)
        for ci, c in enumerate(parity_cols):
            work.vals[t * n + c] = x[ci]

    # terminate: solve the remaining vectors against all outstanding checks,
    # randomising whatever freedom the tail system leaves
    for extra in range(nu + 2):
        t0 = max(0, num_vectors - tail - extra)
        unknowns = list(range(t0 * n, num_vectors * n))
        A, rhs = work.build_system(t0, num_vectors - 1 + nu, unknowns)
        mat = FieldMatrix(spec, A)
        rep = mat.solve(rhs)
        if rep.solvable:
            sol = rep.solution.copy()
            basis = mat.kernel_basis()
            extra_rng = _splitmix_stream(seed ^ 0x5EED, max(1, basis.shape[0]))
            for bi in range(basis.shape[0]):
                coef = int(extra_rng[bi] % np.uint64(spec.q))
                if coef:
                    for c in range(len(sol)):
                        if basis[bi, c]:
                            sol[c] = spec.add(
                                int(sol[c]), spec.mul(coef, int(basis[bi, c]))
                            )
            for i, pos in enumerate(unknowns):
                work.vals[pos] = sol[i]
            break
    else:
        raise errors.DecodeInconsistent("could not terminate the codeword")
    return SymbolStream(spec, n, work.vals, np.ones(num_vectors * n, bool))


def _independent_columns(M: FieldMatrix):
    """First maximal set of linearly independent columns (deterministic)."""
    cols: list = []
    r = 0
    for c in range(M.cols):
        trial = M.submatrix(list(range(M.rows)), cols + [c])
        if trial.rank() > r:
            cols.append(c)
            r += 1
            if r == M.rows:
                break
    return cols


def check_stream(code: ConvCode, stream: SymbolStream) -> bool:
    """True iff a fully known stream satisfies every parity check
    (including the virtual-zero boundary checks)."""
    work = _Work(code, stream)
    if not stream.known.all():
        return False
    A, rhs = work.build_system(0, stream.num_vectors - 1 + code.nu, [])
    return not rhs.any()
