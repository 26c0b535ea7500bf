# Verify the (2,1,1) GF(32) MDP/reverse-MDP example and the (3,1,1) GF(128)
# complete-MDP examples, including the paper's two inconsistent entries.
import numpy as np
from convfec.gf import gf2m
from convfec.linalg import FieldMatrix
from convfec._kernels import _admissible_minors_dfs

F32 = gf2m(5, (1, 0, 1, 0, 0, 1))      # a^5+a^2+1
F128a = gf2m(7, (1, 1, 0, 1, 0, 0, 1, 1))   # a^7+a^6+a^3+a+1
F128b = gf2m(7, (1, 1, 1, 0, 1, 1, 1, 1))   # a^7+a^6+a^5+a^4+a^2+a+1

def P(F, e):
    return F.pow(2, e)

def sliding(Hs, j, nk, n, spec):
    # lower block triangular [H_0; H_1 H_0; ...] at window index j
    A = np.zeros(((j + 1) * nk, (j + 1) * n), dtype=np.uint32)
    for r in range(j + 1):
        for c in range(r + 1):
            i = r - c
            if i < len(Hs):
                A[r * nk:(r + 1) * nk, c * n:(c + 1) * n] = Hs[i]
    return A

def mdp_bounds(n, nk, j):
    # columns r_1..r_R (1-based) with r_{s*nk} <= s*n for s=1..j
    R = (j + 1) * nk
    C = (j + 1) * n
    lo = np.array([t for t in range(R)], dtype=np.int64)          # 0-based minimum t
    hi = np.array([C - R + t for t in range(R)], dtype=np.int64)
    for s in range(1, j + 1):
        t = s * nk  # 1-based position
        hi[t - 1] = min(hi[t - 1], s * n - 1)  # 0-based bound
    # propagate
    for t in range(R - 2, -1, -1):
        hi[t] = min(hi[t], hi[t + 1] - 1)
    for t in range(1, R):
        lo[t] = max(lo[t], lo[t - 1] + 1)
    return lo, hi

def check_mdp(Hs, n, nk, j, spec):
    A = sliding(Hs, j, nk, n, spec)
    lo, hi = mdp_bounds(n, nk, j)
    ok, checked, wit = _admissible_minors_dfs(A, lo, hi, spec.log_table, spec.exp_table, spec.order)
    return bool(ok), int(checked), [int(w) for w in wit if w >= 0], A

# ---- (2,1,1) GF(32): H(z) = [1 + a25 z + a5 z^2, a15 + a10 z + a3 z^2]
H0 = np.array([[1, P(F32, 15)]], dtype=np.uint32)
H1 = np.array([[P(F32, 25), P(F32, 10)]], dtype=np.uint32)
H2 = np.array([[P(F32, 5), P(F32, 3)]], dtype=np.uint32)
ok, checked, wit, A = check_mdp([H0, H1, H2], 2, 1, 2, F32)
print("(2,1,1) H_L:")
print(A)
printed = np.array([
    [1, P(F32, 15), 0, 0, 0, 0],
    [P(F32, 25), P(F32, 10), 1, P(F32, 15), 0, 0],
    [P(F32, 5), P(F32, 3), P(F32, 25), P(F32, 10), 1, P(F32, 15)],
], dtype=np.uint32)
print("matches printed H_L:", np.array_equal(A, printed))
print("is MDP:", ok, "minors checked:", checked)

# reverse: Hbar_i = H_{2-i}
okr, checkedr, witr, Ar = check_mdp([H2, H1, H0], 2, 1, 2, F32)
print("reverse is MDP:", okr, "checked:", checkedr)
# the printed \bar H_L in the paper (actually the J-mirrored F form):
Fs = [np.array([[row[0, 1], row[0, 0]]], dtype=np.uint32) for row in (H2, H1, H0)]
Af = sliding(Fs, 2, 1, 2, F32)
printedF = np.array([
    [P(F32, 3), P(F32, 5), 0, 0, 0, 0],
    [P(F32, 10), P(F32, 25), P(F32, 3), P(F32, 5), 0, 0],
    [P(F32, 15), 1, P(F32, 10), P(F32, 25), P(F32, 3), P(F32, 5)],
], dtype=np.uint32)
print("F_L matches printed \\bar H_L:", np.array_equal(Af, printedF))

# rank of H_L
print("rank H_L:", FieldMatrix(F32, A).rank(), "(spec expects 3)")

# do h1, h2 share a common factor? gcd over GF(32)[z]
def polygcd(spec, f, g):
    # f, g: coefficient lists ascending
    def deg(c):
        d = len(c) - 1
        while d >= 0 and c[d] == 0:
            d -= 1
        return d
    f, g = list(f), list(g)
    while True:
        df, dg = deg(f), deg(g)
        if dg < 0:
            return [c for c in f[:df + 1]]
        if df < dg:
            f, g = g, f
            continue
        lead = spec.div(f[df], g[dg])
        for i in range(dg + 1):
            f[df - dg + i] ^= spec.mul(lead, g[i])
print("gcd(h1,h2):", polygcd(F32, [1, P(F32, 25), P(F32, 5)], [P(F32, 15), P(F32, 10), P(F32, 3)]))

# ---- (3,1,1) GF(128) complete-MDP candidates
def partial_parity(Hs, nu, L, n, nk):
    A = np.zeros(((L + 1) * nk, (nu + L + 1) * n), dtype=np.uint32)
    for s in range(L + 1):
        for i in range(nu + 1):
            A[s * nk:(s + 1) * nk, (s + nu - i) * n:(s + nu - i + 1) * n] = Hs[i]
    return A

def complete_bounds(n, nk, nu, L):
    R = (L + 1) * nk
    C = (nu + L + 1) * n
    lo = np.array([t for t in range(R)], dtype=np.int64)
    hi = np.array([C - R + t for t in range(R)], dtype=np.int64)
    for s in range(1, L + 1):
        t = s * nk + 1      # 1-based: j_{s(n-k)+1} > s*n
        if t <= R:
            lo[t - 1] = max(lo[t - 1], s * n)      # 0-based >= s*n
        t2 = s * nk
        hi[t2 - 1] = min(hi[t2 - 1], s * n + nu * n - 1)
    for t in range(R - 2, -1, -1):
        hi[t] = min(hi[t], hi[t + 1] - 1)
    for t in range(1, R):
        lo[t] = max(lo[t], lo[t - 1] + 1)
    return lo, hi

def check_complete(H0, H1, spec, label):
    A = partial_parity([H0, H1], 1, 1, 3, 2)
    lo, hi = complete_bounds(3, 2, 1, 1)
    ok, checked, wit = _admissible_minors_dfs(A, lo, hi, spec.log_table, spec.exp_table, spec.order)
    w = [int(x) + 1 for x in wit if x >= 0]  # report 1-based
    print(f"{label}: complete-MDP={ok} checked={checked} witness(1-based)={w if not ok else None}")
    return ok

# Variant 1: exactly as in the displayed H(z): H1[1][0]=a37, H0[1][2]=a62
a = F128a
for h1_21, h0_23, tag in [
    (P(a, 37), P(a, 62), "H(z) display (a37, a62)"),
    (P(a, 13), P(a, 82), "partial-matrix display (a13, a82)"),
    (P(a, 37), P(a, 82), "mixed (a37, a82)"),
    (P(a, 13), P(a, 62), "mixed (a13, a62)"),
]:
    H0c = np.array([[P(a, 76), P(a, 62), 1], [P(a, 73), P(a, 76), h0_23]], dtype=np.uint32)
    H1c = np.array([[P(a, 77), P(a, 85), P(a, 76)], [h1_21, P(a, 77), P(a, 85)]], dtype=np.uint32)
    check_complete(H0c, H1c, a, tag)

# Second (3,1,1): internally consistent; expect NOT complete with witness {1,5,6,7}
b = F128b
H0b = np.array([[P(b, 93), P(b, 19), P(b, 75)], [P(b, 61), P(b, 93), P(b, 19)]], dtype=np.uint32)
H1b = np.array([[P(b, 49), P(b, 30), P(b, 35)], [P(b, 19), P(b, 49), P(b, 30)]], dtype=np.uint32)
check_complete(H0b, H1b, b, "second example (expect False, wit {1,5,6,7})")
# verify the witness columns {1,5,6,7} 1-based give a zero det
App = partial_parity([H0b, H1b], 1, 1, 3, 2)
sub = FieldMatrix(b, App[:, [0, 4, 5, 6]])
print("det cols {1,5,6,7}:", int(sub.det()))
# and that this code IS reverse-MDP: check H_L minors + reversed
def check_rev(H0c, H1c, spec, n, nk, L):
    ok1, c1, w1, _ = check_mdp([H0c, H1c], n, nk, L, spec)
    ok2, c2, w2, _ = check_mdp([H1c, H0c], n, nk, L, spec)
    return ok1, ok2
print("second example MDP/revMDP:", check_rev(H0b, H1b, b, 3, 2, 1))
