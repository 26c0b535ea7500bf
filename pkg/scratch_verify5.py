# Y inverse check; P/Q/S extraction index sets; Theorem 5.1 mini-sweep.
import time
import numpy as np
from convfec.gf import gf2m, irreducible_polynomials
from convfec.linalg import FieldMatrix, one_based
from convfec._kernels import _proper_minors_dfs

F16 = gf2m(4, (1, 1, 0, 0, 1))
F32mu = gf2m(5, (1, 0, 1, 0, 0, 1))
F128q = gf2m(7, (1, 0, 0, 0, 0, 0, 1, 1))
F32s = gf2m(5, (1, 1, 1, 1, 0, 1))   # reciprocal of the printed S modulus

def P(F, e): return F.pow(2, e)

def toeplitz(spec, diag):
    n = len(diag)
    arr = np.zeros((n, n), dtype=np.uint32)
    for i in range(n):
        for j in range(i + 1):
            arr[i, j] = diag[i - j]
    return FieldMatrix(spec, arr)

def sr(M):
    s = M.spec
    ok, _, wr, wc, wl = _proper_minors_dfs(M.arr, 1, 1, s.log_table, s.exp_table, s.order)
    return bool(ok)

# --- Y inverse sanity
Y = toeplitz(F16, [1, P(F16, 12), P(F16, 4), 1, P(F16, 6)])
Yinv = Y.inverse()
prod = Y.matmul(Yinv)
print("Y*Yinv == I:", np.array_equal(prod.arr, np.eye(5, dtype=np.uint32)))
print("Yinv diagonals (log):", [F16.log(int(v)) if v else None for v in Yinv.arr[:, 0]])
# paper printed (Y^-1)_rev as data: assert its displayed 4x4 minor is zero
printed_rev = toeplitz(F16, [P(F16, 14), P(F16, 13), P(F16, 14), P(F16, 12), 1])
m = printed_rev.minor_det(one_based([2, 3, 4, 5]), one_based([1, 2, 3, 4]))
print("printed (Y^-1)_rev minor rows2-5 cols1-4:", int(m), "(paper says 0)")
# true inverse reversed: not superregular?
true_rev = toeplitz(F16, [int(v) for v in Yinv.arr[:, 0]][::-1])
print("true (Y^-1)_rev superregular:", sr(true_rev), "(expect False)")

# --- extraction index sets
def extract_parity_idx(n, k, L):
    I, J = [], []
    for j in range(L + 1):
        nkm1 = n - k - 1
        I += list(range((j + 1) * n + j * nkm1, (j + 1) * (2 * n - k - 1) + 1))
        J += list(range(j * n + j * nkm1 + 1, (j + 1) * n + j * nkm1 + 1))
    return I, J  # 1-based

def extract_gen_idx(n, k, L):
    I, J = [], []
    for j in range(L + 1):
        km1 = k - 1
        I += list(range(j * n + j * km1 + 1, (j + 1) * n + j * km1 + 1))
        J += list(range((j + 1) * n + j * km1, (j + 1) * (n + k - 1) + 1))
    return I, J

# P -> (3,2,1) H(z)
Pm = toeplitz(F32mu, [1, P(F32mu,15), P(F32mu,21), P(F32mu,23), P(F32mu,21), P(F32mu,10)])
I, J = extract_parity_idx(3, 2, 1)
print("P idx:", I, J)
HL = Pm.submatrix(one_based(I), one_based(J))
H0 = HL.arr[0:1, 0:3]; H1 = HL.arr[1:2, 0:3]
exp_H0 = np.array([[P(F32mu,21), P(F32mu,15), 1]], dtype=np.uint32)
exp_H1 = np.array([[P(F32mu,10), P(F32mu,21), P(F32mu,23)]], dtype=np.uint32)
print("P extraction H0, H1 match:", np.array_equal(H0, exp_H0), np.array_equal(H1, exp_H1),
      "zero block:", np.all(HL.arr[0:1, 3:6] == 0), "H0 again:", np.array_equal(HL.arr[1:2, 3:6], exp_H0))

# Q -> (4,3,1) H(z)
Qm = toeplitz(F128q, [1] + [P(F128q, e) for e in (12, 32, 45, 48, 41, 27, 21)])
I, J = extract_parity_idx(4, 3, 1)
HLq = Qm.submatrix(one_based(I), one_based(J))
exp_H0q = np.array([[P(F128q,45), P(F128q,32), P(F128q,12), 1]], dtype=np.uint32)
exp_H1q = np.array([[P(F128q,21), P(F128q,27), P(F128q,41), P(F128q,48)]], dtype=np.uint32)
print("Q extraction H0, H1 match:", np.array_equal(HLq.arr[0:1, 0:4], exp_H0q),
      np.array_equal(HLq.arr[1:2, 0:4], exp_H1q))

# S -> (3,1,1) G(z): B = transpose of reverse-superregular lower matrix
g = F32s
S_low = toeplitz(g, [1] + [P(g, e) for e in (19, 16, 20, 5, 16)])
print("S_low sr:", sr(S_low), " S_low_rev sr:", sr(toeplitz(g, [P(g,16), P(g,5), P(g,20), P(g,16), P(g,19), 1])))
B = S_low.transpose()
I, J = extract_gen_idx(3, 1, 1)
print("S idx:", I, J)
GL = B.submatrix(one_based(I), one_based(J))
print("G_L:")
print(GL.arr)
exp_G0 = np.array([P(g,16), P(g,19), 1], dtype=np.uint32)
exp_G1 = np.array([P(g,16), P(g,5), P(g,20)], dtype=np.uint32)
print("G0 match:", np.array_equal(GL.arr[0:3, 0], exp_G0),
      "G1 match:", np.array_equal(GL.arr[0:3, 1], exp_G1),
      "lower zero:", np.all(GL.arr[3:6, 0] == 0),
      "G0 again:", np.array_equal(GL.arr[3:6, 1], exp_G0))

# --- Theorem 5.1 sweep: m in {3,4,5}, l <= 6
def product_diag(spec, alpha, l):
    coeffs = [1]
    for i in range(l):
        ai = spec.pow(alpha, i)
        new = coeffs + [0]
        for j in range(len(coeffs)):
            new[j + 1] ^= spec.mul(coeffs[j], ai)
        coeffs = new
    return coeffs

t0 = time.time()
viol = 0
total = 0
sr_hits = 0
for m in (3, 4, 5):
    for mod in irreducible_polynomials(2, m):
        F = gf2m(m, mod)
        for l in range(1, 7):
            d = product_diag(F, 2, l)
            A = toeplitz(F, d)
            if sr(A):
                sr_hits += 1
                if not sr(toeplitz(F, d[::-1])):
                    viol += 1
                    print("VIOLATION", m, mod, l)
            total += 1
print(f"Theorem 5.1 sweep: {total} matrices, {sr_hits} superregular, {viol} violations, {time.time()-t0:.2f}s")
