# Scratch verification of printed example values (not part of the package).
import numpy as np
from convfec.gf import gf2m
from convfec.linalg import FieldMatrix, one_based
from convfec._kernels import _proper_minors_dfs

# --- fields ---
F8a = gf2m(3, (1, 1, 0, 1))        # a^3 + a + 1
F8b = gf2m(3, (1, 0, 1, 1))        # a^3 + a^2 + 1
F16 = gf2m(4, (1, 1, 0, 0, 1))     # 1 + a + a^4
F32mu = gf2m(5, (1, 0, 1, 0, 0, 1))   # mu^5 + mu^2 + 1
F32g = gf2m(5, (1, 0, 1, 1, 1, 1))    # g^5+g^4+g^3+g^2+1
F128a = gf2m(7, (1, 1, 0, 1, 0, 0, 1, 1))  # a^7+a^6+a^3+a+1
F128b = gf2m(7, (1, 1, 1, 0, 1, 1, 1, 1))  # a^7+a^6+a^5+a^4+a^2+a+1
F128q = gf2m(7, (1, 0, 0, 0, 0, 0, 1, 1))  # b^7+b^6+1

def p(spec, e):
    return spec.pow(spec.p, e)  # alpha^e with alpha = x

def product_diag(spec, alpha, l):
    # coefficients of prod_{i=0}^{l-1} (1 + alpha^i z)
    coeffs = [1]
    for i in range(l):
        ai = spec.pow(alpha, i)
        new = coeffs + [0]
        for j in range(len(coeffs)):
            new[j + 1] ^= spec.mul(coeffs[j], ai)
        coeffs = new
    return coeffs

# P over F32, mu, l=5: expect (1, mu^15, mu^21, mu^23, mu^21, mu^10)
dp = product_diag(F32mu, 2, 5)
expect = [1] + [p(F32mu, e) for e in (15, 21, 23, 21, 10)]
print("P diagonals match:", dp == expect, dp, expect)

# Q over F128 (b^7+b^6+1), l=7: expect (1, b12, b32, b45, b48, b41, b27, b21)
dq = product_diag(F128q, 2, 7)
expectq = [1] + [p(F128q, e) for e in (12, 32, 45, 48, 41, 27, 21)]
print("Q diagonals match:", dq == expectq)

# S over F32 (g^5+g^4+g^3+g^2+1), l=5: expect (1, g19, g16, g20, g5, g16)
ds = product_diag(F32g, 2, 5)
expects = [1] + [p(F32g, e) for e in (19, 16, 20, 5, 16)]
print("S diagonals match:", ds == expects)

def toeplitz(spec, diag):
    n = len(diag)
    arr = np.zeros((n, n), dtype=np.uint32)
    for i in range(n):
        for j in range(i + 1):
            arr[i, j] = diag[i - j]
    return FieldMatrix(spec, arr)

def superregular(M):
    s = M.spec
    ok, checked, wr, wc, wl = _proper_minors_dfs(
        M.arr, 1, 1, s.log_table, s.exp_table, s.order
    )
    return bool(ok), int(checked), (list(wr[:wl]), list(wc[:wl]))

# A over F8 (a^3+a+1): diagonals (1, a, a^3, a): superregular; A_rev NOT
a = 2
A = toeplitz(F8a, [1, a, p(F8a, 3), a])
Arev = toeplitz(F8a, [a, p(F8a, 3), a, 1])
print("A superregular:", superregular(A)[0], " (expect True)")
okr, _, wit = superregular(Arev)
print("A_rev superregular:", okr, "witness:", wit, " (expect False, rows 1,2,3 cols 0,1,2 0-based)")
# printed zero minor: rows {2,3,4} cols {1,2,3} 1-based
mz = Arev.minor_det(one_based([2, 3, 4]), one_based([1, 2, 3]))
print("A_rev minor (2,3,4)x(1,2,3) =", int(mz), " (expect 0)")

# B over F8 (a^3+a^2+1): diagonals (1, a, a, 1) reverse-superregular
B = toeplitz(F8b, [1, 2, 2, 1])
print("B superregular:", superregular(B)[0], " (expect True; B=B_rev)")

# C diagonals (1, a^4, a^6, a^3): which modulus?
for name, F in (("F8a(a^3+a+1)", F8a), ("F8b(a^3+a^2+1)", F8b)):
    C = toeplitz(F, [1, p(F, 4), p(F, 6), p(F, 3)])
    Crev = toeplitz(F, [p(F, 3), p(F, 6), p(F, 4), 1])
    print(f"C over {name}: C sr={superregular(C)[0]} Crev sr={superregular(Crev)[0]}")

# Y over F16 (1+a+a^4): diagonals (1, a^12, a^4, 1, a^6)
Y = toeplitz(F16, [1, p(F16, 12), p(F16, 4), 1, p(F16, 6)])
Yrev = toeplitz(F16, [p(F16, 6), 1, p(F16, 4), p(F16, 12), 1])
print("Y sr:", superregular(Y)[0], "Y_rev sr:", superregular(Yrev)[0], " (expect True True)")
Yinv = Y.inverse()
b_diag = [int(Yinv.arr[i, 0]) for i in range(5)]
print("Y^-1 diagonals:", [f"a^{F16.log(v)}" if v else "0" for v in b_diag],
      " expect ascending (1?, ...) rev = (a14, a13, a14, a12, 1)")
Yinvrev = toeplitz(F16, b_diag[::-1])
expect_rev = [p(F16, 14), p(F16, 13), p(F16, 14), p(F16, 12), 1]
print("(Y^-1)_rev diagonals match printed:", [int(v) for v in Yinvrev.arr[:, 0]] == expect_rev)
okyr, _, wityr = superregular(Yinvrev)
print("(Y^-1)_rev superregular:", okyr, "witness:", wityr, " (expect False)")
mz2 = Yinvrev.minor_det(one_based([2, 3, 4, 5]), one_based([1, 2, 3, 4]))
print("(Y^-1)_rev minor (2..5)x(1..4) =", int(mz2), " (expect 0)")
