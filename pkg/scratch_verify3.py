# Which field/modulus makes the C and S examples work?
import numpy as np
from convfec.gf import gf2m, irreducible_polynomials
from convfec.linalg import FieldMatrix
from convfec._kernels import _proper_minors_dfs

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
    return bool(ok), (list(map(int, wr[:wl])), list(map(int, wc[:wl])))

print("=== C with exponents (4, 6, 3) over every GF(16) modulus ===")
for mod in irreducible_polynomials(2, 4):
    F = gf2m(4, mod)
    d = [1, F.pow(2, 4), F.pow(2, 6), F.pow(2, 3)]
    c_ok = sr(toeplitz(F, d))[0]
    cr_ok = sr(toeplitz(F, d[::-1]))[0]
    print(f"  modulus {mod}: C sr={c_ok}, C_rev sr={cr_ok}")

print("=== S diagonals (0, 19, 16, 20, 5, 16 exps) over every GF(32) modulus ===")
for mod in irreducible_polynomials(2, 5):
    F = gf2m(5, mod)
    d = [1] + [F.pow(2, e) for e in (19, 16, 20, 5, 16)]
    lo_ok, lo_wit = sr(toeplitz(F, d))
    rv_ok, _ = sr(toeplitz(F, d[::-1]))
    print(f"  modulus {mod}: S sr={lo_ok} wit={lo_wit if not lo_ok else ''} S_rev sr={rv_ok}")

print("=== Is S a product-construction matrix for some base alpha? ===")
F32g = gf2m(5, (1, 0, 1, 1, 1, 1))
target = [1] + [F32g.pow(2, e) for e in (19, 16, 20, 5, 16)]
def product_diag(spec, alpha, l):
    coeffs = [1]
    for i in range(l):
        ai = spec.pow(alpha, i)
        new = coeffs + [0]
        for j in range(len(coeffs)):
            new[j + 1] ^= spec.mul(coeffs[j], ai)
        coeffs = new
    return coeffs
for e in range(1, 31):
    if product_diag(F32g, F32g.pow(2, e), 5) == target:
        print("  S = product construction with alpha = g^%d" % e)
# also check across all moduli
for mod in irreducible_polynomials(2, 5):
    F = gf2m(5, mod)
    tgt = [1] + [F.pow(2, e) for e in (19, 16, 20, 5, 16)]
    for e in range(1, 31):
        if product_diag(F, F.pow(2, e), 5) == tgt:
            print(f"  modulus {mod}: S = product with alpha=g^{e}")
