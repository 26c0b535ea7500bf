# Validate guard-window conditions: for the complete-MDP (3,1,1) code,
# a pattern of erasures in one (nu+L+1)n window is uniquely solvable
# iff  total <= (L+1)(n-k)  and  first sn / last sn prefixes hold <= s(n-k).
import itertools
import numpy as np
from convfec.gf import gf2m
from convfec.linalg import FieldMatrix

F = gf2m(7, (1, 1, 0, 1, 0, 0, 1, 1))
def P(e): return F.pow(2, e)

H0 = np.array([[P(76), P(62), 1], [P(73), P(76), P(62)]], dtype=np.uint32)
H1 = np.array([[P(77), P(85), P(76)], [P(37), P(77), P(85)]], dtype=np.uint32)
n, k, nu, L = 3, 1, 1, 1
nk = n - k
W = (nu + L + 1) * n        # 9
budget = (L + 1) * nk       # 4

A = np.zeros(((L + 1) * nk, W), dtype=np.uint32)
for s in range(L + 1):
    for i in range(nu + 1):
        A[s * nk:(s + 1) * nk, (s + nu - i) * n:(s + nu - i + 1) * n] = [H0, H1][i]
Am = FieldMatrix(F, A)

def conditions(E):
    if len(E) > budget:
        return False
    for s in range(1, L + 2):
        pre = sum(1 for e in E if e < s * n)
        suf = sum(1 for e in E if e >= W - s * n)
        if pre > s * nk or suf > s * nk:
            return False
    return True

mismatch = 0
total = 0
for r in range(0, W + 1):
    for E in itertools.combinations(range(W), r):
        total += 1
        if len(E) == 0:
            continue
        cols = Am.submatrix(list(range((L + 1) * nk)), list(E))
        solvable = cols.rank() == len(E)
        cond = conditions(E)
        if cond != solvable:
            mismatch += 1
            if mismatch < 8:
                print("MISMATCH", E, "cond", cond, "solvable", solvable)
print(f"patterns: {total}, mismatches: {mismatch}")
