# One-time desk-code searches; results get frozen into registry.py.
import time
import numpy as np
from convfec.gf import gf2m, irreducible_polynomials
from convfec.construct import search_random_code, search_code
from convfec.convcode import is_complete_mdp, is_reverse_mdp

def first_irreducible(m):
    return next(iter(irreducible_polynomials(2, m)))

def enc(coeffs):
    v = 0
    for i, c in enumerate(coeffs):
        v |= c << i
    return v

for m in (12, 16, 18, 20):
    t0 = time.time()
    mod = first_irreducible(m)
    print(f"deg {m}: modulus {hex(enc(mod))} found in {time.time()-t0:.2f}s")

targets = [
    ("rate 2/5", 5, 2, 3, 16, "complete-mdp"),
    ("rate 1/2", 2, 1, 3, 16, "complete-mdp"),
    ("rate 3/5", 5, 3, 2, 16, "complete-mdp"),
    ("rate 2/3", 3, 2, 3, 16, "complete-mdp"),
    ("rate 7/10", 10, 7, 3, 16, "complete-mdp"),
]
for label, n, k, d, m, pred in targets:
    mod = first_irreducible(m)
    spec = gf2m(m, mod)
    t0 = time.time()
    try:
        code, tries = search_random_code(n, k, d, spec, predicate=pred, seed=2024, max_tries=200)
        dt = time.time() - t0
        coeffs = [[list(map(int, row)) for row in c] for c in code.parity.coeffs]
        print(f"{label} ({n},{k},{d}) GF(2^{m}): found in {tries} tries, {dt:.1f}s")
        print(f"   modulus={hex(enc(mod))} coeffs={coeffs}")
    except Exception as e:
        print(f"{label}: FAILED {e} after {time.time()-t0:.1f}s")
