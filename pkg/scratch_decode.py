# Decoder smoke tests on the paper's example codes.
import numpy as np
from convfec.gf import gf2m
from convfec.convcode import ConvCode, PolyMatrix, is_mdp, is_reverse_mdp, is_complete_mdp
from convfec.decoder import (
    encode_stream, recover_sequence, forward_window, backward_window,
    guard_recover, check_stream,
)

F32 = gf2m(5, (1, 0, 1, 0, 0, 1))
def P(F, e): return F.pow(2, e)

H = PolyMatrix(F32, [
    [[1, P(F32, 15)]],
    [[P(F32, 25), P(F32, 10)]],
    [[P(F32, 5), P(F32, 3)]],
])
code = ConvCode(2, 1, 1, parity=H)
print("code L =", code.L, "nu =", code.nu, "warnings:", code.warnings)
print("is_mdp:", is_mdp(code).ok, " is_reverse_mdp:", is_reverse_mdp(code).ok)

st = encode_stream(code, 12, seed=7)
print("encoded stream valid:", check_stream(code, st))

# erase 3 symbols in one L-window (budget 3), decode forward only
tx = st.values.copy()
erased = [8, 9, 11]
rx = st.erase(erased)
out, rep = recover_sequence(code, rx, strategy="forward")
print("forward recovery:", rep.recovered_positions, "unresolved:", rep.unresolved_positions,
      "values match:", np.array_equal(out.values, tx), "phi:", rep.phi)

# random heavier test incl backward
rng = np.random.default_rng(3)
ok_all = True
for trial in range(200):
    stv = encode_stream(code, 14, seed=100 + trial)
    mask = rng.random(stv.num_symbols) < 0.25
    rx = stv.with_pattern(~mask)
    # poison erased values to prove they are never read
    poisoned = rx.values.copy()
    poisoned[~rx.known] = rng.integers(0, 32, size=int((~rx.known).sum()))
    rx2 = type(rx)(rx.spec, rx.n, poisoned, rx.known)
    out, rep = recover_sequence(code, rx2, strategy="full")
    good = all(out.values[p] == stv.values[p] for p in rep.recovered_positions)
    ok_all &= good
    out1, rep1 = recover_sequence(code, rx, strategy="full")
    ok_all &= np.array_equal(out.values, out1.values)
print("200 random trials sound + opaque-erasure invariant:", ok_all)

# complete-MDP (3,1,1) over F128
F128 = gf2m(7, (1, 1, 0, 1, 0, 0, 1, 1))
Hc = PolyMatrix(F128, [
    [[P(F128, 76), P(F128, 62), 1], [P(F128, 73), P(F128, 76), P(F128, 62)]],
    [[P(F128, 77), P(F128, 85), P(F128, 76)], [P(F128, 37), P(F128, 77), P(F128, 85)]],
])
codec = ConvCode(3, 1, 1, parity=Hc)
print("complete:", is_complete_mdp(codec).ok, "L:", codec.L, "nu:", codec.nu)
stc = encode_stream(codec, 9, seed=5)
print("encoded complete stream valid:", check_stream(codec, stc))
# guard recovery in the middle window [3..5] with <= 4 erasures well distributed
rxc = stc.erase([9, 10, 13, 16])
outc, comm = guard_recover(codec, rxc, 3)
print("guard committed:", comm, "values ok:",
      all(outc.values[p] == stc.values[p] for p in comm))

# backward window: erase near the start, guard after
rxb = stc.erase([0, 2])
outb, commb = backward_window(codec, rxb, 0, 1)
print("backward committed:", commb, "ok:", all(outb.values[p] == stc.values[p] for p in commb))
