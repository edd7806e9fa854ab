"""Tour of the split Cayley algebra: the canonical multiplication table,
the norm, conjugation, and the Peirce decomposition of an idempotent.

Run with:  python demos/01_split_cayley_and_its_norm.py
"""

from compsuper import GF, canonical_basis_find, check_hurwitz, peirce_decomposition, split_hurwitz

F = GF(3)
C, cb = split_hurwitz(8, F)
print(f"built {C!r}")
print("basis:", ", ".join(C.basis_names))

e1 = cb.vectors["e1"]
u1, u2, v1 = cb.vectors["u1"], cb.vectors["u2"], cb.vectors["v1"]
print("\nsome products from the table:")
print("  u1 * u2 =", C.fmt(C.mul(u1, u2)))
print("  u1 * v1 =", C.fmt(C.mul(u1, v1)))
print("  e1 * u1 =", C.fmt(C.mul(e1, u1)))

print("\nnorm values:")
print("  q(e1) =", F.fmt(C.eval_q0(e1)), "  b(e1,e2) =", F.fmt(C.eval_b(e1, cb.vectors["e2"])))
print("  q(u1) =", F.fmt(C.eval_q0(u1)), "  b(u1,v1) =", F.fmt(C.eval_b(u1, v1)))

print("\nconjugation: conj(e1) =", C.fmt(C.conj(e1)), " conj(u1) =", C.fmt(C.conj(u1)))

r = check_hurwitz(C)
print(f"\nnorm multiplicativity q(xy) = q(x)q(y): {r.passed} ({r.mode}, {r.detail.get('pairs')} pairs)")

pd = peirce_decomposition(C, e1)
print("\nPeirce spaces of e1:")
print("  U =", [C.fmt(v) for v in pd.U])
print("  V =", [C.fmt(v) for v in pd.V])

# rebuild a canonical basis starting from an arbitrary isotropic vector
seed = C.mul(u1, C.conj(u2))  # some isotropic element
if C.eval_q0(seed) == F.zero and any(c != F.zero for c in seed):
    cb2 = canonical_basis_find(C, seed)
    print("\ncanonical basis from the seed", C.fmt(seed), ":")
    for nm in ("e1", "e2", "u1", "u2", "u3"):
        print(f"  {nm} ->", C.fmt(cb2.vectors[nm]))
