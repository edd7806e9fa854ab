"""When are two degree gradings isomorphic?  Exhaustive searches confirm
g = +-h for the small superalgebras, and expose that the twisted
dimension-8 product distinguishes triples the untwisted one identifies.

Run with:  python demos/04_isomorphism_conditions.py
"""

from compsuper import GF, b12, find_graded_map, gamma_grading_b12, gamma_grading_dim8
from compsuper.abelian import AbGroup
from compsuper.catalog import _family_algebra

F9, F4 = GF(9), GF(4)
Z6 = AbGroup(0, (6,))
B = b12(F9)
g1 = gamma_grading_b12(B, Z6, Z6.element(1))
g5 = gamma_grading_b12(B, Z6, Z6.element(5))
g2 = gamma_grading_b12(B, Z6, Z6.element(2))

f = find_graded_map(B, g1, B, g5)
print("B(1,2)/GF(9), Z6: degree 1 vs 5 ->", "isomorphic" if f else "proven none")
print("  map:", ", ".join(f"{n} -> {B.fmt(v)}" for n, v in zip(B.basis_names, f.images)))
print("B(1,2)/GF(9), Z6: degree 1 vs 2 ->",
      "isomorphic" if find_graded_map(B, g1, B, g2) else "proven none")

Z4 = AbGroup(0, (4,))
t1 = (Z4.element(0), Z4.element(1), Z4.element(3))
t2 = (Z4.element(0), Z4.element(3), Z4.element(1))
print("\ntriples", tuple(str(x) for x in t1), "vs", tuple(str(x) for x in t2))

ctx = _family_algebra("cd8", F4)
h1 = gamma_grading_dim8(ctx["algebra"], ctx["cb"], Z4, t1)
h2 = gamma_grading_dim8(ctx["algebra"], ctx["cb"], Z4, t2)
hit = find_graded_map(ctx["algebra"], h1, ctx["algebra"], h2)
print("  on the split Cayley superalgebra:", "isomorphic" if hit else "proven none")

ctx = _family_algebra("okubo-omega", F4)
o1 = gamma_grading_dim8(ctx["algebra"], ctx["cb"], Z4, t1)
o2 = gamma_grading_dim8(ctx["algebra"], ctx["cb"], Z4, t2)
hit = find_graded_map(ctx["algebra"], o1, ctx["algebra"], o2)
print("  on the Okubo superalgebra:     ", "isomorphic" if hit else "proven none")
print("\nThe twisted product remembers the eigenspaces of its automorphism:")
print("only the identity and the simultaneous swap-and-negate of the first")
print("two entries produce isomorphic gradings on the twist.")
