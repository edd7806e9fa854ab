"""Cayley-Dickson doubling in characteristic 2 and single-split fineness:
double the split quaternions into an 8-dimensional superalgebra, grade it
by the doubling pattern, and probe which gradings admit refinements.

Run with:  python demos/06_doubling_and_fineness.py
"""

from compsuper import (
    GF,
    cayley_dickson_super,
    check_hurwitz,
    fine_check,
    main_grading,
    split_hurwitz,
)
from compsuper.catalog import build_entry

F = GF(2)
Q, _ = split_hurwitz(4, F)
C = cayley_dickson_super(Q, F.one)
print(f"doubled algebra: {C!r}")
print("parity:", C.parity)
print("norm multiplicativity:", check_hurwitz(C).passed)

print("\nsingle-split fineness over GF(2):")
for id in ("eq6", "eq7", "eq5", "okuboeq1", "okuboeq6"):
    _, g = build_entry(id, F)
    status, _ = fine_check(g)
    print(f"  {id:10s} ({str(g.group):5s}, dims {sorted(g.dims())}): {status}")

_, mg = build_entry("main-cd8", F)
status, witness = fine_check(mg)
print(f"\nmain grading of the dimension-8 doubling: {status}")
if witness is not None:
    print("  witness over", witness.group, "with component dims", witness.dims())

# the nst twist is different: without a cube root of unity there are no
# 3-gradings, so its main grading survives every single split
_, mo = build_entry("main-okubo-nst", F)
print("main grading of the nst twist:", fine_check(mo)[0], "(under single splits)")

F4 = GF(4)
_, mo4 = build_entry("main-okubo-omega", F4)
status, witness = fine_check(mo4)
print("main grading of the omega twist over GF(4):", status,
      "-> witness dims", witness.dims() if witness else None)
