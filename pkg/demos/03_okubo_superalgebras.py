"""Okubo superalgebras in characteristic 2: twist the split Cayley
superalgebra by an order-3 automorphism, check the symmetric composition
identity, and inspect the twisting automorphism's fingerprints.

Run with:  python demos/03_okubo_superalgebras.py
"""

from compsuper import (
    GF,
    check_remark_identities,
    check_symmetric,
    find_para_units,
    okubo_super,
)

for field, variant in ((GF(2), "nst"), (GF(4), "omega")):
    S, phi, cb, C = okubo_super(field, variant)
    print(f"== {S.name} over {field.name} ==")
    u1 = cb.vectors["u1"]
    print("  phi(u1) =", S.fmt(phi.apply(u1)), " phi^3 = 1:", phi.power(3).is_identity())
    r = check_symmetric(S)
    print("  associative bilinear form b(x*y, z) = b(x, y*z):", r.passed)
    r = check_remark_identities(S, phi, C)
    print("  x.y = (1*x)*(y*1) and phi(x) = conj(x)*1:", r.passed)
    units = find_para_units(S)
    print("  para-units:", units if units else "none (the twist is not para-Hurwitz)")
    print()

# contrast: the para-Hurwitz twin has a unique para-unit
from compsuper import para_hurwitz, split_hurwitz

C, _ = split_hurwitz(8, GF(2))
P = para_hurwitz(C)
print("para-Hurwitz split Cayley over GF(2): para-units =",
      [P.fmt(e) for e in find_para_units(P)])
