"""The integer machinery behind universal grading groups: Smith normal
form with unimodular transforms, and abelian group presentations built
from support relations.

Run with:  python demos/05_presentations_and_smith_form.py
"""

from compsuper.abelian import (
    invariant_factors_by_minors,
    presentation_to_group,
    smith_normal_form,
)

M = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
D, U, V = smith_normal_form(M)
print("M =", M)
print("D =", [list(r) for r in D])
print("U =", [list(r) for r in U])
print("V =", [list(r) for r in V])
print("gcd-of-minors oracle:", invariant_factors_by_minors(M))

# the universal group of the 5-grading: generators are the five degrees,
# relations come from the nonzero component products
rels = [
    (1, 0, 0, 0, 0),   # degree-0 component is idempotent
    (-1, 1, 1, 0, 0),  # (deg 1)(deg -1) lands in degree 0
    (0, 2, 0, -1, 0),  # (deg 1)(deg 1) lands in degree 2
    (0, 0, 2, 0, -1),
    (-1, 0, 0, 1, 1),
]
G, proj = presentation_to_group(5, rels)
print("\n5-grading support presentation:", G)
print("generator images:", [str(p) for p in proj])

# a torsion example: both generators squared to zero
G2, proj2 = presentation_to_group(2, [(2, 0), (0, 2)])
print("\n<a, b | 2a, 2b> =", G2, "|", [str(p) for p in proj2])
