import pytest

from compsuper import linalg
from compsuper.abelian import AbGroup, AbHom
from compsuper.constructions import b12, b42, split_hurwitz, super_split_cayley
from compsuper.fields import GF
from compsuper.gradings import (
    TripleNotZeroSum,
    coarsenings_enum,
    gamma_equiv,
    gamma_grading_b12,
    gamma_grading_b42,
    gamma_grading_dim8,
    grading_from_components,
    grading_from_degrees,
    induce,
    is_refinement,
    main_grading,
    over_universal_group,
    support,
    trivial_grading,
    universal_group,
    validate,
)

F2, F3 = GF(2), GF(3)
Z = AbGroup(1)
Z2 = AbGroup(0, (2,))
ZZ = AbGroup(2)


def _cartan(C, cb):
    gam = (ZZ.element(1, 0), ZZ.element(0, 1), ZZ.element(-1, -1))
    return gamma_grading_dim8(C, cb, ZZ, gam)


def test_validate_cartan_and_eq1():
    C, cb = super_split_cayley(F2)
    ok, _ = validate(_cartan(C, cb))
    assert ok
    B = b12(F3)
    ok, _ = validate(gamma_grading_b12(B, Z, Z.element(1)))
    assert ok


def test_validate_rejects_bad_degrees():
    B = b12(F3)
    # u and v both in degree 1: u.v = 1 would have to land in degree 2
    bad = grading_from_degrees(B, Z, [Z.element(0), Z.element(1), Z.element(1)])
    ok, witness = validate(bad)
    assert not ok and witness is not None


def test_support():
    B4 = b42(F3)
    g = gamma_grading_b42(B4, Z, Z.element(1))
    assert sorted(d.coords[0] for d in support(g)) == [-2, -1, 0, 1, 2]
    assert [d.coords for d in support(trivial_grading(B4))] == [()]
    mg = main_grading(B4)
    assert sorted(d.coords[0] for d in support(mg)) == [0, 1]


def test_universal_groups():
    B4 = b42(F3)
    g2 = gamma_grading_b42(B4, Z, Z.element(1))
    G, proj, inj = universal_group(g2)
    assert str(G) == "Z" and inj
    from compsuper.catalog import build_entry

    _, g4 = build_entry("eq4", F3)
    G, _, inj = universal_group(g4)
    assert str(G) == "Z3" and inj
    _, g6 = build_entry("eq6", F2)
    G, _, inj = universal_group(g6)
    assert str(G) == "Z2^2" and inj


def test_universal_group_noninjective_flag():
    # set-decomposition {Fe1, Fe2} of the split 2-dimensional algebra: both
    # parts are idempotent, so both degrees die in the universal group
    A, _ = split_hurwitz(2, F2)
    g = grading_from_degrees(A, Z2, [Z2.element(0), Z2.element(1)])
    ok, _ = validate(g)
    assert not ok  # e2.e2 = e2 cannot land in the degree-0 component
    G, proj, inj = universal_group(g)  # as a set grading it still presents
    assert not inj and str(G) == "0"


def test_induce():
    C, cb = super_split_cayley(F2)
    cartan = _cartan(C, cb)
    add = AbHom(ZZ, Z, (Z.element(1), Z.element(1)))
    five = induce(cartan, add)
    ok, _ = validate(five)
    assert ok
    assert sorted(d.coords[0] for d in support(five)) == [-2, -1, 0, 1, 2]
    from compsuper.catalog import build_entry

    _, cor1eq7 = build_entry("cor1eq7", F2)
    assert five.component_keys() == cor1eq7.component_keys()
    # zero map gives the trivial grading
    zero = AbHom(ZZ, Z, (Z.element(0), Z.element(0)))
    assert induce(cartan, zero).component_keys() == trivial_grading(C).component_keys()
    # eq1 through Z -> Z2 gives the main grading
    B = b12(F3)
    eq1 = gamma_grading_b12(B, Z, Z.element(1))
    to2 = AbHom(Z, Z2, (Z2.element(1),))
    assert induce(eq1, to2).component_keys() == main_grading(B).component_keys()


def test_induce_identity_is_identity():
    B = b12(F3)
    eq1 = gamma_grading_b12(B, Z, Z.element(1))
    ident = AbHom(Z, Z, (Z.element(1),))
    assert induce(eq1, ident).comps == eq1.comps


def test_is_refinement():
    from compsuper.catalog import build_entry

    _, eq2 = build_entry("eq2", F3)
    _, eq3 = build_entry("eq3", F3)
    _, eq4 = build_entry("eq4", F3)
    assert is_refinement(eq2, eq3)
    assert is_refinement(eq2, trivial_grading(eq2.algebra))
    assert not is_refinement(eq3, eq4)


def test_coarsenings_eq2():
    from compsuper.catalog import build_entry

    _, eq2 = build_entry("eq2", F3)
    got = {g.component_keys(): str(g.group) for g in coarsenings_enum(eq2)}
    assert len(got) == 5
    assert sorted(got.values()) == ["0", "Z", "Z2", "Z3", "Z4"]


def test_coarsenings_eq1_and_trivial():
    B = b12(F3)
    eq1 = gamma_grading_b12(B, Z, Z.element(1))
    got = {str(g.group) for g in coarsenings_enum(eq1)}
    assert got == {"Z", "Z2", "0"}
    t = trivial_grading(B)
    assert [g.component_keys() for g in coarsenings_enum(t)] == [t.component_keys()]


def test_universal_of_induced_never_grows():
    """Inducing and recomputing gives a group the original universal group
    surjects onto (checked on the support generators)."""
    C, cb = super_split_cayley(F2)
    cartan = _cartan(C, cb)
    add = AbHom(ZZ, Z, (Z.element(1), Z.element(1)))
    five = induce(cartan, add)
    G5, proj5, _ = universal_group(five)
    # the degree map of the coarsening factors through the original one
    G2, proj2, _ = universal_group(cartan)
    assert str(G2) == "Z^2" and str(G5) == "Z"


def test_gamma_grading_dim8():
    C, cb = super_split_cayley(F2)
    G = AbGroup(0, (2, 2))
    gam = (G.element(1, 0), G.element(0, 1), G.element(1, 1))
    g = gamma_grading_dim8(C, cb, G, gam)
    ok, _ = validate(g)
    assert ok
    zero_triple = (G.zero(), G.zero(), G.zero())
    t = gamma_grading_dim8(C, cb, G, zero_triple)
    assert t.component_keys() == trivial_grading(C).component_keys()
    with pytest.raises(TripleNotZeroSum):
        gamma_grading_dim8(C, cb, G, (G.element(1, 0), G.element(0, 1), G.element(0, 1)))


def test_gamma_grading_cd4():
    from compsuper.constructions import super_split_quaternion
    from compsuper.gradings import gamma_grading_cd4

    A, cb = super_split_quaternion(F2)
    g = gamma_grading_cd4(A, cb, Z, Z.element(1))
    ok, _ = validate(g)
    assert ok
    G, _, inj = universal_group(g)
    assert str(G) == "Z" and inj


def test_gamma_equiv():
    g1, g2, g3 = Z.element(1), Z.element(2), Z.element(-3)
    assert gamma_equiv((g1, g2, g3), (g2, g1, g3))
    assert gamma_equiv((g1, g2, g3), (-g1, -g2, -g3))
    a, b, c = Z.element(1), Z.element(1), Z.element(-2)
    assert not gamma_equiv((a, b, c), (a, c, b))


def test_over_universal_group():
    # relabelling by the universal group recovers the full Z-grading from a
    # Z6-labelled copy with the same three components
    B = b12(F3)
    G6 = AbGroup(0, (6,))
    g = gamma_grading_b12(B, G6, G6.element(2))
    gu, inj = over_universal_group(g)
    assert inj and str(gu.group) == "Z"
    assert gu.component_keys() == g.component_keys()
    # with merged components the universal group shrinks: order-3 labels
    g3 = gamma_grading_b12(B, G6, G6.element(3))  # u, v share degree 3
    gu3, inj3 = over_universal_group(g3)
    assert inj3 and str(gu3.group) == "Z2"


def test_grading_json_round_trip_fields():
    from compsuper.catalog import build_entry

    _, g = build_entry("cor1eq12", F2)
    data = g.to_json()
    assert data["group"] == "Z x Z2"
    assert all(len(c["coords"]) == 2 for c in data["components"])
