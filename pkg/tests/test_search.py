import pytest

from compsuper import linalg
from compsuper.abelian import AbGroup
from compsuper.constructions import (
    b12,
    b12_lambda,
    okubo_super,
    split_hurwitz,
    super_split_cayley,
    tau_nst,
)
from compsuper.fields import GF
from compsuper.gradings import (
    coarsenings_enum,
    gamma_grading_b12,
    grading_from_components,
    grading_from_degrees,
    main_grading,
    trivial_grading,
    validate,
)
from compsuper.search import (
    BudgetExhausted,
    SearchBudget,
    enumerate_all_gradings,
    enumerate_automorphisms,
    find_graded_map,
    fine_check,
)
from compsuper.superalgebra import SuperAlgebra, is_morphism

F2, F3, F4 = GF(2), GF(3), GF(4)
Z = AbGroup(1)
Z6 = AbGroup(0, (6,))


def test_find_graded_map_b12():
    B = b12(F3)
    g1 = gamma_grading_b12(B, Z6, Z6.element(1))
    g5 = gamma_grading_b12(B, Z6, Z6.element(5))
    g2 = gamma_grading_b12(B, Z6, Z6.element(2))
    f = find_graded_map(B, g1, B, g5)
    assert f is not None
    # the map exchanges the two odd lines: u -> v, v -> -u up to scalars
    assert f.apply(B.basis_vector(1))[2] != F3.zero
    assert find_graded_map(B, g1, B, g2) is None
    ident = find_graded_map(B, g1, B, g1)
    assert ident is not None


def test_found_map_inverts():
    B = b12(F3)
    g1 = gamma_grading_b12(B, Z6, Z6.element(1))
    g5 = gamma_grading_b12(B, Z6, Z6.element(5))
    f = find_graded_map(B, g1, B, g5)
    inv = f.inverse()
    checked = is_morphism(inv, ("algebra-hom", "parity-preserving", "bijective"))
    from compsuper.search import try_verify_graded

    assert try_verify_graded(checked, g5, g1) is not None


def test_equivalence_mode():
    from compsuper.catalog import build_entry

    _, eq3 = build_entry("eq3", F3)
    _, eq4 = build_entry("eq4", F3)
    _, eq2 = build_entry("eq2", F3)
    assert find_graded_map(eq2.algebra, eq3, eq3.algebra, eq4, mode="equivalence") is None
    assert find_graded_map(eq2.algebra, eq2, eq2.algebra, eq2, mode="equivalence") is not None


def test_equivalence_mode_across_groups():
    # same components, different ambient groups: equivalent via the identity
    B = b12(F3)
    g_z = gamma_grading_b12(B, Z, Z.element(1))
    g_z6 = gamma_grading_b12(B, Z6, Z6.element(1))
    assert find_graded_map(B, g_z, B, g_z6, mode="equivalence") is not None
    # isomorphism mode requires the same group, hence the same degrees
    assert find_graded_map(B, g_z, B, g_z6, mode="isomorphism") is None


def test_enumerate_automorphisms_unconstrained():
    A, _ = split_hurwitz(2, F2)
    autos = enumerate_automorphisms(A)
    images = sorted(tuple(f.images) for f in autos)
    ident = (A.basis_vector(0), A.basis_vector(1))
    swap = (A.basis_vector(1), A.basis_vector(0))
    assert images == sorted([ident, swap])


def test_enumerate_automorphisms_budget():
    C, _ = super_split_cayley(F2)
    with pytest.raises(BudgetExhausted):
        enumerate_automorphisms(C, budget=SearchBudget(10))


def test_graded_automorphisms_of_b12():
    B = b12(F3)
    eq1 = gamma_grading_b12(B, Z, Z.element(1))
    autos = enumerate_automorphisms(B, constraints=eq1)
    # u -> c u, v -> c^{-1} v for c in GF(3)^*
    assert len(autos) == 2
    for f in autos:
        c = f.images[1][1]
        assert f.images[2][2] == F3.inv(c)


def test_tau_nst_is_a_graded_automorphism_of_the_five_grading():
    C, cb = super_split_cayley(F2)
    g = grading_from_degrees(
        C,
        Z,
        [Z.element(0), Z.element(0), Z.element(1), Z.element(1),
         Z.element(-2), Z.element(-1), Z.element(-1), Z.element(2)],
    )
    ok, _ = validate(g)
    assert ok
    autos = enumerate_automorphisms(C, constraints=g)
    t = tau_nst(cb)
    assert any(f.images == t.images for f in autos)


def test_enumerate_all_gradings_b12_lambda():
    S, _, _ = b12_lambda(F3, 1)
    res = enumerate_all_gradings(S)
    assert res.complete
    keys = {g.component_keys() for g in res.gradings}
    assert keys == {main_grading(S).component_keys(), trivial_grading(S).component_keys()}


def test_enumerate_all_gradings_b12_closure():
    B = b12(F3)
    res = enumerate_all_gradings(B)
    assert res.complete
    found = {g.component_keys() for g in res.gradings}
    # closed under coarsening
    for g in res.gradings:
        for c in coarsenings_enum(g):
            assert c.component_keys() in found
    # equals the coarsening closure of the degree gradings over all
    # symplectic bases of the odd part
    closure = set()
    lines = [(1, 0), (0, 1), (1, 1), (1, 2)]
    for i, (a, b) in enumerate(lines):
        for j, (c, d) in enumerate(lines):
            if i == j:
                continue
            u = (F3.zero, F3.from_int(a), F3.from_int(b))
            v = (F3.zero, F3.from_int(c), F3.from_int(d))
            g = grading_from_components(
                B, Z,
                [(Z.element(0), [B.basis_vector(0)]), (Z.element(1), [u]), (Z.element(-1), [v])],
            )
            ok, _ = validate(g)
            if not ok:
                continue
            for cg in coarsenings_enum(g):
                closure.add(cg.component_keys())
    assert found == closure


def test_enumerate_all_gradings_one_dimensional():
    F = F3
    A = SuperAlgebra(F, (0,), [[[F.one]]], [F.one], [[F.from_int(2)]], name="F")
    res = enumerate_all_gradings(A)
    assert res.complete and len(res.gradings) == 1
    assert res.gradings[0].component_keys() == trivial_grading(A).component_keys()


def test_fine_check_cartan_and_eq5():
    from compsuper.catalog import build_entry

    for id, f in (("eq7", F2), ("eq5", F4)):
        _, g = build_entry(id, f)
        status, _ = fine_check(g)
        assert status == "fine"


def test_fine_check_main_dim8_refinable():
    C, _ = super_split_cayley(F2)
    status, witness = fine_check(main_grading(C))
    assert status == "refinable"
    ok, _ = validate(witness)
    assert ok
    # the witness splits the odd part into two paired 2-dimensional pieces
    assert sorted(witness.dims()) == [2, 2, 4]


def test_fine_check_trivial_b12():
    B = b12(F3)
    status, witness = fine_check(trivial_grading(B))
    assert status == "refinable"
    assert witness.component_keys() == main_grading(B).component_keys()


def test_fine_check_budget():
    C, _ = super_split_cayley(F4)
    with pytest.raises(BudgetExhausted):
        fine_check(main_grading(C), budget=SearchBudget(3))


def test_complement_enumeration_matches_scan_oracle():
    """The graph-of-linear-maps complement enumeration agrees with the
    brute-force subspace-pair scan."""
    from compsuper import linalg
    from compsuper.fields import GF

    for q, d in ((2, 2), (2, 3), (3, 2), (4, 2), (2, 4)):
        F = GF(q)
        basis = [tuple(F.one if i == j else F.zero for i in range(d)) for j in range(d)]
        got = set()
        for w1, w2 in linalg.complementary_pairs(F, basis):
            assert linalg.rank(F, list(w1) + list(w2)) == d
            key = frozenset((linalg.span_key(F, w1), linalg.span_key(F, w2)))
            assert key not in got
            got.add(key)
        oracle = set()
        for k in range(1, d):
            for w1 in linalg.subspaces_of_span(F, basis, k):
                for w2 in linalg.subspaces_of_span(F, basis, d - k):
                    if linalg.rank(F, list(w1) + list(w2)) == d:
                        oracle.add(frozenset((linalg.span_key(F, w1), linalg.span_key(F, w2))))
        assert got == oracle


def test_dimension_guard():
    from compsuper.search import DimensionTooLarge

    C, _ = super_split_cayley(F2)
    with pytest.raises(DimensionTooLarge):
        enumerate_all_gradings(C)


def test_find_graded_map_budget_exhaustion_is_distinct_from_none():
    C, cb = super_split_cayley(F4)
    from compsuper.abelian import AbGroup
    from compsuper.gradings import gamma_grading_dim8

    G = AbGroup(0, (4,))
    t = (G.element(1), G.element(2), G.element(1))
    g = gamma_grading_dim8(C, cb, G, t)
    # force the search past the identity fast path with two distinct
    # gradings, and give it almost no budget
    t2 = (G.element(2), G.element(1), G.element(1))
    g2 = gamma_grading_dim8(C, cb, G, t2)
    with pytest.raises(BudgetExhausted):
        find_graded_map(C, g, C, g2, budget=SearchBudget(2))


def test_induced_coarsenings_of_the_cartan_grading_always_validate():
    """Property: any homomorphic relabelling of the Cartan grading is a
    valid grading whose universal group separates components."""
    from hypothesis import given, settings
    from hypothesis import strategies as st

    from compsuper.abelian import AbGroup, AbHom
    from compsuper.gradings import gamma_grading_dim8, induce, universal_group

    C, cb = super_split_cayley(F2)
    ZZ = AbGroup(2)
    cartan = gamma_grading_dim8(
        C, cb, ZZ, (ZZ.element(1, 0), ZZ.element(0, 1), ZZ.element(-1, -1))
    )
    targets = [AbGroup(0, (4,)), AbGroup(0, (2, 2)), AbGroup(0, (6,)), AbGroup(1)]

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 3), st.data())
    def run(ti, data):
        G = targets[ti]
        gens = list(G.elements()) if G.is_finite() else [G.element(k) for k in range(-3, 4)]
        a = data.draw(st.sampled_from(gens))
        b = data.draw(st.sampled_from(gens))
        hom = AbHom(ZZ, G, (a, b))
        g = induce(cartan, hom)
        ok, _ = validate(g)
        assert ok
        _, _, injective = universal_group(g)
        assert injective

    run()
