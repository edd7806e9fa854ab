import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compsuper.abelian import (
    AbGroup,
    AbHom,
    WrongGroup,
    _det_int,
    group_from_string,
    invariant_factors_by_minors,
    presentation_to_group,
    smith_normal_form,
)


def check_snf(M):
    D, U, V = smith_normal_form(M)
    m, n = len(M), len(M[0])
    # D = U M V by integer multiplication
    UM = [[sum(U[i][k] * M[k][j] for k in range(m)) for j in range(n)] for i in range(m)]
    UMV = [[sum(UM[i][k] * V[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
    assert [list(r) for r in D] == UMV
    assert abs(_det_int(U)) == 1
    assert abs(_det_int(V)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    assert all(d >= 0 for d in diag)
    return diag


def test_snf_diag_2_3():
    diag = check_snf([[2, 0], [0, 3]])
    assert diag == [1, 6]
    assert invariant_factors_by_minors([[2, 0], [0, 3]]) == [1, 6]


def test_snf_zero_and_identity():
    assert check_snf([[0, 0], [0, 0]]) == [0, 0]
    assert check_snf([[1, 0], [0, 1]]) == [1, 1]


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 6),
    st.integers(1, 6),
    st.data(),
)
def test_snf_random_matrices(m, n, data):
    M = [[data.draw(st.integers(-5, 5)) for _ in range(n)] for _ in range(m)]
    check_snf(M)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_matches_minor_gcd_oracle(m, n, data):
    M = [[data.draw(st.integers(-5, 5)) for _ in range(n)] for _ in range(m)]
    diag = check_snf(M)
    oracle = invariant_factors_by_minors(M)
    nonzero = [d for d in diag if d != 0]
    assert nonzero == oracle


def test_presentation_elementary():
    G, proj = presentation_to_group(2, [(2, 0), (0, 2)])
    assert str(G) == "Z2^2"
    assert sorted(p.coords for p in proj) == [(0, 1), (1, 0)]


def test_presentation_b42_five_grading_support():
    # generators (s0, s1, s-1, s2, s-2) with the product relations of the
    # 5-grading: s0 idempotent, s1+s-1 = s0, s1+s1 = s2, etc.
    rels = [
        (1, 0, 0, 0, 0),          # s0 + s0 = s0
        (-1, 1, 1, 0, 0),         # s1 + s-1 = s0
        (0, 2, 0, -1, 0),         # s1 + s1 = s2
        (0, 0, 2, 0, -1),         # s-1 + s-1 = s-2
        (-1, 0, 0, 1, 1),         # s2 + s-2 = s0
    ]
    G, proj = presentation_to_group(5, rels)
    assert str(G) == "Z"
    assert len({p.coords for p in proj}) == 5


def test_presentation_z3_grading_support():
    # generators (s0, s1, s2): s0 zero, s1+s1 = s2, s1+s2 = s0, s2+s2 = s1
    rels = [
        (1, 0, 0),
        (0, 2, -1),
        (-1, 1, 1),
        (0, -1, 2),
    ]
    G, proj = presentation_to_group(3, rels)
    assert str(G) == "Z3"
    assert len({p.coords for p in proj}) == 3


def test_presentation_round_trip():
    # defining relations of Z2 x Z4 x Z reproduce the same canonical form
    G, proj = presentation_to_group(3, [(2, 0, 0), (0, 4, 0)])
    assert str(G) == "Z x Z2 x Z4"
    assert G == AbGroup(1, (2, 4))


def test_group_strings():
    assert str(AbGroup(0, ())) == "0"
    assert str(AbGroup(1)) == "Z"
    assert str(AbGroup(2)) == "Z^2"
    assert str(AbGroup(0, (4,))) == "Z4"
    assert str(AbGroup(0, (2, 2))) == "Z2^2"
    assert str(AbGroup(1, (2,))) == "Z x Z2"
    assert str(AbGroup(0, (2, 4))) == "Z2 x Z4"
    for s in ("0", "Z", "Z^2", "Z4", "Z2^2", "Z x Z2", "Z2 x Z4"):
        assert str(group_from_string(s)) == s


def test_element_arithmetic_and_order():
    Z3 = AbGroup(0, (3,))
    one = Z3.element(1)
    assert (one + one + one).is_zero()
    assert one.order() == 3
    Z = AbGroup(1)
    assert Z.element(2).order() == 0
    Z24 = AbGroup(0, (2, 4))
    assert Z24.element(1, 2).order() == 2
    assert Z24.element(0, 3).order() == 4
    assert (-Z3.element(1)).coords == (2,)


def test_hom_apply():
    Z = AbGroup(1)
    Z4 = AbGroup(0, (4,))
    alpha = AbHom(Z, Z4, (Z4.element(1),))
    assert alpha(Z.element(2)) == Z4.element(2)
    Z2grp = AbGroup(2)
    add = AbHom(Z2grp, Z, (Z.element(1), Z.element(1)))
    assert add(Z2grp.element(1, 1)) == Z.element(2)
    with pytest.raises(WrongGroup):
        alpha(Z4.element(1))
    with pytest.raises(WrongGroup):
        # image of an order-2 generator must have order dividing 2
        AbHom(AbGroup(0, (2,)), Z4, (Z4.element(1),))


def test_invariant_chain_enforced():
    with pytest.raises(AssertionError):
        AbGroup(0, (2, 3))
    with pytest.raises(AssertionError):
        AbGroup(0, (1,))
