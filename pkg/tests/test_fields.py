from fractions import Fraction

import pytest

from compsuper.fields import (
    GF,
    QQ,
    DivisionByZero,
    InfiniteField,
    MixedFields,
    Scalar,
    enumerate_elements,
    field_arith,
    field_from_string,
    primitive_cube_root,
)

FINITE = [GF(2), GF(3), GF(4), GF(9)]


def test_mod3_addition():
    F = GF(3)
    assert F.add(2, 2) == 1


def test_gf4_defining_relation():
    F = GF(4)
    x = F.parse_elt("x")
    assert F.mul(x, x) == F.parse_elt("x+1")


def test_gf9_inverse_of_x_by_exhaustion():
    F = GF(9)
    x = F.parse_elt("x")
    # independent oracle: scan all nine elements for the inverse
    hits = [y for y in F.elements() if F.mul(x, y) == F.one]
    assert hits == [F.parse_elt("2x")]
    assert F.inv(x) == F.parse_elt("2x")


@pytest.mark.parametrize("F", FINITE, ids=lambda f: f.name)
def test_field_axioms_exhaustive(F):
    elts = list(F.elements())
    assert len(elts) == F.order
    for a in elts:
        for b in elts:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in elts:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    # nonzero elements form a group under multiplication
    nz = [a for a in elts if a != F.zero]
    for a in nz:
        assert F.mul(a, F.inv(a)) == F.one
        assert sorted(F.mul(a, b) for b in nz) == sorted(nz)


def test_enumerate_elements_counts():
    assert [s.value for s in enumerate_elements(GF(2))] == [0, 1]
    assert len(enumerate_elements(GF(4))) == 4
    assert len(enumerate_elements(GF(9))) == 9
    with pytest.raises(InfiniteField):
        enumerate_elements(QQ)


def test_primitive_cube_roots():
    w = primitive_cube_root(GF(4))
    assert w is not None and w.value == GF(4).parse_elt("x")
    assert primitive_cube_root(GF(2)) is None
    assert primitive_cube_root(GF(3)) is None
    assert primitive_cube_root(GF(9)) is None
    assert primitive_cube_root(QQ) is None
    w7 = primitive_cube_root(GF(7))
    assert w7.value == 2 and pow(2, 3, 7) == 1


@pytest.mark.parametrize("q", [4, 7, 13])
def test_cube_root_satisfies_quadratic(q):
    F = GF(q)
    w = F.primitive_cube_root_raw()
    if F.char == 3:
        assert w is None
    elif w is not None:
        assert F.add(F.add(F.mul(w, w), w), F.one) == F.zero


def test_scalar_arithmetic_and_errors():
    a = Scalar(GF(3), 2)
    b = Scalar(GF(3), 2)
    assert (a + b).value == 1
    assert (a * b).value == 1
    assert (-a).value == 1
    assert field_arith(a, b, "mul").value == 1
    assert field_arith(a, None, "inv").value == 2
    with pytest.raises(MixedFields):
        a + Scalar(GF(2), 1)
    with pytest.raises(DivisionByZero):
        Scalar(GF(3), 0).inv()
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))


def test_rational_field():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)
    assert QQ.char == 0 and QQ.order is None


def test_field_from_string_and_fmt():
    for name in ("Q", "GF(2)", "GF(3)", "GF(4)", "GF(9)"):
        assert field_from_string(name).name == name
    F = GF(9)
    for a in F.elements():
        assert F.parse_elt(F.fmt(a)) == a


def test_characteristic_reported():
    assert GF(2).char == 2 and GF(4).char == 2
    assert GF(3).char == 3 and GF(9).char == 9 // 3


def test_quadratic_modulus_must_be_irreducible():
    from compsuper.fields import FieldError, QuadraticField

    with pytest.raises(FieldError):
        QuadraticField(3, (2, 0))  # x^2 + 2 = (x-1)(x+1) over GF(3)
