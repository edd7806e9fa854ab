"""Finite-dimensional superalgebras with a quadratic superform.

A SuperAlgebra stores a parity flag per basis vector, the structure
constants b_i b_j = sum_k c[i][j][k] b_k, the values q0(b_i) on the even
basis, and the full polar form b.  q0 values are stored separately from
the polar form because quadratic forms in characteristic 2 are not
determined by their polarization.
"""

import json
from dataclasses import dataclass, field as dc_field

from . import linalg
from .fields import field_from_string


class MixedAlgebras(ValueError):
    pass


class OddArgument(ValueError):
    pass


class NoUnit(ValueError):
    pass


class CheckFailed(ValueError):
    def __init__(self, flag, witness):
        super().__init__(f"check {flag!r} failed at {witness}")
        self.flag = flag
        self.witness = witness


class SuperAlgebra:
    """Immutable after construction; all operations are pure."""

    def __init__(self, field, parity, table, q0, polar, basis_names=None, name=""):
        self.field = field
        self.parity = tuple(parity)
        self.dim = len(self.parity)
        n = self.dim
        z = field.zero
        self.table = tuple(tuple(tuple(row) for row in trow) for trow in table)
        self.q0 = tuple(q0)
        self.polar = tuple(tuple(row) for row in polar)
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"b{i}" for i in range(n))
        self.name = name
        assert len(self.table) == n and all(len(t) == n for t in self.table)
        assert len(self.q0) == n and len(self.polar) == n
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.table[i][j]) if c != z) for j in range(n))
            for i in range(n)
        )
        self._check_invariants()
        self._unit = -1  # not computed yet

    def _check_invariants(self):
        F = self.field
        z = F.zero
        n = self.dim
        for i in range(n):
            for j in range(n):
                want = (self.parity[i] + self.parity[j]) % 2
                for k, c in self._sparse[i][j]:
                    if self.parity[k] != want:
                        raise ValueError(
                            f"product {self.basis_names[i]}*{self.basis_names[j]} violates parity"
                        )
        for i in range(n):
            for j in range(n):
                bij, bji = self.polar[i][j], self.polar[j][i]
                if self.parity[i] != self.parity[j]:
                    if bij != z:
                        raise ValueError("polar form must vanish on even x odd")
                elif self.parity[i] == 0:
                    if bij != bji:
                        raise ValueError("even block of the polar form must be symmetric")
                else:
                    if bij != F.neg(bji):
                        raise ValueError("odd block of the polar form must be skew")
                    if i == j and bij != z:
                        raise ValueError("odd block of the polar form must be alternating")
        for i in range(n):
            if self.parity[i] == 0:
                two_q = F.add(self.q0[i], self.q0[i])
                if self.polar[i][i] != two_q:
                    raise ValueError("b(x,x) must equal 2*q0(x) on the even basis")
            elif self.q0[i] != z:
                raise ValueError("q0 is only defined on the even part")

    # --- raw-tuple operations ---------------------------------------

    def zero(self):
        return (self.field.zero,) * self.dim

    def basis_vector(self, i):
        z, o = self.field.zero, self.field.one
        return tuple(o if j == i else z for j in range(self.dim))

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def even_indices(self):
        return [i for i in range(self.dim) if self.parity[i] == 0]

    def odd_indices(self):
        return [i for i in range(self.dim) if self.parity[i] == 1]

    def mul(self, x, y):
        F = self.field
        z = F.zero
        add, mul = F.add, F.mul
        acc = [z] * self.dim
        sparse = self._sparse
        for i, xi in enumerate(x):
            if xi == z:
                continue
            row = sparse[i]
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                c = mul(xi, yj)
                for k, ck in row[j]:
                    acc[k] = add(acc[k], mul(c, ck))
        return tuple(acc)

    def eval_b(self, x, y):
        F = self.field
        z = F.zero
        acc = z
        polar = self.polar
        for i, xi in enumerate(x):
            if xi == z:
                continue
            row = polar[i]
            for j, yj in enumerate(y):
                if yj != z and row[j] != z:
                    acc = F.add(acc, F.mul(F.mul(xi, yj), row[j]))
        return acc

    def eval_q0(self, x):
        F = self.field
        z = F.zero
        for i in self.odd_indices():
            if x[i] != z:
                raise OddArgument("q0 is only defined on even elements")
        acc = z
        ev = self.even_indices()
        for a, i in enumerate(ev):
            xi = x[i]
            if xi == z:
                continue
            acc = F.add(acc, F.mul(F.mul(xi, xi), self.q0[i]))
            for j in ev[a + 1:]:
                xj = x[j]
                if xj != z and self.polar[i][j] != z:
                    acc = F.add(acc, F.mul(F.mul(xi, xj), self.polar[i][j]))
        return acc

    def unit(self):
        """The two-sided unit, or None."""
        if self._unit != -1:
            return self._unit
        F = self.field
        n = self.dim
        rows = []
        rhs = []
        for j in range(n):
            for k in range(n):
                rows.append(tuple(self.table[i][j][k] for i in range(n)))
                rhs.append(F.one if k == j else F.zero)
                rows.append(tuple(self.table[j][i][k] for i in range(n)))
                rhs.append(F.one if k == j else F.zero)
        self._unit = linalg.solve(F, rows, tuple(rhs))
        return self._unit

    def conj(self, x):
        """Canonical involution b(x,1)1 - x; needs a unit."""
        e = self.unit()
        if e is None:
            raise NoUnit(f"{self.name or 'algebra'} has no unit")
        c = self.eval_b(x, e)
        F = self.field
        return tuple(F.sub(F.mul(c, ei), xi) for ei, xi in zip(e, x))

    def parity_of(self, v):
        """0, 1 for parity-homogeneous nonzero v, None for mixed, 0 for zero."""
        z = self.field.zero
        has_even = any(v[i] != z for i in self.even_indices())
        has_odd = any(v[i] != z for i in self.odd_indices())
        if has_even and has_odd:
            return None
        return 1 if has_odd else 0

    def element(self, coords):
        return Element(self, tuple(coords))

    def from_names(self, expr):
        """Vector from a {name: coeff} dict, coefficients as ints or raw values."""
        F = self.field
        acc = [F.zero] * self.dim
        for nm, c in expr.items():
            i = self.basis_names.index(nm)
            acc[i] = F.add(acc[i], c if not isinstance(c, int) else F.from_int(c))
        return tuple(acc)

    def fmt(self, v):
        F = self.field
        terms = []
        for c, nm in zip(v, self.basis_names):
            if c == F.zero:
                continue
            terms.append(nm if c == F.one else f"({F.fmt(c)})*{nm}")
        return " + ".join(terms) if terms else "0"

    # --- serialization ----------------------------------------------

    def to_json(self):
        F = self.field
        struct = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self._sparse[i][j]:
                    struct.append([i, j, k, F.fmt(c)])
        return {
            "field": F.name,
            "dim": self.dim,
            "name": self.name,
            "basis": list(self.basis_names),
            "parity": list(self.parity),
            "structure": struct,
            "q0_values": [F.fmt(c) for c in self.q0],
            "polar": [[F.fmt(c) for c in row] for row in self.polar],
        }

    @staticmethod
    def from_json(data):
        F = field_from_string(data["field"])
        n = data["dim"]
        z = F.zero
        table = [[[z] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in data["structure"]:
            table[i][j][k] = F.parse_elt(c)
        return SuperAlgebra(
            F,
            data["parity"],
            table,
            [F.parse_elt(c) for c in data["q0_values"]],
            [[F.parse_elt(c) for c in row] for row in data["polar"]],
            basis_names=data.get("basis"),
            name=data.get("name", ""),
        )

    def __repr__(self):
        return f"<{self.name or 'SuperAlgebra'} dim={self.dim} over {self.field.name}>"


@dataclass(frozen=True)
class Element:
    algebra: SuperAlgebra
    coords: tuple

    def _check(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise MixedAlgebras("elements live in different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, linalg.vec_add(self.algebra.field, self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, linalg.vec_sub(self.algebra.field, self.coords, other.coords))

    def __mul__(self, other):
        self._check(other)
        return Element(self.algebra, self.algebra.mul(self.coords, other.coords))

    def __rmul__(self, c):
        F = self.algebra.field
        if isinstance(c, int):
            c = F.from_int(c)
        return Element(self.algebra, linalg.vec_scale(F, c, self.coords))

    def __neg__(self):
        return Element(self.algebra, linalg.vec_neg(self.algebra.field, self.coords))

    def conj(self):
        return Element(self.algebra, self.algebra.conj(self.coords))

    def q0(self):
        return self.algebra.eval_q0(self.coords)

    def b(self, other):
        self._check(other)
        return self.algebra.eval_b(self.coords, other.coords)

    def is_zero(self):
        return linalg.vec_is_zero(self.algebra.field, self.coords)

    def __str__(self):
        return self.algebra.fmt(self.coords)


def multiply(x, y):
    return x * y


def eval_q0(x):
    return x.q0()


def eval_b(x, y):
    return x.b(y)


def conjugate(x):
    return x.conj()


@dataclass(frozen=True)
class Morphism:
    """Linear map recorded by the images of the source basis vectors."""

    source: SuperAlgebra
    target: SuperAlgebra
    images: tuple  # images[j] = f(b_j), a coordinate tuple in the target
    attrs: frozenset = dc_field(default_factory=frozenset)

    def apply(self, x):
        F = self.target.field
        acc = [F.zero] * self.target.dim
        for c, img in zip(x, self.images):
            if c != F.zero:
                for i, a in enumerate(img):
                    if a != F.zero:
                        acc[i] = F.add(acc[i], F.mul(c, a))
        return tuple(acc)

    def __call__(self, x):
        if isinstance(x, Element):
            if x.algebra is not self.source:
                raise MixedAlgebras("element is not in the source algebra")
            return Element(self.target, self.apply(x.coords))
        return self.apply(x)

    def compose(self, other):
        """self after other."""
        assert other.target is self.source
        return Morphism(other.source, self.target, tuple(self.apply(v) for v in other.images))

    def power(self, k):
        assert self.source is self.target
        f = identity_morphism(self.source)
        for _ in range(k):
            f = self.compose(f)
        return f

    def is_identity(self):
        if self.source is not self.target:
            return False
        return all(self.images[j] == self.source.basis_vector(j) for j in range(self.source.dim))

    def rank(self):
        return linalg.rank(self.target.field, list(self.images))

    def inverse(self):
        assert self.source.dim == self.target.dim and self.rank() == self.source.dim
        F = self.target.field
        cols = [tuple(self.images[j][i] for j in range(self.source.dim)) for i in range(self.target.dim)]
        inv_images = []
        for i in range(self.target.dim):
            sol = linalg.solve(F, cols, self.source.basis_vector(i))
            inv_images.append(sol)
        # solve gave coefficients expressing target basis vectors in the images
        return Morphism(self.target, self.source, tuple(inv_images))

    def with_attrs(self, *flags):
        return Morphism(self.source, self.target, self.images, self.attrs | set(flags))


def identity_morphism(A):
    return Morphism(A, A, tuple(A.basis_vector(i) for i in range(A.dim)))


def morphism_from_images(A, B, images):
    return Morphism(A, B, tuple(tuple(v) for v in images))


KNOWN_CHECKS = ("algebra-hom", "parity-preserving", "isometry", "involution-commuting", "bijective")


def is_morphism(f, checks=KNOWN_CHECKS):
    """Verify the requested flags on all basis pairs; returns a tagged Morphism.

    Bilinearity makes basis checking sufficient for multiplicativity and
    the polar form; q0 additionally needs pairwise sums, which the
    stored q0/polar split already accounts for.
    """
    A, B = f.source, f.target
    F = B.field
    assert A.field == B.field
    verified = []
    for flag in checks:
        if flag == "algebra-hom":
            for i in range(A.dim):
                for j in range(A.dim):
                    lhs = f.apply(A.mul(A.basis_vector(i), A.basis_vector(j)))
                    rhs = B.mul(f.images[i], f.images[j])
                    if lhs != rhs:
                        raise CheckFailed(flag, (A.basis_names[i], A.basis_names[j]))
        elif flag == "parity-preserving":
            for i in range(A.dim):
                p = B.parity_of(f.images[i])
                if p is None or (not linalg.vec_is_zero(F, f.images[i]) and p != A.parity[i]):
                    raise CheckFailed(flag, (A.basis_names[i],))
        elif flag == "isometry":
            for i in range(A.dim):
                for j in range(A.dim):
                    if B.eval_b(f.images[i], f.images[j]) != A.polar[i][j]:
                        raise CheckFailed(flag, (A.basis_names[i], A.basis_names[j]))
            for i in A.even_indices():
                if B.eval_q0(f.images[i]) != A.q0[i]:
                    raise CheckFailed(flag, (A.basis_names[i],))
        elif flag == "involution-commuting":
            for i in range(A.dim):
                lhs = f.apply(A.conj(A.basis_vector(i)))
                rhs = B.conj(f.images[i])
                if lhs != rhs:
                    raise CheckFailed(flag, (A.basis_names[i],))
        elif flag == "bijective":
            if A.dim != B.dim or f.rank() != A.dim:
                raise CheckFailed(flag, ())
        else:
            raise ValueError(f"unknown check {flag!r}")
        verified.append(flag)
    return f.with_attrs(*verified)


def is_regular_superform(S):
    """Regularity of (q0, b): nondegenerate odd block, and q0 regular in the
    radical sense (radical of the even polar block has dimension at most 1
    and q0 does not vanish on it)."""
    F = S.field
    ev = S.even_indices()
    od = S.odd_indices()
    if od:
        odd_block = [[S.polar[i][j] for j in od] for i in od]
        if linalg.det(F, odd_block) == F.zero:
            return False
    if ev:
        even_block = [[S.polar[i][j] for j in ev] for i in ev]
        rad = linalg.nullspace(F, even_block)
        if len(rad) > 1:
            return False
        if len(rad) == 1:
            r = rad[0]
            full = [F.zero] * S.dim
            for c, i in zip(r, ev):
                full[i] = c
            if S.eval_q0(tuple(full)) == F.zero:
                return False
    return True


def algebra_to_json_str(A):
    return json.dumps(A.to_json(), indent=2)
