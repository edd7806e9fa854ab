"""Finitely generated abelian groups in invariant factor form.

Groups are Z^rank x Z/d1 x ... x Z/dk with d1 | d2 | ... and each di >= 2.
Element coordinates list the free part first, then each torsion part
reduced mod di.  Presented groups are canonicalized with an integer
Smith normal form that tracks unimodular transforms.
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd, lcm


class WrongGroup(ValueError):
    pass


class GroupNotFinite(ValueError):
    pass


def _det_int(M):
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M):
    """(D, U, V) with D = U*M*V diagonal, d1 | d2 | ..., U and V unimodular."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(map(int, row)) for row in M]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, c):  # row_i += c * row_j
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, c):  # col_i += c * col_j
        for row in A:
            row[i] += c * row[j]
        for row in V:
            row[i] += c * row[j]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while True:
        # locate smallest nonzero entry in A[t:, t:]
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        dirty = False
        for i in range(t + 1, m):
            if A[i][t] != 0:
                q = A[i][t] // A[t][t]
                row_op(i, t, -q)
                if A[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if A[t][j] != 0:
                q = A[t][j] // A[t][t]
                col_op(j, t, -q)
                if A[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot divides everything below-right? if not, fold the offender in
        piv = A[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % piv != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, 1)
            continue
        if A[t][t] < 0:
            row_negate(t)
        t += 1
        if t == min(m, n):
            break
    D = tuple(tuple(row) for row in A)
    return D, tuple(tuple(r) for r in U), tuple(tuple(r) for r in V)


def invariant_factors_by_minors(M):
    """gcd-of-minors oracle: d_k = gcd(k-minors) / gcd((k-1)-minors)."""
    m = len(M)
    n = len(M[0]) if m else 0
    factors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, _det_int([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


@dataclass(frozen=True)
class AbGroup:
    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        assert self.rank >= 0
        for d in self.torsion:
            assert d >= 2, "unit factors must be dropped"
        for a, b in zip(self.torsion, self.torsion[1:]):
            assert b % a == 0, "invariant factors must form a divisibility chain"

    @property
    def ngens(self):
        return self.rank + len(self.torsion)

    def is_finite(self):
        return self.rank == 0

    def normalize(self, coords):
        coords = tuple(coords)
        assert len(coords) == self.ngens
        free = coords[: self.rank]
        tor = tuple(c % d for c, d in zip(coords[self.rank:], self.torsion))
        return free + tor

    def element(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        return AbElement(self, self.normalize(coords))

    def zero(self):
        return self.element((0,) * self.ngens)

    def generators(self):
        n = self.ngens
        return [self.element(tuple(1 if i == j else 0 for j in range(n))) for i in range(n)]

    def elements(self):
        if not self.is_finite():
            raise GroupNotFinite(f"{self} is infinite")
        for coords in product(*[range(d) for d in self.torsion]):
            yield self.element(coords)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        i = 0
        tor = self.torsion
        while i < len(tor):
            j = i
            while j < len(tor) and tor[j] == tor[i]:
                j += 1
            cnt = j - i
            parts.append(f"Z{tor[i]}" if cnt == 1 else f"Z{tor[i]}^{cnt}")
            i = j
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AbElement:
    group: AbGroup
    coords: tuple

    def _check(self, other):
        if not isinstance(other, AbElement) or other.group != self.group:
            raise WrongGroup(f"elements of {self.group} expected")

    def __add__(self, other):
        self._check(other)
        return self.group.element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return self.group.element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return self.group.element(tuple(-a for a in self.coords))

    def __rmul__(self, n):
        return self.group.element(tuple(n * a for a in self.coords))

    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def order(self):
        """Additive order; 0 means infinite."""
        g = self.group
        if any(c != 0 for c in self.coords[: g.rank]):
            return 0
        o = 1
        for c, d in zip(self.coords[g.rank:], g.torsion):
            if c % d:
                o = lcm(o, d // gcd(c, d))
        return o

    def __str__(self):
        g = self.group
        bits = [str(c) for c in self.coords[: g.rank]]
        bits += [f"{c} mod {d}" for c, d in zip(self.coords[g.rank:], g.torsion)]
        if not bits:
            return "0"
        if len(bits) == 1:
            return bits[0]
        return "(" + ", ".join(bits) + ")"


@dataclass(frozen=True)
class AbHom:
    source: AbGroup
    target: AbGroup
    images: tuple  # image of each canonical generator of the source

    def __post_init__(self):
        assert len(self.images) == self.source.ngens
        for img in self.images:
            if img.group != self.target:
                raise WrongGroup("hom images must lie in the target group")
        r = self.source.rank
        for d, img in zip(self.source.torsion, self.images[r:]):
            if not (d * img).is_zero():
                raise WrongGroup(f"image of an order-{d} generator must have order dividing {d}")

    def __call__(self, x):
        if x.group != self.source:
            raise WrongGroup("argument lies in the wrong group")
        acc = self.target.zero()
        for c, img in zip(x.coords, self.images):
            if c:
                acc = acc + c * img
        return acc


def hom_apply(f, x):
    return f(x)


def presentation_to_group(n_generators, relations):
    """Z^n modulo the given relation rows, canonicalized.

    Returns (group, projection) where projection[i] is the image of the
    i-th generator.
    """
    relations = [tuple(r) for r in relations]
    for r in relations:
        assert len(r) == n_generators, "relation length must match generator count"
    if not relations:
        G = AbGroup(n_generators, ())
        return G, G.generators()
    D, U, V = smith_normal_form(relations)
    m = len(relations)
    factors = []
    for j in range(n_generators):
        factors.append(D[j][j] if j < m else 0)
    free_cols = [j for j in range(n_generators) if factors[j] == 0]
    tor_cols = [j for j in range(n_generators) if factors[j] >= 2]
    G = AbGroup(len(free_cols), tuple(factors[j] for j in tor_cols))
    proj = []
    for i in range(n_generators):
        coords = tuple(V[i][j] for j in free_cols) + tuple(V[i][j] for j in tor_cols)
        proj.append(G.element(coords))
    return G, proj


def group_from_string(s):
    """Inverse of str(AbGroup) for names like "Z^2 x Z2 x Z4"."""
    s = s.strip()
    if s == "0":
        return AbGroup(0, ())
    rank = 0
    torsion = []
    for part in s.split(" x "):
        part = part.strip()
        if part == "Z":
            rank += 1
        elif part.startswith("Z^"):
            rank += int(part[2:])
        else:
            body = part[1:]
            if "^" in body:
                d, _, k = body.partition("^")
                torsion += [int(d)] * int(k)
            else:
                torsion.append(int(body))
    return AbGroup(rank, tuple(sorted(torsion)))
