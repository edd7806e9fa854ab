"""Group gradings on superalgebras: validation, universal groups,
induced gradings, coarsenings, and the degree-triple gradings of the
canonical bases.

Component bases are stored with parity-homogeneous vectors, so
compatibility with the main grading holds by construction.
"""

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .abelian import AbGroup, AbHom, presentation_to_group


class SupportTooLarge(ValueError):
    pass


class TripleNotZeroSum(ValueError):
    pass


class NotSetGrading(ValueError):
    pass


@dataclass(frozen=True)
class Grading:
    algebra: object
    group: AbGroup
    comps: tuple  # ((AbElement, (vector, ...)), ...)

    def __post_init__(self):
        assert all(vs for _, vs in self.comps), "components must be nonzero"

    def degrees(self):
        return [d for d, _ in self.comps]

    def component(self, deg):
        for d, vs in self.comps:
            if d == deg:
                return vs
        return None

    def component_keys(self):
        F = self.algebra.field
        return frozenset(linalg.span_key(F, vs) for _, vs in self.comps)

    def dims(self):
        return [len(vs) for _, vs in self.comps]

    def to_json(self):
        A = self.algebra
        F = A.field
        return {
            "group": str(self.group),
            "components": [
                {
                    "degree": str(d),
                    "coords": list(d.coords),
                    "parity": [A.parity_of(v) for v in vs],
                    "basis": [[F.fmt(c) for c in v] for v in vs],
                }
                for d, vs in self.comps
            ],
        }


def grading_from_components(algebra, group, comps):
    """comps: iterable of (AbElement, [vectors]); empty components dropped,
    component bases replaced by their reduced echelon form."""
    F = algebra.field
    out = []
    for deg, vs in comps:
        vs = [tuple(v) for v in vs if not linalg.vec_is_zero(F, v)]
        if not vs:
            continue
        out.append((deg, tuple(vs)))
    return Grading(algebra, group, tuple(out))


def grading_from_degrees(algebra, group, degree_by_index):
    """Grading whose components group the standard basis vectors by degree."""
    comps = {}
    for i, d in enumerate(degree_by_index):
        comps.setdefault(d, []).append(algebra.basis_vector(i))
    return grading_from_components(algebra, group, comps.items())


def trivial_grading(algebra):
    G = AbGroup(0, ())
    return grading_from_components(algebra, G, [(G.zero(), algebra.basis())])


def main_grading(algebra):
    """The parity decomposition as a Z2-grading."""
    G = AbGroup(0, (2,))
    ev = [algebra.basis_vector(i) for i in algebra.even_indices()]
    od = [algebra.basis_vector(i) for i in algebra.odd_indices()]
    return grading_from_components(algebra, G, [(G.element(0), ev), (G.element(1), od)])


def validate(grading):
    """Exact check of all grading invariants; returns (ok, witness)."""
    A = grading.algebra
    F = A.field
    allvecs = []
    for d, vs in grading.comps:
        if d.group != grading.group:
            return False, ("degree in wrong group", str(d))
        for v in vs:
            if A.parity_of(v) is None:
                return False, ("component basis vector not parity-homogeneous", str(d))
            if linalg.vec_is_zero(F, v):
                return False, ("zero basis vector", str(d))
        allvecs.extend(vs)
    if len(allvecs) != A.dim or linalg.rank(F, allvecs) != A.dim:
        return False, ("components do not decompose the algebra",)
    degs = grading.degrees()
    if len(set(degs)) != len(degs):
        return False, ("duplicate degrees",)
    spans = {d: linalg.rref(F, list(vs)) for d, vs in grading.comps}
    for gi, vi in grading.comps:
        for gj, vj in grading.comps:
            target = gi + gj
            tgt = spans.get(target)
            for x in vi:
                for y in vj:
                    p = A.mul(x, y)
                    if linalg.vec_is_zero(F, p):
                        continue
                    if tgt is None or not linalg.in_span(F, tgt[0], tgt[1], p):
                        return False, (str(gi), str(gj), A.fmt(p))
    return True, None


def support(grading):
    return [d for d, vs in grading.comps if vs]


def _set_grading_relations(algebra, comps):
    """Relations i+j=k for nonzero products of a component list, or None if
    some product does not land inside a single component."""
    F = algebra.field
    spans = [linalg.rref(F, list(vs)) for vs in comps]
    rels = []
    n = len(comps)
    for i in range(n):
        for j in range(n):
            prods = []
            for x in comps[i]:
                for y in comps[j]:
                    p = algebra.mul(x, y)
                    if not linalg.vec_is_zero(F, p):
                        prods.append(p)
            if not prods:
                continue
            k_found = None
            for k in range(n):
                rr, piv = spans[k]
                if all(linalg.in_span(F, rr, piv, p) for p in prods):
                    k_found = k
                    break
            if k_found is None:
                return None
            row = [0] * n
            row[i] += 1
            row[j] += 1
            row[k_found] -= 1
            rels.append(tuple(row))
    return rels


def universal_group(grading):
    """(group, reassignment, injective): the abelian group presented by the
    support with one relation per nonzero component product."""
    comps = [vs for _, vs in grading.comps]
    rels = _set_grading_relations(grading.algebra, comps)
    if rels is None:
        raise NotSetGrading("component products straddle several components")
    G, proj = presentation_to_group(len(comps), rels)
    injective = len(set(proj)) == len(proj)
    return G, proj, injective


def over_universal_group(grading):
    """The same components, relabelled by their universal-group degrees."""
    G, proj, injective = universal_group(grading)
    comps = [(proj[i], vs) for i, (_, vs) in enumerate(grading.comps)]
    return grading_from_components(grading.algebra, G, comps), injective


def induce(grading, hom):
    """Coarsening along a group homomorphism; equal images merge."""
    assert isinstance(hom, AbHom) and hom.source == grading.group
    merged = {}
    order = []
    for d, vs in grading.comps:
        nd = hom(d)
        if nd not in merged:
            merged[nd] = []
            order.append(nd)
        merged[nd].extend(vs)
    return grading_from_components(grading.algebra, hom.target, [(d, merged[d]) for d in order])


def is_refinement(fine, coarse):
    """True when every component of `fine` sits inside a component of `coarse`."""
    assert fine.algebra is coarse.algebra
    F = fine.algebra.field
    spans = [linalg.rref(F, list(vs)) for _, vs in coarse.comps]
    for _, vs in fine.comps:
        if not any(
            all(linalg.in_span(F, rr, piv, v) for v in vs) for rr, piv in spans
        ):
            return False
    return True


def _partitions(items):
    """Set partitions in a deterministic (restricted-growth) order."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return

    def rec(i, parts):
        if i == n:
            yield [list(p) for p in parts]
            return
        for p in parts:
            p.append(items[i])
            yield from rec(i + 1, parts)
            p.pop()
        parts.append([items[i]])
        yield from rec(i + 1, parts)
        parts.pop()

    yield from rec(0, [])


def coarsenings_enum(grading):
    """All coarsenings obtained by merging components, each over its
    universal grading group, deduplicated by component subspaces.

    Includes the grading itself (over its universal group).  Merges whose
    decomposition is not a set grading, or whose universal group does not
    separate the merged components, are discarded.
    """
    comps = [list(vs) for _, vs in grading.comps]
    if len(comps) > 8:
        raise SupportTooLarge(f"support of size {len(comps)} exceeds 8")
    A = grading.algebra
    F = A.field
    out = []
    seen = set()
    for partition in _partitions(range(len(comps))):
        merged = []
        for block in partition:
            vs = []
            for i in block:
                vs.extend(comps[i])
            merged.append(vs)
        rels = _set_grading_relations(A, merged)
        if rels is None:
            continue
        G, proj = presentation_to_group(len(merged), rels)
        if len(set(proj)) != len(proj):
            continue
        cand = grading_from_components(A, G, list(zip(proj, merged)))
        key = cand.component_keys()
        if key in seen:
            continue
        seen.add(key)
        out.append(cand)
    return out


def gamma_grading_b12(algebra, G, g):
    """deg(1)=0, deg(u)=g, deg(v)=-g on the 3-dimensional superalgebra."""
    assert algebra.dim == 3
    return grading_from_degrees(algebra, G, [G.zero(), g, -g])


def gamma_grading_b42(algebra, G, g):
    """deg(e_j)=0, deg(u)=g, deg(v)=-g, deg(x)=2g, deg(y)=-2g."""
    assert algebra.dim == 6
    z = G.zero()
    return grading_from_degrees(algebra, G, [z, z, 2 * g, -(2 * g), g, -g])


def gamma_grading_cd4(algebra, cb, G, g):
    """deg(e_j)=0, deg(u1)=g, deg(v1)=-g on a dimension-4 canonical basis."""
    z = G.zero()
    comps = {}
    for nm, d in (("e1", z), ("e2", z), ("u1", g), ("v1", -g)):
        comps.setdefault(d, []).append(cb.vectors[nm])
    return grading_from_components(algebra, G, comps.items())


def gamma_grading_dim8(algebra, cb, G, gamma):
    """deg(e_j)=0, deg(u_i)=g_i, deg(v_i)=-g_i for a zero-sum triple."""
    g1, g2, g3 = gamma
    if not (g1 + g2 + g3).is_zero():
        raise TripleNotZeroSum(f"{g1} + {g2} + {g3} != 0")
    z = G.zero()
    comps = {}
    for nm, d in (
        ("e1", z),
        ("e2", z),
        ("u1", g1),
        ("u2", g2),
        ("u3", g3),
        ("v1", -g1),
        ("v2", -g2),
        ("v3", -g3),
    ):
        comps.setdefault(d, []).append(cb.vectors[nm])
    return grading_from_components(algebra, G, comps.items())


def gamma_equiv(gamma, gamma2):
    """Triples are equivalent under swapping the first two entries and a
    global sign: g3' = e*g3 and g_i' = e*g_sigma(i)."""
    g1, g2, g3 = gamma
    h1, h2, h3 = gamma2
    for a, b in ((g1, g2), (g2, g1)):
        if (h1, h2, h3) == (a, b, g3):
            return True
        if (h1, h2, h3) == (-a, -b, -g3):
            return True
    return False


def zero_sum_triples(G, max_order=None):
    """All (g1, g2, g1+g2 inverted) triples, optionally capped by element order."""
    out = []
    for g1 in G.elements():
        for g2 in G.elements():
            g3 = -(g1 + g2)
            t = (g1, g2, g3)
            if max_order is not None and any(x.order() > max_order or x.order() == 0 for x in t):
                continue
            out.append(t)
    return out
