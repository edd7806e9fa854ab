"""Backtracking searches over finite fields: graded isomorphisms and
automorphisms, exhaustive grading enumeration in small dimension, and
single-split fineness checks.

Proven-none and budget-exhausted are distinct outcomes: searches return
None only after exhausting the space; running out of budget raises
BudgetExhausted.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product

from . import linalg
from .gradings import Grading, grading_from_components, main_grading, trivial_grading
from .gradings import _set_grading_relations, validate
from .abelian import presentation_to_group
from .superalgebra import Morphism, identity_morphism, is_morphism, CheckFailed


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class DimensionTooLarge(ValueError):
    pass


@dataclass
class SearchBudget:
    max_nodes: int = 2_000_000

    def __post_init__(self):
        assert self.max_nodes > 0


@dataclass
class EnumResult:
    gradings: list
    complete: bool
    nodes: int


def _component_census(grading):
    """degree -> (even dim, odd dim)."""
    A = grading.algebra
    out = {}
    for d, vs in grading.comps:
        ev = sum(1 for v in vs if A.parity_of(v) == 0)
        out[d] = (ev, len(vs) - ev)
    return out


class _GradedMapSearch:
    """DFS for superalgebra isomorphisms mapping components onto components.

    Source basis = concatenated component bases; the image of each basis
    vector is confined to an assigned target component.  Pruning: parity,
    norm preservation, linear independence, and multiplicativity on every
    product already expressible in assigned vectors.  Products that force
    the next image are used directly instead of enumerating candidates.
    """

    def __init__(self, A, ga, B, gb, budget, isometry=True):
        self.A, self.B = A, B
        self.ga, self.gb = ga, gb
        self.budget = budget
        self.isometry = isometry
        self.nodes = 0
        F = A.field
        self.F = F
        assert F == B.field and F.order is not None, "finite fields only"

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted(self.nodes)

    def _prepare(self, comp_target):
        """comp_target: index of target component for each source component."""
        A, B, F = self.A, self.B, self.F
        src_vecs = []
        src_comp = []
        for ci, (_, vs) in enumerate(self.ga.comps):
            for v in vs:
                src_vecs.append(v)
                src_comp.append(ci)
        # slot order: smallest target candidate sets first
        tgt_spans = []
        for ci, (_, vs) in enumerate(self.gb.comps):
            tgt_spans.append(list(vs))
        order = sorted(
            range(len(src_vecs)),
            key=lambda t: (len(tgt_spans[comp_target[src_comp[t]]]), A.parity_of(src_vecs[t]), t),
        )
        src_vecs = [src_vecs[t] for t in order]
        src_comp = [src_comp[t] for t in order]
        # products of source vectors expanded in the source-vector basis
        m = len(src_vecs)
        prod_coeffs = {}
        z = F.zero
        for i in range(m):
            for j in range(m):
                p = A.mul(src_vecs[i], src_vecs[j])
                coeffs = linalg.coords_in_basis(F, src_vecs, p)
                support = [k for k, c in enumerate(coeffs) if c != z]
                depth = max([i, j] + support)
                prod_coeffs[(i, j)] = (coeffs, support, depth)
        tgt_rrefs = [linalg.rref(F, span) for span in tgt_spans]
        return src_vecs, src_comp, prod_coeffs, tgt_spans, tgt_rrefs

    def run(self, comp_target, collect=None):
        """Search with a fixed component assignment; returns a Morphism or None.

        With collect (a list), every solution is appended and None returned.
        """
        A, B, F = self.A, self.B, self.F
        src_vecs, src_comp, prod_coeffs, tgt_spans, tgt_rrefs = self._prepare(comp_target)
        m = len(src_vecs)
        images = [None] * m
        z = F.zero

        def candidates(t):
            # a product of two assigned vectors may force the image
            for (i, j), (coeffs, support, depth) in prod_coeffs.items():
                if depth != t or i == t or j == t or coeffs[t] == z:
                    continue
                lhs = B.mul(images[i], images[j])
                acc = list(lhs)
                for k in support:
                    if k != t:
                        for s, a in enumerate(images[k]):
                            if a != z:
                                acc[s] = F.sub(acc[s], F.mul(coeffs[k], a))
                inv = F.inv(coeffs[t])
                return [tuple(F.mul(inv, a) for a in acc)]
            span = tgt_spans[comp_target[src_comp[t]]]
            out = []
            for coeffs in linalg.nonzero_vectors(F, len(span)):
                acc = [z] * B.dim
                for c, bv in zip(coeffs, span):
                    if c != z:
                        for s, a in enumerate(bv):
                            if a != z:
                                acc[s] = F.add(acc[s], F.mul(c, a))
                out.append(tuple(acc))
            return out

        def consistent(t):
            v = images[t]
            if A.parity_of(src_vecs[t]) != B.parity_of(v) or linalg.vec_is_zero(F, v):
                return False
            rr, piv = tgt_rrefs[comp_target[src_comp[t]]]
            if not linalg.in_span(F, rr, piv, v):
                return False
            if self.isometry:
                if A.parity_of(src_vecs[t]) == 0:
                    if B.eval_q0(v) != A.eval_q0(src_vecs[t]):
                        return False
                for k in range(t + 1):
                    if B.eval_b(images[k], v) != A.eval_b(src_vecs[k], src_vecs[t]):
                        return False
                    if B.eval_b(v, images[k]) != A.eval_b(src_vecs[t], src_vecs[k]):
                        return False
            if linalg.rank(F, [im for im in images[: t + 1]]) != t + 1:
                return False
            for i in range(t + 1):
                for j in range(t + 1):
                    coeffs, support, depth = prod_coeffs[(i, j)]
                    if depth != t:
                        continue
                    lhs = B.mul(images[i], images[j])
                    acc = [z] * B.dim
                    for k in support:
                        for s, a in enumerate(images[k]):
                            if a != z:
                                acc[s] = F.add(acc[s], F.mul(coeffs[k], a))
                    if lhs != tuple(acc):
                        return False
            return True

        def finish():
            imgs = [None] * A.dim
            base = src_vecs
            for i in range(A.dim):
                coeffs = linalg.coords_in_basis(F, base, A.basis_vector(i))
                acc = [z] * B.dim
                for c, im in zip(coeffs, images):
                    if c != z:
                        for s, a in enumerate(im):
                            if a != z:
                                acc[s] = F.add(acc[s], F.mul(c, a))
                imgs[i] = tuple(acc)
            f = Morphism(A, B, tuple(imgs))
            try:
                checks = ["algebra-hom", "parity-preserving", "bijective"]
                if self.isometry:
                    checks.append("isometry")
                return is_morphism(f, checks)
            except CheckFailed:
                return None

        def dfs(t):
            if t == m:
                f = finish()
                if f is None:
                    return None
                if collect is not None:
                    collect.append(f)
                    return None
                return f
            for cand in candidates(t):
                self._tick()
                images[t] = cand
                if consistent(t):
                    got = dfs(t + 1)
                    if got is not None:
                        return got
                images[t] = None
            return None

        return dfs(0)


def try_verify_graded(f, ga, gb, isometry=True):
    """Verify a candidate map as a degree-preserving graded isomorphism;
    returns the tagged Morphism or None."""
    A, B = f.source, f.target
    F = B.field
    try:
        checks = ["algebra-hom", "parity-preserving", "bijective"]
        if isometry:
            checks.append("isometry")
        f = is_morphism(f, checks)
    except CheckFailed:
        return None
    spans = {d: linalg.rref(F, list(vs)) for d, vs in gb.comps}
    for d, vs in ga.comps:
        if d not in spans or len(vs) != len(gb.component(d)):
            return None
        rr, piv = spans[d]
        for v in vs:
            if not linalg.in_span(F, rr, piv, f.apply(v)):
                return None
    return f


def find_graded_map(A, ga, B, gb, mode="isomorphism", budget=None, isometry=True):
    """Graded superalgebra isomorphism between (A, ga) and (B, gb).

    mode "isomorphism": degree-preserving (same ambient group required).
    mode "equivalence": components map onto components, degrees free.
    Returns a verified Morphism, or None when the search space is
    exhausted (proven none).  Raises BudgetExhausted when the node budget
    runs out.
    """
    budget = budget or SearchBudget()
    if A.dim != B.dim:
        return None
    ca, cb = _component_census(ga), _component_census(gb)
    search = _GradedMapSearch(A, ga, B, gb, budget, isometry=isometry)
    if mode == "isomorphism":
        if ca != cb:
            return None
        deg_to_idx = {d: i for i, (d, _) in enumerate(gb.comps)}
        comp_target = []
        for d, _ in ga.comps:
            if d not in deg_to_idx:
                return None
            comp_target.append(deg_to_idx[d])
        if A is B:
            ident = try_verify_graded(identity_morphism(A), ga, gb, isometry=isometry)
            if ident is not None:
                return ident
        return search.run(comp_target)
    if mode == "equivalence":
        if sorted(ca.values()) != sorted(cb.values()):
            return None
        idxs = range(len(gb.comps))
        for perm in permutations(idxs):
            ok = True
            for i, (d, _) in enumerate(ga.comps):
                if ca[d] != cb[gb.comps[perm[i]][0]]:
                    ok = False
                    break
            if not ok:
                continue
            got = search.run(list(perm))
            if got is not None:
                return got
        return None
    raise ValueError(f"unknown mode {mode!r}")


def enumerate_automorphisms(S, constraints=None, budget=None):
    """All (graded) superalgebra automorphisms.

    Without constraints this brute-forces every linear map, which is only
    workable in tiny dimension; with a Grading it backtracks over
    degree-preserving maps.
    """
    budget = budget or SearchBudget()
    F = S.field
    assert F.order is not None, "finite fields only"
    if constraints is None:
        total = F.order ** (S.dim * S.dim)
        if total > budget.max_nodes:
            raise BudgetExhausted(total)
        out = []
        for flat in product(F.elements(), repeat=S.dim * S.dim):
            images = tuple(
                tuple(flat[j * S.dim + i] for i in range(S.dim)) for j in range(S.dim)
            )
            f = Morphism(S, S, images)
            try:
                f = is_morphism(f, ("bijective", "algebra-hom", "parity-preserving"))
            except CheckFailed:
                continue
            out.append(f)
        return out
    out = []
    search = _GradedMapSearch(S, constraints, S, constraints, budget)
    deg_to_idx = {d: i for i, (d, _) in enumerate(constraints.comps)}
    comp_target = [deg_to_idx[d] for d, _ in constraints.comps]
    search.run(comp_target, collect=out)
    return sorted(out, key=lambda f: tuple(f.images))


def _decompositions_of_block(F, block_basis):
    """All unordered direct-sum decompositions of span(block_basis)."""
    d = len(block_basis)
    if d == 0:
        return [()]
    subspaces = []
    for k in range(1, d + 1):
        subspaces.extend(linalg.subspaces_of_span(F, block_basis, k))
    keys = {s: linalg.span_key(F, s) for s in subspaces}
    out = []

    def rec(chosen, dim_used, min_key):
        if dim_used == d:
            out.append(tuple(chosen))
            return
        for s in subspaces:
            k = keys[s]
            if min_key is not None and k <= min_key:
                continue
            if dim_used + len(s) > d:
                continue
            stacked = [v for c in chosen for v in c] + list(s)
            if linalg.rank(F, stacked) != dim_used + len(s):
                continue
            chosen.append(s)
            rec(chosen, dim_used + len(s), k)
            chosen.pop()

    rec([], 0, None)
    return out


def _partial_matchings(na, nb):
    """All partial injections {0..na-1} -> {0..nb-1} as dicts."""
    out = []
    for k in range(min(na, nb) + 1):
        for rows in combinations(range(na), k):
            for cols in permutations(range(nb), k):
                out.append(dict(zip(rows, cols)))
    return out


def enumerate_all_gradings(S, max_components=None, budget=None):
    """Every grading of S over its universal group, for dim(S) <= 4.

    Enumerates all decompositions into parity-split subspaces, keeps the
    valid set gradings whose universal group separates components, and
    deduplicates by component subspaces.  The result is complete unless
    the budget is exhausted.
    """
    if S.dim > 4:
        raise DimensionTooLarge("exhaustive grading enumeration is limited to dim <= 4")
    budget = budget or SearchBudget()
    F = S.field
    nodes = 0
    ev = [S.basis_vector(i) for i in S.even_indices()]
    od = [S.basis_vector(i) for i in S.odd_indices()]
    even_decomps = _decompositions_of_block(F, ev)
    odd_decomps = _decompositions_of_block(F, od)
    out = []
    seen = set()
    for de in even_decomps:
        for do in odd_decomps:
            for matching in _partial_matchings(len(de), len(do)):
                nodes += 1
                if nodes > budget.max_nodes:
                    return EnumResult(out, complete=False, nodes=nodes)
                comps = []
                used_odd = set(matching.values())
                for i, e in enumerate(de):
                    vs = list(e)
                    if i in matching:
                        vs += list(do[matching[i]])
                    comps.append(vs)
                for j, o in enumerate(do):
                    if j not in used_odd:
                        comps.append(list(o))
                if max_components is not None and len(comps) > max_components:
                    continue
                rels = _set_grading_relations(S, comps)
                if rels is None:
                    continue
                G, proj = presentation_to_group(len(comps), rels)
                if len(set(proj)) != len(proj):
                    continue
                cand = grading_from_components(S, G, list(zip(proj, comps)))
                key = cand.component_keys()
                if key in seen:
                    continue
                seen.add(key)
                out.append(cand)
    return EnumResult(out, complete=True, nodes=nodes)


def _parity_splits(S, comp_vectors):
    """Unordered pairs (W1, W2) of nonzero parity-split subspaces with
    W1 + W2 = span(comp_vectors)."""
    F = S.field
    ev = [v for v in comp_vectors if S.parity_of(v) == 0]
    od = [v for v in comp_vectors if S.parity_of(v) == 1]

    def halves(block):
        # ordered (X1, X2) with X1 + X2 = span(block), zero parts allowed
        res = [(list(block), []), ([], list(block))] if block else [([], [])]
        for w1, w2 in linalg.complementary_pairs(F, block) if block else []:
            res.append((w1, w2))
            res.append((w2, w1))
        return res

    seen = set()
    for e1, e2 in halves(ev):
        for o1, o2 in halves(od):
            w1 = e1 + o1
            w2 = e2 + o2
            if not w1 or not w2:
                continue
            key = frozenset((linalg.span_key(F, w1), linalg.span_key(F, w2)))
            if key in seen:
                continue
            seen.add(key)
            yield w1, w2


def fine_check(grading, budget=None):
    """("fine", None) or ("refinable", witness) under single-component splits.

    Tries every split of one component into two nonzero parity-split
    subspaces and accepts a split when the refined decomposition is a
    valid set grading whose universal group separates components.  Only
    single splits are explored, so "fine" means fine under this search.
    """
    budget = budget or SearchBudget()
    S = grading.algebra
    F = S.field
    nodes = 0
    comps = [list(vs) for _, vs in grading.comps]
    degs = [d for d, _ in grading.comps]
    deg_to_idx = {d: i for i, d in enumerate(degs)}
    for ci, comp in enumerate(comps):
        if len(comp) < 2:
            continue
        # products of the untouched components that land in this component
        # must fit inside one of the two parts; if they already span the
        # whole component, no split can succeed
        incoming = []
        for j in range(len(comps)):
            for k in range(len(comps)):
                if j == ci or k == ci or deg_to_idx.get(degs[j] + degs[k]) != ci:
                    continue
                for x in comps[j]:
                    for y in comps[k]:
                        p = S.mul(x, y)
                        if not linalg.vec_is_zero(F, p):
                            incoming.append(p)
        if incoming and linalg.rank(F, incoming) == len(comp):
            continue
        for w1, w2 in _parity_splits(S, comp):
            nodes += 1
            if nodes > budget.max_nodes:
                raise BudgetExhausted(nodes)
            # untouched components first: their products reject hopeless
            # splits before any subspace work on the new parts
            cand = comps[:ci] + comps[ci + 1:] + [w1, w2]
            rels = _set_grading_relations(S, cand)
            if rels is None:
                continue
            G, proj = presentation_to_group(len(cand), rels)
            if len(set(proj)) != len(proj):
                continue
            witness = grading_from_components(S, G, list(zip(proj, cand)))
            ok, _ = validate(witness)
            if ok:
                return "refinable", witness
    return "fine", None
