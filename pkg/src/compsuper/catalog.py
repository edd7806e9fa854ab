"""Machine-readable catalog of the labelled gradings, with verifiers.

Each entry records the algebra family, the field conditions, the degree
assignment on the defining basis, the claimed universal grading group,
and (when one exists in the catalog) the fine grading it coarsens.
Entries are buildable deterministically; the verifier revalidates every
claim with exact arithmetic.
"""

from dataclasses import dataclass

from . import linalg
from .abelian import AbGroup
from .axioms import (
    check_conjugation_invariance,
    check_orthogonality,
    check_phi_invariance,
)
from .constructions import (
    b12,
    b42,
    okubo_super,
    para_hurwitz,
    super_split_cayley,
    super_split_quaternion,
    tau_nst,
    tau_omega,
)
from .gradings import (
    Grading,
    grading_from_components,
    main_grading,
    trivial_grading,
    universal_group,
    validate,
    is_refinement,
    gamma_grading_b12,
    gamma_grading_b42,
    gamma_grading_dim8,
    gamma_equiv,
    zero_sum_triples,
)
from .search import SearchBudget, find_graded_map, try_verify_graded
from .superalgebra import Morphism, identity_morphism


class FieldConditionUnmet(ValueError):
    pass


Z = AbGroup(1)
Z2 = AbGroup(0, (2,))
Z3 = AbGroup(0, (3,))
Z4 = AbGroup(0, (4,))
Z2Z2 = AbGroup(0, (2, 2))
ZxZ2 = AbGroup(1, (2,))


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str  # b12 | b42 | cd4 | cd8 | okubo-nst | okubo-omega
    char: int
    needs_omega: bool
    claimed_group: str
    coarsening_of: str  # "" when the entry is not a catalog coarsening
    claimed_fine: bool
    display: str


_ALGEBRA_CACHE = {}


def _family_algebra(family, field):
    """Algebra (and context) for a family over a field, cached so that
    entries of the same family share one instance."""
    key = (family, field.name)
    if key in _ALGEBRA_CACHE:
        return _ALGEBRA_CACHE[key]
    if family == "b12":
        ctx = {"algebra": b12(field)}
    elif family == "b42":
        ctx = {"algebra": b42(field)}
    elif family == "cd4":
        A, cb = super_split_quaternion(field)
        ctx = {"algebra": A, "cb": cb}
    elif family == "cd8":
        A, cb = super_split_cayley(field)
        ctx = {"algebra": A, "cb": cb}
    elif family in ("okubo-nst", "okubo-omega"):
        S, phi, cb, C = okubo_super(field, family.split("-")[1])
        ctx = {"algebra": S, "phi": phi, "cb": cb, "hurwitz": C}
    else:
        raise ValueError(f"unknown family {family!r}")
    _ALGEBRA_CACHE[key] = ctx
    return ctx


def _names_to_degrees(A, G, assignment):
    comps = {}
    for nm, coords in assignment.items():
        d = G.element(coords) if isinstance(coords, tuple) else G.element((coords,))
        comps.setdefault(d, []).append(A.basis_vector(A.basis_names.index(nm)))
    return grading_from_components(A, G, comps.items())


def _doubling_components(A):
    """K, Kv, Ku, K(vu) for K = F1 + Fw with w^2 + w + 1 = 0, built from the
    canonical table basis: w = e2+u3+v3, v = u3+v3, u = u1+v1."""
    F = A.field
    nm = {n: i for i, n in enumerate(A.basis_names)}

    def vec(*names):
        out = [F.zero] * A.dim
        for n in names:
            out[nm[n]] = F.add(out[nm[n]], F.one)
        return tuple(out)

    one = vec("e1", "e2")
    w = vec("e2", "u3", "v3")
    v = vec("u3", "v3")
    u = vec("u1", "v1")
    wv = A.mul(w, v)
    wu = A.mul(w, u)
    vu = A.mul(v, u)
    wvu = A.mul(w, vu)
    return {
        "K": [one, w],
        "Kv": [v, wv],
        "Ku": [u, wu],
        "Kvu": [vu, wvu],
    }


_STD_DIM8 = {
    "eq7": (AbGroup(2), {"e1": (0, 0), "e2": (0, 0), "u1": (1, 0), "u2": (0, 1), "u3": (-1, -1),
                         "v1": (-1, 0), "v2": (0, -1), "v3": (1, 1)}),
    "cor1eq5": (Z, {"e1": 0, "e2": 0, "u3": 0, "v3": 0, "u1": 1, "v2": 1, "u2": -1, "v1": -1}),
    "cor1eq6": (Z, {"e1": 0, "e2": 0, "u1": 0, "v1": 0, "u3": 1, "v2": 1, "u2": -1, "v3": -1}),
    "cor1eq7": (Z, {"e1": 0, "e2": 0, "v3": 2, "u3": -2, "u1": 1, "u2": 1, "v1": -1, "v2": -1}),
    "cor1eq8": (Z, {"e1": 0, "e2": 0, "v1": 2, "u1": -2, "u2": 1, "u3": 1, "v2": -1, "v3": -1}),
    "cor1eq9": (Z3, {"e1": 0, "e2": 0, "u1": 1, "u2": 1, "u3": 1, "v1": 2, "v2": 2, "v3": 2}),
    "cor1eq10": (Z4, {"e1": 0, "e2": 0, "u1": 1, "u2": 1, "u3": 2, "v3": 2, "v1": 3, "v2": 3}),
    "cor1eq11": (Z4, {"e1": 0, "e2": 0, "u2": 1, "u3": 1, "u1": 2, "v1": 2, "v2": 3, "v3": 3}),
    "cor1eq12": (ZxZ2, {"e1": (0, 0), "e2": (0, 0), "u2": (1, 0), "v2": (-1, 0),
                        "u1": (0, 1), "v1": (0, 1), "u3": (-1, 1), "v3": (1, 1)}),
    "cor1eq13": (ZxZ2, {"e1": (0, 0), "e2": (0, 0), "u2": (1, 0), "v2": (-1, 0),
                        "u3": (0, 1), "v3": (0, 1), "u1": (-1, 1), "v1": (1, 1)}),
}

_OKUBO_LAYOUTS = {
    "okuboeq3": "eq7",
    "okuboeq4": "cor1eq5",
    "okuboeq5": "cor1eq6",
    "okuboeq6": "cor1eq7",
    "okuboeq7": "cor1eq8",
    "okuboeq8": "cor1eq9",
    "okuboeq9": "cor1eq10",
    "okuboeq10": "cor1eq11",
    "okuboeq11": "cor1eq12",
    "okuboeq12": "cor1eq13",
}

ENTRIES = {}


def _add(id, family, char, needs_omega, group, coarsening_of, fine, display):
    ENTRIES[id] = CatalogEntry(id, family, char, needs_omega, group, coarsening_of, fine, display)


_add("eq1", "b12", 3, False, "Z", "", True, "deg(u)=1, deg(v)=-1")
_add("eq2", "b42", 3, False, "Z", "", True, "5-grading: deg(u)=1, deg(x)=2")
_add("eq3", "b42", 3, False, "Z4", "eq2", False, "deg(u)=1, x,y in degree 2")
_add("eq4", "b42", 3, False, "Z3", "eq2", False, "u,y in degree 1; v,x in degree 2")
_add("eq5", "cd4", 2, False, "Z", "", True, "3-grading: deg(u1)=1, deg(v1)=-1")
_add("eq6", "cd8", 2, False, "Z2^2", "", True, "doubling grading K, Kv, Ku, K(vu)")
_add("eq7", "cd8", 2, False, "Z^2", "", True, "Cartan grading of a canonical basis")
_add("cor1eq3", "cd8", 2, False, "Z2", "eq6", False, "K+Ku even, Kv+K(vu) odd")
for _id in ("cor1eq5", "cor1eq6"):
    _add(_id, "cd8", 2, False, "Z", "eq7", False, "3-grading coarsening of the Cartan grading")
for _id in ("cor1eq7", "cor1eq8"):
    _add(_id, "cd8", 2, False, "Z", "eq7", False, "5-grading coarsening of the Cartan grading")
_add("cor1eq9", "cd8", 2, False, "Z3", "eq7", False, "u's in degree 1, v's in degree 2")
_add("cor1eq10", "cd8", 2, False, "Z4", "eq7", False, "Z4 coarsening of the Cartan grading")
_add("cor1eq11", "cd8", 2, False, "Z4", "eq7", False, "Z4 coarsening of the Cartan grading")
_add("cor1eq12", "cd8", 2, False, "Z x Z2", "eq7", False, "Z x Z2 coarsening of the Cartan grading")
_add("cor1eq13", "cd8", 2, False, "Z x Z2", "eq7", False, "Z x Z2 coarsening of the Cartan grading")
_add("okuboeq1", "okubo-nst", 2, False, "Z2^2", "", True, "doubling grading with phi(u)=w.u")
_add("okuboeq2", "okubo-nst", 2, False, "Z2", "okuboeq1", False, "K+Ku even, Kv+K(vu) odd")
_add("okuboeq3", "okubo-omega", 2, True, "Z^2", "", True, "Cartan grading, phi = tau_omega")
_add("okuboeq4", "okubo-omega", 2, True, "Z", "okuboeq3", False, "3-grading, phi = tau_omega")
_add("okuboeq5", "okubo-omega", 2, True, "Z", "okuboeq3", False, "3-grading, phi = tau_omega")
_add("okuboeq6", "okubo-nst", 2, False, "Z", "", True, "5-grading, phi = tau_nst")
_add("okuboeq7", "okubo-omega", 2, True, "Z", "okuboeq3", False, "5-grading, phi = tau_omega")
_add("okuboeq8", "okubo-nst", 2, False, "Z3", "okuboeq6", False, "Z3 grading, phi = tau_nst")
_add("okuboeq9", "okubo-nst", 2, False, "Z4", "okuboeq6", False, "Z4 grading, phi = tau_nst")
_add("okuboeq10", "okubo-omega", 2, True, "Z4", "okuboeq3", False, "Z4 grading, phi = tau_omega")
_add("okuboeq11", "okubo-omega", 2, True, "Z x Z2", "okuboeq3", False, "Z x Z2, phi = tau_omega")
_add("okuboeq12", "okubo-omega", 2, True, "Z x Z2", "okuboeq3", False, "Z x Z2, phi = tau_omega")

_FINE_OF_FAMILY = {
    "b12": "eq1",
    "b42": "eq2",
    "cd4": "eq5",
    "cd8": "eq7",
    "okubo-nst": "okuboeq6",
    "okubo-omega": "okuboeq3",
}
for _fam, _parent in _FINE_OF_FAMILY.items():
    _char = 3 if _fam in ("b12", "b42") else 2
    _omega = _fam == "okubo-omega"
    _add(f"main-{_fam}", _fam, _char, _omega, "Z2", _parent, False, "parity decomposition")
    _add(f"trivial-{_fam}", _fam, _char, _omega, "0", _parent, False, "one component")

LABELLED_IDS = [i for i in ENTRIES if not i.startswith(("main-", "trivial-"))]


def catalog_ids():
    return list(ENTRIES)


def _check_field(entry, field):
    if field.char != entry.char:
        raise FieldConditionUnmet(
            f"{entry.id} requires characteristic {entry.char}, got {field.name}"
        )
    if entry.needs_omega and field.primitive_cube_root_raw() is None:
        raise FieldConditionUnmet(f"{entry.id} requires a primitive cube root of 1 in the field")


def build_entry(id, field):
    """(algebra, grading) for a catalog id; FieldConditionUnmet when the
    field does not satisfy the entry's conditions."""
    entry = ENTRIES[id]
    _check_field(entry, field)
    ctx = _family_algebra(entry.family, field)
    A = ctx["algebra"]
    if id.startswith("main-"):
        return A, main_grading(A)
    if id.startswith("trivial-"):
        return A, trivial_grading(A)
    if id == "eq1":
        return A, gamma_grading_b12(A, Z, Z.element(1))
    if id == "eq2":
        return A, gamma_grading_b42(A, Z, Z.element(1))
    if id == "eq3":
        return A, _names_to_degrees(A, Z4, {"e1": 0, "e2": 0, "u": 1, "x": 2, "y": 2, "v": 3})
    if id == "eq4":
        return A, _names_to_degrees(A, Z3, {"e1": 0, "e2": 0, "u": 1, "y": 1, "v": 2, "x": 2})
    if id == "eq5":
        return A, _names_to_degrees(A, Z, {"e1": 0, "e2": 0, "u1": 1, "v1": -1})
    if id in ("eq6", "okuboeq1"):
        parts = _doubling_components(ctx.get("hurwitz", A))
        comps = [
            (Z2Z2.element(0, 0), parts["K"]),
            (Z2Z2.element(1, 0), parts["Kv"]),
            (Z2Z2.element(0, 1), parts["Ku"]),
            (Z2Z2.element(1, 1), parts["Kvu"]),
        ]
        return A, grading_from_components(A, Z2Z2, comps)
    if id in ("cor1eq3", "okuboeq2"):
        parts = _doubling_components(ctx.get("hurwitz", A))
        comps = [
            (Z2.element(0), parts["K"] + parts["Ku"]),
            (Z2.element(1), parts["Kv"] + parts["Kvu"]),
        ]
        return A, grading_from_components(A, Z2, comps)
    layout = _OKUBO_LAYOUTS.get(id, id)
    G, assignment = _STD_DIM8[layout]
    return A, _names_to_degrees(A, G, assignment)


def entry_context(id, field):
    entry = ENTRIES[id]
    _check_field(entry, field)
    return _family_algebra(entry.family, field)


def verify_entry(id, field):
    """Exact verification of every claim an entry makes; returns a report."""
    entry = ENTRIES[id]
    report = {"id": id, "field": field.name, "family": entry.family, "checks": {}, "pass": False}
    try:
        A, grading = build_entry(id, field)
    except FieldConditionUnmet as exc:
        report["status"] = "field-condition-unmet"
        report["reason"] = str(exc)
        return report
    report["status"] = "built"
    checks = report["checks"]
    ok, witness = validate(grading)
    checks["grading-valid"] = ok if witness is None else [ok, [str(w) for w in witness]]
    G, proj, injective = universal_group(grading)
    checks["universal-group"] = {
        "claimed": entry.claimed_group,
        "computed": str(G),
        "match": str(G) == entry.claimed_group,
        "injective": injective,
    }
    if entry.coarsening_of:
        try:
            _, parent = build_entry(entry.coarsening_of, field)
            checks["coarsening-of"] = {
                "parent": entry.coarsening_of,
                "holds": is_refinement(parent, grading),
            }
        except FieldConditionUnmet as exc:
            checks["coarsening-of"] = {"parent": entry.coarsening_of, "skipped": str(exc)}
    orth = check_orthogonality(grading)
    checks["orthogonality"] = orth.passed
    ctx = _family_algebra(entry.family, field)
    if entry.family.startswith("okubo"):
        inv = check_phi_invariance(grading, ctx["phi"])
        checks["phi-invariance"] = inv.passed
    else:
        cinv = check_conjugation_invariance(grading)
        checks["conjugation-invariance"] = cinv.passed
        para = para_hurwitz(A)
        pgrading = grading_from_components(para, grading.group, list(grading.comps))
        pok, pwit = validate(pgrading)
        checks["para-transfer"] = pok
    if entry.id in ("eq6", "okuboeq1", "cor1eq3", "okuboeq2"):
        mul_alg = ctx.get("hurwitz", A)
        parts = _doubling_components(mul_alg)
        F = A.field
        w = parts["K"][1]
        ww = mul_alg.mul(w, w)
        one = parts["K"][0]
        lhs = tuple(F.add(F.add(a, b), c) for a, b, c in zip(ww, w, one))
        checks["w^2+w+1=0"] = linalg.vec_is_zero(F, lhs)
        checks["K-split"] = _k_is_split(mul_alg, parts["K"])
    report["pass"] = _all_checks_pass(checks)
    return report


def _k_is_split(A, K):
    """Whether the 2-dimensional subalgebra K contains a proper idempotent."""
    F = A.field
    for coeffs in linalg.nonzero_vectors(F, 2):
        v = linalg.vec_add(
            F, linalg.vec_scale(F, coeffs[0], K[0]), linalg.vec_scale(F, coeffs[1], K[1])
        )
        if A.mul(v, v) == v and v != A.unit():
            return True
    return False


def _all_checks_pass(checks):
    def ok(v):
        if isinstance(v, bool):
            return v
        if isinstance(v, dict):
            if "skipped" in v:
                return True
            if "match" in v:
                return v["match"] and v["injective"]
            if "holds" in v:
                return v["holds"]
            return all(ok(x) for x in v.values())
        if isinstance(v, list):
            return bool(v[0])
        return True

    # K-split is informational: split and non-split K both occur legitimately
    return all(ok(v) for k, v in checks.items() if k != "K-split")


def verify_catalog(field, ids=None):
    out = []
    for id in ids or catalog_ids():
        out.append(verify_entry(id, field))
    return out


# --- isomorphism-condition verification ------------------------------


def iso_test_groups():
    return [Z4, AbGroup(0, (6,)), Z2Z2, AbGroup(0, (3, 3)), AbGroup(0, (2, 4))]


def _b12_flip(A):
    """u -> v, v -> -u, extended by 1 -> 1."""
    F = A.field
    m = F.neg(F.one)
    return Morphism(
        A,
        A,
        (
            A.basis_vector(0),
            A.basis_vector(2),
            linalg.vec_scale(F, m, A.basis_vector(1)),
        ),
    )


def _b42_flip(A):
    """u -> v, v -> -u; on the even part e1 <-> e2, x -> -y, y -> -x."""
    F = A.field
    m = F.neg(F.one)
    nm = {n: i for i, n in enumerate(A.basis_names)}
    images = [None] * A.dim
    images[nm["e1"]] = A.basis_vector(nm["e2"])
    images[nm["e2"]] = A.basis_vector(nm["e1"])
    images[nm["x"]] = linalg.vec_scale(F, m, A.basis_vector(nm["y"]))
    images[nm["y"]] = linalg.vec_scale(F, m, A.basis_vector(nm["x"]))
    images[nm["u"]] = A.basis_vector(nm["v"])
    images[nm["v"]] = linalg.vec_scale(F, m, A.basis_vector(nm["u"]))
    return Morphism(A, A, tuple(images))


def _dim8_swap(A, cb):
    """u1 <-> u2, v1 <-> v2, u3 -> -u3, v3 -> -v3 (identity on e1, e2)."""
    F = A.field
    m = F.neg(F.one)
    v = cb.vectors
    assignment = {
        "e1": v["e1"],
        "e2": v["e2"],
        "u1": v["u2"],
        "u2": v["u1"],
        "u3": linalg.vec_scale(F, m, v["u3"]),
        "v1": v["v2"],
        "v2": v["v1"],
        "v3": linalg.vec_scale(F, m, v["v3"]),
    }
    return _images_on_standard(A, cb, assignment)


def _dim8_flip(A, cb):
    """e1 <-> e2, u_i <-> v_i."""
    v = cb.vectors
    assignment = {
        "e1": v["e2"],
        "e2": v["e1"],
        "u1": v["v1"],
        "u2": v["v2"],
        "u3": v["v3"],
        "v1": v["u1"],
        "v2": v["u2"],
        "v3": v["u3"],
    }
    return _images_on_standard(A, cb, assignment)


def _okubo_cross(A, cb):
    """e1 <-> e2, u1 <-> v2, u2 <-> v1, u3 <-> v3; commutes with tau_omega."""
    v = cb.vectors
    assignment = {
        "e1": v["e2"],
        "e2": v["e1"],
        "u1": v["v2"],
        "v2": v["u1"],
        "u2": v["v1"],
        "v1": v["u2"],
        "u3": v["v3"],
        "v3": v["u3"],
    }
    return _images_on_standard(A, cb, assignment)


def _images_on_standard(A, cb, assignment):
    F = A.field
    names = cb.names()
    basis = [cb.vectors[nm] for nm in names]
    images = []
    for i in range(A.dim):
        coeffs = linalg.coords_in_basis(F, basis, A.basis_vector(i))
        acc = [F.zero] * A.dim
        for c, nm in zip(coeffs, names):
            if c != F.zero:
                for k, a in enumerate(assignment[nm]):
                    acc[k] = F.add(acc[k], F.mul(c, a))
        images.append(tuple(acc))
    return Morphism(A, A, tuple(images))


def iso_condition_small(kind, field, budget=None):
    """For G in the test set and every (g, h): graded isomorphism exists
    iff g = h or g = -h.  Positive direction through the explicit maps,
    negative direction through exhaustive search.  Returns a report."""
    budget = budget or SearchBudget()
    ctx = _family_algebra(kind, field)
    A = ctx["algebra"]
    gamma = gamma_grading_b12 if kind == "b12" else gamma_grading_b42
    flip = _b12_flip(A) if kind == "b12" else _b42_flip(A)
    mismatches = []
    pairs = 0
    for G in iso_test_groups():
        gradings = {g: gamma(A, G, g) for g in G.elements()}
        for g in G.elements():
            for h in G.elements():
                pairs += 1
                expected = g == h or g == -h
                if expected:
                    cand = identity_morphism(A) if g == h else flip
                    got = try_verify_graded(cand, gradings[g], gradings[h])
                    if got is None and g == -g:
                        got = try_verify_graded(flip, gradings[g], gradings[h])
                    actual = got is not None
                    how = "explicit"
                else:
                    actual = find_graded_map(A, gradings[g], A, gradings[h], budget=budget) is not None
                    how = "search"
                if actual != expected:
                    mismatches.append(
                        {"group": str(G), "g": str(g), "h": str(h), "expected": expected,
                         "actual": actual, "how": how}
                    )
    return {"kind": kind, "field": field.name, "pairs": pairs, "mismatches": mismatches}


def okubo_gamma_equiv(t1, t2):
    """Isomorphism condition observed on Okubo superalgebras: the identity
    or the simultaneous swap-and-negate (g1,g2,g3) -> (-g2,-g1,-g3).

    This is strictly finer than gamma_equiv: an automorphism of the twisted
    product fixes the para-unit of the even part, hence commutes with the
    twisting automorphism and preserves its eigenspaces on the odd part,
    which rules out the other two Sym(2) x sign combinations.
    """
    g1, g2, g3 = t1
    return t2 == t1 or t2 == (-g2, -g1, -g3)


def iso_condition_dim8(kind, field, budget=None, max_order=4):
    """For zero-sum triples with entries of order <= max_order: graded
    isomorphism exists iff the triples are equivalent under Sym(2) and a
    global sign.  Explicit maps settle positives where they apply; every
    remaining case is settled by exhaustive search.

    For kind "okubo" the report also scores the finer okubo_gamma_equiv
    condition, which is the one the searches actually reproduce."""
    budget = budget or SearchBudget()
    if kind == "cayley":
        ctx = _family_algebra("cd8", field)
    elif kind == "okubo":
        ctx = _family_algebra("okubo-omega", field)
    else:
        raise ValueError(kind)
    A = ctx["algebra"]
    cb = ctx["cb"]
    swap = _dim8_swap(A, cb)
    flip = _dim8_flip(A, cb)
    cross = _okubo_cross(A, cb)
    mismatches = []
    corrected_mismatches = []
    pairs = 0
    for G in iso_test_groups():
        triples = zero_sum_triples(G, max_order=max_order)
        gradings = {t: gamma_grading_dim8(A, cb, G, t) for t in triples}
        for t1 in triples:
            for t2 in triples:
                pairs += 1
                expected = gamma_equiv(t1, t2)
                g1, g2, g3 = t1
                candidates = []
                if t2 == t1:
                    candidates.append(identity_morphism(A))
                if t2 == (g2, g1, g3):
                    candidates.append(swap)
                if t2 == (-g1, -g2, -g3):
                    candidates.append(flip)
                if t2 == (-g2, -g1, -g3):
                    candidates.extend([cross, flip.compose(swap)])
                actual = False
                how = "search"
                for cand in candidates:
                    if try_verify_graded(cand, gradings[t1], gradings[t2]) is not None:
                        actual = True
                        how = "explicit"
                        break
                if not actual:
                    actual = (
                        find_graded_map(A, gradings[t1], A, gradings[t2], budget=budget) is not None
                    )
                if actual != expected:
                    mismatches.append(
                        {"group": str(G), "gamma": [str(x) for x in t1],
                         "gamma2": [str(x) for x in t2], "expected": expected,
                         "actual": actual, "how": how}
                    )
                if kind == "okubo" and actual != okubo_gamma_equiv(t1, t2):
                    corrected_mismatches.append(
                        {"group": str(G), "gamma": [str(x) for x in t1],
                         "gamma2": [str(x) for x in t2], "actual": actual}
                    )
    report = {"kind": kind, "field": field.name, "pairs": pairs, "mismatches": mismatches}
    if kind == "okubo":
        report["corrected_mismatches"] = corrected_mismatches
    return report


def verify_iso_theorems(field_char3, field_char2, budget=None):
    """Run the four isomorphism-condition checks; returns per-kind reports."""
    return {
        "b12": iso_condition_small("b12", field_char3, budget),
        "b42": iso_condition_small("b42", field_char3, budget),
        "cayley": iso_condition_dim8("cayley", field_char2, budget),
        "okubo": iso_condition_dim8("okubo", field_char2, budget),
    }
