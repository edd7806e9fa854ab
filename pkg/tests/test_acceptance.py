"""Acceptance suite: one test per criterion, printed as pass/fail lines.

Criterion 6 is asserted exactly as stated.  Its Okubo-superalgebra half
fails on mathematical grounds: the Sym(2)-and-sign equivalence of degree
triples is necessary but not sufficient for a degree-preserving
isomorphism of the twisted product, because automorphisms of the twist
fix the para-unit of the even part, hence commute with the twisting
automorphism and preserve its odd eigenspaces.  The exhaustive searches
prove the missing isomorphisms do not exist; the corrected condition
(identity or simultaneous swap-and-negate) matches the searches on all
11313 pairs and is asserted in its own test below.
"""

import pytest

from compsuper import acceptance


def _report(r):
    status = "PASS" if r["passed"] else "FAIL"
    print(f"[{status}] criterion {r['id']}: {r['title']}")
    return r


@pytest.fixture(scope="module")
def iso_reports():
    from compsuper.catalog import verify_iso_theorems
    from compsuper.fields import GF

    return verify_iso_theorems(GF(9), GF(4))


def test_criterion_1_axiom_suite():
    r = _report(acceptance.criterion_1())
    assert r["passed"], r["failures"]
    assert r["instances"] >= 50


def test_criterion_2_canonical_basis_every_seed():
    r = _report(acceptance.criterion_2())
    assert r["passed"], r["failures"]
    assert r["seeds"] == 135  # nonzero isotropic vectors of the split form


def test_criterion_3_catalog():
    r = _report(acceptance.criterion_3())
    assert r["passed"], r["failures"]
    assert r["labelled"] == 29


def test_criterion_4_coarsening_lattices():
    r = _report(acceptance.criterion_4())
    assert r["passed"], r["failures"]


def test_criterion_5_twisted_b12_rigidity():
    r = _report(acceptance.criterion_5())
    assert r["passed"], r["failures"]


def test_criterion_6_isomorphism_conditions(iso_reports):
    failures = {k: r["mismatches"] for k, r in iso_reports.items() if r["mismatches"]}
    r = {
        "id": 6,
        "title": "graded-isomorphism conditions (as stated)",
        "passed": not failures,
    }
    _report(r)
    assert iso_reports["b12"]["mismatches"] == []
    assert iso_reports["b42"]["mismatches"] == []
    assert iso_reports["cayley"]["mismatches"] == []
    # The next assertion states the claimed equivalence for the Okubo
    # superalgebra and fails: see the module docstring and the test below.
    assert iso_reports["okubo"]["mismatches"] == []


def test_criterion_6_okubo_corrected_condition(iso_reports):
    ok = iso_reports["okubo"]
    print(f"[INFO] okubo pairs={ok['pairs']} claimed-mismatches={len(ok['mismatches'])} "
          f"corrected-mismatches={len(ok.get('corrected_mismatches', []))}")
    assert ok["pairs"] == 11313
    assert ok.get("corrected_mismatches") == []
    # every failing pair is a claimed-equivalent pair with no isomorphism,
    # never an isomorphism outside the claimed relation
    assert all(m["expected"] and not m["actual"] for m in ok["mismatches"])


def test_criterion_7_okubo_structure_facts():
    r = _report(acceptance.criterion_7())
    assert r["passed"], r["failures"]


def test_criterion_8_para_units():
    r = _report(acceptance.criterion_8())
    assert r["passed"], r["failures"]


def test_criterion_9_fineness():
    r = _report(acceptance.criterion_9())
    assert r["passed"], r["failures"]
    # the nst twist's main grading admits no single split (no 3-gradings
    # exist without a cube root of unity)
    assert r["main_okubo_nst"] == "fine"


def test_criterion_10_orthogonality():
    r = _report(acceptance.criterion_10())
    assert r["passed"], r["failures"]
    assert r["gradings"] == 73
