"""Smoke tests for the _sharelab extension module."""

import json

import pytest

_sharelab = pytest.importorskip("_sharelab")


def test_classify_includes_fourth_family_iff_b_is_minus_a_eighth():
    fams = [json.loads(f) for f in _sharelab.classify("8", "-1")]
    assert [f["kind"] for f in fams] == ["i", "ii", "iii", "iv"]
    fams2 = [json.loads(f) for f in _sharelab.classify("1", "2")]
    assert [f["kind"] for f in fams2] == ["i", "ii", "iii"]


def test_verify_family_iv_document():
    doc = json.dumps(
        {
            "kind": "exppoly",
            "lambda": "1/6",
            "coeffs": ["8", "-48", "48"],
        }
    )
    report = json.loads(_sharelab.verify(doc, "8", "-1"))
    assert report["holds_a_implies"] is True
    assert report["holds_b_implies"] is True
    assert report["witnesses"] == []
    assert report["g_constant_estimate"] == "-2/9+0/1*i"
    assert report["counts"]["d"] == 2
    assert report["counts"]["j"] == 1
    assert report["counts"]["k"] == 1


def test_verify_negative_path_has_witnesses():
    doc = json.dumps(
        {"kind": "exppoly", "lambda": "1", "coeffs": ["0", "1", "1"]}
    )
    report = json.loads(_sharelab.verify(doc, "2", "3"))
    assert report["holds_b_implies"] is False
    assert any(w["defect"] >= 1e6 * 1e-24 for w in report["witnesses"])


def test_verify_expr_region_local():
    report = json.loads(
        _sharelab.verify_expr("exp(z^3)-1", "-1", "0", relaxed=True, grid=11)
    )
    assert report["region_local"] is True
    assert report["holds_a_implies"] is True
    assert report["holds_b_implies"] is True


def test_jet_extend_matches_closed_form():
    ext = _sharelab.jet_extend(["8", "8", "4"], "8", "-1", 1, "a-point", 12)
    direct = _sharelab.family_iv_jet("8", "1", "1", 12)
    assert ext == direct
    assert ext[3] == "14/9+0/1*i"


def test_diophantine_certificates():
    assert _sharelab.square_family_scan(2, 20000) == []
    assert _sharelab.square_family_scan(3, 20000) == []
    assert _sharelab.square_family_scan(4, 20000) == []

    sieve = _sharelab.mod_sieve_k4()
    assert sorted(sieve["value_residues"]) == [2, 3, 5, 8]
    assert sorted(sieve["square_residues"]) == [0, 1, 4, 7]
    assert sieve["disjoint"] is True

    assert _sharelab.diff_squares_k3() == [(9, 8, 0)]

    pell = json.loads(
        _sharelab.pell_descent(D=3, N=13, xmod=(1, 6), parity="even", bound=51.0)
    )
    assert pell["solutions"] == []
    assert pell["closure_check"] == "pass"
    assert pell["bound_pass"] is True

    free = json.loads(_sharelab.pell_descent(D=3, N=13, bound=51.0))
    assert ["4", "1"] in free["solutions"]
    assert ["5", "2"] in free["solutions"]


def test_mnk_and_dj_sweeps():
    cert = _sharelab.mnk_feasible(30, 30, 9)
    assert cert["solutions"] == []
    assert cert["m1_impossible"] is True
    assert cert["m_ge3_inequality"] is True
    assert not _sharelab.dj_equation_check(4, 2, 2, 7)


def test_case_analysis():
    cases = _sharelab.enumerate_cases()
    feas = [(c["d"], c["j"], c["k"]) for c in cases["feasible"]]
    assert feas == [(2, 1, 1), (3, 1, 2), (4, 2, 2)]

    d3 = _sharelab.refute_case_d3()
    assert d3["refuted"] is True
    assert {b["discriminant"] for b in d3["branches"]} == {"-4i", "4i"}

    d4 = _sharelab.refute_case_d4()
    assert d4["refuted"] is True
    assert any(b["discriminant"] == "-13w" for b in d4["branches"])

    fam = json.loads(_sharelab.resolve_case_d2("8"))
    assert fam["kind"] == "iv"
    assert fam["parameters"]["b"] == "-1/1+0/1*i"
    assert fam["parameters"]["lambda"] == "1/6+0/1*i"


def test_spherical_scan_grows_for_the_fast_counterexample():
    m2 = _sharelab.spherical_scan_expr("exp(z^2)-1", 0, 2, 0, 2, grid=96)
    m4 = _sharelab.spherical_scan_expr("exp(z^2)-1", 0, 4, 0, 4, grid=192)
    assert m2 < m4


def test_parser_canonical_form():
    assert _sharelab.parse_expr_canonical("exp(z^3)-1") == "exp(z^3)-1"
    with pytest.raises(Exception):
        _sharelab.parse_expr_canonical("z^(1/2)")
