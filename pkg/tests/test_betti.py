import pytest

from perfcone import cones as cn
from perfcone.betti import (
    CatalogDepthError,
    ConsistencyReport,
    Space,
    assemble,
    consistency_report,
    lambda_series,
    std_identity_check,
    stratum_series,
)


def even(values, upto):
    return tuple(values[k] for k in range(0, upto + 1, 2))


def test_lambda_series_values():
    lam = lambda_series(14)
    assert even(lam.coeffs, 12) == (1, 1, 1, 2, 2, 3, 4)
    assert all(lam[k] == 0 for k in range(1, 14, 2))
    # degree 14 admits five monomials in generators of degrees 2, 6, 10, 14
    assert lam[14] == 5


def test_stratum_series_sigma1():
    e = cn.catalog_entry("1")
    s = stratum_series(e, 10)
    assert even(s.coeffs, 10) == (1, 2, 3, 5, 7, 10)


def test_stratum_series_k3():
    s = stratum_series(cn.catalog_entry("K3"), 6)
    assert even(s.coeffs, 6) == (1, 2, 4, 8)


def test_stratum_series_standard3():
    s = stratum_series(cn.catalog_entry("1+1+1"), 6)
    assert even(s.coeffs, 6) == (1, 2, 4, 8)


def test_stratum_series_codim4_row():
    values = [even(stratum_series(cn.catalog_entry(n), 4).coeffs, 4) for n in ("1+1+1+1", "K3+1", "C4")]
    assert values == [(1, 2, 4), (1, 3, 7), (1, 2, 4)]
    assert [sum(v) for v in zip(*values)] == [3, 7, 15]


def test_stratum_series_placeholder_depth():
    entry = next(e for e in cn.catalog(6) if e.cone is None)
    assert stratum_series(entry, 0).coeffs == (1,)
    with pytest.raises(CatalogDepthError):
        stratum_series(entry, 2)


def test_perf_totals():
    report = assemble("perf", 12)
    assert even(report.totals, 10) == (1, 2, 4, 9, 18, 38)
    assert all(report.totals[k] == 0 for k in range(1, 13, 2))
    # recomputation from the strata gives 84 in degree 12 (the published
    # table's 83 differs in exactly one cell, surfaced by consistency_report)
    assert report.totals[12] == 84


def test_matr_totals():
    report = assemble("matr", 12)
    assert even(report.totals, 10) == (1, 2, 4, 9, 18, 37)
    assert report.totals[12] == 79


def test_simp_smooth_agree_with_perf_low_degrees():
    perf = assemble("perf", 12)
    for kind in ("simp", "smooth"):
        other = assemble(kind, 12)
        assert other.totals[:11] == perf.totals[:11]


def test_beta2_betti_numbers():
    report = assemble(Space("beta_open", 2), 8)
    assert even(report.totals, 8) == (1, 3, 6, 11, 19)
    assert all(report.totals[k] == 0 for k in range(1, 9, 2))


def test_satake_is_lambda_series():
    report = assemble("satake", 30)
    assert report.totals == lambda_series(30).coeffs


def test_universal1_equals_mumford_partial():
    assert assemble(Space("universal", 1), 20).totals == assemble("partial", 20).totals


def test_mumford_partial_is_lambda_over_one_minus_t2():
    report = assemble("partial", 10)
    assert even(report.totals, 10) == (1, 2, 3, 5, 7, 10)


def test_std_identity():
    assert std_identity_check(20)
    assert std_identity_check(0)
    assert not std_identity_check(20, boundary_degrees=(2, 4, 5, 8))


def test_depth_errors():
    with pytest.raises(CatalogDepthError):
        assemble("perf", 14)


def test_space_parsing():
    assert Space.parse("perf") == Space("perf")
    assert Space.parse("beta2") == Space("beta_open", 2)
    assert Space.parse("universal:3") == Space("universal", 3)
    assert Space.parse("partial") == Space("mumford_partial")
    with pytest.raises(ValueError):
        Space.parse("everything")


def test_matroidal_difference_localized():
    perf = assemble("perf", 12)
    matr = assemble("matr", 12)
    diff = tuple(p - m for p, m in zip(perf.totals, matr.totals))
    # one class at degree 10 (the non-matroidal rank 5 cone), five at 12:
    # its H^2 (2 classes) plus the three non-matroidal dim-6 placeholders
    assert diff == (0,) * 10 + (1, 0, 5)


def test_consistency_report_flags_single_cell():
    rep = consistency_report()
    assert isinstance(rep, ConsistencyReport)
    assert rep.mismatches == (("beta2", 12, 19, 18),)
    assert rep.expected_discrepancy_only
    assert rep.computed["codim6"] == (0, 0, 0, 0, 0, 0, 13)


def test_report_renderers():
    report = assemble("perf", 4)
    text = report.to_text(breakdown=True)
    assert "interior" in text and "total" in text
    csv_text = report.to_csv()
    header = csv_text.splitlines()[0].split(",")
    assert header[0] == "degree" and header[-1] == "total"
    doc = report.to_document()
    assert doc["space"] == "perf"
    assert {"space", "degree", "stratum", "value"} <= set(doc["entries"][0])
