"""Smoke tests for the python module (built extension on PYTHONPATH)."""

import hilbproj as hp
import pytest

FERMAT = "x0^4 + x1^4 + x2^4"


def test_genus_values():
    assert hp.hilb_genus(4, 2) == 7
    assert hp.hurwitz_genus(4, 2) == 7
    for d in range(1, 11):
        for a in range(1, d + 1):
            assert hp.hilb_genus(d, a) == hp.hurwitz_genus(d, a)


def test_hypersurface_and_fiber_profile():
    quartic = hp.Hypersurface(FERMAT)
    assert quartic.degree == 4
    assert quartic.m == 1
    assert hp.fiber_profile(quartic, "1,2,5", "0,1,3") == [1, 1, 1, 1]
    assert hp.singular_count_on_line(quartic, "1,2,5", "0,1,3") == 0


def test_pencil_and_certification():
    quartic = hp.Hypersurface(FERMAT)
    report = hp.pencil_report(quartic, "1,2,5", certify=True)
    assert report["disc_degree"] == 12
    assert report["squarefree"] is True
    assert report["branch_count"] == 12
    assert report["general_center"] is True

    bad = hp.pencil_report(quartic, "1,2,3", certify=True)
    assert bad["general_center"] is False
    assert "squarefree" in bad["diagnostics"]
    assert bad["branch_samples"][0]["profile"] == [2, 2]


def test_genus_report_from_data():
    quartic = hp.Hypersurface(FERMAT)
    report = hp.genus_report(quartic, "1,2,5", 2)
    assert report["cover_degree"] == 6
    assert report["branch_points"] == 12
    assert report["genus_hurwitz"] == 7
    with pytest.raises(ValueError):
        hp.genus_report(quartic, "1,2,3", 2)  # non-general center


def test_hilb_report():
    report = hp.hilb_report([2, 1, 1], 2)
    assert report["degree_check"] == 6
    assert [p["k"] for p in report["points"]] == [
        [2, 0, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
    ]
    assert [p["ram_index"] for p in report["points"]] == [1, 2, 2, 1]
    assert hp.enumerate_fiber_points([1, 1, 1, 1], 2) == [
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ]


def test_punctual_oracles_agree():
    for h in range(1, 9):
        for k in range(1, h + 1):
            assert hp.punctual_hom_ext_dim(h, k) == hp.brute_hom_dim(h, k)


def test_multiplicity_bound():
    assert hp.multiplicity_bound([2, 1, 1], 1)
    assert not hp.multiplicity_bound([2, 2], 1)


def test_cone_report():
    report = hp.cone_report(3, 2, 4)
    assert report["fano"] is True
    assert report["simplicial"] is False
    assert len(report["extremal_rays"]) == 4
    assert report["minusK_dot_V"] == "3"
    assert not hp.is_fano(3, 3, 4)


def test_classification():
    cases = hp.classify_fano_threefolds()
    assert cases["count"] == 8
    flags = [(c["d"], c["a"]) for c in cases["cases"] if not c["tau_isomorphism"]]
    assert flags == [(4, 2)]


def test_vmrt_invariants():
    assert hp.vmrt_degree(4, 2) == 6
    assert hp.plane_vmrt_arith_genus(6) == 10
    assert hp.tau_is_isomorphism(4, 1)
    assert not hp.tau_is_isomorphism(4, 2)
    assert not hp.iso_obstruction_identity(4, 2)
    assert hp.branch_curve_nodes(4) == 12


def test_monodromy_deterministic():
    quartic = hp.Hypersurface(FERMAT)
    r1 = hp.monodromy_report(quartic, "1,2,5", 60, seed=7)
    r2 = hp.monodromy_report(quartic, "1,2,5", 60, seed=7)
    assert r1 == r2
    assert r1["samples_used"] + r1["discarded"] + r1["skipped"] == 60


def test_errors_are_typed():
    with pytest.raises(ValueError):
        hp.Hypersurface("x0^2 + x1")  # inhomogeneous
    with pytest.raises(ValueError):
        hp.hilb_genus(4, 0)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
