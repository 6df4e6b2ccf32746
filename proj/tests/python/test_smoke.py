import pytest

import weylrestrict as wr


def test_root_system_counts():
    rs = wr.root_system("B", 3)
    assert len(rs["roots"]) == 18
    assert len(rs["positive_roots"]) == 9
    assert rs["rho"] == ["1/2", "3/2", "5/2"]


def test_weyl_orders():
    assert wr.weyl_order("B", 3) == 48
    assert wr.weyl_order("D", 4) == 192
    assert wr.weyl_order("D", 4, extended=True) == 384


def test_restriction_reports():
    assert wr.check_restriction("C", 2, 4)["pass"]
    d = wr.check_restriction("D", 4, 5)
    assert d["pass"] and d["d_index_two"] and not d["equals_small_group"]


def test_invariants_and_pfaffian():
    r = wr.check_invariants("D", 4, 6)
    assert r["pass"] and r["pfaffian_odd"] and r["restricted_even"]
    fam = wr.invariants("A", 2)
    assert fam["rank"] == 2


def test_catalog_and_xi():
    assert len(wr.catalog()["families"]) == 11
    assert wr.catalog_lookup("BDI", 3, 5)["rank"] == 3
    assert len(wr.class_one_weights("C", 3)) == 3


def test_radius_and_omega():
    assert wr.injectivity_radius("A", 3) == "sqrt(2)*pi"
    assert wr.injectivity_radius("D", 5) == "2*pi"
    assert wr.omega_contains("omega", "A", 2, ["1/10", "0", "-1/10"])
    assert not wr.omega_contains("omega", "A", 2, ["3/10", "0", "-3/10"])


def test_dimensions_and_branching():
    assert wr.weyl_dim("A", 2, [1, 1]) == 8
    b = wr.branch("A", 1, 2, [1, 1])
    assert b["large_dim"] == 8


def test_verify_report_shape_and_determinism():
    a = wr.verify("radius/*|negative-example/*", seed=3)
    b = wr.verify("radius/*|negative-example/*", seed=3)
    assert a == b
    assert a["schema"] == wr.SCHEMA == "weyl-restrict/1"
    assert a["summary"]["fail"] == 0
    assert [r["id"] for r in a["reports"]] == sorted(r["id"] for r in a["reports"])


def test_errors():
    with pytest.raises(ValueError):
        wr.root_system("D", 2)
    with pytest.raises(KeyError):
        wr.verify("no-such-check/*")
