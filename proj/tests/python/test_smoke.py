import pathlib

import pytest

import transit

EXAMPLES = pathlib.Path(__file__).resolve().parents[2] / "docs" / "examples"


def z4():
    return transit.Ndds(4, [[1, 2, 3, 0]], period=[0], metric="cyclic")


def test_rotation_properties():
    s = z4()
    assert s.preperiod == 0 and s.cycle == 4
    assert s.iterate(3) == [3, 0, 1, 2]
    assert transit.decide(s, "TT")[0] == "True"
    assert transit.decide(s, "TM")[0] == "False"
    assert transit.decide(s, "LEO")[0] == "False"


def test_suites_report():
    r = transit.equivalence_suite(z4(), "ST")
    assert r.all_pass()
    assert all(rec["verdict"] == "True" for rec in r.records)
    assert transit.implication_lattice(z4()).exit_code == 0


def test_one_way_failure_is_visible():
    s = transit.Ndds(2, [[0, 0], [0, 1]], period=[1, 0])
    r = transit.equivalence_suite(s, "TT")
    failed = [rec for rec in r.records if rec["verdict"] == "False"]
    assert [rec["variant"] for rec in failed] == ["v=>iii"]


def test_gds():
    assert transit.gds_decide(z4(), "TT")[0] == "True"
    with pytest.raises(transit.Error) as info:
        transit.gds_decide(z4(), "VST")
    assert info.value.kind == "degenerate-topology"
    assert transit.gds_decide(z4(), "VST", family_mode="iterate")[0] == "True"


def test_documents():
    text = (EXAMPLES / "z4_rotation.sys").read_text()
    canonical = transit.parse_document(text)
    assert transit.parse_document(canonical) == canonical
    rep = transit.run("check", text, prop="TT")
    assert rep.exit_code == 0
    shift = (EXAMPLES / "binary_shift.sys").read_text()
    rep = transit.run("check", shift, prop="LEO", depth=5)
    assert rep.records[0]["witness"] == "k=5"


def test_document_errors():
    with pytest.raises(transit.DocumentError) as info:
        transit.parse_document("SPACE\nbackend finite\npoints 2\nFAMILY\nmap 0 5\nSEQUENCE\nperiod 0\n")
    assert info.value.line == 5
    assert info.value.kind == "invalid-map"
    assert isinstance(info.value, transit.Error)


def test_invalid_maps():
    with pytest.raises(transit.Error):
        transit.Ndds(2, [[0, 3]])


def test_cross_validate_deterministic():
    a = transit.cross_validate(seed=3, samples=20, exhaustive=False, threads=1)
    b = transit.cross_validate(seed=3, samples=20, exhaustive=False, threads=2)
    assert a.structured() == b.structured()
