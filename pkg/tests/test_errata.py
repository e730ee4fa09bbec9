import json

import pytest

from gssfcheck.connections import ConnectionKind
from gssfcheck.contact_geometry import canonical_structure
from gssfcheck.errata import entry_dicts, errata_report
from gssfcheck.frame_algebra import Sampler

SFF = "[second-fundamental-form block]"
AMB = "[ambient-curvature block]"


@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_trace_factor_entries(errata_entries, s):
    e = next(e for e in errata_entries if e.location == f"Lemma {s}.1, Eq ({s}.1) {SFF}")
    assert "(m+1)(trace A_k)" in e.printed_expression
    assert "(m+1)" not in e.derived_expression


def test_pinned_constant_block_entry(errata_entries):
    e = next(e for e in errata_entries if e.location == f"Lemma 3.1, Eq (3.1) {AMB}")
    w = e.witness
    assert w["printed_value"] == pytest.approx(3.0, abs=1e-12)
    assert w["derived_value"] == pytest.approx(1.0, abs=1e-12)
    cfg = w["configuration"]
    assert cfg["params"] == [1.0, 0.0, 0.0]
    assert cfg["X"] == cfg["Y"] == "E1"
    assert cfg["n"] == 2 and cfg["m"] == 2
    assert cfg["tangent_frame"][0] == [1.0, 0.0, 0.0, 0.0, 0.0]


@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_scalar_bracket_entries(errata_entries, s):
    e = next(e for e in errata_entries if e.location == f"Lemma {s}.4, Eq ({s}.4) {SFF}")
    inside = e.printed_expression.startswith("[")
    assert inside == (s in (5, 6))


def test_witnesses_exceed_tolerance(errata_entries):
    for e in errata_entries:
        assert abs(e.witness["printed_value"] - e.witness["derived_value"]) > 1e-9


def test_no_curvature_entries(errata_entries):
    assert not any(e.location.startswith("Eq (") for e in errata_entries)


def test_sorted_by_location(errata_entries):
    locs = [e.location for e in errata_entries]
    assert locs == sorted(locs)


def test_independent_of_seed(errata_entries):
    other = errata_report(sampler=Sampler(12345))
    assert json.dumps(entry_dicts(other)) == json.dumps(entry_dicts(errata_entries))


def test_levi_civita_curvature_has_no_entry():
    from gssfcheck.errata import _curvature_entry

    assert _curvature_entry(ConnectionKind.LEVI_CIVITA, canonical_structure(2), Sampler(0), 1e-12, 50) is None


def test_entry_dict_keys(errata_entries):
    d = errata_entries[0].to_dict()
    assert list(d) == ["location", "printed", "derived", "witness"]
    assert set(d["witness"]) >= {"configuration", "printed_value", "derived_value"}
