"""Acceptance criteria 1-9, one PASS/FAIL line per criterion (or per isolated sub-claim)."""
import numpy as np
import pytest

from gssfcheck.cli import RunConfig, run
from gssfcheck.connections import DEFORMED_KINDS, ConnectionKind, compare_curvature
from gssfcheck.contact_geometry import SpaceFormParams, canonical_structure, validate
from gssfcheck.errata import entry_dicts, errata_report
from gssfcheck.frame_algebra import Sampler
from gssfcheck.invariants import (
    FormVariant,
    equality_check,
    ricci_closed,
    ricci_direct,
    scalar_closed,
    scalar_direct,
    theorem_inequalities,
)
from gssfcheck.submanifolds import (
    asi_split,
    build,
    random_minimal_sff,
    random_submanifold,
    random_tangent,
    verify_slant_identity,
)

ALL = list(ConnectionKind)
P, D = FormVariant.AS_PRINTED, FormVariant.ORACLE_DERIVED

# tolerances and counts, pinned per criterion
AC1_TOL = 1e-12
AC2_TRIALS, AC2_TOL_LC, AC2_TOL, AC2_SEEDS = 1000, 1e-12, 1e-9, (11, 22, 33)
AC3_PAIRS, AC3_TOL = 500, 1e-10
AC4_CONFIGS, AC4_TOL, AC4_PINNED_TOL = 200, 1e-9, 1e-12
AC5_CONFIGS, AC5_TOL, AC5_PINNED_TOL, AC5_CONSISTENCY_TOL = 100, 1e-9, 1e-12, 1e-12
AC6_SUBS, AC6_SLACK_FLOOR, AC6_SLACK_TOL, AC6_MINIMALITY_TOL = 100, -1e-10, 1e-9, 1e-12
AC6_VECTORS = 10
AC7_TOL = 1e-10
AC9_TRIALS = 100


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  {label}  {detail}")
        return ok

    return emit


def _random_config(s, m):
    acs = canonical_structure(3)
    sub = random_submanifold(acs, m, s)
    sub = sub.with_sff(s.symmetric_coeffs((m + 1, m + 1, sub.codim)))
    return sub, SpaceFormParams(*s.scalars(-2, 2, 3))


def _pinned():
    e = np.eye(5)
    return build(canonical_structure(2), [e[0], e[2], e[4]]), ConnectionKind.SEMISYMMETRIC_METRIC, SpaceFormParams(1, 0, 0)


def test_ac1_structure_validation(report):
    worst = max(validate(canonical_structure(n), AC1_TOL).max_residual for n in range(1, 6))
    assert report("AC1 structure identities n=1..5", worst <= AC1_TOL, f"max residual {worst:.2e}")


@pytest.mark.parametrize("kind", ALL, ids=[k.value for k in ALL])
def test_ac2_curvature_adjudication(kind, report):
    tol = AC2_TOL_LC if kind is ConnectionKind.LEVI_CIVITA else AC2_TOL
    reps = [compare_curvature(kind, canonical_structure(3), Sampler(s), AC2_TRIALS, (-2, 2), tol) for s in AC2_SEEDS]
    worst = max(r.max_residual for r in reps)
    ok = all(r.matched for r in reps) and worst <= tol
    detail = f"max residual {worst:.2e} over {len(AC2_SEEDS)} seeds x {AC2_TRIALS} trials"
    if not ok:
        detail += f"; terms {[d['term'] for r in reps for d in r.term_decomposition]}"
    assert report(f"AC2 curvature {kind.value}", ok, detail)


def _ac3_subs():
    e5, e7 = np.eye(5), np.eye(7)
    acs2, acs3 = canonical_structure(2), canonical_structure(3)
    return {
        "invariant": build(acs2, [e5[0], e5[2], e5[4]]),
        "anti_invariant": build(acs2, [e5[0], e5[3], e5[4]]),
        "slant_1/2": build(acs2, [e5[0], np.sqrt(3) / 2 * e5[1] + 0.5 * e5[2], e5[4]]),
        "mixed_n3_m4": build(acs3, [e7[0], e7[3], e7[1], np.sqrt(3) / 2 * e7[2] + 0.5 * e7[4], e7[6]]),
    }


def test_ac3_slant_identity(report):
    worst, lams = 0.0, {}
    for i, (name, sub) in enumerate(_ac3_subs().items()):
        split = asi_split(sub)
        lams[name] = sorted(round(c.lam, 6) for c in split.clusters)
        worst = max(worst, verify_slant_identity(sub, split, Sampler(i), AC3_PAIRS, AC3_TOL).max_residual)
    ok = worst <= AC3_TOL and lams["mixed_n3_m4"] == [0.5, 1.0] and lams["slant_1/2"] == [0.5]
    assert report("AC3 slant identity", ok, f"max residual {worst:.2e}; clusters {lams}")


def test_ac4_ricci_coherence(report):
    worst = {}
    for ki, kind in enumerate(ALL):
        ks = Sampler(400 + ki)
        for t in range(AC4_CONFIGS):
            s = ks.spawn(t)
            sub, p = _random_config(s, 1 + t % 5)
            split = asi_split(sub)
            X, Y = random_tangent(sub, s), random_tangent(sub, s)
            direct = ricci_direct(sub, kind, p, X, Y)
            for form in ("general", "asi"):
                r = abs(ricci_closed(sub, kind, p, X, Y, form, D, split) - direct)
                worst[(kind.value, form)] = max(worst.get((kind.value, form), 0.0), r)
    sub, kind, p = _pinned()
    e1, xi = np.eye(5)[0], sub.acs.xi
    pinned = [
        (ricci_direct(sub, kind, p, e1, e1), 1.0),
        (ricci_direct(sub, kind, p, xi, xi), 2.0),
        (ricci_closed(sub, kind, p, e1, e1, "general", P), 3.0),
        (ricci_closed(sub, kind, p, xi, xi, "general", P), 4.0),
    ]
    pin_err = max(abs(a - b) for a, b in pinned)
    m = max(worst.values())
    ok = m <= AC4_TOL and pin_err <= AC4_PINNED_TOL
    assert report("AC4 Ricci oracle coherence + pinned regression", ok, f"max coherence {m:.2e}; pinned error {pin_err:.2e}")


def test_ac5_scalar_coherence(report):
    worst = cons = 0.0
    for ki, kind in enumerate(ALL):
        ks = Sampler(500 + ki)
        for t in range(AC5_CONFIGS):
            s = ks.spawn(t)
            sub, p = _random_config(s, 1 + t % 5)
            tau = scalar_direct(sub, kind, p)
            worst = max(worst, abs(scalar_closed(sub, kind, p, asi_split(sub), D) - tau))
            trace = sum(ricci_direct(sub, kind, p, E, E) for E in sub.frame)
            cons = max(cons, abs(sub.m * (sub.m + 1) * tau - trace))
    sub, kind, p = _pinned()
    pin_err = max(
        abs(scalar_direct(sub, kind, p) - 2 / 3),
        abs(scalar_closed(sub, kind, p, asi_split(sub), P) - 5 / 3),
    )
    ok = worst <= AC5_TOL and pin_err <= AC5_PINNED_TOL and cons <= AC5_CONSISTENCY_TOL
    detail = f"max coherence {worst:.2e}; pinned error {pin_err:.2e}; consistency {cons:.2e}"
    assert report("AC5 scalar oracle coherence + pinned regression", ok, detail)


_AC6_CACHE: dict = {}


def _ac6_run(kind):
    if kind in _AC6_CACHE:
        return _AC6_CACHE[kind]
    acs = canonical_structure(3)
    agg = {
        "i_as_printed": np.inf, "i_oracle_derived": np.inf,
        "ii_as_printed": np.inf, "ii_oracle_derived": np.inf,
        "slack_vs_squares": 0.0, "minimality": 0.0,
    }
    ks = Sampler(600 + DEFORMED_KINDS.index(kind))
    for t in range(AC6_SUBS):
        s = ks.spawn(t)
        m = 2 if t % 2 == 0 else 4
        sub = random_submanifold(acs, m, s)
        sub = sub.with_sff(random_minimal_sff(sub, s))
        p = SpaceFormParams(*s.scalars(-2, 2, 3))
        rep = theorem_inequalities(sub, kind, p, asi_split(sub), s.spawn(0), AC6_VECTORS, AC6_SLACK_TOL)
        for v in ("as_printed", "oracle_derived"):
            agg[f"i_{v}"] = min(agg[f"i_{v}"], rep.min_slack_i[v])
            agg[f"ii_{v}"] = min(agg[f"ii_{v}"], rep.slack_ii[v])
        agg["slack_vs_squares"] = max(agg["slack_vs_squares"], rep.max_slack_vs_squares)
        agg["minimality"] = max(agg["minimality"], rep.max_minimality_residual)
    _AC6_CACHE[kind] = agg
    return agg


AC6_CLAIMS = ["i_as_printed", "i_oracle_derived", "slack_vs_squares", "ii_as_printed", "ii_oracle_derived", "minimality"]


@pytest.mark.parametrize("claim", AC6_CLAIMS)
@pytest.mark.parametrize("kind", DEFORMED_KINDS, ids=[k.value for k in DEFORMED_KINDS])
def test_ac6_theorems(kind, claim, report):
    agg = _ac6_run(kind)
    val = agg[claim]
    if claim.startswith(("i_", "ii_")):
        ok, detail = val >= AC6_SLACK_FLOOR, f"min slack {val:.3e}"
    elif claim == "slack_vs_squares":
        ok, detail = val <= AC6_SLACK_TOL, f"max |slack - sum_k |A_k X|^2| {val:.3e}"
    else:
        ok, detail = val <= AC6_MINIMALITY_TOL, f"max residual {val:.3e}"
    assert report(f"AC6 {kind.value} {claim}", ok, detail)


def test_ac7_equality_remarks(report):
    e5, e7 = np.eye(5), np.eye(7)
    subs = [
        build(canonical_structure(2), [e5[0], e5[2], e5[4]]),
        build(canonical_structure(3), [e7[0], e7[1], e7[3], e7[4], e7[6]]),
    ]
    s = Sampler(7)
    worst = 0.0
    for kind in DEFORMED_KINDS:
        for sub in subs:
            for t in range(5):
                p = SpaceFormParams(*s.scalars(-2, 2, 3))
                rep = equality_check(sub, kind, p, asi_split(sub), s.spawn(t), AC7_TOL)
                worst = max(worst, rep.max_gap_i, abs(rep.gap_ii))
    assert report("AC7 equality on totally geodesic invariant", worst <= AC7_TOL, f"max gap {worst:.2e}")


def test_ac8_errata_report(report):
    entries = errata_report(sampler=Sampler(1))
    again = entry_dicts(errata_report(sampler=Sampler(2)))
    locs = {e.location: e for e in entries}
    sff, amb = "[second-fundamental-form block]", "[ambient-curvature block]"
    trace_ok = all(
        "(m+1)(trace A_k)" in locs[f"Lemma {s}.1, Eq ({s}.1) {sff}"].printed_expression for s in (3, 4, 5, 6)
        if f"Lemma {s}.1, Eq ({s}.1) {sff}" in locs
    ) and all(f"Lemma {s}.1, Eq ({s}.1) {sff}" in locs for s in (3, 4, 5, 6))
    pin = locs.get(f"Lemma 3.1, Eq (3.1) {amb}")
    pin_ok = pin is not None and (pin.witness["printed_value"], pin.witness["derived_value"]) == pytest.approx((3.0, 1.0), abs=1e-12)
    bracket_ok = all(f"Lemma {s}.4, Eq ({s}.4) {sff}" in locs for s in (3, 4, 5, 6))
    witnesses_ok = all(abs(e.witness["printed_value"] - e.witness["derived_value"]) > 1e-9 for e in entries)
    deterministic = entry_dicts(entries) == again
    exit_ok = run(RunConfig(suite="errata", trials=20)).exit_code == 0
    ok = trace_ok and pin_ok and bracket_ok and witnesses_ok and deterministic and exit_ok
    detail = (
        f"{len(entries)} entries; trace factor {trace_ok}; pinned block {pin_ok}; brackets {bracket_ok}; "
        f"seed-independent {deterministic}; exit code unaffected {exit_ok}"
    )
    assert report("AC8 errata report", ok, detail)


def test_ac9_determinism(report):
    base = dict(suite="all", n=3, m=4, seed=42, trials=AC9_TRIALS)
    a = run(RunConfig(**base)).to_json(include_duration=False)
    b = run(RunConfig(**base)).to_json(include_duration=False)
    c = run(RunConfig(**base, workers=4)).to_json(include_duration=False)
    ok = a == b == c
    assert report("AC9 byte-identical JSON across runs and thread counts", ok, f"{len(a)} bytes")
