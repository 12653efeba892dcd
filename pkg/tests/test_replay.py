"""Replays: manifest enforcement, transported arrow checks and the named claims."""

import pytest

from dihedral_noether import actions as A
from dihedral_noether.ratfield.ratfunc import Ring, SubstitutionMap
from dihedral_noether.replay.manifest import MANIFEST, ManifestError
from dihedral_noether.replay.recorder import Recorder, Stage
from dihedral_noether.replay.regular import regular_reduction


def status(transcripts, target, cid):
    recs = {r.id: r for r in transcripts[0][target].records}
    return recs[cid].status


def test_manifest_ids_are_unique_and_kinds_known():
    from dihedral_noether.replay.transcript import KINDS
    for key, entries in MANIFEST.items():
        ids = [cid for cid, _ in entries]
        assert len(ids) == len(set(ids)), key
        assert all(kind in KINDS for _, kind in entries)


def test_transcripts_follow_the_manifest(transcripts):
    for key, tr in transcripts[0].items():
        assert [(r.id, r.kind) for r in tr.records] == [tuple(e) for e in MANIFEST[key]]


def test_missing_claim_raises():
    rec = Recorder("core")
    rec.add("core/quotient-identity", "identity", "identity", "claim", True)
    with pytest.raises(ManifestError, match="missing"):
        rec.finish()


def test_wrong_kind_raises():
    rec = Recorder("core")
    for cid, kind in MANIFEST["core"]:
        rec.add(cid, "L", "relation" if cid == "core/quotient-identity" else kind, "claim", True)
    with pytest.raises(ManifestError, match="kind"):
        rec.finish()


def test_arrows_are_checked_in_the_previous_ring():
    Y = Ring(["y0", "y1"])
    y0, y1 = Y.gens()
    spec = A.ActionSpec(Y, {"sigma": A.FieldAut(Y, [y1, -y0])}, ["sigma^4"])
    Z = Ring(["y0", "z1"])
    w0, z1 = Z.gens()
    st = Stage(spec, SubstitutionMap(Z, Y, [y0, y1 / y0]))
    rec = Recorder("core")
    assert rec.arrows("good", "L", "sigma: z1 -> -1/z1", st, "sigma", [(z1, -1, 1 / z1)])
    assert not rec.arrows("bad", "L", "sigma: z1 -> 1/z1", st, "sigma", [(z1, 1, 1 / z1)])
    bad = rec.records[-1]
    assert bad.status == "fail" and "lhs[0]" in bad.witness and "rhs[0]" in bad.witness


def test_a_single_failure_fails_the_transcript():
    rec = Recorder("core")
    rec.add("a", "L", "identity", "c", True)
    rec.equal("b", "L", "one is two", Ring(["x"]).one(), Ring(["x"]).const(2))
    t = rec.transcript
    assert t.status == "fail" and [r.id for r in t.failures()] == ["b"]


def test_empty_certificate_does_not_pass():
    from dihedral_noether.descent import InvariantCertificate
    rec = Recorder("core")
    assert not rec.certificate("c", "L", "nothing", InvariantCertificate([]))


@pytest.mark.parametrize("n", [6, 9, 10])
def test_regular_reduction_fragment(n):
    rec = Recorder(f"reg{n}")
    reg = regular_reduction(n, rec)
    assert rec.transcript.ok
    assert (reg.y_spec is None) == (n == 9)


def test_regular_reduction_needs_n_at_least_3():
    with pytest.raises(ValueError):
        regular_reduction(2, Recorder("x"))


@pytest.mark.parametrize("target,cid", [
    ("d9", "reg9/x-presentation"),
    ("d6", "reg6/sigma-y-last"),
    ("d10", "reg10/tau-y"),
    ("d9", "d9/dft/tau-rho3"),
    ("d9", "d9/quotient/rho3-u"),
    ("d6", "d6/sigma-z2"),
    ("d6", "d6/tau-y0"),
    ("d6", "d6/monomial-search/invariance"),
    ("d6", "d6/monomial-search/field-equality"),
    ("d10", "d10/final/alpha"),
    ("d10", "d10/final/beta"),
    ("d10", "d10/svw/rho-s"),
])
def test_named_claims_pass(transcripts, target, cid):
    assert status(transcripts, target, cid) == "pass"


def test_every_replay_passes(transcripts):
    for tr in transcripts[0].values():
        assert tr.ok, [r.id for r in tr.failures()]


def test_noted_reduction_is_recorded(transcripts):
    recs = {r.id: r for r in transcripts[0]["d9"].records}
    w = recs["d9/quotient/v0-descent/invariance"].witness
    assert "semi-linear" in w["note"]
    assert "noted reduction" in recs["d9/quotient/v0-descent/invariance"].claim
