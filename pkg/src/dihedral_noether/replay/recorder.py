"""Turn checks into StepRecords.

Action-table claims are never checked against the table they come from: a
claim ``word(f) = c * g`` about new variables is verified in the previous
ring, as ``word(def(f)) == c * def(g)`` under the true action there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .. import actions as A
from ..descent import InvariantCertificate
from ..ratfield.ratfunc import RatFunc, SubstitutionMap
from ..ratfield.solve import roundtrip_check
from .manifest import MANIFEST, ManifestError
from .transcript import StepRecord, Transcript, render_value


@dataclass
class Stage:
    """A ring of new variables, the action they inherit, and their definitions."""

    spec: A.ActionSpec  # true action on the previous ring
    definitions: SubstitutionMap  # new ring -> previous ring

    @property
    def ring(self):
        return self.definitions.source

    def lift(self, f: RatFunc) -> RatFunc:
        return self.definitions(f)

    @classmethod
    def base(cls, spec: A.ActionSpec) -> "Stage":
        R = spec.ring
        return cls(spec, SubstitutionMap(R, R, list(R.gens())))


class Recorder:
    def __init__(self, target: str, seed: int = 0, bounds: dict | None = None):
        self.transcript = Transcript(target, [], seed, dict(bounds or {}))

    @property
    def records(self):
        return self.transcript.records

    def add(self, cid: str, label: str, kind: str, claim: str, ok: bool, inputs=None,
            witness=None) -> bool:
        self.records.append(StepRecord(cid, label, kind, claim, "pass" if ok else "fail",
                                       {k: render_value(v) for k, v in (inputs or {}).items()},
                                       _render_witness(witness or {})))
        return bool(ok)

    def extend(self, records: Sequence[StepRecord]) -> None:
        self.records.extend(records)

    # -- claim families -------------------------------------------------------

    def arrows(self, cid: str, label: str, claim: str, stage: Stage, word: str,
               instances: Sequence[tuple], kind: str = "action-table") -> bool:
        """Each instance is (f, scalar, target): word(f) == scalar * target."""
        ok, bad, rows = True, {}, []
        for n, (f, c, g) in enumerate(instances):
            lhs = stage.spec.apply_word(word, stage.lift(f))
            rhs = stage.lift(g) * c
            good = lhs == rhs
            rows.append(f"{word}: {f} -> {render_value(c)} * ({g})")
            if not good:
                ok = False
                bad[f"lhs[{n}]"] = lhs
                bad[f"rhs[{n}]"] = rhs
        return self.add(cid, label, kind, claim, ok, {"word": word, "arrows": rows}, bad)

    def fixed(self, cid: str, label: str, claim: str, spec: A.ActionSpec, word: str,
              elements: Sequence[RatFunc], kind: str = "invariance") -> bool:
        ok, bad = True, {}
        for n, f in enumerate(elements):
            im = spec.apply_word(word, f)
            if im != f:
                ok = False
                bad[f"image[{n}]"] = im
        return self.add(cid, label, kind, claim, ok,
                        {"word": word, "elements": [render_value(f) for f in elements]}, bad)

    def equal(self, cid: str, label: str, claim: str, lhs, rhs, kind: str = "identity") -> bool:
        ok = lhs == rhs
        return self.add(cid, label, kind, claim, ok, {"lhs": lhs, "rhs": rhs},
                        {} if ok else {"lhs": lhs, "rhs": rhs})

    def presentation(self, cid: str, label: str, claim: str, spec: A.ActionSpec,
                     relations: Sequence[str] | None = None, expect_fail: Sequence[str] = ()) -> bool:
        rep = spec.verify_presentation(relations)
        ok = rep.ok
        rows = [f"{e.relation}: {'holds' if e.ok else 'fails'}" for e in rep.entries]
        bad = {e.relation: e.detail for e in rep.entries if not e.ok}
        for rel in expect_fail:
            good, detail = spec.acts_trivially(rel)
            rows.append(f"{rel}: {'holds' if good else 'fails'} (expected to fail)")
            if good:
                ok = False
                bad[rel] = "unexpectedly acts trivially"
        return self.add(cid, label, "relation", claim, ok, {"action": spec.name, "relations": rows},
                        bad)

    def roundtrip(self, cid: str, label: str, claim: str, forward: SubstitutionMap,
                  inverse: SubstitutionMap) -> bool:
        rep = roundtrip_check(forward, inverse)
        inputs = {"forward": forward.describe(), "inverse": inverse.describe()}
        return self.add(cid, label, "field-equality", claim, rep.ok, inputs,
                        {f"failure[{i}]": f for i, f in enumerate(rep.failures)})

    def certificate(self, cid: str, label: str, claim: str, cert: InvariantCertificate,
                    kind: str = "invariance", inputs=None, witness=None) -> bool:
        checks = [f"{'pass' if c.ok else 'FAIL'}: {c.label}" for c in cert.checks]
        wit = {"generators": [render_value(g) for g in cert.generators], "checks": checks}
        for c in cert.checks:
            for k, v in c.witness.items():
                wit[f"{c.label} / {k}"] = v
            if not c.ok and c.detail:
                wit[f"{c.label} / detail"] = c.detail
        wit.update(witness or {})
        # a certificate without checks certifies nothing
        return self.add(cid, label, kind, claim, cert.ok and bool(cert.checks), inputs, wit)

    def descent(self, cid: str, label: str, claim: str, cert: InvariantCertificate,
                inputs=None, witness=None) -> bool:
        """Two records: invariance checks, then field-equality evidence."""
        inv = InvariantCertificate(cert.generators,
                                   [c for c in cert.checks if c.kind != "field-equality"])
        feq = InvariantCertificate(cert.generators,
                                   [c for c in cert.checks if c.kind == "field-equality"])
        a = self.certificate(f"{cid}/invariance", label, f"{claim}: invariance", inv,
                             "invariance", inputs, witness)
        b = self.certificate(f"{cid}/field-equality", label, f"{claim}: field equality", feq,
                             "field-equality", inputs)
        return a and b

    # -- completion -------------------------------------------------------------

    def finish(self, manifest_key: str | None = None) -> Transcript:
        key = manifest_key or self.transcript.target
        expected = [cid for cid, _ in MANIFEST[key]]
        got = [r.id for r in self.records]
        if got != expected:
            missing = [c for c in expected if c not in got]
            extra = [c for c in got if c not in expected]
            raise ManifestError(f"{key}: claims differ from the manifest "
                                f"(missing {missing}, unexpected {extra})")
        kinds = dict(MANIFEST[key])
        for r in self.records:
            if kinds[r.id] != r.kind:
                raise ManifestError(f"{key}: claim {r.id} has kind {r.kind}, manifest says "
                                    f"{kinds[r.id]}")
        return self.transcript


def _render_witness(w: dict) -> dict:
    out = {}
    for k, v in w.items():
        if isinstance(v, (list, tuple)):
            out[k] = [render_value(a) for a in v]
        else:
            out[k] = render_value(v)
    return out
