"""Ordered records of verified claims and their serialization.

A transcript is a list of ``StepRecord`` plus a summary.  The json-lines form
emits one object per record and a final summary object; keys are sorted and
no timestamps are written, so identical runs give identical bytes.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ..cyclotomic import CyclotomicNumber
from ..ratfield.ratfunc import RatFunc

ENGINE_VERSION = "0.1.0"

KINDS = ("action-table", "semi-invariance", "invariance", "field-equality", "relation",
         "lattice-witness", "identity")


def render_value(x) -> str:
    if isinstance(x, RatFunc):
        return str(x)
    if isinstance(x, CyclotomicNumber):
        return str(x.to_fraction()) if x.is_rational() else str(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(render_value(a) for a in x) + "]"
    return str(x)


@dataclass
class StepRecord:
    id: str
    label: str
    kind: str
    claim: str
    status: str  # "pass" or "fail"
    inputs: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown claim kind {self.kind!r}")
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be pass or fail, not {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"type": "step", "id": self.id, "label": self.label, "kind": self.kind,
                "claim": self.claim, "status": self.status, "inputs": self.inputs,
                "witness": self.witness}


@dataclass
class Transcript:
    target: str
    records: list[StepRecord] = field(default_factory=list)
    seed: int = 0
    bounds: dict = field(default_factory=dict)
    engine_version: str = ENGINE_VERSION

    @property
    def ok(self) -> bool:
        return bool(self.records) and all(r.ok for r in self.records)

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def counts(self) -> dict:
        c = Counter(r.status for r in self.records)
        return {"pass": c.get("pass", 0), "fail": c.get("fail", 0), "total": len(self.records)}

    def kind_counts(self) -> dict:
        return dict(sorted(Counter(r.kind for r in self.records).items()))

    def failures(self) -> list[StepRecord]:
        return [r for r in self.records if not r.ok]

    def summary(self) -> dict:
        return {"type": "summary", "target": self.target, "status": self.status,
                "counts": self.counts(), "kinds": self.kind_counts(),
                "engine_version": self.engine_version, "seed": self.seed,
                "bounds": dict(sorted(self.bounds.items()))}

    def extend(self, records: Iterable[StepRecord]) -> None:
        self.records.extend(records)

    # -- serialization -------------------------------------------------------

    def to_json_lines(self) -> str:
        lines = []
        for r in self.records:
            d = r.to_dict()
            d["target"] = self.target
            lines.append(json.dumps(d, sort_keys=True))
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        out = [f"== {self.target} (engine {self.engine_version}, seed {self.seed}) =="]
        for r in self.records:
            out.append(f"[{r.status.upper()}] {r.id}  {r.kind}  {r.claim}")
            if not r.ok:
                for k, v in sorted(r.witness.items()):
                    out.append(f"      {k}: {v}")
        c = self.counts()
        out.append(f"-- {self.target}: {self.status.upper()} ({c['pass']} passed, "
                   f"{c['fail']} failed, {c['total']} claims)")
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "json-lines":
            return self.to_json_lines()
        raise ValueError(f"unknown format {fmt!r}")


def parse_json_lines(text: str) -> list[Transcript]:
    """Inverse of ``Transcript.to_json_lines`` (several transcripts may be concatenated)."""
    out: list[Transcript] = []
    pending: list[StepRecord] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        d = json.loads(line)
        if d["type"] == "step":
            pending.append(StepRecord(d["id"], d["label"], d["kind"], d["claim"], d["status"],
                                      d["inputs"], d["witness"]))
        elif d["type"] == "summary":
            t = Transcript(d["target"], pending, d["seed"], d["bounds"], d["engine_version"])
            if t.summary() != d:
                raise ValueError(f"summary of {d['target']} does not match its records")
            out.append(t)
            pending = []
        else:
            raise ValueError(f"unknown record type {d['type']!r}")
    if pending:
        raise ValueError("records without a closing summary")
    return out
