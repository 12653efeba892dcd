"""Default-seed transcripts match the frozen goldens byte for byte.

Regenerate with ``dihedral-noether verify all --format json-lines --out tests/golden``
after an intentional change, and review the diff.
"""

import pytest

from conftest import GOLDEN
from dihedral_noether.cli import TARGETS
from dihedral_noether.replay.transcript import parse_json_lines


@pytest.mark.parametrize("target", TARGETS)
def test_matches_golden(transcripts, target):
    golden = (GOLDEN / f"{target}.jsonl").read_text()
    assert transcripts[0][target].to_json_lines() == golden


@pytest.mark.parametrize("target", TARGETS)
def test_golden_parses_back(target):
    text = (GOLDEN / f"{target}.jsonl").read_text()
    [t] = parse_json_lines(text)
    assert t.target == target and t.ok and t.seed == 0
    assert t.to_json_lines() == text
