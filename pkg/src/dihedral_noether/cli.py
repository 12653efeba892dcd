"""Command-line front end: ``dihedral-noether verify <target>...``.

Exit status: 0 all claims pass, 1 some claim fails, 2 bad configuration,
3 internal error (retry caps exhausted, manifest mismatch).
Defaults can be overridden by DIHEDRAL_NOETHER_SEED, _BOUND, _ANSATZ_CAP,
_FORMAT and _OUT.
"""

from __future__ import annotations

import argparse
import importlib
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .descent import DescentError
from .replay.manifest import ManifestError

TARGETS = ("d6", "d9", "d10", "core")
FORMATS = ("text", "json-lines")
ENV_PREFIX = "DIHEDRAL_NOETHER_"
EXTENSIONS = {"text": "txt", "json-lines": "jsonl"}

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_INTERNAL = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    targets: list[str]
    seed: int = 0
    search_bound: int = 3
    ansatz_cap: int = 32
    fmt: str = "text"
    out: Path | None = None
    timings: dict = field(default_factory=dict)

    def validate(self) -> None:
        if not self.targets:
            raise ConfigError("no targets given")
        bad = [t for t in self.targets if t not in TARGETS]
        if bad:
            raise ConfigError(f"unknown targets {bad}; choose from {list(TARGETS)} or all")
        if self.search_bound < 1:
            raise ConfigError("--bound must be positive")
        if self.ansatz_cap < 1:
            raise ConfigError("--ansatz-cap must be positive")
        if self.fmt not in FORMATS:
            raise ConfigError(f"--format must be one of {list(FORMATS)}")


def replay(target: str, seed: int = 0, bound: int = 3, ansatz_cap: int = 32):
    """Run one target and return its Transcript."""
    mod = importlib.import_module(f".replay.{target}", __package__)
    return getattr(mod, f"replay_{target}")(seed=seed, bound=bound, ansatz_cap=ansatz_cap)


def run(config: RunConfig, stream=None) -> int:
    stream = stream or sys.stdout
    try:
        config.validate()
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    if config.out is not None:
        config.out.mkdir(parents=True, exist_ok=True)
    status = EXIT_OK
    for target in config.targets:
        start = time.perf_counter()
        try:
            tr = replay(target, config.seed, config.search_bound, config.ansatz_cap)
        except (DescentError, ManifestError) as e:
            print(f"internal error in {target}: {e}", file=sys.stderr)
            return EXIT_INTERNAL
        config.timings[target] = time.perf_counter() - start
        text = tr.render(config.fmt)
        if config.out is not None:
            path = config.out / f"{target}.{EXTENSIONS[config.fmt]}"
            path.write_text(text)
            c = tr.counts()
            print(f"{target}: {tr.status} ({c['pass']}/{c['total']} claims) -> {path}", file=stream)
        else:
            stream.write(text)
        if not tr.ok:
            status = EXIT_FAIL
    return status


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name, default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dihedral-noether",
                                description="Replay and verify rationality certificates.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run replays and emit transcripts")
    v.add_argument("targets", nargs="+", help="d6, d9, d10, core or all")
    v.add_argument("--seed", type=int, default=int(_env("SEED", 0)))
    v.add_argument("--bound", type=int, default=int(_env("BOUND", 3)),
                   help="entry bound for the lattice and monomial searches")
    v.add_argument("--ansatz-cap", type=int, default=int(_env("ANSATZ_CAP", 32)))
    v.add_argument("--format", default=_env("FORMAT", "text"), choices=FORMATS)
    v.add_argument("--out", type=Path, default=_env("OUT", None),
                   help="directory for one transcript file per target")
    return p


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    targets = []
    for t in args.targets:
        targets.extend(TARGETS if t == "all" else [t])
    out = Path(args.out) if args.out is not None else None
    return RunConfig(list(dict.fromkeys(targets)), args.seed, args.bound, args.ansatz_cap,
                     args.format, out)


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
