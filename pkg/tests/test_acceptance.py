"""Acceptance criteria, one timed test each; every test prints a PASS/FAIL line."""

import random
import subprocess
import sys
import time
from fractions import Fraction

from conftest import ACCEPTANCE, GOLDEN
from dihedral_noether import descent as D
from dihedral_noether import lattice as LT
from dihedral_noether.cli import TARGETS, replay
from dihedral_noether.ratfield.ratfunc import Ring, transfer
from dihedral_noether.replay import d9, d10, regular

TABLE_KINDS = ("action-table", "semi-invariance")


def report(n, ok, detail, elapsed):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}  ({elapsed:.2f} s)"
    ACCEPTANCE[n] = line
    print(line)
    assert ok, line


def records(transcripts, target):
    return transcripts[0][target].records


def test_1_presentations():
    start = time.perf_counter()
    specs = []
    for n in (6, 9, 10):
        specs += [regular.regular_action(n), regular.permutation_action(n),
                  regular.complement_action(n)]
        if n % 2 == 0:
            specs += [regular.signed_action(n), regular.split_action(n)]
    specs += [d9.x_action(), d9.y_action(), d10.y_action(), d10.z_action()]
    reports = [s.verify_presentation() for s in specs]
    y10 = regular.signed_action(10)
    neg = all(y10.apply_word("sigma^5", y) == -y for y in y10.ring.gens())
    ok = all(r.ok for r in reports) and neg
    elapsed = time.perf_counter() - start
    report(1, ok and elapsed < 5,
           f"{sum(len(r.entries) for r in reports)} relations on {len(specs)} actions, "
           f"sigma^5 = -1 on the D10 y-span: {neg}", elapsed)


def test_2_table_arrows(transcripts):
    arrows = [r for t in ("d6", "d9", "d10") for r in records(transcripts, t)
              if r.kind in TABLE_KINDS and not r.id.startswith("reg")]
    elapsed = sum(transcripts[1][t] for t in ("d6", "d9", "d10"))
    failed = [r.id for r in arrows if r.status != "pass"]
    report(2, not failed and len(arrows) >= 50 and elapsed < 60,
           f"{len(arrows) - len(failed)}/{len(arrows)} arrows exact", elapsed)


def test_3_lattice():
    start = time.perf_counter()
    L = LT.kernel_lattice()
    wit = LT.find_free_generator(3, L)
    coords = LT.orbit_coordinates(L, wit.generator)
    oracle = LT.cofactor_determinant(coords)
    yspec = d9.y_action()
    z0 = transfer(LT.monomial_from_exponents(wit.generator), yspec.ring)
    fixed = yspec.apply_word("sigma", z0) == z0
    elapsed = time.perf_counter() - start
    ok = L.index == 9 and abs(wit.determinant) == 1 and oracle == wit.determinant and fixed
    report(3, ok and elapsed < 30,
           f"[Lambda:M] = {L.index}, generator {list(wit.generator.coeffs)}, "
           f"det {wit.determinant} (oracle {oracle}), sigma-fixed: {fixed}", elapsed)


def test_4_quotient_identity():
    start = time.perf_counter()
    rep = D.verify_quotient_identity(100, 0)
    elapsed = time.perf_counter() - start
    report(4, rep.ok and rep.formal and rep.specializations >= 100 and elapsed < 10,
           f"formal: {rep.formal}, {rep.specializations} specializations", elapsed)


def test_5_involution_certifier():
    start = time.perf_counter()
    T = Ring(["t"], 5)
    t = T.var("t")
    results = [D.involution_uv(t, 1 / t, ansatz_cap=8)]
    rng = random.Random(0)
    Q0 = Ring(())
    for _ in range(20):
        a, b = (Fraction(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 12))
                for _ in range(2))
        results.append(D.involution_uv(Q0.const(a), Q0.const(b), ansatz_cap=8))
    passed = sum(r.certificate.ok for r in results)
    report(5, passed == len(results), f"{passed}/{len(results)} certificates at ansatz bound 8",
           time.perf_counter() - start)


def test_6_descent_determinism(transcripts):
    start = time.perf_counter()
    instances = {}
    for t in ("d6", "d9", "d10"):
        for r in records(transcripts, t):
            head, _, tail = r.id.rpartition("/")
            if tail in ("invariance", "field-equality") and "descent" in head:
                instances.setdefault(head, []).append(r.status)
    certified = [h for h, s in instances.items() if s == ["pass", "pass"]]
    again = {t: replay(t).to_json_lines() for t in TARGETS}
    same = all(again[t] == transcripts[0][t].to_json_lines() for t in TARGETS)
    report(6, len(certified) == len(instances) > 0 and same,
           f"{len(certified)}/{len(instances)} descent instances certified, "
           f"second run byte-identical: {same}", time.perf_counter() - start)


SCALAR_CLAIMS = ("d10/final/alpha", "d10/final/beta", "d10/svw/rho-lambda", "d10/svw/rho-s",
                 "d10/final/sqrt5-X", "d10/final/sqrt5-Y")


def test_7_scalar_identities(transcripts):
    recs = {r.id: r for r in records(transcripts, "d10")}
    ok = [c for c in SCALAR_CLAIMS if recs[c].status == "pass"]
    report(7, len(ok) == len(SCALAR_CLAIMS),
           "; ".join(recs[c].claim.split(",")[0] for c in SCALAR_CLAIMS), 0.0)


def test_8_end_to_end(tmp_path):
    start = time.perf_counter()
    r = subprocess.run([sys.executable, "-m", "dihedral_noether", "verify", "all",
                        "--format", "json-lines", "--out", str(tmp_path)],
                       capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    same = all((tmp_path / f"{t}.jsonl").read_bytes() == (GOLDEN / f"{t}.jsonl").read_bytes()
               for t in TARGETS)
    report(8, r.returncode == 0 and same and elapsed < 600,
           f"verify all exit {r.returncode}, goldens byte-identical: {same}", elapsed)
