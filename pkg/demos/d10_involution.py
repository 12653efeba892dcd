"""D10: the involution x -> t/x, y -> 1/(ty) over Q(sqrt5)(t), and the
quotient identity that turns its invariants into the final coordinates.

Run: python demos/d10_involution.py
"""

from dihedral_noether import descent as D
from dihedral_noether.cli import replay
from dihedral_noether.ratfield.ratfunc import Ring

T = Ring(["t"], 5)
t = T.var("t")
res = D.involution_uv(t, 1 / t, ansatz_cap=8)
print("u =", res.u)
print("v =", res.v)
for name, expr in res.expressions.items():
    print(f"  {name} =", expr)
for c in res.certificate.checks:
    print(f"  [{'ok' if c.ok else 'FAIL'}] {c.kind}: {c.label}")

rep = D.verify_quotient_identity(100, 0)
print("quotient identity: formal", rep.formal, "at", rep.specializations, "points")

# the full chain, with every arrow, descent and scalar identity certified
tr = replay("d10")
c = tr.counts()
print(f"d10 replay: {tr.status} ({c['pass']}/{c['total']} claims)")
for r in tr.records:
    if r.id.startswith("d10/final/"):
        print(f"  [{r.status}] {r.claim}")
