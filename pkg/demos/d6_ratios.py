"""D6 on the y-span: pass to ratios, descend y_0, then search for a generating pair.

Run: python demos/d6_ratios.py
"""

from dihedral_noether import actions as A
from dihedral_noether import descent as D
from dihedral_noether.ratfield.ratfunc import Ring

# sigma: y0 -> y1 -> y2 -> -y0 becomes, in y0, z1 = y1/y0, z2 = y2/y1,
# a monomial action on (z1, z2) times a line action on y0.
Z = Ring(("y0", "z1", "z2"))
y0, z1, z2 = Z.gens()
spec = A.ActionSpec(Z, {"sigma": A.FieldAut(Z, [y0 * z1, z2, -1 / (z1 * z2)]),
                        "tau": A.FieldAut(Z, [y0, -z1 * z2, 1 / z2])},
                    A.dihedral_relations(6), "D6 on y0, z")
print("presentation holds:", spec.verify_presentation().ok)

# y0 is semi-invariant up to a cocycle; Hilbert 90 rescales it to an invariant.
line = D.line_descent(spec, "y0")
print("invariant replacing y0:", line.invariant)
print("certificate:", "pass" if line.certificate.ok else "fail")

# sigma^3 = -1 on the y-span, so only a group of order 6 acts on (z1, z2).
S = Ring(("z1", "z2"))
a, b = S.gens()
mono = A.ActionSpec(S, {"sigma": A.FieldAut(S, [b, -1 / (a * b)]),
                        "tau": A.FieldAut(S, [-a * b, 1 / b])}, A.dihedral_relations(6))
pair = D.monomial_fixed_2var(mono, 3)
print("effective group order:", pair.group_order)
print("f =", pair.f)
print("g =", pair.g)
for c in pair.certificate.checks:
    print(f"  [{'ok' if c.ok else 'FAIL'}] {c.kind}: {c.label}")
