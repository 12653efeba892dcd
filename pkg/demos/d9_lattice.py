"""D9: the character lattice M has index 9 in Z[pi] and is free of rank one.

A free generator gives a sigma-fixed monomial z0 whose rho-orbit is a
transcendence basis, which is what lets the replay trade y for z.

Run: python demos/d9_lattice.py
"""

from dihedral_noether import lattice as LT
from dihedral_noether.ratfield.ratfunc import transfer
from dihedral_noether.replay.d9 import y_action

L = LT.kernel_lattice()
print("HNF basis of M = ker Phi:")
for row in L.basis:
    print("  ", row)
print("[Lambda : M] =", L.index, "rho-stable:", L.rho_closed())

wit = LT.find_free_generator(3, L)
print(f"first free generator after {wit.examined} candidates:", list(wit.generator.coeffs))
coords = LT.orbit_coordinates(L, wit.generator)
print("orbit in basis coordinates:")
for row in coords:
    print("  ", row)
print("det =", wit.determinant, " cofactor oracle =", LT.cofactor_determinant(coords))

yspec = y_action()
z0 = transfer(LT.monomial_from_exponents(wit.generator), yspec.ring)
print("z0 =", z0)
print("sigma(z0) == z0:", yspec.apply_word("sigma", z0) == z0)
