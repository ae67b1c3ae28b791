"""Exact coefficient rings and why 2-torsion is a hard boundary.

All arithmetic in the package is exact — integers, rationals via Fraction,
or canonical residues mod n.  The decomposition machinery polarizes squares
into products, which silently divides by 2; rings where 2a = 0 has nonzero
solutions therefore sit behind an explicit refusal gate.
"""

from fialg import (
    INTEGERS,
    LinMap,
    RATIONALS,
    TorsionRefusedError,
    decompose,
    incidence_algebra,
    modular,
    validate_poset,
)

# Units differ per ring: +-1 over the integers, everything nonzero over the
# rationals, residues coprime to the modulus otherwise.
print("integer units:", [a for a in range(-3, 4) if INTEGERS.is_unit(a)])
ring12 = modular(12)
print("units mod 12: ", [a for a in range(12) if ring12.is_unit(a)])
print("7^-1 mod 12 = ", ring12.invert(7))

# 2-torsion-freeness is decidable by residue scan; for modular rings it is
# exactly oddness of the modulus.
for n in (5, 6, 9, 10, 15):
    print(f"modular({n}) 2-torsion-free:", modular(n).is_two_torsionfree())

# The decomposition gate in action: modular(6) is refused outright...
chain3 = validate_poset(["1", "2", "3"], [("1", "2"), ("2", "3")])
A6 = incidence_algebra(chain3, modular(6))
try:
    decompose(LinMap.identity(A6))
except TorsionRefusedError as exc:
    print("\nrefused:", exc)

# ...unless the caller explicitly accepts that the pair law alone no longer
# guarantees the triple law, in which case both laws are checked in full.
dec = decompose(LinMap.identity(A6), allow_torsion=True)
print("with override, identity map decomposes:", dec.report.passed)
