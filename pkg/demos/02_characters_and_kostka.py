"""
Symmetric-group characters, Kostka numbers, and stable layers
=============================================================

Everything here is exact: characters are integer-valued class functions,
inner products are rational, and the layer dimensions come out of closed
formulas that the rest of the package leans on.
"""

from ficalc.symrep import (
    character_table,
    decompose_class_function,
    gn_character,
    gn_dimension,
    inner_product,
    irreducible_class_function,
    kostka,
    kostka_reduction,
    partitions_of,
    specht_dimension,
    weight,
    young_permutation_character,
)

# Partitions index everything; classes are listed with the identity last.
print("partitions of 4:", partitions_of(4))

# The character table of S_4, rows and columns both indexed by partitions.
for lam, row in zip(partitions_of(4), character_table(4)):
    print(f"  chi_{lam}:", row)

# Rows are orthonormal for the class-size inner product.
chi_31 = irreducible_class_function((3, 1))
chi_22 = irreducible_class_function((2, 2))
print("<chi_31, chi_31> =", inner_product(chi_31, chi_31))
print("<chi_31, chi_22> =", inner_product(chi_31, chi_22))

# Young permutation characters decompose with Kostka multiplicities.
mu = (2, 1, 1)
young = young_permutation_character(mu)
decomp = decompose_class_function(young)
print(f"M^{mu} =", decomp.nonzero())
for lam in partitions_of(4):
    expected = kostka(lam, mu)
    assert decomp.multiplicities.get(lam, 0) == expected

# Dimensions: f^lambda from hook lengths, and sum of squares is n!.
print("f^(2,2) =", specht_dimension((2, 2)))
print("sum f^2 over |lam|=5:",
      sum(specht_dimension(l) ** 2 for l in partitions_of(5)))

# The stable layer at (n, k): only weight-n partitions of k contribute,
# each with a Kostka multiplicity.
n, k = 2, 6
print(f"layer dimension g_{n}({k}) =", gn_dimension(n, k))
for lam in partitions_of(k):
    mult = gn_character(n, k, lam)
    if mult:
        print(f"  {lam} (weight {weight(lam)}): multiplicity {mult}")

# The reduction identity that keeps those Kostka numbers honest.
lhs, rhs = kostka_reduction((4, 1), 3)
print("reduction identity at ((4,1), 3):", lhs, "=", rhs)
