"""
Injections, factorizations, and matching posets
================================================

The combinatorial ground floor: finite sets, the injections between them,
and the poset of partial matchings whose nerve shows up later in the
homology demos.
"""

from ficalc.combinat import (
    Injection,
    build_poset,
    compose,
    conjugacy_class_word,
    cycle_type,
    enumerate_injections,
    factor_injection,
    permutation_from_word,
    permutation_sign,
    poset_size_formula,
    standard_inclusion,
)

# An injection is a value tuple: position p of the source goes to values[p].
f = Injection(2, 4, (3, 1))
print("f sends 0 ->", f(0), "and 1 ->", f(1), "with image", f.image)

# Composition reads right to left, like functions.
g = Injection(4, 5, (0, 2, 3, 4))
print("g after f =", compose(g, f).values)

# There are k!/(k-n)! injections from an n-set into a k-set.
print("injections 2 -> 4:", len(enumerate_injections(2, 4)))

# Every injection factors as a permutation after the standard inclusion:
# f = sigma . incl, with sigma a permutation of the target.
sigma, inversions = factor_injection(f)
recovered = compose(sigma, standard_inclusion(2, 4))
print("factored through", sigma.values, "->", recovered.values == f.values)

# Permutations are handled as words in adjacent transpositions; the word
# length parity gives the sign, and cycle words realize each conjugacy class.
word = [1, 2]
perm = permutation_from_word(word, 3)
print("word [1,2] builds", perm, "of sign", permutation_sign(perm))
print("a 3-cycle word:", conjugacy_class_word((3,)), "->",
      cycle_type(permutation_from_word(conjugacy_class_word((3,)), 3)))

# The poset of nonempty partial matchings between an n-set and a k-set:
# elements are partial bijections, ordered by extension.
P = build_poset(2, 3)
print("P(2,3) has", len(P.elements), "matchings and",
      len(P.cover_relations), "covers")
print("closed form agrees:", poset_size_formula(2, 3) == len(P.elements))

# Swapping the two sizes gives the same poset with matchings transposed.
print("size symmetry:", poset_size_formula(2, 3) == poset_size_formula(3, 2))

smallest = P.elements[0]
larger = next(
    P.elements[b] for a, b in P.cover_relations if P.elements[a] == smallest
)
print("a cover in P(2,3):", smallest, "<", larger)
