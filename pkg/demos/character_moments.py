"""Character star-moments and their combinatorial shadows.

The moment of a word in X, X* against a pointed system is the
multiplicity of the unit after substituting the generator and its
conjugate.  In the free orthogonal family the even moments are Catalan
numbers (semicircular); in the free unitary family the alternating
moments are Catalan (circular); the quantum automorphism fundamental has
all moments Catalan (free Poisson counts).
"""

import fusionkit as fk
from fusionkit import StarWord

ao = fk.AoSystem(2)
u = ao.fundamental()
print("even moments of the 2-dim orthogonal fundamental:")
print(" ", fk.moment_sequence(ao, u, 12)[1::2])
print("catalan:", [fk.catalan(k) for k in range(1, 7)])

au = fk.AuSystem(2)
c = au.fundamental()
print("\nalternating moments (X X*)^k of the free unitary fundamental:")
print(" ", [fk.moment(au, c, StarWord.alternating(k)) for k in range(1, 7)])

aut = fk.AutSystem(4)
f = fk.fundamental(aut)
print("\nplain moments X^k of the automorphism fundamental (n = 4):")
print(" ", fk.moment_sequence(aut, f, 6))

# The noncrossing enumeration gives the same counts without any fusion.
word = StarWord.from_string("XX*XX*XX*")
print("\nword", word, "->",
      "fusion:", fk.moment(au, c, word),
      "| noncrossing X-X* pairings:", fk.noncrossing_pairing_count(word, "alternating"))

mixed = StarWord.from_string("XXX*X*")
print("word", mixed, "->",
      "fusion:", fk.moment(au, c, mixed),
      "| noncrossing X-X* pairings:", fk.noncrossing_pairing_count(mixed, "alternating"))
