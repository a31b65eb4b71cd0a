"""Structure monoids of transposition solutions.

Unlike the group, the monoid As+(T_d) keeps the squares e_x^2 of distinct
generators apart until enough letters are present to connect them.  The key
invariant is the partition of {1..d} induced by the letters of a word; the
full part (one block) embeds into S_d x N, which yields normal forms, the
growth series, and a single exponential generating function packaging all d
at once.
"""

from ybe_growth import (
    TranspositionWord,
    expand_rational,
    fts_embed,
    fts_normal_form,
    monoid_growth_transpositions,
    word_partition,
)
from ybe_growth.algebra import transposition_solution
from ybe_growth.oracle import monoid_orbit_enumerate
from ybe_growth.transposition_monoid import egf_column, egf_transposition_monoids

a = TranspositionWord([(0, 1), (1, 2), (3, 4), (0, 1)], 5)
b = TranspositionWord([(1, 2), (0, 4), (1, 4), (2, 3), (0, 1)], 5)
print(f"word {a} has partition {word_partition(a)}")
print(f"word {b} has partition {word_partition(b)} (full)")
print()

image = fts_embed(b)
print(f"the full word {b} embeds as (permutation {image.perm.label()}, length {image.length})")
nf = fts_normal_form(image.perm, image.length, 5)
print(f"its canonical form is {nf}")
print()

print("Monoid growth series, checked against braiding-orbit counts:")
for d in (2, 3, 4):
    counts = monoid_orbit_enumerate(transposition_solution(d), 6).counts
    formula = expand_rational(monoid_growth_transpositions(d), 6).integer_coefficients()
    tag = "ok" if counts == formula else "MISMATCH"
    print(f"  d={d}: {formula}  [{tag}]")
print()

print("All monoids at once: the x^d column of exp(((1-tx)^-t - 1 - t^4 x)/(t^2(1-t^2)))")
egf = egf_transposition_monoids(8, 4)
for d in range(5):
    print(f"  d! [x^{d}] = {egf_column(egf, d).integer_coefficients()}")
