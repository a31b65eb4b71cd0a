"""Structure monoids of reflection solutions, via five numeric invariants.

Words over the infinite dihedral rule x > y = 2x - y carry a weight
(alternating letter sum), a density (gcd of letter differences), an anchor
(common residue of the letters mod the density), and essential even/odd
lengths read off after dividing the density out.  Together these five
numbers determine the monoid element completely, which yields canonical
normal forms and, after reducing mod d, the growth series of every finite
reflection monoid through Euler's totient and the divisor-count function.
"""

from ybe_growth import (
    ReflectionWord,
    elements_equal,
    essentialise,
    expand_rational,
    invariants,
    monoid_growth_reflections,
    normal_form,
    push_through,
)
from ybe_growth.algebra import reflection_solution
from ybe_growth.oracle import monoid_orbit_enumerate

w = ReflectionWord((-6, -2, -2))
inv = invariants(w)
print(f"word e_-6 e_-2 e_-2: weight {inv.weight}, density {inv.density}, "
      f"anchor {inv.anchor}")
print(f"essentialisation: {essentialise(w)} with essential lengths "
      f"({inv.essential_even}, {inv.essential_odd})")
print()

word = ReflectionWord((1, -1, 1))
print(f"normal form of e_1 e_-1 e_1: {normal_form(word).word}  "
      f"(two squared letters and the weight)")
print(f"pushing e_5 through e_0 e_1 gives e_{push_through(ReflectionWord((0, 1)), 5)}")
print(f"e_0 e_-1 equals e_1 e_0: {elements_equal(ReflectionWord((0, -1)), ReflectionWord((1, 0)))}")
print()

print("Finite reflection monoids: totient/divisor formula vs orbit counts")
for d in (2, 3, 4, 5, 6, 8, 12):
    counts = monoid_orbit_enumerate(reflection_solution(d), 5).counts
    formula = expand_rational(monoid_growth_reflections(d), 5).integer_coefficients()
    tag = "ok" if counts == formula else "MISMATCH"
    print(f"  d={d:>2}: {formula}  [{tag}]")
print()

print("A normal form over Z_5, length 5:")
word = ReflectionWord((2, 4, 1, 0, 3), 5)
nf = normal_form(word)
print(f"  {word} -> {nf.word}  (shape {nf.shape})")
