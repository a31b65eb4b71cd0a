"""How fast do structure groups of conjugation quandles grow?

The structure group of a solution (X, r) is generated by one letter e_x per
element of X, subject to e_x e_y = e_{x>y} e_x.  For the conjugation quandle
on the transpositions of S_d (or the reflections of a d-gon), the growth
series has an exact rational closed form.  This script computes those closed
forms and then re-derives every coefficient by brute force: breadth-first
search in the Cayley graph of a faithful matrix-free model of the group.
"""

from ybe_growth import (
    as_reflections_group_gf,
    as_transpositions_group_gf,
    class2_lift,
    expand_rational,
    generic_length_series,
    make_dihedral_group,
    make_symmetric_group,
    solomon_series,
)
from ybe_growth.algebra import dihedral_reflections, symmetric_transpositions
from ybe_growth.oracle import conjugation_ball_series

print("Word lengths in S_d over transpositions follow the product formula")
print("prod_{k=1}^{d-1} (1 + k t):")
for d in (3, 4, 5):
    gf = solomon_series(d)
    group = make_symmetric_group(d)
    series, _ = generic_length_series(group, symmetric_transpositions(group), d - 1)
    print(f"  d={d}: formula {expand_rational(gf, d - 1).integer_coefficients()}"
          f"  BFS {series.integer_coefficients()}")

print()
print("Lifting through the class-2 transform gives the structure group series:")
for d in (2, 3, 4):
    gf = as_transpositions_group_gf(d)
    assert gf == class2_lift(solomon_series(d))
    expansion = expand_rational(gf, 6).integer_coefficients()
    group = make_symmetric_group(d)
    spheres = conjugation_ball_series(group, symmetric_transpositions(group), 6)
    tag = "matches" if spheres == expansion else "DISAGREES WITH"
    print(f"  As(T_{d}): {expansion}  {tag} the sphere oracle")

print()
print("The same machinery covers reflections of a regular d-gon, including")
print("even d, where the generators split into two conjugacy classes:")
for d in (3, 4, 5, 6, 7):
    expansion = expand_rational(as_reflections_group_gf(d), 6).integer_coefficients()
    group = make_dihedral_group(d)
    spheres = conjugation_ball_series(group, dihedral_reflections(group), 6)
    tag = "ok" if spheres == expansion else "MISMATCH"
    print(f"  As(R_{d}): {expansion}  [{tag}]")
