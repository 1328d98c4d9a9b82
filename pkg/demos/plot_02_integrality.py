"""
Deciding integrality without eigenvalues
========================================

D(G, S) is integral exactly when S is a union of Galois orbits. The check
below is purely combinatorial; the numerical eigenvalues are computed only
to show the two agree.
"""

import numpy as np

from intcayley import adjacency_matrix, is_integral, make_group
from intcayley.oracle import eigenvalues_numeric, near_integral

G = make_group([5])
for S in ([(1,), (4,)], [(1,), (2,), (3,), (4,)]):
    verdict = is_integral(G, S)
    eig = eigenvalues_numeric(adjacency_matrix(G, S))
    print(f"S = {[x[0] for x in S]}: union of orbits? {verdict.is_integral}")
    print(f"    eigenvalues {np.round(eig, 6)}  near-integral? {near_integral(eig).ok}")
    if verdict.residue:
        print(f"    elements breaking orbit closure: {[x[0] for x in verdict.residue]}")

# a sweep over every connection set on Z/3 + Z/3
from intcayley.family import all_connection_sets

G = make_group([3, 3])
agree = sum(
    is_integral(G, S).is_integral == near_integral(eigenvalues_numeric(adjacency_matrix(G, S))).ok
    for S in all_connection_sets(G)
)
print(f"\nZ/3 + Z/3: combinatorial and numerical verdicts agree on {agree} of "
      f"{2 ** 4} connection sets")
