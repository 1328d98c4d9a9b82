"""
Exact spectra from Ramanujan sums
=================================

For an integral connection set each orbit of elements of order d adds a
Ramanujan sum c_d(u) to every eigenvalue, so the whole spectrum is computed
in integers. Anything else falls back to complex character sums.
"""

from intcayley import make_group, spectrum
from intcayley.group import format_element

# the 3-cube as a Cayley graph on Z/2 + Z/2 + Z/2
G = make_group([2, 2, 2])
cube = spectrum(G, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
print("3-cube:", cube.mode)
for g, lam in zip(G, cube.eigenvalues):
    print(f"  lambda_{format_element(g)} = {lam}")
print("  multiplicities:", cube.multiplicities)

# unitary Cayley graph on Z/12: S = units
G = make_group([12])
units = [(a,) for a in (1, 5, 7, 11)]
print("\nunitary Cayley graph on Z/12:", spectrum(G, units).eigenvalues)

# the 7-cycle is not integral
C7 = spectrum(make_group([7]), [(1,), (6,)])
print("\n7-cycle:", C7.mode, [round(v, 6) for v in C7.eigenvalues])
