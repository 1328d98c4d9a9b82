"""
Galois orbits on a finite abelian group
=======================================

A unit ``a`` mod |G| acts on G by multiplying every coordinate by ``a``. Its
orbits split the nonzero elements, and their number r(G) can be read off
the divisor lattices of the moduli without touching the group.
"""

from intcayley import count_orbits_formula, make_group, orbit_partition, product_cells
from intcayley.group import format_element

G = make_group([4, 6])
print(f"G = Z/4 + Z/6, order {G.order}, exponent {G.exponent}")

# the partition, listed by canonical representative
part = orbit_partition(G)
for orb in part:
    elems = " ".join(format_element(x) for x in orb.elements)
    print(f"  orbit {orb.id:2d}  order {orb.common_order:2d}  size {orb.size}:  {elems}")

# each cell fixes gcd(x_i, n_i) (or x_i = 0) per coordinate and holds |P| / deg orbits
print("\ncell                 |P|  degree  orbits")
for cell in product_cells(G):
    label = " x ".join("0" if c is None else f"G_{c.modulus}({c.divisor})" for c in cell.choice)
    print(f"  {label:<18} {cell.cardinality:4d} {cell.degree:7d} {cell.orbit_count:7d}")

print(f"\nr(G) by enumeration: {part.r}")
print(f"r(G) by the cell formula: {count_orbits_formula(G)}")
