"""
Galois orbits on a finite abelian group.

The Galois group of Q(zeta_n)/Q is (Z/n)^*; a unit ``a`` acts on an element by
multiplying every coordinate by ``a``. The orbit of ``x`` is the set of
generators of the cyclic subgroup <x>, so it has phi(ord(x)) elements.

Two independent ways of counting the orbits are provided: enumerating the
partition directly and summing |P| / [Q(P):Q] over the cells P obtained by
fixing a divisor class (or zero) in every coordinate.
"""
import json
from dataclasses import dataclass, field
from itertools import product
from math import gcd, prod

from .errors import ExcludedIdentityError, InvalidUnitError
from .group import format_element
from .ntheory import divisors, euler_phi, lcm, units


@dataclass(frozen=True)
class Orbit:
    id: int
    representative: tuple
    elements: tuple
    common_order: int

    @property
    def size(self):
        return len(self.elements)

    def __contains__(self, x):
        return tuple(x) in self.elements

    def as_dict(self):
        return {
            "id": self.id,
            "representative": list(self.representative),
            "size": self.size,
            "common_order": self.common_order,
            "elements": [list(x) for x in self.elements],
        }


@dataclass(frozen=True)
class OrbitPartition:
    group: object
    orbits: tuple
    index: dict = field(repr=False, compare=False)

    @property
    def r(self):
        return len(self.orbits)

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def __getitem__(self, i):
        return self.orbits[i]

    def orbit_id(self, x):
        """Id of the orbit containing the nonzero element ``x``."""
        try:
            return self.index[tuple(x)]
        except KeyError:
            if tuple(x) == self.group.identity:
                raise ExcludedIdentityError("the identity lies in no orbit") from None
            raise

    def as_sets(self):
        return {frozenset(o.elements) for o in self.orbits}

    def as_dict(self):
        return {
            "group": str(self.group),
            "r": self.r,
            "orbits": [o.as_dict() for o in self.orbits],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.as_dict(), **kwargs)

    def to_text(self):
        lines = [f"group {self.group}", f"r = {self.r}"]
        for o in self.orbits:
            elems = " ".join(format_element(x) for x in o.elements)
            lines.append(f"orbit {o.id}: order {o.common_order}, size {o.size}: {elems}")
        return "\n".join(lines) + "\n"


def act(G, a, x):
    """Apply the Galois automorphism zeta -> zeta^a to ``x``."""
    # a is a unit mod |G| iff it is a unit mod the exponent: same prime support
    if gcd(a, G.exponent) != 1:
        raise InvalidUnitError(f"{a} is not a unit modulo {G.order}")
    return G.scalar_mul(a, x)


def _orbit_elements(G, x, modulus):
    return sorted({G.scalar_mul(a, x) for a in units(modulus)})


def orbit_of(G, x, modulus=None, orbit_id=-1):
    """
    The orbit of the nonzero element ``x``.

    ``modulus`` selects which unit group is iterated: ``"order"`` (default)
    uses units mod ord(x), ``"exponent"`` units mod lcm(n_i) and ``"full"``
    units mod |G| as in the original definition of the action. The action of
    a unit only depends on its residue mod ord(x) and unit reduction is
    surjective, so all three give the same set.
    """
    x = G.check(x)
    if x == G.identity:
        raise ExcludedIdentityError("orbit_of is undefined for the identity")
    d = G.element_order(x)
    if modulus is None or modulus == "order":
        m = d
    elif modulus == "exponent":
        m = G.exponent
    elif modulus == "full":
        m = G.order
    else:
        m = int(modulus)
        if m % d:
            raise ValueError(f"modulus {m} is not a multiple of ord(x) = {d}")
    elems = _orbit_elements(G, x, m)
    return Orbit(orbit_id, elems[0], tuple(elems), d)


def orbit_partition(G, modulus=None):
    """
    Partition G \\ {0} into Galois orbits, ordered by canonical representative
    (the member earliest in the iteration order).
    """
    G.require_enumerable()
    index = {}
    orbits = []
    for x in G.nonzero_elements():
        if x in index:
            continue
        orb = orbit_of(G, x, modulus=modulus, orbit_id=len(orbits))
        for y in orb.elements:
            index[y] = orb.id
        orbits.append(orb)
    return OrbitPartition(G, tuple(orbits), index)


@dataclass(frozen=True)
class DivisorClass:
    """The residues 0 < k < modulus with gcd(k, modulus) = divisor."""
    modulus: int
    divisor: int

    @property
    def members(self):
        return [k for k in range(self.divisor, self.modulus, self.divisor)
                if gcd(k, self.modulus) == self.divisor]

    @property
    def size(self):
        return euler_phi(self.modulus // self.divisor)


def divisor_classes(n0):
    """One class per divisor d of n0 with 0 < d < n0; together they partition [1, n0)."""
    if n0 < 2:
        raise ValueError(f"divisor_classes needs n0 >= 2, got {n0}")
    return [DivisorClass(n0, d) for d in divisors(n0) if d < n0]


@dataclass(frozen=True)
class ProductCell:
    """
    A choice per coordinate of a divisor class of n_i, or ``None`` for the
    zero coordinate. Cells with at least one class are H-invariant and every
    orbit inside one has the same size.
    """
    group: object
    choice: tuple

    @property
    def cardinality(self):
        return prod(c.size for c in self.choice if c is not None)

    @property
    def field_order(self):
        """Order of the roots of unity the cell generates: lcm of n_i / d_i."""
        return lcm(*(c.modulus // c.divisor for c in self.choice if c is not None))

    @property
    def degree(self):
        """Degree over Q of the cyclotomic field generated by the cell."""
        return euler_phi(self.field_order)

    @property
    def orbit_count(self):
        q, rem = divmod(self.cardinality, self.degree)
        assert rem == 0, f"cell {self} has cardinality not divisible by its degree"
        return q

    def __contains__(self, x):
        for xi, n, c in zip(x, self.group.factors, self.choice):
            if c is None:
                if xi != 0:
                    return False
            elif xi == 0 or gcd(xi, n) != c.divisor:
                return False
        return True


def product_cells(G):
    """All cells, excluding the all-zero choice."""
    per_coord = [[None] + divisor_classes(n) for n in G.factors]
    return [ProductCell(G, choice) for choice in product(*per_coord)
            if any(c is not None for c in choice)]


def count_orbits_formula(G):
    """r(G) from the divisor lattices alone, without enumerating the group."""
    return sum(cell.orbit_count for cell in product_cells(G))


def cyclic_orbits_equal_divisor_classes(n0):
    """
    Compare the orbit partition of Z/n0 with its divisor classes.

    Returns ``(equal, matching)`` where ``matching`` maps each divisor d to
    the orbit id whose elements are exactly G_{n0}(d) (or ``None``).
    """
    from .group import make_group

    part = orbit_partition(make_group([n0]))
    by_set = {frozenset(x[0] for x in o.elements): o.id for o in part}
    classes = divisor_classes(n0)
    matching = {c.divisor: by_set.get(frozenset(c.members)) for c in classes}
    equal = len(classes) == part.r and all(v is not None for v in matching.values())
    return equal, matching
