"""Integral Cayley graphs on finite abelian groups via Galois orbits."""
from .errors import (AsymmetryError, ConnectionSetError, ExcludedIdentityError,
                     IdentityInSetError, IntCayleyError, InvalidElementError,
                     InvalidGroupError, InvalidUnitError, OracleMisuseError,
                     PreconditionError, ResourceLimitError)
from .family import (connectivity, enumerate_integral, exactness_check)
from .group import AbelianGroup, make_group, parse_group
from .ntheory import divisors, euler_phi, gcd, lcm, moebius, ramanujan_sum
from .orbits import (act, count_orbits_formula, cyclic_orbits_equal_divisor_classes,
                     divisor_classes, orbit_of, orbit_partition, product_cells)
from .spectra import (adjacency_matrix, character_value, eigenvalue_exact, is_integral,
                      make_connection_set, spectrum)

__version__ = "0.1.0"
