"""
Finite abelian groups given as a direct sum of cyclic groups Z/n_1 + ... + Z/n_m.

Elements are plain tuples of ints. Iteration over a group is row-major over
coordinates (last coordinate fastest), which coincides with lexicographic
order on the tuples; every ordered output in the package follows it.
"""
import operator
from dataclasses import dataclass, field
from itertools import product
from math import gcd, prod

from .errors import InvalidElementError, InvalidGroupError, ResourceLimitError
from .ntheory import lcm

DEFAULT_ENUMERATION_CAP = 2**20
_MAX_MODULUS = 2**63 - 1


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple
    enumeration_cap: int = field(default=DEFAULT_ENUMERATION_CAP, compare=False)

    def __post_init__(self):
        try:
            factors = tuple(int(n) for n in self.factors)
        except (TypeError, ValueError) as exc:
            raise InvalidGroupError(f"group factors must be integers: {self.factors!r}") from exc
        if not factors:
            raise InvalidGroupError("a group needs at least one factor")
        for n in factors:
            if n < 2:
                raise InvalidGroupError(f"every factor must be >= 2, got {n}")
            if n > _MAX_MODULUS:
                raise InvalidGroupError(f"factor {n} does not fit in 64 bits")
        object.__setattr__(self, "factors", factors)

    @property
    def rank(self):
        """Number of cyclic factors m."""
        return len(self.factors)

    @property
    def order(self):
        return prod(self.factors)

    @property
    def exponent(self):
        return lcm(*self.factors)

    @property
    def identity(self):
        return (0,) * self.rank

    def __len__(self):
        return self.order

    def __iter__(self):
        return self.elements()

    def __contains__(self, x):
        try:
            self.check(x)
        except InvalidElementError:
            return False
        return True

    def __str__(self):
        return ",".join(str(n) for n in self.factors)

    def require_enumerable(self, cap=None):
        cap = self.enumeration_cap if cap is None else cap
        if self.order > cap:
            raise ResourceLimitError(f"group of order {self.order} exceeds enumeration cap {cap}")

    def elements(self):
        """Iterate over all elements in the fixed row-major order."""
        self.require_enumerable()
        return product(*(range(n) for n in self.factors))

    def nonzero_elements(self):
        it = self.elements()
        next(it)
        return it

    def check(self, x):
        """Return ``x`` as a tuple after verifying it is a reduced element of the group."""
        try:
            x = tuple(operator.index(c) for c in x)
        except TypeError as exc:
            raise InvalidElementError(f"{x!r} has non-integer coordinates") from exc
        if len(x) != self.rank:
            raise InvalidElementError(f"{x} has {len(x)} coordinates, group has {self.rank}")
        for xi, n in zip(x, self.factors):
            if not 0 <= xi < n:
                raise InvalidElementError(f"{x} is not a reduced element of Z/{self}")
        return x

    def reduce(self, coords):
        """Reduce arbitrary integer coordinates into the group."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise InvalidElementError(f"{coords} has {len(coords)} coordinates, group has {self.rank}")
        return tuple(int(c) % n for c, n in zip(coords, self.factors))

    def index(self, x):
        """Position of ``x`` in the iteration order."""
        i = 0
        for xi, n in zip(x, self.factors):
            i = i * n + xi
        return i

    def element_at(self, i):
        coords = []
        for n in reversed(self.factors):
            i, r = divmod(i, n)
            coords.append(r)
        return tuple(reversed(coords))

    def add(self, x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, self.factors))

    def neg(self, x):
        return tuple(-a % n for a, n in zip(x, self.factors))

    def sub(self, x, y):
        return tuple((a - b) % n for a, b, n in zip(x, y, self.factors))

    def scalar_mul(self, k, x):
        return tuple(k * a % n for a, n in zip(x, self.factors))

    def element_order(self, x):
        """Least k >= 1 with k*x = 0, i.e. lcm of n_i / gcd(x_i, n_i)."""
        return lcm(*(n // gcd(a, n) for a, n in zip(x, self.factors)))


def make_group(factors, enumeration_cap=DEFAULT_ENUMERATION_CAP):
    """Build the group Z/n_1 + ... + Z/n_m from its list of moduli."""
    if isinstance(factors, int):
        factors = (factors,)
    return AbelianGroup(tuple(factors), enumeration_cap)


def parse_group(text):
    """Parse the comma-separated group format, e.g. ``"4,6"``."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        factors = [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidGroupError(f"cannot parse group spec {text!r}") from exc
    return make_group(factors)


def parse_element(G, text):
    """Parse ``"1:0"`` (coordinates joined by ':') into an element of ``G``."""
    try:
        coords = [int(c) for c in text.strip().split(":")]
    except ValueError as exc:
        raise InvalidElementError(f"cannot parse element {text!r}") from exc
    return G.check(coords)


def parse_elements(G, text):
    """Parse a comma-separated list of elements; the empty string is the empty list."""
    text = text.strip()
    if not text:
        return []
    return [parse_element(G, part) for part in text.split(",")]


def format_element(x):
    return ":".join(str(c) for c in x)


def iter_abelian_presentations(max_order, min_order=2):
    """
    Yield every multiset of moduli >= 2 (as a nondecreasing tuple) whose
    product lies in ``[min_order, max_order]``. Non-canonical presentations
    such as (2, 3) next to (6,) are both produced.
    """
    def rec(prefix, smallest, remaining):
        if prefix and prod(prefix) >= min_order:
            yield tuple(prefix)
        for n in range(smallest, remaining + 1):
            yield from rec(prefix + [n], n, remaining // n)

    yield from rec([], 2, max_order)
