"""
Enumeration of the integral Cayley graphs on a group.

Each subset of the r(G) Galois orbits gives one integral connection set, so
the family is indexed by r-bit masks: bit i set means orbit i is included.
"""
import json
from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import ResourceLimitError
from .oracle import DEFAULT_TOL, eigenvalues_numeric, near_integral
from .orbits import orbit_partition
from .spectra import adjacency_matrix, make_connection_set, spectrum

DEFAULT_LIMIT = 2**20
EXHAUSTIVE_LIMIT = 2**16
_MAX_ORBITS = 63


def connectivity(G, S):
    """True iff S generates G, found by breadth-first closure from the identity."""
    S = list(S)
    seen = {G.identity}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for s in S:
            y = G.add(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == G.order


def orbit_union(partition, mask):
    return sorted(x for i, orb in enumerate(partition) if mask >> i & 1 for x in orb.elements)


@dataclass(frozen=True)
class FamilyEntry:
    mask: int
    connection_set: object
    degree: int
    spectrum: dict
    connected: bool

    @property
    def size(self):
        return len(self.connection_set)

    @property
    def empty(self):
        return self.mask == 0

    def as_dict(self):
        return {
            "mask": self.mask,
            "orbits": [i for i in range(self.mask.bit_length()) if self.mask >> i & 1],
            "size": self.size,
            "degree": self.degree,
            "spectrum": {str(k): v for k, v in self.spectrum.items()},
            "connected": self.connected,
            "empty": self.empty,
            "S": [list(x) for x in self.connection_set],
        }


@dataclass(frozen=True)
class IntegralFamilyReport:
    group: object
    r: int
    entries: tuple

    @property
    def total(self):
        return 2**self.r

    def to_jsonl(self):
        return "".join(json.dumps(e.as_dict()) + "\n" for e in self.entries)

    def to_csv(self):
        lines = ["mask,size,degree,connected,spectrum"]
        for e in self.entries:
            spec = " ".join(f"{k}^{v}" for k, v in e.spectrum.items())
            lines.append(f"{e.mask},{e.size},{e.degree},{str(e.connected).lower()},{spec}")
        return "\n".join(lines) + "\n"

    def to_text(self):
        lines = [f"group {self.group}", f"r = {self.r}", f"total = {self.total}"]
        for e in self.entries:
            spec = " ".join(f"{k}^{v}" for k, v in e.spectrum.items())
            tag = " (empty)" if e.empty else ""
            conn = "connected" if e.connected else "disconnected"
            lines.append(f"mask {e.mask}: |S|={e.size} {conn} spec {spec}{tag}")
        return "\n".join(lines) + "\n"


def enumerate_integral(G, partition=None, limit=DEFAULT_LIMIT):
    """All 2^r integral connection sets on ``G`` in mask order."""
    partition = partition or orbit_partition(G)
    r = partition.r
    if r > _MAX_ORBITS or 2**r > limit:
        raise ResourceLimitError(f"2^{r} integral graphs exceed the enumeration limit {limit}")
    entries = []
    for mask in range(2**r):
        S = make_connection_set(G, orbit_union(partition, mask))
        rep = spectrum(G, S, partition)
        entries.append(FamilyEntry(mask, S, len(S), rep.multiplicities, connectivity(G, S)))
    return IntegralFamilyReport(G, r, tuple(entries))


def inverse_pairs(G):
    """The classes {x, -x} of nonzero elements, in iteration order."""
    pairs = []
    seen = set()
    for x in G.nonzero_elements():
        if x not in seen:
            pair = tuple(sorted({x, G.neg(x)}))
            seen.update(pair)
            pairs.append(pair)
    return pairs


def all_connection_sets(G, limit=EXHAUSTIVE_LIMIT):
    """Every identity-free inverse-closed subset of ``G`` as sorted tuples."""
    pairs = inverse_pairs(G)
    if 2**len(pairs) > limit:
        raise ResourceLimitError(f"2^{len(pairs)} connection sets exceed the limit {limit}")
    for picks in product((False, True), repeat=len(pairs)):
        yield tuple(sorted(x for keep, pair in zip(picks, pairs) if keep for x in pair))


@dataclass(frozen=True)
class ExactnessResult:
    bound: int
    achieved: int

    @property
    def equal(self):
        return self.achieved == self.bound

    def as_dict(self):
        return {"bound": self.bound, "achieved": self.achieved, "equal": self.equal}


def exactness_check(G, tol=DEFAULT_TOL, limit=EXHAUSTIVE_LIMIT):
    """
    Count, by the numerical oracle alone, how many connection sets give an
    integral graph, and compare with 2^r(G).
    """
    bound = 2**orbit_partition(G).r
    achieved = 0
    for S in all_connection_sets(G, limit):
        if near_integral(eigenvalues_numeric(adjacency_matrix(G, S)), tol):
            achieved += 1
    return ExactnessResult(bound, achieved)
