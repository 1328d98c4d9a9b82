"""
Connection sets, the integrality test and Cayley graph spectra.

The eigenvalue of D(G, S) attached to g is the character sum

    lambda_g = sum_{s in S} prod_i zeta_{n_i}^{g_i s_i}.

When S is a union of Galois orbits every orbit contributes a Ramanujan sum,
so the spectrum is computed in exact integer arithmetic. Any other S goes
through floating point character sums.
"""
import cmath
import json
from collections import Counter
from dataclasses import dataclass, field
from math import pi

import numpy as np

from .errors import AsymmetryError, IdentityInSetError, PreconditionError, ResourceLimitError
from .group import format_element
from .ntheory import ramanujan_sum
from .orbits import orbit_partition

DEFAULT_DENSE_CAP = 4096
EXACT = "exact-integer"
FLOAT = "complex-float"


@dataclass(frozen=True)
class ConnectionSet:
    group: object
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return tuple(x) in self._members

    @property
    def _members(self):
        return frozenset(self.elements)


def make_connection_set(G, elements):
    """Validate ``elements`` as an identity-free, inverse-closed subset of ``G``."""
    elems = sorted({G.check(x) for x in elements})
    members = set(elems)
    if G.identity in members:
        raise IdentityInSetError("a connection set must not contain the identity")
    missing = [x for x in elems if G.neg(x) not in members]
    if missing:
        listed = ", ".join(format_element(x) for x in missing)
        raise AsymmetryError(f"set is not closed under inverses; offending: {listed}", missing)
    return ConnectionSet(G, tuple(elems))


def _as_connection_set(G, S):
    return S if isinstance(S, ConnectionSet) else make_connection_set(G, S)


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_modulus ** exponent, kept exact."""
    exponent: int
    modulus: int

    @property
    def value(self):
        return cmath.exp(2j * pi * self.exponent / self.modulus)

    def __complex__(self):
        return self.value


def character_value(G, g, s):
    """chi_g(s) = zeta_L^e with e = sum_i (L / n_i) g_i s_i mod L, L the exponent."""
    L = G.exponent
    e = sum((L // n) * gi * si for gi, si, n in zip(g, s, G.factors)) % L
    return RootOfUnity(e, L)


@dataclass(frozen=True)
class IntegralityVerdict:
    is_integral: bool
    covered_orbit_ids: tuple
    residue: tuple

    def __bool__(self):
        return self.is_integral


def is_integral(G, S, partition=None):
    """
    Decide integrality of D(G, S) combinatorially: the graph is integral
    exactly when S is a union of Galois orbits. No eigenvalue is computed.
    """
    S = _as_connection_set(G, S)
    partition = partition or orbit_partition(G)
    covered = []
    residue = []
    for oid in sorted({partition.orbit_id(x) for x in S}):
        orb = partition[oid]
        if all(y in S for y in orb.elements):
            covered.append(oid)
        else:
            residue.extend(y for y in orb.elements if y in S)
    return IntegralityVerdict(not residue, tuple(covered), tuple(sorted(residue)))


def eigenvalue_exact(G, g, S, partition=None, verdict=None):
    """Integer eigenvalue lambda_g for an integral connection set, via Ramanujan sums."""
    S = _as_connection_set(G, S)
    partition = partition or orbit_partition(G)
    verdict = verdict or is_integral(G, S, partition)
    if not verdict.is_integral:
        raise PreconditionError("eigenvalue_exact needs S to be a union of orbits")
    L = G.exponent
    total = 0
    for oid in verdict.covered_orbit_ids:
        orb = partition[oid]
        d = orb.common_order
        e = character_value(G, g, orb.representative).exponent
        # chi_g(rep) is a d-th root of unity, so e is a multiple of L/d
        total += ramanujan_sum(d, e * d // L)
    return total


def _coords(elements, rank):
    return np.array(list(elements), dtype=np.int64).reshape(-1, rank)


def character_sums(G, S):
    """Direct complex character sums lambda_g for every g in iteration order."""
    G.require_enumerable()
    L = G.exponent
    S = list(S)
    if not S:
        return np.zeros(G.order, dtype=complex)
    weights = np.array([L // n for n in G.factors], dtype=object)
    gs = _coords(G.elements(), G.rank)
    ss = _coords(S, G.rank)
    # exponents as exact ints before reducing, then map to the unit circle
    exps = np.mod((gs.astype(object) * weights) @ ss.T.astype(object), L).astype(np.float64)
    return np.exp(2j * np.pi * exps / L).sum(axis=1)


@dataclass(frozen=True)
class SpectrumReport:
    group: object
    connection_set: ConnectionSet
    mode: str
    eigenvalues: tuple
    integral: bool
    orbit_ids: tuple = ()
    max_imag: float = 0.0

    @property
    def multiplicities(self):
        if self.mode == EXACT:
            return dict(sorted(Counter(self.eigenvalues).items()))
        return dict(sorted(Counter(_float_key(v) for v in self.eigenvalues).items()))

    def as_dict(self):
        return {
            "group": str(self.group),
            "S": [list(x) for x in self.connection_set],
            "mode": self.mode,
            "eigenvalues": list(self.eigenvalues),
            "integral": self.integral,
            "orbit_ids": list(self.orbit_ids),
        }

    def to_json(self, **kwargs):
        return json.dumps(self.as_dict(), **kwargs)

    def to_text(self):
        lines = [f"group {self.group}",
                 "S = {" + ", ".join(format_element(x) for x in self.connection_set) + "}",
                 f"mode {self.mode}", f"integral {str(self.integral).lower()}"]
        for x, lam in zip(self.group.elements(), self.eigenvalues):
            lines.append(f"{format_element(x)}\t{format_number(lam)}")
        return "\n".join(lines) + "\n"


def _float_key(v):
    return float(f"{v:.12g}") + 0.0


def format_number(v):
    """Integers print bare, floats with 12 significant digits."""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{_float_key(v):.12g}"


def spectrum(G, S, partition=None):
    """The full spectrum, indexed by g in iteration order."""
    S = _as_connection_set(G, S)
    partition = partition or orbit_partition(G)
    verdict = is_integral(G, S, partition)
    if verdict.is_integral:
        eig = tuple(eigenvalue_exact(G, g, S, partition, verdict) for g in G.elements())
        return SpectrumReport(G, S, EXACT, eig, True, verdict.covered_orbit_ids)
    sums = character_sums(G, S.elements)
    eig = tuple(float(v) for v in sums.real)
    return SpectrumReport(G, S, FLOAT, eig, False, verdict.covered_orbit_ids,
                          float(np.abs(sums.imag).max()))


def adjacency_matrix(G, S, cap=DEFAULT_DENSE_CAP):
    """Dense 0/1 matrix with A[x, y] = 1 iff y - x lies in S."""
    if G.order > cap:
        raise ResourceLimitError(f"group of order {G.order} exceeds dense-matrix cap {cap}")
    S = _as_connection_set(G, S)
    n = G.order
    A = np.zeros((n, n), dtype=np.int8)
    if not len(S):
        return A
    mods = np.array(G.factors, dtype=np.int64)
    strides = np.ones(G.rank, dtype=np.int64)
    for i in range(G.rank - 2, -1, -1):
        strides[i] = strides[i + 1] * mods[i + 1]
    xs = _coords(G.elements(), G.rank)
    rows = np.arange(n)
    for s in S:
        cols = (np.mod(xs + np.array(s, dtype=np.int64), mods) * strides).sum(axis=1)
        A[rows, cols] = 1
    return A
