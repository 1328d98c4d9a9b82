"""
Brute-force checks that share no arithmetic with the exact spectrum path.

Everything here works from the adjacency matrix or from freshly evaluated
complex characters, never from orbits or Ramanujan sums.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import OracleMisuseError, ResourceLimitError

DEFAULT_TOL = 1e-6
CHARACTER_MATRIX_CAP = 64
CHARPOLY_CAP = 16


def eigenvalues_numeric(A):
    """Ascending real eigenvalues of a symmetric zero-diagonal matrix."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise OracleMisuseError(f"expected a square matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise OracleMisuseError("adjacency matrix is not symmetric")
    if np.any(np.diag(A) != 0):
        raise OracleMisuseError("adjacency matrix has nonzero diagonal")
    return np.sort(np.linalg.eigvalsh(A.astype(np.float64)))


@dataclass(frozen=True)
class NearIntegral:
    ok: bool
    max_deviation: float

    def __bool__(self):
        return self.ok


def near_integral(values, tol=DEFAULT_TOL):
    """Whether every value lies within ``tol`` of an integer (inclusive)."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    v = np.asarray(values, dtype=np.float64)
    dev = float(np.abs(v - np.rint(v)).max()) if v.size else 0.0
    return NearIntegral(dev <= tol, dev)


def _characters(G, rows, cols):
    rows = np.asarray(rows, dtype=np.float64).reshape(-1, G.rank)
    cols = np.asarray(cols, dtype=np.float64).reshape(-1, G.rank)
    n = np.asarray(G.factors, dtype=np.float64)
    # phase of prod_i zeta_{n_i}^{g_i s_i}, accumulated in turns per coordinate
    turns = np.zeros((len(rows), len(cols)))
    for i in range(G.rank):
        turns += np.mod(np.outer(rows[:, i], cols[:, i]), n[i]) / n[i]
    return np.exp(2j * np.pi * turns)


@dataclass(frozen=True)
class CharacterMatrix:
    group: object
    labels: tuple
    matrix: np.ndarray

    @property
    def row_sums(self):
        return self.matrix.sum(axis=1)

    def smallest_singular_value(self):
        return float(np.linalg.svd(self.matrix, compute_uv=False).min())

    def numerical_rank(self, rtol=1e-8):
        sv = np.linalg.svd(self.matrix, compute_uv=False)
        return int((sv > rtol * self.group.order).sum())


def character_matrix(G, cap=CHARACTER_MATRIX_CAP):
    """(n-1) x (n-1) matrix of chi_g(h) over nonzero g, h in iteration order."""
    if G.order > cap:
        raise ResourceLimitError(f"group of order {G.order} exceeds character-matrix cap {cap}")
    labels = tuple(G.nonzero_elements())
    return CharacterMatrix(G, labels, _characters(G, labels, labels))


def indicator_vector(G, S):
    members = {tuple(x) for x in S}
    return np.array([1.0 if x in members else 0.0 for x in G.nonzero_elements()])


def gamma_tau_spectrum_check(G, S, spectrum_values=None, tol=1e-9):
    """
    Check that Gamma @ indicator(S) reproduces the eigenvalues at every
    nonzero g. ``spectrum_values`` defaults to the package's own spectrum.
    """
    if spectrum_values is None:
        from .spectra import spectrum
        spectrum_values = spectrum(G, S).eigenvalues
    gamma = character_matrix(G)
    lhs = gamma.matrix @ indicator_vector(G, S)
    rhs = np.asarray(spectrum_values, dtype=complex)[1:]
    return bool(np.abs(lhs - rhs).max(initial=0.0) < tol)


def charpoly_integer(A, cap=CHARPOLY_CAP):
    """
    Characteristic polynomial det(xI - A) of an integer matrix, exactly, by the
    Faddeev-LeVerrier recursion. Coefficients are returned highest degree
    first; every division in the recursion is exact for integer input.
    """
    A = [[int(v) for v in row] for row in np.asarray(A)]
    n = len(A)
    if n > cap:
        raise ResourceLimitError(f"exact characteristic polynomial limited to order {cap}")
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A @ M_prev + c_{n-k+1} I, then c_{n-k} = -tr(A M) / k
        for i in range(n):
            M[i][i] += coeffs[-1]
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = Fraction(-sum(AM[i][i] for i in range(n)), k)
        assert c.denominator == 1
        coeffs.append(int(c))
        M = AM
    return coeffs


def poly_from_roots(roots):
    """Integer coefficients of prod (x - r), highest degree first."""
    coeffs = [1]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def exact_integral_spectrum_check(A, eigenvalues):
    """True iff det(xI - A) equals prod (x - lambda) for the given integers."""
    return charpoly_integer(A) == poly_from_roots([int(v) for v in eigenvalues])


def relabel(A, perm):
    """The matrix of the same graph under the vertex permutation ``perm``."""
    A = np.asarray(A)
    perm = np.asarray(perm)
    return A[np.ix_(perm, perm)]
