"""Oracle sweep over small built-in groups, used by ``intcayley selftest``."""
import numpy as np

from .family import all_connection_sets
from .group import make_group
from .oracle import eigenvalues_numeric, gamma_tau_spectrum_check, near_integral
from .orbits import count_orbits_formula, orbit_partition
from .spectra import adjacency_matrix, is_integral, spectrum


def check_group(G, tol):
    """Exhaustive integrality equivalence and spectrum agreement on one group."""
    part = orbit_partition(G)
    ok = count_orbits_formula(G) == part.r
    worst = 0.0
    for S in all_connection_sets(G):
        oracle = eigenvalues_numeric(adjacency_matrix(G, S))
        verdict = near_integral(oracle, tol)
        ok &= verdict.ok == is_integral(G, S, part).is_integral
        rep = spectrum(G, S, part)
        dev = float(np.abs(np.sort(np.asarray(rep.eigenvalues, dtype=float)) - oracle).max())
        worst = max(worst, dev)
        ok &= dev < tol
        if G.order <= 16:
            ok &= gamma_tau_spectrum_check(G, S, rep.eigenvalues)
    return ok, worst


def run_selftest(groups, tol=1e-6):
    results = []
    for factors in groups:
        G = make_group(factors)
        ok, dev = check_group(G, tol)
        results.append({"case": str(G), "ok": bool(ok), "max_deviation": dev})
    return results
