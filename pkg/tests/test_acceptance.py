"""
Acceptance criteria. Each test prints one PASS/FAIL line, collected in the
terminal summary; run ``python tests/test_acceptance.py`` to see them alone.
"""
import time
from math import gcd

import numpy as np
import pytest

from intcayley import (count_orbits_formula, cyclic_orbits_equal_divisor_classes,
                       enumerate_integral, exactness_check, is_integral, make_group,
                       orbit_partition)
from intcayley.family import all_connection_sets, inverse_pairs, orbit_union
from intcayley.group import iter_abelian_presentations
from intcayley.oracle import (character_matrix, eigenvalues_numeric,
                              exact_integral_spectrum_check, gamma_tau_spectrum_check,
                              near_integral)
from intcayley.spectra import EXACT, adjacency_matrix, character_sums, spectrum

from conftest import ACCEPTANCE_LINES

TOL = 1e-6
EXACT_TOL = 1e-9
RANDOM_SETS = 1000

EXHAUSTIVE_SHAPES = [[n] for n in range(2, 13)] + [
    [2, 2], [2, 4], [2, 6], [3, 3], [2, 2, 2], [2, 3], [4, 6]]
EXHAUSTIVE_SHAPES = [f for f in EXHAUSTIVE_SHAPES if np.prod(f) <= 12]
RANDOM_SHAPES = [[16], [2, 8], [4, 4], [2, 2, 4], [2, 2, 2, 2], [4, 6], [3, 6], [5, 5],
                 [2, 3, 5], [8, 8], [7, 9], [2, 4, 8]]


def record(number, label, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {label} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


class Checker:
    """Runs the integrality equivalence and spectrum agreement for one (G, S)."""

    def __init__(self):
        self.cases = 0
        self.integral_cases = 0
        self.counterexamples = []
        self.exact_dev = 0.0
        self.oracle_dev = 0.0

    def check(self, G, S, part):
        self.cases += 1
        oracle = eigenvalues_numeric(adjacency_matrix(G, S))
        verdict = is_integral(G, S, part).is_integral
        if verdict != near_integral(oracle, TOL).ok:
            self.counterexamples.append((G.factors, S))
        if verdict:
            self.integral_cases += 1
            rep = spectrum(G, S, part)
            assert rep.mode == EXACT
            exact = np.array(rep.eigenvalues, dtype=float)
            direct = character_sums(G, S)
            self.exact_dev = max(self.exact_dev, float(np.abs(direct - exact).max()))
            self.oracle_dev = max(self.oracle_dev, float(np.abs(np.sort(exact) - oracle).max()))


@pytest.fixture(scope="module")
def checker():
    return Checker()


def random_connection_set(G, part, pairs, rng):
    kind = rng.integers(4)
    if kind < 2:
        picks = rng.random(len(pairs)) < rng.uniform(0.1, 0.9)
        return sorted(x for keep, p in zip(picks, pairs) if keep for x in p)
    S = set(orbit_union(part, int(rng.integers(2**part.r))))
    if kind == 3:
        # toggle one inverse pair, usually breaking orbit closure
        S ^= set(pairs[rng.integers(len(pairs))])
    return sorted(S)


def test_criterion_1_exhaustive_equivalence(checker):
    start = time.perf_counter()
    before = len(checker.counterexamples)
    n = 0
    charpoly_failures = 0
    for f in EXHAUSTIVE_SHAPES:
        G = make_group(f)
        part = orbit_partition(G)
        for S in all_connection_sets(G):
            checker.check(G, S, part)
            n += 1
            rep = spectrum(G, S, part)
            if rep.mode == EXACT:
                # integer-only confirmation, no floating point involved
                charpoly_failures += not exact_integral_spectrum_check(
                    adjacency_matrix(G, S), rep.eigenvalues)
    elapsed = time.perf_counter() - start
    bad = len(checker.counterexamples) - before
    ok = bad == 0 and charpoly_failures == 0 and elapsed < 120
    record(1, "integral iff union of orbits, exhaustive |G| <= 12", ok,
           f"{len(EXHAUSTIVE_SHAPES)} groups, {n} sets, {bad} counterexamples, "
           f"{charpoly_failures} exact charpoly failures, {elapsed:.1f}s")


def test_criterion_2_random_equivalence(checker):
    start = time.perf_counter()
    before = len(checker.counterexamples)
    rng = np.random.default_rng(20240917)
    integral = 0
    for f in RANDOM_SHAPES:
        G = make_group(f)
        assert 12 < G.order <= 64
        part = orbit_partition(G)
        pairs = inverse_pairs(G)
        for _ in range(RANDOM_SETS):
            S = random_connection_set(G, part, pairs, rng)
            integral += is_integral(G, S, part).is_integral
            checker.check(G, S, part)
    elapsed = time.perf_counter() - start
    bad = len(checker.counterexamples) - before
    shapes = len({tuple(f) for f in RANDOM_SHAPES})
    ok = bad == 0 and elapsed < 300 and shapes >= 8
    record(2, "integral iff union of orbits, random 12 < |G| <= 64", ok,
           f"{shapes} shapes x {RANDOM_SETS} sets, {integral} integral, {bad} counterexamples, "
           f"{elapsed:.1f}s")


def test_criterion_3_orbit_count_two_routes():
    start = time.perf_counter()
    groups = list(iter_abelian_presentations(200))
    mismatches = [f for f in groups
                  if count_orbits_formula(make_group(f)) != orbit_partition(make_group(f)).r]
    elapsed = time.perf_counter() - start
    record(3, "r(G) formula equals direct orbit count, |G| <= 200", not mismatches and elapsed < 60,
           f"{len(groups)} presentations, {len(mismatches)} mismatches, {elapsed:.1f}s")


def test_criterion_4_family_size():
    problems = []
    groups = list(iter_abelian_presentations(12))
    for f in groups:
        G = make_group(f)
        fam = enumerate_integral(G)
        distinct = {e.connection_set.elements for e in fam.entries}
        if len(fam.entries) != 2**fam.r or len(distinct) != 2**fam.r:
            problems.append((f, "enumeration"))
        if not all(is_integral(G, e.connection_set).is_integral for e in fam.entries):
            problems.append((f, "non-integral entry"))
        res = exactness_check(G, tol=TOL)
        if res.achieved > res.bound:
            problems.append((f, "bound exceeded"))
        if not res.equal:
            problems.append((f, f"achieved {res.achieved} < {res.bound}"))
    record(4, "exactly 2^r integral Cayley graphs, |G| <= 12", not problems,
           f"{len(groups)} presentations, problems: {problems or 'none'}")


def test_criterion_5_cyclic_divisor_classes():
    failures = [n for n in range(2, 101) if not cyclic_orbits_equal_divisor_classes(n)[0]]
    record(5, "cyclic orbits equal divisor classes, 2 <= n <= 100", not failures,
           f"failures: {failures or 'none'}")


def test_criterion_6_exact_vs_float(checker):
    if checker.integral_cases == 0:
        for f in EXHAUSTIVE_SHAPES:
            G = make_group(f)
            part = orbit_partition(G)
            for mask in range(2**part.r):
                checker.check(G, orbit_union(part, mask), part)
    ok = checker.exact_dev < EXACT_TOL and checker.oracle_dev < TOL
    record(6, "Ramanujan-sum spectra match direct sums and oracle", ok,
           f"{checker.integral_cases} integral sets, direct dev {checker.exact_dev:.2e}, "
           f"oracle dev {checker.oracle_dev:.2e}")


def test_criterion_7_character_matrix():
    shapes = [f for f in EXHAUSTIVE_SHAPES + RANDOM_SHAPES if np.prod(f) <= 64]
    bad = []
    for f in shapes:
        G = make_group(f)
        gamma = character_matrix(G)
        rank_ok = gamma.smallest_singular_value() > 1e-8 * G.order
        rows_ok = np.abs(gamma.row_sums + 1).max() < 1e-9
        if not (rank_ok and rows_ok and gamma.numerical_rank() == G.order - 1):
            bad.append(f)
    rng = np.random.default_rng(77)
    gamma_failures = 0
    for _ in range(200):
        G = make_group(shapes[rng.integers(len(shapes))])
        pairs = inverse_pairs(G)
        picks = rng.random(len(pairs)) < 0.5
        S = [x for keep, p in zip(picks, pairs) if keep for x in p]
        gamma_failures += not gamma_tau_spectrum_check(G, S)
    record(7, "character matrix nonsingular, row sums -1, Gamma tau = spectrum",
           not bad and gamma_failures == 0,
           f"{len(shapes)} groups, rank/row failures {bad or 'none'}, "
           f"Gamma-tau failures {gamma_failures}/200")


def test_criterion_8_action_modulus():
    start = time.perf_counter()
    groups = list(iter_abelian_presentations(200))
    bad = []
    for f in groups:
        G = make_group(f)
        full = orbit_partition(G, modulus="full").as_sets()
        if full != orbit_partition(G, modulus="exponent").as_sets():
            bad.append(f)
        elif full != orbit_partition(G).as_sets():
            bad.append(f)
    elapsed = time.perf_counter() - start
    record(8, "orbits under units mod |G| equal orbits under units mod lcm", not bad,
           f"{len(groups)} presentations, mismatches {bad or 'none'}, {elapsed:.1f}s")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
