"""Acceptance suite: one marker per criterion, summarized as PASS/FAIL lines
at the end of the run (see conftest.py).

Published table values are transcribed verbatim; everything else is checked
against brute-force oracles.
"""

import itertools
import json
import time
from functools import lru_cache

import numpy as np
import pytest

from leadmono.cli import main
from leadmono.instance import InstanceSpec
from leadmono.lgb import TIERS, degree_bound, lgb_basic, lgb_improved, target_series, weakly_revlex_check
from leadmono.monomial import parse_monomial
from leadmono.monomial_ideal import MonomialIdeal, hps
from leadmono.oracle import DEFAULT_BUDGET, OracleBudgetError, check_budget, verify_with_retry
from leadmono.series import generic_hilbert_series

from conftest import brute_force_standard

criterion = pytest.mark.criterion

TOY = InstanceSpec.of(3, (2, 2, 3, 4))
CASE1 = InstanceSpec.of(18, (2,) * 19)
CASE2 = InstanceSpec.of(14, (2,) * 10)
CASES = {"case1": CASE1, "case2": CASE2}

# candidate counts per degree d = 1.. for tiers 0, 1, 2, 3
CANDIDATE_COUNTS = {
    "case1": {
        0: [18, 171, 1140, 5985, 26334, 100947, 346104, 1081575, 3124550, 8436285],
        1: [18, 171, 1095, 5064, 17417, 45331, 89889, 134447, 145918, 97791],
        2: [18, 171, 906, 3144, 8794, 17864, 29640, 31008, 32946, 16796],
        3: [1, 18, 152, 798, 2907, 7752, 15504, 23256, 25194, 16796],
    },
    "case2": {
        0: [14, 105, 560, 2380, 8568, 27132, 77520, 203490, 497420, 1144066, 2496144],
        1: [14, 105, 540, 2084, 6364, 16049, 34670, 66257, 115040, 185304, 281344],
        2: [14, 105, 440, 1442, 3811, 8261, 15618, 27735, 45595, 70473, 103645],
        3: [1, 14, 95, 420, 1375, 3598, 7937, 15360, 26880, 43520, 66304],
    },
}

# generators consulted per degree d = 2.., tier 3 (all) and tier 4 (divisible by x_t)
RELEVANT_COUNTS = {
    "case1": {
        3: [0, 19, 79, 268, 818, 2242, 5320, 11134, 21470],
        4: [0, 4, 6, 82, 234, 1102, 0, 5814, 8398],
    },
    "case2": {
        3: [0, 10, 30, 69, 132, 216, 306, 381, 416, 425],
        4: [0, 0, 4, 25, 48, 42, 132, 207, 242, 251],
    },
}


@lru_cache(maxsize=None)
def run_case(name: str, tier: int):
    return lgb_improved(CASES[name], tier, extra_degrees=2)


def no_generators_past_bound(result) -> bool:
    return all(t.n_d == 0 for t in result.traces if t.d > result.D)


# -- 1 -----------------------------------------------------------------------

TOY_LG = ["x1^2", "x1*x2", "x2^3", "x2^2*x3", "x1*x3^3", "x2*x3^3", "x3^4"]


@criterion(1, "toy example at every tier")
@pytest.mark.parametrize("tier", TIERS)
def test_toy_reproduction(tier, capsys):
    start = time.perf_counter()
    code = main(["compute", "-n", "3", "-m", "4", "-d", "2,2,3,4", "--tier", str(tier), "--format", "json"])
    elapsed = time.perf_counter() - start
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert set(out["L_G"]) == set(TOY_LG) and len(out["L_G"]) == 7
    assert elapsed < 1.0


# -- 2 -----------------------------------------------------------------------


@criterion(2, "Hilbert golden values")
def test_hilbert_golden_values():
    assert generic_hilbert_series(TOY, 20).coeffs == (1, 3, 4, 3)
    J2 = MonomialIdeal(3, [parse_monomial(s, 3) for s in ("x1^2", "x1*x2")])
    assert hps(J2, 3).coeffs == (1, 3, 4, 5)
    J3 = MonomialIdeal(3, [parse_monomial(s, 3) for s in ("x1^2", "x1*x2", "x2^3", "x2^2*x3")])
    assert hps(J3, 4).coeffs == (1, 3, 4, 3, 3)


# -- 3 -----------------------------------------------------------------------


@criterion(3, "published candidate counts")
@pytest.mark.parametrize("tier", [0, 1, 2, 3])
@pytest.mark.parametrize("case", ["case1", "case2"])
def test_published_candidate_counts(case, tier):
    result = run_case(case, tier)
    got = [t.candidates_checked for t in result.traces if t.d <= result.D]
    assert got == CANDIDATE_COUNTS[case][tier]


# -- 4 -----------------------------------------------------------------------


@criterion(4, "published generator counts")
@pytest.mark.parametrize("tier", [3, 4])
@pytest.mark.parametrize("case", ["case1", "case2"])
def test_published_relevant_counts(case, tier):
    result = run_case(case, tier)
    got = [t.relevant_generators for t in result.traces if 2 <= t.d <= result.D]
    assert got == RELEVANT_COUNTS[case][tier]


# -- 5 -----------------------------------------------------------------------

CROSS_GRID = [InstanceSpec.of(n, (d,) * m) for n in range(2, 9) for m in (n - 1, n, n + 1) for d in (2, 3)]


@criterion(5, "cross-tier equivalence")
@pytest.mark.parametrize("spec", CROSS_GRID, ids=str)
def test_cross_tier_equivalence(spec):
    reference = lgb_basic(spec).L_G
    for tier in TIERS:
        result = lgb_improved(spec, tier, extra_degrees=1)
        assert result.L_G == reference, f"tier {tier}"
        assert no_generators_past_bound(result)


# -- 6 -----------------------------------------------------------------------


def oracle_grid():
    specs = []
    for n in range(1, 6):
        for m in range(1, 7):
            for degs in itertools.combinations_with_replacement((3, 2, 1), m):
                spec = InstanceSpec.of(n, degs)
                try:
                    check_budget(spec, DEFAULT_BUDGET)
                except OracleBudgetError:
                    continue
                specs.append(spec)
    return specs


ORACLE_GRID = oracle_grid()


@criterion(6, "oracle agreement")
@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 7)])
def test_oracle_agreement(n, m):
    specs = [s for s in ORACLE_GRID if s.n == n and s.m == m]
    assert specs
    failures = []
    for spec in specs:
        ok, trials = verify_with_retry(spec, range(1, 6))
        if not ok:
            failures.append((str(spec), [t.seed for t in trials if not t.match]))
    assert not failures


# -- 7 -----------------------------------------------------------------------


def random_specs(count: int, seed: int = 2024):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(1, 8))
        m = int(rng.integers(1, 9))
        degrees = tuple(sorted((int(x) for x in rng.integers(1, 4, size=m)), reverse=True))
        spec = InstanceSpec.of(n, degrees)
        if n > m and spec.macaulay_bound > 9:
            continue  # keeps the exhaustive weakly-revlex scan small
        out.append(spec)
    return out


STRUCT_SPECS = random_specs(240)


@criterion(7, "structural invariants")
@pytest.mark.parametrize("block", range(8))
def test_structural_invariants(block):
    for spec in STRUCT_SPECS[block::8]:
        result = lgb_improved(spec, 4)
        gens = result.L_G.generators
        for a, b in itertools.permutations(gens, 2):
            assert not all(x <= y for x, y in zip(a, b)), f"{spec}: {a} | {b}"
        assert weakly_revlex_check(result.L_G), str(spec)
        target = target_series(spec, result.D)
        got = hps(result.L_G, result.D)
        assert list(got.coeffs) == [target.coefficient(d) for d in range(result.D + 1)], str(spec)


# -- 8 -----------------------------------------------------------------------


def random_ideals(count: int, seed: int = 8):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, 5))
        k = int(rng.integers(0, 7))
        gens = [tuple(int(e) for e in rng.multinomial(int(rng.integers(1, 5)), [1 / n] * n)) for _ in range(k)]
        out.append((n, gens))
    return out


@criterion(8, "HPS brute-force equivalence")
@pytest.mark.parametrize("block", range(5))
def test_hps_brute_force(block):
    for n, gens in random_ideals(250)[block::5]:
        series = hps(MonomialIdeal(n, gens), 8)
        assert list(series.coeffs) == [len(brute_force_standard(n, gens, d)) for d in range(9)], (n, gens)


# -- 9 -----------------------------------------------------------------------


@criterion(9, "degree bounds")
def test_degree_bounds():
    assert degree_bound(TOY) == 4
    assert degree_bound(CASE1) == 10
    assert degree_bound(CASE2) == 11


@criterion(9, "degree bounds")
@pytest.mark.parametrize("case", ["case1", "case2"])
def test_no_generators_past_bound_large(case):
    result = run_case(case, 4)
    assert no_generators_past_bound(result)
    assert result.traces[-1].d >= result.D


@criterion(9, "degree bounds")
def test_no_generators_past_bound_small():
    specs = [TOY] + CROSS_GRID[::2] + STRUCT_SPECS[::10]
    for spec in specs:
        assert no_generators_past_bound(lgb_improved(spec, 3, extra_degrees=3)), str(spec)
