"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also collected into the terminal summary.
"""

import io
import math
import random
import time
from collections import Counter

import numpy as np
import pytest

import conftest
from kayada import fixtures, markov
from kayada.cli import main
from kayada.evalstats import (
    ContingencyTable, chi_square_test, expected_frequencies, parse_ratings, pearson, ritchie_criteria,
)
from kayada.fitness import theta
from kayada.memetic import EvolutionConfig, Scorer, crossover, evolve, local_search, mutate_segment
from kayada.notation import DEFAULT_VOCABULARY, Composition, derive_khali, tokenize
from oracles import brute_theta, chi2_sf_by_quadrature, exhaustive_prefixes

ALPHABET = ("Dha", "Ti", "T", "Ga", "Tin", "Na", "Ki")


@pytest.fixture
def report(request):
    """Yield a dict; the test fills in ``msg`` and the outcome is recorded."""
    box = {"msg": ""}
    yield box
    rep = getattr(request.node, "rep_call", None)
    status = "FAIL"
    if rep is not None and rep.passed:
        status = "PASS"
    elif rep is not None and rep.skipped:
        status = "SKIP"
    line = f"[{status}] {request.node.name.replace('test_', '').replace('_', ' ')}: {box['msg']}"
    conftest.ACCEPTANCE_LINES.append(line)
    print("\n" + line)


def test_criterion_1_markov_tables(report, theme):
    t0 = time.perf_counter()
    m = markov.build_matrix(theme.bhari, theme.cyclic)
    tables = [markov.format_table(m, k) for k in ("counts", "relative", "cumulative")]
    elapsed = time.perf_counter() - t0
    report["msg"] = f"Tables 1-3 reproduced, Na->Dha = {m.counts[m.index('Na'), m.index('Dha')]}, {elapsed * 1e3:.1f} ms"
    assert tables == [fixtures.TABLE1_COUNTS, fixtures.TABLE2_RELATIVE, fixtures.TABLE3_CUMULATIVE]
    assert m.counts[m.index("Na"), m.index("Dha")] == 1
    assert elapsed < 1.0


def test_criterion_2_table4_replay(report, matrix):
    draws = [u for _, u, _ in fixtures.TABLE4]
    steps = markov.trace(matrix, "Dha", draws)
    seq = ["Dha"] + [out for _, _, out in steps]
    report["msg"] = " ".join(seq)
    assert [(s, u, o) for s, u, o in steps] == fixtures.TABLE4
    assert " ".join(seq) == fixtures.TABLE4_SEQUENCE
    assert markov.generate(matrix, "Dha", 16, draws) == fixtures.TABLE4_SEQUENCE.split()


def test_criterion_3_fitness_worked_example(report, figure, theme, ruleset):
    t_var = theta(figure(10), ruleset).theta
    t_0 = theta(theme, ruleset).theta
    f = theta(figure(10), ruleset, theta_0=t_0).fitness
    report["msg"] = f"theta = {t_var}, theta_0 = {t_0}, fitness = {f}"
    assert (t_var, t_0, f) == (20, 20, 0)
    assert all(isinstance(v, int) for v in (t_var, t_0, f))


def test_criterion_4_khali_derivation(report, ruleset):
    got = derive_khali(tokenize(fixtures.THEME_BHARI), ruleset)
    want = tuple(tokenize(fixtures.THEME_KHALI))
    report["msg"] = " ".join(got)
    assert got == want


def test_criterion_5_chi_square(report):
    table = ContingencyTable(np.array(fixtures.TABLE9_OBSERVED))
    exp = expected_frequencies(table)
    res = chi_square_test(table)
    oracle = chi2_sf_by_quadrature(res.statistic, res.dof, steps=20000)
    report["msg"] = f"X2 = {res.statistic:.5f}, DF = {res.dof}, p = {res.p_value:.6f} (quadrature {oracle:.6f})"
    assert np.allclose(exp[0], 13.4, atol=1e-12) and np.allclose(exp[1], 6.6, atol=1e-12)
    assert abs(res.statistic - 11.39756) < 1e-4
    assert res.dof == 9
    assert abs(res.p_value - 0.2497) < 1e-3
    assert abs(res.p_value - oracle) < 1e-6
    assert res.p_value > 0.05


def test_criterion_6_ritchie_table11(report):
    items = parse_ratings(fixtures.data_path("ratings_theme1.csv").read_text())
    got = ritchie_criteria(items).as_tuple()
    rounded = tuple(v if math.isinf(v) else round(v, 10) for v in got)
    report["msg"] = ", ".join("inf" if math.isinf(v) else f"{v:g}" for v in rounded)
    assert len(items) == 20
    assert rounded == fixtures.TABLE11_THEME1


def test_criterion_7_convergence(report, theme, ruleset):
    hits, slowest = 0, 0.0
    for seed in range(20):
        t0 = time.perf_counter()
        result = evolve(theme, EvolutionConfig(rng_seed=seed), ruleset)
        slowest = max(slowest, time.perf_counter() - t0)
        if any(s.zero_fitness_proportion >= 0.5 for s in result.stats if s.generation <= 10):
            hits += 1
    report["msg"] = f"{hits}/20 seeds reach 0.5 by generation 10, slowest run {slowest:.2f} s"
    assert hits >= 18
    assert slowest < 10.0


def _generate_bytes(seed):
    out = io.StringIO()
    assert main(["generate", str(fixtures.data_path("theme_fig3.txt")), "--rng-seed", str(seed),
                 "--population-size", "20", "--generations", "3"], out=out) == 0
    return out.getvalue().encode()


def test_criterion_8_property_suites(report, theme, ruleset):
    rng = random.Random(8)
    n = 100
    allowed = set(theme.bhari) | set(theme.khali)
    all_bols = DEFAULT_VOCABULARY.names
    scorer = Scorer(ruleset, 20)
    counts = Counter()
    for case in range(n):
        bols = [rng.choice(all_bols) for _ in range(rng.randint(2, 30))]
        m = markov.build_matrix(bols, rng.random() < 0.5)
        for i in range(len(m.order)):
            if m.counts[i].sum():
                assert abs(m.relative[i].sum() - 1.0) < 1e-9
        counts["row normalization"] += 1

        other = [rng.choice(all_bols) for _ in bols]
        p = rng.randint(1, len(bols) - 1)
        c1, c2 = crossover(bols, other, p)
        assert Counter(c1) + Counter(c2) == Counter(bols) + Counter(other)
        counts["crossover multiset"] += 1

        i, j = rng.randrange(len(bols)), rng.randrange(len(bols))
        assert mutate_segment(mutate_segment(bols, i, j, DEFAULT_VOCABULARY), i, j, DEFAULT_VOCABULARY) == tuple(bols)
        counts["mutation involution"] += 1

        bhari = [rng.choice(ALPHABET) for _ in range(16)]
        cand = scorer.candidate(bhari)
        assert local_search(cand, ruleset, np.random.default_rng(case), scorer).fitness <= cand.fitness
        counts["local search monotone"] += 1

        res = evolve(theme, EvolutionConfig(population_size=8, max_generations=2, rng_seed=case), ruleset)
        assert all(set(c.bhari) <= allowed and set(c.khali(ruleset)) <= allowed for c in res.population)
        counts["vocabulary closure"] += 1

        pairs = [(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(rng.randint(3, 20))]
        r = pearson(pairs)
        a, b = rng.uniform(0.1, 5), rng.uniform(-5, 5)
        assert -1 <= r <= 1
        assert abs(pearson([(a * x + b, y) for x, y in pairs]) - r) < 1e-9
        counts["pearson bounds/affine"] += 1

        assert _generate_bytes(case) == _generate_bytes(case)
        counts["determinism"] += 1
    report["msg"] = ", ".join(f"{k} x{v}" for k, v in counts.items())
    assert all(v >= 100 for v in counts.values())


def test_criterion_9_oracle_equivalence(report, ruleset):
    seeds = ruleset.seeds
    suffixes = [
        tokenize("TiT DhaGa TinNa KiNa"),
        tokenize("TiT DhaDha TiT TinNa"),
        tokenize("DhaTi TDha DhaGa TiT"),
    ]
    checked = mismatches = 0
    for suffix in suffixes:
        for prefix in exhaustive_prefixes(ALPHABET, 4):
            bhari = tuple(prefix) + tuple(suffix)
            expected, reps = brute_theta(bhari, seeds, ruleset.full_verb_bhari, ruleset.full_verb_khali)
            got = theta(Composition(bhari), ruleset)
            checked += 1
            mismatches += (got.theta, got.repetition_count) != (expected, reps)
    report["msg"] = f"{checked} compositions checked, {mismatches} mismatches"
    assert checked == 3 * 7 ** 4
    assert mismatches == 0


def test_criterion_10_not_reproducible(report):
    report["msg"] = "Pearson values, expert scores, audio features and cross-system comparison need unpublished data"
    pytest.skip("needs unpublished human ratings and audio recordings; documented, not tested")
