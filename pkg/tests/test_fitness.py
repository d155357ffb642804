import pytest

from conftest import seq
from kayada import fixtures
from kayada.fitness import (
    count_verb_repetitions, fitness, mid_verb_spans, score_bhari, theta, verb_occurrences,
)
from kayada.notation import Composition
from oracles import brute_theta, exhaustive_prefixes

THEME_ALPHABET = ("Dha", "Ti", "T", "Ga", "Tin", "Na", "Ki")


def test_theta_fig10(figure, ruleset):
    b = theta(figure(10), ruleset)
    assert (b.w1_applied, b.w2_applied, b.w3_applied, b.repetition_count) == (10, 10, 0, 0)
    assert b.theta == 20


def test_theta_theme(theme, ruleset):
    assert theta(theme, ruleset).theta == 20


def test_fitness_zero_for_fig10(figure, theme, ruleset):
    theta_0 = theta(theme, ruleset).theta
    assert fitness(theta(figure(10), ruleset).theta, theta_0) == 0
    assert theta(figure(10), ruleset, theta_0).fitness == 0


def test_theta_nothing_fires(ruleset):
    comp = Composition(seq("GaTi TDha TiT DhaDha TiT DhaGa TiT DhaDha"))
    b = theta(comp, ruleset)
    assert b.theta == 0 and b.repetition_count == 0


def test_half_verb_ending_only(ruleset):
    b = theta(Composition(seq("DhaTi TDha TiT DhaDha TiT DhaGa DhaTi KiNa")), ruleset)
    assert (b.w2_applied, b.w3_applied) == (0, 5)
    assert b.theta == 15


def test_fitness_values():
    assert fitness(20, 20) == 0
    assert fitness(18, 20) == 2
    assert fitness(3, 9) == fitness(9, 3)


def test_repetitions_theme(theme, ruleset):
    assert count_verb_repetitions(theme, ruleset) == 0


def test_repetitions_fig9(figure, ruleset):
    assert count_verb_repetitions(figure(9), ruleset) == 1


def test_repetitions_table5_row1(ruleset):
    bhari = seq(fixtures.TABLE5[0])
    assert count_verb_repetitions(Composition(bhari), ruleset) == 1
    # counted once: the full verb swallows its own half verb
    assert mid_verb_spans(bhari, ruleset) == [(6, 10)]
    assert score_bhari(bhari, ruleset, 20).theta == 18


def test_longest_match_first(ruleset):
    spans = verb_occurrences(seq("TinNa KiNa KiNa"), ruleset)
    assert spans == [(0, 4), (4, 6)]


def test_derived_khali_adds_nothing(ruleset):
    for row in fixtures.TABLE5:
        bhari = seq(row)
        assert count_verb_repetitions(Composition(bhari), ruleset) == len(mid_verb_spans(bhari, ruleset))


def test_removing_mid_verb_never_lowers_theta(ruleset):
    bhari = seq(fixtures.TABLE5[0])
    fixed = bhari[:6] + ("Dha", "Ti", "T", "Dha") + bhari[10:]
    assert score_bhari(fixed, ruleset, 20).theta >= score_bhari(bhari, ruleset, 20).theta


def test_theta_ignores_inner_permutation(ruleset):
    a = seq("DhaTi TDha TiT DhaDha TiT DhaGa TinNa KiNa")
    b = seq("DhaDha TiT TDha DhaTi TiT DhaGa TinNa KiNa")
    assert score_bhari(a, ruleset, 20) == score_bhari(b, ruleset, 20)


SUFFIXES = [
    ("Tin", "Na", "Ki", "Na"),  # full verb
    ("Dha", "Ga", "Ki", "Na"),  # half verb only
    ("Dha", "Ti", "T", "Dha"),  # no verb
]


@pytest.mark.parametrize("suffix", SUFFIXES, ids=["full", "half", "none"])
def test_theta_matches_brute_force(ruleset, suffix):
    seeds = ruleset.seeds
    checked = 0
    for prefix in exhaustive_prefixes(THEME_ALPHABET, 4):
        bhari = prefix + suffix
        expected, reps = brute_theta(bhari, seeds, ruleset.full_verb_bhari, ruleset.full_verb_khali)
        got = theta(Composition(bhari), ruleset)
        assert (got.theta, got.repetition_count) == (expected, reps), bhari
        checked += 1
    assert checked == 7 ** 4
