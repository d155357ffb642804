"""Memetic search over bharī chromosomes.

Each generation runs local search on every member, single-point crossover
over a mating pool, an occasional multipoint complement mutation that
replaces the worst member, and truncation back to the population size.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import markov
from .fitness import FitnessBreakdown, mid_verb_spans, score_bhari, theta, trailing_verb_length
from .notation import BolVocabulary, Composition, derive_khali
from .rules import RuleSet, complete, extract_ruleset


class ConfigError(ValueError):
    pass


class BadCrossoverPoint(ValueError):
    pass


@dataclass(frozen=True)
class EvolutionConfig:
    population_size: int = 150
    length: int | None = None  # None: theme bharī length
    max_generations: int = 20
    mutation_rate: float = 0.2
    crossover_rate: float = 0.9
    goal_proportion: float = 0.65
    rng_seed: int = 0

    def __post_init__(self):
        if self.population_size < 2:
            raise ConfigError("population_size must be at least 2")
        if self.length is not None and (self.length < 8 or self.length % 2):
            raise ConfigError("length must be even and at least 8")
        if self.max_generations < 1:
            raise ConfigError("max_generations must be positive")
        for name in ("mutation_rate", "crossover_rate", "goal_proportion"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {value}")

    def resolved(self, theme_length: int) -> "EvolutionConfig":
        if self.length is not None:
            return self
        d = asdict(self)
        d["length"] = theme_length
        return EvolutionConfig(**d)


@dataclass(frozen=True)
class Candidate:
    bhari: tuple[str, ...]
    breakdown: FitnessBreakdown
    generation_born: int = 0

    @property
    def fitness(self) -> int:
        return self.breakdown.fitness

    def khali(self, ruleset: RuleSet) -> tuple[str, ...]:
        return derive_khali(self.bhari, ruleset, strict=False)


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    zero_fitness_proportion: float
    best_fitness: int
    mean_fitness: float


class Scorer:
    """Scores chromosomes against one rule set; memoized by bharī."""

    def __init__(self, ruleset: RuleSet, theta_0: int):
        self.ruleset = ruleset
        self.theta_0 = theta_0
        self._cache: dict[tuple[str, ...], FitnessBreakdown] = {}

    def __call__(self, bhari: Sequence[str]) -> FitnessBreakdown:
        key = tuple(bhari)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = score_bhari(key, self.ruleset, self.theta_0)
        return hit

    def candidate(self, bhari: Sequence[str], generation_born: int = 0) -> Candidate:
        bhari = tuple(bhari)
        return Candidate(bhari, self(bhari), generation_born)


def init_population(matrix, ruleset: RuleSet, config: EvolutionConfig, rng, scorer: Scorer) -> list[Candidate]:
    if config.length is None:
        raise ConfigError("resolve config.length before seeding the population")
    seeds = [s for s in ruleset.sorted_seeds() if s in matrix.order]
    if not seeds:
        raise ConfigError("no seed bōl is a state of the transition matrix")
    population = []
    for _ in range(config.population_size):
        seed = seeds[int(rng.integers(len(seeds)))]
        population.append(scorer.candidate(markov.generate(matrix, seed, config.length, rng)))
    return population


def _runs_of_four(bhari: Sequence[str], stop: int) -> list[tuple[int, int]]:
    spans = []
    i = 0
    while i + 4 <= stop:
        if len(set(bhari[i:i + 4])) == 1:
            spans.append((i, i + 4))
            i += 4
        else:
            i += 1
    return spans


def violation_sites(bhari: Sequence[str], ruleset: RuleSet) -> list[tuple[str, int, int]]:
    """(kind, start, end) sites in repair order: mid full verbs, mid half verbs, 4-runs."""
    spans = mid_verb_spans(bhari, ruleset)
    stop = len(bhari) - trailing_verb_length(bhari, ruleset)
    sites = [("full", s, e) for s, e in spans if e - s == 4]
    sites += [("half", s, e) for s, e in spans if e - s == 2]
    sites += [("run", s, e) for s, e in _runs_of_four(bhari, stop)]
    return sites


def _still_violates(bhari, kind, start, end, ruleset) -> bool:
    piece = tuple(bhari[start:end])
    if kind == "run":
        return len(set(piece)) == 1
    return (start, end) in mid_verb_spans(bhari, ruleset)


def local_search(candidate: Candidate, ruleset: RuleSet, rng, scorer: Scorer) -> Candidate:
    """Patch verb repetitions and four-bōl runs with theme phrases.

    A patch is kept only when fitness does not get worse, so the result is
    never worse than the input.
    """
    current = candidate
    for kind in ("full", "half", "run"):
        pool = ruleset.replacement_pool_2 if kind == "half" else ruleset.replacement_pool_4
        if not pool:
            continue
        sites = [s for s in violation_sites(current.bhari, ruleset) if s[0] == kind]
        for _, start, end in sites:
            if not _still_violates(current.bhari, kind, start, end, ruleset):
                continue
            phrase = pool[int(rng.integers(len(pool)))]
            trial = current.bhari[:start] + phrase + current.bhari[end:]
            breakdown = scorer(trial)
            if breakdown.fitness <= current.fitness:
                current = Candidate(trial, breakdown, current.generation_born)
    return current


def crossover(parent_a: Sequence[str], parent_b: Sequence[str], point: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Single-point crossover: heads up to ``point`` kept, tails swapped."""
    a, b = tuple(parent_a), tuple(parent_b)
    if len(a) != len(b):
        raise ValueError("parents must have equal length")
    if not 1 <= point <= len(a) - 1:
        raise BadCrossoverPoint(f"crossover point {point} outside [1, {len(a) - 1}]")
    return a[:point] + b[point:], b[:point] + a[point:]


def mutate_segment(bhari: Sequence[str], i: int, j: int, vocab: BolVocabulary) -> tuple[str, ...]:
    """Complement every bōl between positions ``i`` and ``j`` inclusive."""
    lo, hi = min(i, j), max(i, j)
    out = list(bhari)
    for p in range(lo, hi + 1):
        out[p] = vocab.complement(out[p])
    return tuple(out)


def mutate(bhari: Sequence[str], rng, vocab: BolVocabulary) -> tuple[str, ...]:
    if len(bhari) < 2:
        raise ValueError("mutation needs at least two bōls")
    i, j = rng.choice(len(bhari), size=2, replace=False)
    return mutate_segment(bhari, int(i), int(j), vocab)


def _rank(population: list[Candidate]) -> list[Candidate]:
    # stable sort, so list position breaks the remaining ties
    return sorted(population, key=lambda c: (c.fitness, c.generation_born))


def generation_stats(generation: int, population: Sequence[Candidate]) -> GenerationStats:
    fits = [c.fitness for c in population]
    return GenerationStats(
        generation=generation,
        zero_fitness_proportion=sum(f == 0 for f in fits) / len(fits),
        best_fitness=min(fits),
        mean_fitness=float(np.mean(fits)),
    )


@dataclass
class EvolutionResult:
    population: list[Candidate]
    stats: list[GenerationStats]
    ruleset: RuleSet
    theme: Composition
    theta_0: int
    config: EvolutionConfig
    matrix: markov.TransitionMatrix = field(repr=False, default=None)

    def ranked(self) -> list[Candidate]:
        return _rank(self.population)


def evolve(theme: Composition, config: EvolutionConfig = EvolutionConfig(), ruleset: RuleSet | None = None) -> EvolutionResult:
    if ruleset is None:
        ruleset = extract_ruleset(theme)
    theme = complete(theme, ruleset)
    config = config.resolved(len(theme.bhari))
    theta_0 = theta(theme, ruleset).theta
    scorer = Scorer(ruleset, theta_0)
    rng = np.random.default_rng(config.rng_seed)
    matrix = markov.build_matrix(theme.bhari, theme.cyclic)

    n = config.population_size
    population = init_population(matrix, ruleset, config, rng, scorer)
    stats = [generation_stats(0, population)]
    generation = 0
    while stats[-1].zero_fitness_proportion < config.goal_proportion and generation < config.max_generations:
        generation += 1
        population = [local_search(c, ruleset, rng, scorer) for c in population]

        pool = _rank(population)[: math.ceil(n / 2)]
        order = rng.permutation(len(pool))
        for k in range(0, len(order) - 1, 2):
            if rng.random() < config.crossover_rate:
                a, b = pool[order[k]], pool[order[k + 1]]
                point = int(rng.integers(1, config.length))
                for child in crossover(a.bhari, b.bhari, point):
                    population.append(scorer.candidate(child, generation))

        if rng.random() < config.mutation_rate:
            victim = population[int(rng.integers(len(population)))]
            child = scorer.candidate(mutate(victim.bhari, rng, ruleset.vocab), generation)
            ranked = _rank(population)
            worst = ranked[-1]
            population[next(i for i, c in enumerate(population) if c is worst)] = child

        population = _rank(population)[:n]
        stats.append(generation_stats(generation, population))
    return EvolutionResult(population, stats, ruleset, theme, theta_0, config, matrix)
