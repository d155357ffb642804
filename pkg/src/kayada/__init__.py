"""Rule-guided generation of tabla kāyadā variations.

Markov-chain candidates seeded from a theme are refined by a memetic
search under a rule-weighted fitness, and results are assessed with
Ritchie's criteria, Pearson correlation and a chi-square test.
"""

__version__ = "0.1.0"

from .notation import (
    DEFAULT_VOCABULARY, BolSymbol, BolVocabulary, Composition,
    derive_khali, load_theme, parse_theme, render, tokenize,
)
from .rules import RuleSet, RuleWeights, extract_ruleset, replacement_phrases
from .markov import TransitionMatrix, build_counts, build_matrix, generate, sample_next, to_cumulative, to_relative
from .fitness import FitnessBreakdown, count_verb_repetitions, fitness, theta
from .memetic import Candidate, EvolutionConfig, GenerationStats, crossover, evolve, local_search, mutate
from .evalstats import (
    ContingencyTable, EvaluationConfig, RatedItem, chi_square_test,
    expected_frequencies, normalize_fitness, pearson, ritchie_criteria,
)
