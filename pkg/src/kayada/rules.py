"""Structural rule set of a kāyadā theme."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .notation import DEFAULT_VOCABULARY, BolVocabulary, Composition, mirror_khali


class RuleError(ValueError):
    pass


class ThemeTooShort(RuleError):
    pass


class BadPhraseLength(RuleError):
    pass


MIN_THEME_LENGTH = 8


@dataclass(frozen=True)
class RuleWeights:
    w1: int = 10  # starts with a seed
    w2: int = 10  # ends with the full verb
    w3: int = 5  # ends with the half verb only
    w4_per_repetition: int = -2

    def __post_init__(self):
        if not self.w2 > self.w3 > 0:
            raise RuleError("weights must satisfy w2 > w3 > 0")
        if self.w4_per_repetition >= 0:
            raise RuleError("repetition weight must be negative")


@dataclass(frozen=True)
class RuleSet:
    seeds: frozenset[str]
    full_verb_bhari: tuple[str, ...]
    full_verb_khali: tuple[str, ...]
    half_verb_bhari: tuple[str, ...]
    half_verb_khali: tuple[str, ...]
    highlighted: tuple[str, ...]
    replacement_pool_4: tuple[tuple[str, ...], ...]
    replacement_pool_2: tuple[tuple[str, ...], ...]
    weights: RuleWeights = RuleWeights()
    theme_bols: frozenset[str] = frozenset()
    vocab: BolVocabulary = field(default=DEFAULT_VOCABULARY, compare=False, repr=False)

    @property
    def full_verbs(self) -> tuple[tuple[str, ...], ...]:
        return tuple(dict.fromkeys((self.full_verb_bhari, self.full_verb_khali)))

    @property
    def half_verbs(self) -> tuple[tuple[str, ...], ...]:
        return tuple(dict.fromkeys((self.half_verb_bhari, self.half_verb_khali)))

    @property
    def verbs(self) -> tuple[tuple[str, ...], ...]:
        """Every verb, longest first."""
        return self.full_verbs + self.half_verbs

    def sorted_seeds(self) -> list[str]:
        """Seeds in vocabulary order (stable across runs)."""
        order = {n: i for i, n in enumerate(self.vocab.names)}
        return sorted(self.seeds, key=lambda s: (order.get(s, len(order)), s))


def _kgrams(seq: Sequence[str], k: int) -> list[tuple[str, ...]]:
    return [tuple(seq[i:i + k]) for i in range(len(seq) - k + 1)]


def most_frequent_phrase(bhari: Sequence[str], k: int = 3) -> tuple[str, ...]:
    """Most frequent k-gram; ties go to the earliest first occurrence."""
    grams = _kgrams(bhari, k)
    if not grams:
        return tuple(bhari)
    counts = Counter(grams)
    best = max(counts.values())
    return next(g for g in grams if counts[g] == best)


def replacement_phrases(theme: Composition, k: int, verbs: Iterable[Sequence[str]] = ()) -> set[tuple[str, ...]]:
    """Distinct k-grams of the bharī lying before the trailing full verb.

    Phrases equal to any of ``verbs`` are dropped; when ``verbs`` is empty
    the theme's own verbs (bharī tail and its khālī counterpart) are used.
    """
    if k not in (2, 4):
        raise BadPhraseLength(f"phrase length must be 2 or 4, got {k}")
    bhari = theme.bhari
    if len(bhari) <= k:
        raise BadPhraseLength(f"bharī of {len(bhari)} bōls has no non-verb {k}-gram")
    verbs = {tuple(v) for v in verbs}
    if not verbs:
        for tail in (tuple(bhari[-4:]), tuple(bhari[-2:])):
            verbs.add(tail)
            verbs.add(tuple(DEFAULT_VOCABULARY.complement(b) for b in tail))
    body = bhari[:-4] if len(bhari) > 4 else bhari
    return {g for g in _kgrams(body, k) if g not in verbs}


def extract_ruleset(
    theme: Composition,
    declared_seeds: Iterable[str] | None = None,
    declared_highlighted: Sequence[str] | None = None,
    weights: RuleWeights = RuleWeights(),
    vocab: BolVocabulary = DEFAULT_VOCABULARY,
) -> RuleSet:
    bhari = theme.bhari
    if len(bhari) < MIN_THEME_LENGTH:
        raise ThemeTooShort(f"theme bharī has {len(bhari)} bōls, need at least {MIN_THEME_LENGTH}")
    full_b = tuple(bhari[-4:])
    khali = theme.khali
    if khali is None:
        full_k = tuple(vocab.complement(b) for b in full_b)
        khali = mirror_khali(bhari, (full_b, full_k), vocab=vocab)
    full_k = tuple(khali[-4:])
    half_b, half_k = full_b[-2:], full_k[-2:]

    theme_bols = frozenset(bhari) | frozenset(khali)
    if declared_seeds is not None:
        seeds = frozenset(declared_seeds)
        if not seeds:
            raise RuleError("declared seed set is empty")
        stray = seeds - theme_bols
        if stray:
            raise RuleError(f"seeds not in theme vocabulary: {sorted(stray)}")
    else:
        seeds = frozenset([bhari[0]])

    if declared_highlighted is not None:
        highlighted = tuple(declared_highlighted)
    else:
        highlighted = most_frequent_phrase(bhari, 3)

    verbs = [full_b, full_k, half_b, half_k]
    pool4 = replacement_phrases(Composition(bhari, None, theme.cyclic), 4, verbs)
    pool2 = replacement_phrases(Composition(bhari, None, theme.cyclic), 2, verbs)
    return RuleSet(
        seeds=seeds,
        full_verb_bhari=full_b,
        full_verb_khali=full_k,
        half_verb_bhari=half_b,
        half_verb_khali=half_k,
        highlighted=highlighted,
        # sorted so rng choices are reproducible
        replacement_pool_4=tuple(sorted(pool4)),
        replacement_pool_2=tuple(sorted(pool2)),
        weights=weights,
        theme_bols=theme_bols,
        vocab=vocab,
    )


def complete(theme: Composition, ruleset: RuleSet) -> Composition:
    """Theme with its khālī filled in from the rule set when it was absent."""
    if theme.khali is not None:
        return theme
    khali = mirror_khali(
        theme.bhari,
        (ruleset.full_verb_bhari, ruleset.full_verb_khali),
        vocab=ruleset.vocab,
    )
    return Composition(theme.bhari, khali, theme.cyclic, theme.group_width)
