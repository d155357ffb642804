"""Rule-weighted scoring of compositions against a theme's rule set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .notation import Composition, derive_khali
from .rules import RuleSet


@dataclass(frozen=True)
class FitnessBreakdown:
    w1_applied: int
    w2_applied: int
    w3_applied: int
    repetition_count: int
    theta: int
    fitness: int = 0

    def with_fitness(self, theta_0: int) -> "FitnessBreakdown":
        return FitnessBreakdown(
            self.w1_applied, self.w2_applied, self.w3_applied,
            self.repetition_count, self.theta, fitness(self.theta, theta_0),
        )


def _endswith(seq: Sequence[str], tail: Sequence[str]) -> bool:
    return len(tail) > 0 and len(seq) >= len(tail) and tuple(seq[-len(tail):]) == tuple(tail)


def trailing_verb_length(seq: Sequence[str], ruleset: RuleSet) -> int:
    """Length of the verb closing ``seq`` (0 when it ends in none)."""
    for verb in ruleset.verbs:
        if _endswith(seq, verb):
            return len(verb)
    return 0


def verb_occurrences(seq: Sequence[str], ruleset: RuleSet, stop: int | None = None) -> list[tuple[int, int]]:
    """Non-overlapping verb spans in ``seq[:stop]``, scanning left to right, longest verb first."""
    seq = tuple(seq)
    stop = len(seq) if stop is None else stop
    verbs = ruleset.verbs
    spans = []
    i = 0
    while i < stop:
        for verb in verbs:
            k = len(verb)
            if i + k <= stop and seq[i:i + k] == verb:
                spans.append((i, i + k))
                i += k
                break
        else:
            i += 1
    return spans


def mid_verb_spans(bhari: Sequence[str], ruleset: RuleSet) -> list[tuple[int, int]]:
    """Verb spans of the bharī outside its closing verb slot."""
    return verb_occurrences(bhari, ruleset, len(bhari) - trailing_verb_length(bhari, ruleset))


def count_verb_repetitions(composition: Composition, ruleset: RuleSet) -> int:
    """Verb occurrences away from the closing slot of each half.

    A khālī occurrence overlapping a bharī occurrence is the mirror of that
    same site and is not counted again, so a derived khālī never adds to
    the count of its bharī.
    """
    bhari = composition.bhari
    khali = composition.khali
    if khali is None:
        khali = derive_khali(bhari, ruleset, strict=False)
    b_spans = mid_verb_spans(bhari, ruleset)
    k_spans = mid_verb_spans(khali, ruleset)
    extra = sum(
        1 for (ks, ke) in k_spans
        if not any(ks < be and bs < ke for (bs, be) in b_spans)
    )
    return len(b_spans) + extra


def theta(composition: Composition, ruleset: RuleSet, theta_0: int | None = None) -> FitnessBreakdown:
    w = ruleset.weights
    bhari = composition.bhari
    w1 = w.w1 if bhari and bhari[0] in ruleset.seeds else 0
    w2 = w.w2 if _endswith(bhari, ruleset.full_verb_bhari) else 0
    w3 = w.w3 if not w2 and _endswith(bhari, ruleset.half_verb_bhari) else 0
    reps = count_verb_repetitions(composition, ruleset)
    total = w1 + w2 + w3 + reps * w.w4_per_repetition
    out = FitnessBreakdown(w1, w2, w3, reps, total)
    if theta_0 is not None:
        out = out.with_fitness(theta_0)
    return out


def fitness(theta_i: int, theta_0: int) -> int:
    """Distance to the theme's score; lower is better."""
    return abs(theta_0 - theta_i)


def score_bhari(bhari: Sequence[str], ruleset: RuleSet, theta_0: int) -> FitnessBreakdown:
    """Breakdown of a bare chromosome, khālī derived leniently."""
    bhari = tuple(bhari)
    khali = derive_khali(bhari, ruleset, strict=False)
    return theta(Composition(bhari, khali), ruleset, theta_0)
