"""Line-oriented corpus files of evolved variations, and the auto-rater."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, TextIO

from . import __version__
from .evalstats import RatedItem, normalize_fitness
from .memetic import EvolutionResult
from .notation import render_sequence, tokenize

FIELDS = (
    "id", "bhari", "khali", "theta", "fitness", "score",
    "generation_born", "w1", "w2", "w3", "repetitions",
)


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    bhari: str
    khali: str
    theta: int
    fitness: int
    score: float
    generation_born: int
    w1: int
    w2: int
    w3: int
    repetitions: int


def header_lines(command: str, settings: dict) -> list[str]:
    lines = [f"# tool: kayada {__version__}", f"# command: {command}"]
    lines += [f"# {k}: {v}" for k, v in settings.items()]
    return lines


def records_from_result(result: EvolutionResult) -> list[CorpusRecord]:
    ranked = result.ranked()
    scores = normalize_fitness([c.fitness for c in ranked])
    out = []
    for k, (cand, score) in enumerate(zip(ranked, scores), start=1):
        b = cand.breakdown
        out.append(CorpusRecord(
            id=f"v{k:03d}",
            bhari=render_sequence(cand.bhari),
            khali=render_sequence(cand.khali(result.ruleset)),
            theta=b.theta,
            fitness=b.fitness,
            score=round(score, 6),
            generation_born=cand.generation_born,
            w1=b.w1_applied,
            w2=b.w2_applied,
            w3=b.w3_applied,
            repetitions=b.repetition_count,
        ))
    return out


def result_settings(result: EvolutionResult, theme_path: str | None = None) -> dict:
    settings = {"rng_seed": result.config.rng_seed}
    settings.update({k: v for k, v in asdict(result.config).items() if k != "rng_seed"})
    settings["theme_path"] = theme_path or "-"
    settings["theme_bhari"] = render_sequence(result.theme.bhari)
    settings["theme_khali"] = render_sequence(result.theme.khali)
    settings["cyclic"] = result.theme.cyclic
    settings["seeds"] = " ".join(result.ruleset.sorted_seeds())
    settings["theta_0"] = result.theta_0
    settings["generations_run"] = result.stats[-1].generation
    return settings


def write_corpus(stream: TextIO, records: Iterable[CorpusRecord], header: list[str]) -> None:
    for line in header:
        stream.write(line + "\n")
    stream.write("\t".join(FIELDS) + "\n")
    for rec in records:
        row = asdict(rec)
        stream.write("\t".join(str(row[f]) for f in FIELDS) + "\n")


def read_corpus(text: str) -> tuple[dict[str, str], list[CorpusRecord]]:
    """Parse a corpus file into (header settings, records)."""
    settings: dict[str, str] = {}
    records = []
    columns = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            settings[key.strip()] = value.strip()
            continue
        cells = line.split("\t")
        if columns is None:
            columns = cells
            if tuple(columns) != FIELDS:
                raise ValueError(f"line {lineno}: unexpected corpus columns")
            continue
        if len(cells) != len(FIELDS):
            raise ValueError(f"line {lineno}: expected {len(FIELDS)} fields, got {len(cells)}")
        row = dict(zip(FIELDS, cells))
        try:
            records.append(CorpusRecord(
                id=row["id"], bhari=row["bhari"], khali=row["khali"],
                theta=int(row["theta"]), fitness=int(row["fitness"]),
                score=float(row["score"]), generation_born=int(row["generation_born"]),
                w1=int(row["w1"]), w2=int(row["w2"]), w3=int(row["w3"]),
                repetitions=int(row["repetitions"]),
            ))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return settings, records


def auto_rate(records: Iterable[CorpusRecord], theme_bhari: str | None = None) -> list[RatedItem]:
    """Rate corpus records without experts.

    Typicality is the share of the four structural checks passed (seed
    start, full-verb ending, half-verb ending, no repeated verb); quality is
    the normalized score divided by 10.  A record whose bharī equals the
    theme's counts as part of the inspiring set.  Repeated bharīs are rated
    once, since results form a set.
    """
    theme = tuple(tokenize(theme_bhari)) if theme_bhari else None
    items = []
    seen = set()
    for rec in records:
        bols = tuple(tokenize(rec.bhari))
        if bols in seen:
            continue
        seen.add(bols)
        checks = (rec.w1 > 0, rec.w2 > 0, rec.w2 > 0 or rec.w3 > 0, rec.repetitions == 0)
        items.append(RatedItem(
            rec.id,
            typ=sum(checks) / len(checks),
            val=min(1.0, max(0.0, rec.score / 10.0)),
            in_inspiring_set=theme is not None and bols == theme,
        ))
    return items


def write_stats(stream: TextIO, stats, header: list[str]) -> None:
    for line in header:
        stream.write(line + "\n")
    stream.write("generation\tzero_fitness_proportion\tbest_fitness\tmean_fitness\n")
    for s in stats:
        stream.write(f"{s.generation}\t{s.zero_fitness_proportion:.6f}\t{s.best_fitness}\t{s.mean_fitness:.6f}\n")
