"""Evaluation statistics: Ritchie's criteria, Pearson r, chi-square independence."""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.special import gammaincc

INFINITY = math.inf


class StatsError(ValueError):
    pass


class DegenerateSample(StatsError):
    pass


class EmptyTable(StatsError):
    pass


class ZeroExpectedCell(StatsError):
    pass


class EmptyItemList(StatsError):
    pass


# --- correlation -----------------------------------------------------------

def pearson(pairs: Iterable[tuple[float, float]]) -> float:
    """Sample correlation coefficient of paired data."""
    data = np.asarray(list(pairs), dtype=float)
    if data.ndim != 2 or data.shape[0] < 2 or data.shape[1] != 2:
        raise DegenerateSample("need at least two (x, y) pairs")
    dx = data[:, 0] - data[:, 0].mean()
    dy = data[:, 1] - data[:, 1].mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0 or syy == 0:
        raise DegenerateSample("x and y must both vary")
    r = float(np.dot(dx, dy)) / (math.sqrt(sxx) * math.sqrt(syy))
    return max(-1.0, min(1.0, r))


# --- contingency tables ----------------------------------------------------

@dataclass
class ContingencyTable:
    observed: np.ndarray
    row_labels: list[str] = field(default_factory=list)
    col_labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.observed = np.asarray(self.observed)
        if self.observed.ndim != 2 or min(self.observed.shape) < 2:
            raise StatsError("contingency table needs at least 2 rows and 2 columns")
        if (self.observed < 0).any():
            raise StatsError("observed counts must be non-negative")
        r, c = self.observed.shape
        if not self.row_labels:
            self.row_labels = [f"r{i + 1}" for i in range(r)]
        if not self.col_labels:
            self.col_labels = [f"c{j + 1}" for j in range(c)]
        if len(self.row_labels) != r or len(self.col_labels) != c:
            raise StatsError("label count does not match table shape")


def expected_frequencies(table: ContingencyTable) -> np.ndarray:
    obs = np.asarray(table.observed, dtype=float)
    total = obs.sum()
    if total == 0:
        raise EmptyTable("table has no observations")
    return np.outer(obs.sum(axis=1), obs.sum(axis=0)) / total


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    dof: int
    p_value: float
    expected: np.ndarray = field(repr=False, compare=False)


def chi_square_sf(x: float, dof: int) -> float:
    """Upper tail of the chi-square distribution, Q(dof/2, x/2)."""
    if x <= 0:
        return 1.0
    return float(gammaincc(dof / 2.0, x / 2.0))


def chi_square_test(table: ContingencyTable) -> ChiSquareResult:
    expected = expected_frequencies(table)
    if (expected == 0).any():
        raise ZeroExpectedCell("an expected cell count is zero")
    obs = np.asarray(table.observed, dtype=float)
    stat = float(((obs - expected) ** 2 / expected).sum())
    r, c = obs.shape
    dof = (r - 1) * (c - 1)
    return ChiSquareResult(stat, dof, chi_square_sf(stat, dof), expected)


# --- Ritchie's criteria ----------------------------------------------------

@dataclass(frozen=True)
class RatedItem:
    id: str
    typ: float
    val: float
    in_inspiring_set: bool = False

    def __post_init__(self):
        if not (0.0 <= self.typ <= 1.0 and 0.0 <= self.val <= 1.0):
            raise StatsError(f"item {self.id!r}: ratings must lie in [0, 1]")


@dataclass(frozen=True)
class EvaluationConfig:
    alpha: float = 0.7  # typicality threshold
    beta: float = 0.7  # quality threshold
    inspiring_set_size: int = 1

    def __post_init__(self):
        if not (0 < self.alpha < 1 and 0 < self.beta < 1):
            raise StatsError("thresholds must lie strictly between 0 and 1")
        if self.inspiring_set_size < 1:
            raise StatsError("inspiring set size must be positive")


CRITERIA = {
    1: "average typicality",
    2: "typical results / all results",
    3: "average quality",
    4: "good results / all results",
    5: "good typical results / good results",
    6: "good atypical results / all results",
    7: "good atypical results / atypical results",
    8: "good atypical results / good typical results",
    9: "results in the inspiring set / inspiring set",
    10: "all results / results in the inspiring set",
    11: "average typicality of new results",
    12: "average quality of new results",
    13: "typical new results / new results",
    14: "good new results / new results",
}


@dataclass
class RitchieReport:
    values: dict[int, float]
    notes: dict[int, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    source: str = "ratings"

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(self.values[k] for k in range(1, 15))

    def format(self) -> str:
        lines = [f"# source: {self.source}"]
        lines += [f"# warning: {w}" for w in self.warnings]
        for k in range(1, 15):
            if k in self.notes:
                lines.append(f"# c{k} {self.notes[k]}")
            lines.append(f"c{k}: {format_value(self.values[k])}")
        return "\n".join(lines)


def format_value(v: float) -> str:
    if math.isinf(v):
        return "inf"
    return f"{v:.6g}"


def _ratio(num: int, den: int, zero_over_zero: float) -> tuple[float, str | None]:
    if den:
        return num / den, None
    if num:
        return INFINITY, f"undefined ({num}/0)"
    return zero_over_zero, "undefined (0/0)"


def ritchie_criteria(items: Sequence[RatedItem], config: EvaluationConfig = EvaluationConfig()) -> RitchieReport:
    if not items:
        raise EmptyItemList("no rated items")
    R = list(range(len(items)))
    T = {i for i in R if items[i].typ > config.alpha}
    V = {i for i in R if items[i].val > config.beta}
    I = {i for i in R if items[i].in_inspiring_set}
    new = [i for i in R if i not in I]
    n = len(R)

    def mean(attr, idx):
        return math.fsum(getattr(items[i], attr) for i in idx) / len(idx)

    values: dict[int, float] = {}
    notes: dict[int, str] = {}
    warn: list[str] = []

    def put(k, pair):
        values[k], note = pair
        if note:
            notes[k] = note

    values[1] = mean("typ", R)
    values[2] = len(T) / n
    values[3] = mean("val", R)
    values[4] = len(V) / n
    put(5, _ratio(len(T & V), len(V), 0.0))
    values[6] = len(V - T) / n
    put(7, _ratio(len(V - T), n - len(T), INFINITY))
    put(8, _ratio(len(V - T), len(V & T), 0.0))
    values[9] = len(I) / config.inspiring_set_size
    put(10, _ratio(n, len(I), INFINITY))
    if new:
        values[11] = mean("typ", new)
        values[12] = mean("val", new)
        values[13] = len(T.intersection(new)) / len(new)
        values[14] = len(V.intersection(new)) / len(new)
    else:
        for k in (11, 12, 13, 14):
            values[k] = 0.0
            notes[k] = "undefined (no new results)"
        warn.append("every result is in the inspiring set; criteria 11-14 reported as 0")
        warnings.warn(warn[-1], RuntimeWarning, stacklevel=2)
    return RitchieReport(values, notes, warn)


# --- fitness rescaling -----------------------------------------------------

def normalize_fitness(fitnesses: Sequence[float]) -> list[float]:
    """Map minimization fitness onto a 1..10 scale, best (0) scoring 10."""
    if not fitnesses:
        raise StatsError("no fitness values")
    f_max = max(fitnesses)
    if f_max == 0:
        return [10.0] * len(fitnesses)
    return [1.0 + 9.0 * (1.0 - f / f_max) for f in fitnesses]


# --- file formats ----------------------------------------------------------

def _truthy(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes"):
        return True
    if t in ("0", "false", "no", ""):
        return False
    raise ValueError(f"expected 0/1, got {text!r}")


def parse_ratings(text: str) -> list[RatedItem]:
    """Parse ``id,typicality,quality,inspiring`` CSV."""
    reader = csv.reader(io.StringIO(text))
    rows = [(n, r) for n, r in enumerate(reader, start=1) if r and not r[0].startswith("#")]
    if not rows:
        raise EmptyItemList("ratings file is empty")
    header = [h.strip().lower() for h in rows[0][1]]
    if header != ["id", "typicality", "quality", "inspiring"]:
        raise StatsError(f"line {rows[0][0]}: expected header id,typicality,quality,inspiring")
    items = []
    for lineno, row in rows[1:]:
        if len(row) != 4:
            raise StatsError(f"line {lineno}: expected 4 fields, got {len(row)}")
        try:
            items.append(RatedItem(row[0].strip(), float(row[1]), float(row[2]), _truthy(row[3])))
        except ValueError as exc:
            raise StatsError(f"line {lineno}: {exc}") from None
    if not items:
        raise EmptyItemList("ratings file has no items")
    return items


def parse_contingency(text: str) -> ContingencyTable:
    """First row holds column labels, first column row labels.

    A trailing ``Total`` row or column is ignored.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if len(rows) < 3:
        raise StatsError("contingency file needs a header and at least 2 rows")
    cols = [c.strip() for c in rows[0][1:]]
    keep = [j for j, c in enumerate(cols) if c.lower() != "total"]
    labels, data = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if row[0].strip().lower() == "total":
            continue
        if len(row) - 1 != len(cols):
            raise StatsError(f"line {lineno}: expected {len(cols)} counts")
        try:
            vals = [float(row[1:][j]) for j in keep]
        except ValueError as exc:
            raise StatsError(f"line {lineno}: {exc}") from None
        labels.append(row[0].strip())
        data.append(vals)
    return ContingencyTable(np.array(data), labels, [cols[j] for j in keep])


def parse_pairs(text: str) -> list[tuple[float, float]]:
    """Two-column CSV of (x, y); a non-numeric first row is taken as a header."""
    pairs = []
    header_seen = False
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or row[0].startswith("#"):
            continue
        if len(row) != 2:
            raise StatsError(f"line {lineno}: expected 2 fields")
        try:
            pairs.append((float(row[0]), float(row[1])))
        except ValueError:
            if pairs or header_seen:
                raise StatsError(f"line {lineno}: non-numeric value") from None
            header_seen = True
    return pairs
