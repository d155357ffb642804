"""First-order transition matrices over bōls and inverse-CDF sampling."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class MarkovError(ValueError):
    pass


class DeadEnd(MarkovError):
    pass


class BadRandom(MarkovError):
    pass


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    order: tuple[str, ...]
    counts: np.ndarray
    relative: np.ndarray | None = None
    cumulative: np.ndarray | None = None

    def index(self, bol: str) -> int:
        try:
            return self.order.index(bol)
        except ValueError:
            raise MarkovError(f"{bol!r} is not a state of this matrix") from None

    def support(self, bol: str) -> list[str]:
        row = self.counts[self.index(bol)]
        return [self.order[j] for j in np.flatnonzero(row)]

    def has_transition(self, a: str, b: str) -> bool:
        if a not in self.order or b not in self.order:
            return False
        return bool(self.counts[self.index(a), self.index(b)] > 0)


def build_counts(bhari: Sequence[str], cyclic: bool = True) -> TransitionMatrix:
    """Count adjacent pairs; for cyclic themes the wrap-around (last, first) pair counts too."""
    if not bhari:
        raise MarkovError("cannot build a matrix from an empty sequence")
    order = tuple(dict.fromkeys(bhari))
    pos = {b: i for i, b in enumerate(order)}
    counts = np.zeros((len(order), len(order)), dtype=np.int64)
    for a, b in zip(bhari, bhari[1:]):
        counts[pos[a], pos[b]] += 1
    if cyclic:
        counts[pos[bhari[-1]], pos[bhari[0]]] += 1
    return TransitionMatrix(order, counts)


def to_relative(matrix: TransitionMatrix) -> TransitionMatrix:
    counts = matrix.counts
    totals = counts.sum(axis=1, keepdims=True)
    relative = np.divide(counts, totals, out=np.zeros(counts.shape), where=totals > 0)
    return TransitionMatrix(matrix.order, counts, relative, matrix.cumulative)


def to_cumulative(matrix: TransitionMatrix) -> TransitionMatrix:
    """Running row sums, written only where the relative entry is non-zero."""
    if matrix.relative is None:
        matrix = to_relative(matrix)
    counts = matrix.counts
    totals = counts.sum(axis=1, keepdims=True)
    # sums of integer counts divided once, so the last entry is exactly 1.0
    running = np.divide(np.cumsum(counts, axis=1), totals, out=np.zeros(counts.shape), where=totals > 0)
    cumulative = np.where(counts > 0, running, 0.0)
    return TransitionMatrix(matrix.order, counts, matrix.relative, cumulative)


def build_matrix(bhari: Sequence[str], cyclic: bool = True) -> TransitionMatrix:
    return to_cumulative(to_relative(build_counts(bhari, cyclic)))


def sample_next(matrix: TransitionMatrix, seed: str, u: float) -> str:
    """First successor of ``seed`` whose cumulative weight reaches ``u``."""
    if not 0.0 < u <= 1.0:
        raise BadRandom(f"random draw {u!r} outside (0, 1]")
    if matrix.cumulative is None:
        matrix = to_cumulative(matrix)
    i = matrix.index(seed)
    row = matrix.cumulative[i]
    nz = np.flatnonzero(matrix.counts[i])
    if nz.size == 0:
        raise DeadEnd(f"{seed!r} has no outgoing transition")
    for j in nz:
        if row[j] >= u:
            return matrix.order[j]
    return matrix.order[nz[-1]]


def _draws(rng) -> Iterator[float]:
    if hasattr(rng, "random"):
        while True:
            # Generator.random() is in [0, 1); flip it onto (0, 1]
            yield 1.0 - float(rng.random())
    else:
        yield from rng


def generate(matrix: TransitionMatrix, seed: str, length: int, rng) -> list[str]:
    """Walk the chain from ``seed`` for ``length`` bōls.

    ``rng`` is a numpy ``Generator`` or any iterable of draws in (0, 1]
    (the latter replays a fixed stream).
    """
    if length < 1:
        raise MarkovError("length must be at least 1")
    matrix.index(seed)
    out = [seed]
    draws = _draws(rng)
    while len(out) < length:
        try:
            u = next(draws)
        except StopIteration:
            raise MarkovError("random stream exhausted") from None
        out.append(sample_next(matrix, out[-1], u))
    return out


def trace(matrix: TransitionMatrix, seed: str, draws: Iterable[float]) -> list[tuple[str, float, str]]:
    """(seed, draw, output) rows of a replayed walk."""
    rows = []
    current = seed
    for u in draws:
        nxt = sample_next(matrix, current, u)
        rows.append((current, u, nxt))
        current = nxt
    return rows


def _fmt_cell(value: float, singleton: bool) -> str:
    if value == 0:
        return "0"
    if singleton:
        return f"{value:g}"
    text = f"{value:.4f}".rstrip("0")
    return text + "0" if text.endswith(".") else text


def format_table(matrix: TransitionMatrix, kind: str = "counts", sep: str = "\t") -> str:
    """Tab-delimited table with bōl row and column headers.

    Fractions print with up to four decimals; rows with a single successor
    print their lone entry as ``1``.
    """
    lines = [sep.join([""] + list(matrix.order))]
    if kind == "counts":
        data = matrix.counts
    elif kind == "relative":
        data = matrix.relative if matrix.relative is not None else to_relative(matrix).relative
    elif kind == "cumulative":
        data = matrix.cumulative if matrix.cumulative is not None else to_cumulative(matrix).cumulative
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    for i, bol in enumerate(matrix.order):
        singleton = np.count_nonzero(matrix.counts[i]) == 1
        if kind == "counts":
            cells = [str(int(v)) for v in data[i]]
        else:
            cells = [_fmt_cell(float(v), singleton) for v in data[i]]
        lines.append(sep.join([bol] + cells))
    return "\n".join(lines)
