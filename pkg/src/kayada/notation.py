"""Textual bōl notation: tokenizing, rendering and bharī → khālī completion.

Compositions are carried as tuples of canonical bōl names (plain strings).
Per-symbol metadata (open/closed stroke, complementary bōl) lives in a
:class:`BolVocabulary`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence


class NotationError(ValueError):
    pass


class UnknownSyllable(NotationError):
    def __init__(self, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"no bōl matches at offset {position}: {text[position:position + 8]!r}")


class MissingVerb(NotationError):
    pass


class ThemeFileError(NotationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class BolSymbol:
    name: str
    is_open: bool = False
    complement: str | None = None


class BolVocabulary:
    """Ordered bōl inventory with surface-form aliases.

    Tokenization is greedy longest-match over the canonical names and the
    alias surface forms.
    """

    def __init__(self, symbols: Iterable[BolSymbol], aliases: dict[str, str] | None = None):
        self.symbols = tuple(symbols)
        self._by_name = {}
        for sym in self.symbols:
            if not sym.name:
                raise ValueError("bōl name must be non-empty")
            if sym.name in self._by_name:
                raise ValueError(f"duplicate bōl {sym.name!r}")
            self._by_name[sym.name] = sym
        for sym in self.symbols:
            if sym.complement is not None:
                other = self._by_name.get(sym.complement)
                if other is None or other.complement != sym.name:
                    raise ValueError(f"complement of {sym.name!r} is not symmetric")
        self.aliases = dict(aliases or {})
        for surface, canonical in self.aliases.items():
            if canonical not in self._by_name:
                raise ValueError(f"alias {surface!r} points at unknown bōl {canonical!r}")
        forms = {s.name: s.name for s in self.symbols}
        forms.update(self.aliases)
        # longest surface forms first so the first hit is the longest match
        self._forms = sorted(forms.items(), key=lambda kv: -len(kv[0]))

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, name: str) -> BolSymbol:
        return self._by_name[name]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.symbols)

    def normalize(self, surface: str) -> str:
        return self.aliases.get(surface, surface)

    def complement(self, name: str) -> str:
        """Open/closed counterpart of ``name``; bōls without a pair map to themselves."""
        sym = self._by_name.get(name)
        if sym is None or sym.complement is None:
            return name
        return sym.complement

    def restrict(self, names: Iterable[str]) -> "BolVocabulary":
        """Sub-vocabulary holding only ``names``, keeping their complements."""
        keep = set(names)
        for n in list(keep):
            keep.add(self.complement(n))
        syms = [s for s in self.symbols if s.name in keep]
        aliases = {k: v for k, v in self.aliases.items() if v in keep}
        return BolVocabulary(syms, aliases)

    def tokenize_group(self, group: str, offset: int = 0) -> list[str]:
        out = []
        i = 0
        while i < len(group):
            for surface, canonical in self._forms:
                if group.startswith(surface, i):
                    out.append(canonical)
                    i += len(surface)
                    break
            else:
                raise UnknownSyllable(offset + i, group)
        return out


DEFAULT_VOCABULARY = BolVocabulary(
    [
        BolSymbol("Dha", is_open=True, complement="Ta"),
        BolSymbol("Ti"),
        BolSymbol("T"),
        BolSymbol("Ga", is_open=True),
        BolSymbol("Tin", complement="Dhi"),
        BolSymbol("Na"),
        BolSymbol("Ki", complement="Gi"),
        BolSymbol("Ta", complement="Dha"),
        BolSymbol("Dhi", is_open=True, complement="Tin"),
        BolSymbol("Gi", is_open=True, complement="Ki"),
    ],
    aliases={"Dhin": "Dhi"},
)


def tokenize(text: str, vocab: BolVocabulary = DEFAULT_VOCABULARY) -> list[str]:
    """Decode grouped bōl text into a flat list of canonical bōl names.

    >>> tokenize("DhaTi TDha DhinNa")
    ['Dha', 'Ti', 'T', 'Dha', 'Dhi', 'Na']
    """
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace():
            j += 1
        try:
            out.extend(vocab.tokenize_group(text[i:j]))
        except UnknownSyllable as exc:
            raise UnknownSyllable(i + exc.position, text) from None
        i = j
    return out


@dataclass(frozen=True)
class Composition:
    bhari: tuple[str, ...]
    khali: tuple[str, ...] | None = None
    cyclic: bool = True
    group_width: int = 2

    def __post_init__(self):
        object.__setattr__(self, "bhari", tuple(self.bhari))
        if self.khali is not None:
            object.__setattr__(self, "khali", tuple(self.khali))
            if len(self.khali) != len(self.bhari):
                raise NotationError(
                    f"khālī has {len(self.khali)} bōls, bharī has {len(self.bhari)}"
                )
        if self.group_width < 1:
            raise NotationError("group_width must be positive")

    def __len__(self) -> int:
        return len(self.bhari)

    def bols(self) -> set[str]:
        """Every bōl used in either half."""
        out = set(self.bhari)
        if self.khali is not None:
            out.update(self.khali)
        return out


def render_sequence(bols: Sequence[str], group_width: int = 2) -> str:
    return " ".join(
        "".join(bols[i:i + group_width]) for i in range(0, len(bols), group_width)
    )


def render(composition: Composition) -> str:
    """Grouped text layout, one line per half (bharī first)."""
    if not composition.bhari:
        raise NotationError("cannot render an empty composition")
    lines = [render_sequence(composition.bhari, composition.group_width)]
    if composition.khali is not None:
        lines.append(render_sequence(composition.khali, composition.group_width))
    return "\n".join(lines)


def mirror_khali(
    bhari: Sequence[str],
    full_verbs: tuple[Sequence[str], Sequence[str]],
    half_verbs: tuple[Sequence[str], Sequence[str]] | None = None,
    vocab: BolVocabulary = DEFAULT_VOCABULARY,
    strict: bool = True,
) -> tuple[str, ...]:
    """Build the khālī half of ``bhari``.

    The first half is complement-mapped, the second half kept as is, and
    the trailing bharī verb swapped for the khālī verb.  ``full_verbs`` and
    ``half_verbs`` are ``(bhari_verb, khali_verb)`` pairs.  With
    ``strict=False`` a bharī that does not end in the full verb is accepted:
    a trailing half verb is still swapped, otherwise the tail stays open.
    """
    bhari = tuple(bhari)
    n = len(bhari)
    if n % 2:
        raise NotationError(f"bharī length {n} is odd")
    full_b, full_k = tuple(full_verbs[0]), tuple(full_verbs[1])
    half = n // 2
    out = [vocab.complement(b) for b in bhari[:half]] + list(bhari[half:])
    if full_b and bhari[-len(full_b):] == full_b and len(full_b) <= half:
        out[n - len(full_k):] = full_k
    elif strict:
        raise MissingVerb(f"bharī does not end with the full verb {' '.join(full_b)}")
    elif half_verbs is not None:
        half_b, half_k = tuple(half_verbs[0]), tuple(half_verbs[1])
        if half_b and bhari[-len(half_b):] == half_b:
            out[n - len(half_k):] = half_k
    return tuple(out)


def derive_khali(bhari: Sequence[str], ruleset, strict: bool = True) -> tuple[str, ...]:
    """Khālī half of ``bhari`` under the verbs of ``ruleset``."""
    return mirror_khali(
        bhari,
        (ruleset.full_verb_bhari, ruleset.full_verb_khali),
        (ruleset.half_verb_bhari, ruleset.half_verb_khali),
        vocab=ruleset.vocab,
        strict=strict,
    )


@dataclass
class ThemeSpec:
    """Parsed contents of a theme file."""

    composition: Composition
    seeds: tuple[str, ...] | None = None
    highlighted: tuple[str, ...] | None = None
    source: str | None = field(default=None, compare=False)


THEME_KEYS = ("type", "bhari", "khali", "seeds", "highlighted")


def parse_theme(text: str, vocab: BolVocabulary = DEFAULT_VOCABULARY, source: str | None = None) -> ThemeSpec:
    """Parse ``key: value`` theme text.  Blank lines and ``#`` comments are skipped."""
    values: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise ThemeFileError(f"expected 'key: value', got {raw!r}", lineno)
        if key not in THEME_KEYS:
            raise ThemeFileError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ThemeFileError(f"duplicate key {key!r}", lineno)
        values[key] = (lineno, value.strip())

    if "bhari" not in values:
        raise ThemeFileError("missing required key 'bhari'")

    def bols(key):
        if key not in values:
            return None
        lineno, value = values[key]
        try:
            return tuple(tokenize(value, vocab))
        except UnknownSyllable as exc:
            raise ThemeFileError(f"{key}: {exc}", lineno) from None

    cyclic = True
    if "type" in values:
        lineno, kind = values["type"]
        if kind.lower() not in ("cyclic", "acyclic"):
            raise ThemeFileError(f"type must be 'cyclic' or 'acyclic', got {kind!r}", lineno)
        cyclic = kind.lower() == "cyclic"

    bhari = bols("bhari")
    if not bhari:
        raise ThemeFileError("bharī is empty", values["bhari"][0])
    khali = bols("khali")
    if khali is not None and len(khali) != len(bhari):
        raise ThemeFileError(
            f"khālī has {len(khali)} bōls, bharī has {len(bhari)}", values["khali"][0]
        )
    return ThemeSpec(
        composition=Composition(bhari, khali, cyclic=cyclic),
        seeds=bols("seeds"),
        highlighted=bols("highlighted"),
        source=source,
    )


def load_theme(path, vocab: BolVocabulary = DEFAULT_VOCABULARY) -> ThemeSpec:
    path = Path(path)
    return parse_theme(path.read_text(encoding="ascii"), vocab, source=str(path))
