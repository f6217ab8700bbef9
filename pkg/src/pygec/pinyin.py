"""Text-to-Pinyin conversion and homophone lookup.

Readings use the tone-number form ("ni3", tones 1-5 with 5 for the
neutral tone), which keeps everything ASCII and directly comparable with
edit metrics.  Conversion is dictionary-driven:

    你	ni3
    行	xing2,hang2
    银行	yin2,hang2
    # comment lines are skipped

A single-character row lists alternative readings, most frequent first.
A multi-character row is a word override giving one reading per
character; overrides win over per-character lookup by greedy longest
match.  Characters absent from the dictionary (Latin letters, digits,
rare hanzi) pass through unchanged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

_SYLLABLE_RE = re.compile(r"^([a-z]+)([1-5])$")


class DictionaryError(ValueError):
    """Unreadable or malformed dictionary input."""


@dataclass(frozen=True)
class Syllable:
    base: str
    tone: int

    def __post_init__(self):
        if not self.base or not self.base.isascii() or not self.base.islower():
            raise ValueError(f"syllable base must be lowercase ASCII, got {self.base!r}")
        if not 1 <= self.tone <= 5:
            raise ValueError(f"tone must be in 1..5, got {self.tone}")

    def render(self) -> str:
        return f"{self.base}{self.tone}"


def parse_syllable(text: str) -> Syllable:
    m = _SYLLABLE_RE.match(text)
    if not m:
        raise DictionaryError(f"invalid toned syllable {text!r} (expected e.g. 'hao3')")
    return Syllable(base=m.group(1), tone=int(m.group(2)))


@dataclass
class PinyinSequence:
    """Per-character readings aligned to a source string."""

    items: list[tuple[str, Optional[Syllable]]]

    def __len__(self) -> int:
        return len(self.items)


@dataclass
class PinyinDictionary:
    char_readings: dict[str, list[Syllable]] = field(default_factory=dict)
    word_overrides: dict[str, list[Syllable]] = field(default_factory=dict)
    max_override_len: int = 1

    def primary(self, ch: str) -> Optional[Syllable]:
        readings = self.char_readings.get(ch)
        return readings[0] if readings else None

    def __len__(self) -> int:
        return len(self.char_readings)


def _parse_row(line: str, lineno: int, path) -> tuple[str, list[Syllable]]:
    parts = line.split("\t")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise DictionaryError(f"{path}:{lineno}: expected '<entry>\\t<readings>'")
    entry, readings_field = parts
    try:
        readings = [parse_syllable(r.strip()) for r in readings_field.split(",")]
    except DictionaryError as exc:
        raise DictionaryError(f"{path}:{lineno}: {exc}") from exc
    return entry, readings


def load_pinyin_dictionary(path) -> PinyinDictionary:
    """Load a TSV reading dictionary.

    Duplicate single-character rows merge their readings in first-seen
    order; an empty result is an error.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DictionaryError(f"cannot read dictionary {path}: {exc}") from exc
    pdict = PinyinDictionary()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        entry, readings = _parse_row(line, lineno, path)
        if len(entry) == 1:
            existing = pdict.char_readings.setdefault(entry, [])
            for r in readings:
                if r not in existing:
                    existing.append(r)
        else:
            if len(readings) != len(entry):
                raise DictionaryError(
                    f"{path}:{lineno}: override {entry!r} needs {len(entry)} readings, "
                    f"got {len(readings)}"
                )
            pdict.word_overrides.setdefault(entry, readings)
            pdict.max_override_len = max(pdict.max_override_len, len(entry))
    if not pdict.char_readings:
        raise DictionaryError(f"{path}: empty dictionary")
    return pdict


def bundled_dictionary_path() -> Path:
    """Path of the reading dictionary shipped with the package."""
    return Path(resources.files("pygec").joinpath("data/pinyin_dict.tsv"))


def text_to_pinyin(text: str, pdict: PinyinDictionary) -> PinyinSequence:
    """One reading per character; word overrides beat per-character lookup.

    Overrides are applied greedily left to right, longest match first.
    Unknown characters get no reading.
    """
    items: list[tuple[str, Optional[Syllable]]] = []
    i = 0
    n = len(text)
    while i < n:
        matched = False
        if pdict.word_overrides:
            for length in range(min(pdict.max_override_len, n - i), 1, -1):
                word = text[i : i + length]
                readings = pdict.word_overrides.get(word)
                if readings is not None:
                    items.extend(zip(word, readings))
                    i += length
                    matched = True
                    break
        if not matched:
            ch = text[i]
            items.append((ch, pdict.primary(ch)))
            i += 1
    return PinyinSequence(items=items)


def render_pinyin(seq: PinyinSequence) -> str:
    """Space-joined toned syllables; unreadable characters render as
    themselves ("A你" -> "A ni3")."""
    return " ".join(s.render() if s is not None else ch for ch, s in seq.items)


def pinyin_of(text: str, pdict: PinyinDictionary) -> str:
    """Shorthand for render_pinyin(text_to_pinyin(...))."""
    return render_pinyin(text_to_pinyin(text, pdict))


@dataclass
class HomophoneDictionary:
    """Characters grouped by reading.

    Keys are rendered syllables ("hao3") in tone-exact mode, bare bases
    ("hao") in tone-less mode.  Tone-exact is the default: it preserves
    the invariant that a homophone swap leaves the sentence Pinyin
    unchanged.
    """

    by_syllable: dict[str, frozenset[str]]
    tone_exact: bool = True

    def key_for(self, syl: Syllable) -> str:
        return syl.render() if self.tone_exact else syl.base

    def group(self, syl: Syllable) -> frozenset[str]:
        return self.by_syllable.get(self.key_for(syl), frozenset())


def derive_homophone_dictionary(
    pdict: PinyinDictionary, tone_exact: bool = True
) -> HomophoneDictionary:
    """Group every dictionary character by its primary reading."""
    if not pdict.char_readings:
        raise DictionaryError("cannot derive homophones from an empty dictionary")
    groups: dict[str, set[str]] = {}
    for ch, readings in pdict.char_readings.items():
        key = readings[0].render() if tone_exact else readings[0].base
        groups.setdefault(key, set()).add(ch)
    return HomophoneDictionary(
        by_syllable={k: frozenset(v) for k, v in groups.items()}, tone_exact=tone_exact
    )


def load_homophone_dictionary(path, tone_exact: bool = True) -> HomophoneDictionary:
    """Load an explicit homophone file: ``<toned-syllable>\\t<chars>``.

    In tone-less mode groups sharing a base are unioned.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DictionaryError(f"cannot read homophone file {path}: {exc}") from exc
    groups: dict[str, set[str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[1]:
            raise DictionaryError(f"{path}:{lineno}: expected '<syllable>\\t<chars>'")
        try:
            syl = parse_syllable(parts[0].strip())
        except DictionaryError as exc:
            raise DictionaryError(f"{path}:{lineno}: {exc}") from exc
        key = syl.render() if tone_exact else syl.base
        groups.setdefault(key, set()).update(parts[1].strip())
    if not groups:
        raise DictionaryError(f"{path}: empty homophone dictionary")
    return HomophoneDictionary(
        by_syllable={k: frozenset(v) for k, v in groups.items()}, tone_exact=tone_exact
    )


def homophones_of(
    ch: str, hdict: HomophoneDictionary, pdict: PinyinDictionary
) -> frozenset[str]:
    """Characters sharing ch's primary reading, excluding ch itself."""
    primary = pdict.primary(ch)
    if primary is None:
        return frozenset()
    return hdict.group(primary) - {ch}


def has_homophones(ch: str, hdict: HomophoneDictionary, pdict: PinyinDictionary) -> bool:
    return bool(homophones_of(ch, hdict, pdict))


def load_default_dictionaries(
    pinyin_path=None, homophone_path=None, tone_exact: bool = True
) -> tuple[PinyinDictionary, HomophoneDictionary]:
    """Load the reading dictionary (bundled one by default) and either the
    explicit homophone file or groups derived from primary readings."""
    pdict = load_pinyin_dictionary(pinyin_path or bundled_dictionary_path())
    if homophone_path is not None:
        hdict = load_homophone_dictionary(homophone_path, tone_exact=tone_exact)
    else:
        hdict = derive_homophone_dictionary(pdict, tone_exact=tone_exact)
    return pdict, hdict
