"""Utterance ingestion, lexicon-driven word segmentation and word counts.

File formats
------------
Utterance file: UTF-8 JSON lines, one record per line:

    {"id": "...", "reference": "...", "hypothesis": "...",
     "entities": ["..."], "source": "..."}

Only ``id`` and ``reference`` are required.  Lexicon file: UTF-8, one word
per line, ``#`` comments and blank lines skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional


class CorpusFormatError(ValueError):
    """Malformed utterance or lexicon input; message carries the line number."""


@dataclass
class Utterance:
    id: str
    reference: str
    hypothesis: Optional[str] = None
    entities: list[str] = field(default_factory=list)
    source: str = ""

    def to_json(self) -> str:
        rec = {"id": self.id, "reference": self.reference}
        if self.hypothesis is not None:
            rec["hypothesis"] = self.hypothesis
        if self.entities:
            rec["entities"] = self.entities
        if self.source:
            rec["source"] = self.source
        return json.dumps(rec, ensure_ascii=False)


def load_utterances(path, validate_entities: bool = False) -> list[Utterance]:
    """Parse a JSONL utterance file, preserving order.

    Duplicate ids are rejected.  With ``validate_entities`` every entity
    must be a substring of its reference (off by default: predicted entity
    labels can be noisy).
    """
    path = Path(path)
    out: list[Utterance] = []
    seen: set[str] = set()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(rec, dict) or "id" not in rec or "reference" not in rec:
                raise CorpusFormatError(f"{path}:{lineno}: record needs 'id' and 'reference'")
            uid = str(rec["id"])
            if not uid:
                raise CorpusFormatError(f"{path}:{lineno}: empty id")
            if uid in seen:
                raise CorpusFormatError(f"{path}:{lineno}: duplicate id {uid!r}")
            seen.add(uid)
            entities = [str(e) for e in rec.get("entities", [])]
            if any(not e for e in entities):
                raise CorpusFormatError(f"{path}:{lineno}: empty entity string")
            utt = Utterance(
                id=uid,
                reference=str(rec["reference"]),
                hypothesis=None if rec.get("hypothesis") is None else str(rec["hypothesis"]),
                entities=entities,
                source=str(rec.get("source", "")),
            )
            if validate_entities:
                for e in utt.entities:
                    if e not in utt.reference:
                        raise CorpusFormatError(
                            f"{path}:{lineno}: entity {e!r} not in reference"
                        )
            out.append(utt)
    return out


def save_utterances(utterances: Iterable[Utterance], path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for utt in utterances:
            fh.write(utt.to_json() + "\n")


@dataclass
class Lexicon:
    words: frozenset[str]
    max_word_len: int

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Lexicon":
        ws = frozenset(w for w in words if w)
        return cls(words=ws, max_word_len=max((len(w) for w in ws), default=1))


def load_lexicon(path) -> Lexicon:
    path = Path(path)
    words = []
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                words.append(word)
    return Lexicon.from_words(words)


def segment(text: str, lexicon: Lexicon) -> list[str]:
    """Greedy forward maximum matching; single characters as fallback.

    The concatenation of the output always equals the input.
    """
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        match = None
        for length in range(min(lexicon.max_word_len, n - i), 1, -1):
            cand = text[i : i + length]
            if cand in lexicon.words:
                match = cand
                break
        if match is None:
            match = text[i]
        out.append(match)
        i += len(match)
    return out


def tokenize(text: str, lexicon: Optional[Lexicon], pre_segmented: bool = False) -> list[str]:
    """Segment via the lexicon, or split on whitespace for input that is
    already segmented."""
    if pre_segmented:
        return text.split()
    if lexicon is None:
        return list(text)
    return segment(text, lexicon)


@dataclass
class WordFrequencyTable:
    counts: dict[str, int]
    total_words: int


def build_frequency_table(
    references: Iterable[str], lexicon: Optional[Lexicon], pre_segmented: bool = False
) -> WordFrequencyTable:
    counts: dict[str, int] = {}
    total = 0
    for ref in references:
        for word in tokenize(ref, lexicon, pre_segmented):
            counts[word] = counts.get(word, 0) + 1
            total += 1
    return WordFrequencyTable(counts=counts, total_words=total)


def top_k_words(table: WordFrequencyTable, k: int) -> list[str]:
    """The k most frequent words in rank order; count ties broken
    lexicographically."""
    if k < 0:
        raise ValueError("k must be >= 0")
    ranked = sorted(table.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [w for w, _ in ranked[:k]]
