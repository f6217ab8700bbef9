"""Combine candidate corrections: ROVER voting, Pinyin rerank, LLM rerank.

ROVER builds a word transition network over single-character tokens by
aligning candidates one at a time against the network, then takes a
plurality vote per slot.  Pinyin rerank scores each candidate by summed
Pinyin-level CER against every candidate plus the original input and
keeps the lowest score.  LLM rerank asks the endpoint to pick a
candidate by number and falls back to Pinyin rerank when the answer
cannot be mapped to a candidate.

The two rerankers always return one of the given candidates; ROVER can
produce a novel string.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from pygec.gec import (
    ChatClient,
    EndpointError,
    ResponseCache,
    TaskKind,
    build_prompt,
    cache_key,
    extract_answer,
)
from pygec.metrics import cer
from pygec.pinyin import PinyinDictionary, pinyin_of


class CandidateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Candidate:
    source: str
    text: str


@dataclass
class CandidateSet:
    id: str
    input: str
    candidates: list[Candidate]

    def __post_init__(self):
        if not self.candidates:
            raise CandidateFormatError(f"{self.id}: candidate set needs M >= 1")
        sources = [c.source for c in self.candidates]
        if len(set(sources)) != len(sources):
            raise CandidateFormatError(f"{self.id}: duplicate source labels")

    def texts(self) -> list[str]:
        return [c.text for c in self.candidates]


def load_candidate_sets(path) -> list[CandidateSet]:
    path = Path(path)
    sets = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
                candidates = [Candidate(source=c["source"], text=c["text"])
                              for c in row["candidates"]]
                sets.append(CandidateSet(id=row["id"], input=row["input"],
                                         candidates=candidates))
            except (KeyError, TypeError, ValueError) as exc:
                raise CandidateFormatError(f"{path}:{lineno}: {exc}") from exc
    return sets


def save_candidate_sets(sets: Sequence[CandidateSet], path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for s in sets:
            row = {"id": s.id, "input": s.input,
                   "candidates": [{"source": c.source, "text": c.text}
                                  for c in s.candidates]}
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")


NULL = None  # absence marker inside WTN slots


@dataclass
class WordTransitionNetwork:
    """slots[i][j] = token contributed by candidate j at slot i (None
    for absence), so every aligned candidate appears exactly once per
    slot."""

    slots: list[list[Optional[str]]] = field(default_factory=list)
    n_candidates: int = 0

    def add_first(self, text: str) -> None:
        self.slots = [[ch] for ch in text]
        self.n_candidates = 1

    def align_and_add(self, text: str) -> None:
        """Unit-cost DP of the candidate against the current slots.

        Moves: diag consumes (slot, char), free iff the char is already
        in the slot; up consumes a slot only (candidate contributes
        absence), free iff some candidate already contributed absence
        there; left inserts a new slot for the char, cost 1.  Backtrace
        prefers diag, then up, then left.
        """
        n, m = len(self.slots), len(text)
        INF = n + m + 1
        cost = [[0] * (m + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            cost[i][0] = cost[i - 1][0] + self._up_cost(i - 1)
        for j in range(1, m + 1):
            cost[0][j] = j
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                diag = cost[i - 1][j - 1] + (0 if text[j - 1] in self.slots[i - 1] else 1)
                up = cost[i - 1][j] + self._up_cost(i - 1)
                left = cost[i][j - 1] + 1
                cost[i][j] = min(diag, up, left)
        new_slots: list[list[Optional[str]]] = []
        i, j = n, m
        while i > 0 or j > 0:
            if i > 0 and j > 0 and cost[i][j] == cost[i - 1][j - 1] + (
                0 if text[j - 1] in self.slots[i - 1] else 1
            ):
                new_slots.append(self.slots[i - 1] + [text[j - 1]])
                i, j = i - 1, j - 1
            elif i > 0 and cost[i][j] == cost[i - 1][j] + self._up_cost(i - 1):
                new_slots.append(self.slots[i - 1] + [NULL])
                i -= 1
            else:
                new_slots.append([NULL] * self.n_candidates + [text[j - 1]])
                j -= 1
        new_slots.reverse()
        self.slots = new_slots
        self.n_candidates += 1

    def _up_cost(self, slot_index: int) -> int:
        return 0 if NULL in self.slots[slot_index] else 1

    def vote(self) -> str:
        """Plurality per slot; ties go to the earliest contributor;
        winning absence drops the slot."""
        out = []
        for slot in self.slots:
            counts: dict[Optional[str], int] = {}
            for token in slot:
                counts[token] = counts.get(token, 0) + 1
            best = max(counts.values())
            winner = next(token for token in slot if counts[token] == best)
            if winner is not NULL:
                out.append(winner)
        return "".join(out)


def rover_merge(cset: CandidateSet) -> str:
    wtn = WordTransitionNetwork()
    wtn.add_first(cset.candidates[0].text)
    for candidate in cset.candidates[1:]:
        wtn.align_and_add(candidate.text)
    return wtn.vote()


@dataclass(frozen=True)
class RerankScore:
    candidate_index: int
    score_pinyin: float


def _syllables(text: str, pdict: PinyinDictionary) -> list[str]:
    rendered = pinyin_of(text, pdict)
    return rendered.split(" ") if rendered else []


def pinyin_rerank(
    cset: CandidateSet, pdict: PinyinDictionary, include_input: bool = True
) -> tuple[str, list[RerankScore]]:
    """Each candidate w scores the summed CER of every reference-set
    rendering against w's rendering (w itself is the CER reference, so
    the self term is 0).  Lowest score wins, ties to the lowest index.
    """
    candidate_syllables = [_syllables(c.text, pdict) for c in cset.candidates]
    reference_set = list(candidate_syllables)
    if include_input:
        reference_set.append(_syllables(cset.input, pdict))
    scores = []
    for index, w in enumerate(candidate_syllables):
        total = sum(cer(w, other) for other in reference_set)
        scores.append(RerankScore(candidate_index=index, score_pinyin=total))
    best = min(scores, key=lambda s: (s.score_pinyin, s.candidate_index))
    return cset.candidates[best.candidate_index].text, scores


@dataclass
class EnsembleSelection:
    id: str
    method: str
    text: str
    fallback: bool = False
    scores: Optional[list[RerankScore]] = None

    def to_json(self) -> dict:
        row = {"id": self.id, "method": self.method, "text": self.text,
               "fallback": self.fallback}
        if self.scores is not None:
            row["scores"] = [
                {"candidate_index": s.candidate_index, "score_pinyin": round(s.score_pinyin, 6)}
                for s in self.scores
            ]
        return row


def _parse_choice(raw: str, candidates: Sequence[str]) -> Optional[str]:
    text = extract_answer(raw)
    match = re.search(r"\d+", text)
    if match:
        number = int(match.group())
        if 1 <= number <= len(candidates):
            return candidates[number - 1]
    if text in candidates:
        return text
    return None


def llm_rerank(
    cset: CandidateSet,
    client: ChatClient,
    cache: ResponseCache,
    pdict: PinyinDictionary,
) -> EnsembleSelection:
    """Ask the endpoint to pick a candidate by 1-based number.

    Unparseable or failed answers fall back to pinyin_rerank and flag
    the selection.
    """
    texts = cset.texts()
    prompt = build_prompt(TaskKind.RERANK, hypothesis=cset.input, candidates=texts)
    key = cache_key(client.config.model, TaskKind.RERANK, prompt)
    try:
        raw = cache.get(key)
        if raw is None:
            raw = client.complete(prompt)
            cache.put(key, raw, TaskKind.RERANK, client.config.model)
        choice = _parse_choice(raw, texts)
    except EndpointError:
        choice = None
    if choice is None:
        text, scores = pinyin_rerank(cset, pdict)
        return EnsembleSelection(id=cset.id, method="llm-rerank", text=text,
                                 fallback=True, scores=scores)
    return EnsembleSelection(id=cset.id, method="llm-rerank", text=choice)
