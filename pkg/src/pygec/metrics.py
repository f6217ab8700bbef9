"""Character-level edit alignment, CER, entity recall and case statistics.

CER follows the usual ASR definition (S + D + I) / reference length.  The
alignment works on any token sequence, so the same code scores Chinese
characters and space-delimited Pinyin syllables.
"""

from __future__ import annotations

import string
import unicodedata
from dataclasses import dataclass, field
from typing import Optional, Sequence

MATCH = "match"
SUBSTITUTE = "substitute"
DELETE = "delete"
INSERT = "insert"


@dataclass(frozen=True)
class EditOp:
    """One alignment step; indices refer into reference / hypothesis."""

    kind: str
    ref_index: Optional[int]
    hyp_index: Optional[int]


@dataclass
class EditAlignment:
    ops: list[EditOp]
    matches: int
    substitutions: int
    deletions: int
    insertions: int

    @property
    def distance(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    def replay(self, reference: Sequence, hypothesis: Sequence) -> list:
        """Apply ops to the reference, reproducing the hypothesis tokens."""
        out = []
        for op in self.ops:
            if op.kind == MATCH:
                out.append(reference[op.ref_index])
            elif op.kind in (SUBSTITUTE, INSERT):
                out.append(hypothesis[op.hyp_index])
        return out


def edit_align(reference: Sequence, hypothesis: Sequence) -> EditAlignment:
    """Minimal unit-cost alignment of two token sequences.

    Backtrace tie-break prefers match > substitute > delete > insert, so
    the alignment is deterministic.
    """
    n, m = len(reference), len(hypothesis)
    # dist[i][j] = edit distance between reference[:i] and hypothesis[:j]
    dist = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][0] = i
    for j in range(1, m + 1):
        dist[0][j] = j
    for i in range(1, n + 1):
        ri = reference[i - 1]
        row = dist[i]
        prev = dist[i - 1]
        for j in range(1, m + 1):
            sub = prev[j - 1] + (0 if ri == hypothesis[j - 1] else 1)
            dele = prev[j] + 1
            ins = row[j - 1] + 1
            row[j] = min(sub, dele, ins)

    ops: list[EditOp] = []
    i, j = n, m
    counts = {MATCH: 0, SUBSTITUTE: 0, DELETE: 0, INSERT: 0}
    while i > 0 or j > 0:
        here = dist[i][j]
        if i > 0 and j > 0 and reference[i - 1] == hypothesis[j - 1] and here == dist[i - 1][j - 1]:
            kind = MATCH
        elif i > 0 and j > 0 and here == dist[i - 1][j - 1] + 1:
            kind = SUBSTITUTE
        elif i > 0 and here == dist[i - 1][j] + 1:
            kind = DELETE
        else:
            kind = INSERT
        if kind == MATCH or kind == SUBSTITUTE:
            i -= 1
            j -= 1
            ops.append(EditOp(kind, i, j))
        elif kind == DELETE:
            i -= 1
            ops.append(EditOp(DELETE, i, None))
        else:
            j -= 1
            ops.append(EditOp(INSERT, None, j))
        counts[kind] += 1
    ops.reverse()
    return EditAlignment(
        ops=ops,
        matches=counts[MATCH],
        substitutions=counts[SUBSTITUTE],
        deletions=counts[DELETE],
        insertions=counts[INSERT],
    )


def cer(reference: Sequence, hypothesis: Sequence) -> float:
    """(S + D + I) / |reference|.

    An empty reference scores 0.0 against an empty hypothesis and 1.0
    otherwise (every inserted token capped at one reference's worth).
    """
    if len(reference) == 0:
        return 0.0 if len(hypothesis) == 0 else 1.0
    return edit_align(reference, hypothesis).distance / len(reference)


# ---------------------------------------------------------------------------
# Text normalization applied before corpus-level scoring.

_ASCII_PUNCT = set(string.punctuation)


@dataclass(frozen=True)
class Normalization:
    """What gets stripped/folded before CER; recorded in every report."""

    nfc: bool = True
    strip_whitespace: bool = True
    strip_ascii_punct: bool = True

    def apply(self, text: str) -> str:
        if self.nfc:
            text = unicodedata.normalize("NFC", text)
        out = []
        for ch in text:
            if self.strip_whitespace and ch.isspace():
                continue
            if self.strip_ascii_punct and ch in _ASCII_PUNCT:
                continue
            out.append(ch)
        return "".join(out)


def entity_recall(entities: Sequence[str], hypothesis: str) -> Optional[float]:
    """Fraction of entities occurring as contiguous substrings.

    Returns None when there are no entities: recall is undefined then and
    the utterance is excluded from corpus aggregation.
    """
    if not entities:
        return None
    hits = sum(1 for e in entities if e in hypothesis)
    return hits / len(entities)


@dataclass(frozen=True)
class CaseStats:
    good_pct: float
    bad_pct: float
    unchanged_pct: float


def case_stats(before: Sequence[float], after: Sequence[float]) -> CaseStats:
    """Percentages of utterances whose CER decreased / increased / held."""
    if len(before) != len(after):
        raise ValueError("before/after lists must be index-aligned and equal length")
    total = len(before)
    if total == 0:
        return CaseStats(0.0, 0.0, 100.0)
    good = sum(1 for b, a in zip(before, after) if a < b)
    bad = sum(1 for b, a in zip(before, after) if a > b)
    unchanged = total - good - bad
    return CaseStats(100.0 * good / total, 100.0 * bad / total, 100.0 * unchanged / total)


# ---------------------------------------------------------------------------
# Corpus-level report.


@dataclass
class UtteranceScore:
    utterance_id: str
    cer_after: float
    cer_before: Optional[float]  # None when the utterance has no hypothesis
    ref_len: int
    errors_after: int
    errors_before: Optional[int]
    entity_total: int
    entity_hits: int
    empty_reference: bool = False


@dataclass
class CorpusReport:
    utterances: list[UtteranceScore]
    pooled_cer: float
    mean_cer: float
    pooled_cer_baseline: Optional[float]
    entity_recall: Optional[float]
    cases: CaseStats
    normalization: Normalization
    flagged_empty_refs: int = 0

    def per_utterance_cer(self) -> list[float]:
        return [u.cer_after for u in self.utterances]


def evaluate_corpus(
    utterances,
    corrected: dict[str, str],
    normalization: Normalization = Normalization(),
) -> CorpusReport:
    """Score corrected texts against references.

    ``corrected`` maps utterance id to the corrected text; utterances
    missing from the map fall back to their own hypothesis (no-op
    correction).  Pooled CER is total errors over total reference length;
    the per-utterance mean is reported alongside.  Good/bad cases compare
    against the hypothesis baseline where one exists.
    """
    scores: list[UtteranceScore] = []
    total_errs = 0
    total_len = 0
    base_errs = 0
    base_len = 0
    ent_hits = 0
    ent_total = 0
    flagged = 0
    for utt in utterances:
        ref = normalization.apply(utt.reference)
        hyp_text = corrected.get(utt.id, utt.hypothesis)
        if hyp_text is None:
            hyp_text = utt.reference
        hyp = normalization.apply(hyp_text)
        ali = edit_align(ref, hyp)
        c_after = cer(ref, hyp)
        if len(ref) == 0:
            flagged += 1
        c_before = None
        e_before = None
        if utt.hypothesis is not None:
            base = normalization.apply(utt.hypothesis)
            e_before = edit_align(ref, base).distance
            c_before = cer(ref, base)
            base_errs += e_before
            base_len += len(ref)
        hits = sum(1 for e in utt.entities if e in hyp_text)
        if utt.entities:
            ent_hits += hits
            ent_total += len(utt.entities)
        scores.append(
            UtteranceScore(
                utterance_id=utt.id,
                cer_after=c_after,
                cer_before=c_before,
                ref_len=len(ref),
                errors_after=ali.distance,
                errors_before=e_before,
                entity_total=len(utt.entities),
                entity_hits=hits,
                empty_reference=len(ref) == 0,
            )
        )
        total_errs += ali.distance
        total_len += len(ref)

    pooled = total_errs / total_len if total_len else 0.0
    mean = sum(s.cer_after for s in scores) / len(scores) if scores else 0.0
    pooled_base = base_errs / base_len if base_len else None
    recall = ent_hits / ent_total if ent_total else None
    paired = [(s.cer_before, s.cer_after) for s in scores if s.cer_before is not None]
    cases = case_stats([b for b, _ in paired], [a for _, a in paired])
    return CorpusReport(
        utterances=scores,
        pooled_cer=pooled,
        mean_cer=mean,
        pooled_cer_baseline=pooled_base,
        entity_recall=recall,
        cases=cases,
        normalization=normalization,
        flagged_empty_refs=flagged,
    )
