"""Pseudo ASR-error synthesis by homophone substitution.

Sentences are selected by an independent Bernoulli draw; within a
selected sentence, rare words (outside the top-k most frequent) that
contain at least one character with homophones are candidates, and each
chosen word has its homophone-bearing characters swapped for uniformly
random homophones.  All randomness flows through per-sentence substreams
of the portable generator, so output is byte-stable across runs,
machines, and worker scheduling.

In tone-exact mode every corrupted sentence must render to the same
Pinyin as its reference.  A swap can break that when it creates or
destroys a word-override match (e.g. a swap that forms 银行 changes 行's
rendering), so each word replacement is re-verified against the
reference rendering and dropped in favor of another candidate word if it
fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from pygec.corpus import Lexicon, build_frequency_table, segment, top_k_words
from pygec.gec import TaskKind, build_prompt
from pygec.pinyin import HomophoneDictionary, PinyinDictionary, homophones_of, pinyin_of
from pygec.rng import Xoshiro256StarStar, substream_seed

DEFAULT_TASKS = (
    TaskKind.DIRECT,
    TaskKind.PYGEC,
    TaskKind.PINYIN_TO_TEXT,
    TaskKind.TEXT_TO_PINYIN,
)


@dataclass(frozen=True)
class SynthesisConfig:
    sentence_error_prob: float = 0.40
    top_k_filter: int = 5000
    words_per_sentence: int = 1
    char_sub_prob: float = 1.0
    seed: int = 0
    tasks: tuple[TaskKind, ...] = DEFAULT_TASKS

    def __post_init__(self):
        if not 0.0 <= self.sentence_error_prob <= 1.0:
            raise ValueError("sentence_error_prob must be in [0,1]")
        if not 0.0 <= self.char_sub_prob <= 1.0:
            raise ValueError("char_sub_prob must be in [0,1]")
        if self.words_per_sentence < 1:
            raise ValueError("words_per_sentence must be >= 1")
        if self.top_k_filter < 0:
            raise ValueError("top_k_filter must be >= 0")


@dataclass(frozen=True)
class TrainingRecord:
    task: TaskKind
    prompt: str
    target: str
    meta: str

    def to_json(self) -> dict:
        return {"task": self.task.value, "prompt": self.prompt,
                "target": self.target, "meta": self.meta}


@dataclass
class SentenceOutcome:
    index: int
    id: str
    reference: str
    hypothesis: str
    selected: bool
    flagged_no_eligible: bool = False

    @property
    def changed(self) -> bool:
        return self.hypothesis != self.reference


@dataclass
class SynthesisResult:
    outcomes: list[SentenceOutcome]
    records: list[TrainingRecord]
    filter_words: frozenset[str]

    def manifest(self) -> dict:
        changed = sum(1 for o in self.outcomes if o.changed)
        selected = sum(1 for o in self.outcomes if o.selected)
        flagged = sum(1 for o in self.outcomes if o.flagged_no_eligible)
        chars = sum(
            sum(a != b for a, b in zip(o.reference, o.hypothesis)) for o in self.outcomes
        )
        return {
            "sentences": len(self.outcomes),
            "selected": selected,
            "changed": changed,
            "flagged_no_eligible": flagged,
            "chars_substituted": chars,
            "records": len(self.records),
            "filter_size": len(self.filter_words),
        }


def eligible_word_spans(
    reference: str,
    lexicon: Lexicon,
    filter_words: frozenset[str],
    pdict: PinyinDictionary,
    hdict: HomophoneDictionary,
) -> list[tuple[int, int]]:
    """Half-open segmented spans that are outside the frequency filter
    and contain at least one character with homophones."""
    spans = []
    pos = 0
    for word in segment(reference, lexicon):
        start, end = pos, pos + len(word)
        pos = end
        if word in filter_words:
            continue
        if any(homophones_of(ch, hdict, pdict) for ch in word):
            spans.append((start, end))
    return spans


def _corrupt_word(
    word: str,
    char_sub_prob: float,
    pdict: PinyinDictionary,
    hdict: HomophoneDictionary,
    rng: Xoshiro256StarStar,
) -> str:
    """Swap each homophone-bearing character with probability
    char_sub_prob; redraw until at least one swap happened.

    With char_sub_prob == 0 the redraw loop could never terminate, so
    that case degrades to exactly one forced swap at a random position.
    """
    positions = [i for i, ch in enumerate(word) if homophones_of(ch, hdict, pdict)]
    if not positions:
        raise ValueError(f"word {word!r} has no character with homophones")
    if char_sub_prob == 0.0:
        forced = positions[rng.randbelow(len(positions))]
        alts = sorted(homophones_of(word[forced], hdict, pdict))
        return word[:forced] + alts[rng.randbelow(len(alts))] + word[forced + 1:]
    while True:
        out = list(word)
        changed = False
        for i in positions:
            if rng.random() < char_sub_prob:
                alts = sorted(homophones_of(word[i], hdict, pdict))
                out[i] = alts[rng.randbelow(len(alts))]
                changed = True
        if changed:
            return "".join(out)


def corrupt_sentence(
    reference: str,
    eligible_spans: Sequence[tuple[int, int]],
    config: SynthesisConfig,
    pdict: PinyinDictionary,
    hdict: HomophoneDictionary,
    rng: Xoshiro256StarStar,
) -> str:
    """Corrupt up to words_per_sentence eligible words, drawn uniformly
    without replacement.

    Returns the reference unchanged when no eligible span exists (the
    caller flags that sentence).  In tone-exact mode a replacement that
    changes the rendered Pinyin is discarded and another candidate word
    is drawn instead, keeping the Pinyin-invariance guarantee.
    """
    if not eligible_spans:
        return reference
    target = min(config.words_per_sentence, len(eligible_spans))
    pool = list(range(len(eligible_spans)))
    base_render = pinyin_of(reference, pdict) if hdict.tone_exact else None
    current = reference
    replaced = 0
    while replaced < target and pool:
        span_index = pool.pop(rng.randbelow(len(pool)))
        start, end = eligible_spans[span_index]
        new_word = _corrupt_word(current[start:end], config.char_sub_prob, pdict, hdict, rng)
        trial = current[:start] + new_word + current[end:]
        if base_render is not None and pinyin_of(trial, pdict) != base_render:
            continue
        current = trial
        replaced += 1
    return current


def synthesize_sentences(
    references: Sequence[str],
    config: SynthesisConfig,
    lexicon: Lexicon,
    pdict: PinyinDictionary,
    hdict: HomophoneDictionary,
    ids: Optional[Sequence[str]] = None,
    filter_words: Optional[frozenset[str]] = None,
) -> SynthesisResult:
    """Hypotheses for a corpus, without the record emission step.

    The frequency filter is built from the corpus itself unless an
    explicit filter set is supplied.
    """
    if ids is not None and len(ids) != len(references):
        raise ValueError("ids and references must align")
    if filter_words is None:
        table = build_frequency_table(references, lexicon)
        filter_words = frozenset(top_k_words(table, config.top_k_filter))
    outcomes = []
    for index, reference in enumerate(references):
        rng = Xoshiro256StarStar(substream_seed(config.seed, index))
        sentence_id = ids[index] if ids is not None else f"s{index:06d}"
        selected = rng.random() < config.sentence_error_prob
        hypothesis = reference
        flagged = False
        if selected:
            spans = eligible_word_spans(reference, lexicon, filter_words, pdict, hdict)
            hypothesis = corrupt_sentence(reference, spans, config, pdict, hdict, rng)
            flagged = hypothesis == reference
        outcomes.append(
            SentenceOutcome(
                index=index, id=sentence_id, reference=reference,
                hypothesis=hypothesis, selected=selected, flagged_no_eligible=flagged,
            )
        )
    return SynthesisResult(outcomes=outcomes, records=[], filter_words=filter_words)


def records_for_outcome(
    outcome: SentenceOutcome,
    pdict: PinyinDictionary,
    tasks: Sequence[TaskKind] = DEFAULT_TASKS,
) -> list[TrainingRecord]:
    """Multitask records for one sentence.

    The Pinyin-to-text task contributes two records, one from the
    reference rendering and one from the hypothesis rendering, so the
    default four tasks yield five records.
    """
    ref, hyp = outcome.reference, outcome.hypothesis
    ref_pinyin = pinyin_of(ref, pdict)
    hyp_pinyin = pinyin_of(hyp, pdict)
    records = []
    for task in tasks:
        if task is TaskKind.DIRECT:
            prompts = [build_prompt(task, hypothesis=hyp)]
            target = ref
        elif task is TaskKind.PYGEC:
            prompts = [build_prompt(task, hypothesis=hyp, pinyin=hyp_pinyin)]
            target = ref
        elif task is TaskKind.PINYIN_TO_TEXT:
            prompts = [build_prompt(task, pinyin=ref_pinyin),
                       build_prompt(task, pinyin=hyp_pinyin)]
            target = ref
        elif task is TaskKind.TEXT_TO_PINYIN:
            prompts = [build_prompt(task, reference=ref)]
            target = ref_pinyin
        else:
            raise ValueError(f"task {task.value} has no training-record form")
        for prompt in prompts:
            records.append(TrainingRecord(task=task, prompt=prompt, target=target,
                                          meta=outcome.id))
    return records


def synthesize_dataset(
    references: Sequence[str],
    config: SynthesisConfig,
    lexicon: Lexicon,
    pdict: PinyinDictionary,
    hdict: HomophoneDictionary,
    ids: Optional[Sequence[str]] = None,
) -> SynthesisResult:
    result = synthesize_sentences(references, config, lexicon, pdict, hdict, ids=ids)
    for outcome in result.outcomes:
        result.records.extend(records_for_outcome(outcome, pdict, config.tasks))
    return result
