"""Homophone substitution: determinism, invariance, eligibility, and the
uniformity of the replacement draw."""

import math

import pytest

from pygec.corpus import Lexicon
from pygec.gec import TaskKind
from pygec.metrics import edit_align
from pygec.pinyin import (
    PinyinDictionary,
    Syllable,
    derive_homophone_dictionary,
    load_default_dictionaries,
    pinyin_of,
)
from pygec.rng import Xoshiro256StarStar, substream_seed
from pygec.synth import (
    SynthesisConfig,
    corrupt_sentence,
    eligible_word_spans,
    records_for_outcome,
    synthesize_dataset,
    synthesize_sentences,
)


def tiny_dicts(groups):
    """PinyinDictionary + derived homophones from {syllable: chars}."""
    pdict = PinyinDictionary()
    for syl, chars in groups.items():
        base, tone = syl[:-1], int(syl[-1])
        for ch in chars:
            pdict.char_readings[ch] = [Syllable(base=base, tone=tone)]
    return pdict, derive_homophone_dictionary(pdict)


@pytest.fixture(scope="module")
def real_dicts():
    return load_default_dictionaries()


def char_pool(hdict, n=60):
    """Characters drawn from multi-member homophone groups."""
    pool = []
    for key in sorted(hdict.by_syllable):
        group = sorted(hdict.by_syllable[key])
        if len(group) >= 2:
            pool.extend(group[:2])
        if len(pool) >= n:
            break
    return pool[:n]


def random_corpus(hdict, sentences=200, length=8, seed=7):
    pool = char_pool(hdict)
    rng = Xoshiro256StarStar(seed)
    return ["".join(pool[rng.randbelow(len(pool))] for _ in range(length))
            for _ in range(sentences)]


CHAR_LEX = Lexicon.from_words([])  # single-char fallback everywhere


class TestConfig:
    @pytest.mark.parametrize("kw", [
        {"sentence_error_prob": -0.1}, {"sentence_error_prob": 1.1},
        {"char_sub_prob": 2.0}, {"words_per_sentence": 0}, {"top_k_filter": -1},
    ])
    def test_invalid_rejected(self, kw):
        with pytest.raises(ValueError):
            SynthesisConfig(**kw)


class TestCorruptSentence:
    def test_no_eligible_words_unchanged(self):
        pdict, hdict = tiny_dicts({"jia3": "甲"})
        cfg = SynthesisConfig(seed=1)
        rng = Xoshiro256StarStar(1)
        assert corrupt_sentence("甲甲", [], cfg, pdict, hdict, rng) == "甲甲"

    def test_single_homophone_forced_swap(self):
        # one eligible single-char word with exactly one homophone: the
        # outcome has no freedom left
        pdict, hdict = tiny_dicts({"jia3": "甲乙", "bing3": "丙"})
        cfg = SynthesisConfig(char_sub_prob=1.0)
        for seed in range(20):
            rng = Xoshiro256StarStar(seed)
            got = corrupt_sentence("甲丙", [(0, 1)], cfg, pdict, hdict, rng)
            assert got == "乙丙"

    def test_replacement_uniform_over_homophone_set(self):
        # 1,000 seeded runs; each alternative should land within 3 sigma
        # of the uniform expectation
        pdict, hdict = tiny_dicts({"yi1": "一壹弌医依"})
        cfg = SynthesisConfig(char_sub_prob=1.0)
        counts = {}
        n = 1000
        for seed in range(n):
            rng = Xoshiro256StarStar(seed)
            got = corrupt_sentence("一", [(0, 1)], cfg, pdict, hdict, rng)
            counts[got] = counts.get(got, 0) + 1
        alternatives = 4
        expected = n / alternatives
        sigma = math.sqrt(n * (1 / alternatives) * (1 - 1 / alternatives))
        assert set(counts) == set("壹弌医依")
        for c in counts.values():
            assert abs(c - expected) <= 3 * sigma

    def test_char_sub_prob_zero_forces_exactly_one(self):
        pdict, hdict = tiny_dicts({"jia3": "甲乙", "bing3": "丙丁"})
        cfg = SynthesisConfig(char_sub_prob=0.0)
        for seed in range(30):
            rng = Xoshiro256StarStar(seed)
            got = corrupt_sentence("甲丙", [(0, 2)], cfg, pdict, hdict, rng)
            diffs = sum(a != b for a, b in zip("甲丙", got))
            assert diffs == 1

    def test_words_per_sentence_two(self):
        pdict, hdict = tiny_dicts({"jia3": "甲乙", "bing3": "丙丁"})
        cfg = SynthesisConfig(words_per_sentence=2, char_sub_prob=1.0)
        rng = Xoshiro256StarStar(3)
        got = corrupt_sentence("甲丙", [(0, 1), (1, 2)], cfg, pdict, hdict, rng)
        assert got == "乙丁"

    def test_override_conflict_rejected(self, real_dicts):
        # swapping 吟 to 银 in 吟行 would form the word 银行, whose
        # override changes 行's rendering; the swap must be discarded
        pdict, hdict = real_dicts
        cfg = SynthesisConfig(char_sub_prob=1.0)
        base = pinyin_of("吟行", pdict)
        spans = eligible_word_spans("吟行", CHAR_LEX, frozenset(), pdict, hdict)
        assert spans == [(0, 1), (1, 2)]
        for seed in range(50):
            rng = Xoshiro256StarStar(seed)
            got = corrupt_sentence("吟行", spans, cfg, pdict, hdict, rng)
            assert got != "银行"
            assert pinyin_of(got, pdict) == base


class TestEligibility:
    def test_filter_and_homophone_requirements(self, real_dicts):
        pdict, hdict = real_dicts
        lex = Lexicon.from_words(["天气"])
        spans = eligible_word_spans("天气好", lex, frozenset(["天气"]), pdict, hdict)
        assert spans == [(2, 3)]

    def test_word_without_homophones_excluded(self):
        pdict, hdict = tiny_dicts({"jia3": "甲乙", "du2": "毒"})
        spans = eligible_word_spans("毒甲", CHAR_LEX, frozenset(), pdict, hdict)
        assert spans == [(1, 2)]


class TestSynthesizeSentences:
    def make(self, refs, cfg, dicts, **kw):
        pdict, hdict = dicts
        return synthesize_sentences(refs, cfg, CHAR_LEX, pdict, hdict, **kw)

    def test_prob_zero_never_selects(self, real_dicts):
        refs = random_corpus(real_dicts[1], sentences=50)
        out = self.make(refs, SynthesisConfig(sentence_error_prob=0.0), real_dicts)
        assert all(not o.selected and o.hypothesis == o.reference for o in out.outcomes)

    def test_prob_one_selects_all(self, real_dicts):
        refs = random_corpus(real_dicts[1], sentences=50)
        cfg = SynthesisConfig(sentence_error_prob=1.0, top_k_filter=0)
        out = self.make(refs, cfg, real_dicts)
        assert all(o.selected for o in out.outcomes)
        assert all(o.changed for o in out.outcomes if not o.flagged_no_eligible)

    def test_pinyin_invariance_and_substitution_only(self, real_dicts):
        pdict, hdict = real_dicts
        refs = random_corpus(hdict, sentences=300)
        cfg = SynthesisConfig(sentence_error_prob=1.0, top_k_filter=0, seed=11)
        out = self.make(refs, cfg, real_dicts)
        changed = [o for o in out.outcomes if o.changed]
        assert len(changed) >= 250
        for o in changed:
            assert len(o.hypothesis) == len(o.reference)
            ali = edit_align(o.reference, o.hypothesis)
            assert ali.insertions == 0 and ali.deletions == 0
            assert pinyin_of(o.hypothesis, pdict) == pinyin_of(o.reference, pdict)

    def test_filter_respected(self, real_dicts):
        pdict, hdict = real_dicts
        refs = random_corpus(hdict, sentences=200, length=6)
        cfg = SynthesisConfig(sentence_error_prob=1.0, top_k_filter=10, seed=5)
        out = self.make(refs, cfg, real_dicts)
        # every corrupted position must be a word outside the filter set
        for o in out.outcomes:
            for i, (a, b) in enumerate(zip(o.reference, o.hypothesis)):
                if a != b:
                    assert a not in out.filter_words

    def test_seed_determinism(self, real_dicts):
        refs = random_corpus(real_dicts[1], sentences=100)
        cfg = SynthesisConfig(sentence_error_prob=0.5, top_k_filter=0, seed=9)
        a = self.make(refs, cfg, real_dicts)
        b = self.make(refs, cfg, real_dicts)
        assert [o.hypothesis for o in a.outcomes] == [o.hypothesis for o in b.outcomes]
        different = self.make(
            refs, SynthesisConfig(sentence_error_prob=0.5, top_k_filter=0, seed=10), real_dicts
        )
        assert [o.hypothesis for o in a.outcomes] != [o.hypothesis for o in different.outcomes]

    def test_substream_isolation(self, real_dicts):
        # outcome at index i depends only on (seed, i), not on the other
        # sentences, given a pinned filter set
        refs = random_corpus(real_dicts[1], sentences=20)
        cfg = SynthesisConfig(sentence_error_prob=1.0, top_k_filter=0, seed=4)
        full = self.make(refs, cfg, real_dicts, filter_words=frozenset())
        swapped = list(refs)
        swapped[0] = refs[1] + refs[1]
        partial = self.make(swapped, cfg, real_dicts, filter_words=frozenset())
        for i in range(1, 20):
            assert partial.outcomes[i].hypothesis == full.outcomes[i].hypothesis

    def test_ids_attached(self, real_dicts):
        refs = random_corpus(real_dicts[1], sentences=3)
        out = self.make(refs, SynthesisConfig(), real_dicts, ids=["a", "b", "c"])
        assert [o.id for o in out.outcomes] == ["a", "b", "c"]
        with pytest.raises(ValueError):
            self.make(refs, SynthesisConfig(), real_dicts, ids=["a"])


class TestRecords:
    def test_default_tasks_yield_five_records(self, real_dicts):
        pdict, hdict = real_dicts
        refs = random_corpus(hdict, sentences=4)
        cfg = SynthesisConfig(sentence_error_prob=1.0, top_k_filter=0)
        out = synthesize_dataset(refs, cfg, CHAR_LEX, pdict, hdict)
        assert len(out.records) == 5 * len(refs)
        per_task = {}
        for r in out.records:
            per_task[r.task] = per_task.get(r.task, 0) + 1
        assert per_task[TaskKind.PINYIN_TO_TEXT] == 2 * len(refs)
        assert per_task[TaskKind.DIRECT] == len(refs)

    def test_prob_zero_correction_inputs_equal_targets(self, real_dicts):
        pdict, hdict = real_dicts
        refs = random_corpus(hdict, sentences=10)
        cfg = SynthesisConfig(sentence_error_prob=0.0)
        out = synthesize_dataset(refs, cfg, CHAR_LEX, pdict, hdict)
        for r in out.records:
            if r.task in (TaskKind.DIRECT, TaskKind.PYGEC):
                assert r.target in r.prompt

    def test_targets_and_prompts(self, real_dicts):
        pdict, hdict = real_dicts
        from pygec.synth import SentenceOutcome

        o = SentenceOutcome(index=0, id="x", reference="你好", hypothesis="你好",
                            selected=False)
        records = records_for_outcome(o, pdict)
        by_task = {}
        for r in records:
            by_task.setdefault(r.task, []).append(r)
        assert by_task[TaskKind.TEXT_TO_PINYIN][0].target == "ni3 hao3"
        assert "ni3 hao3" in by_task[TaskKind.PINYIN_TO_TEXT][0].prompt
        assert all(r.meta == "x" for r in records)
        assert all(r.target for r in records)

    def test_task_toggle(self, real_dicts):
        pdict, hdict = real_dicts
        refs = random_corpus(hdict, sentences=3)
        cfg = SynthesisConfig(tasks=(TaskKind.DIRECT,))
        out = synthesize_dataset(refs, cfg, CHAR_LEX, pdict, hdict)
        assert len(out.records) == len(refs)
        assert all(r.task is TaskKind.DIRECT for r in out.records)

    def test_manifest_counts_recomputed(self, real_dicts):
        pdict, hdict = real_dicts
        refs = random_corpus(hdict, sentences=80)
        cfg = SynthesisConfig(sentence_error_prob=0.5, top_k_filter=0, seed=2)
        out = synthesize_dataset(refs, cfg, CHAR_LEX, pdict, hdict)
        m = out.manifest()
        assert m["sentences"] == 80
        assert m["changed"] == sum(o.hypothesis != o.reference for o in out.outcomes)
        assert m["records"] == len(out.records)
        assert m["selected"] >= m["changed"]
