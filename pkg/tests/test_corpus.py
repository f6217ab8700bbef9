"""Utterance I/O, greedy segmentation, and word-frequency counting."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pygec.corpus import (
    CorpusFormatError,
    Lexicon,
    Utterance,
    build_frequency_table,
    load_lexicon,
    load_utterances,
    save_utterances,
    segment,
    tokenize,
    top_k_words,
)

WORDS = ["今天", "天气", "不错", "我们", "银行", "工作", "学习"]


@pytest.fixture()
def lexicon():
    return Lexicon.from_words(WORDS)


class TestUtteranceIO:
    def test_roundtrip(self, tmp_path):
        utts = [
            Utterance(id="u1", reference="今天天气不错", hypothesis="今天天汽不错",
                      entities=["天气"], source="demo"),
            Utterance(id="u2", reference="我们在银行"),
        ]
        p = tmp_path / "utts.jsonl"
        save_utterances(utts, p)
        back = load_utterances(p)
        assert back == utts

    def test_missing_reference_rejected(self, tmp_path):
        p = tmp_path / "bad.jsonl"
        p.write_text(json.dumps({"id": "u1"}) + "\n", encoding="utf-8")
        with pytest.raises(CorpusFormatError, match=r"bad\.jsonl:1"):
            load_utterances(p)

    def test_duplicate_id_rejected(self, tmp_path):
        p = tmp_path / "bad.jsonl"
        rows = [{"id": "u1", "reference": "一"}, {"id": "u1", "reference": "二"}]
        p.write_text("".join(json.dumps(r) + "\n" for r in rows), encoding="utf-8")
        with pytest.raises(CorpusFormatError, match="duplicate"):
            load_utterances(p)

    def test_entity_substring_check_opt_in(self, tmp_path):
        p = tmp_path / "e.jsonl"
        row = {"id": "u1", "reference": "今天天气", "entities": ["银行"]}
        p.write_text(json.dumps(row) + "\n", encoding="utf-8")
        assert load_utterances(p)[0].entities == ["银行"]
        with pytest.raises(CorpusFormatError, match="not in reference"):
            load_utterances(p, validate_entities=True)

    def test_blank_lines_skipped(self, tmp_path):
        p = tmp_path / "u.jsonl"
        p.write_text('\n{"id": "u1", "reference": "一"}\n\n', encoding="utf-8")
        assert len(load_utterances(p)) == 1


class TestSegmentation:
    def test_greedy_longest_match(self, lexicon):
        assert segment("今天天气不错", lexicon) == ["今天", "天气", "不错"]

    def test_single_char_fallback(self, lexicon):
        assert segment("今天很好", lexicon) == ["今天", "很", "好"]

    def test_empty(self, lexicon):
        assert segment("", lexicon) == []

    @given(st.lists(st.sampled_from(WORDS + list("的了很好在")), max_size=20))
    def test_concatenation_identity(self, pieces):
        lex = Lexicon.from_words(WORDS)
        text = "".join(pieces)
        assert "".join(segment(text, lex)) == text

    def test_pre_segmented_tokenize(self, lexicon):
        assert tokenize("今天 天气", lexicon, pre_segmented=True) == ["今天", "天气"]

    def test_lexicon_file_load(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("# comment\n今天\n天气\n\n", encoding="utf-8")
        lex = load_lexicon(p)
        assert lex.words == frozenset(["今天", "天气"])
        assert lex.max_word_len == 2


class TestFrequency:
    def test_counts_match_manual_recount(self, lexicon):
        refs = ["今天天气不错", "今天我们工作", "工作工作"]
        table = build_frequency_table(refs, lexicon)
        manual = {}
        for r in refs:
            for w in segment(r, lexicon):
                manual[w] = manual.get(w, 0) + 1
        assert dict(table.counts) == manual
        assert table.total_words == sum(manual.values())

    def test_top_k_orders_by_count_then_word(self, lexicon):
        refs = ["工作工作", "今天天气", "不错不错"]
        table = build_frequency_table(refs, lexicon)
        top = top_k_words(table, 2)
        # 工作 and 不错 both occur twice; ties break lexicographically
        assert top == ["不错", "工作"]

    def test_top_k_larger_than_vocab(self, lexicon):
        table = build_frequency_table(["今天"], lexicon)
        assert top_k_words(table, 100) == ["今天"]

    def test_top_k_negative_rejected(self, lexicon):
        table = build_frequency_table(["今天"], lexicon)
        with pytest.raises(ValueError):
            top_k_words(table, -1)
