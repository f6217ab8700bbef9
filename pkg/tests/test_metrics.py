"""Alignment and CER tests against an independent brute-force oracle."""

import functools

import pytest
from hypothesis import given, strategies as st

from pygec.metrics import (
    CaseStats,
    Normalization,
    case_stats,
    cer,
    edit_align,
    entity_recall,
    evaluate_corpus,
)
from pygec.corpus import Utterance
from pygec.rng import Xoshiro256StarStar


def oracle_edit_distance(a, b):
    """Memoized recursive edit distance, independent of the DP code."""

    @functools.lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        same = go(i + 1, j + 1) if a[i] == b[j] else 1 + go(i + 1, j + 1)
        return min(same, 1 + go(i + 1, j), 1 + go(i, j + 1))

    return go(0, 0)


def random_pair(rng, max_len=12, alphabet="abcd"):
    a = "".join(rng.choice(alphabet) for _ in range(rng.randbelow(max_len + 1)))
    b = "".join(rng.choice(alphabet) for _ in range(rng.randbelow(max_len + 1)))
    return a, b


class TestEditAlign:
    def test_identity(self):
        ali = edit_align("abc", "abc")
        assert (ali.substitutions, ali.deletions, ali.insertions, ali.matches) == (0, 0, 0, 3)

    def test_all_deletions(self):
        ali = edit_align("你好", "")
        assert (ali.substitutions, ali.deletions, ali.insertions) == (0, 2, 0)

    def test_all_insertions(self):
        ali = edit_align("", "你好")
        assert (ali.substitutions, ali.deletions, ali.insertions) == (0, 0, 2)

    def test_single_substitution(self):
        ali = edit_align("你好", "你号")
        assert (ali.substitutions, ali.deletions, ali.insertions, ali.matches) == (1, 0, 0, 1)

    def test_counts_tie_to_lengths(self):
        rng = Xoshiro256StarStar(2024)
        for _ in range(300):
            a, b = random_pair(rng)
            ali = edit_align(a, b)
            assert ali.substitutions + ali.deletions + ali.matches == len(a)
            assert ali.substitutions + ali.insertions + ali.matches == len(b)

    def test_oracle_equivalence_random_pairs(self):
        rng = Xoshiro256StarStar(99)
        for _ in range(1000):
            a, b = random_pair(rng)
            assert edit_align(a, b).distance == oracle_edit_distance(a, b)

    def test_replay_reconstructs_hypothesis(self):
        rng = Xoshiro256StarStar(5)
        for _ in range(300):
            a, b = random_pair(rng)
            ali = edit_align(a, b)
            assert "".join(ali.replay(a, b)) == b

    def test_distance_symmetric(self):
        # Individual op counts need not mirror: distinct minimal
        # alignments may trade a substitution for a delete+insert pair.
        rng = Xoshiro256StarStar(17)
        for _ in range(300):
            a, b = random_pair(rng)
            fw = edit_align(a, b)
            bw = edit_align(b, a)
            assert fw.distance == bw.distance
            assert fw.deletions - fw.insertions == len(a) - len(b)
            assert bw.deletions - bw.insertions == len(b) - len(a)

    def test_triangle_inequality_on_distances(self):
        rng = Xoshiro256StarStar(31)
        for _ in range(200):
            a, b = random_pair(rng)
            c, _ = random_pair(rng)
            dab = edit_align(a, b).distance
            dbc = edit_align(b, c).distance
            dac = edit_align(a, c).distance
            assert dac <= dab + dbc

    def test_token_sequences_not_just_strings(self):
        ali = edit_align(["ni3", "hao3"], ["ni3", "hao4"])
        assert ali.substitutions == 1 and ali.matches == 1


class TestCer:
    def test_identical(self):
        assert cer("同样的句子", "同样的句子") == 0.0

    def test_half(self):
        assert cer("你好", "你号") == 0.5

    def test_empty_reference_policy(self):
        assert cer("", "") == 0.0
        assert cer("", "abc") == 1.0

    def test_matches_oracle(self):
        rng = Xoshiro256StarStar(404)
        for _ in range(500):
            a, b = random_pair(rng)
            if not a:
                continue
            assert cer(a, b) == oracle_edit_distance(a, b) / len(a)


class TestEntityRecall:
    def test_present(self):
        assert entity_recall(["北京"], "我在北京工作") == 1.0

    def test_absent(self):
        assert entity_recall(["北京"], "上海") == 0.0

    def test_partial(self):
        assert entity_recall(["北京", "上海"], "只有北京") == 0.5

    def test_empty_is_undefined(self):
        assert entity_recall([], "任何文本") is None


class TestCaseStats:
    def test_all_unchanged(self):
        s = case_stats([0.1, 0.2], [0.1, 0.2])
        assert s == CaseStats(0.0, 0.0, 100.0)

    def test_split(self):
        s = case_stats([0.5, 0.5], [0.4, 0.6])
        assert s == CaseStats(50.0, 50.0, 0.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            case_stats([0.1], [0.1, 0.2])

    @given(st.lists(st.tuples(st.floats(0, 1), st.floats(0, 1)), min_size=1, max_size=50))
    def test_percentages_sum_to_100(self, pairs):
        before = [b for b, _ in pairs]
        after = [a for _, a in pairs]
        s = case_stats(before, after)
        assert abs(s.good_pct + s.bad_pct + s.unchanged_pct - 100.0) < 1e-9


class TestNormalization:
    def test_strips_whitespace_and_ascii_punct(self):
        n = Normalization()
        assert n.apply("你 好, world!") == "你好world"

    def test_keeps_cjk_punct(self):
        # Only ASCII punctuation is stripped; CJK punctuation stays.
        n = Normalization()
        assert n.apply("你好。") == "你好。"

    def test_disabled(self):
        n = Normalization(nfc=False, strip_whitespace=False, strip_ascii_punct=False)
        assert n.apply("a b.") == "a b."


class TestEvaluateCorpus:
    def make_corpus(self):
        return [
            Utterance(id="u1", reference="今天天气很好", hypothesis="今天天汽很好", entities=["天气"]),
            Utterance(id="u2", reference="我们去北京", hypothesis="我们去背景", entities=["北京"]),
            Utterance(id="u3", reference="没有错误", hypothesis="没有错误", entities=[]),
        ]

    def test_perfect_corrections(self):
        utts = self.make_corpus()
        corrected = {u.id: u.reference for u in utts}
        rep = evaluate_corpus(utts, corrected)
        assert rep.pooled_cer == 0.0
        assert rep.entity_recall == 1.0
        assert rep.cases.bad_pct == 0.0

    def test_identity_corrections_equal_baseline(self):
        utts = self.make_corpus()
        corrected = {u.id: u.hypothesis for u in utts}
        rep = evaluate_corpus(utts, corrected)
        assert rep.pooled_cer == rep.pooled_cer_baseline
        assert rep.cases.unchanged_pct == 100.0

    def test_pooled_is_not_mean(self):
        utts = [
            Utterance(id="a", reference="一二三四五六七八九十", hypothesis="一二三四五六七八九错"),
            Utterance(id="b", reference="十", hypothesis="错"),
        ]
        rep = evaluate_corpus(utts, {})
        # pooled: 2 errors / 11 chars; mean: (0.1 + 1.0) / 2
        assert rep.pooled_cer == pytest.approx(2 / 11)
        assert rep.mean_cer == pytest.approx(0.55)

    def test_recall_pools_over_entity_counts(self):
        utts = [
            Utterance(id="a", reference="北京上海", hypothesis="北京上海", entities=["北京", "上海"]),
            Utterance(id="b", reference="广州", hypothesis="杭州", entities=["广州"]),
        ]
        rep = evaluate_corpus(utts, {})
        assert rep.entity_recall == pytest.approx(2 / 3)
