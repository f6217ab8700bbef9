"""Conversion and homophone-grouping behavior, including the shipped
dictionary."""

import pytest

from pygec.pinyin import (
    DictionaryError,
    HomophoneDictionary,
    PinyinDictionary,
    Syllable,
    bundled_dictionary_path,
    derive_homophone_dictionary,
    has_homophones,
    homophones_of,
    load_default_dictionaries,
    load_homophone_dictionary,
    load_pinyin_dictionary,
    parse_syllable,
    pinyin_of,
    render_pinyin,
    text_to_pinyin,
)


@pytest.fixture(scope="module")
def pdict():
    return load_pinyin_dictionary(bundled_dictionary_path())


@pytest.fixture(scope="module")
def hdict(pdict):
    return derive_homophone_dictionary(pdict)


class TestSyllable:
    def test_render_roundtrip(self):
        for text in ["a1", "hao3", "zhuang4", "me5"]:
            assert parse_syllable(text).render() == text

    @pytest.mark.parametrize("bad", ["", "hao", "hao0", "hao6", "HAO3", "h ao3", "好3"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(DictionaryError):
            parse_syllable(bad)

    def test_constructor_validates(self):
        with pytest.raises(ValueError):
            Syllable(base="ni", tone=0)
        with pytest.raises(ValueError):
            Syllable(base="", tone=3)


class TestConversion:
    def test_known_anchor(self, pdict):
        assert pinyin_of("你好", pdict) == "ni3 hao3"

    def test_one_syllable_per_char(self, pdict):
        for text in ["你好", "今天天气不错", "我们在银行工作"]:
            assert len(text_to_pinyin(text, pdict)) == len(text)

    def test_unknown_chars_pass_through(self, pdict):
        assert pinyin_of("A你B", pdict) == "A ni3 B"
        seq = text_to_pinyin("x你", pdict)
        assert seq.items[0] == ("x", None)

    def test_word_override_beats_primary(self, pdict):
        assert pinyin_of("行", pdict) == "xing2"
        assert pinyin_of("银行", pdict) == "yin2 hang2"
        assert pinyin_of("我在银行", pdict) == "wo3 zai4 yin2 hang2"

    def test_override_greedy_left_to_right(self, pdict):
        # 音乐 must win before 乐 falls back to its primary le4
        assert pinyin_of("音乐", pdict) == "yin1 yue4"
        assert pinyin_of("乐", pdict) == "le4"

    def test_empty_text(self, pdict):
        assert pinyin_of("", pdict) == ""


class TestLoading:
    def test_line_numbered_error(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_text("你\tni3\n好\thao33\n", encoding="utf-8")
        with pytest.raises(DictionaryError, match="bad.tsv:2"):
            load_pinyin_dictionary(p)

    def test_override_arity_checked(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_text("银行\tyin2\n", encoding="utf-8")
        with pytest.raises(DictionaryError, match="needs 2 readings"):
            load_pinyin_dictionary(p)

    def test_empty_is_error(self, tmp_path):
        p = tmp_path / "empty.tsv"
        p.write_text("# nothing here\n", encoding="utf-8")
        with pytest.raises(DictionaryError, match="empty"):
            load_pinyin_dictionary(p)

    def test_duplicate_rows_merge_in_order(self, tmp_path):
        p = tmp_path / "dup.tsv"
        p.write_text("行\txing2\n行\thang2\n行\txing2\n", encoding="utf-8")
        d = load_pinyin_dictionary(p)
        assert [s.render() for s in d.char_readings["行"]] == ["xing2", "hang2"]

    def test_comments_and_blanks_skipped(self, tmp_path):
        p = tmp_path / "c.tsv"
        p.write_text("# header\n\n你\tni3\n", encoding="utf-8")
        assert len(load_pinyin_dictionary(p)) == 1


class TestHomophones:
    def test_groups_share_primary_reading(self, pdict, hdict):
        for key, chars in hdict.by_syllable.items():
            for ch in chars:
                assert pdict.primary(ch).render() == key

    def test_excludes_self(self, pdict, hdict):
        assert "一" not in homophones_of("一", hdict, pdict)

    def test_tone_exact_separates_tones(self, pdict, hdict):
        # ma3 (马) and ma1 (妈) are distinct groups under tone-exact keys
        assert "妈" not in homophones_of("马", hdict, pdict)

    def test_toneless_merges_tones(self, pdict):
        loose = derive_homophone_dictionary(pdict, tone_exact=False)
        assert "妈" in homophones_of("马", loose, pdict)

    def test_unknown_char_has_none(self, pdict, hdict):
        assert homophones_of("X", hdict, pdict) == frozenset()
        assert not has_homophones("X", hdict, pdict)

    def test_shipped_dict_has_rich_groups(self, hdict):
        # synthesis needs enough multi-member groups to draw from
        rich = [g for g in hdict.by_syllable.values() if len(g) >= 2]
        assert len(rich) >= 300

    def test_explicit_file_load(self, tmp_path):
        p = tmp_path / "homo.tsv"
        p.write_text("shi4\t是事市\nshi1\t师诗\n", encoding="utf-8")
        h = load_homophone_dictionary(p)
        assert h.group(parse_syllable("shi4")) == frozenset("是事市")

    def test_toneless_file_load_merges(self, tmp_path):
        p = tmp_path / "homo.tsv"
        p.write_text("shi4\t是事\nshi1\t师诗\n", encoding="utf-8")
        h = load_homophone_dictionary(p, tone_exact=False)
        assert h.group(parse_syllable("shi2")) == frozenset("是事师诗")

    def test_derive_from_empty_rejected(self):
        with pytest.raises(DictionaryError):
            derive_homophone_dictionary(PinyinDictionary())


class TestDefaults:
    def test_bundled_load(self):
        pdict, hdict = load_default_dictionaries()
        assert len(pdict) > 2000
        assert hdict.tone_exact

    def test_homophone_swap_preserves_pinyin(self, pdict, hdict):
        # the invariant the synthesizer relies on, spot-checked here
        text = "今天天气不错"
        base = pinyin_of(text, pdict)
        swaps = 0
        for i, ch in enumerate(text):
            for other in sorted(homophones_of(ch, hdict, pdict)):
                mutated = text[:i] + other + text[i + 1 :]
                if pinyin_of(mutated, pdict) == base:
                    swaps += 1
                    break
        assert swaps >= 3
