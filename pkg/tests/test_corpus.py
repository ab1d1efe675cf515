import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqrank.corpus import (
    Article,
    CorpusError,
    Sentence,
    SyntheticSpec,
    class_balance,
    gen_synthetic,
    load_corpus,
    save_corpus,
    split_corpus,
)

from conftest import make_article


def write_lines(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")


def valid_record(art_id="a1"):
    return {
        "id": art_id,
        "source": "outlet",
        "sentences": [
            {"text": "Hello there.", "tokens": ["Hello", "there", "."],
             "pos_tags": None, "is_pq_source": False},
            {"text": "A bold claim.", "tokens": ["A", "bold", "claim", "."],
             "pos_tags": ["OTHER", "JJ", "NN", "OTHER"], "is_pq_source": True},
        ],
    }


class TestLoadCorpus:
    def test_two_records(self, tmp_path):
        path = tmp_path / "c.jsonl"
        write_lines(path, [valid_record("a1"), valid_record("a2")])
        arts = load_corpus(path)
        assert [a.id for a in arts] == ["a1", "a2"]
        assert arts[0].sentences[1].is_pq_source

    def test_bad_json_names_line(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(json.dumps(valid_record()) + "\n{oops\n", encoding="utf-8")
        with pytest.raises(CorpusError, match="line 2"):
            load_corpus(path)

    def test_tag_length_mismatch_names_article(self, tmp_path):
        rec = valid_record("artX")
        rec["sentences"][1]["pos_tags"] = ["JJ"]
        path = tmp_path / "c.jsonl"
        write_lines(path, [rec])
        with pytest.raises(CorpusError, match="artX"):
            load_corpus(path)

    def test_duplicate_id(self, tmp_path):
        path = tmp_path / "c.jsonl"
        write_lines(path, [valid_record("dup"), valid_record("dup")])
        with pytest.raises(CorpusError, match="duplicate"):
            load_corpus(path)

    def test_zero_sentences(self, tmp_path):
        path = tmp_path / "c.jsonl"
        write_lines(path, [{"id": "e1", "source": "s", "sentences": []}])
        with pytest.raises(CorpusError, match="no sentences"):
            load_corpus(path)


token_st = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\n"),
    min_size=1, max_size=8)
sentence_st = st.builds(
    lambda toks, tagged, label: Sentence(
        text=" ".join(toks), tokens=tuple(toks),
        pos_tags=tuple(["NN"] * len(toks)) if tagged else None,
        is_pq_source=label),
    st.lists(token_st, min_size=1, max_size=6), st.booleans(), st.booleans())
article_st = st.builds(
    lambda i, sents: Article(id=f"art-{i}", source="hyp", sentences=tuple(sents)),
    st.integers(0, 10**6), st.lists(sentence_st, min_size=1, max_size=5))


@settings(max_examples=50, deadline=None)
@given(st.lists(article_st, min_size=1, max_size=6, unique_by=lambda a: a.id))
def test_save_load_round_trip(tmp_path_factory, arts):
    path = tmp_path_factory.mktemp("rt") / "c.jsonl"
    save_corpus(arts, path)
    assert load_corpus(path) == list(arts)


class TestSplitCorpus:
    def test_sizes_100(self):
        arts = [make_article(f"a{i}", ["one two."]) for i in range(100)]
        sp = split_corpus(arts, seed=7)
        assert (len(sp.train), len(sp.validation), len(sp.test)) == (70, 10, 20)

    def test_full_scale_sizes(self):
        # 14628 articles must split 10239/1462/2927
        sent = Sentence(text="x.", tokens=("x", "."), is_pq_source=False)
        arts = [Article(id=f"a{i}", source="s", sentences=(sent,)) for i in range(14628)]
        sp = split_corpus(arts, seed=0)
        assert (len(sp.train), len(sp.validation), len(sp.test)) == (10239, 1462, 2927)

    def test_deterministic(self):
        arts = [make_article(f"a{i}", ["one two."]) for i in range(37)]
        a = split_corpus(arts, seed=3)
        b = split_corpus(arts, seed=3)
        assert [x.id for x in a.train] == [x.id for x in b.train]
        assert [x.id for x in a.test] == [x.id for x in b.test]

    def test_partition_property(self):
        arts = [make_article(f"a{i}", ["one two."]) for i in range(53)]
        sp = split_corpus(arts, seed=11)
        ids = [a.id for part in (sp.train, sp.validation, sp.test) for a in part]
        assert sorted(ids) == sorted(a.id for a in arts)
        assert len(set(ids)) == len(ids)

    def test_too_few(self):
        arts = [make_article(f"a{i}", ["one two."]) for i in range(9)]
        with pytest.raises(CorpusError):
            split_corpus(arts, seed=1)


class TestClassBalance:
    def test_paper_scale_counts(self):
        pos_s = Sentence(text="p.", tokens=("p", "."), is_pq_source=True)
        neg_s = Sentence(text="n.", tokens=("n", "."), is_pq_source=False)
        art = Article(id="big", source="all",
                      sentences=(pos_s,) * 26591 + (neg_s,) * 680220)
        pos, neg, ratio = class_balance([art])
        assert (pos, neg) == (26591, 680220)
        assert ratio == pytest.approx(25.6, abs=0.05)

    def test_no_positives(self):
        art = make_article("a", ["one two.", "three four."])
        pos, neg, ratio = class_balance([art])
        assert (pos, neg) == (0, 2)
        assert math.isinf(ratio)

    def test_generator_rate(self):
        spec = SyntheticSpec(n_articles=500, sents_per_article=20, pos_rate=1 / 27)
        arts = gen_synthetic(spec, seed=99)
        _, _, ratio = class_balance(arts)
        assert 26 * 0.9 <= ratio <= 26 * 1.1


class TestGenSynthetic:
    def test_quote_plant_certain(self):
        spec = SyntheticSpec(n_articles=20, sents_per_article=10, pos_rate=0.3,
                             quote_prob_pos=1.0, quote_prob_neg=0.0)
        for art in gen_synthetic(spec, seed=5):
            for s in art.sentences:
                if s.is_pq_source:
                    assert s.text.count('"') >= 2
                else:
                    assert '"' not in s.text

    def test_doc_gating_flips_signal(self):
        spec = SyntheticSpec(n_articles=40, sents_per_article=12, pos_rate=0.3,
                             doc_gating=True, gate_plant_prob=1.0,
                             gate_leak_prob=0.0, doc_topic_rate=1.0)
        from pqrank.corpus import _TOPIC0
        topic0 = set(_TOPIC0)
        for art in gen_synthetic(spec, seed=6):
            is_type0 = any(t in topic0 for s in art.sentences for t in s.tokens)
            for s in art.sentences:
                has_quote = '"' in s.text
                if s.is_pq_source:
                    assert has_quote == is_type0
                else:
                    assert has_quote != is_type0

    def test_table_scale(self):
        spec = SyntheticSpec(n_articles=1000, sents_per_article=48, pos_rate=0.03)
        arts = gen_synthetic(spec, seed=1)
        assert len(arts) == 1000
        assert {len(a.sentences) for a in arts} == {48}

    def test_pure_function_of_seed(self):
        spec = SyntheticSpec(n_articles=5, sents_per_article=8, pos_rate=0.2,
                             quote_prob_pos=0.5, catchy_prob_pos=0.5)
        assert gen_synthetic(spec, seed=42) == gen_synthetic(spec, seed=42)
        assert gen_synthetic(spec, seed=42) != gen_synthetic(spec, seed=43)

    def test_invalid_rate(self):
        with pytest.raises(CorpusError):
            SyntheticSpec(n_articles=5, sents_per_article=8, pos_rate=0.0).validate()
        with pytest.raises(CorpusError):
            SyntheticSpec(n_articles=5, sents_per_article=8, pos_rate=1.0).validate()
        with pytest.raises(CorpusError):
            SyntheticSpec(n_articles=5, sents_per_article=8, pos_rate=0.5,
                          quote_prob_pos=1.5).validate()
