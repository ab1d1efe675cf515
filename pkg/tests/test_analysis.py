import numpy as np
import pytest

from pqrank.analysis import (
    feature_distributions,
    probe_all,
    probe_dimension,
    probes_to_csv,
)
from pqrank.corpus import Article, Sentence, SyntheticSpec, gen_synthetic
from pqrank.embeddings import EmbeddingStore, hash_store


def planted_dim_corpus(n_articles=40, sents=16, dim=16, planted=5, seed=3,
                       marker="zephyrglyph"):
    """Corpus whose positives carry a marker token, plus a store where
    one dimension tracks the label."""
    spec = SyntheticSpec(n_articles=n_articles, sents_per_article=sents,
                         pos_rate=0.3)
    arts = gen_synthetic(spec, seed=seed)
    marked = []
    for art in arts:
        new_sents = []
        for s in art.sentences:
            if s.is_pq_source:
                tokens = (marker,) + s.tokens
                new_sents.append(Sentence(text=marker + " " + s.text, tokens=tokens,
                                          pos_tags=None, is_pq_source=True))
            else:
                new_sents.append(s)
        marked.append(Article(id=art.id, source=art.source,
                              sentences=tuple(new_sents)))
    store = hash_store(marked, dim=dim, seed=0)
    rows = store.rows.copy().astype(np.float64)
    rng = np.random.default_rng(seed + 1)
    labels = np.array([s.is_pq_source for a in marked for s in a.sentences], float)
    rows[:, planted] = 2.0 * labels + 0.5 * rng.normal(size=len(labels))
    store = EmbeddingStore(dim=dim, rows=rows.astype(np.float32), index=store.index)
    return marked, store


class TestFeatureDistributions:
    def test_negatives_massed_at_zero_quotes(self):
        spec = SyntheticSpec(n_articles=30, sents_per_article=10, pos_rate=0.3,
                             quote_prob_pos=1.0, quote_prob_neg=0.0)
        arts = gen_synthetic(spec, seed=9)
        hist = feature_distributions("quote_count", arts)
        assert hist.density_neg[0] == pytest.approx(1.0)
        assert hist.density_pos[0] == pytest.approx(0.0)

    def test_densities_sum_to_one(self):
        spec = SyntheticSpec(n_articles=25, sents_per_article=8, pos_rate=0.3,
                             catchy_prob_pos=0.5)
        arts = gen_synthetic(spec, seed=10)
        for feature in ("char_length", "flesch", "sentence_position"):
            hist = feature_distributions(feature, arts)
            assert hist.density_pos.sum() == pytest.approx(1.0, abs=1e-9)
            assert hist.density_neg.sum() == pytest.approx(1.0, abs=1e-9)

    def test_position_skew_recovered(self):
        spec = SyntheticSpec(n_articles=80, sents_per_article=16, pos_rate=0.25,
                             position_bias=1.0)
        arts = gen_synthetic(spec, seed=11)
        hist = feature_distributions("sentence_position", arts)
        centers = (hist.bin_edges[:-1] + hist.bin_edges[1:]) / 2
        first_quarter = centers <= 0.25
        pos_mass = hist.density_pos[first_quarter].sum()
        neg_mass = hist.density_neg[first_quarter].sum()
        assert pos_mass > neg_mass + 0.1

    def test_unknown_feature(self):
        spec = SyntheticSpec(n_articles=12, sents_per_article=6, pos_rate=0.3)
        arts = gen_synthetic(spec, seed=1)
        with pytest.raises(ValueError, match="unknown feature"):
            feature_distributions("quotiness", arts)


class TestProbeDimension:
    def test_planted_dimension_ranked_first_with_marker_term(self):
        arts, store = planted_dim_corpus()
        train, test = arts[:28], arts[28:]
        probes = probe_all(range(16), train, test, store, k=40)
        assert probes[0].dimension == 5
        assert probes[0].auc_avg > 0.9
        top_terms = [t for t, _ in probes[0].top_terms]
        assert "zephyrglyph" in top_terms

    def test_sign_flip_selects_opposite_band_same_terms(self):
        arts, store = planted_dim_corpus()
        train, test = arts[:28], arts[28:]
        probe = probe_dimension(5, train, test, store, k=40)

        flipped_rows = store.rows.copy()
        flipped_rows[:, 5] = -flipped_rows[:, 5]
        flipped = EmbeddingStore(dim=store.dim, rows=flipped_rows, index=store.index)
        probe_f = probe_dimension(5, train, test, flipped, k=40)

        assert probe.sign == -probe_f.sign
        assert [t for t, _ in probe.top_terms] == [t for t, _ in probe_f.top_terms]

    def test_band_sizes(self):
        arts, store = planted_dim_corpus(n_articles=20)
        test = arts[10:]
        n_test = sum(len(a.sentences) for a in test)
        k = 30
        assert n_test >= 4 * k
        import pqrank.analysis as analysis_mod
        captured = {}
        orig = analysis_mod._band_ngrams

        def spy(token_lists, stopwords):
            captured.setdefault("sizes", []).append(len(token_lists))
            return orig(token_lists, stopwords)

        analysis_mod._band_ngrams = spy
        try:
            probe_dimension(5, arts[:10], test, store, k=k)
        finally:
            analysis_mod._band_ngrams = orig
        assert captured["sizes"] == [k, 2 * k, k]

    def test_small_test_set_shrinks_k_with_warning(self):
        arts, store = planted_dim_corpus(n_articles=12)
        with pytest.warns(UserWarning, match="shrinking"):
            probe = probe_dimension(5, arts[:8], arts[8:], store, k=2000)
        assert probe.auc_avg > 0.5

    def test_constant_dimension_rejected(self):
        arts, store = planted_dim_corpus(n_articles=12)
        rows = store.rows.copy()
        rows[:, 2] = 1.0
        const_store = EmbeddingStore(dim=store.dim, rows=rows, index=store.index)
        with pytest.raises(ValueError, match="constant"):
            probe_dimension(2, arts[:8], arts[8:], const_store, k=10)

    def test_csv_output(self, tmp_path):
        arts, store = planted_dim_corpus(n_articles=16)
        probes = probe_all([4, 5], arts[:12], arts[12:], store, k=10)
        path = tmp_path / "probes.csv"
        probes_to_csv(probes, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "dim,auc_avg,sign,term,rank,weight"
        assert len(lines) > 2
