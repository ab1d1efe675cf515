"""Interpretability tooling: class-conditional feature histograms and a
term-level probe of individual embedding dimensions.

The probe trains a one-feature logistic model per dimension, splits test
sentences into top-k / middle-2k / bottom-k bands by that dimension,
buckets each band into one concatenated document, and surfaces the
highest tf-idf terms of the band that the model's coefficient sign says
drives the positive class.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .classic_ml import train_logreg
from .evaluation import auc
from .handcrafted import FEATURE_NAMES, extract_all
from .lexicons import default_lexicons

HISTOGRAM_BINS = 50
PROBE_K_DEFAULT = 2000
PROBE_TOP_TERMS = 10
NGRAM_RANGE = (1, 3)


@dataclass(frozen=True)
class HistogramPair:
    feature: str
    bin_edges: np.ndarray          # length bins+1
    density_pos: np.ndarray        # sums to 1
    density_neg: np.ndarray        # sums to 1

    def to_csv(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("bin_left,bin_right,density_pos,density_neg\n")
            for i in range(len(self.density_pos)):
                fh.write(f"{self.bin_edges[i]:.12g},{self.bin_edges[i + 1]:.12g},"
                         f"{self.density_pos[i]:.12g},{self.density_neg[i]:.12g}\n")


@dataclass(frozen=True)
class DimensionProbe:
    dimension: int
    sign: int                      # +1 / -1 coefficient sign
    auc_avg: float
    top_terms: tuple               # (term, tf-idf weight), best first


def feature_distributions(feature, articles, lexicons=None, bins=HISTOGRAM_BINS):
    """Class-normalized histograms of one handcrafted feature."""
    if feature not in FEATURE_NAMES:
        raise ValueError(f"unknown feature {feature!r}; choose from {FEATURE_NAMES}")
    if lexicons is None:
        lexicons = default_lexicons()
    col = FEATURE_NAMES.index(feature)
    pos_vals, neg_vals = [], []
    for art in articles:
        for sent, vec in zip(art.sentences, extract_all(art, lexicons)):
            value = vec.as_array()[col]
            (pos_vals if sent.is_pq_source else neg_vals).append(value)
    if not pos_vals or not neg_vals:
        raise ValueError("need at least one sentence of each class")
    all_vals = np.array(pos_vals + neg_vals)
    lo, hi = float(all_vals.min()), float(all_vals.max())
    if hi == lo:
        hi = lo + 1.0
    edges = np.linspace(lo, hi, bins + 1)
    pos_counts, _ = np.histogram(pos_vals, bins=edges)
    neg_counts, _ = np.histogram(neg_vals, bins=edges)
    return HistogramPair(feature=feature, bin_edges=edges,
                         density_pos=pos_counts / pos_counts.sum(),
                         density_neg=neg_counts / neg_counts.sum())


# --- tf-idf over the three band documents --------------------------------

def _band_ngrams(token_lists, stopwords):
    """Stopword-free lowercase word n-grams (1..3) for one band."""
    counts = {}
    for tokens in token_lists:
        content = [t.lower() for t in tokens
                   if any(c.isalpha() for c in t) and t.lower() not in stopwords]
        for n in range(NGRAM_RANGE[0], NGRAM_RANGE[1] + 1):
            for i in range(len(content) - n + 1):
                gram = " ".join(content[i:i + n])
                counts[gram] = counts.get(gram, 0) + 1
    return counts


def _tfidf_terms(band_counts):
    """Weights per band with sublinear tf, smoothed idf, l2 normalization."""
    n_docs = len(band_counts)
    df = {}
    for counts in band_counts:
        for term in counts:
            df[term] = df.get(term, 0) + 1
    weights = []
    for counts in band_counts:
        w = {term: (1.0 + math.log(tf)) * (math.log((1 + n_docs) / (1 + df[term])) + 1.0)
             for term, tf in counts.items()}
        norm = math.sqrt(sum(v * v for v in w.values()))
        if norm > 0:
            w = {term: v / norm for term, v in w.items()}
        weights.append(w)
    return weights


def probe_dimension(dimension, train_articles, test_articles, store,
                    k=PROBE_K_DEFAULT, top_terms=PROBE_TOP_TERMS,
                    stopwords=None):
    """Explain one embedding dimension via band term statistics."""
    if stopwords is None:
        stopwords = default_lexicons().stopwords

    def dim_values(articles):
        vals, labels, tokens = [], [], []
        for art in articles:
            for i, sent in enumerate(art.sentences):
                vals.append(float(store.vector(art.id, i)[dimension]))
                labels.append(1 if sent.is_pq_source else 0)
                tokens.append(sent.tokens)
        return np.array(vals), np.array(labels), tokens

    x_tr, y_tr, _ = dim_values(train_articles)
    if x_tr.max() == x_tr.min():
        raise ValueError(f"dimension {dimension} is constant on the training set")
    model = train_logreg(x_tr[:, None], y_tr, class_weighting="balanced")
    sign = 1 if model.weights[0] >= 0 else -1

    # test AUC averaged per article
    aucs = []
    for art in test_articles:
        inc = [s.is_pq_source for s in art.sentences]
        vals = [float(store.vector(art.id, i)[dimension])
                for i in range(len(art.sentences))]
        probs = model.predict_proba_many(np.array(vals)[:, None])
        a = auc(inc, probs)
        if a is not None:
            aucs.append(a)
    test_auc = float(np.mean(aucs)) if aucs else float("nan")

    x_te, _, tokens_te = dim_values(test_articles)
    n = len(x_te)
    if n < 4 * k:
        k = max(1, n // 4)
        warnings.warn(f"test set has {n} sentences; shrinking band size to k={k}")
    order = np.argsort(-x_te, kind="stable")
    top_band = order[:k]
    bottom_band = order[n - k:]
    mid_start = (n - 2 * k) // 2
    middle_band = order[mid_start:mid_start + 2 * k]

    bands = [_band_ngrams([tokens_te[i] for i in band], stopwords)
             for band in (top_band, middle_band, bottom_band)]
    weights = _tfidf_terms(bands)
    chosen = weights[0] if sign > 0 else weights[2]
    ranked = sorted(chosen.items(), key=lambda kv: (-kv[1], kv[0]))[:top_terms]
    return DimensionProbe(dimension=dimension, sign=sign, auc_avg=test_auc,
                          top_terms=tuple(ranked))


def probe_all(dimensions, train_articles, test_articles, store,
              k=PROBE_K_DEFAULT, top_terms=PROBE_TOP_TERMS, stopwords=None):
    """Probe many dimensions; results sorted by test AUC, best first."""
    probes = []
    with warnings.catch_warnings():
        warnings.simplefilter("once")
        for d in dimensions:
            probes.append(probe_dimension(d, train_articles, test_articles, store,
                                          k=k, top_terms=top_terms,
                                          stopwords=stopwords))
    return sorted(probes, key=lambda p: (-p.auc_avg, p.dimension))


def probes_to_csv(probes, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("dim,auc_avg,sign,term,rank,weight\n")
        for probe in probes:
            for rank, (term, weight) in enumerate(probe.top_terms, start=1):
                fh.write(f"{probe.dimension},{probe.auc_avg:.12g},{probe.sign},"
                         f"\"{term}\",{rank},{weight:.12g}\n")
