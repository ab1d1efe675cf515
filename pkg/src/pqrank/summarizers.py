"""Unsupervised extractive scorers used as cross-task baselines.

All four are deterministic, article-local functions. The graph methods
return stationary probabilities of a sentence-similarity walk; the
selection methods (SumBasic, KLSum) return rank-derived scores where the
first pick scores highest.
"""

import math
from dataclasses import dataclass

import numpy as np

from .lexicons import default_lexicons

DAMPING = 0.85
POWER_TOL = 1e-6
POWER_MAX_ITERS = 1000
LEXRANK_THRESHOLD = 0.1
KL_EPSILON = 1e-3


@dataclass(frozen=True)
class SentenceScores:
    article_id: str
    scores: tuple
    method: str


def _alpha_tokens(sentence):
    return [t.lower() for t in sentence.tokens if t.isalpha()]


def _content_tokens(sentence, stopwords):
    return [t for t in _alpha_tokens(sentence) if t not in stopwords]


def stationary_scores(weights, damping=DAMPING, tol=POWER_TOL):
    """Power-iterate the teleporting random walk on a weighted graph.

    Rows with no outgoing weight distribute uniformly. Iteration stops
    when the L1 change drops below tol.
    """
    n = weights.shape[0]
    if n == 1:
        return np.array([1.0])
    row_sums = weights.sum(axis=1, keepdims=True)
    M = np.where(row_sums > 0, weights / np.where(row_sums > 0, row_sums, 1.0),
                 1.0 / n)
    p = np.full(n, 1.0 / n)
    for _ in range(POWER_MAX_ITERS):
        nxt = (1.0 - damping) / n + damping * (M.T @ p)
        if np.abs(nxt - p).sum() < tol:
            return nxt
        p = nxt
    return p


def textrank(article, damping=DAMPING):
    """Token-overlap similarity graph, normalized by log sentence lengths."""
    sents = [_alpha_tokens(s) for s in article.sentences]
    n = len(sents)
    if n == 1:
        return SentenceScores(article_id=article.id, scores=(1.0,), method="textrank")
    sets = [set(s) for s in sents]
    W = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            denom = 0.0
            if len(sents[i]) > 1 and len(sents[j]) > 1:
                denom = math.log(len(sents[i])) + math.log(len(sents[j]))
            if denom > 0:
                W[i, j] = W[j, i] = len(sets[i] & sets[j]) / denom
    scores = stationary_scores(W, damping=damping)
    return SentenceScores(article_id=article.id, scores=tuple(float(v) for v in scores),
                          method="textrank")


def _tfidf_rows(token_lists):
    vocab = sorted({t for toks in token_lists for t in toks})
    col = {t: i for i, t in enumerate(vocab)}
    n = len(token_lists)
    tf = np.zeros((n, len(vocab)))
    for i, toks in enumerate(token_lists):
        for t in toks:
            tf[i, col[t]] += 1.0
    df = (tf > 0).sum(axis=0)
    idf = np.log(n / np.where(df > 0, df, 1))
    return tf * idf


def lexrank(article, threshold=LEXRANK_THRESHOLD, damping=DAMPING):
    """Cosine similarity of tf-idf sentence vectors, edges below the
    threshold dropped; threshold 0 keeps every cosine weight."""
    token_lists = [_alpha_tokens(s) for s in article.sentences]
    n = len(token_lists)
    if n == 1:
        return SentenceScores(article_id=article.id, scores=(1.0,), method="lexrank")
    X = _tfidf_rows(token_lists)
    norms = np.linalg.norm(X, axis=1)
    W = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if norms[i] > 0 and norms[j] > 0:
                cos = float(X[i] @ X[j]) / (norms[i] * norms[j])
                if cos >= threshold and cos > 0:
                    W[i, j] = W[j, i] = cos
    scores = stationary_scores(W, damping=damping)
    return SentenceScores(article_id=article.id, scores=tuple(float(v) for v in scores),
                          method="lexrank")


def _rank_scores(order, n):
    # first pick gets (n-1)/n, last pick 0
    scores = [0.0] * n
    for rank, idx in enumerate(order, start=1):
        scores[idx] = (n - rank) / n
    return scores


def sumbasic(article, stopwords=None, _trace=None):
    """Iterative average-word-probability selection; picked words get
    their probability squared so repeats lose appeal."""
    if stopwords is None:
        stopwords = default_lexicons().stopwords
    sents = [_content_tokens(s, stopwords) for s in article.sentences]
    n = len(sents)
    total = sum(len(s) for s in sents)
    probs = {}
    for toks in sents:
        for t in toks:
            probs[t] = probs.get(t, 0.0) + 1.0 / total
    order = []
    remaining = list(range(n))
    while remaining:
        if _trace is not None:
            _trace.append(dict(probs))
        best_idx = None
        best_avg = -1.0
        for i in remaining:
            avg = (sum(probs[t] for t in sents[i]) / len(sents[i])) if sents[i] else 0.0
            if avg > best_avg + 1e-15:
                best_avg = avg
                best_idx = i
        order.append(best_idx)
        remaining.remove(best_idx)
        for t in set(sents[best_idx]):
            probs[t] = probs[t] ** 2
    return SentenceScores(article_id=article.id,
                          scores=tuple(_rank_scores(order, n)), method="sumbasic")


def kl_from_counts(doc_counts, summary_counts, vocab, epsilon=KL_EPSILON):
    """KL(document distribution || summary distribution), both smoothed
    with epsilon over the document vocabulary."""
    doc_total = sum(doc_counts.values())
    sum_total = sum(summary_counts.values())
    v = len(vocab)
    kl = 0.0
    for w in vocab:
        p = (doc_counts.get(w, 0) + epsilon) / (doc_total + epsilon * v)
        q = (summary_counts.get(w, 0) + epsilon) / (sum_total + epsilon * v)
        kl += p * math.log(p / q)
    return kl


def klsum(article, stopwords=None, epsilon=KL_EPSILON, _trace=None):
    """Greedy selection minimizing KL(document || summary)."""
    if stopwords is None:
        stopwords = default_lexicons().stopwords
    sents = [_content_tokens(s, stopwords) for s in article.sentences]
    n = len(sents)
    doc_counts = {}
    for toks in sents:
        for t in toks:
            doc_counts[t] = doc_counts.get(t, 0) + 1
    vocab = sorted(doc_counts)
    order = []
    summary_counts = {}
    remaining = list(range(n))
    while remaining:
        best_idx = None
        best_kl = math.inf
        for i in remaining:
            trial = dict(summary_counts)
            for t in sents[i]:
                trial[t] = trial.get(t, 0) + 1
            kl = kl_from_counts(doc_counts, trial, vocab, epsilon)
            if kl < best_kl - 1e-15:
                best_kl = kl
                best_idx = i
        order.append(best_idx)
        remaining.remove(best_idx)
        for t in sents[best_idx]:
            summary_counts[t] = summary_counts.get(t, 0) + 1
        if _trace is not None:
            _trace.append(best_kl)
    return SentenceScores(article_id=article.id,
                          scores=tuple(_rank_scores(order, n)), method="klsum")


METHODS = {
    "textrank": textrank,
    "lexrank": lexrank,
    "sumbasic": sumbasic,
    "klsum": klsum,
}


def summarize(article, method):
    if method not in METHODS:
        raise ValueError(f"unknown summarizer {method!r}; choose from {sorted(METHODS)}")
    return METHODS[method](article)
