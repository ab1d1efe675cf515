"""Per-article ranking quality: AUC per article and its corpus mean.

The per-article AUC is the probability that a randomly drawn positive
sentence outranks a randomly drawn negative one from the same article,
with ties worth half credit. Articles without both classes have no
defined AUC; they are skipped and counted, never zero-scored.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ArticleEval:
    article_id: str
    inclusions: tuple
    predictions: tuple
    auc: float | None

    @property
    def n_pos(self):
        return sum(self.inclusions)

    @property
    def n_neg(self):
        return len(self.inclusions) - self.n_pos


@dataclass(frozen=True)
class EvalReport:
    articles: tuple
    auc_avg: float
    skipped: int

    def to_csv(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("article_id,auc,n_pos,n_neg\n")
            for ev in self.articles:
                auc = "" if ev.auc is None else f"{ev.auc:.12g}"
                fh.write(f"{ev.article_id},{auc},{ev.n_pos},{ev.n_neg}\n")
            fh.write(f"#auc_avg={self.auc_avg:.12g},skipped={self.skipped}\n")


def _average_ranks(values):
    """1-based ranks with ties sharing their average rank."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values), dtype=np.float64)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        # positions i..j (0-based) share ranks i+1..j+1
        ranks[order[i:j + 1]] = (i + j + 2) / 2.0
        i = j + 1
    return ranks


def auc(inclusions, predictions):
    """Mann-Whitney AUC of predictions against binary inclusions.

    Returns None when either class is absent. Ties between a positive
    and a negative earn credit 0.5; the rank-based computation agrees
    exactly with brute-force pair enumeration.
    """
    inc = np.asarray(inclusions)
    pred = np.asarray(predictions, dtype=np.float64)
    if inc.shape != pred.shape or inc.ndim != 1:
        raise ValueError(f"length mismatch: {inc.shape} vs {pred.shape}")
    if not np.isfinite(pred).all():
        raise ValueError("predictions must be finite")
    pos_mask = inc.astype(bool)
    n_pos = int(pos_mask.sum())
    n_neg = len(inc) - n_pos
    if n_pos == 0 or n_neg == 0:
        return None
    ranks = _average_ranks(pred)
    rank_sum = float(ranks[pos_mask].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def auc_avg(article_evals):
    """Unweighted mean AUC over articles where it is defined."""
    defined = [ev.auc for ev in article_evals if ev.auc is not None]
    if not defined:
        raise ValueError("no article has a defined AUC")
    return float(sum(defined) / len(defined))


def evaluate_predictions(per_article):
    """Build an EvalReport from (article_id, inclusions, predictions) triples."""
    evals = []
    for art_id, inc, pred in per_article:
        evals.append(ArticleEval(article_id=art_id, inclusions=tuple(int(v) for v in inc),
                                 predictions=tuple(float(v) for v in pred),
                                 auc=auc(inc, pred)))
    skipped = sum(1 for ev in evals if ev.auc is None)
    return EvalReport(articles=tuple(evals), auc_avg=auc_avg(evals), skipped=skipped)


def evaluate_model(model, articles, store=None):
    """Score every article with the model and assemble the report."""
    triples = []
    for art in articles:
        probs = score_article(model, art, store)
        triples.append((art.id, [s.is_pq_source for s in art.sentences], probs))
    return evaluate_predictions(triples)


def score_article(model, article, store=None):
    """Per-sentence probabilities from anything implementing the scorer
    protocol (a score_article method) or a plain callable."""
    scorer = getattr(model, "score_article", None)
    if scorer is not None:
        probs = scorer(article, store)
    elif callable(model):
        probs = model(article, store)
    else:
        raise TypeError(f"{type(model).__name__} cannot score articles")
    probs = np.asarray(probs, dtype=np.float64)
    if probs.shape != (len(article.sentences),):
        raise ValueError(f"model returned {probs.shape} scores for "
                         f"{len(article.sentences)} sentences")
    return probs


def rank_sentences(model, article, store=None):
    """Sentence indices ordered by descending probability.

    Ties break toward the lower index, so rankings are deterministic.
    Returns a list of (sentence_index, probability).
    """
    probs = score_article(model, article, store)
    order = sorted(range(len(probs)), key=lambda i: (-probs[i], i))
    return [(i, float(probs[i])) for i in order]
