"""Adapters that turn externally-trained scorers into pull-quote rankers.

External label sets (headline popularity regression, clickbait binary
labels) train a linear scorer over item embeddings; at inference the raw
scores of an article's sentences are min-max scaled into [0, 1] so they
read as probabilities. Scaling is per article, so these models never
compare sentences across articles.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .classic_ml import train_logreg

RIDGE_LAMBDA = 1e-3


@dataclass(frozen=True)
class ExternalLabelSet:
    items: tuple                 # (text, label) pairs
    task: str                    # "regression" | "binary"

    def validate(self):
        if self.task not in ("regression", "binary"):
            raise ValueError(f"unknown task {self.task!r}")
        if len(self.items) < 2:
            raise ValueError("need at least 2 labeled items")
        labels = [label for _, label in self.items]
        if not all(math.isfinite(v) for v in labels):
            raise ValueError("labels must be finite")
        if self.task == "binary":
            if set(labels) - {0.0, 1.0}:
                raise ValueError("binary labels must be 0 or 1")
            if len(set(labels)) < 2:
                raise ValueError("binary task needs both classes")

    def labels(self):
        return np.array([label for _, label in self.items], dtype=np.float64)


def load_labels(path, task):
    items = []
    with open(path, encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header[:2]] != ["text", "label"]:
            raise ValueError(f"{path}: expected 'text,label' header")
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) < 2:
                raise ValueError(f"{path}: row {row_no} needs text and label")
            try:
                items.append((row[0], float(row[1])))
            except ValueError as exc:
                raise ValueError(f"{path}: row {row_no} label not numeric") from exc
    labels = ExternalLabelSet(items=tuple(items), task=task)
    labels.validate()
    return labels


@dataclass(frozen=True)
class RidgeModel:
    weights: np.ndarray
    bias: float

    def predict_many(self, X):
        X = np.asarray(X, dtype=np.float64)
        return X @ self.weights + self.bias


def train_ridge(X, y, lam=RIDGE_LAMBDA):
    """Least squares with an L2 penalty on weights (bias unpenalized)."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    x_mean = X.mean(axis=0)
    y_mean = y.mean()
    Xc = X - x_mean
    yc = y - y_mean
    d = X.shape[1]
    w = np.linalg.solve(Xc.T @ Xc + lam * np.eye(d), Xc.T @ yc)
    bias = float(y_mean - x_mean @ w)
    return RidgeModel(weights=w, bias=bias)


def train_transfer(labels, item_vectors):
    """Fit the transfer scorer for an external label set.

    Regression tasks use ridge least squares; binary tasks use the
    logistic learner. item_vectors rows align with labels.items order.
    """
    labels.validate()
    X = np.asarray(item_vectors, dtype=np.float64)
    if len(X) != len(labels.items):
        raise ValueError(f"{len(X)} vectors for {len(labels.items)} items")
    y = labels.labels()
    if labels.task == "regression":
        return train_ridge(X, y)
    return train_logreg(X, y.astype(np.int64), class_weighting="balanced")


def scale_per_article(scores):
    """Min-max scale one article's raw scores into [0, 1].

    Constant scores map to 0.5 everywhere, which leaves such articles
    exactly at chance.
    """
    scores = np.asarray(scores, dtype=np.float64)
    if scores.size == 0:
        raise ValueError("need at least one sentence score")
    lo = scores.min()
    hi = scores.max()
    if hi == lo:
        return np.full(scores.shape, 0.5)
    return (scores - lo) / (hi - lo)


def popularity_from_feedback(records):
    """Average per-platform percentiles into one popularity score per item.

    records maps each item to {platform: value or None}. Items with no
    feedback on any platform are dropped. Returns a list of
    (item_index, score) for the surviving items. Percentiles use average
    ranks among the items that have data on that platform.
    """
    platforms = sorted({p for rec in records for p in rec})
    percentiles = [{} for _ in records]
    for platform in platforms:
        present = [(i, rec[platform]) for i, rec in enumerate(records)
                   if rec.get(platform) is not None]
        if len(present) < 2:
            continue
        values = np.array([v for _, v in present], dtype=np.float64)
        n = len(values)
        for (i, v) in present:
            below = float(np.sum(values < v))
            ties = float(np.sum(values == v)) - 1.0
            percentiles[i][platform] = (below + 0.5 * ties) / (n - 1)
    out = []
    for i, per in enumerate(percentiles):
        if per:
            out.append((i, float(sum(per.values()) / len(per))))
    return out
