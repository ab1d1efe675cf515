"""Trained-model wrappers: one envelope format, one scoring interface.

Every model kind serializes to a JSON envelope with a format version and
scores articles through score_article(article, store). Models that need
an embedding store say so via needs_store; handing them a corpus without
one is a usage error surfaced as MismatchError.
"""

import base64
import json

import numpy as np

from . import classic_ml, neural
from .crosstask import scale_per_article
from .embeddings import StoreError, doc_embedding
from .handcrafted import FEATURE_NAMES, extract_all
from .lexicons import default_lexicons
from .ngram import NgramVocab, vectorize
from .summarizers import METHODS as SUMMARIZER_METHODS

ENVELOPE_VERSION = 1


class MismatchError(ValueError):
    """Model and supplied data do not fit together."""


class HandcraftedAdaBoostModel:
    kind = "handcrafted-adaboost"
    needs_store = False

    def __init__(self, booster, lexicons=None):
        self.booster = booster
        self.lexicons = lexicons or default_lexicons()

    def score_article(self, article, store=None):
        X = np.vstack([v.as_array() for v in extract_all(article, self.lexicons)])
        return self.booster.predict_proba_many(X)

    def to_payload(self):
        return {"booster": classic_ml.adaboost_to_dict(self.booster)}

    @classmethod
    def from_payload(cls, payload):
        return cls(classic_ml.adaboost_from_dict(payload["booster"]))


class SingleFeatureModel:
    """Ranks by one handcrafted feature, min-max scaled per article."""

    kind = "single-feature"
    needs_store = False

    def __init__(self, feature, lexicons=None):
        if feature not in FEATURE_NAMES:
            raise ValueError(f"unknown feature {feature!r}")
        self.feature = feature
        self.lexicons = lexicons or default_lexicons()

    def score_article(self, article, store=None):
        col = FEATURE_NAMES.index(self.feature)
        values = [v.as_array()[col] for v in extract_all(article, self.lexicons)]
        return scale_per_article(values)

    def to_payload(self):
        return {"feature": self.feature}

    @classmethod
    def from_payload(cls, payload):
        return cls(payload["feature"])


class NgramLogregModel:
    kind = "ngram-logreg"
    needs_store = False

    def __init__(self, vocab, linear):
        self.vocab = vocab
        self.linear = linear

    def score_article(self, article, store=None):
        X = np.vstack([vectorize(s.text, self.vocab) for s in article.sentences])
        return self.linear.predict_proba_many(X)

    def to_payload(self):
        return {
            "vocab": {
                "unit": self.vocab.unit, "n": self.vocab.n,
                "size_cap": self.vocab.size_cap, "lowercase": self.vocab.lowercase,
                "entries": sorted(self.vocab.entries.items(), key=lambda kv: kv[1]),
            },
            "linear": classic_ml.linear_to_dict(self.linear),
        }

    @classmethod
    def from_payload(cls, payload):
        v = payload["vocab"]
        vocab = NgramVocab(unit=v["unit"], n=v["n"],
                           entries={g: i for g, i in v["entries"]},
                           size_cap=v["size_cap"], lowercase=v["lowercase"])
        return cls(vocab, classic_ml.linear_from_dict(payload["linear"]))


class NeuralModel:
    kind = "neural"
    needs_store = True

    def __init__(self, net):
        self.net = net

    def score_article(self, article, store=None):
        if store is None:
            raise MismatchError("neural models need an embedding store")
        if store.dim != self.net.spec.input_dim:
            raise MismatchError(f"store dim {store.dim} != model input dim "
                                f"{self.net.spec.input_dim}")
        S = np.vstack([store.vector(article.id, i).astype(np.float64)
                       for i in range(len(article.sentences))])
        D = None
        if self.net.spec.uses_doc:
            doc = doc_embedding(store, article).vector
            D = np.tile(doc, (len(article.sentences), 1))
        return self.net.forward_batch(S, D, train=False)

    def to_payload(self):
        spec = self.net.spec
        return {
            "spec": {"architecture": spec.architecture, "depth": spec.depth,
                     "input_dim": spec.input_dim,
                     "initial_width": spec.initial_width,
                     "experts": spec.experts, "seed": spec.seed},
            "params": base64.b64encode(self.net.param_blob()).decode("ascii"),
        }

    @classmethod
    def from_payload(cls, payload):
        s = payload["spec"]
        spec = neural.NetSpec(architecture=s["architecture"], depth=s["depth"],
                              input_dim=s["input_dim"],
                              initial_width=s["initial_width"],
                              experts=s["experts"], seed=s["seed"])
        net = neural.build_net(spec)
        net.load_param_blob(base64.b64decode(payload["params"]))
        return cls(net)


class TransferModel:
    """External-task linear scorer over embeddings, scaled per article."""

    kind = "transfer"
    needs_store = True

    def __init__(self, task, weights, bias):
        self.task = task
        self.weights = np.asarray(weights, dtype=np.float64)
        self.bias = bias

    @classmethod
    def from_trained(cls, task, model):
        if task == "regression":
            return cls(task, model.weights, model.bias)
        # fold the standardizer into plain weights for scoring
        std = model.standardizer
        w = model.weights / std.stds
        b = model.bias - float((model.weights * std.means / std.stds).sum())
        return cls(task, w, b)

    def score_article(self, article, store=None):
        if store is None:
            raise MismatchError("transfer models need an embedding store")
        if store.dim != len(self.weights):
            raise MismatchError(f"store dim {store.dim} != model dim "
                                f"{len(self.weights)}")
        X = np.vstack([store.vector(article.id, i).astype(np.float64)
                       for i in range(len(article.sentences))])
        raw = X @ self.weights + self.bias
        return scale_per_article(raw)

    def to_payload(self):
        return {"task": self.task, "weights": self.weights.tolist(),
                "bias": float(self.bias)}

    @classmethod
    def from_payload(cls, payload):
        return cls(payload["task"], payload["weights"], payload["bias"])


class SummarizerModel:
    kind = "summarizer"
    needs_store = False

    def __init__(self, method, use_ranks=False):
        if method not in SUMMARIZER_METHODS:
            raise ValueError(f"unknown summarizer {method!r}")
        self.method = method
        self.use_ranks = use_ranks

    def score_article(self, article, store=None):
        scores = np.array(SUMMARIZER_METHODS[self.method](article).scores)
        if self.use_ranks:
            order = np.argsort(np.argsort(-scores, kind="stable"), kind="stable")
            scores = 1.0 - order / max(len(scores) - 1, 1)
        return scale_per_article(scores)

    def to_payload(self):
        return {"method": self.method, "use_ranks": self.use_ranks}

    @classmethod
    def from_payload(cls, payload):
        return cls(payload["method"], payload.get("use_ranks", False))


_MODEL_KINDS = {
    cls.kind: cls
    for cls in (HandcraftedAdaBoostModel, SingleFeatureModel, NgramLogregModel,
                NeuralModel, TransferModel, SummarizerModel)
}


def save_model(model, path):
    envelope = {"format_version": ENVELOPE_VERSION, "kind": model.kind,
                "payload": model.to_payload()}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(envelope, fh)


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        envelope = json.load(fh)
    version = envelope.get("format_version")
    if version != ENVELOPE_VERSION:
        raise MismatchError(f"unsupported model format version {version}")
    kind = envelope.get("kind")
    if kind not in _MODEL_KINDS:
        raise MismatchError(f"unknown model kind {kind!r}")
    return _MODEL_KINDS[kind].from_payload(envelope["payload"])


def require_store(model, store):
    if model.needs_store and store is None:
        raise MismatchError(f"model kind {model.kind!r} requires --store")
    return store


# --- training conveniences -----------------------------------------------

def train_handcrafted(articles, lexicons=None, n_estimators=100, max_depth=1):
    from .handcrafted import feature_matrix
    lexicons = lexicons or default_lexicons()
    X, y, _ = feature_matrix(articles, lexicons)
    booster = classic_ml.train_adaboost(X, y, n_estimators=n_estimators,
                                        base_max_depth=max_depth,
                                        class_weighting="balanced")
    return HandcraftedAdaBoostModel(booster, lexicons)


def train_ngram(articles, unit="char", n=2, size_cap=1000):
    from .ngram import fit_vocab, vectorize_many
    texts = [s.text for a in articles for s in a.sentences]
    labels = np.array([s.is_pq_source for a in articles for s in a.sentences],
                      dtype=np.int64)
    vocab = fit_vocab(texts, unit, n, size_cap=size_cap)
    X = vectorize_many(texts, vocab)
    linear = classic_ml.train_logreg(X, labels, class_weighting="balanced")
    return NgramLogregModel(vocab, linear)


def train_neural(train_articles, val_articles, store, spec, config=None):
    from .embeddings import sentence_matrix
    config = config or neural.TrainConfig()
    S_tr, D_tr, y_tr = sentence_matrix(store, train_articles)
    S_va, D_va, y_va = sentence_matrix(store, val_articles)
    net = neural.build_net(spec, dropout=config.dropout)
    use_doc = spec.uses_doc
    history = neural.train(net,
                           (S_tr, D_tr if use_doc else None, y_tr),
                           (S_va, D_va if use_doc else None, y_va),
                           config)
    return NeuralModel(net), history
