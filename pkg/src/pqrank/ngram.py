"""Character and word n-gram count vectorization with a capped vocabulary."""

import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .lexicons import tokenize

UNITS = ("char", "word")


@dataclass(frozen=True)
class NgramVocab:
    unit: str
    n: int
    entries: dict  # n-gram -> dense column index
    size_cap: int = 1000
    lowercase: bool = True

    def __len__(self):
        return len(self.entries)


def _ngrams(text, unit, n, lowercase):
    if lowercase:
        text = text.lower()
    if unit == "char":
        # raw string including spaces and punctuation, so quote-adjacent
        # patterns stay visible
        return [text[i:i + n] for i in range(len(text) - n + 1)]
    tokens = tokenize(text)
    return [" ".join(tokens[i:i + n]) for i in range(len(tokens) - n + 1)]


def fit_vocab(texts, unit, n, size_cap=1000, lowercase=True):
    """Build the vocabulary of the size_cap most frequent n-grams.

    Frequency ties break lexicographically, so fitting is deterministic.
    """
    if unit not in UNITS:
        raise ValueError(f"unit must be one of {UNITS}, got {unit!r}")
    if not 1 <= n <= 3:
        raise ValueError(f"n must be 1, 2, or 3, got {n}")
    if size_cap < 1:
        raise ValueError("size_cap must be positive")
    counts = Counter()
    seen_any = False
    for text in texts:
        seen_any = True
        counts.update(_ngrams(text, unit, n, lowercase))
    if not seen_any:
        raise ValueError("cannot fit a vocabulary on an empty corpus")
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:size_cap]
    entries = {gram: i for i, (gram, _) in enumerate(ranked)}
    return NgramVocab(unit=unit, n=n, entries=entries, size_cap=size_cap,
                      lowercase=lowercase)


def vectorize(text, vocab):
    """Count in-vocabulary n-grams of text; out-of-vocabulary ones are dropped."""
    vec = np.zeros(len(vocab.entries), dtype=np.float64)
    for gram in _ngrams(text, vocab.unit, vocab.n, vocab.lowercase):
        idx = vocab.entries.get(gram)
        if idx is not None:
            vec[idx] += 1.0
    return vec


def vectorize_many(texts, vocab):
    out = np.zeros((len(texts), len(vocab.entries)), dtype=np.float64)
    for i, text in enumerate(texts):
        out[i] = vectorize(text, vocab)
    return out


def save_vocab(vocab, path):
    """One JSON-escaped n-gram per line; line number is the column index."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"unit": vocab.unit, "n": vocab.n,
                             "size_cap": vocab.size_cap,
                             "lowercase": vocab.lowercase}) + "\n")
        ordered = sorted(vocab.entries.items(), key=lambda kv: kv[1])
        for gram, _ in ordered:
            fh.write(json.dumps(gram, ensure_ascii=False) + "\n")


def load_vocab(path):
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        entries = {}
        for i, line in enumerate(fh):
            line = line.rstrip("\n")
            if line:
                entries[json.loads(line)] = i
    return NgramVocab(unit=header["unit"], n=header["n"], entries=entries,
                      size_cap=header["size_cap"], lowercase=header["lowercase"])
