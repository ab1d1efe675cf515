import numpy as np
import pytest

from pqrank.corpus import Article, Sentence


def make_sentence(text, label=False, tags=None):
    from pqrank.lexicons import tokenize
    tokens = tuple(tokenize(text))
    return Sentence(text=text, tokens=tokens, pos_tags=tags, is_pq_source=label)


def make_article(art_id, texts, labels=None, source="test"):
    labels = labels or [False] * len(texts)
    sents = tuple(make_sentence(t, l) for t, l in zip(texts, labels))
    return Article(id=art_id, source=source, sentences=sents)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
