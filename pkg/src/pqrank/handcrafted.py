"""Per-sentence handcrafted features: surface, POS density, affect.

Features come out unscaled; downstream learners own any standardization.
All functions are pure and safe to run in parallel across sentences.
"""

from dataclasses import dataclass

import numpy as np

from .lexicons import TRACKED_TAGS, count_syllables, pos_tag

QUOTE_CHARS = ('"', "“", "”")

FLESCH_BASE = 206.835
FLESCH_PER_WORD = 1.015
FLESCH_PER_SYLLABLE = 84.6

DIFFICULT_MIN_LEN = 6

FEATURE_NAMES = (
    "char_length", "sentence_position", "quote_count", "flesch",
    "difficult_fraction",
    "pos_CD", "pos_JJ", "pos_MD", "pos_NN", "pos_NNP", "pos_PRP",
    "pos_RB", "pos_VB",
    "a_pos", "a_neg", "a_compound", "a_valence", "a_arousal",
    "a_concreteness",
)


@dataclass(frozen=True)
class HandcraftedVector:
    char_length: int
    sentence_position: float
    quote_count: int
    flesch: float
    difficult_fraction: float
    pos_density: dict
    a_pos: float
    a_neg: float
    a_compound: float
    a_valence: float
    a_arousal: float
    a_concreteness: float

    def as_array(self):
        """Feature values in FEATURE_NAMES order."""
        return np.array([
            self.char_length, self.sentence_position, self.quote_count,
            self.flesch, self.difficult_fraction,
            *(self.pos_density[t] for t in TRACKED_TAGS),
            self.a_pos, self.a_neg, self.a_compound,
            self.a_valence, self.a_arousal, self.a_concreteness,
        ], dtype=np.float64)


def _word_tokens(tokens):
    return [t for t in tokens if any(c.isalpha() for c in t)]


def surface_features(sentence, index, article_len, easy_words):
    """Length, relative position, quote count, reading-ease, difficult fraction."""
    if not 0 <= index < article_len:
        raise ValueError(f"sentence index {index} outside article of {article_len}")
    text = sentence.text
    char_length = len(text)
    position = index / (article_len - 1) if article_len > 1 else 0.0
    quote_count = sum(text.count(c) for c in QUOTE_CHARS)

    words = _word_tokens(sentence.tokens)
    if words:
        syllables = sum(count_syllables(w) for w in words)
        flesch = (FLESCH_BASE - FLESCH_PER_WORD * len(words)
                  - FLESCH_PER_SYLLABLE * (syllables / len(words)))
    else:
        flesch = FLESCH_BASE

    unique = {t.lower() for t in sentence.tokens if t.isalpha()}
    if unique:
        difficult = sum(1 for w in unique
                        if len(w) >= DIFFICULT_MIN_LEN and w not in easy_words)
        difficult_fraction = difficult / len(unique)
    else:
        difficult_fraction = 0.0
    return char_length, position, quote_count, flesch, difficult_fraction


def pos_features(sentence):
    """Density of each tracked POS tag among the sentence's tokens."""
    if not sentence.tokens:
        raise ValueError("pos_features requires a tokenized sentence")
    tags = sentence.pos_tags if sentence.pos_tags is not None else pos_tag(list(sentence.tokens))
    n = len(tags)
    return {t: sum(1 for tag in tags if tag == t) / n for t in TRACKED_TAGS}


def affect_features(sentence, lexicons):
    """Sentiment fractions/compound plus mean valence, arousal, concreteness.

    Affect means run over non-stopword word tokens; a sentence with none
    falls back to the lexicon defaults.
    """
    if not sentence.tokens:
        raise ValueError("affect_features requires a tokenized sentence")
    a_pos, a_neg, a_compound = lexicons.sentiment.score(sentence.tokens)

    content = [t for t in _word_tokens(sentence.tokens) if t not in lexicons.stopwords]
    if content:
        valence = sum(lexicons.valence.rating(t) for t in content) / len(content)
        arousal = sum(lexicons.arousal.rating(t) for t in content) / len(content)
        concreteness = sum(lexicons.concreteness.rating(t) for t in content) / len(content)
    else:
        valence = lexicons.valence.default_rating
        arousal = lexicons.arousal.default_rating
        concreteness = lexicons.concreteness.default_rating
    return a_pos, a_neg, a_compound, valence, arousal, concreteness


def extract_sentence(sentence, index, article_len, lexicons):
    char_length, position, quotes, flesch, difficult = surface_features(
        sentence, index, article_len, lexicons.easy_words)
    density = pos_features(sentence)
    a_pos, a_neg, a_compound, valence, arousal, concreteness = affect_features(
        sentence, lexicons)
    return HandcraftedVector(
        char_length=char_length, sentence_position=position, quote_count=quotes,
        flesch=flesch, difficult_fraction=difficult, pos_density=density,
        a_pos=a_pos, a_neg=a_neg, a_compound=a_compound,
        a_valence=valence, a_arousal=arousal, a_concreteness=concreteness)


def extract_all(article, lexicons):
    """One HandcraftedVector per sentence, in article order."""
    n = len(article.sentences)
    return [extract_sentence(s, i, n, lexicons) for i, s in enumerate(article.sentences)]


def feature_matrix(articles, lexicons):
    """Stack features for a corpus: (X, y, owners).

    owners[i] is the (article index, sentence index) behind row i.
    """
    rows, labels, owners = [], [], []
    for ai, art in enumerate(articles):
        for si, vec in enumerate(extract_all(art, lexicons)):
            rows.append(vec.as_array())
            labels.append(art.sentences[si].is_pq_source)
            owners.append((ai, si))
    X = np.vstack(rows) if rows else np.zeros((0, len(FEATURE_NAMES)))
    return X, np.array(labels, dtype=np.int64), owners
