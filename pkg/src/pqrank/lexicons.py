"""Affect/readability lexicons, tokenization, syllables, fallback POS tags.

Lexicon files are CSV (`word,rating`); word lists are one token per line.
Everything here is immutable after load and safe to share across threads.
"""

import csv
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

TRACKED_TAGS = ("CD", "JJ", "MD", "NN", "NNP", "PRP", "RB", "VB")
OTHER_TAG = "OTHER"

# Defaults used when a word is missing from the corresponding lexicon.
VALENCE_DEFAULT = 5.0
AROUSAL_DEFAULT = 4.0
CONCRETENESS_DEFAULT = 5.0


class LexiconError(ValueError):
    """Raised when a lexicon file is malformed."""


@dataclass(frozen=True)
class AffectLexicon:
    entries: dict
    default_rating: float
    name: str

    def rating(self, word):
        return self.entries.get(word.lower(), self.default_rating)

    def __contains__(self, word):
        return word.lower() in self.entries


@dataclass(frozen=True)
class WordList:
    words: frozenset

    def __contains__(self, word):
        return word.lower() in self.words

    def __len__(self):
        return len(self.words)


@dataclass(frozen=True)
class SentimentLexicon:
    """Word-polarity table with VADER-style compound normalization.

    Polarities lie in [-4, 4]. The sentence score sums token polarities
    and squashes with x / sqrt(x^2 + alpha).
    """

    entries: dict
    normalization_alpha: float = 15.0

    def polarity(self, word):
        return self.entries.get(word.lower(), 0.0)

    def score(self, tokens):
        """Return (a_pos, a_neg, a_compound) for a token sequence."""
        pos_mass = neg_mass = 0.0
        neutral = 0
        total_polarity = 0.0
        for tok in tokens:
            if not any(c.isalpha() for c in tok):
                continue
            p = self.polarity(tok)
            total_polarity += p
            if p > 0:
                pos_mass += p
            elif p < 0:
                neg_mass += -p
            else:
                neutral += 1
        denom = pos_mass + neg_mass + neutral
        a_pos = pos_mass / denom if denom else 0.0
        a_neg = neg_mass / denom if denom else 0.0
        compound = total_polarity / math.sqrt(
            total_polarity * total_polarity + self.normalization_alpha)
        return a_pos, a_neg, compound


@dataclass(frozen=True)
class Lexicons:
    """The bundle consumed by feature extraction."""

    valence: AffectLexicon
    arousal: AffectLexicon
    concreteness: AffectLexicon
    sentiment: SentimentLexicon
    easy_words: WordList
    stopwords: WordList


def load_affect_lexicon(path_or_file, default_rating, name):
    entries = {}
    close = False
    fh = path_or_file
    if isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__"):
        fh = open(path_or_file, encoding="utf-8")
        close = True
    try:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header[:2]] != ["word", "rating"]:
            raise LexiconError(f"{name}: expected 'word,rating' header")
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) < 2:
                raise LexiconError(f"{name}: row {row_no} needs word and rating")
            try:
                rating = float(row[1])
            except ValueError as exc:
                raise LexiconError(f"{name}: row {row_no} rating not numeric") from exc
            if not math.isfinite(rating):
                raise LexiconError(f"{name}: row {row_no} rating not finite")
            entries[row[0].strip().lower()] = rating
    finally:
        if close:
            fh.close()
    if not math.isfinite(default_rating):
        raise LexiconError(f"{name}: default rating not finite")
    return AffectLexicon(entries=entries, default_rating=default_rating, name=name)


def load_word_list(path_or_file):
    fh = path_or_file
    close = False
    if isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__"):
        fh = open(path_or_file, encoding="utf-8")
        close = True
    try:
        words = frozenset(w.strip().lower() for w in fh if w.strip())
    finally:
        if close:
            fh.close()
    if not words:
        raise LexiconError("word list is empty")
    return WordList(words=words)


def load_sentiment_lexicon(path_or_file, alpha=15.0):
    if alpha <= 0:
        raise LexiconError("sentiment alpha must be positive")
    lex = load_affect_lexicon(path_or_file, default_rating=0.0, name="sentiment")
    for word, rating in lex.entries.items():
        if not -4.0 <= rating <= 4.0:
            raise LexiconError(f"sentiment: {word!r} polarity {rating} outside [-4, 4]")
    return SentimentLexicon(entries=lex.entries, normalization_alpha=alpha)


def _data_file(name):
    return resources.files("pqrank").joinpath("data").joinpath(name)


@lru_cache(maxsize=1)
def default_lexicons():
    """Load the lexicon bundle shipped with the package."""
    with _data_file("valence.csv").open(encoding="utf-8") as fh:
        valence = load_affect_lexicon(fh, VALENCE_DEFAULT, "valence")
    with _data_file("arousal.csv").open(encoding="utf-8") as fh:
        arousal = load_affect_lexicon(fh, AROUSAL_DEFAULT, "arousal")
    with _data_file("concreteness.csv").open(encoding="utf-8") as fh:
        concreteness = load_affect_lexicon(fh, CONCRETENESS_DEFAULT, "concreteness")
    with _data_file("sentiment.csv").open(encoding="utf-8") as fh:
        sentiment = load_sentiment_lexicon(fh)
    with _data_file("easy_words.txt").open(encoding="utf-8") as fh:
        easy = load_word_list(fh)
    with _data_file("stopwords.txt").open(encoding="utf-8") as fh:
        stop = load_word_list(fh)
    return Lexicons(valence=valence, arousal=arousal, concreteness=concreteness,
                    sentiment=sentiment, easy_words=easy, stopwords=stop)


def lexicons_from_dir(dirpath):
    """Load a lexicon bundle from a user directory (same file names as bundled)."""
    import os
    p = lambda n: os.path.join(dirpath, n)
    return Lexicons(
        valence=load_affect_lexicon(p("valence.csv"), VALENCE_DEFAULT, "valence"),
        arousal=load_affect_lexicon(p("arousal.csv"), AROUSAL_DEFAULT, "arousal"),
        concreteness=load_affect_lexicon(p("concreteness.csv"), CONCRETENESS_DEFAULT,
                                         "concreteness"),
        sentiment=load_sentiment_lexicon(p("sentiment.csv")),
        easy_words=load_word_list(p("easy_words.txt")),
        stopwords=load_word_list(p("stopwords.txt")),
    )


# --- syllables ---------------------------------------------------------

_VOWELS = set("aeiouy")


def count_syllables(word):
    """Count syllables as contiguous vowel groups, minimum 1.

    A trailing silent 'e' (not '-le') drops one group. Non-alphabetic
    input counts as a single syllable.
    """
    w = word.lower()
    groups = 0
    prev_vowel = False
    for ch in w:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if groups > 1 and w.endswith("e") and not w.endswith("le") and w[-2] not in _VOWELS:
        groups -= 1
    return max(groups, 1)


# --- tokenization ------------------------------------------------------

_TOKEN_RE = re.compile(r"\w+(?:['’-]\w+)*|[^\w\s]", re.UNICODE)


def tokenize(text):
    """Split text into word tokens and single punctuation tokens.

    Quotation marks come out as their own tokens; apostrophes and
    hyphens inside words are kept. Joining tokens with spaces and
    re-tokenizing reproduces the same token list.
    """
    return _TOKEN_RE.findall(text)


# --- fallback POS tagging ----------------------------------------------

_NUMBER_RE = re.compile(r"^\d[\d,.]*$")

# Suffix rules fire only for words missing from the tag lexicon; ordered
# by priority.
_SUFFIX_RULES = (
    ("ly", "RB"),
    ("ing", "VB"),
    ("ed", "VB"),
    ("ize", "VB"),
    ("ise", "VB"),
    ("tion", "NN"),
    ("sion", "NN"),
    ("ment", "NN"),
    ("ness", "NN"),
    ("ity", "NN"),
    ("ism", "NN"),
    ("ist", "NN"),
    ("ous", "JJ"),
    ("ful", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("ic", "JJ"),
    ("est", "JJ"),
)


@lru_cache(maxsize=1)
def _tag_lexicon():
    table = {}
    with _data_file("tagger_lexicon.csv").open(encoding="utf-8") as fh:
        reader = csv.reader(fh)
        next(reader)  # header
        for row in reader:
            if len(row) >= 2:
                table[row[0]] = row[1]
    return table


def pos_tag(tokens):
    """Tag tokens with the closed set CD/JJ/MD/NN/NNP/PRP/RB/VB/OTHER.

    Lexicon lookup first, then capitalization (mid-sentence) for proper
    nouns, then suffix rules; unknown alphabetic words default to NN and
    anything non-alphabetic to OTHER.
    """
    if not tokens:
        raise ValueError("pos_tag requires a nonempty token list")
    lex = _tag_lexicon()
    tags = []
    for i, tok in enumerate(tokens):
        if _NUMBER_RE.match(tok):
            tags.append("CD")
            continue
        if not any(c.isalpha() for c in tok):
            tags.append(OTHER_TAG)
            continue
        low = tok.lower()
        tag = lex.get(low)
        if tag is None and tok[:1].isupper():
            # Capitalized and unknown: proper noun unless sentence-initial,
            # where capitalization is uninformative.
            tag = "NNP" if i > 0 else None
        if tag is None:
            for suffix, stag in _SUFFIX_RULES:
                if low.endswith(suffix) and len(low) > len(suffix) + 2:
                    tag = stag
                    break
        tags.append(tag or "NN")
    return tags
