"""Corpus data model: labeled articles, JSONL storage, splits, synthesis.

An article is an ordered list of sentences, each carrying its tokens,
optional POS tags, and a boolean marking whether an editor pulled a
quote from it. Corpora are stored one article per line as JSON.
"""

import json
import math
from dataclasses import dataclass

import numpy as np


class CorpusError(ValueError):
    """Raised for malformed corpus files or invalid article data."""


@dataclass(frozen=True)
class Sentence:
    text: str
    tokens: tuple
    pos_tags: tuple | None = None
    is_pq_source: bool = False

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if self.pos_tags is not None:
            object.__setattr__(self, "pos_tags", tuple(self.pos_tags))


@dataclass(frozen=True)
class Article:
    id: str
    source: str
    sentences: tuple

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))

    def labels(self):
        return [s.is_pq_source for s in self.sentences]


@dataclass(frozen=True)
class CorpusSplit:
    train: tuple
    validation: tuple
    test: tuple
    seed: int


def _check_sentence(sent_no, raw, article_id):
    if not isinstance(raw, dict):
        raise CorpusError(f"article {article_id!r}: sentence {sent_no} is not an object")
    text = raw.get("text")
    tokens = raw.get("tokens")
    tags = raw.get("pos_tags")
    label = raw.get("is_pq_source")
    if not isinstance(text, str) or not isinstance(tokens, list):
        raise CorpusError(f"article {article_id!r}: sentence {sent_no} missing text/tokens")
    if text and not tokens:
        raise CorpusError(f"article {article_id!r}: sentence {sent_no} has text but no tokens")
    if tags is not None and len(tags) != len(tokens):
        raise CorpusError(
            f"article {article_id!r}: sentence {sent_no} has {len(tags)} pos_tags "
            f"for {len(tokens)} tokens"
        )
    if not isinstance(label, bool):
        raise CorpusError(f"article {article_id!r}: sentence {sent_no} is_pq_source must be bool")
    return Sentence(text=text, tokens=tuple(tokens),
                    pos_tags=tuple(tags) if tags is not None else None,
                    is_pq_source=label)


def load_corpus(path):
    """Read a JSONL corpus file into a list of Articles.

    Raises CorpusError naming the offending line or article on malformed
    records, duplicate ids, or empty articles.
    """
    articles = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(rec, dict) or "id" not in rec:
                raise CorpusError(f"line {lineno}: record is not an article object")
            art_id = rec["id"]
            if not isinstance(art_id, str) or not art_id:
                raise CorpusError(f"line {lineno}: article id must be a nonempty string")
            if art_id in seen:
                raise CorpusError(f"line {lineno}: duplicate article id {art_id!r}")
            seen.add(art_id)
            raw_sents = rec.get("sentences")
            if not isinstance(raw_sents, list) or len(raw_sents) == 0:
                raise CorpusError(f"line {lineno}: article {art_id!r} has no sentences")
            sentences = [_check_sentence(i, s, art_id) for i, s in enumerate(raw_sents)]
            articles.append(Article(id=art_id, source=str(rec.get("source", "")),
                                    sentences=tuple(sentences)))
    return articles


def save_corpus(articles, path):
    """Write articles to a JSONL corpus file (inverse of load_corpus)."""
    with open(path, "w", encoding="utf-8") as fh:
        for art in articles:
            rec = {
                "id": art.id,
                "source": art.source,
                "sentences": [
                    {
                        "text": s.text,
                        "tokens": list(s.tokens),
                        "pos_tags": list(s.pos_tags) if s.pos_tags is not None else None,
                        "is_pq_source": s.is_pq_source,
                    }
                    for s in art.sentences
                ],
            }
            fh.write(json.dumps(rec, ensure_ascii=False, separators=(",", ":")))
            fh.write("\n")


def split_corpus(articles, seed):
    """Deterministic 70/10/20 split by article count.

    Sizes are floor(0.7n), floor(0.1n), and the remainder.
    """
    n = len(articles)
    if n < 10:
        raise CorpusError(f"need at least 10 articles to split, got {n}")
    order = np.random.default_rng(seed).permutation(n)
    n_train = int(math.floor(0.7 * n))
    n_val = int(math.floor(0.1 * n))
    train = tuple(articles[i] for i in order[:n_train])
    val = tuple(articles[i] for i in order[n_train:n_train + n_val])
    test = tuple(articles[i] for i in order[n_train + n_val:])
    return CorpusSplit(train=train, validation=val, test=test, seed=seed)


def class_balance(articles):
    """Count positive/negative sentences; ratio is negatives per positive."""
    pos = sum(s.is_pq_source for a in articles for s in a.sentences)
    neg = sum(1 for a in articles for s in a.sentences) - pos
    ratio = (neg / pos) if pos else math.inf
    return pos, neg, ratio


# --- synthetic corpora -------------------------------------------------

# Filler vocabulary for synthetic sentences. Deliberately plain words so the
# planted signals below stand out in both token and character space.
_FILLER = (
    "the a an and but so because while city council report group member "
    "plan year week market street school house water road game team player "
    "coach state local national public company worker office budget money "
    "meeting system service change review record board question answer idea "
    "story event season result number level issue detail moment reason "
    "support effort project program leader voter member family student "
    "teacher doctor driver visit travel build open close start finish move "
    "keep bring carry follow watch speak listen learn teach write read walk "
    "run sit stand turn wait stay leave arrive return grow fall rise work "
    "play live show tell ask give take make find call feel seem become"
).split()

# "Catchy" bank: emphatic vocabulary planted into sentences that carry the
# catchiness signal.
_CATCHY = (
    "stunning shocking explosive jawdropping outrageous thrilling dazzling "
    "astonishing scandalous gripping electrifying bombshell spectacular "
    "unbelievable heartstopping blistering whirlwind sensational staggering "
    "breathtaking riveting seismic jarring incendiary"
).split()

# Per-type topic banks for document-gated corpora; they give every article a
# type-specific vocabulary flavor readable from the document embedding.
_TOPIC0 = (
    "harbor vessel tide fishery dockside mariner lighthouse seaweed "
    "trawler saltwater buoy driftwood galleon kelp"
).split()
_TOPIC1 = (
    "orchard harvest meadow granary plough vineyard beehive haystack "
    "pasture windmill furrow silo scarecrow barley"
).split()

_QUOTE_CHAR = '"'

# Array views of the banks; rng.choice on a tuple re-wraps it every call.
_FILLER_A = np.array(_FILLER)
_CATCHY_A = np.array(_CATCHY)
_TOPIC0_A = np.array(_TOPIC0)
_TOPIC1_A = np.array(_TOPIC1)


@dataclass(frozen=True)
class SyntheticSpec:
    """Parameters for gen_synthetic.

    Signals planted into sentences:
      * quoted spans (quote_prob_pos / quote_prob_neg),
      * catchy vocabulary (catchy_prob_pos / catchy_prob_neg),
      * with doc_gating, a latent article type decides which of the two
        signals marks positives: type-0 articles mark positives with
        quotes and decorate negatives with catchy words, type-1 articles
        do the reverse. gate_plant_prob / gate_leak_prob control how
        cleanly; doc_topic_rate sprinkles type-specific topic words so
        the type is recoverable from document context.

    position_bias in [0,1] is the fraction of positives forced into the
    first quarter of their article.
    """

    n_articles: int
    sents_per_article: int
    pos_rate: float
    quote_prob_pos: float = 0.0
    quote_prob_neg: float = 0.0
    catchy_prob_pos: float = 0.0
    catchy_prob_neg: float = 0.0
    doc_gating: bool = False
    gate_plant_prob: float = 0.9
    gate_leak_prob: float = 0.05
    doc_topic_rate: float = 0.6
    position_bias: float = 0.0
    sent_len_low: int = 6
    sent_len_high: int = 14
    source: str = "synthetic"

    def validate(self):
        if self.n_articles < 1 or self.sents_per_article < 2:
            raise CorpusError("need n_articles >= 1 and sents_per_article >= 2")
        if not (0.0 < self.pos_rate < 1.0):
            raise CorpusError(f"pos_rate must lie in (0,1), got {self.pos_rate}")
        for name in ("quote_prob_pos", "quote_prob_neg", "catchy_prob_pos",
                     "catchy_prob_neg", "gate_plant_prob", "gate_leak_prob",
                     "doc_topic_rate", "position_bias"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise CorpusError(f"{name} must lie in [0,1], got {v}")
        if self.sent_len_low < 3 or self.sent_len_high < self.sent_len_low:
            raise CorpusError("sentence length bounds invalid")


def _detokenize(tokens):
    # Joins with spaces but keeps quote characters flush with the quoted
    # span so character n-grams can see patterns like '"s'.
    out = []
    open_quote = False
    for tok in tokens:
        if tok == _QUOTE_CHAR:
            if open_quote:
                out[-1] = out[-1] + _QUOTE_CHAR
            else:
                out.append(_QUOTE_CHAR)
            open_quote = not open_quote
        elif tok in {".", ",", "!", "?", ";", ":"}:
            if out:
                out[-1] = out[-1] + tok
            else:
                out.append(tok)
        elif out and out[-1].endswith(_QUOTE_CHAR) and open_quote:
            out[-1] = out[-1] + tok
        else:
            out.append(tok)
    return " ".join(out)


def _make_sentence(rng, spec, with_quote, with_catchy, topic_bank, label):
    length = int(rng.integers(spec.sent_len_low, spec.sent_len_high + 1))
    words = [str(w) for w in rng.choice(_FILLER_A, size=length)]
    if topic_bank is not None and rng.random() < spec.doc_topic_rate:
        for _ in range(2):
            pos = int(rng.integers(0, len(words) + 1))
            words.insert(pos, str(rng.choice(topic_bank)))
    if with_catchy:
        for _ in range(int(rng.integers(2, 4))):
            pos = int(rng.integers(0, len(words) + 1))
            words.insert(pos, str(rng.choice(_CATCHY_A)))
    if with_quote:
        span = [str(w) for w in rng.choice(_FILLER_A, size=int(rng.integers(2, 5)))]
        pos = int(rng.integers(0, len(words) + 1))
        words[pos:pos] = [_QUOTE_CHAR] + span + [_QUOTE_CHAR]
    words.append(".")
    return Sentence(text=_detokenize(words), tokens=tuple(words),
                    pos_tags=None, is_pq_source=label)


def gen_synthetic(spec, seed):
    """Generate a labeled corpus carrying the spec's planted signals.

    Pure function of (spec, seed).
    """
    spec.validate()
    rng = np.random.default_rng(seed)
    articles = []
    for art_no in range(spec.n_articles):
        n = spec.sents_per_article
        doc_type = int(rng.integers(0, 2)) if spec.doc_gating else None

        # Count from the configured rate; placement optionally skewed toward
        # the first quarter. Articles may end up with zero positives, which
        # the evaluator skips.
        n_pos = int(rng.binomial(n, spec.pos_rate))
        quarter = max(1, n // 4)
        pos_idx = set()
        if n_pos:
            weights = np.ones(n)
            weights[:quarter] += 3.0 * spec.position_bias
            picks = rng.choice(n, size=n_pos, replace=False, p=weights / weights.sum())
            pos_idx = {int(i) for i in picks}

        sentences = []
        for i in range(n):
            label = i in pos_idx
            if spec.doc_gating:
                marked = rng.random() < spec.gate_plant_prob
                leaked = rng.random() < spec.gate_leak_prob
                if doc_type == 0:
                    with_quote = marked if label else leaked
                    with_catchy = leaked if label else marked
                else:
                    with_catchy = marked if label else leaked
                    with_quote = leaked if label else marked
            else:
                with_quote = rng.random() < (spec.quote_prob_pos if label
                                             else spec.quote_prob_neg)
                with_catchy = rng.random() < (spec.catchy_prob_pos if label
                                              else spec.catchy_prob_neg)
            bank = None
            if spec.doc_gating:
                bank = _TOPIC0_A if doc_type == 0 else _TOPIC1_A
            sentences.append(_make_sentence(rng, spec, with_quote, with_catchy,
                                            bank, label))
        articles.append(Article(id=f"synth-{art_no:05d}", source=spec.source,
                                sentences=tuple(sentences)))
    return articles
