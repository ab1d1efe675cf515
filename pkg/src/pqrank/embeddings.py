"""Sentence-embedding stores and document embeddings.

Stores hold one dense float32 row per sentence, keyed by (article id,
sentence index). The binary layout is little-endian: the magic bytes
"PQEMB1", a u32 row count, a u32 dimension, then the rows. A companion
tab-separated text file maps `article_id<TAB>sentence_index<TAB>row`.

Arithmetic on loaded vectors happens in double precision; storage stays
float32.
"""

import hashlib
import struct
from dataclasses import dataclass

import numpy as np

STORE_MAGIC = b"PQEMB1"
DEFAULT_DIM = 768


class StoreError(ValueError):
    """Raised for malformed or inconsistent embedding stores."""


@dataclass(frozen=True)
class EmbeddingStore:
    dim: int
    rows: np.ndarray                 # (n, dim) float32
    index: dict                      # (article_id, sentence_index) -> row

    def __len__(self):
        return len(self.rows)

    def has(self, article_id, sentence_index):
        return (article_id, sentence_index) in self.index

    def vector(self, article_id, sentence_index):
        key = (article_id, sentence_index)
        if key not in self.index:
            raise StoreError(f"no embedding for article {article_id!r} "
                             f"sentence {sentence_index}")
        return self.rows[self.index[key]]


@dataclass(frozen=True)
class DocEmbedding:
    article_id: str
    vector: np.ndarray               # (dim,) float64


def save_store(store, vectors_path, index_path):
    rows = np.ascontiguousarray(store.rows, dtype=np.float32)
    with open(vectors_path, "wb") as fh:
        fh.write(STORE_MAGIC)
        fh.write(struct.pack("<II", rows.shape[0], rows.shape[1]))
        fh.write(rows.tobytes())
    with open(index_path, "w", encoding="utf-8") as fh:
        for (art_id, sent_idx), row in sorted(store.index.items(),
                                              key=lambda kv: kv[1]):
            if "\t" in art_id or "\n" in art_id:
                raise StoreError(f"article id {art_id!r} cannot contain tabs or newlines")
            fh.write(f"{art_id}\t{sent_idx}\t{row}\n")


def load_store(vectors_path, index_path):
    """Read a store, checking magic, shape, finiteness, and index coverage."""
    with open(vectors_path, "rb") as fh:
        blob = fh.read()
    if blob[:6] != STORE_MAGIC:
        raise StoreError(f"{vectors_path}: bad magic, not an embedding store")
    if len(blob) < 14:
        raise StoreError(f"{vectors_path}: truncated header")
    n, dim = struct.unpack("<II", blob[6:14])
    expected = 14 + 4 * n * dim
    if len(blob) != expected:
        raise StoreError(f"{vectors_path}: truncated data "
                         f"(expected {expected} bytes, found {len(blob)})")
    rows = np.frombuffer(blob[14:], dtype="<f4").reshape(n, dim)
    if not np.isfinite(rows).all():
        raise StoreError(f"{vectors_path}: non-finite embedding value")

    index = {}
    referenced = set()
    with open(index_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise StoreError(f"{index_path}:{lineno}: expected 3 tab-separated fields")
            art_id, sent_idx, row = parts[0], int(parts[1]), int(parts[2])
            if not 0 <= row < n:
                raise StoreError(f"{index_path}:{lineno}: row {row} out of range")
            key = (art_id, sent_idx)
            if key in index:
                raise StoreError(f"{index_path}:{lineno}: duplicate entry for {key}")
            index[key] = row
            referenced.add(row)
    if len(referenced) != n:
        missing = next(i for i in range(n) if i not in referenced)
        raise StoreError(f"{index_path}: missing index entry for row {missing}")
    return EmbeddingStore(dim=dim, rows=rows, index=index)


def doc_embedding(store, article):
    """Mean of the article's sentence vectors, in double precision."""
    vectors = []
    for i in range(len(article.sentences)):
        key = (article.id, i)
        if key not in store.index:
            raise StoreError(f"article {article.id!r} sentence {i} not in store")
        vectors.append(store.rows[store.index[key]])
    stacked = np.asarray(vectors, dtype=np.float64)
    return DocEmbedding(article_id=article.id, vector=stacked.mean(axis=0))


def check_coverage(store, articles):
    """Return a list of problems; empty means the store covers the corpus."""
    problems = []
    for art in articles:
        for i in range(len(art.sentences)):
            if not store.has(art.id, i):
                problems.append(f"article {art.id!r} sentence {i} missing")
                if len(problems) >= 20:
                    problems.append("... (further problems suppressed)")
                    return problems
    return problems


# --- deterministic token-hash embeddings --------------------------------

def _token_vector(token, dim, salt):
    digest = hashlib.sha256(f"{salt}\x00{token}".encode("utf-8")).digest()
    seed = int.from_bytes(digest[:8], "little")
    rng = np.random.default_rng(seed)
    return rng.standard_normal(dim) / np.sqrt(dim)


def hash_store(articles, dim=64, seed=0):
    """Build a synthetic store: each sentence is the mean of fixed
    pseudo-random token vectors.

    Deterministic given (corpus, dim, seed); stands in for a learned
    encoder wherever a real store is unavailable.
    """
    cache = {}
    rows = []
    index = {}
    for art in articles:
        for i, sent in enumerate(art.sentences):
            acc = np.zeros(dim)
            toks = sent.tokens if sent.tokens else ("",)
            for tok in toks:
                low = tok.lower()
                if low not in cache:
                    cache[low] = _token_vector(low, dim, seed)
                acc += cache[low]
            index[(art.id, i)] = len(rows)
            rows.append((acc / len(toks)).astype(np.float32))
    return EmbeddingStore(dim=dim, rows=np.array(rows, dtype=np.float32), index=index)


def sentence_matrix(store, articles):
    """Sentence vectors, doc vectors, and labels aligned in corpus order.

    Returns (S, D, y) float64 arrays where D repeats each article's
    document embedding per sentence row.
    """
    sents, docs, labels = [], [], []
    for art in articles:
        doc = doc_embedding(store, art).vector
        for i, sent in enumerate(art.sentences):
            sents.append(store.rows[store.index[(art.id, i)]].astype(np.float64))
            docs.append(doc)
            labels.append(1 if sent.is_pq_source else 0)
    return (np.array(sents, dtype=np.float64),
            np.array(docs, dtype=np.float64),
            np.array(labels, dtype=np.int64))
