"""pqrank command line: every pipeline stage behind one binary.

Exit codes: 0 success, 2 usage, 65 bad/incompatible data, 66 missing
input file, 1 anything else. Commands that write outputs also write a
run manifest (command line, seeds, input digests, timing) next to the
primary output.
"""

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import __version__, neural, pipeline
from .analysis import feature_distributions, probe_all, probes_to_csv
from .corpus import (CorpusError, SyntheticSpec, gen_synthetic, load_corpus,
                     save_corpus, split_corpus)
from .crosstask import load_labels, train_transfer
from .embeddings import (StoreError, check_coverage, hash_store, load_store,
                         save_store)
from .handcrafted import FEATURE_NAMES, extract_all
from .lexicons import LexiconError, default_lexicons, lexicons_from_dir
from .evaluation import evaluate_model, rank_sentences
from .pipeline import MismatchError, TransferModel
from .summarizers import METHODS as SUMMARIZER_METHODS
from .summarizers import summarize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_DATA = 65
EXIT_NOINPUT = 66


def _sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def write_manifest(out_path, argv, args, inputs, started, config_path=None):
    manifest = {
        "tool": "pqrank",
        "version": __version__,
        "command": list(argv),
        "seed": getattr(args, "seed", None),
        "threads": getattr(args, "threads", None),
        "config_sha256": _sha256(config_path) if config_path else None,
        "input_sha256": {str(p): _sha256(p) for p in inputs if os.path.exists(p)},
        "started_unix": started,
        "duration_s": round(time.time() - started, 3),
    }
    with open(str(out_path) + ".manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=1)


def _load_lexicons(args):
    if getattr(args, "lexicon_dir", None):
        return lexicons_from_dir(args.lexicon_dir)
    return default_lexicons()


def _store_paths(path):
    return path, path + ".idx"


def _load_store_arg(path):
    vectors, index = _store_paths(path)
    return load_store(vectors, index)


def _resolve_threads(threads):
    return threads if threads and threads > 0 else (os.cpu_count() or 1)


_WORKER_METHOD = None


def _summarize_worker_init(method):
    global _WORKER_METHOD
    _WORKER_METHOD = method
    default_lexicons()  # warm the per-process cache


def _summarize_worker(article):
    return summarize(article, _WORKER_METHOD)


# --- commands --------------------------------------------------------------

def cmd_gen_synthetic(args, argv, config_path):
    started = time.time()
    spec = SyntheticSpec(
        n_articles=args.articles, sents_per_article=args.sents_per_article,
        pos_rate=args.pos_rate, quote_prob_pos=args.quote_prob_pos,
        quote_prob_neg=args.quote_prob_neg, catchy_prob_pos=args.catchy_prob_pos,
        catchy_prob_neg=args.catchy_prob_neg, doc_gating=args.doc_gating,
        gate_plant_prob=args.gate_plant_prob, gate_leak_prob=args.gate_leak_prob,
        doc_topic_rate=args.doc_topic_rate, position_bias=args.position_bias)
    articles = gen_synthetic(spec, seed=args.seed)
    save_corpus(articles, args.out)
    if args.emb_out:
        store = hash_store(articles, dim=args.emb_dim, seed=args.seed)
        save_store(store, *_store_paths(args.emb_out))
    write_manifest(args.out, argv, args, [], started, config_path)
    print(f"wrote {len(articles)} articles to {args.out}")
    return EXIT_OK


def cmd_features(args, argv, config_path):
    started = time.time()
    lexicons = _load_lexicons(args)
    articles = load_corpus(args.corpus)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("article_id,sentence_index,is_pq_source,"
                 + ",".join(FEATURE_NAMES) + "\n")
        for art in articles:
            for i, vec in enumerate(extract_all(art, lexicons)):
                vals = ",".join(f"{v:.12g}" for v in vec.as_array())
                label = int(art.sentences[i].is_pq_source)
                fh.write(f"{art.id},{i},{label},{vals}\n")
    write_manifest(args.out, argv, args, [args.corpus], started, config_path)
    print(f"wrote features for {len(articles)} articles to {args.out}")
    return EXIT_OK


def cmd_train_hc(args, argv, config_path):
    started = time.time()
    articles = load_corpus(args.corpus)
    if args.feature:
        model = pipeline.SingleFeatureModel(args.feature, _load_lexicons(args))
    else:
        model = pipeline.train_handcrafted(
            articles, _load_lexicons(args),
            n_estimators=args.estimators, max_depth=args.max_depth)
    pipeline.save_model(model, args.out)
    write_manifest(args.out, argv, args, [args.corpus], started, config_path)
    print(f"wrote {model.kind} model to {args.out}")
    return EXIT_OK


def cmd_train_ngram(args, argv, config_path):
    started = time.time()
    articles = load_corpus(args.corpus)
    model = pipeline.train_ngram(articles, unit=args.unit, n=args.n,
                                 size_cap=args.vocab_size)
    pipeline.save_model(model, args.out)
    write_manifest(args.out, argv, args, [args.corpus], started, config_path)
    print(f"wrote {args.unit}-{args.n} n-gram model to {args.out}")
    return EXIT_OK


def cmd_train_nn(args, argv, config_path):
    started = time.time()
    articles = load_corpus(args.corpus)
    store = _load_store_arg(args.store)
    split = split_corpus(articles, seed=args.seed)
    spec = neural.NetSpec(architecture=args.arch, depth=args.depth,
                          input_dim=store.dim,
                          initial_width=args.width, experts=args.experts,
                          seed=args.seed)
    config = neural.TrainConfig(max_epochs=args.epochs, patience=args.patience,
                                batch_size=args.batch_size)
    model, history = pipeline.train_neural(split.train, split.validation,
                                           store, spec, config)
    pipeline.save_model(model, args.out)
    write_manifest(args.out, argv, args,
                   [args.corpus, *_store_paths(args.store)], started, config_path)
    print(f"trained {spec.label()}: best epoch {history.best_epoch}, "
          f"val loss {min(history.val_loss):.6f}; wrote {args.out}")
    return EXIT_OK


def cmd_train_transfer(args, argv, config_path):
    started = time.time()
    labels = load_labels(args.labels, task=args.task)
    store = _load_store_arg(args.store)
    vectors = []
    for i in range(len(labels.items)):
        vectors.append(store.vector(str(i), 0).astype(np.float64))
    trained = train_transfer(labels, np.vstack(vectors))
    model = TransferModel.from_trained(args.task, trained)
    pipeline.save_model(model, args.out)
    write_manifest(args.out, argv, args,
                   [args.labels, *_store_paths(args.store)], started, config_path)
    print(f"wrote {args.task} transfer model to {args.out}")
    return EXIT_OK


def cmd_summarize(args, argv, config_path):
    started = time.time()
    articles = load_corpus(args.corpus)
    threads = _resolve_threads(args.threads)
    if threads > 1 and len(articles) > 1:
        with ProcessPoolExecutor(max_workers=threads,
                                 initializer=_summarize_worker_init,
                                 initargs=(args.method,)) as pool:
            results = list(pool.map(_summarize_worker, articles, chunksize=8))
    else:
        results = [summarize(a, args.method) for a in articles]
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("article_id,sentence_index,score,method\n")
        for res in results:
            for i, score in enumerate(res.scores):
                fh.write(f"{res.article_id},{i},{score:.12g},{res.method}\n")
    write_manifest(args.out, argv, args, [args.corpus], started, config_path)
    print(f"wrote {args.method} scores for {len(articles)} articles to {args.out}")
    return EXIT_OK


def cmd_rank(args, argv, config_path):
    started = time.time()
    model = pipeline.load_model(args.model)
    articles = load_corpus(args.corpus)
    store = _load_store_arg(args.store) if args.store else None
    pipeline.require_store(model, store)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("article_id,rank,sentence_index,probability\n")
        for art in articles:
            ranking = rank_sentences(model, art, store)
            limit = args.top if args.top else len(ranking)
            for rank, (idx, prob) in enumerate(ranking[:limit], start=1):
                fh.write(f"{art.id},{rank},{idx},{prob:.12g}\n")
    inputs = [args.model, args.corpus]
    if args.store:
        inputs += list(_store_paths(args.store))
    write_manifest(args.out, argv, args, inputs, started, config_path)
    print(f"wrote rankings for {len(articles)} articles to {args.out}")
    return EXIT_OK


def cmd_eval(args, argv, config_path):
    started = time.time()
    model = pipeline.load_model(args.model)
    articles = load_corpus(args.corpus)
    store = _load_store_arg(args.store) if args.store else None
    pipeline.require_store(model, store)
    report = evaluate_model(model, articles, store)
    report.to_csv(args.out)
    inputs = [args.model, args.corpus]
    if args.store:
        inputs += list(_store_paths(args.store))
    write_manifest(args.out, argv, args, inputs, started, config_path)
    print(f"auc_avg={report.auc_avg:.6f} skipped={report.skipped} "
          f"articles={len(report.articles)}")
    return EXIT_OK


def cmd_analyze(args, argv, config_path):
    started = time.time()
    articles = load_corpus(args.corpus)
    if args.what == "dist":
        hist = feature_distributions(args.feature, articles, _load_lexicons(args))
        hist.to_csv(args.out)
        write_manifest(args.out, argv, args, [args.corpus], started, config_path)
        print(f"wrote {args.feature} distributions to {args.out}")
        return EXIT_OK
    store = _load_store_arg(args.store)
    split = split_corpus(articles, seed=args.seed)
    if args.dims == "all":
        dims = range(store.dim)
    else:
        lo, _, hi = args.dims.partition("-")
        dims = range(int(lo), int(hi) + 1) if hi else [int(lo)]
    probes = probe_all(dims, split.train, split.test, store, k=args.k)
    probes_to_csv(probes, args.out)
    write_manifest(args.out, argv, args,
                   [args.corpus, *_store_paths(args.store)], started, config_path)
    best = probes[0]
    print(f"wrote {len(probes)} dimension probes to {args.out}; "
          f"best dim {best.dimension} auc_avg={best.auc_avg:.4f}")
    return EXIT_OK


def cmd_embed_check(args, argv, config_path):
    store = _load_store_arg(args.store)
    articles = load_corpus(args.corpus)
    problems = check_coverage(store, articles)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        print(f"store does not cover corpus: {len(problems)} problem(s)")
        return EXIT_DATA
    print(f"store covers corpus: {len(store)} rows, dim {store.dim}, "
          f"{len(articles)} articles")
    return EXIT_OK


def cmd_lexicons(args, argv, config_path):
    lex = lexicons_from_dir(args.dir) if args.dir else default_lexicons()
    print(f"valence entries: {len(lex.valence.entries)}")
    print(f"arousal entries: {len(lex.arousal.entries)}")
    print(f"concreteness entries: {len(lex.concreteness.entries)}")
    print(f"sentiment entries: {len(lex.sentiment.entries)}")
    print(f"easy words: {len(lex.easy_words)}")
    print(f"stopwords: {len(lex.stopwords)}")
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="global random seed")
    common.add_argument("--threads", type=int, default=0,
                        help="worker processes for article-parallel stages "
                             "(0 = all cores)")
    common.add_argument("--config", default=None,
                        help="flat key=value config file; flags win over it")

    parser = argparse.ArgumentParser(prog="pqrank",
                                     description="Rank article sentences by "
                                                 "pull-quote suitability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-synthetic", parents=[common],
                       help="generate a labeled synthetic corpus")
    p.add_argument("--articles", type=int, required=True)
    p.add_argument("--sents-per-article", type=int, required=True)
    p.add_argument("--pos-rate", type=float, required=True)
    p.add_argument("--quote-prob-pos", type=float, default=0.0)
    p.add_argument("--quote-prob-neg", type=float, default=0.0)
    p.add_argument("--catchy-prob-pos", type=float, default=0.0)
    p.add_argument("--catchy-prob-neg", type=float, default=0.0)
    p.add_argument("--doc-gating", action="store_true")
    p.add_argument("--gate-plant-prob", type=float, default=0.9)
    p.add_argument("--gate-leak-prob", type=float, default=0.05)
    p.add_argument("--doc-topic-rate", type=float, default=0.6)
    p.add_argument("--position-bias", type=float, default=0.0)
    p.add_argument("--out", required=True)
    p.add_argument("--emb-out", default=None,
                   help="also write a token-hash embedding store here")
    p.add_argument("--emb-dim", type=int, default=64)
    p.set_defaults(func=cmd_gen_synthetic)

    p = sub.add_parser("features", parents=[common],
                       help="export handcrafted features as CSV")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon-dir", default=None)
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("train-hc", parents=[common],
                       help="train the handcrafted-feature ranker")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--estimators", type=int, default=100)
    p.add_argument("--max-depth", type=int, default=1)
    p.add_argument("--feature", default=None, choices=list(FEATURE_NAMES),
                   help="rank by this single feature instead of boosting")
    p.add_argument("--lexicon-dir", default=None)
    p.set_defaults(func=cmd_train_hc)

    p = sub.add_parser("train-ngram", parents=[common],
                       help="train the n-gram logistic ranker")
    p.add_argument("--corpus", required=True)
    p.add_argument("--unit", choices=["char", "word"], default="char")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--vocab-size", type=int, default=1000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train_ngram)

    p = sub.add_parser("train-nn", parents=[common],
                       help="train a neural ranker on an embedding store")
    p.add_argument("--corpus", required=True)
    p.add_argument("--store", required=True)
    p.add_argument("--arch", choices=["A", "B", "C"], required=True)
    p.add_argument("--depth", choices=["basic", "deep"], default="basic")
    p.add_argument("--width", type=int, default=None)
    p.add_argument("--experts", type=int, default=None)
    p.add_argument("--epochs", type=int, default=100)
    p.add_argument("--patience", type=int, default=4)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train_nn)

    p = sub.add_parser("train-transfer", parents=[common],
                       help="train a cross-task transfer scorer")
    p.add_argument("--task", choices=["regression", "binary"], required=True)
    p.add_argument("--labels", required=True, help="CSV with text,label")
    p.add_argument("--store", required=True,
                   help="embedding store with one row per labeled item")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train_transfer)

    p = sub.add_parser("summarize", parents=[common],
                       help="score sentences with an extractive summarizer")
    p.add_argument("--method", choices=sorted(SUMMARIZER_METHODS), required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("rank", parents=[common],
                       help="rank sentences of each article with a model")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--store", default=None)
    p.add_argument("--top", type=int, default=0, help="keep only the top N")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate a model with per-article AUC")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--store", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("analyze", parents=[common],
                       help="feature distributions or dimension probes")
    p.add_argument("what", choices=["dims", "dist"])
    p.add_argument("--corpus", required=True)
    p.add_argument("--store", default=None)
    p.add_argument("--feature", default=None)
    p.add_argument("--dims", default="all", help='"all", "3", or "0-15"')
    p.add_argument("--k", type=int, default=2000)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon-dir", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("embed-check", parents=[common],
                       help="verify a store covers a corpus")
    p.add_argument("--store", required=True)
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_embed_check)

    p = sub.add_parser("lexicons", parents=[common],
                       help="validate lexicon files")
    p.add_argument("what", choices=["validate"])
    p.add_argument("--dir", default=None)
    p.set_defaults(func=cmd_lexicons)

    return parser


def _read_config(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line not key=value: {raw.strip()!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _inject_config(argv, config_values):
    """Append config pairs for flags the user did not pass explicitly."""
    out = list(argv)
    for key, value in config_values.items():
        opt = "--" + key.replace("_", "-")
        if opt not in argv:
            if value.lower() in ("true", "false"):
                if value.lower() == "true":
                    out.append(opt)
            else:
                out += [opt, value]
    return out


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    config_path = None
    if "--config" in argv:
        config_path = argv[argv.index("--config") + 1]
        try:
            config_values = _read_config(config_path)
        except FileNotFoundError:
            print(f"config file not found: {config_path}", file=sys.stderr)
            return EXIT_NOINPUT
        argv = _inject_config(argv, config_values)

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv, config_path)
    except FileNotFoundError as exc:
        print(f"missing input: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except (CorpusError, StoreError, LexiconError, MismatchError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
