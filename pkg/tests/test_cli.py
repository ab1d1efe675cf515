import json
import os

import pytest

from pqrank.cli import EXIT_DATA, EXIT_NOINPUT, EXIT_OK, main


def run(argv):
    return main(argv)


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def gen_corpus(workdir, name="corpus.jsonl", extra=(), articles=30):
    rc = run(["gen-synthetic", "--articles", str(articles),
              "--sents-per-article", "8", "--pos-rate", "0.3",
              "--quote-prob-pos", "0.9", "--quote-prob-neg", "0.05",
              "--seed", "5", "--out", name, *extra])
    assert rc == EXIT_OK
    return workdir / name


class TestBasics:
    def test_help_exits_zero(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["eval", "--help"])
        assert exc.value.code == 0
        assert "usage" in capsys.readouterr().out

    def test_unknown_flag_usage_error(self, workdir):
        with pytest.raises(SystemExit) as exc:
            run(["eval", "--nonsense"])
        assert exc.value.code == 2

    def test_missing_corpus_exit_66(self, workdir):
        rc = run(["features", "--corpus", "nope.jsonl", "--out", "f.csv"])
        assert rc == EXIT_NOINPUT

    def test_gen_writes_manifest(self, workdir):
        gen_corpus(workdir)
        manifest = json.loads((workdir / "corpus.jsonl.manifest.json").read_text())
        assert manifest["tool"] == "pqrank"
        assert manifest["seed"] == 5
        assert "duration_s" in manifest

    def test_lexicons_validate(self, workdir, capsys):
        assert run(["lexicons", "validate"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "easy words" in out


class TestPipelineCommands:
    def test_features_csv(self, workdir):
        gen_corpus(workdir)
        assert run(["features", "--corpus", "corpus.jsonl",
                    "--out", "features.csv"]) == EXIT_OK
        header = (workdir / "features.csv").read_text().splitlines()[0]
        assert header.startswith("article_id,sentence_index,is_pq_source,char_length")

    def test_train_eval_single_feature(self, workdir, capsys):
        gen_corpus(workdir)
        assert run(["train-hc", "--corpus", "corpus.jsonl", "--feature",
                    "quote_count", "--out", "model.json"]) == EXIT_OK
        assert run(["eval", "--model", "model.json", "--corpus", "corpus.jsonl",
                    "--out", "report.csv"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "auc_avg=" in out
        lines = (workdir / "report.csv").read_text().splitlines()
        assert lines[0] == "article_id,auc,n_pos,n_neg"
        assert lines[-1].startswith("#auc_avg=")

    def test_end_to_end_ngram(self, workdir, capsys):
        gen_corpus(workdir)
        assert run(["train-ngram", "--corpus", "corpus.jsonl", "--unit", "char",
                    "--n", "2", "--vocab-size", "300",
                    "--out", "ngram.json"]) == EXIT_OK
        assert run(["eval", "--model", "ngram.json", "--corpus", "corpus.jsonl",
                    "--out", "report.csv"]) == EXIT_OK
        summary = (workdir / "report.csv").read_text().splitlines()[-1]
        auc_avg = float(summary.split("=")[1].split(",")[0])
        assert auc_avg > 0.6

    def test_rank_top(self, workdir):
        gen_corpus(workdir)
        run(["train-hc", "--corpus", "corpus.jsonl", "--feature", "quote_count",
             "--out", "model.json"])
        assert run(["rank", "--model", "model.json", "--corpus", "corpus.jsonl",
                    "--top", "1", "--out", "ranks.csv"]) == EXIT_OK
        lines = (workdir / "ranks.csv").read_text().splitlines()
        assert lines[0] == "article_id,rank,sentence_index,probability"
        assert len(lines) == 1 + 30

    def test_summarize(self, workdir):
        gen_corpus(workdir, articles=10)
        assert run(["summarize", "--method", "textrank", "--corpus", "corpus.jsonl",
                    "--threads", "1", "--out", "scores.csv"]) == EXIT_OK
        lines = (workdir / "scores.csv").read_text().splitlines()
        assert lines[0] == "article_id,sentence_index,score,method"
        assert len(lines) == 1 + 10 * 8

    def test_embed_check_and_train_nn(self, workdir, capsys):
        gen_corpus(workdir, extra=["--emb-out", "emb.pqemb", "--emb-dim", "16"],
                   articles=30)
        assert run(["embed-check", "--store", "emb.pqemb",
                    "--corpus", "corpus.jsonl"]) == EXIT_OK
        assert run(["train-nn", "--corpus", "corpus.jsonl", "--store", "emb.pqemb",
                    "--arch", "A", "--depth", "basic", "--epochs", "5",
                    "--out", "nn.json", "--seed", "3"]) == EXIT_OK
        assert run(["eval", "--model", "nn.json", "--corpus", "corpus.jsonl",
                    "--store", "emb.pqemb", "--out", "report.csv"]) == EXIT_OK

    def test_eval_neural_without_store_is_data_error(self, workdir):
        gen_corpus(workdir, extra=["--emb-out", "emb.pqemb", "--emb-dim", "16"])
        run(["train-nn", "--corpus", "corpus.jsonl", "--store", "emb.pqemb",
             "--arch", "A", "--epochs", "3", "--patience", "1",
             "--out", "nn.json"])
        rc = run(["eval", "--model", "nn.json", "--corpus", "corpus.jsonl",
                  "--out", "report.csv"])
        assert rc == EXIT_DATA

    def test_embed_check_uncovered_corpus(self, workdir):
        gen_corpus(workdir, extra=["--emb-out", "emb.pqemb"], articles=12)
        gen_corpus(workdir, name="other.jsonl", articles=14)
        rc = run(["embed-check", "--store", "emb.pqemb", "--corpus", "other.jsonl"])
        assert rc == EXIT_DATA

    def test_train_transfer(self, workdir):
        # labels with matching hash-store rows keyed by item ordinal
        import numpy as np
        from pqrank.corpus import Article, Sentence
        from pqrank.embeddings import hash_store, save_store
        from pqrank.lexicons import tokenize

        texts = [f"headline number {i} about {'sports' if i % 2 else 'finance'}"
                 for i in range(20)]
        with open("labels.csv", "w", encoding="utf-8") as fh:
            fh.write("text,label\n")
            for i, t in enumerate(texts):
                fh.write(f'"{t}",{i % 2}\n')
        arts = [Article(id=str(i), source="x",
                        sentences=(Sentence(text=t, tokens=tuple(tokenize(t)),
                                            pos_tags=None, is_pq_source=False),))
                for i, t in enumerate(texts)]
        store = hash_store(arts, dim=16, seed=0)
        save_store(store, "items.pqemb", "items.pqemb.idx")
        assert run(["train-transfer", "--task", "binary", "--labels", "labels.csv",
                    "--store", "items.pqemb", "--out", "tm.json"]) == EXIT_OK

    def test_analyze_dist(self, workdir):
        gen_corpus(workdir)
        assert run(["analyze", "dist", "--feature", "quote_count",
                    "--corpus", "corpus.jsonl", "--out", "dist.csv"]) == EXIT_OK
        header = (workdir / "dist.csv").read_text().splitlines()[0]
        assert header == "bin_left,bin_right,density_pos,density_neg"

    def test_analyze_dims(self, workdir):
        gen_corpus(workdir, extra=["--emb-out", "emb.pqemb", "--emb-dim", "8"],
                   articles=20)
        assert run(["analyze", "dims", "--corpus", "corpus.jsonl",
                    "--store", "emb.pqemb", "--dims", "0-7", "--k", "5",
                    "--out", "dims.csv"]) == EXIT_OK
        header = (workdir / "dims.csv").read_text().splitlines()[0]
        assert header == "dim,auc_avg,sign,term,rank,weight"


class TestDeterminism:
    def pipeline_once(self, tag):
        corpus = f"c{tag}.jsonl"
        model = f"m{tag}.json"
        report = f"r{tag}.csv"
        assert run(["gen-synthetic", "--articles", "25", "--sents-per-article",
                    "8", "--pos-rate", "0.3", "--quote-prob-pos", "0.9",
                    "--catchy-prob-pos", "0.5", "--seed", "11",
                    "--out", corpus]) == EXIT_OK
        assert run(["train-ngram", "--corpus", corpus, "--unit", "char",
                    "--n", "2", "--vocab-size", "200", "--out", model]) == EXIT_OK
        assert run(["eval", "--model", model, "--corpus", corpus,
                    "--out", report]) == EXIT_OK
        return (open(corpus, "rb").read(), open(model, "rb").read(),
                open(report, "rb").read())

    def test_identical_seeds_byte_identical_outputs(self, workdir):
        first = self.pipeline_once("a")
        second = self.pipeline_once("b")
        assert first == second


class TestConfigFile:
    def test_config_supplies_defaults_flags_win(self, workdir):
        (workdir / "pq.cfg").write_text(
            "articles = 12\nsents-per-article = 6\npos-rate = 0.3\n")
        rc = run(["gen-synthetic", "--config", "pq.cfg", "--articles", "9",
                  "--out", "c.jsonl", "--seed", "1"])
        assert rc == EXIT_OK
        lines = (workdir / "c.jsonl").read_text().splitlines()
        assert len(lines) == 9  # flag beat the config value

    def test_config_missing_file(self, workdir):
        rc = run(["gen-synthetic", "--config", "nope.cfg", "--articles", "5",
                  "--sents-per-article", "6", "--pos-rate", "0.3",
                  "--out", "c.jsonl"])
        assert rc == EXIT_NOINPUT
