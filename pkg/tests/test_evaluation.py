import math

import numpy as np
import pytest

from pqrank.evaluation import (
    ArticleEval,
    auc,
    auc_avg,
    evaluate_predictions,
    rank_sentences,
)

from conftest import make_article


def brute_force_auc(inclusions, predictions):
    """Definitionally enumerate all (positive, negative) pairs."""
    pos = [p for p, i in zip(predictions, inclusions) if i]
    neg = [p for p, i in zip(predictions, inclusions) if not i]
    if not pos or not neg:
        return None
    credit = 0.0
    for p in pos:
        for q in neg:
            if p > q:
                credit += 1.0
            elif p == q:
                credit += 0.5
    return credit / (len(pos) * len(neg))


class TestAuc:
    def test_perfect_ordering(self):
        assert auc([1, 0, 0, 1], [0.9, 0.1, 0.2, 0.8]) == 1.0

    def test_tie_convention(self):
        assert auc([1, 0], [0.5, 0.5]) == 0.5

    def test_matches_brute_force_exactly(self, rng):
        for _ in range(300):
            n = int(rng.integers(2, 13))
            inc = rng.integers(0, 2, size=n)
            # quantized predictions inject plenty of ties
            pred = np.round(rng.random(n), 1)
            expected = brute_force_auc(inc, pred)
            got = auc(inc, pred)
            if expected is None:
                assert got is None
            else:
                assert got == expected

    def test_undefined_single_class(self):
        assert auc([1, 1], [0.1, 0.9]) is None
        assert auc([0, 0], [0.1, 0.9]) is None

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            auc([1, 0], [0.5])

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            auc([1, 0], [math.nan, 0.5])

    def test_complement_identity_without_ties(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 20))
            inc = rng.integers(0, 2, size=n)
            pred = rng.permutation(n).astype(float)  # all distinct
            a = auc(inc, pred)
            if a is None:
                continue
            assert auc(inc, -pred) == pytest.approx(1.0 - a)

    def test_invariant_under_increasing_transform(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 20))
            inc = rng.integers(0, 2, size=n)
            pred = rng.random(n)
            a = auc(inc, pred)
            b = auc(inc, np.exp(3 * pred) + 7)
            if a is None:
                assert b is None
            else:
                assert b == pytest.approx(a)

    def test_single_positive_rank_formula(self, rng):
        for _ in range(20):
            n = int(rng.integers(3, 15))
            pred = rng.permutation(n).astype(float)
            pos_at = int(rng.integers(0, n))
            inc = np.zeros(n, dtype=int)
            inc[pos_at] = 1
            r = int(np.sum(pred > pred[pos_at])) + 1  # rank from the top
            assert auc(inc, pred) == pytest.approx((n - r) / (n - 1))


class TestAucAvg:
    def ev(self, art_id, value):
        return ArticleEval(article_id=art_id, inclusions=(1, 0),
                           predictions=(0.9, 0.1), auc=value)

    def test_mean(self):
        assert auc_avg([self.ev("a", 1.0), self.ev("b", 0.0)]) == 0.5

    def test_order_invariant(self):
        evs = [self.ev("a", 0.2), self.ev("b", 0.9), self.ev("c", 0.7)]
        assert auc_avg(evs) == auc_avg(list(reversed(evs)))

    def test_all_undefined_rejected(self):
        evs = [self.ev("a", None), self.ev("b", None)]
        with pytest.raises(ValueError):
            auc_avg(evs)

    def test_skipped_counted_not_scored(self):
        report = evaluate_predictions([
            ("a", [1, 0], [0.9, 0.1]),
            ("b", [0, 0], [0.5, 0.5]),
        ])
        assert report.skipped == 1
        assert report.auc_avg == 1.0

    def test_per_article_versus_pooled(self):
        # Article "hot" has uniformly high scores, article "cold" uniformly
        # low ones. Within each article the ordering is perfect, so the
        # per-article average is 1.0. Pooling the four sentences gives pairs
        # (0.9>0.8)=1, (0.9>0.2)=1, (0.3>0.8)=0, (0.3>0.2)=1 -> 0.75.
        per_article = [
            ("hot", [1, 0], [0.9, 0.8]),
            ("cold", [1, 0], [0.3, 0.2]),
        ]
        report = evaluate_predictions(per_article)
        assert report.auc_avg == 1.0

        pooled_inc = [1, 0, 1, 0]
        pooled_pred = [0.9, 0.8, 0.3, 0.2]
        pooled = auc(pooled_inc, pooled_pred)
        assert pooled == 0.75
        assert report.auc_avg - pooled == pytest.approx(0.25)


class TestRankSentences:
    def quote_model(self):
        def scorer(article, store=None):
            return [float(s.text.count('"')) for s in article.sentences]
        return scorer

    def test_quoted_sentence_first(self):
        art = make_article("a", ["Plain words here.", 'He said "wow" loudly.',
                                 "Another plain one."])
        ranking = rank_sentences(self.quote_model(), art)
        assert ranking[0][0] == 1

    def test_ties_break_by_index(self):
        art = make_article("a", ["Same score.", "Same score.", "Same score."])
        ranking = rank_sentences(self.quote_model(), art)
        assert [idx for idx, _ in ranking] == [0, 1, 2]

    def test_invariant_under_monotone_transform(self):
        art = make_article("a", ['One "q".', "Two plain.", 'Three "q" "q".'])
        base = self.quote_model()

        def transformed(article, store=None):
            return [math.tanh(v) + 2 for v in base(article, store)]

        assert ([i for i, _ in rank_sentences(base, art)]
                == [i for i, _ in rank_sentences(transformed, art)])

    def test_report_csv_format(self, tmp_path):
        report = evaluate_predictions([
            ("a", [1, 0], [0.9, 0.1]),
            ("b", [1, 1], [0.5, 0.5]),
        ])
        path = tmp_path / "report.csv"
        report.to_csv(path)
        lines = path.read_text().splitlines()
        assert lines[0] == "article_id,auc,n_pos,n_neg"
        assert lines[1] == "a,1,1,1"
        assert lines[2] == "b,,2,0"
        assert lines[3].startswith("#auc_avg=1,skipped=1")
