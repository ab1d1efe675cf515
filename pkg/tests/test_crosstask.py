import numpy as np
import pytest

from pqrank.crosstask import (
    ExternalLabelSet,
    load_labels,
    popularity_from_feedback,
    scale_per_article,
    train_ridge,
    train_transfer,
)


class TestTrainTransfer:
    def test_recovers_planted_linear_weight(self, rng):
        n, d = 200, 6
        X = rng.normal(size=(n, d))
        y = 2.5 * X[:, 3] + 0.7
        labels = ExternalLabelSet(items=tuple(("t", v) for v in y), task="regression")
        model = train_transfer(labels, X)
        assert model.weights[3] == pytest.approx(2.5, abs=1e-3)
        others = np.delete(model.weights, 3)
        assert np.max(np.abs(others)) < 1e-3
        assert model.bias == pytest.approx(0.7, abs=1e-3)

    def test_constant_labels_zero_weights(self, rng):
        X = rng.normal(size=(30, 4))
        labels = ExternalLabelSet(items=tuple(("t", 3.25) for _ in range(30)),
                                  task="regression")
        model = train_transfer(labels, X)
        assert np.max(np.abs(model.weights)) == 0.0
        assert model.bias == pytest.approx(3.25)

    def test_binary_routes_to_logistic(self, rng):
        X = np.vstack([rng.normal(-2, 0.5, size=(40, 2)),
                       rng.normal(2, 0.5, size=(40, 2))])
        y = [0.0] * 40 + [1.0] * 40
        labels = ExternalLabelSet(items=tuple(("t", v) for v in y), task="binary")
        model = train_transfer(labels, X)
        probs = model.predict_proba_many(X)
        assert probs[40:].min() > probs[:40].max()

    def test_binary_rejects_non_binary_labels(self):
        labels = ExternalLabelSet(items=(("a", 0.5), ("b", 1.0)), task="binary")
        with pytest.raises(ValueError):
            labels.validate()

    def test_vector_count_mismatch(self, rng):
        labels = ExternalLabelSet(items=(("a", 0.0), ("b", 1.0)), task="regression")
        with pytest.raises(ValueError):
            train_transfer(labels, rng.normal(size=(3, 2)))

    def test_load_labels_csv(self, tmp_path):
        p = tmp_path / "labels.csv"
        p.write_text('text,label\n"a headline",1\n"another",0\n', encoding="utf-8")
        labels = load_labels(p, task="binary")
        assert labels.items == (("a headline", 1.0), ("another", 0.0))


class TestScalePerArticle:
    def test_min_max(self):
        assert np.allclose(scale_per_article([2, 4, 6]), [0.0, 0.5, 1.0])

    def test_constant_maps_to_half(self):
        assert np.allclose(scale_per_article([3, 3]), [0.5, 0.5])

    def test_argmax_preserved(self, rng):
        for _ in range(20):
            scores = rng.normal(size=int(rng.integers(2, 15)))
            scaled = scale_per_article(scores)
            assert np.argmax(scaled) == np.argmax(scores)

    def test_positive_affine_invariance(self, rng):
        for _ in range(20):
            scores = rng.normal(size=10)
            a = float(rng.uniform(0.1, 5))
            b = float(rng.normal())
            assert np.allclose(scale_per_article(scores),
                               scale_per_article(a * scores + b))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            scale_per_article([])


class TestPopularity:
    def test_percentile_averaging_two_platforms(self):
        records = [{"A": float(i), "B": float((i + 1) % 11)} for i in range(11)]
        records[8] = {"A": 8.0, "B": 200.0}
        out = dict(popularity_from_feedback(records))
        # item 8: rank 8 of 11 on A -> 0.8; highest B value -> 1.0
        assert out[8] == pytest.approx((0.8 + 1.0) / 2)

    def test_hand_built_080_090(self):
        records = []
        for i in range(11):
            records.append({"fb": float(i), "li": float((i * 7) % 11)})
        # make item 0 land exactly at ranks 8 and 9 of 11
        records[0] = {"fb": 8.5, "li": 9.5}
        ranks_fb = sorted(r["fb"] for r in records)
        assert ranks_fb.index(8.5) == 8
        ranks_li = sorted(r["li"] for r in records)
        assert ranks_li.index(9.5) == 9
        out = dict(popularity_from_feedback(records))
        assert out[0] == pytest.approx((0.8 + 0.9) / 2)
        assert out[0] == pytest.approx(0.85)

    def test_items_without_feedback_dropped(self):
        records = [{"fb": 1.0}, {"fb": None}, {"fb": 3.0}]
        out = popularity_from_feedback(records)
        assert [i for i, _ in out] == [0, 2]

    def test_ties_share_percentile(self):
        records = [{"fb": 1.0}, {"fb": 2.0}, {"fb": 2.0}, {"fb": 3.0}]
        out = dict(popularity_from_feedback(records))
        assert out[1] == out[2] == pytest.approx((1 + 0.5) / 3)


class TestRidge:
    def test_matches_normal_equations(self, rng):
        X = rng.normal(size=(50, 3))
        y = rng.normal(size=50)
        model = train_ridge(X, y, lam=1e-3)
        # oracle: augmented closed form with explicit centering
        Xc = X - X.mean(axis=0)
        yc = y - y.mean()
        w = np.linalg.inv(Xc.T @ Xc + 1e-3 * np.eye(3)) @ Xc.T @ yc
        assert np.allclose(model.weights, w, atol=1e-10)
