"""Learners for feature-vector models: logistic regression, decision
trees, and AdaBoost.

Everything here is deterministic. The linear model standardizes its
inputs internally and trains with full-batch adaptive-moment updates;
trees split on weighted Gini impurity with fixed tie-breaking; AdaBoost
follows the discrete SAMME recipe for binary labels.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

L2_DEFAULT = 1.0          # lambda = 1 / C with C = 1.0
ADAM_STEP = 0.01
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8
LOGREG_TOL = 1e-6
LOGREG_MAX_EPOCHS = 1000


def balanced_weights(y):
    """Per-class multipliers n_samples / (2 * n_class) for binary labels."""
    y = np.asarray(y)
    n = len(y)
    n_pos = int(y.sum())
    n_neg = n - n_pos
    if n_pos == 0 or n_neg == 0:
        raise ValueError("both classes must be present")
    return {0: n / (2.0 * n_neg), 1: n / (2.0 * n_pos)}


def sample_weights_for(y, class_weighting):
    y = np.asarray(y)
    if class_weighting == "none":
        return np.ones(len(y))
    if class_weighting == "balanced":
        cw = balanced_weights(y)
        return np.where(y == 1, cw[1], cw[0])
    raise ValueError(f"unknown class weighting {class_weighting!r}")


@dataclass
class Standardizer:
    means: np.ndarray
    stds: np.ndarray          # degenerate columns stored with std 1
    active: np.ndarray        # False where the feature was constant

    @classmethod
    def fit(cls, X):
        means = X.mean(axis=0)
        stds = X.std(axis=0)
        active = stds > 0
        safe = np.where(active, stds, 1.0)
        return cls(means=means, stds=safe, active=active)

    def transform(self, X):
        Z = (X - self.means) / self.stds
        if not self.active.all():
            Z = Z * self.active
        return Z


@dataclass
class LinearModel:
    weights: np.ndarray
    bias: float
    standardizer: Standardizer
    l2_strength: float = L2_DEFAULT

    def decision(self, X):
        Z = self.standardizer.transform(np.atleast_2d(np.asarray(X, dtype=np.float64)))
        return Z @ self.weights + self.bias

    def predict_proba(self, x):
        """Probability of the positive class for one feature vector."""
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 1 or x.shape[0] != self.weights.shape[0]:
            raise ValueError(
                f"expected feature vector of length {self.weights.shape[0]}, "
                f"got shape {x.shape}")
        return float(_sigmoid(self.decision(x))[0])

    def predict_proba_many(self, X):
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.weights.shape[0]:
            raise ValueError("feature matrix width mismatch")
        return _sigmoid(self.decision(X))


def _sigmoid(z):
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _check_features(X):
    bad = ~np.isfinite(X)
    if bad.any():
        col = int(np.argwhere(bad.any(axis=0))[0][0])
        raise ValueError(f"non-finite value in feature column {col}")


def logreg_loss_grad(w, b, Z, y, sw, l2, active):
    """Weighted cross-entropy summed over samples plus (l2/2)*||w||^2.

    Returns (loss, grad_w, grad_b). Gradients for inactive (constant)
    features are zeroed so those weights stay put.
    """
    s = Z @ w + b
    # log(1 + exp(-|s|)) + max(s, 0) - s*y, numerically stable
    losses = np.maximum(s, 0.0) - s * y + np.log1p(np.exp(-np.abs(s)))
    loss = float(np.dot(sw, losses) + 0.5 * l2 * np.dot(w, w))
    residual = sw * (_sigmoid(s) - y)
    grad_w = Z.T @ residual + l2 * w
    if active is not None:
        grad_w = grad_w * active
    grad_b = float(residual.sum())
    return loss, grad_w, grad_b


def train_logreg(X, y, class_weighting="balanced", l2_strength=L2_DEFAULT,
                 max_epochs=LOGREG_MAX_EPOCHS, tol=LOGREG_TOL):
    """Fit a standardized L2 logistic regression with Adam.

    Stops when the loss improves by less than tol or max_epochs pass.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2 or len(X) != len(y):
        raise ValueError("X must be 2-D with one label per row")
    _check_features(X)
    if len(np.unique(y)) < 2:
        raise ValueError("training data contains a single class")
    sw = sample_weights_for(y, class_weighting)

    std = Standardizer.fit(X)
    Z = std.transform(X)
    active = std.active.astype(np.float64)

    w = np.zeros(X.shape[1])
    b = 0.0
    m_w = np.zeros_like(w)
    v_w = np.zeros_like(w)
    m_b = v_b = 0.0
    prev_loss = math.inf
    for t in range(1, max_epochs + 1):
        loss, g_w, g_b = logreg_loss_grad(w, b, Z, y, sw, l2_strength, active)
        if not math.isfinite(loss):
            raise ValueError("logistic loss diverged")
        if abs(prev_loss - loss) < tol:
            break
        prev_loss = loss

        m_w = ADAM_BETA1 * m_w + (1 - ADAM_BETA1) * g_w
        v_w = ADAM_BETA2 * v_w + (1 - ADAM_BETA2) * g_w * g_w
        m_b = ADAM_BETA1 * m_b + (1 - ADAM_BETA1) * g_b
        v_b = ADAM_BETA2 * v_b + (1 - ADAM_BETA2) * g_b * g_b
        c1 = 1 - ADAM_BETA1 ** t
        c2 = 1 - ADAM_BETA2 ** t
        w = w - ADAM_STEP * (m_w / c1) / (np.sqrt(v_w / c2) + ADAM_EPS)
        b = b - ADAM_STEP * (m_b / c1) / (math.sqrt(v_b / c2) + ADAM_EPS)
        w = w * active
    return LinearModel(weights=w, bias=float(b), standardizer=std,
                       l2_strength=l2_strength)


# --- decision trees -----------------------------------------------------

@dataclass
class TreeNode:
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    proba: tuple = (0.5, 0.5)   # leaf class probabilities (p0, p1)

    @property
    def is_leaf(self):
        return self.left is None


@dataclass
class DecisionTree:
    root: TreeNode
    max_depth: int

    def predict_proba_one(self, x):
        node = self.root
        while not node.is_leaf:
            node = node.left if x[node.feature] <= node.threshold else node.right
        return node.proba

    def predict(self, X):
        X = np.asarray(X, dtype=np.float64)
        out = np.empty(len(X), dtype=np.int64)
        for i, row in enumerate(X):
            p0, p1 = self.predict_proba_one(row)
            out[i] = 1 if p1 > p0 else 0
        return out


def _vector_gini(w_pos, w_total):
    with np.errstate(divide="ignore", invalid="ignore"):
        p = np.where(w_total > 0, w_pos / np.where(w_total > 0, w_total, 1.0), 0.0)
    return 2.0 * p * (1.0 - p)


def _best_split(X, y, sw):
    """Lowest weighted child Gini; ties go to the lowest feature index,
    then the lowest threshold."""
    pos_w = sw * (y == 1)
    neg_w = sw * (y == 0)
    total_pos = float(pos_w.sum())
    total_neg = float(neg_w.sum())
    total = total_pos + total_neg
    best = None  # (score, feature, threshold)
    for f in range(X.shape[1]):
        order = np.argsort(X[:, f], kind="stable")
        xs = X[order, f]
        valid = xs[:-1] != xs[1:]
        if not valid.any():
            continue
        left_pos = np.cumsum(pos_w[order])[:-1]
        left_neg = np.cumsum(neg_w[order])[:-1]
        wl = left_pos + left_neg
        wr = total - wl
        scores = (wl * _vector_gini(left_pos, wl)
                  + wr * _vector_gini(total_pos - left_pos, wr)) / total
        scores = np.where(valid, scores, np.inf)
        i = int(np.argmin(scores))   # argmin takes the first, lowest threshold
        score = float(scores[i])
        if best is None or score < best[0] - 1e-15:
            best = (score, f, (xs[i] + xs[i + 1]) / 2.0)
    return best


def _grow(X, y, sw, depth, max_depth):
    w_pos = float(sw[y == 1].sum())
    w_neg = float(sw[y == 0].sum())
    total = w_pos + w_neg
    proba = (w_neg / total, w_pos / total)
    if depth >= max_depth or w_pos == 0.0 or w_neg == 0.0:
        return TreeNode(proba=proba)
    best = _best_split(X, y, sw)
    if best is None:
        return TreeNode(proba=proba)
    _, f, thr = best
    mask = X[:, f] <= thr
    left = _grow(X[mask], y[mask], sw[mask], depth + 1, max_depth)
    right = _grow(X[~mask], y[~mask], sw[~mask], depth + 1, max_depth)
    return TreeNode(feature=f, threshold=thr, left=left, right=right, proba=proba)


def train_tree(X, y, sample_weights=None, max_depth=1):
    """Greedy weighted-Gini tree over binary labels."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if X.ndim != 2 or len(X) == 0:
        raise ValueError("need a nonempty 2-D feature matrix")
    _check_features(X)
    if sample_weights is None:
        sample_weights = np.ones(len(y))
    sw = np.asarray(sample_weights, dtype=np.float64)
    if (sw < 0).any() or sw.sum() <= 0:
        raise ValueError("sample weights must be nonnegative and not all zero")
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    return DecisionTree(root=_grow(X, y, sw, 0, max_depth), max_depth=max_depth)


# --- AdaBoost ------------------------------------------------------------

@dataclass
class AdaBoostModel:
    estimators: list = field(default_factory=list)  # (DecisionTree, alpha)
    n_estimators: int = 100
    learning_rate: float = 1.0
    base_max_depth: int = 1

    def decision_function(self, X):
        # Each stage votes +/-2*alpha for its class, normalized by the sum
        # of stage weights, so values span [-2, 2].
        X = np.asarray(X, dtype=np.float64)
        agg = np.zeros(len(X))
        norm = 0.0
        for tree, alpha in self.estimators:
            agg += 2.0 * alpha * (2.0 * tree.predict(X) - 1.0)
            norm += alpha
        return agg / norm if norm > 0 else agg

    def staged_decision_function(self, X):
        X = np.asarray(X, dtype=np.float64)
        agg = np.zeros(len(X))
        norm = 0.0
        for tree, alpha in self.estimators:
            agg = agg + 2.0 * alpha * (2.0 * tree.predict(X) - 1.0)
            norm += alpha
            yield agg / norm

    def predict_proba_many(self, X):
        return _sigmoid(self.decision_function(X))

    def predict_proba(self, x):
        return float(self.predict_proba_many(np.atleast_2d(x))[0])


def train_adaboost(X, y, n_estimators=100, learning_rate=1.0, base_max_depth=1,
                   class_weighting="balanced"):
    """Discrete SAMME boosting of depth-limited trees.

    Class weighting enters through the initial sample weights; boosting
    stops early on a perfect round (error 0) or a round no better than
    chance (error >= 0.5).
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    _check_features(X)
    if len(np.unique(y)) < 2:
        raise ValueError("training data contains a single class")
    sw = sample_weights_for(y, class_weighting)
    sw = sw / sw.sum()

    model = AdaBoostModel(n_estimators=n_estimators, learning_rate=learning_rate,
                          base_max_depth=base_max_depth)
    for _ in range(n_estimators):
        tree = train_tree(X, y, sw, max_depth=base_max_depth)
        pred = tree.predict(X)
        incorrect = pred != y
        err = float(sw[incorrect].sum())
        if err <= 0.0:
            model.estimators.append((tree, 1.0))
            break
        if err >= 0.5:
            if not model.estimators:
                raise ValueError("base tree is no better than chance")
            break
        alpha = learning_rate * math.log((1.0 - err) / err)
        model.estimators.append((tree, alpha))
        sw = sw * np.exp(alpha * incorrect)
        sw = sw / sw.sum()
    return model


# --- serialization -------------------------------------------------------

FORMAT_VERSION = 1


def _tree_to_dict(node):
    if node.is_leaf:
        return {"proba": list(node.proba)}
    return {"feature": node.feature, "threshold": node.threshold,
            "proba": list(node.proba),
            "left": _tree_to_dict(node.left), "right": _tree_to_dict(node.right)}


def _tree_from_dict(d):
    if "feature" not in d:
        return TreeNode(proba=tuple(d["proba"]))
    return TreeNode(feature=d["feature"], threshold=d["threshold"],
                    proba=tuple(d["proba"]),
                    left=_tree_from_dict(d["left"]),
                    right=_tree_from_dict(d["right"]))


def linear_to_dict(model):
    return {
        "format_version": FORMAT_VERSION,
        "kind": "linear",
        "weights": model.weights.tolist(),
        "bias": model.bias,
        "means": model.standardizer.means.tolist(),
        "stds": model.standardizer.stds.tolist(),
        "active": model.standardizer.active.astype(int).tolist(),
        "l2_strength": model.l2_strength,
    }


def linear_from_dict(d):
    std = Standardizer(means=np.array(d["means"]), stds=np.array(d["stds"]),
                       active=np.array(d["active"], dtype=bool))
    return LinearModel(weights=np.array(d["weights"]), bias=d["bias"],
                       standardizer=std, l2_strength=d["l2_strength"])


def adaboost_to_dict(model):
    return {
        "format_version": FORMAT_VERSION,
        "kind": "adaboost",
        "n_estimators": model.n_estimators,
        "learning_rate": model.learning_rate,
        "base_max_depth": model.base_max_depth,
        "stages": [{"alpha": alpha, "tree": _tree_to_dict(tree.root),
                    "max_depth": tree.max_depth}
                   for tree, alpha in model.estimators],
    }


def adaboost_from_dict(d):
    model = AdaBoostModel(n_estimators=d["n_estimators"],
                          learning_rate=d["learning_rate"],
                          base_max_depth=d["base_max_depth"])
    for stage in d["stages"]:
        tree = DecisionTree(root=_tree_from_dict(stage["tree"]),
                            max_depth=stage["max_depth"])
        model.estimators.append((tree, stage["alpha"]))
    return model


def save_model(payload, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_model_dict(path):
    with open(path, encoding="utf-8") as fh:
        d = json.load(fh)
    if d.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported model format version {d.get('format_version')}")
    return d
