"""Neural rankers over sentence and document embeddings, trained with
manual forward/backward passes and adaptive-moment updates.

Three families, each in a basic and a deep variant:
  A  scores the sentence embedding alone;
  B  scores the concatenation of sentence and document embeddings;
  C  runs k expert sigmoids off the sentence path and weights them with
     a softmax gate computed from the document path (dot product).

Deep variants insert two dense layers (the second half the width of the
first) with scaled-exponential-linear activations and dropout 0.5 after
the first. Training uses class-weighted binary cross-entropy, per-epoch
shuffling, and early stopping that restores the best-validation epoch.
"""

import json
import math
import struct
from dataclasses import dataclass, field, replace

import numpy as np

from .classic_ml import sample_weights_for
from .evaluation import auc

SELU_LAMBDA = 1.0507009873554804934193349852946
SELU_ALPHA = 1.6732632423543772848170429916717

WIDTH_GRID = (16, 32, 64, 128, 256, 512)
EXPERT_GRID = (2, 4, 8, 16)

PROB_CLIP = 1e-12

ARCHITECTURES = ("A", "B", "C")
DEPTHS = ("basic", "deep")


@dataclass(frozen=True)
class NetSpec:
    architecture: str
    depth: str
    input_dim: int
    initial_width: int | None = None   # deep variants
    experts: int | None = None         # C variants
    seed: int = 0

    def validate(self, strict_grid=False):
        if self.architecture not in ARCHITECTURES:
            raise ValueError(f"architecture must be one of {ARCHITECTURES}")
        if self.depth not in DEPTHS:
            raise ValueError(f"depth must be one of {DEPTHS}")
        if self.input_dim < 1:
            raise ValueError("input_dim must be positive")
        if self.depth == "deep":
            if not self.initial_width or self.initial_width < 2:
                raise ValueError("deep variants need initial_width >= 2")
            if strict_grid and self.initial_width not in WIDTH_GRID:
                raise ValueError(f"initial_width must be in {WIDTH_GRID}")
        if self.architecture == "C":
            if not self.experts or self.experts < 1:
                raise ValueError("C variants need experts >= 1")
            if strict_grid and self.experts not in EXPERT_GRID:
                raise ValueError(f"experts must be in {EXPERT_GRID}")

    @property
    def uses_doc(self):
        return self.architecture in ("B", "C")

    def label(self):
        name = f"{self.architecture}-{self.depth}"
        if self.depth == "deep":
            name += f" ({self.initial_width},{self.initial_width // 2})"
        if self.architecture == "C":
            name += f" k={self.experts}"
        return name


@dataclass(frozen=True)
class TrainConfig:
    max_epochs: int = 100
    patience: int = 4
    batch_size: int = 32
    class_weighting: str = "balanced"
    learning_rate: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    dropout: float = 0.5

    def validate(self):
        if not self.patience < self.max_epochs:
            raise ValueError("patience must be smaller than max_epochs")
        if self.batch_size < 1:
            raise ValueError("batch_size must be positive")


# --- layers --------------------------------------------------------------

class Dense:
    def __init__(self, rng, n_in, n_out):
        # fan-in-scaled normal init keeps activations in the
        # self-normalizing regime; biases start at zero
        self.W = rng.normal(0.0, 1.0 / math.sqrt(n_in), size=(n_in, n_out))
        self.b = np.zeros(n_out)
        self.gW = np.zeros_like(self.W)
        self.gb = np.zeros_like(self.b)
        self._x = None

    def forward(self, X, train, rng):
        self._x = X
        return X @ self.W + self.b

    def backward(self, G):
        self.gW = self._x.T @ G
        self.gb = G.sum(axis=0)
        return G @ self.W.T


class Selu:
    def forward(self, X, train, rng):
        self._x = X
        return SELU_LAMBDA * np.where(X > 0, X, SELU_ALPHA * np.expm1(X))

    def backward(self, G):
        return G * SELU_LAMBDA * np.where(self._x > 0, 1.0, SELU_ALPHA * np.exp(self._x))


class Dropout:
    def __init__(self, rate):
        self.rate = rate
        self._mask = None

    def forward(self, X, train, rng):
        if not train or self.rate <= 0:
            self._mask = None
            return X
        keep = 1.0 - self.rate
        self._mask = (rng.random(X.shape) < keep) / keep
        return X * self._mask

    def backward(self, G):
        return G if self._mask is None else G * self._mask


class Path:
    """A stack of layers ending in a linear projection."""

    def __init__(self, rng, d_in, depth, width, out_dim, dropout):
        self.layers = []
        last = d_in
        if depth == "deep":
            w2 = width // 2
            self.layers += [Dense(rng, d_in, width), Selu(), Dropout(dropout),
                            Dense(rng, width, w2), Selu()]
            last = w2
        self.layers.append(Dense(rng, last, out_dim))

    def forward(self, X, train, rng):
        for layer in self.layers:
            X = layer.forward(X, train, rng)
        return X

    def backward(self, G):
        for layer in reversed(self.layers):
            G = layer.backward(G)
        return G

    def dense_layers(self):
        return [l for l in self.layers if isinstance(l, Dense)]


def _sigmoid(z):
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    neg = ~pos
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[neg])
    out[neg] = ez / (1.0 + ez)
    return out


def _softmax(Z):
    shifted = Z - Z.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


class NeuralNet:
    def __init__(self, spec, dropout=0.5):
        spec.validate()
        self.spec = spec
        rng = np.random.default_rng(spec.seed)
        d = spec.input_dim
        if spec.architecture == "A":
            self.main = Path(rng, d, spec.depth, spec.initial_width, 1, dropout)
            self.gate_path = None
        elif spec.architecture == "B":
            self.main = Path(rng, 2 * d, spec.depth, spec.initial_width, 1, dropout)
            self.gate_path = None
        else:
            self.main = Path(rng, d, spec.depth, spec.initial_width,
                             spec.experts, dropout)
            self.gate_path = Path(rng, d, spec.depth, spec.initial_width,
                                  spec.experts, dropout)
        self._cache = {}

    def dense_layers(self):
        layers = self.main.dense_layers()
        if self.gate_path is not None:
            layers += self.gate_path.dense_layers()
        return layers

    def n_params(self):
        return sum(l.W.size + l.b.size for l in self.dense_layers())

    def forward_batch(self, S, D=None, train=False, rng=None):
        """Per-row probabilities; D is required for architectures B and C."""
        arch = self.spec.architecture
        if arch in ("B", "C") and D is None:
            raise ValueError(f"architecture {arch} needs document embeddings")
        if arch == "A":
            z = self.main.forward(S, train, rng)
            p = _sigmoid(z).ravel()
            self._cache = {"p": p}
        elif arch == "B":
            z = self.main.forward(np.hstack([S, D]), train, rng)
            p = _sigmoid(z).ravel()
            self._cache = {"p": p}
        else:
            U = self.main.forward(S, train, rng)
            e = _sigmoid(U)
            V = self.gate_path.forward(D, train, rng)
            g = _softmax(V)
            p = (e * g).sum(axis=1)
            self._cache = {"p": p, "e": e, "g": g}
        return self._cache["p"]

    def backward_weighted_bce(self, y, sample_weights):
        """Gradients of mean(sample_weights * bce) wrt all parameters,
        using the last forward pass."""
        p = self._cache["p"]
        n = len(y)
        coeff = sample_weights / n
        if self.spec.architecture in ("A", "B"):
            dz = (coeff * (p - y))[:, None]
            self.main.backward(dz)
        else:
            e = self._cache["e"]
            g = self._cache["g"]
            pc = np.clip(p, PROB_CLIP, 1.0 - PROB_CLIP)
            dp = coeff * (pc - y) / (pc * (1.0 - pc))
            dU = dp[:, None] * g * e * (1.0 - e)
            self.main.backward(dU)
            dg = dp[:, None] * e
            dV = g * (dg - (dg * g).sum(axis=1, keepdims=True))
            self.gate_path.backward(dV)

    def param_blob(self):
        chunks = []
        for l in self.dense_layers():
            chunks.append(l.W.astype(np.float32).tobytes())
            chunks.append(l.b.astype(np.float32).tobytes())
        return b"".join(chunks)

    def load_param_blob(self, blob):
        offset = 0
        for l in self.dense_layers():
            for arr_name in ("W", "b"):
                arr = getattr(l, arr_name)
                nbytes = arr.size * 4
                vals = np.frombuffer(blob[offset:offset + nbytes], dtype="<f4")
                if vals.size != arr.size:
                    raise ValueError("parameter blob truncated")
                setattr(l, arr_name, vals.astype(np.float64).reshape(arr.shape))
                offset += nbytes
        if offset != len(blob):
            raise ValueError("parameter blob has trailing bytes")


def build_net(spec, dropout=0.5):
    return NeuralNet(spec, dropout=dropout)


def forward(net, sentence_vec, doc_vec=None):
    """Probability for a single sentence (dropout inactive)."""
    S = np.atleast_2d(np.asarray(sentence_vec, dtype=np.float64))
    D = None
    if doc_vec is not None:
        D = np.atleast_2d(np.asarray(doc_vec, dtype=np.float64))
    return float(net.forward_batch(S, D, train=False)[0])


def param_count(spec):
    """Exact trainable parameter count (weights and biases)."""
    spec.validate()
    d = spec.input_dim
    out = spec.experts if spec.architecture == "C" else 1

    def path_params(d_in):
        if spec.depth == "basic":
            return d_in * out + out
        w1 = spec.initial_width
        w2 = w1 // 2
        return d_in * w1 + w1 + w1 * w2 + w2 + w2 * out + out

    if spec.architecture == "A":
        return path_params(d)
    if spec.architecture == "B":
        return path_params(2 * d)
    return 2 * path_params(d)


def weighted_bce(p, y, sample_weights):
    pc = np.clip(p, PROB_CLIP, 1.0 - PROB_CLIP)
    losses = -(y * np.log(pc) + (1.0 - y) * np.log1p(-pc))
    return float(np.mean(sample_weights * losses))


class _Adam:
    def __init__(self, layers, config):
        self.layers = layers
        self.cfg = config
        self.m = [(np.zeros_like(l.W), np.zeros_like(l.b)) for l in layers]
        self.v = [(np.zeros_like(l.W), np.zeros_like(l.b)) for l in layers]
        self.t = 0

    def step(self):
        cfg = self.cfg
        self.t += 1
        c1 = 1.0 - cfg.beta1 ** self.t
        c2 = 1.0 - cfg.beta2 ** self.t
        for i, layer in enumerate(self.layers):
            for j, (param, grad) in enumerate(((layer.W, layer.gW),
                                               (layer.b, layer.gb))):
                m = self.m[i][j]
                v = self.v[i][j]
                m *= cfg.beta1
                m += (1.0 - cfg.beta1) * grad
                v *= cfg.beta2
                v += (1.0 - cfg.beta2) * grad * grad
                param -= cfg.learning_rate * (m / c1) / (np.sqrt(v / c2) + cfg.eps)


@dataclass
class TrainHistory:
    train_loss: list = field(default_factory=list)
    val_loss: list = field(default_factory=list)
    best_epoch: int = -1
    stopped_epoch: int = -1


def train(net, train_arrays, val_arrays, config=TrainConfig()):
    """Fit with shuffled minibatches; early-stop on validation loss.

    train_arrays and val_arrays are (S, D, y) with D=None for A nets.
    Restores the parameters of the best-validation epoch. Deterministic
    for a fixed net spec seed.
    """
    config.validate()
    S_tr, D_tr, y_tr = train_arrays
    S_val, D_val, y_val = val_arrays
    if len(S_val) == 0:
        raise ValueError("validation set must be nonempty")
    y_tr = np.asarray(y_tr, dtype=np.float64)
    y_val = np.asarray(y_val, dtype=np.float64)

    sw_tr = sample_weights_for(y_tr.astype(np.int64), config.class_weighting)
    if config.class_weighting == "balanced":
        # validation loss reuses the training-set class weights
        from .classic_ml import balanced_weights
        cw = balanced_weights(y_tr.astype(np.int64))
        sw_val = np.where(y_val == 1, cw[1], cw[0])
    else:
        sw_val = np.ones(len(y_val))

    rng = np.random.default_rng([net.spec.seed, 0xA11CE])
    optimizer = _Adam(net.dense_layers(), config)
    history = TrainHistory()
    best_val = math.inf
    best_blob = None
    since_best = 0
    n = len(S_tr)

    for epoch in range(config.max_epochs):
        perm = rng.permutation(n)
        epoch_loss = 0.0
        for start in range(0, n, config.batch_size):
            idx = perm[start:start + config.batch_size]
            Sb = S_tr[idx]
            Db = D_tr[idx] if D_tr is not None else None
            yb = y_tr[idx]
            wb = sw_tr[idx]
            p = net.forward_batch(Sb, Db, train=True, rng=rng)
            loss = weighted_bce(p, yb, wb)
            if not math.isfinite(loss):
                raise ValueError(f"training diverged at epoch {epoch}")
            epoch_loss += loss * len(idx)
            net.backward_weighted_bce(yb, wb)
            optimizer.step()
        history.train_loss.append(epoch_loss / n)

        p_val = net.forward_batch(S_val, D_val, train=False)
        val_loss = weighted_bce(p_val, y_val, sw_val)
        if not math.isfinite(val_loss):
            raise ValueError(f"validation loss diverged at epoch {epoch}")
        history.val_loss.append(val_loss)

        if val_loss < best_val:
            best_val = val_loss
            best_blob = net.param_blob()
            history.best_epoch = epoch
            since_best = 0
        else:
            since_best += 1
            if since_best >= config.patience:
                break
    history.stopped_epoch = len(history.val_loss) - 1
    if best_blob is not None:
        net.load_param_blob(best_blob)
    return history


def predict(net, S, D=None):
    return net.forward_batch(np.asarray(S, dtype=np.float64),
                             None if D is None else np.asarray(D, dtype=np.float64),
                             train=False)


def grouped_auc_avg(probs, labels, groups):
    """Mean per-group AUC; groups are index arrays (one per article)."""
    values = []
    for idx in groups:
        a = auc(np.asarray(labels)[idx], np.asarray(probs)[idx])
        if a is not None:
            values.append(a)
    if not values:
        raise ValueError("no group has both classes")
    return float(sum(values) / len(values))


def grid_search(specs, train_arrays, val_arrays, val_groups,
                config=TrainConfig(), seeds=(0, 1, 2, 3, 4)):
    """Train every spec over the seed list; pick the best mean validation
    AUC averaged per article.

    Returns (best_spec, report) where the report has one row per spec
    with per-trial values, mean, population std dev, and a display
    string like "78.7±0.07".
    """
    if not specs:
        raise ValueError("empty spec grid")
    _, _, y_val = val_arrays
    report = []
    for spec in specs:
        trial_values = []
        for seed in seeds:
            net = build_net(replace(spec, seed=seed), dropout=config.dropout)
            train(net, train_arrays, val_arrays, config)
            probs = predict(net, val_arrays[0], val_arrays[1])
            trial_values.append(grouped_auc_avg(probs, y_val, val_groups))
        mean = float(np.mean(trial_values))
        std = float(np.std(trial_values))
        report.append({
            "spec": spec,
            "label": spec.label(),
            "trials": trial_values,
            "mean": mean,
            "std": std,
            "display": f"{100 * mean:.1f}±{100 * std:.2f}",
        })
    best_row = max(report, key=lambda r: r["mean"])
    return best_row["spec"], report


# --- serialization -------------------------------------------------------

NET_FORMAT_VERSION = 1


def save_net(net, path):
    header = {
        "format_version": NET_FORMAT_VERSION,
        "architecture": net.spec.architecture,
        "depth": net.spec.depth,
        "input_dim": net.spec.input_dim,
        "initial_width": net.spec.initial_width,
        "experts": net.spec.experts,
        "seed": net.spec.seed,
    }
    blob = net.param_blob()
    header_bytes = json.dumps(header).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(struct.pack("<I", len(header_bytes)))
        fh.write(header_bytes)
        fh.write(blob)


def load_net(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    (hlen,) = struct.unpack("<I", raw[:4])
    header = json.loads(raw[4:4 + hlen].decode("utf-8"))
    if header.get("format_version") != NET_FORMAT_VERSION:
        raise ValueError("unsupported net format version")
    spec = NetSpec(architecture=header["architecture"], depth=header["depth"],
                   input_dim=header["input_dim"],
                   initial_width=header["initial_width"],
                   experts=header["experts"], seed=header["seed"])
    net = build_net(spec)
    net.load_param_blob(raw[4 + hlen:])
    return net
