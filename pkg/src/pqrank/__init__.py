"""Rank article sentences by pull-quote suitability.

Subpackages cover the full pipeline: corpus handling, feature
extraction (handcrafted, n-gram, embedding-based), model training
(linear, boosted trees, neural including mixture-of-experts),
unsupervised summarizer baselines, cross-task transfer scoring,
per-article AUC evaluation, and embedding-dimension analysis.
"""

__version__ = "0.1.0"
