"""Analytics for tree-based coding-agent runs.

Core layers: journals (parse/merge/stats), a policy simulator, code-level
analysis (diff, canonical forms, similarity, packages), tree analytics
(edit distance, clustering, ordering), projections (embeddings, PCA, t-SNE),
and an HTTP service plus CLI on top.
"""

__version__ = "0.1.0"
