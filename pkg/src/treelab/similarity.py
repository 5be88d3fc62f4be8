"""Function-level code similarity and the per-run N x N similarity matrix.

Similarity is the Ratcliff-Obershelp ratio 2M/(|A|+|B|) over the two
normalized token sequences, so it hits exactly 1 when after normalization
the snippets are the same program. Snippets that fail to parse fall back to
raw-token matching and are flagged.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass

import numpy as np

from treelab.journal import SolutionRun
from treelab.normalize import CanonicalForm, CodeParseError, normalize

# Heatmap color contract shared with the UI: values below the terminal band
# interpolate white->orange, the band at >= 0.99 saturates, exact 1 is red.
HEATMAP_WHITE = "#ffffff"
HEATMAP_ORANGE = "#ff8c00"
HEATMAP_RED = "#ff0000"
HEATMAP_TERMINAL_BAND = 0.99


def heatmap_color(s: float) -> str:
    """Hex color for a similarity cell; pinned here so UI and tests agree."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"similarity {s} outside [0, 1]")
    if s == 1.0:
        return HEATMAP_RED
    if s >= HEATMAP_TERMINAL_BAND:
        return HEATMAP_ORANGE
    t = s / HEATMAP_TERMINAL_BAND
    r = round(255 + (0xFF - 255) * t)
    g = round(255 + (0x8C - 255) * t)
    b = round(255 + (0x00 - 255) * t)
    return f"#{r:02x}{g:02x}{b:02x}"


def _raw_tokens(code: str) -> tuple[str, ...]:
    return tuple(code.split())


def _tokens_for(code: str) -> tuple[tuple[str, ...], bool]:
    """Comparison token sequence plus a flag marking the raw-text fallback."""
    try:
        return normalize(code).tokens, False
    except CodeParseError:
        return _raw_tokens(code), True


def _ratio(a: tuple[str, ...], b: tuple[str, ...]) -> float:
    if a == b:
        return 1.0
    # Fix the argument order so the score is symmetric by construction.
    if b < a:
        a, b = b, a
    return difflib.SequenceMatcher(a=a, b=b, autojunk=False).ratio()


def function_similarity(a: str, b: str) -> float:
    """Similarity in [0, 1]; 1 means identical canonical forms.

    If either side fails to parse, both sides are compared as raw whitespace
    tokens instead (a parseable snippet never scores 1 against a broken one).
    """
    tokens_a, fallback_a = _tokens_for(a)
    tokens_b, fallback_b = _tokens_for(b)
    if fallback_a != fallback_b:
        tokens_a, tokens_b = _raw_tokens(a), _raw_tokens(b)
    return _ratio(tokens_a, tokens_b)


@dataclass(frozen=True)
class SimilarityMatrix:
    """Pairwise function-level similarity over a run's nodes, indexed by id.

    ``fallback[i]`` marks nodes whose code did not parse and was compared as
    raw text.
    """

    run_id: str
    values: np.ndarray
    fallback: tuple[bool, ...]

    @property
    def size(self) -> int:
        return self.values.shape[0]


def similarity_matrix(run: SolutionRun) -> SimilarityMatrix:
    """All-pairs similarity; symmetric with a unit diagonal by construction."""
    nodes = sorted(run.nodes, key=lambda n: n.id)
    prepared = [_tokens_for(n.code) for n in nodes]
    n = len(nodes)
    values = np.ones((n, n), dtype=np.float64)
    for i in range(n):
        tokens_i, fb_i = prepared[i]
        for j in range(i + 1, n):
            tokens_j, fb_j = prepared[j]
            if fb_i != fb_j:
                s = _ratio(_raw_tokens(nodes[i].code), _raw_tokens(nodes[j].code))
            else:
                s = _ratio(tokens_i, tokens_j)
            values[i, j] = s
            values[j, i] = s
    return SimilarityMatrix(
        run_id=run.run_id, values=values, fallback=tuple(fb for _, fb in prepared)
    )
