"""Deterministic code embeddings with an optional external-service client.

The built-in embedder is a signed hashed token-frequency model: it needs no
network or model weights and produces bitwise-identical vectors on every
platform, which keeps projections and their tests reproducible. A configured
HTTP embedding service can substitute for it; failures fall back to the
built-in embedder with a warning.
"""

from __future__ import annotations

import math
import os
import re
import warnings
from collections import Counter
from hashlib import blake2b
from typing import Protocol, Sequence

import numpy as np

import httpx

EMBED_DIM = 300

# Identifier/keyword tokens, numeric literals, single operator/punct chars.
_TOKEN_RE = re.compile(r"[A-Za-z_]\w*|\d+(?:\.\d+)?|[^\sA-Za-z0-9_]")

EMBED_ENDPOINT_ENV = "TREELAB_EMBED_ENDPOINT"
EMBED_TOKEN_ENV = "TREELAB_EMBED_TOKEN"


def _token_slot(token: str, dim: int) -> tuple[int, float]:
    """Bin and sign for one token: blake2b-64 of the UTF-8 bytes, low bits
    select the bin, the top bit selects the sign."""
    digest = blake2b(token.encode("utf-8"), digest_size=8).digest()
    value = int.from_bytes(digest, "big")
    return value % dim, -1.0 if value >> 63 else 1.0


def embed_code(code: str, dim: int = EMBED_DIM) -> np.ndarray:
    """Unit-length hashed token-frequency vector (all-zero for empty input)."""
    counts = Counter(_TOKEN_RE.findall(code))
    vector = np.zeros(dim, dtype=np.float64)
    for token, count in counts.items():
        slot, sign = _token_slot(token, dim)
        vector[slot] += sign * math.log1p(count)
    norm = float(np.linalg.norm(vector))
    if norm > 0:
        vector /= norm
    return vector


class EmbeddingClient(Protocol):
    def embed(self, texts: Sequence[str]) -> list[list[float]]: ...


class HttpEmbeddingClient:
    """Client for the documented embedding contract: POST {endpoint} with
    ``{"texts": [...]}`` returns ``{"vectors": [[...], ...]}``; the bearer
    token comes from the environment."""

    def __init__(self, endpoint: str | None = None, timeout: float = 30.0):
        endpoint = endpoint or os.environ.get(EMBED_ENDPOINT_ENV)
        if not endpoint:
            raise ValueError(f"no embedding endpoint configured ({EMBED_ENDPOINT_ENV})")
        self.endpoint = endpoint
        self.timeout = timeout

    def embed(self, texts: Sequence[str]) -> list[list[float]]:
        headers = {}
        token = os.environ.get(EMBED_TOKEN_ENV)
        if token:
            headers["Authorization"] = f"Bearer {token}"
        response = httpx.post(
            self.endpoint, json={"texts": list(texts)}, headers=headers, timeout=self.timeout
        )
        response.raise_for_status()
        return response.json()["vectors"]


def embed_corpus(
    codes: Sequence[str], dim: int = EMBED_DIM, client: EmbeddingClient | None = None
) -> np.ndarray:
    """Embed many snippets, preferring the external client when configured."""
    if client is not None:
        try:
            vectors = np.asarray(client.embed(codes), dtype=np.float64)
            if vectors.shape != (len(codes), dim):
                raise ValueError(f"client returned shape {vectors.shape}, wanted {(len(codes), dim)}")
            return vectors
        except Exception as exc:
            warnings.warn(
                f"external embedding failed ({exc}); using built-in embedder", stacklevel=2
            )
    return np.stack([embed_code(code, dim) for code in codes]) if codes else np.zeros((0, dim))
