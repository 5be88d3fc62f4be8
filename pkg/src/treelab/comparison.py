"""Cluster-comparison prompts and the optional external LLM summarizer."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Protocol

import httpx

COMPARISON_TEMPLATE = (
    "You are given two collections of code. Summarize the difference between them. "
    "The first collection is {code1}, the second collection is {code2}. "
    "Please be concise in your response and use bullet points."
)

OFFLINE_TAG = "[offline]"

LLM_ENDPOINT_ENV = "TREELAB_LLM_ENDPOINT"
LLM_TOKEN_ENV = "TREELAB_LLM_TOKEN"


@dataclass
class ComparisonRequest:
    code1: str
    code2: str
    prompt: str
    response: str | None = field(default=None)


class ComparisonUnavailable(RuntimeError):
    """External summarizer failed; the request can be retried as-is."""


class LLMClient(Protocol):
    def complete(self, prompt: str) -> str: ...


class HttpLLMClient:
    """Client for the documented summarizer contract: POST {endpoint} with
    ``{"prompt": ...}`` returns ``{"text": ...}``; bearer token from the
    environment."""

    def __init__(self, endpoint: str | None = None, timeout: float = 120.0):
        endpoint = endpoint or os.environ.get(LLM_ENDPOINT_ENV)
        if not endpoint:
            raise ValueError(f"no LLM endpoint configured ({LLM_ENDPOINT_ENV})")
        self.endpoint = endpoint
        self.timeout = timeout

    def complete(self, prompt: str) -> str:
        headers = {}
        token = os.environ.get(LLM_TOKEN_ENV)
        if token:
            headers["Authorization"] = f"Bearer {token}"
        response = httpx.post(
            self.endpoint, json={"prompt": prompt}, headers=headers, timeout=self.timeout
        )
        response.raise_for_status()
        return response.json()["text"]


def build_comparison_prompt(code1: list[str], code2: list[str]) -> str:
    """Instantiate the comparison template over two snippet collections."""
    if not code1 or not code2:
        raise ValueError("both code collections must be non-empty")
    return COMPARISON_TEMPLATE.format(code1="\n".join(code1), code2="\n".join(code2))


def make_comparison_request(code1: list[str], code2: list[str]) -> ComparisonRequest:
    return ComparisonRequest(
        code1="\n".join(code1),
        code2="\n".join(code2),
        prompt=build_comparison_prompt(code1, code2),
    )


def summarize_difference(req: ComparisonRequest, client: LLMClient | None = None) -> str:
    """Model summary of the two collections; offline mode echoes the prompt.

    Client failures raise ``ComparisonUnavailable`` so the service can answer
    with a retryable error instead of crashing.
    """
    if client is None:
        text = f"{OFFLINE_TAG} {req.prompt}"
    else:
        try:
            text = client.complete(req.prompt)
        except Exception as exc:
            raise ComparisonUnavailable(f"summarizer call failed: {exc}") from exc
    req.response = text
    return text
