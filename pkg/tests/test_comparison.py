import pytest

from treelab.comparison import (
    COMPARISON_TEMPLATE,
    ComparisonUnavailable,
    OFFLINE_TAG,
    build_comparison_prompt,
    make_comparison_request,
    summarize_difference,
)


def test_template_golden_string():
    assert COMPARISON_TEMPLATE == (
        "You are given two collections of code. Summarize the difference between them. "
        "The first collection is {code1}, the second collection is {code2}. "
        "Please be concise in your response and use bullet points."
    )


def test_single_snippet_lists_inline_both_sides():
    prompt = build_comparison_prompt(["x = 1"], ["y = 2"])
    assert prompt == (
        "You are given two collections of code. Summarize the difference between them. "
        "The first collection is x = 1, the second collection is y = 2. "
        "Please be concise in your response and use bullet points."
    )


def test_equal_collections_not_deduplicated():
    prompt = build_comparison_prompt(["a = 1"], ["a = 1"])
    assert prompt.count("a = 1") == 2


def test_large_collections_length_arithmetic():
    code1 = [f"x{i} = {i}" for i in range(600)]
    code2 = [f"y{i} = {i}" for i in range(600)]
    prompt = build_comparison_prompt(code1, code2)
    overhead = len(COMPARISON_TEMPLATE) - len("{code1}") - len("{code2}")
    assert len(prompt) == overhead + len("\n".join(code1)) + len("\n".join(code2))


def test_empty_collection_rejected():
    with pytest.raises(ValueError):
        build_comparison_prompt([], ["x"])
    with pytest.raises(ValueError):
        build_comparison_prompt(["x"], [])


def test_offline_mode_echoes_tagged_prompt():
    req = make_comparison_request(["a = 1"], ["b = 2"])
    text = summarize_difference(req, client=None)
    assert text.startswith(OFFLINE_TAG)
    assert req.prompt in text
    assert req.response == text


def test_stub_client_response_stored():
    class Stub:
        def complete(self, prompt):
            return "A"

    req = make_comparison_request(["a = 1"], ["b = 2"])
    assert summarize_difference(req, client=Stub()) == "A"
    assert req.response == "A"


def test_client_failure_surfaces_retryable_error():
    class Flaky:
        def complete(self, prompt):
            raise TimeoutError("slow network")

    req = make_comparison_request(["a"], ["b"])
    with pytest.raises(ComparisonUnavailable, match="slow network"):
        summarize_difference(req, client=Flaky())
    assert req.response is None
