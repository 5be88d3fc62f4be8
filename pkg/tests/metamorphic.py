"""Randomized superficial-edit transforms.

Each transform produces a variant that must stay functionally identical to
its seed under the normalization contract: comments, formatting, bare prints,
keyword-argument order, literal dict-key order, and consistent identifier
renames. Textual transforms assume the seed style guaranteed by
``fixtures.METAMORPHIC_SEEDS`` (single-line top-level statements, no commas
or renameable words inside string literals).
"""

from __future__ import annotations

import ast
import random
import re


def _lines(code: str) -> list[str]:
    return code.splitlines()


def _join(lines: list[str]) -> str:
    return "\n".join(lines) + "\n"


def _column0_positions(lines: list[str]) -> list[int]:
    """Insertion points where a new top-level statement is legal."""
    positions = [
        i for i, line in enumerate(lines) if line and not line[0].isspace()
    ]
    positions.append(len(lines))
    return positions


def insert_comments(code: str, rng: random.Random) -> str:
    lines = _lines(code)
    for _ in range(rng.randint(1, 3)):
        at = rng.randint(0, len(lines))
        lines.insert(at, f"# note {rng.randint(0, 999)}")
    return _join(lines)


def reformat(code: str, rng: random.Random) -> str:
    lines = _lines(code)
    # blank lines are legal anywhere in a file
    for _ in range(rng.randint(1, 2)):
        lines.insert(rng.randint(0, len(lines)), "")
    lines = [line + "  " if line and rng.random() < 0.3 else line for line in lines]
    text = _join(lines)
    if rng.random() < 0.5:
        text = text.replace(", ", ",  ")
    if rng.random() < 0.5:
        text = re.sub(r"(?<=[\w\)\]])=(?=[\w\(\[\"'-])", " = ", text)
    return text


def insert_prints(code: str, rng: random.Random) -> str:
    lines = _lines(code)
    for _ in range(rng.randint(1, 2)):
        at = rng.choice(_column0_positions(lines))
        lines.insert(at, f'print("dbg{rng.randint(0, 99)}")')
    return _join(lines)


def _has_sortable_kwargs(tree: ast.AST) -> bool:
    return any(
        isinstance(n, ast.Call) and len(n.keywords) >= 2 and all(k.arg for k in n.keywords)
        for n in ast.walk(tree)
    )


def permute_kwargs(code: str, rng: random.Random) -> str:
    tree = ast.parse(code)
    for node in ast.walk(tree):
        if isinstance(node, ast.Call) and len(node.keywords) >= 2:
            if all(k.arg is not None for k in node.keywords):
                rng.shuffle(node.keywords)
    return ast.unparse(tree) + "\n"


def _has_literal_dict(tree: ast.AST) -> bool:
    return any(
        isinstance(n, ast.Dict) and len(n.keys) >= 2 and all(isinstance(k, ast.Constant) for k in n.keys)
        for n in ast.walk(tree)
    )


def permute_dict_keys(code: str, rng: random.Random) -> str:
    tree = ast.parse(code)
    for node in ast.walk(tree):
        if isinstance(node, ast.Dict) and len(node.keys) >= 2:
            if all(isinstance(k, ast.Constant) for k in node.keys):
                pairs = list(zip(node.keys, node.values))
                rng.shuffle(pairs)
                node.keys = [k for k, _ in pairs]
                node.values = [v for _, v in pairs]
    return ast.unparse(tree) + "\n"


def rename_identifiers(code: str, rng: random.Random, renameable: list[str]) -> str:
    chosen = [name for name in renameable if rng.random() < 0.8] or renameable[:1]
    out = code
    for i, name in enumerate(chosen):
        out = re.sub(rf"\b{re.escape(name)}\b", f"{name}_rn{i}", out)
    return out


def variants_for(seed: dict, rng: random.Random, count: int) -> list[tuple[str, str]]:
    """``count`` (transform name, variant code) pairs for one seed snippet."""
    code = seed["code"]
    tree = ast.parse(code)
    pool: list[tuple[str, object]] = [
        ("comments", insert_comments),
        ("reformat", reformat),
        ("prints", insert_prints),
    ]
    if _has_sortable_kwargs(tree):
        pool.append(("kwargs", permute_kwargs))
    if _has_literal_dict(tree):
        pool.append(("dict_keys", permute_dict_keys))
    if seed["renameable"]:
        pool.append(("rename", lambda c, r: rename_identifiers(c, r, seed["renameable"])))

    out = []
    for i in range(count):
        name, transform = pool[i % len(pool)]
        out.append((name, transform(code, rng)))
    return out
