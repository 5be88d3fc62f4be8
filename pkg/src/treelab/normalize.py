"""Canonical form of a code snippet for function-level comparison.

Parsing already discards comments and formatting; on top of that the pipeline
prunes bare ``print`` statements, sorts call keyword arguments and
literal-keyed dictionary entries, and renames locally-bound identifiers to
``var1``/``func1``/``class1`` counters in first-occurrence order. Imported
names, attribute names, and keyword names of external calls are preserved
because they carry the semantics package-level analysis depends on.

Known blind spot: ``set`` literals with reordered elements are not
canonicalized, so such pairs score below 1 despite equal behavior.
"""

from __future__ import annotations

import ast
import io
import tokenize
from dataclasses import dataclass

_SKIP_TOKENS = {tokenize.COMMENT, tokenize.NL, tokenize.ENCODING, tokenize.ENDMARKER}
_STRUCTURAL_TOKENS = {
    tokenize.NEWLINE: "<newline>",
    tokenize.INDENT: "<indent>",
    tokenize.DEDENT: "<dedent>",
}


class CodeParseError(ValueError):
    """Code does not parse; callers fall back to raw-text comparison."""


@dataclass(frozen=True)
class CanonicalForm:
    """Token sequence serialized from the normalized syntax tree.

    ``source`` is the normalized code itself; re-normalizing it reproduces the
    same token sequence (the pipeline is idempotent).
    """

    tokens: tuple[str, ...]
    source: str


def _is_print_stmt(node: ast.stmt) -> bool:
    # Bare `print(...)` statements only; `logger.print(...)` etc. are kept.
    return (
        isinstance(node, ast.Expr)
        and isinstance(node.value, ast.Call)
        and isinstance(node.value.func, ast.Name)
        and node.value.func.id == "print"
    )


class _PrunePrints(ast.NodeTransformer):
    def visit_Expr(self, node: ast.Expr):
        if _is_print_stmt(node):
            return None
        return self.generic_visit(node)


def _ensure_bodies(tree: ast.AST) -> None:
    """Re-fill statement bodies emptied by print pruning so unparse stays valid."""
    for node in ast.walk(tree):
        if isinstance(node, ast.Module):
            continue
        body = getattr(node, "body", None)
        if isinstance(body, list) and not body:
            node.body = [ast.Pass()]


class _SortCallKeywords(ast.NodeTransformer):
    """Order named keyword arguments alphabetically.

    Calls using ``**`` expansion are left untouched: moving keywords across an
    expansion can change which value wins for a duplicated key.
    """

    def visit_Call(self, node: ast.Call):
        self.generic_visit(node)
        if node.keywords and all(kw.arg is not None for kw in node.keywords):
            node.keywords.sort(key=lambda kw: kw.arg)
        return node


class _SortDictKeys(ast.NodeTransformer):
    """Order literal-keyed dict entries by key token; mixed dicts keep order.

    Sorting non-literal keys could reorder side-effecting expressions, so only
    dicts whose keys are all constants qualify.
    """

    def visit_Dict(self, node: ast.Dict):
        self.generic_visit(node)
        if node.keys and all(isinstance(k, ast.Constant) for k in node.keys):
            pairs = sorted(zip(node.keys, node.values), key=lambda kv: repr(kv[0].value))
            node.keys = [k for k, _ in pairs]
            node.values = [v for _, v in pairs]
        return node


def _imported_names(tree: ast.AST) -> set[str]:
    names = set()
    for node in ast.walk(tree):
        if isinstance(node, (ast.Import, ast.ImportFrom)):
            for alias in node.names:
                bound = alias.asname or alias.name.split(".")[0]
                names.add(bound)
    return names


def _binding_categories(tree: ast.AST, protected: set[str]) -> dict[str, str]:
    """Map each locally-bound identifier to var/func/class.

    The first binding encountered in tree order decides the category; imported
    names never qualify. Unbound names (builtins, free names) are external and
    stay as-is.
    """
    categories: dict[str, str] = {}

    def bind(name: str | None, category: str) -> None:
        if name and name not in protected and name not in categories:
            categories[name] = category

    for node in _preorder(tree):
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
            bind(node.name, "func")
        elif isinstance(node, ast.ClassDef):
            bind(node.name, "class")
        elif isinstance(node, ast.Name) and isinstance(node.ctx, (ast.Store, ast.Del)):
            bind(node.id, "var")
        elif isinstance(node, ast.arg):
            bind(node.arg, "var")
        elif isinstance(node, ast.ExceptHandler):
            bind(node.name, "var")
        elif isinstance(node, (ast.Global, ast.Nonlocal)):
            for name in node.names:
                bind(name, "var")
    return categories


def _preorder(tree: ast.AST):
    yield tree
    for child in ast.iter_child_nodes(tree):
        yield from _preorder(child)


def _occurrences(tree: ast.AST):
    """Identifier mentions in deterministic preorder, bindings and uses alike."""
    for node in _preorder(tree):
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)):
            yield node.name
        elif isinstance(node, ast.Name):
            yield node.id
        elif isinstance(node, ast.arg):
            yield node.arg
        elif isinstance(node, ast.ExceptHandler) and node.name:
            yield node.name
        elif isinstance(node, (ast.Global, ast.Nonlocal)):
            yield from node.names


_COUNTER_PREFIX = {"var": "var", "func": "func", "class": "class"}


def _build_rename_map(tree: ast.AST, categories: dict[str, str]) -> dict[str, str]:
    counters = {"var": 0, "func": 0, "class": 0}
    mapping: dict[str, str] = {}
    for name in _occurrences(tree):
        if name in categories and name not in mapping:
            category = categories[name]
            counters[category] += 1
            mapping[name] = f"{_COUNTER_PREFIX[category]}{counters[category]}"
    return mapping


class _RenameIdentifiers(ast.NodeTransformer):
    def __init__(self, mapping: dict[str, str], user_funcs: set[str]):
        self.mapping = mapping
        self.user_funcs = user_funcs

    def _renamed(self, name: str) -> str:
        return self.mapping.get(name, name)

    def visit_Name(self, node: ast.Name):
        node.id = self._renamed(node.id)
        return node

    def visit_arg(self, node: ast.arg):
        self.generic_visit(node)
        node.arg = self._renamed(node.arg)
        return node

    def visit_FunctionDef(self, node: ast.FunctionDef):
        self.generic_visit(node)
        node.name = self._renamed(node.name)
        return node

    visit_AsyncFunctionDef = visit_FunctionDef

    def visit_ClassDef(self, node: ast.ClassDef):
        self.generic_visit(node)
        node.name = self._renamed(node.name)
        return node

    def visit_ExceptHandler(self, node: ast.ExceptHandler):
        self.generic_visit(node)
        if node.name:
            node.name = self._renamed(node.name)
        return node

    def visit_Global(self, node: ast.Global):
        node.names = [self._renamed(n) for n in node.names]
        return node

    visit_Nonlocal = visit_Global

    def visit_Call(self, node: ast.Call):
        # Keyword names follow the callee: params of user-defined functions are
        # renamed like the definitions, external API keywords stay verbatim.
        is_user_call = isinstance(node.func, ast.Name) and node.func.id in self.user_funcs
        self.generic_visit(node)
        if is_user_call:
            for kw in node.keywords:
                if kw.arg is not None:
                    kw.arg = self._renamed(kw.arg)
        return node


def normalize(code: str) -> CanonicalForm:
    """Run the full normalization pipeline over one code snippet.

    Raises ``CodeParseError`` when the snippet is not parseable Python.
    """
    try:
        tree = ast.parse(code)
    except (SyntaxError, ValueError) as exc:
        raise CodeParseError(str(exc)) from None

    tree = _PrunePrints().visit(tree)
    _ensure_bodies(tree)
    tree = _SortCallKeywords().visit(tree)
    tree = _SortDictKeys().visit(tree)

    protected = _imported_names(tree)
    categories = _binding_categories(tree, protected)
    mapping = _build_rename_map(tree, categories)
    user_funcs = {name for name, cat in categories.items() if cat == "func"}
    tree = _RenameIdentifiers(mapping, user_funcs).visit(tree)

    # Keyword order must not depend on which pass renamed them, so sort again
    # on the final names; this also makes the pipeline idempotent.
    tree = _SortCallKeywords().visit(tree)

    ast.fix_missing_locations(tree)
    source = ast.unparse(tree)
    return CanonicalForm(tokens=_tokenize(source), source=source)


def _tokenize(source: str) -> tuple[str, ...]:
    tokens: list[str] = []
    for tok in tokenize.generate_tokens(io.StringIO(source).readline):
        if tok.type in _SKIP_TOKENS:
            continue
        structural = _STRUCTURAL_TOKENS.get(tok.type)
        tokens.append(structural if structural is not None else tok.string)
    return tuple(tokens)
