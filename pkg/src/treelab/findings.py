"""Detectors for wasted-compute and repeated-bug patterns inside one run."""

from __future__ import annotations

import re
from typing import NamedTuple

from treelab.journal import SolutionRun, Status
from treelab.normalize import CodeParseError, normalize

# First traceback line that names an error class, e.g. "ValueError: bad input"
# or "requests.exceptions.ConnectionError: refused".
_ERROR_LINE = re.compile(r"^\s*(?:[A-Za-z_][\w]*\.)*[A-Za-z_]\w*(?:Error|Exception|Warning)\b.*$")
_PATH_IN_TRACE = re.compile(r'File "[^"]*"')
_LINE_NUMBER = re.compile(r"\bline \d+")


def bug_signature(exec_output: str) -> str | None:
    """Canonical bug identity: the first error-class line, paths and line
    numbers masked so the same failure matches across nodes."""
    for line in exec_output.splitlines():
        if _ERROR_LINE.match(line):
            masked = _PATH_IN_TRACE.sub('File "<path>"', line)
            masked = _LINE_NUMBER.sub("line <n>", masked)
            return masked.strip()
    return None


class RepeatedBug(NamedTuple):
    node_id: int
    earlier_node_id: int
    signature: str


def detect_repeated_bugs(run: SolutionRun) -> list[RepeatedBug]:
    """Buggy nodes whose signature already occurred earlier in the same tree.

    ``earlier_node_id`` is the first node that hit the signature, so an
    A -> B -> A cycle reports the third node against the first.
    """
    first_seen: dict[str, int] = {}
    repeats: list[RepeatedBug] = []
    for node in sorted(run.nodes, key=lambda n: n.id):
        if node.status is not Status.BUGGY:
            continue
        signature = bug_signature(node.exec_output)
        if signature is None:
            continue
        if signature in first_seen:
            repeats.append(RepeatedBug(node.id, first_seen[signature], signature))
        else:
            first_seen[signature] = node.id
    return repeats


def detect_identical_siblings(run: SolutionRun) -> list[list[int]]:
    """Groups of >= 2 same-parent nodes with pairwise similarity exactly 1.

    Equality of canonical forms is transitive, so grouping by form is the
    same as the pairwise check; unparsable nodes group by raw code instead.
    Drafts count as siblings under the synthetic root.
    """
    by_parent: dict[int | None, list] = {}
    for node in sorted(run.nodes, key=lambda n: n.id):
        by_parent.setdefault(node.parent_id, []).append(node)

    groups: list[list[int]] = []
    for _, siblings in sorted(by_parent.items(), key=lambda kv: (kv[0] is not None, kv[0] or 0)):
        if len(siblings) < 2:
            continue
        by_form: dict[tuple, list[int]] = {}
        for node in siblings:
            try:
                key = ("canonical", normalize(node.code).tokens)
            except CodeParseError:
                key = ("raw", node.code)
            by_form.setdefault(key, []).append(node.id)
        groups.extend(sorted(ids) for ids in by_form.values() if len(ids) >= 2)
    return sorted(groups, key=lambda g: g[0])
