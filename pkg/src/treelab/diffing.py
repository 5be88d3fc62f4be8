"""Line-level diffing between two code texts.

The diff drives the three-color highlight of the code panel (shared /
removed / added) and the modified-line counts encoded as link thickness.
"""

from __future__ import annotations

import difflib

# One diff row: (line text, tag). Tags: "shared", "removed", "added".
DiffLine = tuple[str, str]

SHARED = "shared"
REMOVED = "removed"
ADDED = "added"


def _split_lines(text: str) -> list[str]:
    if text == "":
        return []
    return text.splitlines()


def line_diff(a: str, b: str) -> list[DiffLine]:
    """Longest-common-subsequence style line diff of ``a`` against ``b``.

    Dropping the added rows reconstructs ``a``; dropping the removed rows
    reconstructs ``b``. Within a replaced hunk, removed lines precede added
    ones (the conventional -/+ layout).
    """
    a_lines = _split_lines(a)
    b_lines = _split_lines(b)
    matcher = difflib.SequenceMatcher(a=a_lines, b=b_lines, autojunk=False)
    out: list[DiffLine] = []
    for op, a0, a1, b0, b1 in matcher.get_opcodes():
        if op == "equal":
            out.extend((line, SHARED) for line in a_lines[a0:a1])
        else:
            out.extend((line, REMOVED) for line in a_lines[a0:a1])
            out.extend((line, ADDED) for line in b_lines[b0:b1])
    return out
