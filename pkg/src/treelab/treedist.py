"""Ordered tree-edit distance between solution-trees.

Trees are compared on structure plus node status only; children are ordered
by step id so the polynomial Zhang-Shasha algorithm applies (unordered
tree-edit distance is NP-hard). All edit operations cost 1: insert, delete,
and relabel between differing labels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from treelab.journal import ROOT_ID, RunSet, SolutionRun, merge_forest

ROOT_LABEL = "root"


@dataclass(frozen=True)
class LabeledTree:
    label: str
    children: tuple[LabeledTree, ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)


def labeled_tree(run: SolutionRun) -> LabeledTree:
    """Merged-tree shape with status labels; the synthetic root is included
    in both operands, so its constant contribution cancels in comparisons."""
    tree = merge_forest(run)

    def build(node_id: int) -> LabeledTree:
        children = tuple(build(c) for c in tree.children_of(node_id))
        label = ROOT_LABEL if node_id == ROOT_ID else run.node(node_id).status.value
        return LabeledTree(label=label, children=children)

    return build(ROOT_ID)


def _annotate(root: LabeledTree) -> tuple[list[str], list[int], list[int]]:
    """Postorder labels, leftmost-leaf descendants, and keyroot indices."""
    labels: list[str] = []
    lmds: list[int] = []

    def walk(node: LabeledTree) -> int:
        first_leaf = None
        for child in node.children:
            child_index = walk(child)
            if first_leaf is None:
                first_leaf = lmds[child_index]
        index = len(labels)
        labels.append(node.label)
        lmds.append(first_leaf if first_leaf is not None else index)
        return index

    walk(root)
    keyroots = sorted({lmd: i for i, lmd in enumerate(lmds)}.values())
    return labels, lmds, keyroots


def tree_edit_distance(t1: LabeledTree, t2: LabeledTree) -> int:
    """Minimum number of unit-cost inserts/deletes/relabels from t1 to t2."""
    a_labels, a_lmds, a_keyroots = _annotate(t1)
    b_labels, b_lmds, b_keyroots = _annotate(t2)
    treedists = [[0] * len(b_labels) for _ in range(len(a_labels))]

    for i in a_keyroots:
        for j in b_keyroots:
            m = i - a_lmds[i] + 2
            n = j - b_lmds[j] + 2
            fd = [[0] * n for _ in range(m)]
            ioff = a_lmds[i] - 1
            joff = b_lmds[j] - 1
            for x in range(1, m):
                fd[x][0] = fd[x - 1][0] + 1
            for y in range(1, n):
                fd[0][y] = fd[0][y - 1] + 1
            for x in range(1, m):
                for y in range(1, n):
                    if a_lmds[i] == a_lmds[x + ioff] and b_lmds[j] == b_lmds[y + joff]:
                        relabel = 0 if a_labels[x + ioff] == b_labels[y + joff] else 1
                        fd[x][y] = min(
                            fd[x - 1][y] + 1,
                            fd[x][y - 1] + 1,
                            fd[x - 1][y - 1] + relabel,
                        )
                        treedists[x + ioff][y + joff] = fd[x][y]
                    else:
                        p = a_lmds[x + ioff] - 1 - ioff
                        q = b_lmds[y + joff] - 1 - joff
                        fd[x][y] = min(
                            fd[x - 1][y] + 1,
                            fd[x][y - 1] + 1,
                            fd[p][q] + treedists[x + ioff][y + joff],
                        )
    return treedists[-1][-1]


@dataclass(frozen=True)
class DistanceMatrix:
    """k x k tree-edit distances between a runset's solution-trees."""

    run_ids: tuple[str, ...]
    values: np.ndarray

    @property
    def size(self) -> int:
        return self.values.shape[0]


def distance_matrix(runset: RunSet) -> DistanceMatrix:
    if not runset.runs:
        raise ValueError("runset has no runs")
    trees = [labeled_tree(run) for run in runset.runs]
    k = len(trees)
    values = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(i + 1, k):
            d = tree_edit_distance(trees[i], trees[j])
            values[i, j] = d
            values[j, i] = d
    return DistanceMatrix(run_ids=tuple(r.run_id for r in runset.runs), values=values)
