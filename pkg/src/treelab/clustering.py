"""Agglomerative clustering of solution-trees and root-overview ordering."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from treelab.journal import RunSet, run_stats
from treelab.treedist import DistanceMatrix, distance_matrix


class Merge(NamedTuple):
    cluster_a: int
    cluster_b: int
    height: float
    new_cluster: int


@dataclass(frozen=True)
class Dendrogram:
    """Average-linkage merge sequence; leaves are 0..k-1, merged clusters
    continue the numbering, and ``leaf_order`` is the display traversal."""

    leaf_count: int
    merges: tuple[Merge, ...]
    leaf_order: tuple[int, ...]


def hierarchical_cluster(dist: DistanceMatrix | np.ndarray) -> Dendrogram:
    """Agglomerative average-linkage clustering of a distance matrix.

    Ties are broken toward the smallest (a, b) cluster-id pair, which makes
    the merge order, heights, and leaf order fully deterministic.
    """
    values = dist.values if isinstance(dist, DistanceMatrix) else np.asarray(dist, dtype=float)
    k = values.shape[0]
    members: dict[int, list[int]] = {i: [i] for i in range(k)}
    children: dict[int, tuple[int, int]] = {}
    merges: list[Merge] = []
    next_id = k

    def linkage(a: int, b: int) -> float:
        rows = values[np.ix_(members[a], members[b])]
        return float(rows.mean())

    while len(members) > 1:
        active = sorted(members)
        best: tuple[float, int, int] | None = None
        for ai, a in enumerate(active):
            for b in active[ai + 1 :]:
                d = linkage(a, b)
                if best is None or d < best[0] or (d == best[0] and (a, b) < best[1:]):
                    best = (d, a, b)
        height, a, b = best
        members[next_id] = members.pop(a) + members.pop(b)
        children[next_id] = (a, b)
        merges.append(Merge(a, b, height, next_id))
        next_id += 1

    def order(cluster: int) -> list[int]:
        if cluster < k:
            return [cluster]
        left, right = children[cluster]
        return order(left) + order(right)

    leaf_order = tuple(order(next_id - 1)) if k > 0 else ()
    return Dendrogram(leaf_count=k, merges=tuple(merges), leaf_order=leaf_order)


def flat_clusters(dend: Dendrogram, count: int) -> list[int]:
    """Cut the dendrogram into exactly ``count`` clusters.

    Labels are assigned by each cluster's smallest leaf index, so repeated
    calls give identical labelings.
    """
    if not 1 <= count <= dend.leaf_count:
        raise ValueError(f"count={count} outside 1..{dend.leaf_count}")
    members: dict[int, list[int]] = {i: [i] for i in range(dend.leaf_count)}
    for merge in dend.merges[: dend.leaf_count - count]:
        members[merge.new_cluster] = members.pop(merge.cluster_a) + members.pop(merge.cluster_b)
    clusters = sorted(members.values(), key=min)
    labels = [0] * dend.leaf_count
    for label, leaves in enumerate(clusters):
        for leaf in leaves:
            labels[leaf] = label
    return labels


class OrderKey(str, Enum):
    TOTAL_TIME = "total_time"
    BEST_METRIC = "best_metric"
    N_BUGGY = "n_buggy"
    N_FUNCTIONAL = "n_functional"
    TREE_SIMILARITY = "tree_similarity"


def order_roots(runset: RunSet, key: OrderKey | str) -> list[int]:
    """Permutation of run indices for the root overview row.

    Scalar keys sort ascending with a stable tie-break on run index; runs
    without a best metric sort last. Tree similarity returns the dendrogram
    leaf order so structurally close trees sit together.
    """
    key = OrderKey(key)
    if key is OrderKey.TREE_SIMILARITY:
        return list(hierarchical_cluster(distance_matrix(runset)).leaf_order)
    stats = [run_stats(run) for run in runset.runs]
    if key is OrderKey.TOTAL_TIME:
        values = [s.total_time for s in stats]
    elif key is OrderKey.BEST_METRIC:
        values = [s.best_metric if s.best_metric is not None else float("inf") for s in stats]
    elif key is OrderKey.N_BUGGY:
        values = [s.n_buggy for s in stats]
    else:
        values = [s.n_functional for s in stats]
    return sorted(range(len(values)), key=lambda i: (values[i], i))
