"""Journal data model: solution runs, forest merging, and per-run statistics.

A journal is the on-disk record of one solution-seeking run: a config block
plus one record per generated node. Everything downstream (tree analytics,
code similarity, projections, the HTTP API) is derived from journals alone.
"""

from __future__ import annotations

import json
import math
import statistics
import warnings
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from importlib import resources

import jsonschema

from treelab.diffing import line_diff

# Synthetic root added by merge_forest; never a real node id.
ROOT_ID = -1


class Stage(str, Enum):
    DRAFT = "draft"
    DEBUG = "debug"
    IMPROVE = "improve"


class Status(str, Enum):
    FUNCTIONAL = "functional"
    BUGGY = "buggy"


class MetricDirection(str, Enum):
    LOWER_BETTER = "lower_better"
    HIGHER_BETTER = "higher_better"


class JournalError(ValueError):
    """Journal fails schema or semantic validation.

    ``node_id`` and ``field`` locate the offending record when applicable.
    """

    def __init__(self, message: str, node_id: int | None = None, field: str | None = None):
        prefix = ""
        if node_id is not None:
            prefix = f"node {node_id}: "
        if field is not None:
            prefix += f"field '{field}': "
        super().__init__(prefix + message)
        self.node_id = node_id
        self.field = field


class JournalWarning(UserWarning):
    """Recoverable journal irregularity (e.g. missing exec_time)."""


@dataclass(frozen=True)
class NodeRecord:
    """One solution node: plan, code, execution outcome, and lineage."""

    id: int
    parent_id: int | None
    stage: Stage
    status: Status
    plan: str
    code: str
    exec_output: str
    metric: float | None
    exec_time: float
    analysis_report: str
    llm_id: str


@dataclass(frozen=True)
class RunConfig:
    n_steps: int
    n_drafts: int
    llm_id: str
    metric_direction: MetricDirection
    seed: int | None = None


@dataclass(frozen=True)
class SolutionRun:
    """One complete solution-seeking process: config plus its node records.

    Node ids are dense 0..len-1 but the storage order of ``nodes`` is not
    significant; all operations treat the run as a set of records keyed by id.
    """

    run_id: str
    config: RunConfig
    nodes: tuple[NodeRecord, ...]

    def node(self, node_id: int) -> NodeRecord:
        return self._by_id[node_id]

    @cached_property
    def _by_id(self) -> dict[int, NodeRecord]:
        return {n.id: n for n in self.nodes}

    def functional_nodes(self) -> list[NodeRecord]:
        return [n for n in sorted(self.nodes, key=lambda n: n.id) if n.status is Status.FUNCTIONAL]

    def buggy_nodes(self) -> list[NodeRecord]:
        return [n for n in sorted(self.nodes, key=lambda n: n.id) if n.status is Status.BUGGY]

    def draft_count(self) -> int:
        return sum(1 for n in self.nodes if n.stage is Stage.DRAFT)


@dataclass(frozen=True)
class MergedTree:
    """A run's forest joined under a synthetic root (id ``ROOT_ID``).

    The synthetic root carries no code; every draft node hangs off it, so the
    tree has exactly ``len(run.nodes) + 1`` nodes.
    """

    run_id: str
    children: dict[int, tuple[int, ...]]
    depth: dict[int, int]

    @property
    def node_count(self) -> int:
        return len(self.depth)

    def children_of(self, node_id: int) -> tuple[int, ...]:
        return self.children.get(node_id, ())


@dataclass(frozen=True)
class RunStats:
    total_time: float
    best_node_id: int | None
    best_metric: float | None
    n_functional: int
    n_buggy: int


@dataclass(frozen=True)
class RunSet:
    """All runs of one LLM, with min/mean/max aggregates for the overview row."""

    llm_id: str
    runs: tuple[SolutionRun, ...]
    time_range: tuple[float, float, float]
    metric_range: tuple[float, float, float] | None


def _load_schema() -> dict:
    text = resources.files("treelab.schemas").joinpath("journal.schema.json").read_text("utf-8")
    return json.loads(text)


_SCHEMA = _load_schema()
_VALIDATOR = jsonschema.Draft202012Validator(_SCHEMA)


def parse_journal(data: bytes | str) -> SolutionRun:
    """Parse and validate one journal document.

    Raises ``JournalError`` on malformed documents, dangling or out-of-order
    parents, id gaps, and status/metric mismatches; the error names the node
    and field at fault. A missing ``exec_time`` is tolerated (treated as 0)
    with a ``JournalWarning``.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise JournalError(f"journal is not valid UTF-8: {exc}") from None
    else:
        text = data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JournalError(f"journal is not valid JSON: {exc}") from None

    error = jsonschema.exceptions.best_match(_VALIDATOR.iter_errors(doc))
    if error is not None:
        path = "/".join(str(p) for p in error.absolute_path)
        raise JournalError(f"schema violation at '{path}': {error.message}")

    cfg_doc = doc["config"]
    config = RunConfig(
        n_steps=cfg_doc["n_steps"],
        n_drafts=cfg_doc["n_drafts"],
        llm_id=cfg_doc["llm_id"],
        metric_direction=MetricDirection(cfg_doc["metric_direction"]),
        seed=cfg_doc.get("seed"),
    )
    if not 1 <= config.n_drafts <= config.n_steps:
        raise JournalError(
            f"n_drafts={config.n_drafts} outside 1..n_steps={config.n_steps}", field="n_drafts"
        )

    raw_nodes = doc["nodes"]
    if len(raw_nodes) > config.n_steps:
        raise JournalError(
            f"{len(raw_nodes)} nodes exceed config n_steps={config.n_steps}", field="nodes"
        )

    ids = [raw["id"] for raw in raw_nodes]
    seen: set[int] = set()
    for node_id in ids:
        if node_id in seen:
            raise JournalError("duplicate node id", node_id=node_id, field="id")
        seen.add(node_id)
    expected = set(range(len(raw_nodes)))
    if seen != expected:
        missing = sorted(expected - seen)
        extra = sorted(seen - expected)
        raise JournalError(
            f"node ids must be dense 0..{len(raw_nodes) - 1}; missing={missing} extra={extra}",
            field="id",
        )

    nodes = []
    for raw in raw_nodes:
        node_id = raw["id"]
        parent_id = raw.get("parent_id")
        stage = Stage(raw["stage"])
        status = Status(raw["status"])
        metric = raw.get("metric")

        if stage is Stage.DRAFT and parent_id is not None:
            raise JournalError("draft node must not have a parent", node_id, "parent_id")
        if stage is not Stage.DRAFT and parent_id is None:
            raise JournalError(f"{stage.value} node requires a parent", node_id, "parent_id")
        if parent_id is not None:
            if parent_id not in seen:
                raise JournalError(f"dangling parent_id {parent_id}", node_id, "parent_id")
            if parent_id >= node_id:
                raise JournalError("parent after child", node_id, "parent_id")
        if status is Status.FUNCTIONAL and metric is None:
            raise JournalError("functional node requires a metric", node_id, "metric")
        if status is Status.BUGGY and metric is not None:
            raise JournalError("buggy node must not carry a metric", node_id, "metric")
        if metric is not None and not math.isfinite(metric):
            raise JournalError("metric must be finite", node_id, "metric")

        exec_time = raw.get("exec_time")
        if exec_time is None:
            warnings.warn(
                f"node {node_id}: missing exec_time treated as 0", JournalWarning, stacklevel=2
            )
            exec_time = 0.0
        if exec_time < 0:
            raise JournalError("exec_time must be >= 0", node_id, "exec_time")

        nodes.append(
            NodeRecord(
                id=node_id,
                parent_id=parent_id,
                stage=stage,
                status=status,
                plan=raw["plan"],
                code=raw["code"],
                exec_output=raw["exec_output"],
                metric=metric,
                exec_time=float(exec_time),
                analysis_report=raw["analysis_report"],
                llm_id=raw["llm_id"],
            )
        )
    return SolutionRun(run_id=doc["run_id"], config=config, nodes=tuple(nodes))


def dump_journal(run: SolutionRun) -> bytes:
    """Serialize a run to canonical journal bytes (stable key order and layout).

    Replaying a seeded simulation therefore reproduces the file byte for byte.
    """
    doc = {
        "run_id": run.run_id,
        "config": {
            "n_steps": run.config.n_steps,
            "n_drafts": run.config.n_drafts,
            "llm_id": run.config.llm_id,
            "metric_direction": run.config.metric_direction.value,
            "seed": run.config.seed,
        },
        "nodes": [
            {
                "id": n.id,
                "parent_id": n.parent_id,
                "stage": n.stage.value,
                "status": n.status.value,
                "plan": n.plan,
                "code": n.code,
                "exec_output": n.exec_output,
                "metric": n.metric,
                "exec_time": n.exec_time,
                "analysis_report": n.analysis_report,
                "llm_id": n.llm_id,
            }
            for n in sorted(run.nodes, key=lambda n: n.id)
        ],
    }
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def merge_forest(run: SolutionRun) -> MergedTree:
    """Join the run's trees under the synthetic root; drafts become its children."""
    children: dict[int, list[int]] = {ROOT_ID: []}
    for node in sorted(run.nodes, key=lambda n: n.id):
        parent = node.parent_id if node.parent_id is not None else ROOT_ID
        children.setdefault(parent, []).append(node.id)
    depth = {ROOT_ID: 0}
    stack = [ROOT_ID]
    while stack:
        current = stack.pop()
        for child in children.get(current, ()):
            depth[child] = depth[current] + 1
            stack.append(child)
    return MergedTree(
        run_id=run.run_id,
        children={k: tuple(v) for k, v in children.items()},
        depth=depth,
    )


def best_functional(run: SolutionRun) -> NodeRecord | None:
    """Best node under the run's metric direction; ties go to the smallest id."""
    best: NodeRecord | None = None
    lower = run.config.metric_direction is MetricDirection.LOWER_BETTER
    for node in sorted(run.nodes, key=lambda n: n.id):
        if node.status is not Status.FUNCTIONAL:
            continue
        if best is None:
            best = node
        elif lower and node.metric < best.metric:
            best = node
        elif not lower and node.metric > best.metric:
            best = node
    return best


def run_stats(run: SolutionRun) -> RunStats:
    best = best_functional(run)
    n_functional = sum(1 for n in run.nodes if n.status is Status.FUNCTIONAL)
    return RunStats(
        # fsum: exactly-rounded, so storage order cannot perturb the total
        total_time=math.fsum(n.exec_time for n in run.nodes),
        best_node_id=best.id if best else None,
        best_metric=best.metric if best else None,
        n_functional=n_functional,
        n_buggy=len(run.nodes) - n_functional,
    )


def build_runsets(runs: list[SolutionRun]) -> list[RunSet]:
    """Group runs by LLM id (sorted) and compute the overview aggregates."""
    by_llm: dict[str, list[SolutionRun]] = {}
    for run in runs:
        by_llm.setdefault(run.config.llm_id, []).append(run)
    runsets = []
    for llm_id in sorted(by_llm):
        group = sorted(by_llm[llm_id], key=lambda r: r.run_id)
        stats = [run_stats(r) for r in group]
        times = [s.total_time for s in stats]
        metrics = [s.best_metric for s in stats if s.best_metric is not None]
        runsets.append(
            RunSet(
                llm_id=llm_id,
                runs=tuple(group),
                time_range=(min(times), statistics.fmean(times), max(times)),
                metric_range=(
                    (min(metrics), statistics.fmean(metrics), max(metrics)) if metrics else None
                ),
            )
        )
    return runsets


def modified_line_count(parent_code: str, child_code: str) -> int:
    """Added plus removed lines between two code texts; drives link thickness."""
    return sum(1 for _, tag in line_diff(parent_code, child_code) if tag != "shared")
