"""Request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class RunStatsModel(BaseModel):
    total_time: float
    best_node_id: int | None
    best_metric: float | None
    n_functional: int
    n_buggy: int


class RunSummary(BaseModel):
    run_id: str
    llm_id: str
    n_steps: int
    n_drafts: int
    metric_direction: str
    n_nodes: int
    stats: RunStatsModel


class TreeNode(BaseModel):
    id: int
    parent_id: int | None
    stage: str
    status: str
    metric: float | None
    exec_time: float
    depth: int
    children: list[int]
    modified_lines: int


class TreeResponse(BaseModel):
    run_id: str
    root_children: list[int]
    nodes: list[TreeNode]
    stats: RunStatsModel


class NodeDetail(BaseModel):
    run_id: str
    id: int
    parent_id: int | None
    stage: str
    status: str
    plan: str
    code: str
    exec_output: str
    analysis_report: str
    metric: float | None
    exec_time: float
    llm_id: str


class DiffLineModel(BaseModel):
    text: str
    tag: str  # shared | removed | added


class DiffResponse(BaseModel):
    run_id: str
    a: int
    b: int
    lines: list[DiffLineModel]
    modified_lines: int


class SimilarityResponse(BaseModel):
    run_id: str
    size: int
    values: list[list[float]]
    fallback: list[bool]


class RepeatedBugModel(BaseModel):
    node_id: int
    earlier_node_id: int
    signature: str


class FindingsResponse(BaseModel):
    run_id: str
    repeated_bugs: list[RepeatedBugModel]
    identical_siblings: list[list[int]]


class RangeModel(BaseModel):
    min: float
    mean: float
    max: float


class RunsetSummary(BaseModel):
    llm_id: str
    run_ids: list[str]
    time_range: RangeModel
    metric_range: RangeModel | None


class DistanceResponse(BaseModel):
    llm_id: str
    run_ids: list[str]
    values: list[list[int]]


class MergeModel(BaseModel):
    cluster_a: int
    cluster_b: int
    height: float
    new_cluster: int


class DendrogramResponse(BaseModel):
    llm_id: str
    run_ids: list[str]
    leaf_count: int
    merges: list[MergeModel]
    leaf_order: list[int]
    labels: list[int] | None = None


class OrderResponse(BaseModel):
    llm_id: str
    key: str
    order: list[int]
    run_ids: list[str]


class PointModel(BaseModel):
    x: float
    y: float
    run_id: str
    node_id: int
    llm_id: str


class ProjectionResponse(BaseModel):
    algo: str
    points: list[PointModel]


class JobCreated(BaseModel):
    job_id: str


class JobStatus(BaseModel):
    job_id: str
    status: str
    progress: float
    error: str | None = None
    points: list[PointModel] | None = None


class PackageCellModel(BaseModel):
    llm_id: str
    use_count: int
    buggy_count: int


class PackageRowModel(BaseModel):
    package: str
    cells: list[PackageCellModel]


class PackagesResponse(BaseModel):
    llm_ids: list[str]
    rows: list[PackageRowModel]


class PointId(BaseModel):
    run_id: str
    node_id: int


class CompareRequestModel(BaseModel):
    first: list[PointId] = Field(min_length=1)
    second: list[PointId] = Field(min_length=1)


class CompareResponse(BaseModel):
    mode: str  # live | offline
    prompt: str
    text: str
