/** Response shapes of the analytics API, mirrored field-for-field. */

export interface RunStats {
  total_time: number;
  best_node_id: number | null;
  best_metric: number | null;
  n_functional: number;
  n_buggy: number;
}

export interface RunSummary {
  run_id: string;
  llm_id: string;
  n_steps: number;
  n_drafts: number;
  metric_direction: string;
  n_nodes: number;
  stats: RunStats;
}

export type NodeStatus = 'functional' | 'buggy';

export interface TreeNode {
  id: number;
  parent_id: number | null;
  stage: string;
  status: NodeStatus;
  metric: number | null;
  exec_time: number;
  depth: number;
  children: number[];
  modified_lines: number;
}

export interface TreeResponse {
  run_id: string;
  root_children: number[];
  nodes: TreeNode[];
  stats: RunStats;
}

export interface NodeDetail {
  run_id: string;
  id: number;
  parent_id: number | null;
  stage: string;
  status: NodeStatus;
  plan: string;
  code: string;
  exec_output: string;
  analysis_report: string;
  metric: number | null;
  exec_time: number;
  llm_id: string;
}

export type DiffTag = 'shared' | 'removed' | 'added';

export interface DiffLine {
  text: string;
  tag: DiffTag;
}

export interface DiffResponse {
  run_id: string;
  a: number;
  b: number;
  lines: DiffLine[];
  modified_lines: number;
}

export interface SimilarityResponse {
  run_id: string;
  size: number;
  values: number[][];
  fallback: boolean[];
}

export interface ValueRange {
  min: number;
  mean: number;
  max: number;
}

export interface RunsetSummary {
  llm_id: string;
  run_ids: string[];
  time_range: ValueRange;
  metric_range: ValueRange | null;
}

export interface MergeStep {
  cluster_a: number;
  cluster_b: number;
  height: number;
  new_cluster: number;
}

export interface DendrogramResponse {
  llm_id: string;
  run_ids: string[];
  leaf_count: number;
  merges: MergeStep[];
  leaf_order: number[];
  labels: number[] | null;
}

export type OrderKeyName =
  | 'total_time'
  | 'best_metric'
  | 'n_buggy'
  | 'n_functional'
  | 'tree_similarity';

export interface OrderResponse {
  llm_id: string;
  key: OrderKeyName;
  order: number[];
  run_ids: string[];
}

export interface ProjectionPointData {
  x: number;
  y: number;
  run_id: string;
  node_id: number;
  llm_id: string;
}

export interface ProjectionResponse {
  algo: string;
  points: ProjectionPointData[];
}

export interface JobCreated {
  job_id: string;
}

export interface JobStatus {
  job_id: string;
  status: 'pending' | 'running' | 'done' | 'error' | 'cancelled';
  progress: number;
  error: string | null;
  points: ProjectionPointData[] | null;
}

export interface PackageCell {
  llm_id: string;
  use_count: number;
  buggy_count: number;
}

export interface PackageRow {
  package: string;
  cells: PackageCell[];
}

export interface PackagesResponse {
  llm_ids: string[];
  rows: PackageRow[];
}

export interface PointId {
  run_id: string;
  node_id: number;
}

export interface CompareResponse {
  mode: 'offline' | 'live';
  prompt: string;
  text: string;
}
