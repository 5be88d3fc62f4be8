/** Thin typed client for the analytics API; fetch is injectable for tests. */

import type {
  CompareResponse,
  DendrogramResponse,
  DiffResponse,
  JobCreated,
  JobStatus,
  NodeDetail,
  OrderKeyName,
  OrderResponse,
  PackagesResponse,
  PointId,
  ProjectionResponse,
  RunSummary,
  RunsetSummary,
  SimilarityResponse,
  TreeResponse,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`API ${status}: ${detail}`);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        detail = ((await response.json()) as { detail?: string }).detail ?? detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  runs(): Promise<RunSummary[]> {
    return this.request('/runs');
  }

  tree(runId: string): Promise<TreeResponse> {
    return this.request(`/runs/${encodeURIComponent(runId)}/tree`);
  }

  node(runId: string, nodeId: number): Promise<NodeDetail> {
    return this.request(`/runs/${encodeURIComponent(runId)}/nodes/${nodeId}`);
  }

  diff(runId: string, a: number, b: number): Promise<DiffResponse> {
    return this.request(`/runs/${encodeURIComponent(runId)}/diff?a=${a}&b=${b}`);
  }

  similarity(runId: string): Promise<SimilarityResponse> {
    return this.request(`/runs/${encodeURIComponent(runId)}/similarity`);
  }

  runsets(): Promise<RunsetSummary[]> {
    return this.request('/runsets');
  }

  order(llmId: string, key: OrderKeyName): Promise<OrderResponse> {
    return this.request(`/runsets/${encodeURIComponent(llmId)}/order?key=${key}`);
  }

  dendrogram(llmId: string, clusters?: number): Promise<DendrogramResponse> {
    const suffix = clusters === undefined ? '' : `?clusters=${clusters}`;
    return this.request(`/runsets/${encodeURIComponent(llmId)}/dendrogram${suffix}`);
  }

  projectionPca(): Promise<ProjectionResponse> {
    return this.request('/projection?algo=pca');
  }

  projectionTsneStart(perplexity: number, iterations: number, seed: number): Promise<JobCreated> {
    return this.request(
      `/projection?algo=tsne&perplexity=${perplexity}&iterations=${iterations}&seed=${seed}`,
    );
  }

  job(jobId: string): Promise<JobStatus> {
    return this.request(`/jobs/${encodeURIComponent(jobId)}`);
  }

  cancelJob(jobId: string): Promise<JobStatus> {
    return this.request(`/jobs/${encodeURIComponent(jobId)}/cancel`, { method: 'POST' });
  }

  packages(sort?: string): Promise<PackagesResponse> {
    const suffix = sort ? `?sort=${encodeURIComponent(sort)}` : '';
    return this.request(`/packages${suffix}`);
  }

  compare(first: PointId[], second: PointId[]): Promise<CompareResponse> {
    return this.request('/compare', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ first, second }),
    });
  }
}
