/** Wires the four coordinated views to the API and the shared view state.
 *
 * Every number on screen comes from an API response; the client only scales
 * for presentation. Selecting a node in the tree re-renders the code view in
 * the same cycle; toggling collapse, ordering, sorting, or lassos re-renders
 * just the affected view.
 */

import { ApiClient } from './api.js';
import { renderCodeView } from './codeView.js';
import { renderPackageView } from './packageView.js';
import { renderProjectionView, selectWithLasso } from './projectionView.js';
import { renderRootsOverview } from './rootsView.js';
import {
  initialState,
  selectNode,
  toggleCollapse,
  toggleDiffMode,
  type ViewState,
} from './state.js';
import { renderTreeView } from './treeView.js';
import type {
  CompareResponse,
  DendrogramResponse,
  OrderResponse,
  ProjectionPointData,
  RunStats,
  TreeResponse,
} from './types.js';

interface Mounts {
  roots: HTMLElement;
  tree: HTMLElement;
  code: HTMLElement;
  projection: HTMLElement;
  packages: HTMLElement;
}

export class App {
  private state: ViewState = initialState();
  private tree: TreeResponse | null = null;
  private points: ProjectionPointData[] = [];
  private comparison: CompareResponse | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly mounts: Mounts,
  ) {}

  async start(): Promise<void> {
    await this.refreshRoots();
    await this.refreshPackages();
    await this.refreshProjection();
  }

  private swap(mount: HTMLElement, el: Element): void {
    mount.replaceChildren(el);
  }

  async refreshRoots(): Promise<void> {
    const [runsets, runs] = await Promise.all([this.api.runsets(), this.api.runs()]);
    const statsByRun = new Map<string, RunStats>(runs.map((r) => [r.run_id, r.stats]));
    const orders = new Map<string, OrderResponse>();
    const dendrograms = new Map<string, DendrogramResponse>();
    for (const runset of runsets) {
      orders.set(runset.llm_id, await this.api.order(runset.llm_id, this.state.orderKey));
      if (this.state.orderKey === 'tree_similarity') {
        dendrograms.set(runset.llm_id, await this.api.dendrogram(runset.llm_id));
      }
    }
    const view = renderRootsOverview(
      { runsets, statsByRun, orders, dendrograms },
      { onSelectRun: (runId) => void this.openRun(runId) },
    );
    this.swap(this.mounts.roots, view);
  }

  async openRun(runId: string): Promise<void> {
    this.tree = await this.api.tree(runId);
    this.state = { ...this.state, selectedRun: runId, selectedNodes: [], collapsed: new Set() };
    this.renderTree();
    await this.renderCode();
  }

  private renderTree(): void {
    if (!this.tree) {
      return;
    }
    const view = renderTreeView(this.tree, this.state, {
      onSelect: (nodeId) => {
        this.state = selectNode(this.state, nodeId);
        this.renderTree();
        void this.renderCode();
      },
      onToggleCollapse: (nodeId) => {
        this.state = toggleCollapse(this.state, this.tree!, nodeId);
        this.renderTree();
      },
    });
    this.swap(this.mounts.tree, view);
  }

  toggleDiff(): void {
    this.state = toggleDiffMode(this.state);
    void this.renderCode();
  }

  private async renderCode(): Promise<void> {
    const runId = this.state.selectedRun;
    if (!runId) {
      return;
    }
    const picked = this.state.selectedNodes;
    const detail = picked.length > 0 ? await this.api.node(runId, picked[picked.length - 1]) : null;
    const diff =
      this.state.diffMode && picked.length === 2
        ? await this.api.diff(runId, picked[0], picked[1])
        : null;
    const matrix = await this.api.similarity(runId);
    const view = renderCodeView(
      { detail, diff, diffMode: this.state.diffMode, matrix },
      {
        onHeatmapCell: (a, b) => {
          this.state = { ...this.state, diffMode: true, selectedNodes: [a, b] };
          void this.renderCode();
        },
      },
    );
    this.swap(this.mounts.code, view);
  }

  async refreshProjection(): Promise<void> {
    if (this.state.algorithm === 'pca') {
      this.points = (await this.api.projectionPca()).points;
    } else {
      const job = await this.api.projectionTsneStart(30, 1000, 0);
      let status = await this.api.job(job.job_id);
      while (status.status === 'pending' || status.status === 'running') {
        await new Promise((resolve) => setTimeout(resolve, 500));
        status = await this.api.job(job.job_id);
      }
      this.points = status.points ?? [];
    }
    this.renderProjection();
  }

  applyLasso(polygon: Array<[number, number]>, slot: 'first' | 'second'): void {
    const picked = selectWithLasso(this.points, polygon);
    this.state =
      slot === 'first'
        ? { ...this.state, lassoFirst: picked }
        : { ...this.state, lassoSecond: picked };
    this.renderProjection();
  }

  private renderProjection(): void {
    const view = renderProjectionView(
      {
        points: this.points,
        lassoFirst: this.state.lassoFirst,
        lassoSecond: this.state.lassoSecond,
        comparison: this.comparison,
      },
      {
        onCompare: (first, second) => {
          void this.api.compare(first, second).then((result) => {
            this.comparison = result;
            this.renderProjection();
          });
        },
      },
    );
    this.swap(this.mounts.projection, view);
  }

  async refreshPackages(): Promise<void> {
    const table = await this.api.packages();
    const view = renderPackageView(table, this.state.packageSort, {
      onSortBy: (llmId) => {
        this.state = { ...this.state, packageSort: llmId };
        void this.refreshPackages();
      },
    });
    this.swap(this.mounts.packages, view);
  }
}

export function mountApp(baseUrl: string, root: Document | HTMLElement = document): App {
  const find = (id: string): HTMLElement => {
    const el = (root instanceof Document ? root : root.ownerDocument!).getElementById(id);
    if (!el) {
      throw new Error(`missing mount point #${id}`);
    }
    return el;
  };
  const app = new App(new ApiClient(baseUrl), {
    roots: find('roots-view'),
    tree: find('tree-view'),
    code: find('code-view'),
    projection: find('projection-view'),
    packages: find('package-view'),
  });
  void app.start();
  return app;
}
