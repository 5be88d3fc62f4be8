/** Canned API payloads used by the headless view tests. */

import type { FetchLike } from '../src/api.js';
import type {
  PackagesResponse,
  RunStats,
  TreeNode,
  TreeResponse,
} from '../src/types.js';

export const BUGGY_IDS = new Set([0, 3, 8, 13, 18]);

/**
 * 31-node fixture (30 records + synthetic root): five drafts, four chains
 * (node i hangs under i-5 for 5..22), and node 22 improved seven times by
 * nodes 23..29. Node 28 is the best node; node 17 runs longest.
 */
export function fixtureTree(): TreeResponse {
  const parents = new Map<number, number | null>();
  for (let i = 0; i < 5; i += 1) {
    parents.set(i, null);
  }
  for (let i = 5; i <= 22; i += 1) {
    parents.set(i, i - 5);
  }
  for (let i = 23; i <= 29; i += 1) {
    parents.set(i, 22);
  }

  const children = new Map<number, number[]>();
  for (const [id, parent] of parents) {
    if (parent !== null) {
      children.set(parent, [...(children.get(parent) ?? []), id]);
    }
  }
  const depth = (id: number): number => {
    const parent = parents.get(id);
    return parent === null || parent === undefined ? 1 : depth(parent) + 1;
  };

  const nodes: TreeNode[] = [];
  for (let id = 0; id < 30; id += 1) {
    const buggy = BUGGY_IDS.has(id);
    nodes.push({
      id,
      parent_id: parents.get(id) ?? null,
      stage: parents.get(id) === null ? 'draft' : id >= 23 ? 'improve' : 'debug',
      status: buggy ? 'buggy' : 'functional',
      metric: buggy ? null : id === 28 ? 0.1 : 0.3 - 0.005 * id,
      exec_time: id === 17 ? 25 : (id % 7) + 1,
      depth: depth(id),
      children: (children.get(id) ?? []).sort((a, b) => a - b),
      modified_lines: id % 9,
    });
  }

  const functional = nodes.filter((n) => n.status === 'functional');
  const stats: RunStats = {
    total_time: nodes.reduce((acc, n) => acc + n.exec_time, 0),
    best_node_id: 28,
    best_metric: 0.1,
    n_functional: functional.length,
    n_buggy: nodes.length - functional.length,
  };
  return { run_id: 'fixture-run', root_children: [0, 1, 2, 3, 4], nodes, stats };
}

export const INTERNAL_IDS = new Set([...Array(18).keys(), 22]);

export function allBuggyStar(count = 30): TreeResponse {
  const nodes: TreeNode[] = [];
  for (let id = 0; id < count; id += 1) {
    nodes.push({
      id,
      parent_id: null,
      stage: 'draft',
      status: 'buggy',
      metric: null,
      exec_time: 1,
      depth: 1,
      children: [],
      modified_lines: 0,
    });
  }
  return {
    run_id: 'all-buggy',
    root_children: nodes.map((n) => n.id),
    nodes,
    stats: {
      total_time: count,
      best_node_id: null,
      best_metric: null,
      n_functional: 0,
      n_buggy: count,
    },
  };
}

export function longChain(count: number): TreeResponse {
  const nodes: TreeNode[] = [];
  for (let id = 0; id < count; id += 1) {
    nodes.push({
      id,
      parent_id: id === 0 ? null : id - 1,
      stage: id === 0 ? 'draft' : 'debug',
      status: 'functional',
      metric: 0.5,
      exec_time: 1,
      depth: id + 1,
      children: id + 1 < count ? [id + 1] : [],
      modified_lines: 1,
    });
  }
  return {
    run_id: 'chain',
    root_children: [0],
    nodes,
    stats: {
      total_time: count,
      best_node_id: 0,
      best_metric: 0.5,
      n_functional: count,
      n_buggy: 0,
    },
  };
}

export function packageFixture(): PackagesResponse {
  const rows = [
    { package: 'lightgbm', counts: { 'llm-a': 2, 'llm-b': 30 }, buggy: { 'llm-a': 2, 'llm-b': 30 } },
    { package: 'numpy', counts: { 'llm-a': 25, 'llm-b': 12 }, buggy: { 'llm-a': 0, 'llm-b': 1 } },
    { package: 'os', counts: { 'llm-a': 4, 'llm-b': 4 }, buggy: { 'llm-a': 1, 'llm-b': 0 } },
    { package: 'pandas', counts: { 'llm-a': 25, 'llm-b': 20 }, buggy: { 'llm-a': 3, 'llm-b': 2 } },
  ];
  return {
    llm_ids: ['llm-a', 'llm-b'],
    rows: rows.map((r) => ({
      package: r.package,
      cells: (['llm-a', 'llm-b'] as const).map((llm) => ({
        llm_id: llm,
        use_count: r.counts[llm],
        buggy_count: r.buggy[llm],
      })),
    })),
  };
}

/** fetch stub serving canned JSON bodies by exact path (ignores base URL). */
export function mockFetch(routes: Record<string, unknown>): FetchLike {
  return async (input: string) => {
    const path = input.replace(/^https?:\/\/[^/]+/, '');
    if (path in routes) {
      return new Response(JSON.stringify(routes[path]), {
        status: 200,
        headers: { 'content-type': 'application/json' },
      });
    }
    return new Response(JSON.stringify({ detail: `no route ${path}` }), { status: 404 });
  };
}
