/** Shared view state and the invariants the views rely on. */

import type { OrderKeyName, PointId, TreeNode, TreeResponse } from './types.js';

export interface ViewState {
  selectedRun: string | null;
  /** Selection order preserved; capped at 2 while diff mode is on. */
  selectedNodes: number[];
  diffMode: boolean;
  /** Only internal (non-leaf) node ids may enter this set. */
  collapsed: Set<number>;
  algorithm: 'pca' | 'tsne';
  lassoFirst: PointId[];
  lassoSecond: PointId[];
  packageSort: string | null;
  orderKey: OrderKeyName;
}

export function initialState(): ViewState {
  return {
    selectedRun: null,
    selectedNodes: [],
    diffMode: false,
    collapsed: new Set(),
    algorithm: 'pca',
    lassoFirst: [],
    lassoSecond: [],
    packageSort: null,
    orderKey: 'total_time',
  };
}

export function nodeById(tree: TreeResponse, id: number): TreeNode {
  const node = tree.nodes.find((n) => n.id === id);
  if (!node) {
    throw new Error(`no node ${id} in run ${tree.run_id}`);
  }
  return node;
}

export function isInternal(node: TreeNode): boolean {
  return node.children.length > 0;
}

export function selectNode(state: ViewState, nodeId: number): ViewState {
  const kept = state.selectedNodes.filter((id) => id !== nodeId);
  let selected = [...kept, nodeId];
  if (state.diffMode && selected.length > 2) {
    selected = selected.slice(-2);
  }
  return { ...state, selectedNodes: selected };
}

export function toggleDiffMode(state: ViewState): ViewState {
  const diffMode = !state.diffMode;
  const selectedNodes = diffMode ? state.selectedNodes.slice(-2) : state.selectedNodes;
  return { ...state, diffMode, selectedNodes };
}

/** Collapse toggles ignore leaves: there is nothing under them to hide. */
export function toggleCollapse(state: ViewState, tree: TreeResponse, nodeId: number): ViewState {
  if (!isInternal(nodeById(tree, nodeId))) {
    return state;
  }
  const collapsed = new Set(state.collapsed);
  if (collapsed.has(nodeId)) {
    collapsed.delete(nodeId);
  } else {
    collapsed.add(nodeId);
  }
  return { ...state, collapsed };
}

export function descendantIds(tree: TreeResponse, nodeId: number): number[] {
  const out: number[] = [];
  const stack = [...nodeById(tree, nodeId).children];
  while (stack.length > 0) {
    const id = stack.pop()!;
    out.push(id);
    stack.push(...nodeById(tree, id).children);
  }
  return out;
}

/** Nodes still on screen after hiding every collapsed subtree. */
export function visibleNodes(tree: TreeResponse, collapsed: Set<number>): TreeNode[] {
  const hidden = new Set<number>();
  for (const id of collapsed) {
    for (const below of descendantIds(tree, id)) {
      hidden.add(below);
    }
  }
  return tree.nodes.filter((n) => !hidden.has(n.id));
}
