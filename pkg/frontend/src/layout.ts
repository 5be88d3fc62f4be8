/** Top-down layered layout of the merged tree with a fixed sibling order. */

import { visibleNodes } from './state.js';
import type { TreeNode, TreeResponse } from './types.js';

export interface PlacedNode {
  node: TreeNode | null; // null marks the synthetic root
  id: number;
  x: number;
  y: number;
}

export const ROOT_ID = -1;
export const LEVEL_HEIGHT = 90;
export const SIBLING_GAP = 46;

/**
 * Positions for the synthetic root plus every visible node. Leaves are laid
 * out left to right (siblings by step id); internal nodes center over their
 * visible children.
 */
export function layoutTree(tree: TreeResponse, collapsed: Set<number>): PlacedNode[] {
  const visible = new Map(visibleNodes(tree, collapsed).map((n) => [n.id, n]));
  const xs = new Map<number, number>();
  let cursor = 0;

  const childrenOf = (id: number): number[] => {
    if (collapsed.has(id)) {
      return [];
    }
    const ids = id === ROOT_ID ? tree.root_children : visible.get(id)?.children ?? [];
    return ids.filter((c) => visible.has(c)).sort((a, b) => a - b);
  };

  const place = (id: number): number => {
    const kids = childrenOf(id);
    if (kids.length === 0) {
      const x = cursor * SIBLING_GAP;
      cursor += 1;
      xs.set(id, x);
      return x;
    }
    const positions = kids.map(place);
    const x = (positions[0] + positions[positions.length - 1]) / 2;
    xs.set(id, x);
    return x;
  };
  place(ROOT_ID);

  const placed: PlacedNode[] = [
    { node: null, id: ROOT_ID, x: xs.get(ROOT_ID) ?? 0, y: 0 },
  ];
  for (const node of visible.values()) {
    if (!xs.has(node.id)) {
      continue; // hidden under a collapsed ancestor
    }
    placed.push({ node, id: node.id, x: xs.get(node.id)!, y: node.depth * LEVEL_HEIGHT });
  }
  return placed;
}
