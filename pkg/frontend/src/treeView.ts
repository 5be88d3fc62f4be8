/** Node-link diagram of one solution-tree.
 *
 * Encodings: node fill is status (green functional, red buggy); the step id
 * sits inside the node and is underlined for internal nodes; functional
 * nodes get their metric beside them; the best node wears the award ribbon;
 * the outer blue arc is execution time relative to the run maximum; link
 * thickness is the number of modified lines relative to the run maximum.
 */

import { ROOT_FILL, TIME_ARC_BLUE, statusColor } from './colors.js';
import { LEVEL_HEIGHT, ROOT_ID, layoutTree, type PlacedNode } from './layout.js';
import { isInternal, type ViewState } from './state.js';
import { arcPath, piePath, svgEl } from './svg.js';
import type { TreeNode, TreeResponse } from './types.js';

export interface TreeViewHandlers {
  onSelect?: (nodeId: number) => void;
  onToggleCollapse?: (nodeId: number) => void;
}

const NODE_RADIUS = 14;
const ARC_RADIUS = 19;
const MAX_LINK_WIDTH = 7;
export const VIRTUALIZATION_THRESHOLD = 500;

function linkWidth(lines: number, maxLines: number): number {
  if (maxLines <= 0) {
    return 1;
  }
  return 1 + (MAX_LINK_WIDTH - 1) * (lines / maxLines);
}

function nodeGroup(
  placed: PlacedNode,
  tree: TreeResponse,
  state: ViewState,
  maxExecTime: number,
  virtualized: boolean,
  handlers: TreeViewHandlers,
): SVGGElement {
  const group = svgEl('g', { class: 'tree-node', transform: `translate(${placed.x}, ${placed.y})` });
  const node = placed.node as TreeNode;
  group.dataset.nodeId = String(node.id);

  const circle = svgEl('circle', { r: NODE_RADIUS, fill: statusColor(node.status) });
  if (state.selectedNodes.includes(node.id)) {
    circle.setAttribute('stroke', '#222');
    circle.setAttribute('stroke-width', '2.5');
  }
  group.appendChild(circle);

  if (virtualized) {
    return group;
  }

  const label = svgEl('text', {
    class: 'step-id',
    'text-anchor': 'middle',
    dy: '0.35em',
    'font-size': 11,
  });
  label.textContent = String(node.id);
  if (isInternal(node)) {
    // the underline marks nodes that can be collapsed/expanded
    label.setAttribute('text-decoration', 'underline');
  }
  group.appendChild(label);

  if (node.metric !== null) {
    const metric = svgEl('text', {
      class: 'metric-label',
      x: ARC_RADIUS + 4,
      dy: '0.35em',
      'font-size': 10,
    });
    metric.textContent = node.metric.toFixed(4);
    group.appendChild(metric);
  }

  if (tree.stats.best_node_id === node.id) {
    const ribbon = svgEl('text', {
      class: 'award-ribbon',
      y: -ARC_RADIUS - 4,
      'text-anchor': 'middle',
      'font-size': 12,
    });
    ribbon.textContent = '\u{1F396}';
    group.appendChild(ribbon);
  }

  const fraction = maxExecTime > 0 ? node.exec_time / maxExecTime : 0;
  const arc = arcPath(0, 0, ARC_RADIUS, fraction);
  if (arc) {
    group.appendChild(
      svgEl('path', {
        class: 'time-arc',
        d: arc,
        fill: 'none',
        stroke: TIME_ARC_BLUE,
        'stroke-width': 3,
      }),
    );
  }

  group.addEventListener('click', () => handlers.onSelect?.(node.id));
  group.addEventListener('dblclick', () => {
    if (isInternal(node)) {
      handlers.onToggleCollapse?.(node.id);
    }
  });
  return group;
}

function rootGroup(placed: PlacedNode, tree: TreeResponse): SVGGElement {
  const group = svgEl('g', { class: 'tree-root', transform: `translate(${placed.x}, ${placed.y})` });
  const { n_functional, n_buggy } = tree.stats;
  const total = n_functional + n_buggy;
  group.appendChild(svgEl('circle', { r: NODE_RADIUS, fill: ROOT_FILL, stroke: '#999' }));
  if (total > 0) {
    group.appendChild(
      svgEl('path', {
        class: 'root-pie-functional',
        d: piePath(0, 0, NODE_RADIUS, n_functional / total),
        fill: statusColor('functional'),
      }),
    );
  }
  return group;
}

export function renderTreeView(
  tree: TreeResponse,
  state: ViewState,
  handlers: TreeViewHandlers = {},
): SVGSVGElement {
  const placed = layoutTree(tree, state.collapsed);
  const virtualized = placed.length > VIRTUALIZATION_THRESHOLD;
  const byId = new Map(placed.map((p) => [p.id, p]));
  const maxExecTime = Math.max(0, ...tree.nodes.map((n) => n.exec_time));
  const maxLines = Math.max(0, ...tree.nodes.map((n) => n.modified_lines));

  const width = Math.max(...placed.map((p) => p.x)) + 80;
  const height = Math.max(...placed.map((p) => p.y)) + LEVEL_HEIGHT;
  const svg = svgEl('svg', {
    class: virtualized ? 'tree-view virtualized' : 'tree-view',
    viewBox: `-40 -40 ${width + 40} ${height + 40}`,
    width,
    height,
  });

  const links = svgEl('g', { class: 'links' });
  for (const p of placed) {
    if (p.node === null) {
      continue;
    }
    const parentId = p.node.parent_id ?? ROOT_ID;
    const parent = byId.get(parentId);
    if (!parent) {
      continue;
    }
    links.appendChild(
      svgEl('line', {
        class: 'tree-link',
        x1: parent.x,
        y1: parent.y,
        x2: p.x,
        y2: p.y,
        stroke: '#b5b5b5',
        'stroke-width': virtualized ? 1 : linkWidth(p.node.modified_lines, maxLines),
      }),
    );
  }
  svg.appendChild(links);

  const nodes = svgEl('g', { class: 'nodes' });
  for (const p of placed) {
    nodes.appendChild(
      p.node === null
        ? rootGroup(p, tree)
        : nodeGroup(p, tree, state, maxExecTime, virtualized, handlers),
    );
  }
  svg.appendChild(nodes);
  return svg;
}
