/** Scatterplot of projected code embeddings with zoom, two lasso selections,
 * and the comparison summary underneath. */

import { llmColor } from './colors.js';
import { htmlEl, svgEl } from './svg.js';
import type { CompareResponse, PointId, ProjectionPointData } from './types.js';

export interface ProjectionHandlers {
  onCompare?: (first: PointId[], second: PointId[]) => void;
}

export type Polygon = Array<[number, number]>;

/** Ray-casting containment test; boundary behavior follows the crossing rule. */
export function pointInPolygon(x: number, y: number, polygon: Polygon): boolean {
  let inside = false;
  for (let i = 0, j = polygon.length - 1; i < polygon.length; j = i, i += 1) {
    const [xi, yi] = polygon[i];
    const [xj, yj] = polygon[j];
    const crosses = yi > y !== yj > y && x < ((xj - xi) * (y - yi)) / (yj - yi) + xi;
    if (crosses) {
      inside = !inside;
    }
  }
  return inside;
}

export function selectWithLasso(points: ProjectionPointData[], polygon: Polygon): PointId[] {
  if (polygon.length < 3) {
    return [];
  }
  return points
    .filter((p) => pointInPolygon(p.x, p.y, polygon))
    .map((p) => ({ run_id: p.run_id, node_id: p.node_id }));
}

const VIEW = 640;
const MARGIN = 24;

export interface ProjectionScales {
  toScreen: (x: number, y: number) => [number, number];
}

export function projectionScales(points: ProjectionPointData[]): ProjectionScales {
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const span = Math.max(xMax - xMin, yMax - yMin) || 1;
  const scale = (VIEW - 2 * MARGIN) / span;
  return {
    toScreen: (x, y) => [MARGIN + (x - xMin) * scale, MARGIN + (y - yMin) * scale],
  };
}

export interface ProjectionViewState {
  points: ProjectionPointData[];
  lassoFirst: PointId[];
  lassoSecond: PointId[];
  comparison?: CompareResponse | null;
  running?: boolean;
}

export function renderProjectionView(
  state: ProjectionViewState,
  handlers: ProjectionHandlers = {},
): HTMLElement {
  const container = htmlEl('div', 'projection-view');
  const llmIds = [...new Set(state.points.map((p) => p.llm_id))];
  const scales = projectionScales(state.points.length ? state.points : [{ x: 0, y: 0, run_id: '', node_id: 0, llm_id: '' }]);

  const svg = svgEl('svg', {
    class: 'projection-scatter',
    width: VIEW,
    height: VIEW,
    viewBox: `0 0 ${VIEW} ${VIEW}`,
  });
  // wheel zoom: shrink or grow the viewBox around its center
  svg.addEventListener('wheel', (event) => {
    event.preventDefault();
    const box = (svg.getAttribute('viewBox') ?? `0 0 ${VIEW} ${VIEW}`).split(' ').map(Number);
    const factor = (event as WheelEvent).deltaY > 0 ? 1.2 : 1 / 1.2;
    const [x, y, w, h] = box;
    const nw = w * factor;
    const nh = h * factor;
    svg.setAttribute('viewBox', `${x + (w - nw) / 2} ${y + (h - nh) / 2} ${nw} ${nh}`);
  });

  const selectedFirst = new Set(state.lassoFirst.map((p) => `${p.run_id}#${p.node_id}`));
  const selectedSecond = new Set(state.lassoSecond.map((p) => `${p.run_id}#${p.node_id}`));
  for (const point of state.points) {
    const [sx, sy] = scales.toScreen(point.x, point.y);
    const key = `${point.run_id}#${point.node_id}`;
    const cls = selectedFirst.has(key)
      ? 'projection-point lasso-first'
      : selectedSecond.has(key)
        ? 'projection-point lasso-second'
        : 'projection-point';
    const dot = svgEl('circle', {
      class: cls,
      cx: sx,
      cy: sy,
      r: 3,
      fill: llmColor(point.llm_id, llmIds),
    });
    dot.dataset.runId = point.run_id;
    dot.dataset.nodeId = String(point.node_id);
    svg.appendChild(dot);
  }
  container.appendChild(svg);

  const compare = htmlEl('button', 'compare-button', 'Compare selections');
  compare.disabled =
    state.lassoFirst.length === 0 || state.lassoSecond.length === 0 || Boolean(state.running);
  compare.addEventListener('click', () => {
    if (!compare.disabled) {
      handlers.onCompare?.(state.lassoFirst, state.lassoSecond);
    }
  });
  container.appendChild(compare);

  const summary = htmlEl('div', 'comparison-summary');
  if (state.comparison) {
    summary.appendChild(
      htmlEl('span', `comparison-mode comparison-${state.comparison.mode}`, state.comparison.mode),
    );
    summary.appendChild(htmlEl('p', undefined, state.comparison.text));
  } else {
    summary.appendChild(
      htmlEl('p', 'comparison-hint', 'Lasso two point groups, then compare them.'),
    );
  }
  container.appendChild(summary);
  return container;
}
