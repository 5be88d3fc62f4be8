/** Code panel: plain code or three-color line diff, the N x N similarity
 * heatmap, and the analysis report / execution logs underneath. */

import { heatmapColor } from './colors.js';
import { htmlEl, svgEl } from './svg.js';
import type { DiffResponse, NodeDetail, SimilarityResponse } from './types.js';

export interface CodeViewHandlers {
  onHeatmapCell?: (a: number, b: number) => void;
}

const DIFF_PREFIX = { shared: '  ', removed: '- ', added: '+ ' } as const;

export function renderDiff(diff: DiffResponse): HTMLElement {
  const pre = htmlEl('pre', 'code-diff');
  for (const line of diff.lines) {
    const row = htmlEl('div', `diff-line diff-${line.tag}`, DIFF_PREFIX[line.tag] + line.text);
    pre.appendChild(row);
  }
  return pre;
}

export function renderCode(detail: NodeDetail): HTMLElement {
  const pre = htmlEl('pre', 'code-plain');
  pre.textContent = detail.code;
  return pre;
}

const CELL = 12;

export function renderHeatmap(
  matrix: SimilarityResponse,
  handlers: CodeViewHandlers = {},
): SVGSVGElement {
  const n = matrix.size;
  const svg = svgEl('svg', {
    class: 'similarity-heatmap',
    width: n * CELL,
    height: n * CELL,
    viewBox: `0 0 ${n * CELL} ${n * CELL}`,
  });
  for (let i = 0; i < n; i += 1) {
    for (let j = 0; j < n; j += 1) {
      const rect = svgEl('rect', {
        class: 'heatmap-cell',
        x: j * CELL,
        y: i * CELL,
        width: CELL,
        height: CELL,
        fill: heatmapColor(matrix.values[i][j]),
      });
      rect.dataset.row = String(i);
      rect.dataset.col = String(j);
      rect.addEventListener('click', () => handlers.onHeatmapCell?.(i, j));
      svg.appendChild(rect);
    }
  }
  return svg;
}

export interface CodeViewInput {
  detail: NodeDetail | null;
  diff: DiffResponse | null;
  diffMode: boolean;
  matrix: SimilarityResponse | null;
  parseFallback?: boolean;
}

export function renderCodeView(
  input: CodeViewInput,
  handlers: CodeViewHandlers = {},
): HTMLElement {
  const container = htmlEl('div', 'code-view');

  if (input.diffMode && input.diff) {
    container.appendChild(renderDiff(input.diff));
  } else if (input.detail) {
    if (input.parseFallback) {
      container.appendChild(htmlEl('span', 'fallback-badge', 'raw text (unparsable)'));
    }
    container.appendChild(renderCode(input.detail));
  } else {
    container.appendChild(htmlEl('p', 'code-empty', 'Select a node to inspect its code.'));
  }

  if (input.matrix) {
    container.appendChild(renderHeatmap(input.matrix, handlers));
  }

  if (input.detail) {
    const report = htmlEl('div', 'analysis-report');
    report.appendChild(htmlEl('h4', undefined, 'Analysis report'));
    report.appendChild(htmlEl('p', undefined, input.detail.analysis_report));
    container.appendChild(report);

    const logs = htmlEl('details', 'exec-logs');
    logs.appendChild(htmlEl('summary', undefined, 'Execution output'));
    const pre = htmlEl('pre');
    pre.textContent = input.detail.exec_output;
    logs.appendChild(pre);
    container.appendChild(logs);
  }
  return container;
}
