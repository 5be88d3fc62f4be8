/** Root overview: one row per LLM, one pie per run (functional/buggy share,
 * outer arc total time against the row maximum), min/mean/max range glyphs on
 * the right, and a dendrogram strip when ordered by tree similarity. */

import { BUGGY_RED, FUNCTIONAL_GREEN, TIME_ARC_BLUE } from './colors.js';
import { arcPath, htmlEl, piePath, svgEl } from './svg.js';
import type {
  DendrogramResponse,
  OrderResponse,
  RunStats,
  RunsetSummary,
  ValueRange,
} from './types.js';

export interface RootsViewHandlers {
  onSelectRun?: (runId: string) => void;
}

const PIE_R = 16;
const ARC_R = 21;
const PIE_BOX = 52;

function runPie(runId: string, stats: RunStats, rowMaxTime: number): SVGSVGElement {
  const svg = svgEl('svg', {
    class: 'run-pie',
    width: PIE_BOX,
    height: PIE_BOX,
    viewBox: `${-PIE_BOX / 2} ${-PIE_BOX / 2} ${PIE_BOX} ${PIE_BOX}`,
  });
  svg.dataset.runId = runId;
  const total = stats.n_functional + stats.n_buggy;
  svg.appendChild(svgEl('circle', { r: PIE_R, fill: BUGGY_RED }));
  if (total > 0 && stats.n_functional > 0) {
    svg.appendChild(
      svgEl('path', {
        class: 'pie-functional',
        d: piePath(0, 0, PIE_R, stats.n_functional / total),
        fill: FUNCTIONAL_GREEN,
      }),
    );
  }
  const fraction = rowMaxTime > 0 ? stats.total_time / rowMaxTime : 0;
  const arc = arcPath(0, 0, ARC_R, fraction);
  if (arc) {
    svg.appendChild(
      svgEl('path', {
        class: 'total-time-arc',
        d: arc,
        fill: 'none',
        stroke: TIME_ARC_BLUE,
        'stroke-width': 3,
      }),
    );
  }
  return svg;
}

const GLYPH_W = 90;

/** min/mean/max strip: bar spans min..max, the black tick marks the mean. */
function rangeGlyph(range: ValueRange, label: string, scaleMax: number): SVGSVGElement {
  const svg = svgEl('svg', { class: `range-glyph range-${label}`, width: GLYPH_W, height: 18 });
  const scale = (v: number) => (scaleMax > 0 ? (v / scaleMax) * (GLYPH_W - 8) + 4 : 4);
  svg.appendChild(
    svgEl('line', {
      class: 'range-span',
      x1: scale(range.min),
      x2: scale(range.max),
      y1: 9,
      y2: 9,
      stroke: '#888',
      'stroke-width': 4,
    }),
  );
  for (const [cls, v] of [
    ['range-min', range.min],
    ['range-max', range.max],
  ] as const) {
    svg.appendChild(
      svgEl('line', { class: cls, x1: scale(v), x2: scale(v), y1: 3, y2: 15, stroke: '#555' }),
    );
  }
  svg.appendChild(
    svgEl('line', {
      class: 'range-mean',
      x1: scale(range.mean),
      x2: scale(range.mean),
      y1: 1,
      y2: 17,
      stroke: '#000',
      'stroke-width': 2,
    }),
  );
  return svg;
}

function dendrogramStrip(dend: DendrogramResponse): SVGSVGElement {
  const k = dend.leaf_count;
  const svg = svgEl('svg', {
    class: 'dendrogram-strip',
    width: k * PIE_BOX,
    height: 40,
    viewBox: `0 0 ${k * PIE_BOX} 40`,
  });
  const maxHeight = Math.max(1e-9, ...dend.merges.map((m) => m.height));
  const slot = new Map<number, { x: number; y: number }>();
  dend.leaf_order.forEach((leaf, position) => {
    slot.set(leaf, { x: position * PIE_BOX + PIE_BOX / 2, y: 40 });
  });
  for (const merge of dend.merges) {
    const a = slot.get(merge.cluster_a);
    const b = slot.get(merge.cluster_b);
    if (!a || !b) {
      continue;
    }
    const y = 40 - (merge.height / maxHeight) * 36;
    svg.appendChild(
      svgEl('path', {
        class: 'dendrogram-merge',
        d: `M ${a.x} ${a.y} V ${y} H ${b.x} V ${b.y}`,
        fill: 'none',
        stroke: '#777',
      }),
    );
    slot.set(merge.new_cluster, { x: (a.x + b.x) / 2, y });
  }
  return svg;
}

export interface RootsViewInput {
  runsets: RunsetSummary[];
  statsByRun: Map<string, RunStats>;
  /** Permutation per LLM id, from /runsets/{llm}/order. */
  orders: Map<string, OrderResponse>;
  /** Present when ordering by tree similarity. */
  dendrograms?: Map<string, DendrogramResponse>;
}

export function renderRootsOverview(
  input: RootsViewInput,
  handlers: RootsViewHandlers = {},
): HTMLElement {
  const container = htmlEl('div', 'roots-overview');
  const timeScaleMax = Math.max(0, ...input.runsets.map((rs) => rs.time_range.max));
  const metricScaleMax = Math.max(
    0,
    ...input.runsets.map((rs) => rs.metric_range?.max ?? 0),
  );

  for (const runset of input.runsets) {
    const row = htmlEl('div', 'runset-row');
    row.dataset.llmId = runset.llm_id;
    row.appendChild(htmlEl('span', 'runset-label', runset.llm_id));

    const order = input.orders.get(runset.llm_id);
    const orderedRunIds = order ? order.run_ids : runset.run_ids;
    const rowMaxTime = Math.max(
      0,
      ...runset.run_ids.map((id) => input.statsByRun.get(id)?.total_time ?? 0),
    );

    const dend = input.dendrograms?.get(runset.llm_id);
    if (dend) {
      row.appendChild(dendrogramStrip(dend));
    }

    const pies = htmlEl('div', 'runset-pies');
    for (const runId of orderedRunIds) {
      const stats = input.statsByRun.get(runId);
      if (!stats) {
        continue;
      }
      const pie = runPie(runId, stats, rowMaxTime);
      pie.addEventListener('click', () => handlers.onSelectRun?.(runId));
      pies.appendChild(pie);
    }
    row.appendChild(pies);

    const glyphs = htmlEl('div', 'runset-glyphs');
    glyphs.appendChild(rangeGlyph(runset.time_range, 'time', timeScaleMax));
    if (runset.metric_range) {
      glyphs.appendChild(rangeGlyph(runset.metric_range, 'metric', metricScaleMax));
    }
    row.appendChild(glyphs);
    container.appendChild(row);
  }
  return container;
}
