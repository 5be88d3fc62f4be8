/** Pinned visual constants; tests assert against these exact values. */

export const FUNCTIONAL_GREEN = '#2e8b57';
export const BUGGY_RED = '#d64545';
export const ROOT_FILL = '#e8e8e8';
export const TIME_ARC_BLUE = '#3b6fd4';

export const HEATMAP_WHITE = '#ffffff';
export const HEATMAP_ORANGE = '#ff8c00';
export const HEATMAP_RED = '#ff0000';
export const HEATMAP_TERMINAL_BAND = 0.99;

/**
 * Similarity-cell color: white-to-orange ramp below the terminal band,
 * saturated orange in [0.99, 1), exact red at 1.
 */
export function heatmapColor(s: number): string {
  if (s < 0 || s > 1) {
    throw new RangeError(`similarity ${s} outside [0, 1]`);
  }
  if (s === 1) {
    return HEATMAP_RED;
  }
  if (s >= HEATMAP_TERMINAL_BAND) {
    return HEATMAP_ORANGE;
  }
  const t = s / HEATMAP_TERMINAL_BAND;
  const channel = (from: number, to: number) => Math.round(from + (to - from) * t);
  const hex = (v: number) => v.toString(16).padStart(2, '0');
  return `#${hex(channel(0xff, 0xff))}${hex(channel(0xff, 0x8c))}${hex(channel(0xff, 0x00))}`;
}

const LLM_PALETTE = ['#4477aa', '#ee6677', '#228833', '#ccbb44', '#66ccee', '#aa3377', '#bbbbbb'];

/** Stable per-LLM color: position within the sorted id list picks the swatch. */
export function llmColor(llmId: string, llmIds: string[]): string {
  const index = [...llmIds].sort().indexOf(llmId);
  return LLM_PALETTE[(index >= 0 ? index : 0) % LLM_PALETTE.length];
}

export function statusColor(status: 'functional' | 'buggy'): string {
  return status === 'functional' ? FUNCTIONAL_GREEN : BUGGY_RED;
}
