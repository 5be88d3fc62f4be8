/** Matrix of bar charts: rows are packages, columns are LLMs; bar length is
 * the usage count and the dark portion is the buggy share. Clicking a column
 * header sorts rows by that LLM's counts, descending. */

import { llmColor } from './colors.js';
import { htmlEl } from './svg.js';
import type { PackageRow, PackagesResponse } from './types.js';

export interface PackageViewHandlers {
  onSortBy?: (llmId: string) => void;
}

export const BAR_WIDTH = 120;

/** Row order for a sort column: count descending, name ascending on ties. */
export function sortRows(rows: PackageRow[], llmId: string | null): PackageRow[] {
  if (llmId === null) {
    return [...rows].sort((a, b) => a.package.localeCompare(b.package));
  }
  const count = (row: PackageRow) =>
    row.cells.find((c) => c.llm_id === llmId)?.use_count ?? 0;
  return [...rows].sort((a, b) => count(b) - count(a) || a.package.localeCompare(b.package));
}

export function renderPackageView(
  table: PackagesResponse,
  sortColumn: string | null,
  handlers: PackageViewHandlers = {},
): HTMLElement {
  const container = htmlEl('div', 'package-view');
  if (table.rows.length === 0) {
    container.appendChild(htmlEl('p', 'package-empty', 'No package usage to show yet.'));
    return container;
  }

  const maxCount = Math.max(
    1,
    ...table.rows.flatMap((row) => row.cells.map((c) => c.use_count)),
  );

  const grid = htmlEl('table', 'package-grid');
  const head = htmlEl('tr', 'package-head');
  head.appendChild(htmlEl('th', undefined, 'package'));
  for (const llmId of table.llm_ids) {
    const th = htmlEl('th', sortColumn === llmId ? 'llm-column sorted' : 'llm-column', llmId);
    th.dataset.llmId = llmId;
    th.addEventListener('click', () => handlers.onSortBy?.(llmId));
    head.appendChild(th);
  }
  grid.appendChild(head);

  for (const row of sortRows(table.rows, sortColumn)) {
    const tr = htmlEl('tr', 'package-row');
    tr.dataset.package = row.package;
    tr.appendChild(htmlEl('td', 'package-name', row.package));
    for (const llmId of table.llm_ids) {
      const cell = row.cells.find((c) => c.llm_id === llmId);
      const td = htmlEl('td', 'package-cell');
      const use = cell?.use_count ?? 0;
      const buggy = cell?.buggy_count ?? 0;
      const bar = htmlEl('div', 'usage-bar');
      bar.style.width = `${(use / maxCount) * BAR_WIDTH}px`;
      bar.style.background = llmColor(llmId, table.llm_ids);
      bar.title = `${use} uses, ${buggy} buggy`;
      const dark = htmlEl('div', 'buggy-portion');
      dark.style.width = use > 0 ? `${(buggy / use) * 100}%` : '0%';
      bar.appendChild(dark);
      td.appendChild(bar);
      tr.appendChild(td);
    }
    grid.appendChild(tr);
  }
  container.appendChild(grid);
  return container;
}
