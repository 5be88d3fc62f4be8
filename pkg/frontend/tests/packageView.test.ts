import { describe, expect, it } from 'vitest';

import { renderPackageView, sortRows } from '../src/packageView.js';
import { packageFixture } from './fixtures.js';

describe('package view', () => {
  it('sorting by a column matches an independent sort oracle', () => {
    const table = packageFixture();
    const view = renderPackageView(table, 'llm-b');
    const domOrder = [...view.querySelectorAll('.package-row')].map(
      (row) => (row as HTMLElement).dataset.package,
    );
    // oracle: recompute the expected order directly from the payload
    const expected = [...table.rows]
      .map((row) => ({
        name: row.package,
        count: row.cells.find((c) => c.llm_id === 'llm-b')!.use_count,
      }))
      .sort((a, b) => b.count - a.count || a.name.localeCompare(b.name))
      .map((r) => r.name);
    expect(domOrder).toEqual(expected);
    expect(domOrder).toEqual(['lightgbm', 'pandas', 'numpy', 'os']);
  });

  it('unsorted view lists packages alphabetically', () => {
    const view = renderPackageView(packageFixture(), null);
    const domOrder = [...view.querySelectorAll('.package-row')].map(
      (row) => (row as HTMLElement).dataset.package,
    );
    expect(domOrder).toEqual(['lightgbm', 'numpy', 'os', 'pandas']);
  });

  it('fully-buggy packages render a fully dark bar', () => {
    const view = renderPackageView(packageFixture(), null);
    const row = view.querySelector('[data-package="lightgbm"]')!;
    const portions = [...row.querySelectorAll('.buggy-portion')] as HTMLElement[];
    expect(portions.map((p) => p.style.width)).toEqual(['100%', '100%']);
  });

  it('bar lengths scale with the use count', () => {
    const view = renderPackageView(packageFixture(), null);
    const widthOf = (pkg: string, col: number) => {
      const bars = view.querySelectorAll(`[data-package="${pkg}"] .usage-bar`);
      return parseFloat((bars[col] as HTMLElement).style.width);
    };
    expect(widthOf('lightgbm', 1)).toBeGreaterThan(widthOf('lightgbm', 0));
    expect(widthOf('numpy', 0)).toBe(widthOf('pandas', 0));
  });

  it('clicking a column header reports the LLM to sort by', () => {
    const clicks: string[] = [];
    const view = renderPackageView(packageFixture(), null, { onSortBy: (id) => clicks.push(id) });
    (view.querySelector('th[data-llm-id="llm-b"]') as HTMLElement).click();
    expect(clicks).toEqual(['llm-b']);
  });

  it('empty table renders the empty state', () => {
    const view = renderPackageView({ llm_ids: [], rows: [] }, null);
    expect(view.querySelector('.package-empty')).not.toBeNull();
  });

  it('sortRows ties break alphabetically', () => {
    const rows = packageFixture().rows;
    const sorted = sortRows(rows, 'llm-a');
    expect(sorted.map((r) => r.package)).toEqual(['numpy', 'pandas', 'os', 'lightgbm']);
  });
});
