import { describe, expect, it } from 'vitest';

import {
  pointInPolygon,
  renderProjectionView,
  selectWithLasso,
  type Polygon,
} from '../src/projectionView.js';
import type { PointId, ProjectionPointData } from '../src/types.js';

function grid(): ProjectionPointData[] {
  const points: ProjectionPointData[] = [];
  for (let gx = 0; gx < 5; gx += 1) {
    for (let gy = 0; gy < 5; gy += 1) {
      points.push({
        x: gx,
        y: gy,
        run_id: `run-${gx}`,
        node_id: gy,
        llm_id: gx % 2 === 0 ? 'llm-a' : 'llm-b',
      });
    }
  }
  return points;
}

describe('lasso selection', () => {
  it('matches a direct containment check on a square', () => {
    const square: Polygon = [
      [0.5, 0.5],
      [2.5, 0.5],
      [2.5, 2.5],
      [0.5, 2.5],
    ];
    const picked = selectWithLasso(grid(), square);
    const expected = grid()
      .filter((p) => p.x > 0.5 && p.x < 2.5 && p.y > 0.5 && p.y < 2.5)
      .map((p) => ({ run_id: p.run_id, node_id: p.node_id }));
    expect(picked).toEqual(expected);
    expect(picked.length).toBe(4);
  });

  it('handles non-convex polygons', () => {
    // L-shape excluding the upper-right block
    const lShape: Polygon = [
      [-0.5, -0.5],
      [4.5, -0.5],
      [4.5, 1.5],
      [1.5, 1.5],
      [1.5, 4.5],
      [-0.5, 4.5],
    ];
    const picked = selectWithLasso(grid(), lShape);
    expect(picked.some((p) => p.run_id === 'run-3' && p.node_id === 3)).toBe(false);
    expect(picked.some((p) => p.run_id === 'run-3' && p.node_id === 0)).toBe(true);
    expect(picked.some((p) => p.run_id === 'run-0' && p.node_id === 3)).toBe(true);
  });

  it('degenerate lassos select nothing', () => {
    expect(selectWithLasso(grid(), [])).toEqual([]);
    expect(
      selectWithLasso(grid(), [
        [0, 0],
        [1, 1],
      ]),
    ).toEqual([]);
  });

  it('pointInPolygon agrees with itself under vertex rotation', () => {
    const polygon: Polygon = [
      [0, 0],
      [4, 0],
      [4, 4],
      [0, 4],
    ];
    const rotated: Polygon = [...polygon.slice(1), polygon[0]];
    for (const [x, y] of [
      [2, 2],
      [5, 5],
      [3.9, 0.1],
    ] as Array<[number, number]>) {
      expect(pointInPolygon(x, y, polygon)).toBe(pointInPolygon(x, y, rotated));
    }
  });
});

describe('projection view rendering', () => {
  it('draws one dot per point, colored by LLM', () => {
    const view = renderProjectionView({ points: grid(), lassoFirst: [], lassoSecond: [] });
    const dots = view.querySelectorAll('.projection-point');
    expect(dots.length).toBe(25);
    const fills = new Set([...dots].map((d) => d.getAttribute('fill')));
    expect(fills.size).toBe(2);
  });

  it('disables compare until both lassos hold points', () => {
    const empty = renderProjectionView({ points: grid(), lassoFirst: [], lassoSecond: [] });
    expect((empty.querySelector('.compare-button') as HTMLButtonElement).disabled).toBe(true);

    const one: PointId[] = [{ run_id: 'run-0', node_id: 0 }];
    const both = renderProjectionView({ points: grid(), lassoFirst: one, lassoSecond: one });
    expect((both.querySelector('.compare-button') as HTMLButtonElement).disabled).toBe(false);
  });

  it('compare hands over exactly the lassoed point ids', () => {
    const square: Polygon = [
      [0.5, 0.5],
      [2.5, 0.5],
      [2.5, 2.5],
      [0.5, 2.5],
    ];
    const first = selectWithLasso(grid(), square);
    const second: PointId[] = [{ run_id: 'run-4', node_id: 4 }];
    const calls: Array<[PointId[], PointId[]]> = [];
    const view = renderProjectionView(
      { points: grid(), lassoFirst: first, lassoSecond: second },
      { onCompare: (a, b) => calls.push([a, b]) },
    );
    (view.querySelector('.compare-button') as HTMLButtonElement).click();
    expect(calls).toEqual([[first, second]]);
  });

  it('shows the comparison text below the plot', () => {
    const view = renderProjectionView({
      points: grid(),
      lassoFirst: [],
      lassoSecond: [],
      comparison: { mode: 'offline', prompt: 'p', text: '[offline] p' },
    });
    expect(view.querySelector('.comparison-mode')!.textContent).toBe('offline');
    expect(view.querySelector('.comparison-summary')!.textContent).toContain('[offline] p');
  });
});
