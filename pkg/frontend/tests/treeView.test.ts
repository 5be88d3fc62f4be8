import { describe, expect, it } from 'vitest';

import { BUGGY_RED } from '../src/colors.js';
import { initialState, toggleCollapse, descendantIds } from '../src/state.js';
import { renderTreeView } from '../src/treeView.js';
import { allBuggyStar, fixtureTree, INTERNAL_IDS, longChain } from './fixtures.js';

describe('tree view over the 31-node fixture', () => {
  it('shows exactly one award ribbon, on the best node', () => {
    const svg = renderTreeView(fixtureTree(), initialState());
    const ribbons = svg.querySelectorAll('.award-ribbon');
    expect(ribbons.length).toBe(1);
    const owner = ribbons[0].closest('g') as SVGGElement;
    expect(owner.dataset.nodeId).toBe('28');
  });

  it('underlines exactly the internal-node step ids', () => {
    const svg = renderTreeView(fixtureTree(), initialState());
    const underlined = new Set<number>();
    const plain = new Set<number>();
    for (const label of svg.querySelectorAll('text.step-id')) {
      const id = Number((label.closest('g') as SVGGElement).dataset.nodeId);
      if (label.getAttribute('text-decoration') === 'underline') {
        underlined.add(id);
      } else {
        plain.add(id);
      }
    }
    expect(underlined).toEqual(INTERNAL_IDS);
    expect([...plain].every((id) => !INTERNAL_IDS.has(id))).toBe(true);
  });

  it('collapse hides exactly the descendants of the collapsed node', () => {
    const tree = fixtureTree();
    const before = renderTreeView(tree, initialState());
    expect(before.querySelectorAll('.tree-node').length).toBe(30);

    const state = toggleCollapse(initialState(), tree, 22);
    expect(descendantIds(tree, 22).length).toBe(7);
    const after = renderTreeView(tree, state);
    expect(after.querySelectorAll('.tree-node').length).toBe(30 - 7);
    // the collapsed node itself stays visible
    expect(after.querySelector('[data-node-id="22"]')).not.toBeNull();
    expect(after.querySelector('[data-node-id="23"]')).toBeNull();
  });

  it('renders metric labels only beside functional nodes', () => {
    const svg = renderTreeView(fixtureTree(), initialState());
    for (const group of svg.querySelectorAll('.tree-node')) {
      const id = Number((group as SVGGElement).dataset.nodeId);
      const circle = group.querySelector('circle')!;
      const hasMetric = group.querySelector('.metric-label') !== null;
      expect(hasMetric).toBe(circle.getAttribute('fill') !== BUGGY_RED);
      expect(typeof id).toBe('number');
    }
  });

  it('scales the time arc to the run maximum', () => {
    const svg = renderTreeView(fixtureTree(), initialState());
    // node 17 has the longest time: a full ring (two arc segments)
    const slowest = svg.querySelector('[data-node-id="17"] .time-arc')!;
    expect(slowest.getAttribute('d')).toContain('A');
    const arcs = svg.querySelectorAll('.time-arc');
    expect(arcs.length).toBeGreaterThan(0);
  });
});

describe('tree view shapes', () => {
  it('renders an all-buggy run as an all-red star', () => {
    const svg = renderTreeView(allBuggyStar(), initialState());
    const circles = [...svg.querySelectorAll('.tree-node circle')];
    expect(circles.length).toBe(30);
    expect(circles.every((c) => c.getAttribute('fill') === BUGGY_RED)).toBe(true);
    expect(svg.querySelectorAll('.award-ribbon').length).toBe(0);
    expect(svg.querySelectorAll('.tree-link').length).toBe(30);
  });

  it('degrades to a virtualized layout past 500 visible nodes', () => {
    const svg = renderTreeView(longChain(600), initialState());
    expect(svg.classList.contains('virtualized')).toBe(true);
    expect(svg.querySelectorAll('.tree-node').length).toBe(600);
    expect(svg.querySelectorAll('.metric-label').length).toBe(0);
  });

  it('selection callback fires on click', () => {
    const picked: number[] = [];
    const svg = renderTreeView(fixtureTree(), initialState(), {
      onSelect: (id) => picked.push(id),
    });
    (svg.querySelector('[data-node-id="11"]') as SVGGElement).dispatchEvent(
      new MouseEvent('click', { bubbles: true }),
    );
    expect(picked).toEqual([11]);
  });
});
