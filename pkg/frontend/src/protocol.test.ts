import { describe, expect, it } from 'vitest';

import {
  buttonCode,
  commandEvent,
  cssCursor,
  pointerEvent,
  toJsonl,
} from './protocol.js';

describe('event wire forms', () => {
  it('builds pointer events in the engine schema', () => {
    expect(pointerEvent('down', 10, 20)).toEqual({ k: 'down', x: 10, y: 20, b: 'L' });
    expect(pointerEvent('move', 1.5, -2, 'R')).toEqual({ k: 'move', x: 1.5, y: -2, b: 'R' });
  });

  it('builds command events with args', () => {
    expect(commandEvent('set-visibility', { id: 7, visible: false })).toEqual({
      k: 'cmd',
      name: 'set-visibility',
      args: { id: 7, visible: false },
    });
  });

  it('maps DOM buttons to engine codes', () => {
    expect(buttonCode(0)).toBe('L');
    expect(buttonCode(2)).toBe('R');
    expect(buttonCode(1)).toBeNull();
  });

  it('maps cursor hints to CSS cursors', () => {
    expect(cssCursor('size-ns')).toBe('ns-resize');
    expect(cssCursor('size-we')).toBe('ew-resize');
    expect(cssCursor('size-all')).toBe('move');
    expect(cssCursor('hand')).toBe('pointer');
    expect(cssCursor(undefined)).toBe('default');
  });
});

describe('script serialization', () => {
  it('emits one sorted-key JSON object per line', () => {
    const text = toJsonl([
      pointerEvent('down', 3, 4, 'L'),
      commandEvent('save', {}),
    ]);
    const lines = text.trimEnd().split('\n');
    expect(lines).toHaveLength(2);
    expect(lines[0]).toBe('{"b":"L","k":"down","x":3,"y":4}');
    expect(JSON.parse(lines[1])).toEqual({ k: 'cmd', name: 'save', args: {} });
    expect(Object.keys(JSON.parse(lines[1]) as object)).toEqual(['args', 'k', 'name']);
  });

  it('round-trips through JSON parsing', () => {
    const events = [pointerEvent('down', 1, 2), pointerEvent('up', 1, 2)];
    const parsed = toJsonl(events)
      .trimEnd()
      .split('\n')
      .map((line) => JSON.parse(line) as unknown);
    expect(parsed).toEqual(events.map((ev) => ({ ...ev })));
  });

  it('serializes an empty session to an empty script', () => {
    expect(toJsonl([])).toBe('');
  });
});
