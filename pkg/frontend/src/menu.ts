/**
 * Context menus as HTML overlays.  The menu model is pure (testable); the
 * DOM part just turns actions into buttons.  Every selection becomes an
 * engine command event — or opens the group parameter panel, whose inputs
 * drive command events live.
 */

import type { CommandWire, FigureDoc, ProbeHit, SceneDoc } from './protocol.js';
import { commandEvent } from './protocol.js';

export type MenuAction =
  | { label: string; command: CommandWire }
  | { label: string; panel: { id: number } };

/** Find a figure document (including nested group elements) by id. */
export function findFigure(doc: SceneDoc, id: number): FigureDoc | null {
  const walk = (figures: FigureDoc[]): FigureDoc | null => {
    for (const fig of figures) {
      if (fig.id === id) return fig;
      if (fig.kind === 'elastic_group') {
        const inner = walk(fig.elements);
        if (inner) return inner;
      }
      if (fig.kind === 'commented_control') {
        if (fig.proxy.id === id) return fig;
        if (fig.comment.id === id) return fig.comment;
      }
    }
    return null;
  };
  return walk(doc.figures);
}

/** Menu actions appropriate for the probed target. */
export function menuItemsFor(doc: SceneDoc, hit: ProbeHit): MenuAction[] {
  const target = findFigure(doc, hit.figure);
  if (!target) return [];
  const items: MenuAction[] = [];
  if (target.kind === 'elastic_group') {
    items.push({
      label: target.elements_movable ? "Fix group's elements" : "Unfix group's elements",
      command: commandEvent('set-elements-movable', {
        id: target.id,
        movable: !target.elements_movable,
      }),
    });
    items.push({ label: 'Modify group', panel: { id: target.id } });
    items.push({
      label: 'Reset default view',
      command: commandEvent('reset-default', { id: target.id }),
    });
    return items;
  }
  if (target.kind === 'rect_select_group') {
    items.push({
      label: 'Dissolve group',
      command: commandEvent('dissolve-group', { id: target.id }),
    });
    return items;
  }
  const movable = 'movable' in target ? target.movable : true;
  items.push({
    label: movable ? 'Fix element' : 'Unfix element',
    command: commandEvent('set-movable', { id: hit.figure, movable: !movable }),
  });
  items.push({
    label: 'Hide element',
    command: commandEvent('set-visibility', { id: hit.figure, visible: false }),
  });
  if (target.kind === 'comment') {
    items.push({
      label: 'Bigger font',
      command: commandEvent('set-font-size', { id: target.id, size: target.font_size + 2 }),
    });
    items.push({
      label: 'Smaller font',
      command: commandEvent('set-font-size', {
        id: target.id,
        size: Math.max(6, target.font_size - 2),
      }),
    });
  }
  return items;
}

export class ContextMenu {
  private element: HTMLDivElement;

  constructor(
    parent: HTMLElement,
    private readonly onPick: (action: MenuAction) => void,
  ) {
    this.element = document.createElement('div');
    this.element.className = 'context-menu';
    this.element.style.display = 'none';
    parent.appendChild(this.element);
    document.addEventListener('pointerdown', (ev) => {
      if (!this.element.contains(ev.target as Node)) this.hide();
    });
  }

  open(x: number, y: number, items: MenuAction[]): void {
    if (!items.length) {
      this.hide();
      return;
    }
    this.element.replaceChildren(
      ...items.map((item) => {
        const button = document.createElement('button');
        button.textContent = item.label;
        button.addEventListener('click', () => {
          this.hide();
          this.onPick(item);
        });
        return button;
      }),
    );
    this.element.style.left = `${x}px`;
    this.element.style.top = `${y}px`;
    this.element.style.display = 'flex';
  }

  hide(): void {
    this.element.style.display = 'none';
  }
}

/**
 * The "Modify group" panel: a handful of inputs that emit set-visual
 * commands as they change, so the canvas follows each slider tick.
 */
export class GroupParamsPanel {
  private element: HTMLDivElement;

  constructor(
    parent: HTMLElement,
    private readonly onVisual: (id: number, patch: Record<string, unknown>) => void,
  ) {
    this.element = document.createElement('div');
    this.element.className = 'param-panel';
    this.element.style.display = 'none';
    parent.appendChild(this.element);
  }

  open(x: number, y: number, doc: SceneDoc, id: number): void {
    const target = findFigure(doc, id);
    if (!target || target.kind !== 'elastic_group') return;
    const v = target.visual;

    const title = document.createElement('strong');
    title.textContent = `Modify "${target.title || 'group'}"`;

    const transparency = document.createElement('input');
    transparency.type = 'range';
    transparency.min = '0';
    transparency.max = '1';
    transparency.step = '0.05';
    transparency.value = String(v.transparency);
    transparency.addEventListener('input', () => {
      this.onVisual(id, { transparency: Number(transparency.value) });
    });

    const background = document.createElement('input');
    background.type = 'color';
    background.value = v.background_color;
    background.addEventListener('input', () => {
      this.onVisual(id, { background_color: background.value, show_background: true });
    });

    const spread = document.createElement('input');
    spread.type = 'checkbox';
    spread.checked = v.spread_background;
    spread.addEventListener('change', () => {
      this.onVisual(id, { spread_background: spread.checked });
    });

    const close = document.createElement('button');
    close.textContent = 'Close';
    close.addEventListener('click', () => this.hide());

    this.element.replaceChildren(
      title,
      labeled('Transparency', transparency),
      labeled('Background', background),
      labeled('Spread on inner groups', spread),
      close,
    );
    this.element.style.left = `${x}px`;
    this.element.style.top = `${y}px`;
    this.element.style.display = 'flex';
  }

  hide(): void {
    this.element.style.display = 'none';
  }
}

function labeled(text: string, input: HTMLElement): HTMLLabelElement {
  const label = document.createElement('label');
  label.textContent = text;
  label.appendChild(input);
  return label;
}
