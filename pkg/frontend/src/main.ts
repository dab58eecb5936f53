/**
 * Demo application wiring: pointer capture on the canvas, context menus,
 * sample switching, localStorage persistence and script export.
 *
 * The page renders exclusively from engine snapshots; a reload restores the
 * persisted archive and reproduces the identical scene (same snapshot hash).
 */

import { EngineClient } from './engineClient.js';
import { ContextMenu, GroupParamsPanel, menuItemsFor } from './menu.js';
import type { ButtonCode, SceneDoc, SnapshotPayload } from './protocol.js';
import { buttonCode, commandEvent, cssCursor, pointerEvent } from './protocol.js';
import { renderScene } from './render.js';

const STORAGE_PREFIX = 'udapp.scene.';

class DemoApp {
  private engine = new EngineClient();
  private doc: SceneDoc | null = null;
  private canvas: HTMLCanvasElement;
  private ctx: CanvasRenderingContext2D;
  private menu: ContextMenu;
  private panel: GroupParamsPanel;
  private sampleSelect: HTMLSelectElement;
  private hashLabel: HTMLElement;
  private dragButton: ButtonCode | null = null;
  private dragMoved = false;
  private lastMenuPoint: [number, number] = [0, 0];

  constructor() {
    this.canvas = document.getElementById('scene') as HTMLCanvasElement;
    this.ctx = this.canvas.getContext('2d') as CanvasRenderingContext2D;
    this.sampleSelect = document.getElementById('sample') as HTMLSelectElement;
    this.hashLabel = document.getElementById('hash') as HTMLElement;
    this.panel = new GroupParamsPanel(document.body, (id, patch) => {
      void this.engine.sendCommand(commandEvent('set-visual', { id, ...patch }))
        .then((snap) => this.accept(snap));
    });
    this.menu = new ContextMenu(document.body, (action) => {
      if ('command' in action) {
        void this.engine.sendCommand(action.command).then((snap) => this.accept(snap));
      } else if (this.doc) {
        this.panel.open(this.lastMenuPoint[0], this.lastMenuPoint[1],
          this.doc, action.panel.id);
      }
    });
    this.bindPointer();
    this.bindChrome();
  }

  async start(): Promise<void> {
    const { samples } = await this.engine.samples();
    this.sampleSelect.replaceChildren(
      ...samples.map((name) => {
        const option = document.createElement('option');
        option.value = name;
        option.textContent = name;
        return option;
      }),
    );
    await this.loadSample(samples[0]);
  }

  private async loadSample(name: string): Promise<void> {
    this.sampleSelect.value = name;
    const stored = localStorage.getItem(STORAGE_PREFIX + name);
    let snap: SnapshotPayload;
    if (stored) {
      try {
        snap = await this.engine.loadArchive(JSON.parse(stored) as SceneDoc);
      } catch {
        snap = await this.engine.loadSample(name);
      }
    } else {
      snap = await this.engine.loadSample(name);
    }
    this.accept(snap);
  }

  private accept(snap: SnapshotPayload): void {
    this.doc = snap.doc;
    this.hashLabel.textContent = snap.hash.slice(0, 12);
    this.canvas.width = snap.doc.window.width;
    this.canvas.height = snap.doc.window.height;
    renderScene(this.ctx, snap.doc, this.canvas.width, this.canvas.height);
    localStorage.setItem(
      STORAGE_PREFIX + snap.doc.window.scene,
      JSON.stringify(snap.doc),
    );
  }

  private canvasPoint(ev: PointerEvent): [number, number] {
    const box = this.canvas.getBoundingClientRect();
    return [ev.clientX - box.left, ev.clientY - box.top];
  }

  private bindPointer(): void {
    this.canvas.addEventListener('contextmenu', (ev) => ev.preventDefault());
    this.canvas.addEventListener('pointerdown', (ev) => {
      const button = buttonCode(ev.button);
      if (!button || this.dragButton) return;
      this.canvas.setPointerCapture(ev.pointerId);
      this.dragButton = button;
      this.dragMoved = false;
      const [x, y] = this.canvasPoint(ev);
      void this.engine.sendPointer(pointerEvent('down', x, y, button))
        .then((snap) => this.accept(snap));
    });
    this.canvas.addEventListener('pointermove', (ev) => {
      const [x, y] = this.canvasPoint(ev);
      if (this.dragButton) {
        this.dragMoved = true;
        void this.engine.sendPointer(pointerEvent('move', x, y, this.dragButton))
          .then((snap) => {
            if (snap.changed) this.accept(snap);
          });
      } else {
        void this.engine.probe(x, y).then((hit) => {
          this.canvas.style.cursor = cssCursor(hit?.cursor);
        });
      }
    });
    this.canvas.addEventListener('pointerup', (ev) => {
      const button = buttonCode(ev.button);
      if (!button || button !== this.dragButton) return;
      const [x, y] = this.canvasPoint(ev);
      const wasClick = !this.dragMoved && button === 'R';
      this.dragButton = null;
      void this.engine.sendPointer(pointerEvent('up', x, y, button))
        .then(async (snap) => {
          this.accept(snap);
          if (wasClick && this.doc) {
            const hit = await this.engine.probe(x, y);
            if (hit) {
              this.lastMenuPoint = [ev.clientX, ev.clientY];
              this.menu.open(ev.clientX, ev.clientY, menuItemsFor(this.doc, hit));
            }
          }
        });
    });
  }

  private bindChrome(): void {
    this.sampleSelect.addEventListener('change', () => {
      void this.loadSample(this.sampleSelect.value);
    });
    (document.getElementById('reset') as HTMLButtonElement).addEventListener('click', () => {
      localStorage.removeItem(STORAGE_PREFIX + this.sampleSelect.value);
      void this.engine.loadSample(this.sampleSelect.value).then((snap) => this.accept(snap));
    });
    (document.getElementById('export') as HTMLButtonElement).addEventListener('click', () => {
      void this.engine.exportScript().then((text) => {
        const blob = new Blob([text], { type: 'application/jsonl' });
        const link = document.createElement('a');
        link.href = URL.createObjectURL(blob);
        link.download = `${this.sampleSelect.value}-session.jsonl`;
        link.click();
        URL.revokeObjectURL(link.href);
      });
    });
  }
}

window.addEventListener('DOMContentLoaded', () => {
  void new DemoApp().start();
});
