/**
 * Typed client for the engine bridge.  The UI never mutates layout on its
 * own: every interaction becomes an engine event and the canvas re-renders
 * from the snapshot the engine returns.
 */

import type {
  CommandWire,
  EventWire,
  PointerEventWire,
  ProbeHit,
  SceneDoc,
  SnapshotPayload,
} from './protocol.js';

export class EngineClient {
  constructor(private readonly base: string = '') {}

  private async getJson<T>(path: string): Promise<T> {
    const res = await fetch(this.base + path);
    if (!res.ok) throw new Error(`${path}: HTTP ${res.status}`);
    return (await res.json()) as T;
  }

  private async postJson<T>(path: string, payload: unknown): Promise<T> {
    const res = await fetch(this.base + path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
    if (!res.ok) {
      const body = await res.text();
      throw new Error(`${path}: HTTP ${res.status}: ${body}`);
    }
    return (await res.json()) as T;
  }

  samples(): Promise<{ samples: string[] }> {
    return this.getJson('/api/samples');
  }

  loadSample(sample: string): Promise<SnapshotPayload> {
    return this.postJson('/api/scene', { sample });
  }

  loadArchive(archive: SceneDoc): Promise<SnapshotPayload> {
    return this.postJson('/api/scene', { archive });
  }

  snapshot(): Promise<SnapshotPayload> {
    return this.getJson('/api/snapshot');
  }

  sendPointer(ev: PointerEventWire): Promise<SnapshotPayload> {
    return this.postJson('/api/event', ev);
  }

  sendCommand(cmd: CommandWire): Promise<SnapshotPayload> {
    return this.postJson('/api/cmd', { name: cmd.name, args: cmd.args });
  }

  send(ev: EventWire): Promise<SnapshotPayload> {
    return ev.k === 'cmd' ? this.sendCommand(ev) : this.sendPointer(ev);
  }

  async probe(x: number, y: number): Promise<ProbeHit | null> {
    const res = await this.getJson<{ hit: ProbeHit | null }>(
      `/api/probe?x=${encodeURIComponent(x)}&y=${encodeURIComponent(y)}`,
    );
    return res.hit;
  }

  /** The whole recorded session as engine script JSONL. */
  async exportScript(): Promise<string> {
    const res = await fetch(this.base + '/api/script');
    if (!res.ok) throw new Error(`/api/script: HTTP ${res.status}`);
    return res.text();
  }
}
