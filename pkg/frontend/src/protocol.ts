/**
 * Wire types shared with the engine: scene archive documents, pointer and
 * command events, bridge payloads.  The engine owns these schemas; this file
 * only mirrors them for type safety.
 */

export type Rect = [number, number, number, number]; // left, top, width, height

export interface VisualDoc {
  frame_color: string;
  background_color: string;
  transparency: number;
  spread_background: boolean;
  show_frame: boolean;
  show_background: boolean;
  frame_width: number;
  title_color: string;
  title_font_size: number;
}

export interface FigureDocBase {
  kind: string;
  id: number;
  visible: boolean;
  movable: boolean;
}

export interface RectFigureDoc extends FigureDocBase {
  kind: 'rect';
  rect: Rect;
  label: string;
  fill: string;
}

export interface ControlDoc extends FigureDocBase {
  kind: 'control';
  rect: Rect;
  label: string;
  resizing: string;
  font_size: number;
  fill: string;
}

export interface CommentDoc extends FigureDocBase {
  kind: 'comment';
  text: string;
  anchor: [number, number];
  angle: number;
  font_size: number;
  offset: [number, number];
}

export interface CommentedControlDoc {
  kind: 'commented_control';
  id: number;
  side: string;
  proxy: ControlDoc;
  comment: CommentDoc;
}

export interface ElasticGroupDoc extends FigureDocBase {
  kind: 'elastic_group';
  title: string;
  title_position: number;
  padding: number;
  elements_movable: boolean;
  frame: Rect;
  visual: VisualDoc;
  elements: FigureDoc[];
}

export interface PropGroupDoc extends FigureDocBase {
  kind: 'prop_group';
  title: string;
  frame: Rect;
  items: { label: string; frac: [number, number, number, number] }[];
}

export interface LinkedRectsDoc extends FigureDocBase {
  kind: 'linked_rects';
  parts: Rect[];
}

export interface RectSelectGroupDoc extends FigureDocBase {
  kind: 'rect_select_group';
  label: string;
  fill: string;
  pad: number;
  members: number[];
  bounds: Rect;
}

export interface StripBarDoc extends FigureDocBase {
  kind: 'strip_bar';
  anchor: [number, number];
  direction: 'hor' | 'ver';
  length: number;
  span: [number, number];
  halfsense: number;
  value_scale: number;
  fill: string;
}

export interface BarChartDoc extends FigureDocBase {
  kind: 'bar_chart';
  frame: Rect;
  fill: string;
  strips: StripBarDoc[];
}

export interface RingDoc extends FigureDocBase {
  kind: 'ring' | 'pie_chart';
  center: [number, number];
  r_inner: number;
  r_outer: number;
  boundaries: number[];
  rotation: number;
  resizable: boolean;
  value_total: number;
  colors: string[];
  sector_comments: (CommentDoc | null)[];
  comments: CommentDoc[];
}

export interface TrackBarDoc extends FigureDocBase {
  kind: 'trackbar';
  track: Rect;
  lo: number;
  hi: number;
  value: number;
  fill: string;
  pins: string[];
  comments: CommentDoc[];
}

export type FigureDoc =
  | RectFigureDoc
  | ControlDoc
  | CommentDoc
  | CommentedControlDoc
  | ElasticGroupDoc
  | PropGroupDoc
  | LinkedRectsDoc
  | RectSelectGroupDoc
  | StripBarDoc
  | BarChartDoc
  | RingDoc
  | TrackBarDoc;

export interface SceneDoc {
  schema: string;
  window: {
    width: number;
    height: number;
    view: [number, number];
    scene: string;
    move_button: string;
    rotate_button: string;
    background_drag: boolean;
  };
  figures: FigureDoc[];
}

export type ButtonCode = 'L' | 'R';

export interface PointerEventWire {
  k: 'down' | 'move' | 'up';
  x: number;
  y: number;
  b: ButtonCode;
}

export interface CommandWire {
  k: 'cmd';
  name: string;
  args: Record<string, unknown>;
}

export type EventWire = PointerEventWire | CommandWire;

export interface SnapshotPayload {
  changed: boolean;
  doc: SceneDoc;
  hash: string;
}

export interface ProbeHit {
  figure: number;
  node: number;
  kind: string;
  cursor: string;
  freedom: string;
  label: string;
}

export function pointerEvent(
  k: 'down' | 'move' | 'up',
  x: number,
  y: number,
  b: ButtonCode = 'L',
): PointerEventWire {
  return { k, x, y, b };
}

export function commandEvent(name: string, args: Record<string, unknown>): CommandWire {
  return { k: 'cmd', name, args };
}

/** Map a DOM mouse button number to the engine's button code. */
export function buttonCode(domButton: number): ButtonCode | null {
  if (domButton === 0) return 'L';
  if (domButton === 2) return 'R';
  return null;
}

/** Map the engine's cursor hint to a CSS cursor. */
export function cssCursor(hint: string | undefined): string {
  switch (hint) {
    case 'size-ns':
      return 'ns-resize';
    case 'size-we':
      return 'ew-resize';
    case 'size-all':
      return 'move';
    case 'hand':
      return 'pointer';
    default:
      return 'default';
  }
}

/** Serialize a recorded session as engine script JSONL. */
export function toJsonl(events: EventWire[]): string {
  return events.map((ev) => JSON.stringify(sortKeys(ev))).join('\n') + (events.length ? '\n' : '');
}

function sortKeys<T>(value: T): T {
  if (Array.isArray(value)) {
    return value.map(sortKeys) as unknown as T;
  }
  if (value !== null && typeof value === 'object') {
    const out: Record<string, unknown> = {};
    for (const key of Object.keys(value as Record<string, unknown>).sort()) {
      out[key] = sortKeys((value as Record<string, unknown>)[key]);
    }
    return out as T;
  }
  return value;
}
