/**
 * Canvas renderer: draws a scene snapshot, nothing else.
 *
 * Figures arrive topmost-first (mover queue order), so painting walks the
 * list in reverse; composite figures paint their own parts above themselves
 * the same way registration stacks them.  All layout comes from the engine
 * document; the renderer holds no state.
 */

import type {
  BarChartDoc,
  CommentDoc,
  CommentedControlDoc,
  ControlDoc,
  ElasticGroupDoc,
  FigureDoc,
  LinkedRectsDoc,
  PropGroupDoc,
  Rect,
  RectFigureDoc,
  RectSelectGroupDoc,
  RingDoc,
  SceneDoc,
  StripBarDoc,
  TrackBarDoc,
} from './protocol.js';

/** The slice of CanvasRenderingContext2D the renderer needs (fakeable in tests). */
export interface Draw2D {
  save(): void;
  restore(): void;
  translate(x: number, y: number): void;
  rotate(angle: number): void;
  beginPath(): void;
  rect(x: number, y: number, w: number, h: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number, ccw?: boolean): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  globalAlpha: number;
  font: string;
  textAlign: CanvasTextAlign;
  textBaseline: CanvasTextBaseline;
}

/** Bottom of the mover queue paints first. */
export function drawOrder<T>(figures: readonly T[]): T[] {
  return [...figures].reverse();
}

/** Title anchor x along the top border for a given position in [0, 1]. */
export function titleAnchorX(
  frame: Rect,
  titlePosition: number,
  titleWidth: number,
): number {
  const [left, , width] = frame;
  const t = Math.min(1, Math.max(0, titlePosition));
  return left + t * Math.max(0, width - titleWidth) + titleWidth / 2;
}

/** Effective on-screen angle of a ring boundary. */
export function boundaryAngle(ring: Pick<RingDoc, 'rotation'>, boundary: number): number {
  return boundary + ring.rotation;
}

/** Start/end screen angles for sector i (wrapping to the first boundary). */
export function sectorAngles(
  boundaries: readonly number[],
  rotation: number,
  i: number,
): [number, number] {
  const a0 = boundaries[i] + rotation;
  const a1 = (i + 1 < boundaries.length ? boundaries[i + 1] : boundaries[0] + 2 * Math.PI) + rotation;
  return [a0, a1];
}

/** Thumb center of a horizontal track bar. */
export function thumbCenter(tb: Pick<TrackBarDoc, 'track' | 'lo' | 'hi' | 'value'>): [number, number] {
  const [left, top, width, height] = tb.track;
  const frac = (tb.value - tb.lo) / (tb.hi - tb.lo);
  return [left + frac * width, top + height / 2];
}

/** Rectangle of a bar strip derived from anchor, span and signed length. */
export function stripBodyRect(strip: StripBarDoc): Rect {
  const [lo, hi] = strip.span;
  if (strip.direction === 'hor') {
    const edge = strip.anchor[1] + strip.length;
    const top = Math.min(strip.anchor[1], edge);
    return [lo, top, hi - lo, Math.abs(strip.length)];
  }
  const edge = strip.anchor[0] + strip.length;
  const left = Math.min(strip.anchor[0], edge);
  return [left, lo, Math.abs(strip.length), hi - lo];
}

const FONT = (px: number) => `${px}px sans-serif`;

function fillRect(ctx: Draw2D, r: Rect, fill: string): void {
  ctx.fillStyle = fill;
  ctx.beginPath();
  ctx.rect(r[0], r[1], r[2], r[3]);
  ctx.fill();
}

function strokeRect(ctx: Draw2D, r: Rect, stroke: string, width = 1): void {
  ctx.strokeStyle = stroke;
  ctx.lineWidth = width;
  ctx.beginPath();
  ctx.rect(r[0], r[1], r[2], r[3]);
  ctx.stroke();
}

function centeredText(ctx: Draw2D, text: string, x: number, y: number, px: number, color = '#222'): void {
  ctx.fillStyle = color;
  ctx.font = FONT(px);
  ctx.textAlign = 'center';
  ctx.textBaseline = 'middle';
  ctx.fillText(text, x, y);
}

function drawControl(ctx: Draw2D, doc: ControlDoc): void {
  fillRect(ctx, doc.rect, doc.fill);
  strokeRect(ctx, doc.rect, '#777');
  const [l, t, w, h] = doc.rect;
  centeredText(ctx, doc.label, l + w / 2, t + h / 2, doc.font_size);
}

function drawComment(ctx: Draw2D, doc: CommentDoc): void {
  ctx.save();
  ctx.translate(doc.anchor[0], doc.anchor[1]);
  ctx.rotate(doc.angle);
  centeredText(ctx, doc.text, 0, 0, doc.font_size, '#1a1a60');
  ctx.restore();
}

function drawCommentedControl(ctx: Draw2D, doc: CommentedControlDoc): void {
  if (!doc.proxy.visible) return;
  // comment below the control, like the pick order
  drawComment(ctx, doc.comment);
  drawControl(ctx, doc.proxy);
}

function drawElasticGroup(ctx: Draw2D, doc: ElasticGroupDoc, inheritedBg?: string): void {
  const v = doc.visual;
  const background = v.show_background ? v.background_color : inheritedBg;
  if (background) {
    ctx.save();
    ctx.globalAlpha = 1 - Math.min(1, Math.max(0, v.transparency));
    fillRect(ctx, doc.frame, background);
    ctx.restore();
  }
  if (v.show_frame) {
    strokeRect(ctx, doc.frame, v.frame_color, v.frame_width);
  }
  if (doc.title) {
    const titleWidth = 0.6 * v.title_font_size * doc.title.length;
    const x = titleAnchorX(doc.frame, doc.title_position, titleWidth);
    centeredText(ctx, doc.title, x, doc.frame[1], v.title_font_size, v.title_color);
  }
  // the outer background may spread onto inner groups
  const childBg = v.spread_background && v.show_background ? v.background_color : undefined;
  for (const element of drawOrder(doc.elements)) {
    if (element.kind === 'elastic_group') {
      drawElasticGroup(ctx, element, childBg);
    } else {
      drawFigure(ctx, element);
    }
  }
}

function drawPropGroup(ctx: Draw2D, doc: PropGroupDoc): void {
  strokeRect(ctx, doc.frame, '#808080');
  if (doc.title) {
    centeredText(ctx, doc.title, doc.frame[0] + doc.frame[2] / 2, doc.frame[1], 11, '#333');
  }
  const [left, top, width, height] = doc.frame;
  for (const item of doc.items) {
    const r: Rect = [
      left + item.frac[0] * width,
      top + item.frac[1] * height,
      item.frac[2] * width,
      item.frac[3] * height,
    ];
    fillRect(ctx, r, '#eef2f7');
    strokeRect(ctx, r, '#99a');
    centeredText(ctx, item.label, r[0] + r[2] / 2, r[1] + r[3] / 2, 10);
  }
}

function drawLinkedRects(ctx: Draw2D, doc: LinkedRectsDoc): void {
  for (const part of doc.parts) {
    fillRect(ctx, part, '#e4e4ee');
    strokeRect(ctx, part, '#778');
  }
}

function drawRectSelectGroup(ctx: Draw2D, doc: RectSelectGroupDoc): void {
  ctx.save();
  ctx.globalAlpha = 0.35;
  fillRect(ctx, doc.bounds, doc.fill);
  ctx.restore();
  strokeRect(ctx, doc.bounds, '#4a8a8a');
  centeredText(ctx, doc.label, doc.bounds[0] + doc.bounds[2] / 2, doc.bounds[1], 10, '#266');
}

function drawStrip(ctx: Draw2D, doc: StripBarDoc): void {
  const body = stripBodyRect(doc);
  fillRect(ctx, body, doc.fill);
  strokeRect(ctx, body, '#335');
}

function drawBarChart(ctx: Draw2D, doc: BarChartDoc): void {
  fillRect(ctx, doc.frame, doc.fill);
  strokeRect(ctx, doc.frame, '#555');
  for (const strip of drawOrder(doc.strips)) {
    drawStrip(ctx, strip);
  }
}

function drawRing(ctx: Draw2D, doc: RingDoc): void {
  const [cx, cy] = doc.center;
  const n = doc.boundaries.length;
  for (let i = 0; i < n; i += 1) {
    const [a0, a1] = sectorAngles(doc.boundaries, doc.rotation, i);
    ctx.fillStyle = doc.colors[i % doc.colors.length];
    ctx.beginPath();
    if (doc.r_inner > 0) {
      ctx.arc(cx, cy, doc.r_outer, a0, a1);
      ctx.arc(cx, cy, doc.r_inner, a1, a0, true);
    } else {
      ctx.moveTo(cx, cy);
      ctx.arc(cx, cy, doc.r_outer, a0, a1);
    }
    ctx.closePath();
    ctx.fill();
    ctx.strokeStyle = '#ffffff';
    ctx.lineWidth = 1.5;
    ctx.stroke();
  }
  for (const cm of doc.sector_comments) {
    if (cm && cm.visible) drawComment(ctx, cm);
  }
  for (const cm of doc.comments) {
    if (cm.visible) drawComment(ctx, cm);
  }
}

function drawTrackBar(ctx: Draw2D, doc: TrackBarDoc): void {
  fillRect(ctx, doc.track, doc.fill);
  strokeRect(ctx, doc.track, '#666');
  const [tx, ty] = thumbCenter(doc);
  const filled: Rect = [doc.track[0], doc.track[1], tx - doc.track[0], doc.track[3]];
  fillRect(ctx, filled, '#7a9cc8');
  ctx.fillStyle = '#3a5a8c';
  ctx.beginPath();
  ctx.arc(tx, ty, Math.max(5, doc.track[3] * 0.8), 0, 2 * Math.PI);
  ctx.fill();
  for (const cm of doc.comments) {
    if (cm.visible) drawComment(ctx, cm);
  }
}

export function drawFigure(ctx: Draw2D, doc: FigureDoc): void {
  if ('visible' in doc && doc.visible === false) return;
  switch (doc.kind) {
    case 'rect': {
      const r = doc as RectFigureDoc;
      fillRect(ctx, r.rect, r.fill);
      strokeRect(ctx, r.rect, '#444');
      centeredText(ctx, r.label, r.rect[0] + r.rect[2] / 2, r.rect[1] + r.rect[3] / 2, 10);
      break;
    }
    case 'control':
      drawControl(ctx, doc);
      break;
    case 'comment':
      drawComment(ctx, doc);
      break;
    case 'commented_control':
      drawCommentedControl(ctx, doc);
      break;
    case 'elastic_group':
      drawElasticGroup(ctx, doc);
      break;
    case 'prop_group':
      drawPropGroup(ctx, doc);
      break;
    case 'linked_rects':
      drawLinkedRects(ctx, doc);
      break;
    case 'rect_select_group':
      drawRectSelectGroup(ctx, doc);
      break;
    case 'strip_bar':
      drawStrip(ctx, doc);
      break;
    case 'bar_chart':
      drawBarChart(ctx, doc);
      break;
    case 'trackbar':
      drawTrackBar(ctx, doc);
      break;
    case 'ring':
    case 'pie_chart':
      drawRing(ctx, doc);
      break;
    default:
      break;
  }
}

/** Paint a whole snapshot; the view offset pans everything. */
export function renderScene(ctx: Draw2D, doc: SceneDoc, width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  ctx.save();
  ctx.translate(doc.window.view[0], doc.window.view[1]);
  for (const figure of drawOrder(doc.figures)) {
    drawFigure(ctx, figure);
  }
  ctx.restore();
}
