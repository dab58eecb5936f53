"""Controls, commented controls and the three group archetypes.

Any form without free graphics can be built from three element types:
individual controls, controls with comments, and groups of controls — and the
rule is recursive, because a group's element can be another group.  Elastic
groups own nothing: their frame is always the padded union of the visible
elements, recomputed after every change that reaches them through the owner
chain.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Optional, Sequence, TYPE_CHECKING

from .cover import (Circle, Cover, CoverNode, CursorHint, MovementFreedom,
                    PICK_SENSE, Polygon, Strip, make_cover, rect_polygon,
                    standard_resize_cover)
from .figures import Figure, MIN_FIGURE_SIZE, resize_rect_by_node
from .geometry import Point2D, RectF, rect_union, rotate_about
from .persistence import LoadError, rect_from_list, rect_to_list

if TYPE_CHECKING:
    from .mover import Mover

# Crude text metrics for the abstract control proxies: the engine tests
# layout, not text rendering.
CHAR_WIDTH_FACTOR = 0.6
LINE_HEIGHT_FACTOR = 1.2

DEFAULT_PADDING = 6.0
EMPTY_FRAME_W = 120.0
EMPTY_FRAME_H = 24.0

# Minimum comment area pushed clear of its own control, as a fraction.
RELOCATION_EXPOSURE = 0.25
_RELOCATION_EPS = 1e-6


class Resizing(Enum):
    NONE = "none"
    WE = "we"
    NS = "ns"
    ANY = "any"


class Side(Enum):
    N = "n"
    S = "s"
    E = "e"
    W = "w"


def text_extent(text: str, font_size: float) -> tuple[float, float]:
    w = max(MIN_FIGURE_SIZE, CHAR_WIDTH_FACTOR * font_size * len(text))
    h = max(MIN_FIGURE_SIZE, LINE_HEIGHT_FACTOR * font_size)
    return w, h


# ---------------------------------------------------------------------------
# Control proxy
# ---------------------------------------------------------------------------

class ControlProxy(Figure):
    """Stand-in for a native control: a labeled rectangle moved and resized
    by its border; interior picks pass through."""

    kind = "control"

    def __init__(self, fid: int, rect: RectF, label: str = "",
                 resizing: Resizing = Resizing.ANY, font_size: float = 11.0,
                 fill: str = "#e8e8e8", parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        self.rect = rect
        self.label = label
        self.resizing = resizing
        self.font_size = font_size
        self.fill = fill
        self._init_cover()

    def bounds(self) -> RectF:
        return self.rect

    def _build_cover(self) -> Cover:
        sense = PICK_SENSE
        r = self.rect
        tl, tr, br, bl = r.corners()
        allow_we = self.resizing in (Resizing.WE, Resizing.ANY)
        allow_ns = self.resizing in (Resizing.NS, Resizing.ANY)
        allow_corner = self.resizing is Resizing.ANY

        def corner(pt):
            if allow_corner:
                return (Circle(pt, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, False)
            return (Circle(pt, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, True)

        def we_edge(a, b):
            if allow_we:
                return (Strip(a, b, sense), MovementFreedom.WE, CursorHint.SIZE_WE, False)
            return (Strip(a, b, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, True)

        def ns_edge(a, b):
            if allow_ns:
                return (Strip(a, b, sense), MovementFreedom.NS, CursorHint.SIZE_NS, False)
            return (Strip(a, b, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, True)

        specs = [
            corner(tl), corner(tr), corner(br), corner(bl),
            we_edge(tl, bl), ns_edge(tl, tr), we_edge(tr, br), ns_edge(bl, br),
        ]
        # A move band just inside the resize border keeps fully-resizable
        # controls moveable by their border too.
        inset = 2.0 * sense
        if r.width > 2.0 * inset and r.height > 2.0 * inset:
            itl = Point2D(r.left + inset, r.top + inset)
            itr = Point2D(r.right - inset, r.top + inset)
            ibr = Point2D(r.right - inset, r.bottom - inset)
            ibl = Point2D(r.left + inset, r.bottom - inset)
            for a, b in ((itl, itr), (itr, ibr), (ibr, ibl), (ibl, itl)):
                specs.append((Strip(a, b, sense), MovementFreedom.ALL,
                              CursorHint.SIZE_ALL, True))
        specs.append((rect_polygon(r), MovementFreedom.TRANSPARENT,
                      CursorHint.DEFAULT, False))
        return make_cover(*specs)

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        node = self.cover[node_index]
        if node.moves_whole:
            return self.move_by(dx, dy)
        new_rect = resize_rect_by_node(self.rect, node_index, dx, dy)
        if new_rect == self.rect:
            return False
        self.rect = new_rect
        self._after_mutation()
        return True

    def set_font_size(self, size: float) -> None:
        # Single-line controls: height follows the font, width stays under
        # the user's control.
        self.font_size = size
        self.rect = RectF(self.rect.left, self.rect.top, self.rect.width,
                          max(MIN_FIGURE_SIZE, 1.6 * size))
        self._after_mutation()

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable, "rect": rect_to_list(self.rect),
                "label": self.label, "resizing": self.resizing.value,
                "font_size": float(self.font_size), "fill": self.fill}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.rect = rect_from_list(params.get("rect", rect_to_list(self.rect)))
        self.label = params.get("label", self.label)
        self.resizing = Resizing(params.get("resizing", self.resizing.value))
        self.font_size = float(params.get("font_size", self.font_size))
        self.fill = params.get("fill", self.fill)
        self.movable = bool(params.get("movable", self.movable))


# ---------------------------------------------------------------------------
# Comment
# ---------------------------------------------------------------------------

class Comment(Figure):
    """Painted text positioned by its central point; individually moveable
    and rotatable unless pinned by its owner."""

    kind = "comment"

    def __init__(self, fid: int, text: str, anchor: Point2D,
                 font_size: float = 11.0, angle: float = 0.0,
                 offset: tuple[float, float] = (0.0, 0.0),
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        self.text = text
        self.anchor = anchor
        self.font_size = font_size
        self.angle = angle
        self.offset = offset
        self._init_cover()

    @property
    def rotatable(self) -> bool:
        return self._movable

    def corners(self) -> tuple[Point2D, ...]:
        w, h = text_extent(self.text, self.font_size)
        base = RectF(self.anchor.x - w / 2.0, self.anchor.y - h / 2.0, w, h)
        return tuple(rotate_about(c, self.anchor, self.angle) for c in base.corners())

    def bounds(self) -> RectF:
        pts = self.corners()
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        return RectF(min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys))

    def _build_cover(self) -> Cover:
        return make_cover((Polygon(self.corners()), MovementFreedom.ALL,
                           CursorHint.HAND, True))

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.anchor = self.anchor.moved(dx, dy)

    def rotation_center(self) -> Point2D:
        return self.anchor

    def _get_angle(self) -> float:
        return self.angle

    def _set_angle(self, value: float) -> None:
        self.angle = value

    def set_font_size(self, size: float) -> None:
        self.font_size = size
        self._after_mutation()

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable, "text": self.text,
                "anchor": [float(self.anchor.x), float(self.anchor.y)],
                "angle": float(self.angle), "font_size": float(self.font_size),
                "offset": [float(self.offset[0]), float(self.offset[1])]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.text = params.get("text", self.text)
        ax, ay = params.get("anchor", [self.anchor.x, self.anchor.y])
        self.anchor = Point2D(ax, ay)
        self.angle = float(params.get("angle", self.angle))
        self.font_size = float(params.get("font_size", self.font_size))
        ox, oy = params.get("offset", self.offset)
        self.offset = (float(ox), float(oy))
        self.movable = bool(params.get("movable", self.movable))


# ---------------------------------------------------------------------------
# Commented control
# ---------------------------------------------------------------------------

class CommentedControl:
    """A control proxy paired with a comment that tracks the control's
    motion but can also be moved and rotated on its own."""

    kind = "commented_control"

    def __init__(self, fid: int, proxy: ControlProxy, comment: Comment,
                 side_hint: Side = Side.W) -> None:
        self.fid = fid
        self.proxy = proxy
        self.comment = comment
        self.side_hint = side_hint
        self.parent_id = None
        self.comment.parent_id = proxy.fid
        self.proxy._owner = self
        self.comment._owner = self
        self._owner = None
        self._sync_offset()

    @classmethod
    def build(cls, next_id, rect: RectF, text: str,
              resizing: Resizing = Resizing.WE, side: Side = Side.W,
              font_size: float = 11.0, gap: float = 6.0) -> "CommentedControl":
        """Construct the pair with the comment placed on the given side."""
        proxy = ControlProxy(next_id(), rect, label=text, resizing=resizing,
                             font_size=font_size)
        w, h = text_extent(text, font_size)
        cx, cy = rect.center.x, rect.center.y
        if side is Side.W:
            anchor = Point2D(rect.left - gap - w / 2.0, cy)
        elif side is Side.E:
            anchor = Point2D(rect.right + gap + w / 2.0, cy)
        elif side is Side.N:
            anchor = Point2D(cx, rect.top - gap - h / 2.0)
        else:
            anchor = Point2D(cx, rect.bottom + gap + h / 2.0)
        comment = Comment(next_id(), text, anchor, font_size=font_size)
        return cls(next_id(), proxy, comment, side)

    # -- element protocol -----------------------------------------------------

    @property
    def visible(self) -> bool:
        return self.proxy.visible

    @visible.setter
    def visible(self, value: bool) -> None:
        self.proxy.visible = bool(value)
        self.comment.visible = bool(value)

    def bounds(self) -> RectF:
        return rect_union([self.proxy.rect, self.comment.bounds()])

    def into_mover(self, mover: "Mover", position: int) -> int:
        if not self.visible:
            return position
        # Controls sit atop graphics: the proxy shadows its comment.
        mover.insert(position, self.proxy)
        mover.insert(position + 1, self.comment)
        return position + 2

    def set_movable(self, value: bool) -> None:
        self.proxy.movable = value
        self.comment.movable = value

    def iter_children(self):
        yield self.proxy
        yield self.comment

    def translate_silent(self, dx: float, dy: float) -> None:
        self.proxy.translate_silent(dx, dy)
        self.comment.translate_silent(dx, dy)

    def _reference_point(self) -> Point2D:
        return self.proxy.rect.center

    def _sync_offset(self) -> None:
        ref = self._reference_point()
        self.comment.offset = (self.comment.anchor.x - ref.x,
                               self.comment.anchor.y - ref.y)

    def _sync_comment(self) -> None:
        ref = self._reference_point()
        self.comment.anchor = Point2D(ref.x + self.comment.offset[0],
                                      ref.y + self.comment.offset[1])
        self.comment.refresh_cover()

    def _on_child_changed(self, child) -> None:
        if child is self.proxy:
            self._sync_comment()
        elif child is self.comment:
            self._sync_offset()
        if self._owner is not None:
            self._owner._on_child_changed(self)

    def _on_child_released(self, child, mover) -> None:
        if child is self.comment:
            self.comment_enforced_relocation(mover)

    def comment_enforced_relocation(self, mover: "Mover" = None) -> bool:
        """Push the comment clear when it was left entirely inside its own
        control; a comment hidden under any other figure stays where it is."""
        if not self.comment.visible:
            return False
        c = self.comment.bounds()
        r = self.proxy.rect
        if not r.contains_rect(c):
            return False
        frac_w = RELOCATION_EXPOSURE * c.width + _RELOCATION_EPS
        frac_h = RELOCATION_EXPOSURE * c.height + _RELOCATION_EPS
        pushes = [
            ((r.right - c.right) + frac_w, 1.0, 0.0),    # out the right side
            ((c.left - r.left) + frac_w, -1.0, 0.0),     # out the left side
            ((r.bottom - c.bottom) + frac_h, 0.0, 1.0),  # out the bottom
            ((c.top - r.top) + frac_h, 0.0, -1.0),       # out the top
        ]
        d, ux, uy = min(pushes, key=lambda t: t[0])
        self.comment.move_by(ux * d, uy * d)
        return True

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "side": self.side_hint.value,
                "proxy": self.proxy.to_params(),
                "comment": self.comment.to_params()}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.side_hint = Side(params.get("side", self.side_hint.value))
        self.proxy.apply_params(params.get("proxy", {}), f"{path}/proxy")
        # the archived offset is authoritative; re-deriving it would drift
        # by an ulp and break byte-stable round trips
        self.comment.apply_params(params.get("comment", {}), f"{path}/comment")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<CommentedControl id={self.fid} {self.proxy.label!r}>"


# ---------------------------------------------------------------------------
# Elastic group
# ---------------------------------------------------------------------------

@dataclass
class VisualParams:
    """Tuneable appearance of a group; every field is user-set and saved."""

    frame_color: str = "#808080"
    background_color: str = "#f0f0f0"
    transparency: float = 0.0
    spread_background: bool = False
    show_frame: bool = True
    show_background: bool = False
    frame_width: float = 1.0
    title_color: str = "#000000"
    title_font_size: float = 11.0


class ElasticGroup(Figure):
    """Recursive group whose frame always surrounds its inner elements.

    Elements move and resize individually; the frame follows as the padded
    union of the visible element bounds.  The title slides along the upper
    border.
    """

    kind = "elastic_group"

    def __init__(self, fid: int, title: str = "",
                 elements: Sequence | None = None,
                 padding: float = DEFAULT_PADDING,
                 visual: VisualParams | None = None,
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        self.title = title
        self.title_position = 0.0
        self.padding = padding
        self.visual = visual or VisualParams()
        self.elements = list(elements or [])
        self.elements_movable = True
        self.frame = RectF(0.0, 0.0, EMPTY_FRAME_W, EMPTY_FRAME_H)
        self._default_params: dict | None = None
        for e in self.elements:
            e._owner = self
            e.parent_id = self.fid
        self._recompute_frame_rect()
        self._init_cover()

    # -- frame ---------------------------------------------------------------

    def _visible_elements(self) -> list:
        return [e for e in self.elements if e.visible]

    def _recompute_frame_rect(self) -> None:
        vis = self._visible_elements()
        if vis:
            self.frame = rect_union([e.bounds() for e in vis]).expanded(self.padding)
        else:
            # Keep the group grabbable: collapse to a title-bar stub.
            self.frame = RectF(self.frame.left, self.frame.top,
                               EMPTY_FRAME_W, EMPTY_FRAME_H)

    def recompute_frame(self) -> None:
        """Restore the frame invariant, nested groups bottom-up."""
        for e in self.elements:
            if isinstance(e, ElasticGroup) and e.visible:
                e.recompute_frame()
        self._recompute_frame_rect()
        self.refresh_cover()

    def bounds(self) -> RectF:
        return self.frame

    # -- cover ----------------------------------------------------------------

    def _title_span(self) -> tuple[float, float] | None:
        if not self.title:
            return None
        tw = min(self.frame.width,
                 CHAR_WIDTH_FACTOR * self.visual.title_font_size * len(self.title))
        if tw <= 0:
            return None
        x0 = self.frame.left + self.title_position * (self.frame.width - tw)
        return x0, x0 + tw

    def _build_cover(self) -> Cover:
        specs = []
        span = self._title_span()
        self._title_node = None
        if span is not None and span[1] > span[0]:
            self._title_node = len(specs)
            specs.append((Strip(Point2D(span[0], self.frame.top),
                                Point2D(span[1], self.frame.top), PICK_SENSE),
                          MovementFreedom.WE, CursorHint.HAND, False))
        specs.append((rect_polygon(self.frame), MovementFreedom.ALL,
                      CursorHint.SIZE_ALL, True))
        return make_cover(*specs)

    # -- motion ----------------------------------------------------------------

    def _translate_geometry(self, dx: float, dy: float) -> None:
        for e in self.elements:
            e.translate_silent(dx, dy)
        # The frame is derived, so re-derive rather than shifting it: the
        # invariant must hold bit-exactly after every operation.
        self.frame = self.frame.moved(dx, dy)
        self._recompute_frame_rect()

    def translate_silent(self, dx: float, dy: float) -> None:
        self._translate_geometry(dx, dy)
        self.refresh_cover()

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        node = self.cover[node_index]
        if node.moves_whole:
            return self.move_by(dx, dy)
        if self._title_node is not None and node_index == self._title_node:
            span = self._title_span()
            tw = span[1] - span[0]
            room = self.frame.width - tw
            if room <= 0:
                return False
            t = (p.x - self.frame.left - tw / 2.0) / room
            return self.set_title_position(t)
        return False

    def set_title_position(self, t: float) -> bool:
        t = min(1.0, max(0.0, t))
        if t == self.title_position:
            return False
        self.title_position = t
        self._after_mutation()
        return True

    # -- movability -------------------------------------------------------------

    def set_movable(self, value: bool) -> None:
        """Fix or free the group and, recursively, all its inner elements."""
        self.set_elements_movable(value)
        self._movable = bool(value)
        self.refresh_cover()

    @Figure.movable.setter
    def movable(self, value: bool) -> None:
        self.set_movable(value)

    def set_elements_movable(self, value: bool) -> None:
        """Fix or free the inner elements only; the frame keeps its own
        movability, which yields all four combinations."""
        self.elements_movable = bool(value)
        for e in self.elements:
            e.set_movable(value)

    # -- change propagation -------------------------------------------------------

    def _on_child_changed(self, child) -> None:
        self._recompute_frame_rect()
        self.refresh_cover()
        if self._owner is not None:
            self._owner._on_child_changed(self)

    def iter_children(self):
        return iter(self.elements)

    # -- registration ----------------------------------------------------------------

    def into_mover(self, mover: "Mover", position: int) -> int:
        """Register every visible element and then the frame, so element
        grabs win over group grabs."""
        if not self.visible:
            return position
        pos = position
        for e in self.elements:
            pos = e.into_mover(mover, pos)
        mover.insert(pos, self)
        return pos + 1

    # -- default view -------------------------------------------------------------------

    def record_default(self) -> None:
        self._default_params = self.to_params()

    def reset_default(self) -> bool:
        if self._default_params is None:
            return False
        self.apply_params(self._default_params, "reset-default")
        self.recompute_frame()
        if self._owner is not None:
            self._owner._on_child_changed(self)
        return True

    # -- persistence -----------------------------------------------------------------------

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self._movable, "title": self.title,
                "title_position": float(self.title_position),
                "padding": float(self.padding),
                "elements_movable": self.elements_movable,
                "frame": rect_to_list(self.frame),
                "visual": {k: (float(v) if isinstance(v, (int, float)) and not isinstance(v, bool) else v)
                           for k, v in asdict(self.visual).items()},
                "elements": [e.to_params() for e in self.elements]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.title = params.get("title", self.title)
        self.title_position = float(params.get("title_position", self.title_position))
        self.padding = float(params.get("padding", self.padding))
        self.elements_movable = bool(params.get("elements_movable", self.elements_movable))
        self.frame = rect_from_list(params.get("frame", rect_to_list(self.frame)))
        for k, v in params.get("visual", {}).items():
            if hasattr(self.visual, k):
                setattr(self.visual, k, v)
        archived = params.get("elements", [])
        if len(archived) != len(self.elements):
            raise LoadError(f"{path}/elements: expected {len(self.elements)} "
                            f"elements, archive has {len(archived)}")
        for i, (element, sub) in enumerate(zip(self.elements, archived)):
            element.apply_params(sub, f"{path}/elements/{i}")
        self._movable = bool(params.get("movable", self._movable))
        self.recompute_frame()


# ---------------------------------------------------------------------------
# Proportional group (classical dynamic layout)
# ---------------------------------------------------------------------------

@dataclass
class PropItem:
    """One display rectangle stored as fractions of the group frame."""

    label: str
    fx: float
    fy: float
    fw: float
    fh: float

    def rect_in(self, frame: RectF) -> RectF:
        return RectF(frame.left + self.fx * frame.width,
                     frame.top + self.fy * frame.height,
                     self.fw * frame.width, self.fh * frame.height)


class ProportionalGroup(Figure):
    """Moved by any inner point, resized by any frame point; inner elements
    remap through their stored fractions of the frame."""

    kind = "prop_group"

    def __init__(self, fid: int, frame: RectF, title: str = "",
                 items: Sequence[PropItem] | None = None,
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        self.frame = frame
        self.title = title
        self.items = list(items or [])
        self._init_cover()

    def bounds(self) -> RectF:
        return self.frame

    def element_rects(self) -> list[RectF]:
        return [item.rect_in(self.frame) for item in self.items]

    def _build_cover(self) -> Cover:
        return standard_resize_cover(self.frame)

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.frame = self.frame.moved(dx, dy)

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        node = self.cover[node_index]
        if node.moves_whole:
            return self.move_by(dx, dy)
        new_frame = resize_rect_by_node(self.frame, node_index, dx, dy)
        return self.proportional_resize(new_frame)

    def proportional_resize(self, new_frame: RectF) -> bool:
        if new_frame.width < MIN_FIGURE_SIZE or new_frame.height < MIN_FIGURE_SIZE:
            new_frame = RectF(new_frame.left, new_frame.top,
                              max(new_frame.width, MIN_FIGURE_SIZE),
                              max(new_frame.height, MIN_FIGURE_SIZE))
        if new_frame == self.frame:
            return False
        self.frame = new_frame
        self._after_mutation()
        return True

    def to_params(self) -> dict:
        # items are construction constants, carried for renderers and
        # ignored on load
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable, "title": self.title,
                "frame": rect_to_list(self.frame),
                "items": [{"label": it.label,
                           "frac": [float(it.fx), float(it.fy),
                                    float(it.fw), float(it.fh)]}
                          for it in self.items]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.title = params.get("title", self.title)
        self.frame = rect_from_list(params.get("frame", rect_to_list(self.frame)))
        self.movable = bool(params.get("movable", self.movable))


# ---------------------------------------------------------------------------
# Linked rectangles
# ---------------------------------------------------------------------------

class LinkedRectangles(Figure):
    """Non-resizable parts at fixed relative offsets, moved synchronously."""

    kind = "linked_rects"

    def __init__(self, fid: int, parts: Sequence[RectF],
                 labels: Sequence[str] | None = None,
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        if not parts:
            raise ValueError("LinkedRectangles needs at least one part")
        self.parts = list(parts)
        self.labels = list(labels or [""] * len(self.parts))
        self._init_cover()

    def bounds(self) -> RectF:
        return rect_union(self.parts)

    def _build_cover(self) -> Cover:
        return make_cover(*[(rect_polygon(part), MovementFreedom.ALL,
                             CursorHint.SIZE_ALL, True) for part in self.parts])

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.parts = [part.moved(dx, dy) for part in self.parts]

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable,
                "parts": [rect_to_list(part) for part in self.parts]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        parts = params.get("parts")
        if parts is not None:
            if len(parts) != len(self.parts):
                raise LoadError(f"{path}/parts: expected {len(self.parts)}, "
                                f"archive has {len(parts)}")
            self.parts = [rect_from_list(part) for part in parts]
        self.movable = bool(params.get("movable", self.movable))


# ---------------------------------------------------------------------------
# Rubber-band selection group
# ---------------------------------------------------------------------------

class RectSelectGroup(Figure):
    """Free union of free elements: one big non-resizable rectangle that
    moves every captured member by any inner point."""

    kind = "rect_select_group"

    def __init__(self, fid: int, members: Sequence[Figure],
                 label: str = "Arbitrary", pad: float = 4.0,
                 fill: str = "#cdeaea", parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        if not members:
            raise ValueError("selection group needs at least one member")
        self.members = list(members)
        self.label = label
        self.pad = pad
        self.fill = fill
        self._init_cover()

    def bounds(self) -> RectF:
        return rect_union([m.bounds() for m in self.members]).expanded(self.pad)

    def _build_cover(self) -> Cover:
        return make_cover((rect_polygon(self.bounds()), MovementFreedom.ALL,
                           CursorHint.SIZE_ALL, True))

    def _translate_geometry(self, dx: float, dy: float) -> None:
        for m in self.members:
            m.move_by(dx, dy)

    def member_ids(self) -> list[int]:
        return [m.fid for m in self.members]

    def to_params(self) -> dict:
        # bounds are derived from the members; carried for renderers
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable, "label": self.label, "fill": self.fill,
                "pad": float(self.pad), "members": self.member_ids(),
                "bounds": rect_to_list(self.bounds())}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.label = params.get("label", self.label)
        self.fill = params.get("fill", self.fill)
        self.pad = float(params.get("pad", self.pad))
        self.movable = bool(params.get("movable", self.movable))


def rubber_band_select(scene, r: RectF) -> Optional[RectSelectGroup]:
    """Unite every visible top-level figure entirely inside r into a group
    registered atop the queue; None when nothing was framed."""
    captured = [entry for entry in scene.top_level
                if entry.visible and r.contains_rect(entry.bounds())]
    if not captured:
        return None
    group = RectSelectGroup(scene.new_id(), captured, label="Arbitrary")
    scene.add_top(group, front=True)
    return group


def frame_predefined_group(scene, name: str) -> Optional[RectSelectGroup]:
    """Frame one of the scene's predefined closed societies.  Only the
    society's own members join, no matter what else sits inside their
    bounds."""
    ids = scene.predefined_groups.get(name)
    if not ids:
        return None
    members = [scene.figures[i] for i in ids]
    group = RectSelectGroup(scene.new_id(), members, label=name.capitalize())
    scene.add_top(group, front=True)
    return group


def set_element_visible(element, value: bool) -> None:
    """Toggle an element and let its surrounding frames follow."""
    element.visible = bool(value)
    owner = getattr(element, "_owner", None)
    if owner is not None:
        owner._on_child_changed(element)


def _check_kind(obj, params: dict, path: str) -> None:
    archived = params.get("kind", obj.kind)
    if archived != obj.kind:
        raise LoadError(f"{path}: expected kind {obj.kind!r}, archive has {archived!r}")
