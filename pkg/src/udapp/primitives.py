"""Manipulable chart primitives: geometry edits change the values.

Bar strips are resized by their value edge, rings and pie charts support
resectoring (dragging the border between two sectors) and whole-object
rotation, and the graphical track bar picks a value from a range.  All the
interaction limits live in move_node: motion past a constraint clamps to the
nearest legal geometry, so nothing can ever disappear.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Optional, Sequence

from .cover import (Circle, Cover, CursorHint, MovementFreedom, PICK_SENSE,
                    Polygon, Strip, make_cover, rect_polygon,
                    standard_resize_cover)
from .figures import Figure, MIN_FIGURE_SIZE, resize_rect_by_node
from .geometry import (Point2D, RectF, TWO_PI, dist, polar_angle, rect_union)
from .groups import Comment, _check_kind
from .persistence import LoadError, rect_from_list, rect_to_list

# The smallest a sector may get, in radians; resectoring clamps at this floor.
MIN_SECTOR_ANGLE = 0.05
# Strips and rings keep at least this much geometry on resize.
MIN_BAR_LENGTH = 2.0
MIN_RING_GAP = 2.0
MIN_TRACK_WIDTH = 20.0


class Direction(Enum):
    HOR = "hor"
    VER = "ver"


# ---------------------------------------------------------------------------
# Bar strips
# ---------------------------------------------------------------------------

class StripBar(Figure):
    """One bar of a primitive bar chart.

    The bar grows from its anchor by a signed length; dragging the value edge
    changes the length and therefore the associated value
    (value = length * value_scale).  The body is recognized but frozen, so
    menus can target it without moving anything.
    """

    kind = "strip_bar"

    def __init__(self, fid: int, anchor: Point2D, direction: Direction,
                 length: float, span: tuple[float, float],
                 halfsense: float = PICK_SENSE, value_scale: float = 1.0,
                 fill: str = "#4a90d9", parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        if abs(length) < MIN_BAR_LENGTH:
            raise ValueError(f"bar length magnitude below {MIN_BAR_LENGTH}")
        if span[1] <= span[0]:
            raise ValueError("bar span must be increasing")
        self.anchor = anchor
        self.direction = direction
        self.length = length
        self.span = (float(span[0]), float(span[1]))
        self.halfsense = halfsense
        self.value_scale = value_scale
        self.fill = fill
        self._init_cover()

    @property
    def value(self) -> float:
        return self.length * self.value_scale

    def edge_position(self) -> float:
        """Coordinate of the draggable value edge (y for HOR, x for VER)."""
        if self.direction is Direction.HOR:
            return self.anchor.y + self.length
        return self.anchor.x + self.length

    def body_rect(self) -> RectF:
        lo, hi = self.span
        if self.direction is Direction.HOR:
            edge = self.edge_position()
            top = min(self.anchor.y, edge)
            return RectF(lo, top, hi - lo, max(MIN_BAR_LENGTH, abs(self.length)))
        edge = self.edge_position()
        left = min(self.anchor.x, edge)
        return RectF(left, lo, max(MIN_BAR_LENGTH, abs(self.length)), hi - lo)

    def bounds(self) -> RectF:
        return self.body_rect()

    def _build_cover(self) -> Cover:
        lo, hi = self.span
        if self.direction is Direction.HOR:
            edge = self.edge_position()
            edge_spec = (Strip(Point2D(lo, edge), Point2D(hi, edge), self.halfsense),
                         MovementFreedom.NS, CursorHint.SIZE_NS, False)
        else:
            edge = self.edge_position()
            edge_spec = (Strip(Point2D(edge, lo), Point2D(edge, hi), self.halfsense),
                         MovementFreedom.WE, CursorHint.SIZE_WE, False)
        return make_cover(
            edge_spec,
            (rect_polygon(self.body_rect()), MovementFreedom.FREEZE,
             CursorHint.DEFAULT, False),
        )

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.anchor = self.anchor.moved(dx, dy)
        shift = dx if self.direction is Direction.HOR else dy
        self.span = (self.span[0] + shift, self.span[1] + shift)

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        if node_index != 0:
            return False
        delta = dy if self.direction is Direction.HOR else dx
        new_length = self.length + delta
        chart = self._owner
        if isinstance(chart, BarChartPrim):
            # strips live inside their chart's rectangle
            if self.direction is Direction.HOR:
                lo = chart.frame.top - self.anchor.y
                hi = chart.frame.bottom - self.anchor.y
            else:
                lo = chart.frame.left - self.anchor.x
                hi = chart.frame.right - self.anchor.x
            new_length = min(max(new_length, lo), hi)
        # the minimum length wins over containment: nothing may disappear
        if self.length < 0:
            new_length = min(new_length, -MIN_BAR_LENGTH)
        else:
            new_length = max(new_length, MIN_BAR_LENGTH)
        if new_length == self.length:
            return False
        self.length = new_length
        self._after_mutation()
        return True

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable,
                "anchor": [float(self.anchor.x), float(self.anchor.y)],
                "direction": self.direction.value, "length": float(self.length),
                "span": [float(self.span[0]), float(self.span[1])],
                "halfsense": float(self.halfsense),
                "value_scale": float(self.value_scale), "fill": self.fill}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        ax, ay = params.get("anchor", [self.anchor.x, self.anchor.y])
        self.anchor = Point2D(ax, ay)
        self.direction = Direction(params.get("direction", self.direction.value))
        self.length = float(params.get("length", self.length))
        lo, hi = params.get("span", self.span)
        self.span = (float(lo), float(hi))
        self.halfsense = float(params.get("halfsense", self.halfsense))
        self.value_scale = float(params.get("value_scale", self.value_scale))
        self.fill = params.get("fill", self.fill)
        self.movable = bool(params.get("movable", self.movable))


class BarChartPrim(Figure):
    """Primitive bar chart: no scales, no comments; moved by any inner point,
    resized by its border, strips resized by their value edges."""

    kind = "bar_chart"

    def __init__(self, fid: int, frame: RectF,
                 strips: Sequence[StripBar] = (), fill: str = "#ffffff",
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        self.frame = frame
        self.strips = list(strips)
        self.fill = fill
        for s in self.strips:
            s._owner = self
            s.parent_id = self.fid
        self._init_cover()

    def bounds(self) -> RectF:
        return self.frame

    def _build_cover(self) -> Cover:
        return standard_resize_cover(self.frame)

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.frame = self.frame.moved(dx, dy)
        for s in self.strips:
            s.translate_silent(dx, dy)

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        node = self.cover[node_index]
        if node.moves_whole:
            return self.move_by(dx, dy)
        old = self.frame
        new = resize_rect_by_node(old, node_index, dx, dy,
                                  min_w=MIN_TRACK_WIDTH, min_h=MIN_TRACK_WIDTH)
        if new == old:
            return False
        sx, sy = new.width / old.width, new.height / old.height
        for s in self.strips:
            lo = new.left + (s.span[0] - old.left) * sx if s.direction is Direction.HOR \
                else new.top + (s.span[0] - old.top) * sy
            hi = new.left + (s.span[1] - old.left) * sx if s.direction is Direction.HOR \
                else new.top + (s.span[1] - old.top) * sy
            s.anchor = Point2D(new.left + (s.anchor.x - old.left) * sx,
                               new.top + (s.anchor.y - old.top) * sy)
            s.span = (lo, hi)
            # Visual zoom must not change the data: rescale value per unit.
            scale = sy if s.direction is Direction.HOR else sx
            s.length *= scale
            s.value_scale /= scale
            s.refresh_cover()
        self.frame = new
        self._after_mutation()
        return True

    def _on_child_changed(self, child) -> None:
        if self._owner is not None:
            self._owner._on_child_changed(self)

    def iter_children(self):
        return iter(self.strips)

    def into_mover(self, mover, position: int) -> int:
        if not self.visible:
            return position
        pos = position
        for s in self.strips:
            pos = s.into_mover(mover, pos)
        mover.insert(pos, self)
        return pos + 1

    def set_movable(self, value: bool) -> None:
        self.movable = value
        for s in self.strips:
            s.movable = value

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self._movable, "frame": rect_to_list(self.frame),
                "fill": self.fill,
                "strips": [s.to_params() for s in self.strips]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.frame = rect_from_list(params.get("frame", rect_to_list(self.frame)))
        self.fill = params.get("fill", self.fill)
        archived = params.get("strips", [])
        if len(archived) != len(self.strips):
            raise LoadError(f"{path}/strips: expected {len(self.strips)}, "
                            f"archive has {len(archived)}")
        for i, (strip, sub) in enumerate(zip(self.strips, archived)):
            strip.apply_params(sub, f"{path}/strips/{i}")
        self._movable = bool(params.get("movable", self._movable))
        self.refresh_cover()


# ---------------------------------------------------------------------------
# Rings and pie charts
# ---------------------------------------------------------------------------

_PALETTE = ("#e8694a", "#4a90d9", "#69b578", "#e0c341", "#9166b0",
            "#d96fa8", "#5bc0be", "#b0753a")


class RingPrim(Figure):
    """Ring split into sectors by boundary angles.

    Sector i spans [boundaries[i], boundaries[i+1]) with the last sector
    wrapping to boundaries[0] + 2*pi; the first boundary is the rotation
    datum, so the stored list stays strictly increasing and the sector angles
    always sum to a full turn.  The drawn position of boundary i is
    boundaries[i] + rotation.
    """

    kind = "ring"

    def __init__(self, fid: int, center: Point2D, r_inner: float,
                 r_outer: float, boundaries: Sequence[float],
                 rotation: float = 0.0, resizable: bool = True,
                 value_total: float = 1.0,
                 colors: Sequence[str] | None = None,
                 sector_comments: Sequence[Optional[Comment]] | None = None,
                 comments: Sequence[Comment] | None = None,
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        if not (0 <= r_inner < r_outer):
            raise ValueError("need 0 <= r_inner < r_outer")
        bounds = [float(b) for b in boundaries]
        if not bounds:
            raise ValueError("ring needs at least one boundary")
        for i in range(1, len(bounds)):
            if bounds[i] <= bounds[i - 1]:
                raise ValueError("boundaries must be strictly increasing")
        if bounds[-1] - bounds[0] >= TWO_PI:
            raise ValueError("boundaries span a full turn or more")
        self.center = center
        self.r_inner = float(r_inner)
        self.r_outer = float(r_outer)
        self.boundaries = bounds
        self.rotation_angle = float(rotation)
        self.resizable = resizable
        self.value_total = value_total
        n = len(bounds)
        palette = list(colors) if colors else [_PALETTE[i % len(_PALETTE)] for i in range(n)]
        self.colors = palette
        self.sector_comments: list[Optional[Comment]] = list(sector_comments or [None] * n)
        self.comments: list[Comment] = list(comments or [])
        if len(self.sector_comments) != n:
            raise ValueError("one sector comment slot per sector")
        for gap_i in range(n):
            if self.sector_angle(gap_i) < MIN_SECTOR_ANGLE - 1e-12:
                raise ValueError(f"sector {gap_i} below the {MIN_SECTOR_ANGLE} rad floor")
        for cm in self._all_comments():
            cm._owner = self
            cm.parent_id = self.fid
        for i, cm in enumerate(self.sector_comments):
            if cm is not None:
                self._derive_sector_polar(i)
        self._resector: Optional[tuple[int, float, float]] = None
        self._active_role: Optional[tuple] = None
        self._node_roles: list[tuple] = []
        self._init_cover()

    # -- sector geometry -----------------------------------------------------

    @property
    def sector_count(self) -> int:
        return len(self.boundaries)

    def boundary_after(self, i: int) -> float:
        if i + 1 < len(self.boundaries):
            return self.boundaries[i + 1]
        return self.boundaries[0] + TWO_PI

    def sector_angle(self, i: int) -> float:
        return self.boundary_after(i) - self.boundaries[i]

    def sector_fraction(self, i: int) -> float:
        return self.sector_angle(i) / TWO_PI

    def sector_value(self, i: int) -> float:
        return self.sector_fraction(i) * self.value_total

    def _point_at(self, angle: float, radius: float) -> Point2D:
        a = angle + self.rotation_angle
        return Point2D(self.center.x + radius * math.cos(a),
                       self.center.y + radius * math.sin(a))

    def bounds(self) -> RectF:
        r = self.r_outer
        return RectF(self.center.x - r, self.center.y - r, 2 * r, 2 * r)

    # -- cover -----------------------------------------------------------------

    def _arc_segments(self) -> int:
        return max(12, math.ceil(TWO_PI * self.r_outer / 20.0))

    def _build_cover(self) -> Cover:
        specs: list[tuple] = []
        roles: list[tuple] = []
        n_arc = self._arc_segments()
        if self.resizable:
            for i, b in enumerate(self.boundaries):
                inner_pt = self._point_at(b, max(self.r_inner, 0.0)) \
                    if self.r_inner > 0 else self.center
                specs.append((Strip(inner_pt, self._point_at(b, self.r_outer),
                                    PICK_SENSE),
                              MovementFreedom.ALL, CursorHint.HAND, False))
                roles.append(("border", i))
            for k in range(n_arc):
                a0, a1 = TWO_PI * k / n_arc, TWO_PI * (k + 1) / n_arc
                specs.append((Strip(self._point_at(a0, self.r_outer),
                                    self._point_at(a1, self.r_outer), PICK_SENSE),
                              MovementFreedom.ALL, CursorHint.SIZE_ALL, False))
                roles.append(("outer", k))
            if self.r_inner > 0:
                for k in range(n_arc):
                    a0, a1 = TWO_PI * k / n_arc, TWO_PI * (k + 1) / n_arc
                    specs.append((Strip(self._point_at(a0, self.r_inner),
                                        self._point_at(a1, self.r_inner), PICK_SENSE),
                                  MovementFreedom.ALL, CursorHint.SIZE_ALL, False))
                    roles.append(("inner", k))
        for k in range(n_arc):
            a0, a1 = TWO_PI * k / n_arc, TWO_PI * (k + 1) / n_arc
            if self.r_inner > 0:
                poly = Polygon((self._point_at(a0, self.r_inner),
                                self._point_at(a0, self.r_outer),
                                self._point_at(a1, self.r_outer),
                                self._point_at(a1, self.r_inner)))
            else:
                poly = Polygon((self.center, self._point_at(a0, self.r_outer),
                                self._point_at(a1, self.r_outer)))
            specs.append((poly, MovementFreedom.ALL, CursorHint.SIZE_ALL, True))
            roles.append(("body", k))
        self._node_roles = roles
        return make_cover(*specs)

    def node_role(self, node_index: int) -> Optional[tuple]:
        if 0 <= node_index < len(self._node_roles):
            return self._node_roles[node_index]
        return None

    # -- resectoring -------------------------------------------------------------

    def start_resectoring(self, node_index: int) -> None:
        """Record the two adjacent sectors and the legal angular window for
        the grabbed border; no-op for anything but a border node."""
        role = self.node_role(node_index)
        if not self.resizable or role is None or role[0] != "border":
            self._resector = None
            return
        i = role[1]
        n = len(self.boundaries)
        prev = self.boundaries[i - 1] if i > 0 else self.boundaries[n - 1] - TWO_PI
        nxt = self.boundaries[i + 1] if i + 1 < n else self.boundaries[0] + TWO_PI
        self._resector = (i, prev, nxt)

    def _move_border(self, p: Point2D) -> bool:
        if self._resector is None:
            return False
        i, prev, nxt = self._resector
        if p.x == self.center.x and p.y == self.center.y:
            return False
        n = len(self.boundaries)
        b = self.boundaries

        # Gap formulas exactly as sector_angle evaluates them, so the 0.05
        # floor holds bit-for-bit after clamping.
        def gap_left(t: float) -> float:
            return (t - b[i - 1]) if i > 0 else (t + TWO_PI) - b[n - 1]

        def gap_right(t: float) -> float:
            return (b[i + 1] - t) if i + 1 < n else (b[0] + TWO_PI) - t

        raw = polar_angle(p, self.center) - self.rotation_angle
        # Bring the mouse angle onto the branch starting at the window floor.
        theta = prev + math.fmod(raw - prev, TWO_PI)
        if theta < prev:
            theta += TWO_PI
        lo = prev + MIN_SECTOR_ANGLE
        hi = nxt - MIN_SECTOR_ANGLE
        if lo > hi:
            return False
        theta = min(max(theta, lo), hi)
        while gap_left(theta) < MIN_SECTOR_ANGLE:
            theta = math.nextafter(theta, math.inf)
        while gap_right(theta) < MIN_SECTOR_ANGLE:
            theta = math.nextafter(theta, -math.inf)
        if gap_left(theta) < MIN_SECTOR_ANGLE:
            return False
        if theta == self.boundaries[i]:
            return False
        self.boundaries[i] = theta
        self._sync_sector_comments()
        self._after_mutation()
        return True

    # -- node motion ----------------------------------------------------------------

    def on_grab(self, node_index: int, p: Point2D, button) -> None:
        role = self.node_role(node_index)
        self._active_role = role
        if role is not None and role[0] == "border":
            self.start_resectoring(node_index)

    def on_release(self, mover) -> None:
        self._active_role = None
        self._resector = None

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        role = self._active_role or self.node_role(node_index)
        if role is None:
            return False
        tag = role[0]
        if tag == "border":
            return self._move_border(p)
        if tag == "outer":
            new_r = max(dist(p, self.center), self.r_inner + MIN_RING_GAP)
            if new_r == self.r_outer:
                return False
            self.r_outer = new_r
            self._after_mutation()
            return True
        if tag == "inner":
            new_r = min(max(dist(p, self.center), 0.0),
                        self.r_outer - MIN_RING_GAP)
            if new_r == self.r_inner:
                return False
            self.r_inner = new_r
            self._after_mutation()
            return True
        if tag == "body":
            return self.move_by(dx, dy)
        return False

    # -- rotation -----------------------------------------------------------------------

    @property
    def rotatable(self) -> bool:
        return self._movable

    def rotation_center(self) -> Point2D:
        return self.center

    def _get_angle(self) -> float:
        return self.rotation_angle

    def _set_angle(self, value: float) -> None:
        self.rotation_angle = value
        # Sector comments ride their sectors; whole-ring comments stay put.
        self._sync_sector_comments()

    # -- comments ----------------------------------------------------------------------

    def _all_comments(self):
        for cm in self.sector_comments:
            if cm is not None:
                yield cm
        yield from self.comments

    def _sector_mid(self, i: int) -> float:
        return self.rotation_angle + (self.boundaries[i] + self.boundary_after(i)) / 2.0

    def _derive_sector_polar(self, i: int) -> None:
        # tracking state lives in the comment's offset field: (radius,
        # angular offset from the sector midline), so it persists
        cm = self.sector_comments[i]
        radius = dist(cm.anchor, self.center)
        off = polar_angle(cm.anchor, self.center) - self._sector_mid(i)
        cm.offset = (radius, off)

    def _sync_sector_comments(self) -> None:
        for i, cm in enumerate(self.sector_comments):
            if cm is None:
                continue
            radius, off = cm.offset
            a = self._sector_mid(i) + off
            cm.anchor = Point2D(self.center.x + radius * math.cos(a),
                                self.center.y + radius * math.sin(a))
            cm.refresh_cover()

    def _on_child_changed(self, child) -> None:
        for i, cm in enumerate(self.sector_comments):
            if cm is child:
                self._derive_sector_polar(i)
        if self._owner is not None:
            self._owner._on_child_changed(self)

    def iter_children(self):
        return self._all_comments()

    # -- motion / registration --------------------------------------------------------------

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.center = self.center.moved(dx, dy)
        for cm in self._all_comments():
            cm.translate_silent(dx, dy)

    def into_mover(self, mover, position: int) -> int:
        if not self.visible:
            return position
        pos = position
        for cm in self._all_comments():
            pos = cm.into_mover(mover, pos)
        mover.insert(pos, self)
        return pos + 1

    def set_movable(self, value: bool) -> None:
        self.movable = value
        for cm in self._all_comments():
            cm.movable = value

    # -- persistence -----------------------------------------------------------------------

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self._movable,
                "center": [float(self.center.x), float(self.center.y)],
                "r_inner": float(self.r_inner), "r_outer": float(self.r_outer),
                "boundaries": [float(b) for b in self.boundaries],
                "rotation": float(self.rotation_angle),
                "resizable": self.resizable,
                "value_total": float(self.value_total),
                "colors": list(self.colors),
                "sector_comments": [cm.to_params() if cm else None
                                    for cm in self.sector_comments],
                "comments": [cm.to_params() for cm in self.comments]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        cx, cy = params.get("center", [self.center.x, self.center.y])
        self.center = Point2D(cx, cy)
        self.r_inner = float(params.get("r_inner", self.r_inner))
        self.r_outer = float(params.get("r_outer", self.r_outer))
        bounds = params.get("boundaries")
        if bounds is not None:
            if len(bounds) != len(self.boundaries):
                raise LoadError(f"{path}/boundaries: expected "
                                f"{len(self.boundaries)}, archive has {len(bounds)}")
            self.boundaries = [float(b) for b in bounds]
        self.rotation_angle = float(params.get("rotation", self.rotation_angle))
        self.resizable = bool(params.get("resizable", self.resizable))
        self.value_total = float(params.get("value_total", self.value_total))
        self.colors = list(params.get("colors", self.colors))
        for i, sub in enumerate(params.get("sector_comments", [])):
            cm = self.sector_comments[i] if i < len(self.sector_comments) else None
            if cm is not None and sub is not None:
                cm.apply_params(sub, f"{path}/sector_comments/{i}")
        archived = params.get("comments", [])
        if len(archived) != len(self.comments):
            raise LoadError(f"{path}/comments: expected {len(self.comments)}, "
                            f"archive has {len(archived)}")
        for i, (cm, sub) in enumerate(zip(self.comments, archived)):
            cm.apply_params(sub, f"{path}/comments/{i}")
        self._movable = bool(params.get("movable", self._movable))
        self.refresh_cover()


class PieChartPrim(RingPrim):
    """A ring with no hole; sector comments track their parent sectors."""

    kind = "pie_chart"

    def __init__(self, fid: int, center: Point2D, radius: float,
                 boundaries: Sequence[float], **kwargs) -> None:
        super().__init__(fid, center, 0.0, radius, boundaries, **kwargs)


# ---------------------------------------------------------------------------
# Track bar
# ---------------------------------------------------------------------------

class TrackBarH(Figure):
    """Graphical horizontal track bar: any value from a range.

    Moved by any inner point, resized by the left and right borders; comments
    move synchronously, and each one is individually moveable only if its pin
    says so (end-value comments are pinned to the bar ends).
    """

    kind = "trackbar"

    def __init__(self, fid: int, track: RectF, lo: float, hi: float,
                 value: float, comments: Sequence[Comment] = (),
                 pins: Sequence[str] = (), fill: str = "#c8c8c8",
                 parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        if track.width <= 0:
            raise ValueError("track must have positive width")
        if hi <= lo:
            raise ValueError("range must be increasing")
        self.track = track
        self.lo = float(lo)
        self.hi = float(hi)
        self.value = min(max(float(value), self.lo), self.hi)
        self.fill = fill
        self.comments = list(comments)
        self.pins = list(pins) if pins else ["free"] * len(self.comments)
        if len(self.pins) != len(self.comments):
            raise ValueError("one pin per comment")
        for cm, pin in zip(self.comments, self.pins):
            cm._owner = self
            cm.parent_id = self.fid
            if pin != "free":
                cm.movable = False
        for i in range(len(self.comments)):
            self._derive_offset(i)
        self._node_roles: list[str] = []
        self._init_cover()

    # -- value geometry ---------------------------------------------------------

    @property
    def fraction(self) -> float:
        return (self.value - self.lo) / (self.hi - self.lo)

    def thumb_center(self) -> Point2D:
        return Point2D(self.track.left + self.fraction * self.track.width,
                       self.track.top + self.track.height / 2.0)

    def value_at(self, p: Point2D) -> float:
        frac = (p.x - self.track.left) / self.track.width
        return self.lo + (self.hi - self.lo) * min(1.0, max(0.0, frac))

    def set_from_point(self, p: Point2D) -> float:
        new = self.value_at(p)
        if new != self.value:
            self.value = new
            self._after_mutation()
        return self.value

    def bounds(self) -> RectF:
        thumb_r = self._thumb_radius()
        pad = max(0.0, thumb_r - self.track.height / 2.0)
        return self.track.expanded(pad)

    def _thumb_radius(self) -> float:
        return max(5.0, self.track.height * 0.8)

    def _build_cover(self) -> Cover:
        tl, tr, br, bl = self.track.corners()
        specs = [
            (Circle(self.thumb_center(), self._thumb_radius()),
             MovementFreedom.WE, CursorHint.HAND, False),
            (Strip(tl, bl, PICK_SENSE), MovementFreedom.WE, CursorHint.SIZE_WE, False),
            (Strip(tr, br, PICK_SENSE), MovementFreedom.WE, CursorHint.SIZE_WE, False),
            (rect_polygon(self.track), MovementFreedom.ALL, CursorHint.SIZE_ALL, True),
        ]
        self._node_roles = ["thumb", "left", "right", "body"]
        return make_cover(*specs)

    # -- comments ------------------------------------------------------------------

    def _pin_point(self, pin: str) -> Point2D:
        cy = self.track.top + self.track.height / 2.0
        if pin == "start":
            return Point2D(self.track.left, cy)
        if pin == "end":
            return Point2D(self.track.right, cy)
        return self.track.center

    def _derive_offset(self, i: int) -> None:
        ref = self._pin_point(self.pins[i])
        cm = self.comments[i]
        cm.offset = (cm.anchor.x - ref.x, cm.anchor.y - ref.y)

    def _sync_comments(self) -> None:
        for i, cm in enumerate(self.comments):
            ref = self._pin_point(self.pins[i])
            ox, oy = cm.offset
            cm.anchor = Point2D(ref.x + ox, ref.y + oy)
            cm.refresh_cover()

    def _on_child_changed(self, child) -> None:
        for i, cm in enumerate(self.comments):
            if cm is child:
                self._derive_offset(i)
        if self._owner is not None:
            self._owner._on_child_changed(self)

    def iter_children(self):
        return iter(self.comments)

    # -- motion ----------------------------------------------------------------------

    def _translate_geometry(self, dx: float, dy: float) -> None:
        self.track = self.track.moved(dx, dy)
        for cm in self.comments:
            cm.translate_silent(dx, dy)

    def move_node(self, node_index, dx, dy, p, button) -> bool:
        role = self._node_roles[node_index]
        if role == "body":
            return self.move_by(dx, dy)
        if role == "thumb":
            old = self.value
            return self.set_from_point(p) != old
        left, right = self.track.left, self.track.right
        if role == "left":
            left = min(left + dx, right - MIN_TRACK_WIDTH)
        else:
            right = max(right + dx, left + MIN_TRACK_WIDTH)
        new = RectF(left, self.track.top, right - left, self.track.height)
        if new == self.track:
            return False
        self.track = new
        self._sync_comments()
        self._after_mutation()
        return True

    def into_mover(self, mover, position: int) -> int:
        if not self.visible:
            return position
        pos = position
        for cm in self.comments:
            pos = cm.into_mover(mover, pos)
        mover.insert(pos, self)
        return pos + 1

    def set_movable(self, value: bool) -> None:
        self.movable = value
        for cm, pin in zip(self.comments, self.pins):
            cm.movable = bool(value) and pin == "free"

    # -- persistence -----------------------------------------------------------------

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self._movable, "track": rect_to_list(self.track),
                "lo": float(self.lo), "hi": float(self.hi),
                "value": float(self.value), "fill": self.fill,
                "pins": list(self.pins),
                "comments": [cm.to_params() for cm in self.comments]}

    def apply_params(self, params: dict, path: str) -> None:
        _check_kind(self, params, path)
        self.visible = bool(params.get("visible", self.visible))
        self.track = rect_from_list(params.get("track", rect_to_list(self.track)))
        self.lo = float(params.get("lo", self.lo))
        self.hi = float(params.get("hi", self.hi))
        self.value = float(params.get("value", self.value))
        self.fill = params.get("fill", self.fill)
        archived = params.get("comments", [])
        if len(archived) != len(self.comments):
            raise LoadError(f"{path}/comments: expected {len(self.comments)}, "
                            f"archive has {len(archived)}")
        for i, (cm, sub) in enumerate(zip(self.comments, archived)):
            cm.apply_params(sub, f"{path}/comments/{i}")
        self._movable = bool(params.get("movable", self._movable))
        self.refresh_cover()
