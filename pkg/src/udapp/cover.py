"""Pick geometry: nodes, covers, per-node movement freedom and hit testing.

A cover is the invisible set of pick regions attached to a figure.  Three
shapes are enough for anything: circles, strips (thickened segments) and
convex polygons.  Nodes are ordered; the first hit wins, so small or specific
nodes are listed before large ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Union

from .geometry import (Point2D, RectF, point_in_circle, point_in_strip,
                       _contains_ccw, validate_convex_polygon)

# Default pick sensitivity: a comfortable grab target, in scene units.
PICK_SENSE = 3.0


class MovementFreedom(Enum):
    ALL = "all"                  # move / resize in any direction
    WE = "we"                    # horizontal only
    NS = "ns"                    # vertical only
    FREEZE = "freeze"            # recognized by the mover, refuses motion
    TRANSPARENT = "transparent"  # never caught, picking passes through


class CursorHint(Enum):
    DEFAULT = "default"
    SIZE_NS = "size-ns"
    SIZE_WE = "size-we"
    SIZE_ALL = "size-all"
    HAND = "hand"


@dataclass(frozen=True)
class Circle:
    center: Point2D
    radius: float

    kind = "circle"

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise ValueError("circle node needs a positive radius")

    def contains(self, p: Point2D) -> bool:
        return point_in_circle(self.center, self.radius, p)

    def moved(self, dx: float, dy: float) -> "Circle":
        return Circle(self.center.moved(dx, dy), self.radius)


@dataclass(frozen=True)
class Strip:
    a: Point2D
    b: Point2D
    halfwidth: float

    kind = "strip"

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("strip node needs distinct endpoints")
        if not self.halfwidth > 0:
            raise ValueError("strip node needs a positive halfwidth")

    def contains(self, p: Point2D) -> bool:
        return point_in_strip(self.a, self.b, self.halfwidth, p)

    def moved(self, dx: float, dy: float) -> "Strip":
        return Strip(self.a.moved(dx, dy), self.b.moved(dx, dy), self.halfwidth)


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Point2D, ...]

    kind = "polygon"

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", validate_convex_polygon(self.vertices))

    def contains(self, p: Point2D) -> bool:
        return _contains_ccw(self.vertices, p)

    def moved(self, dx: float, dy: float) -> "Polygon":
        return Polygon(tuple(v.moved(dx, dy) for v in self.vertices))


NodeShape = Union[Circle, Strip, Polygon]


def rect_polygon(r: RectF) -> Polygon:
    return Polygon(r.corners())


@dataclass(frozen=True)
class CoverNode:
    """One pick region: shape + movement policy + UI hints.

    moves_whole marks body nodes: catching one drags the whole figure instead
    of reshaping it through move_node.
    """

    index: int
    shape: NodeShape
    freedom: MovementFreedom = MovementFreedom.ALL
    cursor: CursorHint = CursorHint.DEFAULT
    moves_whole: bool = False


@dataclass(frozen=True)
class Cover:
    nodes: tuple[CoverNode, ...]

    def __post_init__(self) -> None:
        if not self.nodes:
            raise ValueError("cover needs at least one node")
        for i, node in enumerate(self.nodes):
            if node.index != i:
                raise ValueError(f"node index {node.index} at position {i}")

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, i: int) -> CoverNode:
        return self.nodes[i]

    def with_all_frozen(self) -> "Cover":
        """Same shapes, every catchable node frozen (immovable figure)."""
        return Cover(tuple(
            n if n.freedom is MovementFreedom.TRANSPARENT
            else replace(n, freedom=MovementFreedom.FREEZE)
            for n in self.nodes))


def hit_test(cover: Cover, p: Point2D) -> Optional[int]:
    """Index of the first non-transparent node containing p, if any."""
    for node in cover.nodes:
        if node.freedom is MovementFreedom.TRANSPARENT:
            continue
        if node.shape.contains(p):
            return node.index
    return None


def make_cover(*specs: tuple) -> Cover:
    """Build a cover from (shape, freedom, cursor, moves_whole) tuples,
    assigning indices in order."""
    nodes = []
    for i, spec in enumerate(specs):
        shape, freedom, cursor, moves_whole = spec
        nodes.append(CoverNode(i, shape, freedom, cursor, moves_whole))
    return Cover(tuple(nodes))


def _border_nodes(r: RectF, sense: float) -> list[tuple]:
    tl, tr, br, bl = r.corners()
    return [
        # corners: 0 TL, 1 TR, 2 BR, 3 BL
        (Circle(tl, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, False),
        (Circle(tr, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, False),
        (Circle(br, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, False),
        (Circle(bl, sense), MovementFreedom.ALL, CursorHint.SIZE_ALL, False),
        # edges: 4 left, 5 top, 6 right, 7 bottom
        (Strip(tl, bl, sense), MovementFreedom.WE, CursorHint.SIZE_WE, False),
        (Strip(tl, tr, sense), MovementFreedom.NS, CursorHint.SIZE_NS, False),
        (Strip(tr, br, sense), MovementFreedom.WE, CursorHint.SIZE_WE, False),
        (Strip(bl, br, sense), MovementFreedom.NS, CursorHint.SIZE_NS, False),
    ]


def standard_resize_cover(r: RectF, sense: float = PICK_SENSE) -> Cover:
    """Graphical-object cover: moved by any inner point, resized by borders.

    4 corner circles, then 4 edge strips, then one body polygon over r.  The
    border nodes precede the body, so within sense of the outline they win
    the first-match scan; the effective body area is whatever remains, which
    shrinks to nothing for rectangles under 2*sense per side.
    """
    if r.width <= 0 or r.height <= 0:
        raise ValueError("cover rectangle must have positive extent")
    if sense <= 0:
        raise ValueError("pick sense must be positive")
    specs = _border_nodes(r, sense)
    specs.append((rect_polygon(r), MovementFreedom.ALL, CursorHint.SIZE_ALL, True))
    return make_cover(*specs)


def frame_only_cover(r: RectF, sense: float = PICK_SENSE) -> Cover:
    """Control cover: moved and resized by the border only.

    Identical to standard_resize_cover except the body node is transparent,
    so interior picks pass through to whatever the frame wraps.
    """
    if r.width <= 0 or r.height <= 0:
        raise ValueError("cover rectangle must have positive extent")
    if sense <= 0:
        raise ValueError("pick sense must be positive")
    specs = _border_nodes(r, sense)
    specs.append((rect_polygon(r), MovementFreedom.TRANSPARENT, CursorHint.DEFAULT, False))
    return make_cover(*specs)
