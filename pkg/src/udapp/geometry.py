"""Exact 2-D primitives: points, rectangles, angle helpers and containment tests.

Everything here is a pure value-level function over double-precision scalars.
Angles are plain radians, counter-clockwise positive with the y axis pointing
up mathematically; normalization to [0, 2*pi) is applied only where two angles
are compared, never to stored state.  All containment boundaries are
inclusive: picking must favor catchability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

TWO_PI = 2.0 * math.pi


def require_finite(*values: float) -> None:
    """Reject NaN / infinity before they can poison scene state."""
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite scalar: {v!r}")


@dataclass(frozen=True)
class Point2D:
    """A scene point; 1 unit = 1 pixel at zoom 1."""

    x: float
    y: float

    def __post_init__(self) -> None:
        require_finite(self.x, self.y)

    def moved(self, dx: float, dy: float) -> "Point2D":
        return Point2D(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class RectF:
    """Axis-aligned rectangle with non-negative extent."""

    left: float
    top: float
    width: float
    height: float

    def __post_init__(self) -> None:
        require_finite(self.left, self.top, self.width, self.height)
        if self.width < 0 or self.height < 0:
            raise ValueError(f"negative rectangle extent: {self.width}x{self.height}")

    @property
    def right(self) -> float:
        return self.left + self.width

    @property
    def bottom(self) -> float:
        return self.top + self.height

    @property
    def center(self) -> Point2D:
        return Point2D(self.left + self.width / 2.0, self.top + self.height / 2.0)

    @property
    def area(self) -> float:
        return self.width * self.height

    def moved(self, dx: float, dy: float) -> "RectF":
        return RectF(self.left + dx, self.top + dy, self.width, self.height)

    def expanded(self, pad: float) -> "RectF":
        """Grow (or shrink, pad < 0) by the same margin on every side."""
        return RectF(self.left - pad, self.top - pad,
                     max(0.0, self.width + 2.0 * pad), max(0.0, self.height + 2.0 * pad))

    def contains_point(self, p: Point2D) -> bool:
        return self.left <= p.x <= self.right and self.top <= p.y <= self.bottom

    def contains_rect(self, other: "RectF") -> bool:
        return (self.left <= other.left and other.right <= self.right
                and self.top <= other.top and other.bottom <= self.bottom)

    def intersection_area(self, other: "RectF") -> float:
        w = min(self.right, other.right) - max(self.left, other.left)
        h = min(self.bottom, other.bottom) - max(self.top, other.top)
        if w <= 0 or h <= 0:
            return 0.0
        return w * h

    def corners(self) -> tuple[Point2D, Point2D, Point2D, Point2D]:
        """Corner points in order TL, TR, BR, BL."""
        return (Point2D(self.left, self.top), Point2D(self.right, self.top),
                Point2D(self.right, self.bottom), Point2D(self.left, self.bottom))


# ---------------------------------------------------------------------------
# Angles
# ---------------------------------------------------------------------------

def normalize_angle(a: float) -> float:
    """Map an angle onto [0, 2*pi).  Used at comparison sites only."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    return a if a < TWO_PI else 0.0


def polar_angle(p: Point2D, center: Point2D) -> float:
    """Polar angle of p about center, in (-pi, pi]."""
    return math.atan2(p.y - center.y, p.x - center.x)


def rotate_about(p: Point2D, center: Point2D, theta: float) -> Point2D:
    """Rotate p about center by theta, counter-clockwise positive."""
    require_finite(theta)
    c, s = math.cos(theta), math.sin(theta)
    dx, dy = p.x - center.x, p.y - center.y
    return Point2D(center.x + c * dx - s * dy, center.y + s * dx + c * dy)


def dist(a: Point2D, b: Point2D) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


# ---------------------------------------------------------------------------
# Containment tests (boundary inclusive)
# ---------------------------------------------------------------------------

def point_in_circle(center: Point2D, radius: float, p: Point2D) -> bool:
    """True iff p lies within (or on) the circle."""
    require_finite(radius)
    if radius <= 0:
        raise ValueError("circle radius must be positive")
    dx, dy = p.x - center.x, p.y - center.y
    return dx * dx + dy * dy <= radius * radius


def _dist_sq_point_segment(a: Point2D, b: Point2D, p: Point2D) -> float:
    """Squared distance from p to segment ab."""
    abx, aby = b.x - a.x, b.y - a.y
    apx, apy = p.x - a.x, p.y - a.y
    denom = abx * abx + aby * aby
    t = (apx * abx + apy * aby) / denom
    t = min(1.0, max(0.0, t))
    cx, cy = a.x + t * abx - p.x, a.y + t * aby - p.y
    return cx * cx + cy * cy


def point_in_strip(a: Point2D, b: Point2D, halfwidth: float, p: Point2D) -> bool:
    """True iff p is within halfwidth of segment ab.

    The strip shape is the rectangle along ab plus semicircular end caps of
    radius halfwidth at a and b, which is exactly the set of points at
    distance <= halfwidth from the segment.
    """
    require_finite(halfwidth)
    if a == b:
        raise ValueError("degenerate strip: endpoints coincide")
    if halfwidth <= 0:
        raise ValueError("strip halfwidth must be positive")
    return _dist_sq_point_segment(a, b, p) <= halfwidth * halfwidth


def validate_convex_polygon(vertices: Sequence[Point2D]) -> tuple[Point2D, ...]:
    """Check a vertex ring for convexity and consistent winding.

    Returns the vertices as a tuple, re-wound counter-clockwise so that
    containment can assume one orientation.  Raises ValueError for fewer than
    3 vertices, repeated neighbours, zero area, or sign-flipping turns
    (non-convex / self-intersecting input).
    """
    verts = tuple(vertices)
    if len(verts) < 3:
        raise ValueError("polygon needs at least 3 vertices")
    n = len(verts)
    for i in range(n):
        if verts[i] == verts[(i + 1) % n]:
            raise ValueError("polygon has repeated consecutive vertices")
    area2 = 0.0
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        area2 += a.x * b.y - b.x * a.y
    if area2 == 0.0:
        raise ValueError("polygon has zero area")
    sign = 1.0 if area2 > 0 else -1.0
    for i in range(n):
        a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        if cross * sign < 0.0:
            raise ValueError("polygon is not convex")
    return verts if sign > 0 else tuple(reversed(verts))


def point_in_convex_polygon(vertices: Sequence[Point2D], p: Point2D) -> bool:
    """Same-side test against every edge of a convex ring, boundary inclusive.

    vertices must already satisfy validate_convex_polygon (callers that build
    polygons once should validate at construction, not per query).
    """
    verts = validate_convex_polygon(vertices)
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if cross < 0.0:
            return False
    return True


def _contains_ccw(verts: Sequence[Point2D], p: Point2D) -> bool:
    """Containment for a ring already validated and wound counter-clockwise."""
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) < 0.0:
            return False
    return True


def rect_union(rects: Iterable[RectF]) -> RectF:
    """Smallest axis-aligned rectangle containing every input."""
    it = iter(rects)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("rect_union of an empty sequence") from None
    left, top, right, bottom = first.left, first.top, first.right, first.bottom
    for r in it:
        left = min(left, r.left)
        top = min(top, r.top)
        right = max(right, r.right)
        bottom = max(bottom, r.bottom)
    return RectF(left, top, right - left, bottom - top)
