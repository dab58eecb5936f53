"""The universal object contract: identity, covers, whole-move, node-move,
rotation bookkeeping.

Every moveable thing derives from Figure.  Mutations always end in
_after_mutation(), which rebuilds the cover and notifies the owner chain so
composite parents (commented controls, elastic groups, charts) can keep their
derived geometry fresh.  The cover therefore always corresponds with the
current geometry and movability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, TYPE_CHECKING

from .cover import (Cover, CoverNode, CursorHint, MovementFreedom, PICK_SENSE,
                    hit_test, standard_resize_cover)
from .geometry import Point2D, RectF, normalize_angle, polar_angle

if TYPE_CHECKING:
    from .mover import Mover

# Resizes never shrink a figure below this, so nothing can disappear.
MIN_FIGURE_SIZE = 4.0


class FigureId(NamedTuple):
    id: int
    parent_id: Optional[int] = None


@dataclass
class RotationState:
    compensation: float = 0.0
    active: bool = False


class Figure:
    """Base contract for everything the mover can supervise."""

    kind = "figure"

    def __init__(self, fid: int, parent_id: int | None = None) -> None:
        self.fid = fid
        self.parent_id = parent_id
        self.visible = True
        self._movable = True
        self._owner = None  # composite parent, for geometry-change notifications
        self.rotation = RotationState()
        self.cover: Cover = None  # type: ignore[assignment]  # built by _init_cover

    # Subclasses call once their geometry fields exist.
    def _init_cover(self) -> None:
        self.cover = self.define_cover()

    @property
    def identity(self) -> FigureId:
        return FigureId(self.fid, self.parent_id)

    # -- movability ---------------------------------------------------------

    @property
    def movable(self) -> bool:
        return self._movable

    @movable.setter
    def movable(self, value: bool) -> None:
        self._movable = bool(value)
        self.refresh_cover()

    def set_movable(self, value: bool) -> None:
        """Uniform movability entry point; composites override to recurse."""
        self.movable = value

    @property
    def rotatable(self) -> bool:
        return False

    # -- cover --------------------------------------------------------------

    def _build_cover(self) -> Cover:
        raise NotImplementedError

    def define_cover(self) -> Cover:
        """Cover for the current geometry and movability."""
        built = self._build_cover()
        return built if self._movable else built.with_all_frozen()

    def refresh_cover(self) -> None:
        self.cover = self.define_cover()

    def hit(self, p: Point2D) -> Optional[int]:
        return hit_test(self.cover, p)

    # -- geometry -----------------------------------------------------------

    def bounds(self) -> RectF:
        raise NotImplementedError

    def _translate_geometry(self, dx: float, dy: float) -> None:
        raise NotImplementedError

    def translate_silent(self, dx: float, dy: float) -> None:
        """Translate without notifying owners; used for synchronous group
        moves where the parent drives the change."""
        self._translate_geometry(dx, dy)
        self.refresh_cover()

    def move_by(self, dx: float, dy: float) -> bool:
        """Translate every defining point by exactly (dx, dy)."""
        if dx == 0 and dy == 0:
            return False
        self._translate_geometry(dx, dy)
        self._after_mutation()
        return True

    def move_node(self, node_index: int, dx: float, dy: float,
                  p: Point2D, button) -> bool:
        """Figure-specific reshape through one cover node.

        The default covers body nodes only; reshaping figures override.
        Constraint enforcement (minimum sizes, angle floors) lives in the
        overrides: motion beyond a constraint clamps to the nearest legal
        geometry.
        """
        node = self.cover[node_index]
        if node.moves_whole:
            return self.move_by(dx, dy)
        return False

    # -- drag hooks ---------------------------------------------------------

    def on_grab(self, node_index: int, p: Point2D, button) -> None:
        """Called by the mover right after a successful catch."""

    def on_release(self, mover: "Mover") -> None:
        """Called by the mover when this figure's drag ends; owners get a
        chance to run post-release adjustments (enforced relocation)."""
        owner = self._owner
        if owner is not None and hasattr(owner, "_on_child_released"):
            owner._on_child_released(self, mover)

    # -- rotation -----------------------------------------------------------

    def rotation_center(self) -> Point2D:
        return self.bounds().center

    def _get_angle(self) -> float:
        return 0.0

    def _set_angle(self, value: float) -> None:
        raise NotImplementedError

    def start_rotation(self, p: Point2D) -> None:
        if not self.rotatable:
            return
        self.rotation.compensation = self._get_angle() - polar_angle(p, self.rotation_center())
        self.rotation.active = True

    def rotate_to(self, p: Point2D) -> bool:
        if not self.rotation.active:
            return False
        center = self.rotation_center()
        if p.x == center.x and p.y == center.y:
            return False
        new_angle = polar_angle(p, center) + self.rotation.compensation
        if new_angle == self._get_angle():
            return False
        self._set_angle(new_angle)
        self._after_mutation()
        return True

    def stop_rotation(self) -> None:
        self.rotation.active = False

    # -- change propagation --------------------------------------------------

    def _after_mutation(self) -> None:
        self.refresh_cover()
        if self._owner is not None:
            self._owner._on_child_changed(self)

    def iter_children(self):
        """Constituent figures of a composite; leaves yield nothing."""
        return iter(())

    # -- registration ---------------------------------------------------------

    def into_mover(self, mover: "Mover", position: int) -> int:
        """Register with the mover at the given queue position; returns the
        position just below the inserted block."""
        if not self.visible:
            return position
        mover.insert(position, self)
        return position + 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<{type(self).__name__} id={self.fid}>"


def resize_rect_by_node(rect: RectF, node_index: int, dx: float, dy: float,
                        min_w: float = MIN_FIGURE_SIZE,
                        min_h: float = MIN_FIGURE_SIZE) -> RectF:
    """Apply a border-node drag to a rectangle, clamped to a minimum size.

    Node numbering follows standard_resize_cover: 0..3 corners TL TR BR BL,
    4..7 edges left top right bottom.
    """
    left, top = rect.left, rect.top
    right, bottom = rect.right, rect.bottom
    moves_left = node_index in (0, 3, 4)
    moves_right = node_index in (1, 2, 6)
    moves_top = node_index in (0, 1, 5)
    moves_bottom = node_index in (2, 3, 7)
    if moves_left:
        left = min(left + dx, right - min_w)
    if moves_right:
        right = max(right + dx, left + min_w)
    if moves_top:
        top = min(top + dy, bottom - min_h)
    if moves_bottom:
        bottom = max(bottom + dy, top + min_h)
    return RectF(left, top, right - left, bottom - top)


class RectFigure(Figure):
    """Plain rectangular graphical object: moved by any inner point, resized
    by its border, like a building sketch in the painting sample."""

    kind = "rect"

    def __init__(self, fid: int, rect: RectF, label: str = "",
                 fill: str = "#d0d0d0", parent_id: int | None = None) -> None:
        super().__init__(fid, parent_id)
        self.rect = rect
        self.label = label
        self.fill = fill
        self._init_cover()

    def bounds(self) -> RectF:
        return self.rect

    def _build_cover(self) -> Cover:
        return standard_resize_cover(self.rect)

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

    def to_params(self) -> dict:
        return {"kind": self.kind, "id": self.fid, "visible": self.visible,
                "movable": self.movable,
                "rect": [float(self.rect.left), float(self.rect.top),
                         float(self.rect.width), float(self.rect.height)],
                "label": self.label, "fill": self.fill}

    def apply_params(self, params: dict, path: str) -> None:
        archived = params.get("kind", self.kind)
        if archived != self.kind:
            from .persistence import LoadError
            raise LoadError(f"{path}: expected kind {self.kind!r}, "
                            f"archive has {archived!r}")
        self.visible = bool(params.get("visible", self.visible))
        rect = params.get("rect")
        if rect is not None:
            left, top, width, height = rect
            self.rect = RectF(float(left), float(top), float(width), float(height))
        self.label = params.get("label", self.label)
        self.fill = params.get("fill", self.fill)
        self.movable = bool(params.get("movable", self.movable))
