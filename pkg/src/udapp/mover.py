"""The supervisor: an ordered z-queue of figures plus the active drag.

Three calls drive everything: catch on pointer down, move on pointer move,
release on pointer up.  Index 0 is topmost; catch scans front to back and the
first figure whose cover hits wins.  Frozen nodes are caught (context menus
need a target) but refuse motion; transparent nodes are skipped entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .cover import MovementFreedom
from .figures import Figure
from .geometry import Point2D


class Button(Enum):
    LEFT = "L"
    RIGHT = "R"


class DragMode(Enum):
    FROZEN = "frozen"
    MOVE = "move"
    RESIZE = "resize"
    ROTATE = "rotate"


@dataclass
class DragState:
    figure: Figure
    node_index: int
    node_shape_kind: str  # shape kind at catch time: circle | strip | polygon
    freedom: MovementFreedom  # recorded at catch; covers may rebuild mid-drag
    button: Button
    last_point: Point2D
    mode: DragMode


class Mover:
    def __init__(self, move_button: Button = Button.LEFT,
                 rotate_button: Button = Button.RIGHT) -> None:
        self.move_button = move_button
        self.rotate_button = rotate_button
        self._queue: list[Figure] = []
        self.drag: Optional[DragState] = None

    # -- queue management ----------------------------------------------------

    def __len__(self) -> int:
        return len(self._queue)

    def __getitem__(self, i: int) -> Figure:
        return self._queue[i]

    def __iter__(self):
        return iter(self._queue)

    def index_of(self, fid: int) -> Optional[int]:
        for i, fig in enumerate(self._queue):
            if fig.fid == fid:
                return i
        return None

    def insert(self, position: int, figure: Figure) -> None:
        if self.index_of(figure.fid) is not None:
            raise ValueError(f"figure {figure.fid} already registered")
        self._queue.insert(position, figure)

    def add(self, figure: Figure) -> None:
        """Append at the bottom of the z-order."""
        self.insert(len(self._queue), figure)

    def remove(self, figure_or_id) -> None:
        fid = figure_or_id.fid if isinstance(figure_or_id, Figure) else figure_or_id
        idx = self.index_of(fid)
        if idx is None:
            raise ValueError(f"figure {fid} not registered")
        if self.drag is not None and self.drag.figure.fid == fid:
            self.drag = None
        del self._queue[idx]

    def clear(self) -> None:
        self._queue.clear()
        self.drag = None

    # -- the three-call protocol ----------------------------------------------

    def catch(self, p: Point2D, button: Button) -> bool:
        """Scan the queue front to back; record a drag on the first hit."""
        if self.drag is not None:
            return False
        for figure in self._queue:
            node_index = figure.hit(p)
            if node_index is None:
                continue
            node = figure.cover[node_index]
            if node.freedom is MovementFreedom.FREEZE:
                mode = DragMode.FROZEN
            elif button is self.rotate_button:
                if figure.rotatable:
                    mode = DragMode.ROTATE
                    figure.start_rotation(p)
                else:
                    mode = DragMode.FROZEN
            elif node.moves_whole:
                mode = DragMode.MOVE
            else:
                mode = DragMode.RESIZE
            self.drag = DragState(figure, node_index, node.shape.kind,
                                  node.freedom, button, p, mode)
            figure.on_grab(node_index, p, button)
            return True
        return False

    def move(self, p: Point2D) -> bool:
        """Forward pointer motion to the caught figure; True iff it changed."""
        drag = self.drag
        if drag is None:
            return False
        dx, dy = p.x - drag.last_point.x, p.y - drag.last_point.y
        drag.last_point = p
        if drag.mode is DragMode.FROZEN:
            return False
        if drag.mode is DragMode.ROTATE:
            return drag.figure.rotate_to(p)
        freedom = drag.freedom
        if freedom is MovementFreedom.WE:
            dy = 0.0
        elif freedom is MovementFreedom.NS:
            dx = 0.0
        if drag.mode is DragMode.MOVE:
            return drag.figure.move_by(dx, dy)
        return drag.figure.move_node(drag.node_index, dx, dy, p, drag.button)

    def release(self) -> Optional[int]:
        """Clear the drag and fire post-release adjustments; returns the
        released figure's id."""
        drag = self.drag
        if drag is None:
            return None
        self.drag = None
        drag.figure.stop_rotation()
        drag.figure.on_release(self)
        return drag.figure.fid

    # -- drag accessors --------------------------------------------------------

    @property
    def caught_source(self) -> Optional[Figure]:
        return self.drag.figure if self.drag else None

    @property
    def caught_node(self) -> Optional[int]:
        return self.drag.node_index if self.drag else None

    @property
    def caught_node_shape(self) -> Optional[str]:
        return self.drag.node_shape_kind if self.drag else None
