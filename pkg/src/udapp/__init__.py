"""udapp: a deterministic direct-manipulation engine.

Arbitrary 2-D scene objects become moveable, resizable and rotatable through
exactly three pointer events (down, move, up) supervised by a mover.  Scenes
replay from recorded scripts and serialize to canonical, hashable archives.
"""

from .cover import (Circle, Cover, CoverNode, CursorHint, MovementFreedom,
                    PICK_SENSE, Polygon, Strip, frame_only_cover, hit_test,
                    standard_resize_cover)
from .figures import Figure, FigureId, MIN_FIGURE_SIZE, RectFigure, RotationState
from .geometry import Point2D, RectF, normalize_angle, polar_angle, rect_union, rotate_about
from .groups import (Comment, CommentedControl, ControlProxy, ElasticGroup,
                     LinkedRectangles, PropItem, ProportionalGroup,
                     RectSelectGroup, Resizing, Side, VisualParams,
                     frame_predefined_group, rubber_band_select)
from .mover import Button, DragState, Mover
from .persistence import (SCHEMA, LoadError, ParamStore, SceneArchive,
                          load_scene, save_scene)
from .primitives import (BarChartPrim, Direction, MIN_SECTOR_ANGLE,
                         PieChartPrim, RingPrim, StripBar, TrackBarH)
from .session import (CommandError, EventKind, IllegalEvent, InteractionScript,
                      PointerEvent, Scene, SceneSnapshot, command, pointer)

__version__ = "0.1.0"
