"""Scene container: pointer events, background dragging, deterministic
replay and canonical snapshots.

Every mutation of a scene flows through {down, move, up} plus explicit
command events, so a recorded script replays to a byte-identical snapshot no
matter when or where it runs.  Events carry screen coordinates; the scene
subtracts its view offset (the "form location") before hit testing, and
background drags change only that offset.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional

from .figures import Figure
from .geometry import Point2D, RectF
from .groups import (CommentedControl, Comment, ElasticGroup, RectSelectGroup,
                     frame_predefined_group, rubber_band_select,
                     set_element_visible)
from .mover import Button, Mover
from .persistence import (SCHEMA, LoadError, SceneArchive, canonical_bytes,
                          load_scene, save_scene)


class EventKind(Enum):
    DOWN = "down"
    MOVE = "move"
    UP = "up"


class IllegalEvent(ValueError):
    """Event violates the down/move/up alternation; dropped on replay."""


class CommandError(ValueError):
    """Command event could not be applied; dropped on replay."""


@dataclass(frozen=True)
class PointerEvent:
    kind: EventKind
    point: Point2D
    button: Button = Button.LEFT

    def to_json(self) -> dict:
        return {"k": self.kind.value, "x": self.point.x, "y": self.point.y,
                "b": self.button.value}


def pointer(kind: str, x: float, y: float, button: str = "L") -> dict:
    """Wire-form pointer event, one line of a script file."""
    return {"k": kind, "x": x, "y": y, "b": button}


def command(cmd: str, **args) -> dict:
    """Wire-form command event."""
    return {"k": "cmd", "name": cmd, "args": args}


@dataclass
class InteractionScript:
    """A replayable session: ordered pointer events plus command events."""

    events: list[dict] = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(ev, sort_keys=True) + "\n" for ev in self.events)

    @classmethod
    def from_jsonl(cls, text: str) -> "InteractionScript":
        events = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                ev = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"script line {lineno}: {exc}") from None
            if not isinstance(ev, dict) or "k" not in ev:
                raise ValueError(f"script line {lineno}: not an event object")
            events.append(ev)
        return cls(events)

    @classmethod
    def read(cls, path) -> "InteractionScript":
        return cls.from_jsonl(Path(path).read_text("utf-8"))

    def write(self, path) -> None:
        Path(path).write_text(self.to_jsonl(), "utf-8")

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)


@dataclass(frozen=True)
class SceneSnapshot:
    """Canonical serialized scene state plus its content hash."""

    doc: dict
    data: bytes
    hash: str


# Commands whose effect changes the set of registered figures.
_RENEW_COMMANDS = {"set-visibility", "rubber-band", "frame-predefined",
                   "dissolve-group", "reset-default", "load"}


class Scene:
    """One logical event thread's worth of figures, mover and view state."""

    def __init__(self, name: str = "scene", width: float = 800.0,
                 height: float = 600.0, background_drag: bool = False,
                 move_button: Button = Button.LEFT,
                 rotate_button: Button = Button.RIGHT) -> None:
        self.name = name
        self.window_size = (float(width), float(height))
        self.view_offset = (0.0, 0.0)
        self.background_drag_enabled = background_drag
        self.mover = Mover(move_button, rotate_button)
        self.top_level: list = []
        self.figures: dict[int, object] = {}
        self.predefined_groups: dict[str, list[int]] = {}
        self._counter = 0
        self._pending_down: set[Button] = set()
        self._bg_shift: Optional[tuple[float, float]] = None
        self._initial_doc: Optional[dict] = None
        self._saved: Optional[SceneArchive] = None

    # -- construction -----------------------------------------------------------

    def new_id(self) -> int:
        self._counter += 1
        return self._counter

    def _index_tree(self, entry) -> None:
        present = self.figures.get(entry.fid)
        if present is not None and present is not entry:
            raise ValueError(f"figure id {entry.fid} already used in this scene")
        self.figures[entry.fid] = entry
        for child in getattr(entry, "iter_children", lambda: [])():
            self._index_tree(child)

    def add_top(self, entry, front: bool = False) -> None:
        """Register a top-level figure (or composite) with the scene."""
        if front:
            self.top_level.insert(0, entry)
        else:
            self.top_level.append(entry)
        self._index_tree(entry)
        self._counter = max(self._counter, *(fid for fid in self.figures))
        self.renew_mover()

    def renew_mover(self) -> None:
        """Rebuild the whole queue from the top-level entries; guarantees
        correct order no matter how the visible set changed."""
        self.mover.clear()
        pos = 0
        for entry in self.top_level:
            pos = entry.into_mover(self.mover, pos)

    def seal(self) -> None:
        """Freeze the construction-time state as the default view."""
        for entry in self.top_level:
            self._record_defaults(entry)
        self._initial_doc = self.to_doc()

    def _record_defaults(self, entry) -> None:
        if isinstance(entry, ElasticGroup):
            entry.record_default()
        for child in getattr(entry, "iter_children", lambda: [])():
            self._record_defaults(child)

    # -- events --------------------------------------------------------------------

    def _local(self, p: Point2D) -> Point2D:
        return Point2D(p.x - self.view_offset[0], p.y - self.view_offset[1])

    def apply_event(self, ev: PointerEvent) -> bool:
        if ev.kind is EventKind.DOWN:
            if self._pending_down:
                raise IllegalEvent("down while a down is pending")
            self._pending_down.add(ev.button)
            caught = self.mover.catch(self._local(ev.point), ev.button)
            if (not caught and ev.button is self.mover.move_button
                    and self.background_drag_enabled):
                self._bg_shift = (ev.point.x - self.view_offset[0],
                                  ev.point.y - self.view_offset[1])
            return False
        if ev.kind is EventKind.MOVE:
            if self.mover.drag is not None:
                return self.mover.move(self._local(ev.point))
            if self._bg_shift is not None:
                new_offset = (ev.point.x - self._bg_shift[0],
                              ev.point.y - self._bg_shift[1])
                if new_offset == self.view_offset:
                    return False
                self.view_offset = new_offset
                return True
            return False
        # UP
        self._pending_down.discard(ev.button)
        had_drag = self.mover.drag is not None or self._bg_shift is not None
        self.mover.release()
        self._bg_shift = None
        return had_drag

    # -- commands ---------------------------------------------------------------------

    def _target(self, args: dict):
        try:
            return self.figures[int(args["id"])]
        except (KeyError, TypeError, ValueError):
            raise CommandError(f"unknown figure id {args.get('id')!r}") from None

    def apply_command(self, name: str, args: dict) -> bool:
        changed = self._dispatch_command(name, args)
        if name in _RENEW_COMMANDS:
            self.renew_mover()
        return changed

    def _dispatch_command(self, name: str, args: dict) -> bool:
        if name == "set-visibility":
            target = self._target(args)
            if isinstance(getattr(target, "_owner", None), CommentedControl):
                target = target._owner
            set_element_visible(target, bool(args["visible"]))
            return True
        if name == "set-movable":
            target = self._target(args)
            target.set_movable(bool(args["movable"]))
            return True
        if name == "set-elements-movable":
            target = self._target(args)
            if not isinstance(target, ElasticGroup):
                raise CommandError("set-elements-movable targets a group")
            target.set_elements_movable(bool(args["movable"]))
            return True
        if name == "set-font-size":
            target = self._target(args)
            if not hasattr(target, "set_font_size"):
                raise CommandError(f"{target.kind} has no font")
            target.set_font_size(float(args["size"]))
            owner = getattr(target, "_owner", None)
            if isinstance(target, Comment) and isinstance(owner, CommentedControl):
                owner.comment_enforced_relocation(self.mover)
            return True
        if name == "set-visual":
            target = self._target(args)
            visual = getattr(target, "visual", None)
            changed = False
            for key, value in args.items():
                if key == "id":
                    continue
                if visual is not None and hasattr(visual, key):
                    setattr(visual, key, value)
                    changed = True
                elif key == "fill" and hasattr(target, "fill"):
                    target.fill = value
                    changed = True
            if not changed:
                raise CommandError("no applicable visual field")
            return True
        if name == "set-title-position":
            target = self._target(args)
            if not isinstance(target, ElasticGroup):
                raise CommandError("set-title-position targets a group")
            return target.set_title_position(float(args["t"]))
        if name == "rubber-band":
            left, top, w, h = args["rect"]
            group = rubber_band_select(self, RectF(left, top, w, h))
            return group is not None
        if name == "frame-predefined":
            group = frame_predefined_group(self, args["name"])
            if group is None:
                raise CommandError(f"no predefined group {args.get('name')!r}")
            return True
        if name == "dissolve-group":
            target = self._target(args)
            if not isinstance(target, RectSelectGroup):
                raise CommandError("dissolve-group targets a selection group")
            self.top_level.remove(target)
            del self.figures[target.fid]
            # A capturing group keeps its union: flatten the dissolved
            # group's members into it.
            for other in self.top_level:
                if isinstance(other, RectSelectGroup) and target in other.members:
                    flattened = []
                    for m in other.members:
                        if m is target:
                            flattened.extend(x for x in target.members
                                             if x not in flattened)
                        elif m not in flattened:
                            flattened.append(m)
                    other.members = flattened
                    other.refresh_cover()
            return True
        if name == "reset-default":
            target = self._target(args)
            if not isinstance(target, ElasticGroup):
                raise CommandError("reset-default targets a group")
            return target.reset_default()
        if name == "set-window":
            self.window_size = (float(args["width"]), float(args["height"]))
            return True
        if name == "save":
            self._saved = save_scene(self)
            if "path" in args:
                self._saved.write(args["path"])
            return False
        if name == "load":
            if "path" in args:
                archive = SceneArchive.read(args["path"])
            elif self._saved is not None:
                archive = self._saved
            elif self._initial_doc is not None:
                archive = SceneArchive(self._initial_doc)
            else:
                raise CommandError("nothing to load")
            load_scene(archive, self)
            return True
        raise CommandError(f"unknown command {name!r}")

    # -- replay ------------------------------------------------------------------------

    def apply_wire_event(self, ev: dict) -> bool:
        if ev.get("k") == "cmd":
            return self.apply_command(ev.get("name", ""), ev.get("args", {}))
        try:
            kind = EventKind(ev["k"])
            point = Point2D(float(ev["x"]), float(ev["y"]))
            button = Button(ev.get("b", "L"))
        except (KeyError, ValueError, TypeError) as exc:
            raise IllegalEvent(f"malformed event: {exc}") from None
        return self.apply_event(PointerEvent(kind, point, button))

    def replay(self, script: Iterable[dict]) -> tuple[SceneSnapshot, dict]:
        """Apply a script; the result depends only on the start state and the
        events, never on wall-clock time."""
        report = {"events": 0, "applied": 0, "changed": 0, "dropped": []}
        for index, ev in enumerate(script):
            report["events"] += 1
            try:
                changed = self.apply_wire_event(ev)
            except (IllegalEvent, CommandError, LoadError) as exc:
                report["dropped"].append({"index": index, "reason": str(exc)})
                continue
            report["applied"] += 1
            if changed:
                report["changed"] += 1
        return self.snapshot(), report

    # -- snapshots / persistence ----------------------------------------------------------

    def to_doc(self) -> dict:
        return {
            "schema": SCHEMA,
            "window": {
                "width": float(self.window_size[0]),
                "height": float(self.window_size[1]),
                "view": [float(self.view_offset[0]), float(self.view_offset[1])],
                "scene": self.name,
                "move_button": self.mover.move_button.value,
                "rotate_button": self.mover.rotate_button.value,
                "background_drag": self.background_drag_enabled,
            },
            "figures": [entry.to_params() for entry in self.top_level],
        }

    def apply_doc(self, doc: dict) -> None:
        window = doc.get("window", {})
        self.window_size = (float(window.get("width", self.window_size[0])),
                            float(window.get("height", self.window_size[1])))
        view = window.get("view", list(self.view_offset))
        self.view_offset = (float(view[0]), float(view[1]))
        self.background_drag_enabled = bool(window.get(
            "background_drag", self.background_drag_enabled))
        self.mover.move_button = Button(window.get(
            "move_button", self.mover.move_button.value))
        self.mover.rotate_button = Button(window.get(
            "rotate_button", self.mover.rotate_button.value))

        archived = doc.get("figures", [])
        roster = [e for e in self.top_level if not isinstance(e, RectSelectGroup)]
        for stale in self.top_level:
            if isinstance(stale, RectSelectGroup):
                self.figures.pop(stale.fid, None)
        new_order: list = [None] * len(archived)
        group_entries: list[tuple[int, dict]] = []
        consumed = 0
        for i, params in enumerate(archived):
            if params.get("kind") == RectSelectGroup.kind:
                group_entries.append((i, params))
                continue
            if consumed >= len(roster):
                raise LoadError(f"figures/{i}: archive has more figures than the roster")
            entry = roster[consumed]
            consumed += 1
            entry.apply_params(params, f"figures/{i}")
            new_order[i] = entry
        if consumed < len(roster):
            raise LoadError(f"figures/{len(archived)}: roster figure "
                            f"{roster[consumed].fid} missing from archive")
        # Selection groups can capture earlier selection groups; recreate the
        # oldest (deepest in the archive order) first so member ids resolve.
        for i, params in reversed(group_entries):
            try:
                members = [self.figures[mid] for mid in params["members"]]
            except KeyError as exc:
                raise LoadError(f"figures/{i}/members: unknown id {exc}") from None
            if not members:
                raise LoadError(f"figures/{i}/members: empty selection group")
            group = RectSelectGroup(int(params["id"]), members)
            group.apply_params(params, f"figures/{i}")
            self.figures[group.fid] = group
            new_order[i] = group
        self.top_level = new_order
        if self.figures:
            self._counter = max(self._counter, max(self.figures))
        self.renew_mover()

    def snapshot(self) -> SceneSnapshot:
        doc = self.to_doc()
        data = canonical_bytes(doc)
        return SceneSnapshot(doc, data, hashlib.sha256(data).hexdigest())

    # -- UI support -------------------------------------------------------------------------

    def probe(self, p: Point2D) -> Optional[dict]:
        """Hit-test without catching: target and cursor hint under a point."""
        local = self._local(p)
        for figure in self.mover:
            idx = figure.hit(local)
            if idx is None:
                continue
            node = figure.cover[idx]
            return {"figure": figure.fid, "node": idx, "kind": figure.kind,
                    "cursor": node.cursor.value, "freedom": node.freedom.value,
                    "label": getattr(figure, "label", "")}
        return None
