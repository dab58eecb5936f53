"""Golden interaction scripts for the six sample scenes.

Scripts are generated against the live sample builders, so the coordinates
and figure ids they embed always match the deterministic construction.  Each
script exercises the sample's signature interactions: drags, resizes,
rotation, resectoring, visibility, fixing and persistence commands.
"""

from __future__ import annotations

from pathlib import Path

from .groups import CommentedControl, ControlProxy, ElasticGroup, RectSelectGroup
from .primitives import RingPrim, TrackBarH
from .samples import SAMPLES, build_sample
from .session import InteractionScript, Scene, command, pointer


def _drag(events: list, x0: float, y0: float, x1: float, y1: float,
          button: str = "L") -> None:
    events.append(pointer("down", x0, y0, button))
    events.append(pointer("move", (x0 + x1) / 2.0, (y0 + y1) / 2.0, button))
    events.append(pointer("move", x1, y1, button))
    events.append(pointer("up", x1, y1, button))


def _find_cc(scene: Scene, label: str) -> CommentedControl:
    for fig in scene.figures.values():
        if isinstance(fig, CommentedControl) and fig.proxy.label == label:
            return fig
    raise LookupError(label)


def _find_group(scene: Scene, title: str) -> ElasticGroup:
    for fig in scene.figures.values():
        if isinstance(fig, ElasticGroup) and fig.title == title:
            return fig
    raise LookupError(title)


def _find_proxy(scene: Scene, label: str) -> ControlProxy:
    for fig in scene.figures.values():
        if isinstance(fig, ControlProxy) and fig.label == label:
            return fig
    raise LookupError(label)


def _years_selection() -> list[dict]:
    events: list[dict] = []
    _drag(events, 100, 120, 92, 134)          # group body: whole-group move
    _drag(events, 400, 100, 424, 100)         # right frame edge: resize
    _drag(events, 200, 256, 208, 268)         # OK button: move by inner band
    return events


def _personal_data() -> list[dict]:
    scene = build_sample("personal-data")
    street = _find_cc(scene, "Street")
    province = _find_cc(scene, "Province")
    address = _find_group(scene, "Address")

    events: list[dict] = []
    _drag(events, 155, 240, 165, 246)         # Street pair by the control's border
    cx, cy = street.comment.anchor.x, street.comment.anchor.y
    px, py = street.proxy.rect.center.x, street.proxy.rect.center.y
    _drag(events, cx, cy, px, py)             # drop comment inside its own control
    events.append(command("set-visibility", id=province.fid, visible=False))
    events.append(command("set-elements-movable", id=address.fid, movable=False))
    _drag(events, 165, 276, 220, 300)         # fixed element: nothing moves
    events.append(command("set-elements-movable", id=address.fid, movable=True))
    events.append(command("set-title-position", id=address.fid, t=0.5))
    events.append(command("set-font-size", id=street.comment.fid, size=14))
    return events


def _calculator() -> list[dict]:
    scene = build_sample("calculator")
    seven = _find_proxy(scene, "7")
    sqrt = _find_proxy(scene, "√")
    group_id = max(scene.figures) + 1          # id the rubber group will get

    events: list[dict] = []
    events.append(command("rubber-band", rect=[20, 70, 180, 210]))
    _drag(events, 100, 150, 112, 160)          # arbitrary group: any inner point
    events.append(command("dissolve-group", id=group_id))
    events.append(command("frame-predefined", name="functions"))
    r = sqrt.rect
    _drag(events, r.center.x, r.top + 6, r.center.x + 14, r.top + 10)
    events.append(command("set-visual", id=seven.fid, fill="#ffd27f"))
    _drag(events, seven.rect.center.x, seven.rect.top + 6,
          seven.rect.center.x - 8, seven.rect.top + 30)
    return events


def _ring_editor() -> list[dict]:
    import math
    scene = build_sample("ring-editor")
    ring = next(f for f in scene.figures.values() if isinstance(f, RingPrim))
    track = next(f for f in scene.figures.values() if isinstance(f, TrackBarH))
    cx, cy = ring.center.x, ring.center.y

    def at(angle: float, radius: float) -> tuple[float, float]:
        return (cx + radius * math.cos(angle), cy + radius * math.sin(angle))

    events: list[dict] = []
    bx, by = at(ring.boundaries[1], 80)        # grab the border between 0 and 1
    mx, my = at(1.0, 80)
    _drag(events, bx, by, mx, my)              # resector toward the first sector
    rx, ry = at(0.6, 80)
    r2x, r2y = at(1.2, 80)
    _drag(events, rx, ry, r2x, r2y, button="R")  # rotate the whole ring
    tx, ty = track.thumb_center().x, track.thumb_center().y
    _drag(events, tx, ty, tx + 58, ty)         # pick a new track-bar value
    events.append(command("save"))
    _drag(events, 8, 12, 23, 22)               # empty point: the form pans
    _drag(events, 150, 405, 150, 430)          # OK button rides along (move band)
    events.append(command("load"))             # back to the saved arrangement
    return events


def _bar_editor() -> list[dict]:
    scene = build_sample("bar-editor")
    chart = scene.top_level[-1]                # chart registered first, bottom
    strip = chart.strips[1]

    events: list[dict] = []
    ex = (strip.span[0] + strip.span[1]) / 2.0
    _drag(events, ex, strip.edge_position(), ex, strip.edge_position() - 30)
    _drag(events, chart.frame.right, 130, chart.frame.right + 20, 130)
    _drag(events, 70, 60, 82, 68)              # chart body: move the whole chart
    _drag(events, 6, 380, 20, 390)             # background pan
    return events


def _village() -> list[dict]:
    scene = build_sample("village")
    group = next(f for f in scene.figures.values() if isinstance(f, RectSelectGroup))
    barn = _find_rect(scene, "Barn")
    tower = _find_rect(scene, "Tower")

    events: list[dict] = []
    _drag(events, 140, 105, 165, 120)          # buildings group by any inner point
    _drag(events, barn.rect.center.x, barn.rect.center.y,
          barn.rect.center.x - 10, barn.rect.center.y + 30)
    _drag(events, tower.rect.center.x, tower.rect.bottom,
          tower.rect.center.x, tower.rect.bottom + 15)
    events.append(command("set-visual", id=group.fid, fill="#bcd8e8"))
    return events


def _find_rect(scene: Scene, label: str):
    from .figures import RectFigure
    for fig in scene.figures.values():
        if isinstance(fig, RectFigure) and fig.label == label:
            return fig
    raise LookupError(label)


_GENERATORS = {
    "years-selection": _years_selection,
    "personal-data": _personal_data,
    "calculator": _calculator,
    "ring-editor": _ring_editor,
    "bar-editor": _bar_editor,
    "village": _village,
}


def golden_script(name: str) -> InteractionScript:
    try:
        generator = _GENERATORS[name]
    except KeyError:
        raise KeyError(f"no golden script for {name!r}") from None
    return InteractionScript(generator())


def golden_names() -> list[str]:
    return list(_GENERATORS)


def export_all(directory) -> list[Path]:
    """Write every golden script as <name>.jsonl under directory."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in _GENERATORS:
        path = out / f"{name}.jsonl"
        golden_script(name).write(path)
        written.append(path)
    return written


if __name__ == "__main__":  # pragma: no cover
    import sys
    target = sys.argv[1] if len(sys.argv) > 1 else "scripts"
    for path in export_all(target):
        print(path)
