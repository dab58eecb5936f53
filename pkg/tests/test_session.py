import json

import pytest

from udapp.figures import RectFigure
from udapp.geometry import Point2D, RectF
from udapp.groups import ControlProxy
from udapp.mover import Button
from udapp.samples import build_sample
from udapp.session import (EventKind, IllegalEvent, InteractionScript,
                           PointerEvent, Scene, command, pointer)


def simple_scene(background=False):
    scene = Scene("t", width=400, height=300, background_drag=background)
    fig = RectFigure(scene.new_id(), RectF(50, 50, 60, 40), "box")
    scene.add_top(fig)
    scene.seal()
    return scene, fig


# ---------------------------------------------------------------------------
# apply_event
# ---------------------------------------------------------------------------

def test_background_drag_on_empty_space():
    scene, fig = simple_scene(background=True)
    scene.replay([pointer("down", 300, 200), pointer("move", 310, 195),
                  pointer("move", 330, 190), pointer("up", 330, 190)])
    assert scene.view_offset == (30, -10)
    assert fig.rect == RectF(50, 50, 60, 40)


def test_figure_drag_leaves_view_alone():
    scene, fig = simple_scene(background=True)
    scene.replay([pointer("down", 80, 70), pointer("move", 90, 75),
                  pointer("up", 90, 75)])
    assert fig.rect == RectF(60, 55, 60, 40)
    assert scene.view_offset == (0, 0)


def test_background_drag_disabled_by_default():
    scene, _ = simple_scene(background=False)
    scene.replay([pointer("down", 300, 200), pointer("move", 330, 190),
                  pointer("up", 330, 190)])
    assert scene.view_offset == (0, 0)


def test_background_exactness_for_any_path():
    scene, _ = simple_scene(background=True)
    path = [(300, 200), (250, 100), (380, 280), (313, 207)]
    events = [pointer("down", *path[0])]
    events += [pointer("move", x, y) for x, y in path[1:]]
    events.append(pointer("up", *path[-1]))
    scene.replay(events)
    assert scene.view_offset == (13, 7)  # up point minus down point


def test_hit_testing_respects_view_offset():
    scene, fig = simple_scene(background=True)
    scene.replay([pointer("down", 300, 200), pointer("move", 400, 250),
                  pointer("up", 400, 250)])
    assert scene.view_offset == (100, 50)
    # the figure now sits 100,50 further in screen coordinates
    scene.replay([pointer("down", 180, 120), pointer("move", 190, 130),
                  pointer("up", 190, 130)])
    assert fig.rect == RectF(60, 60, 60, 40)


def test_right_button_rotation_path():
    scene = build_sample("ring-editor")
    ring = scene.top_level[-1]
    assert ring.kind == "ring"
    import math
    cx, cy = ring.center.x, ring.center.y
    p0 = (cx + 70 * math.cos(0.6), cy + 70 * math.sin(0.6))
    p1 = (cx + 70 * math.cos(1.4), cy + 70 * math.sin(1.4))
    scene.replay([pointer("down", *p0, "R"), pointer("move", *p1, "R"),
                  pointer("up", *p1, "R")])
    assert ring.rotation_angle == pytest.approx(0.8)


# ---------------------------------------------------------------------------
# event legality
# ---------------------------------------------------------------------------

def test_double_down_dropped_and_flagged():
    scene, fig = simple_scene()
    snap, report = scene.replay([
        pointer("down", 80, 70),
        pointer("down", 80, 70),     # illegal: down while down pending
        pointer("move", 90, 80),
        pointer("up", 90, 80),
    ])
    assert len(report["dropped"]) == 1
    assert report["dropped"][0]["index"] == 1
    assert fig.rect == RectF(60, 60, 60, 40)  # the legal drag still applied


def test_stray_up_is_harmless():
    scene, fig = simple_scene()
    snap, report = scene.replay([pointer("up", 10, 10)])
    assert report["dropped"] == []
    assert fig.rect == RectF(50, 50, 60, 40)


def test_unknown_command_dropped():
    scene, _ = simple_scene()
    snap, report = scene.replay([command("warp-reality", amount=11)])
    assert len(report["dropped"]) == 1


def test_malformed_event_dropped():
    scene, _ = simple_scene()
    snap, report = scene.replay([{"k": "down", "x": "NaN-ish"}])
    assert len(report["dropped"]) == 1


# ---------------------------------------------------------------------------
# replay determinism
# ---------------------------------------------------------------------------

def test_empty_script_snapshot_equals_initial():
    scene, _ = simple_scene()
    initial = scene.snapshot()
    snap, report = scene.replay([])
    assert snap.hash == initial.hash
    assert report["events"] == 0


def test_same_script_twice_same_hash():
    script = [pointer("down", 80, 70), pointer("move", 95, 77),
              pointer("up", 95, 77), command("set-window", width=500, height=400)]
    hashes = set()
    for _ in range(2):
        scene, _ = simple_scene()
        snap, _report = scene.replay(script)
        hashes.add(snap.hash)
    assert len(hashes) == 1


def test_drag_script_matches_direct_move_by():
    scene, fig = simple_scene()
    scene.replay([pointer("down", 80, 70), pointer("move", 85, 70),
                  pointer("up", 85, 70)])
    oracle_scene, oracle_fig = simple_scene()
    oracle_fig.move_by(5, 0)
    assert scene.snapshot().data == oracle_scene.snapshot().data


# ---------------------------------------------------------------------------
# snapshots
# ---------------------------------------------------------------------------

def test_snapshot_sensitive_to_hidden_flag():
    a, _ = simple_scene()
    b, fig_b = simple_scene()
    fig_b.visible = False
    b.renew_mover()
    assert a.snapshot().hash != b.snapshot().hash


def test_snapshot_matches_save_load_round_trip():
    from udapp.persistence import load_scene, save_scene
    scene = build_sample("calculator")
    scene.replay([pointer("down", 51, 96), pointer("move", 60, 110),
                  pointer("up", 60, 110)])
    fresh = build_sample("calculator")
    load_scene(save_scene(scene), fresh)
    assert fresh.snapshot().hash == scene.snapshot().hash


def test_snapshot_hash_is_sha256_of_bytes():
    import hashlib
    scene, _ = simple_scene()
    snap = scene.snapshot()
    assert snap.hash == hashlib.sha256(snap.data).hexdigest()
    assert json.loads(snap.data) == snap.doc


# ---------------------------------------------------------------------------
# scripts
# ---------------------------------------------------------------------------

def test_script_jsonl_round_trip(tmp_path):
    script = InteractionScript([pointer("down", 1, 2), command("save")])
    path = tmp_path / "s.jsonl"
    script.write(path)
    back = InteractionScript.read(path)
    assert back.events == script.events


def test_script_parse_error_reports_line():
    with pytest.raises(ValueError) as err:
        InteractionScript.from_jsonl('{"k":"down","x":1,"y":2}\n{broken\n')
    assert "line 2" in str(err.value)


def test_probe_reports_cursor_hint():
    scene, fig = simple_scene()
    info = scene.probe(Point2D(80, 70))
    assert info["figure"] == fig.fid
    assert info["cursor"] == "size-all"
    assert scene.probe(Point2D(390, 290)) is None
