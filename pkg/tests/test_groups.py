import math
import random

import pytest

from udapp.cover import MovementFreedom
from udapp.figures import RectFigure
from udapp.geometry import Point2D, RectF, rect_union
from udapp.groups import (Comment, CommentedControl, ControlProxy, ElasticGroup,
                          LinkedRectangles, PropItem, ProportionalGroup,
                          RectSelectGroup, Resizing, Side, rubber_band_select,
                          frame_predefined_group, set_element_visible)
from udapp.mover import Button, Mover
from udapp.samples import build_sample
from udapp.session import Scene


def proxy(fid, x, y, w=50, h=20, label="", resizing=Resizing.ANY):
    return ControlProxy(fid, RectF(x, y, w, h), label, resizing=resizing)


def drag(mover, x0, y0, x1, y1, button=Button.LEFT):
    assert mover.catch(Point2D(x0, y0), button)
    mover.move(Point2D(x1, y1))
    return mover.release()


# ---------------------------------------------------------------------------
# into_mover
# ---------------------------------------------------------------------------

def test_into_mover_counts_elements_then_frame():
    group = ElasticGroup(1, "g", [proxy(2, 10, 10), proxy(3, 70, 10)])
    m = Mover()
    group.into_mover(m, 0)
    assert len(m) == 3
    assert m[2] is group


def test_into_mover_skips_invisible_elements():
    a, b = proxy(2, 10, 10), proxy(3, 70, 10)
    group = ElasticGroup(1, "g", [a, b])
    b.visible = False
    m = Mover()
    group.into_mover(m, 0)
    assert [f.fid for f in m] == [2, 1]


def test_personal_data_registers_everything_in_one_call():
    scene = build_sample("personal-data")
    group = scene.top_level[-1]
    m = Mover()
    group.into_mover(m, 0)
    assert len(m) == 44  # 23 controls minus help, plus comments and frames
    assert m[len(m) - 1] is group  # outer frame last in its block


# ---------------------------------------------------------------------------
# recompute_frame
# ---------------------------------------------------------------------------

def test_frame_is_padded_union():
    group = ElasticGroup(1, "g", [
        proxy(2, 10, 10, 50, 20), proxy(3, 30, 40, 20, 20)
    ], padding=6)
    # derived: union (10,10,50,50) expanded by 6
    assert group.frame == RectF(4, 4, 62, 62)


def test_frame_follows_runaway_element():
    a = proxy(2, 10, 10, 50, 20)
    group = ElasticGroup(1, "g", [a, proxy(3, 30, 40, 20, 20)], padding=6)
    a.move_by(100, 0)
    assert group.frame.right == a.rect.right + 6
    assert group.frame == rect_union(
        [e.bounds() for e in group.elements]).expanded(6)


def test_hiding_element_shrinks_frame_back():
    a = proxy(2, 10, 10, 50, 20)
    b = proxy(3, 200, 10, 20, 20)
    group = ElasticGroup(1, "g", [a, b], padding=6)
    wide = group.frame
    set_element_visible(b, False)
    assert group.frame == RectF(4, 4, 62, 32)
    set_element_visible(b, True)
    assert group.frame == wide


def test_empty_group_collapses_to_title_stub():
    a = proxy(2, 10, 10)
    group = ElasticGroup(1, "g", [a])
    set_element_visible(a, False)
    assert (group.frame.width, group.frame.height) == (120, 24)
    set_element_visible(a, True)
    assert a.rect == RectF(10, 10, 50, 20)  # visibility round-trip is exact


def test_group_move_translates_every_member_exactly():
    inner = ElasticGroup(10, "inner", [proxy(11, 200, 100, 40, 20)])
    cc = CommentedControl.build(iter(range(20, 30)).__next__,
                                RectF(60, 160, 60, 22), "note", side=Side.W)
    group = ElasticGroup(1, "outer", [proxy(2, 10, 10), cc, inner])
    before = {
        "p2": group.elements[0].rect,
        "proxy": cc.proxy.rect,
        "comment": cc.comment.anchor,
        "p11": inner.elements[0].rect,
        "frame": group.frame,
    }
    m = Mover()
    group.into_mover(m, 0)
    body = Point2D(group.frame.right - 1, group.frame.bottom - 1)
    assert m.catch(body, Button.LEFT)
    assert m.caught_source is group
    m.move(Point2D(body.x + 13, body.y + 7))
    m.release()
    assert group.elements[0].rect == before["p2"].moved(13, 7)
    assert cc.proxy.rect == before["proxy"].moved(13, 7)
    assert cc.comment.anchor == before["comment"].moved(13, 7)
    assert inner.elements[0].rect == before["p11"].moved(13, 7)
    assert group.frame == before["frame"].moved(13, 7)


def test_reset_default_restores_construction_layout():
    a = proxy(2, 10, 10)
    group = ElasticGroup(1, "g", [a, proxy(3, 70, 10)])
    group.record_default()
    default_frame = group.frame
    a.move_by(55, 40)
    a.move_node(6, 30, 0, Point2D(a.rect.right + 30, a.rect.center.y), Button.LEFT)
    set_element_visible(group.elements[1], False)
    assert group.frame != default_frame
    assert group.reset_default() is True
    assert a.rect == RectF(10, 10, 50, 20)
    assert group.elements[1].visible is True
    assert group.frame == default_frame


def test_nested_groups_recompute_bottom_up():
    inner = ElasticGroup(10, "inner", [proxy(11, 100, 100, 40, 20)])
    outer = ElasticGroup(1, "outer", [proxy(2, 10, 10), inner])
    inner_el = inner.elements[0]
    inner_el.move_by(500, 0)
    assert inner.frame.right == inner_el.rect.right + inner.padding
    assert outer.frame.right == inner.frame.right + outer.padding


# ---------------------------------------------------------------------------
# movability combinations
# ---------------------------------------------------------------------------

def test_fixed_elements_let_group_move_as_one():
    a = proxy(2, 10, 10)
    group = ElasticGroup(1, "g", [a, proxy(3, 70, 10)])
    group.set_elements_movable(False)
    m = Mover()
    group.into_mover(m, 0)
    frame_before = group.frame
    # grab right on the inner element's border: caught but frozen
    drag(m, 35, 10, 60, 40)
    assert a.rect == RectF(10, 10, 50, 20)
    # grab the group body between elements: whole group moves
    drag(m, 65, 20, 75, 30)
    assert a.rect == RectF(20, 20, 50, 20)
    assert group.frame == frame_before.moved(10, 10)


def test_fixed_element_still_caught_for_menus():
    a = proxy(2, 10, 10)
    group = ElasticGroup(1, "g", [a])
    group.set_elements_movable(False)
    m = Mover()
    group.into_mover(m, 0)
    assert m.catch(Point2D(35, 10), Button.LEFT) is True
    assert m.caught_source is a
    m.release()


def test_unfix_restores_element_drags():
    a, b = proxy(2, 10, 10), proxy(3, 70, 40)
    group = ElasticGroup(1, "g", [a, b])
    group.set_elements_movable(False)
    group.set_elements_movable(True)
    m = Mover()
    group.into_mover(m, 0)
    drag(m, 35, 16, 45, 21)  # inner move band of the proxy
    assert a.rect == RectF(20, 15, 50, 20)
    assert b.rect == RectF(70, 40, 50, 20)  # element drag, not a group drag


def test_set_movable_recurses_and_round_trips():
    inner = ElasticGroup(10, "inner", [proxy(11, 100, 100)])
    group = ElasticGroup(1, "g", [proxy(2, 10, 10), inner])
    group.set_movable(False)
    assert not group.movable
    assert not inner.movable
    assert not inner.elements[0].movable
    assert all(n.freedom is MovementFreedom.FREEZE for n in group.cover.nodes)
    group.set_movable(True)
    assert inner.elements[0].movable


# ---------------------------------------------------------------------------
# Commented controls
# ---------------------------------------------------------------------------

def make_cc(next_id=None, rect=RectF(100, 100, 120, 24), text="Name"):
    ids = iter(range(1, 10))
    return CommentedControl.build(lambda: next(ids), rect, text, side=Side.W)


def test_comment_tracks_control_motion():
    cc = make_cc()
    before = cc.comment.anchor
    cc.proxy.move_by(5, 0)
    assert (cc.comment.anchor.x - before.x, cc.comment.anchor.y - before.y) == (5, 0)


def test_comment_moves_individually_and_keeps_new_offset():
    cc = make_cc()
    cc.comment.move_by(0, -30)
    offset = cc.comment.offset
    cc.proxy.move_by(10, 10)
    ref = cc.proxy.rect.center
    assert cc.comment.anchor.x == pytest.approx(ref.x + offset[0])
    assert cc.comment.anchor.y == pytest.approx(ref.y + offset[1])


def exposure(cc):
    c = cc.comment.bounds()
    return (c.area - c.intersection_area(cc.proxy.rect)) / c.area


def test_relocation_when_dropped_inside_own_control():
    cc = make_cc()
    m = Mover()
    cc.into_mover(m, 0)
    target = cc.proxy.rect.center
    drag(m, cc.comment.anchor.x, cc.comment.anchor.y, target.x, target.y)
    assert not cc.proxy.rect.contains_rect(cc.comment.bounds())
    assert exposure(cc) >= 0.25


def test_comment_left_alone_under_other_control():
    cc = make_cc()
    other = proxy(50, 300, 100, 160, 40)
    m = Mover()
    cc.into_mover(m, 0)
    m.add(other)
    target = other.rect.center
    drag(m, cc.comment.anchor.x, cc.comment.anchor.y, target.x, target.y)
    assert other.rect.contains_rect(cc.comment.bounds())
    assert (cc.comment.anchor.x, cc.comment.anchor.y) == (target.x, target.y)


def test_font_shrink_under_own_control_relocates():
    cc = make_cc()
    # park the comment just inside the control's edge with a big font
    cc.comment.set_font_size(22)
    cc.comment.move_by(cc.proxy.rect.center.x - cc.comment.anchor.x,
                       cc.proxy.rect.center.y - cc.comment.anchor.y)
    big = cc.comment.bounds()
    assert not cc.proxy.rect.contains_rect(big)  # the big comment peeks out
    cc.comment.set_font_size(6)                  # now fully hidden
    assert cc.proxy.rect.contains_rect(cc.comment.bounds())
    cc.comment_enforced_relocation()
    assert exposure(cc) >= 0.25


def test_relocation_noop_when_outside():
    cc = make_cc()
    anchor = cc.comment.anchor
    assert cc.comment_enforced_relocation() is False
    assert cc.comment.anchor == anchor


# ---------------------------------------------------------------------------
# Proportional group
# ---------------------------------------------------------------------------

def test_proportional_resize_scales_elements():
    group = ProportionalGroup(1, RectF(0, 0, 100, 100), items=[
        PropItem("a", 0.1, 0.1, 0.4, 0.2)])
    first = group.element_rects()[0]
    group.proportional_resize(RectF(0, 0, 200, 100))
    doubled = group.element_rects()[0]
    assert doubled.width == 2 * first.width
    assert doubled.height == first.height
    assert group.items[0].fw == 0.4  # fractions unchanged


def test_proportional_identity_resize():
    group = ProportionalGroup(1, RectF(5, 5, 80, 60), items=[
        PropItem("a", 0.2, 0.2, 0.5, 0.5)])
    before = group.element_rects()
    assert group.proportional_resize(RectF(5, 5, 80, 60)) is False
    assert group.element_rects() == before


def test_proportional_shrink_restore_round_trip():
    group = ProportionalGroup(1, RectF(10, 20, 300, 200), items=[
        PropItem("a", 0.05, 0.1, 0.4, 0.3), PropItem("b", 0.5, 0.55, 0.45, 0.4)])
    before = group.element_rects()
    group.proportional_resize(RectF(10, 20, 120, 90))
    group.proportional_resize(RectF(10, 20, 300, 200))
    for orig, back in zip(before, group.element_rects()):
        assert abs(back.left - orig.left) < 1e-9
        assert abs(back.top - orig.top) < 1e-9
        assert abs(back.width - orig.width) < 1e-9
        assert abs(back.height - orig.height) < 1e-9


def test_proportional_group_moves_by_any_inner_point():
    group = ProportionalGroup(1, RectF(0, 0, 100, 100), items=[])
    m = Mover()
    m.add(group)
    drag(m, 50, 50, 60, 65)
    assert group.frame == RectF(10, 15, 100, 100)


# ---------------------------------------------------------------------------
# Linked rectangles
# ---------------------------------------------------------------------------

def test_linked_rectangles_move_synchronously():
    linked = LinkedRectangles(1, [RectF(0, 0, 20, 10), RectF(50, 5, 10, 10)])
    m = Mover()
    m.add(linked)
    drag(m, 55, 10, 75, 25)   # grab the second part
    assert linked.parts[0] == RectF(20, 15, 20, 10)
    assert linked.parts[1] == RectF(70, 20, 10, 10)
    # offsets between parts are bit-stable
    assert linked.parts[1].left - linked.parts[0].left == 50.0
    assert linked.parts[1].top - linked.parts[0].top == 5.0


# ---------------------------------------------------------------------------
# Rubber-band selection
# ---------------------------------------------------------------------------

def scene_with_buttons():
    scene = Scene("t")
    for i in range(5):
        scene.add_top(RectFigure(scene.new_id(), RectF(10 + i * 40, 10, 30, 20)))
    scene.seal()
    return scene


def test_rubber_band_captures_fully_inside_only():
    scene = scene_with_buttons()
    group = rubber_band_select(scene, RectF(0, 0, 130, 50))
    assert group is not None
    assert len(group.members) == 3
    assert group.label == "Arbitrary"


def test_rubber_band_group_moves_members_by_any_inner_point():
    scene = scene_with_buttons()
    first = scene.top_level[-1]
    group = rubber_band_select(scene, RectF(0, 0, 500, 500))
    starts = [m.bounds() for m in group.members]
    inner = Point2D(group.bounds().left + 2, group.bounds().top + 2)
    assert scene.mover.catch(inner, Button.LEFT)
    assert scene.mover.caught_source is group
    scene.mover.move(Point2D(inner.x + 9, inner.y + 4))
    scene.mover.release()
    for m, s in zip(group.members, starts):
        assert m.bounds() == s.moved(9, 4)
    assert first.bounds() == starts[-1].moved(9, 4)


def test_rubber_band_empty_selection_creates_nothing():
    scene = scene_with_buttons()
    assert rubber_band_select(scene, RectF(400, 400, 10, 10)) is None


def test_arbitrary_name_even_for_a_whole_predefined_group():
    scene = build_sample("calculator")
    digits = [scene.figures[i] for i in scene.predefined_groups["digits"]]
    frame = rect_union([b.rect for b in digits]).expanded(2)
    group = rubber_band_select(scene, frame.expanded(5))
    assert group is not None
    assert group.label == "Arbitrary"


def test_predefined_group_is_a_closed_society():
    scene = build_sample("calculator")
    group = frame_predefined_group(scene, "digits")
    assert group.label == "Digits"
    assert sorted(group.member_ids()) == sorted(scene.predefined_groups["digits"])


# ---------------------------------------------------------------------------
# Title position
# ---------------------------------------------------------------------------

def test_title_position_clamps_and_slides():
    group = ElasticGroup(1, "Settings", [proxy(2, 10, 10, 200, 30)])
    assert group.title_position == 0.0
    assert group.set_title_position(0.5) is True
    assert group.title_position == 0.5
    assert group.set_title_position(1.3) is True
    assert group.title_position == 1.0
    assert group.set_title_position(1.0) is False


def test_title_slides_through_its_cover_node():
    group = ElasticGroup(1, "Settings", [proxy(2, 10, 10, 200, 30)])
    m = Mover()
    group.into_mover(m, 0)
    span = group._title_span()
    grab = Point2D((span[0] + span[1]) / 2, group.frame.top)
    assert m.catch(grab, Button.LEFT)
    assert m.caught_source is group
    m.move(Point2D(grab.x + 60, grab.y + 30))  # WE node: y is filtered
    m.release()
    assert 0 < group.title_position <= 1
