import pytest

from udapp.cover import MovementFreedom
from udapp.figures import RectFigure
from udapp.geometry import Point2D, RectF
from udapp.groups import ControlProxy, ElasticGroup
from udapp.mover import Button, DragMode, Mover
from udapp.primitives import RingPrim


def rect(fid, x=0, y=0, w=20, h=20):
    return RectFigure(fid, RectF(x, y, w, h))


# ---------------------------------------------------------------------------
# Queue management
# ---------------------------------------------------------------------------

def test_insert_front_makes_topmost():
    m = Mover()
    a, b = rect(1), rect(2)
    m.insert(0, a)
    m.insert(0, b)
    assert [f.fid for f in m] == [2, 1]


def test_add_appends_at_bottom():
    m = Mover()
    m.add(rect(1))
    m.add(rect(2))
    assert [f.fid for f in m] == [1, 2]


def test_duplicate_registration_rejected():
    m = Mover()
    a = rect(1)
    m.add(a)
    with pytest.raises(ValueError):
        m.add(a)


def test_clear_empties_queue_and_drag():
    m = Mover()
    m.add(rect(1))
    m.catch(Point2D(10, 10), Button.LEFT)
    m.clear()
    assert len(m) == 0 and m.drag is None


def test_group_registers_in_one_call():
    m = Mover()
    group = ElasticGroup(1, "g", [
        ControlProxy(2, RectF(10, 10, 50, 20)),
        ControlProxy(3, RectF(70, 10, 50, 20)),
    ])
    group.into_mover(m, 0)
    # two proxies, then the frame: elements shadow the group
    assert [f.fid for f in m] == [2, 3, 1]


# ---------------------------------------------------------------------------
# catch
# ---------------------------------------------------------------------------

def test_catch_topmost_of_overlapping():
    m = Mover()
    top, bottom = rect(1, 0, 0, 30, 30), rect(2, 0, 0, 30, 30)
    m.add(top)
    m.add(bottom)
    assert m.catch(Point2D(15, 15), Button.LEFT)
    assert m.caught_source is top


def test_catch_passes_through_transparent_body():
    m = Mover()
    proxy = ControlProxy(1, RectF(0, 0, 60, 40))   # interior transparent
    below = rect(2, 0, 0, 60, 40)
    m.add(proxy)
    m.add(below)
    assert m.catch(Point2D(30, 20), Button.LEFT)
    assert m.caught_source is below
    m.release()


def test_catch_empty_space_returns_false():
    m = Mover()
    m.add(rect(1, 0, 0, 10, 10))
    assert m.catch(Point2D(500, 500), Button.LEFT) is False
    assert m.drag is None


def test_catch_freeze_node_for_menus():
    m = Mover()
    fig = rect(1, 0, 0, 30, 30)
    fig.movable = False
    m.add(fig)
    assert m.catch(Point2D(15, 15), Button.LEFT) is True
    assert m.drag.mode is DragMode.FROZEN
    assert m.move(Point2D(25, 25)) is False
    assert fig.rect == RectF(0, 0, 30, 30)


# ---------------------------------------------------------------------------
# move / release
# ---------------------------------------------------------------------------

def test_move_without_drag_is_false():
    m = Mover()
    m.add(rect(1))
    assert m.move(Point2D(5, 5)) is False


def test_body_drag_translates_by_delta():
    m = Mover()
    fig = rect(1, 0, 0, 30, 30)
    m.add(fig)
    m.catch(Point2D(15, 15), Button.LEFT)
    assert m.move(Point2D(20, 15)) is True
    assert fig.rect == RectF(5, 0, 30, 30)
    m.release()


def test_exact_drag_law_path_independent():
    # any path from p0 to p1 translates by exactly p1 - p0
    m = Mover()
    fig = rect(1, 0, 0, 40, 40)
    m.add(fig)
    m.catch(Point2D(20, 20), Button.LEFT)
    for p in [(35, 10), (2, 7), (60, 60), (26, 31)]:
        m.move(Point2D(*p))
    m.release()
    assert (fig.rect.left, fig.rect.top) == (26 - 20, 31 - 20)


def test_release_returns_figure_id_and_clears():
    m = Mover()
    fig = rect(9, 0, 0, 30, 30)
    m.add(fig)
    assert m.release() is None
    m.catch(Point2D(10, 10), Button.LEFT)
    assert m.release() == 9
    assert m.drag is None
    assert m.caught_source is None


def test_no_implicit_z_raise_on_catch():
    m = Mover()
    a, b = rect(1, 0, 0, 30, 30), rect(2, 100, 100, 30, 30)
    m.add(a)
    m.add(b)
    m.catch(Point2D(110, 110), Button.LEFT)
    m.release()
    assert [f.fid for f in m] == [1, 2]


# ---------------------------------------------------------------------------
# accessors
# ---------------------------------------------------------------------------

def test_caught_node_shape_strip_on_ring_border():
    m = Mover()
    ring = RingPrim(1, Point2D(100, 100), 30, 80, [0.0, 2.0, 4.0])
    m.add(ring)
    p = Point2D(100 + 55, 100)  # on the boundary at angle 0
    assert m.catch(p, Button.LEFT)
    assert m.caught_node_shape == "strip"
    assert m.caught_source is ring
    m.release()


def test_caught_node_shape_circle_on_rect_corner():
    m = Mover()
    fig = rect(1, 10, 10, 40, 40)
    m.add(fig)
    assert m.catch(Point2D(10, 10), Button.LEFT)
    assert m.caught_node_shape == "circle"
    assert m.caught_node == 0
    m.release()
    assert m.caught_node is None and m.caught_node_shape is None


def test_rotate_button_on_non_rotatable_freezes():
    m = Mover()
    fig = rect(1, 0, 0, 30, 30)
    m.add(fig)
    assert m.catch(Point2D(15, 15), Button.RIGHT) is True
    assert m.drag.mode is DragMode.FROZEN
    assert m.move(Point2D(40, 40)) is False
    assert fig.rect == RectF(0, 0, 30, 30)


def test_remove_clears_matching_drag():
    m = Mover()
    fig = rect(1, 0, 0, 30, 30)
    m.add(fig)
    m.catch(Point2D(15, 15), Button.LEFT)
    m.remove(1)
    assert m.drag is None and len(m) == 0
