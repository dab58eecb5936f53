"""Built-in sample scenes, one per demonstrated form.

Every builder is deterministic: same ids, same geometry, same archive bytes
on every run, which is what makes golden replay scripts possible.
"""

from __future__ import annotations

from .figures import RectFigure
from .geometry import Point2D, RectF
from .groups import (Comment, CommentedControl, ControlProxy, ElasticGroup,
                     ProportionalGroup, PropItem, Resizing, Side, VisualParams,
                     rubber_band_select)
from .primitives import (BarChartPrim, Direction, PieChartPrim, RingPrim,
                         StripBar, TrackBarH)
from .session import Scene


def build_years_selection() -> Scene:
    """Two proportional groups and the OK button: three moveable objects."""
    scene = Scene("years-selection", width=430, height=310)
    group_all = ProportionalGroup(
        scene.new_id(), RectF(20, 20, 170, 200), title="All years",
        items=[PropItem("years", 0.08, 0.08, 0.84, 0.68),
               PropItem("Add", 0.25, 0.82, 0.5, 0.12)])
    group_selected = ProportionalGroup(
        scene.new_id(), RectF(230, 20, 170, 200), title="Selected",
        items=[PropItem("selected", 0.08, 0.08, 0.84, 0.68),
               PropItem("Remove", 0.25, 0.82, 0.5, 0.12)])
    btn_ok = ControlProxy(scene.new_id(), RectF(165, 250, 70, 26), "OK")
    scene.add_top(group_all)
    scene.add_top(group_selected, front=True)
    scene.add_top(btn_ok, front=True)
    scene.seal()
    return scene


def _cc(scene: Scene, rect: RectF, text: str, side: Side = Side.W,
        resizing: Resizing = Resizing.WE) -> CommentedControl:
    return CommentedControl.build(scene.new_id, rect, text,
                                  resizing=resizing, side=side)


def build_personal_data() -> Scene:
    """The 23-control form: one outer elastic group holding two plain
    controls, two commented controls and five inner groups."""
    scene = Scene("personal-data", width=560, height=500)
    text_date = ControlProxy(scene.new_id(), RectF(150, 60, 90, 22), "Date",
                             resizing=Resizing.WE)
    text_time = ControlProxy(scene.new_id(), RectF(260, 60, 80, 22), "Time",
                             resizing=Resizing.WE)
    cc_name = _cc(scene, RectF(90, 100, 140, 22), "Name")
    cc_surname = _cc(scene, RectF(300, 100, 140, 22), "Surname")

    dob = ElasticGroup(scene.new_id(), "Day of birth", [
        _cc(scene, RectF(70, 170, 40, 22), "Day", Side.N),
        _cc(scene, RectF(125, 170, 45, 22), "Month", Side.N),
        _cc(scene, RectF(185, 170, 55, 22), "Year", Side.N),
    ])
    # comments sit on the outer sides, like opposite pages of an open book
    contacts = ElasticGroup(scene.new_id(), "Contacts", [
        _cc(scene, RectF(360, 170, 110, 22), "Home", Side.E),
        _cc(scene, RectF(360, 200, 110, 22), "Office", Side.E),
        _cc(scene, RectF(360, 230, 110, 22), "Cellular", Side.E),
        _cc(scene, RectF(360, 260, 110, 22), "E-mail", Side.E),
    ])
    address = ElasticGroup(scene.new_id(), "Address", [
        _cc(scene, RectF(90, 240, 130, 22), "Street"),
        _cc(scene, RectF(90, 270, 130, 22), "Town"),
        _cc(scene, RectF(90, 300, 130, 22), "Province"),
        _cc(scene, RectF(90, 330, 130, 22), "Country"),
        _cc(scene, RectF(90, 360, 130, 22), "Zip code"),
    ], visual=VisualParams(background_color="#f2ecbc", show_background=True))
    professional = ElasticGroup(scene.new_id(), "Professional status", [
        _cc(scene, RectF(360, 320, 120, 22), "Company", Side.E),
        _cc(scene, RectF(360, 350, 120, 22), "Position", Side.E),
    ])
    projects = ElasticGroup(scene.new_id(), "Projects", [
        ControlProxy(scene.new_id(), RectF(70, 410, 60, 22), "Delete"),
        ControlProxy(scene.new_id(), RectF(140, 410, 64, 22), "Move up"),
        ControlProxy(scene.new_id(), RectF(214, 410, 76, 22), "Move down"),
        ControlProxy(scene.new_id(), RectF(310, 400, 150, 60), "Projects list"),
    ])

    group_data = ElasticGroup(scene.new_id(), "Personal data", [
        text_date, text_time, cc_name, cc_surname,
        dob, contacts, address, professional, projects,
    ])
    btn_help = ControlProxy(scene.new_id(), RectF(480, 20, 60, 24), "Help")
    scene.add_top(group_data)
    scene.add_top(btn_help, front=True)
    scene.seal()
    return scene


def build_calculator() -> Scene:
    """Display plus three predefined societies of buttons: numbers,
    operations and functions."""
    scene = Scene("calculator", width=330, height=300)
    display = ControlProxy(scene.new_id(), RectF(30, 24, 270, 40), "0.",
                           fill="#ffffff")
    scene.add_top(display)

    def button(x: float, y: float, label: str, fill: str) -> ControlProxy:
        btn = ControlProxy(scene.new_id(), RectF(x, y, 42, 32), label, fill=fill)
        scene.add_top(btn)
        return btn

    digit_fill, op_fill, fn_fill = "#dfe8f6", "#f6e3d7", "#e2f0dc"
    digits = []
    rows = [("7", "8", "9"), ("4", "5", "6"), ("1", "2", "3"), ("0", ".", "±")]
    for row, labels in enumerate(rows):
        for col, label in enumerate(labels):
            digits.append(button(30 + col * 50, 80 + row * 40, label, digit_fill))
    operations = [button(190, 80 + i * 40, label, op_fill)
                  for i, label in enumerate(("+", "−", "×", "÷", "="))]
    functions = [button(250, 80 + i * 40, label, fn_fill)
                 for i, label in enumerate(("√", "1/x", "%", "C"))]

    scene.predefined_groups = {
        "digits": [b.fid for b in digits],
        "operations": [b.fid for b in operations],
        "functions": [b.fid for b in functions],
    }
    scene.seal()
    return scene


def build_ring_editor() -> Scene:
    """One resizable ring, a parameters group and two buttons; the form
    itself pans by any empty point."""
    scene = Scene("ring-editor", width=430, height=440, background_drag=True)
    ring = RingPrim(
        scene.new_id(), Point2D(190, 170), 45.0, 115.0,
        boundaries=[0.0, 1.35, 2.9, 4.3, 5.4],
        resizable=True, value_total=100.0,
        comments=[Comment(scene.new_id(), "New ring", Point2D(190, 32),
                          font_size=13.0)])
    track = TrackBarH(
        scene.new_id(), RectF(66, 330, 160, 10), 0.0, 100.0, 35.0,
        comments=[Comment(scene.new_id(), "0", Point2D(66, 352), font_size=9.0),
                  Comment(scene.new_id(), "100", Point2D(226, 352), font_size=9.0),
                  Comment(scene.new_id(), "Transparency", Point2D(146, 312),
                          font_size=10.0)],
        pins=["start", "end", "free"])
    cc_total = _cc(scene, RectF(300, 324, 60, 22), "Total")
    params = ElasticGroup(scene.new_id(), "Ring parameters", [track, cc_total])
    btn_ok = ControlProxy(scene.new_id(), RectF(130, 392, 60, 26), "OK")
    btn_cancel = ControlProxy(scene.new_id(), RectF(210, 392, 70, 26), "Cancel")
    scene.add_top(ring)
    scene.add_top(params, front=True)
    scene.add_top(btn_cancel, front=True)
    scene.add_top(btn_ok, front=True)
    scene.seal()
    return scene


def build_bar_editor() -> Scene:
    """A primitive bar chart whose strips change values when resized."""
    scene = Scene("bar-editor", width=410, height=400, background_drag=True)
    baseline = 200.0
    lengths = (-120.0, -70.0, -95.0, -40.0, -60.0)
    strips = []
    for i, length in enumerate(lengths):
        left = 60.0 + i * 48.0
        strips.append(StripBar(scene.new_id(), Point2D(left + 20.0, baseline),
                               Direction.HOR, length, (left, left + 40.0),
                               value_scale=-1.0))
    chart = BarChartPrim(scene.new_id(), RectF(50, 40, 260, 180), strips)
    params = ElasticGroup(scene.new_id(), "Bar parameters", [
        _cc(scene, RectF(100, 260, 120, 22), "Name"),
        _cc(scene, RectF(100, 300, 120, 22), "Total"),
    ])
    btn_ok = ControlProxy(scene.new_id(), RectF(140, 350, 60, 26), "OK")
    btn_cancel = ControlProxy(scene.new_id(), RectF(220, 350, 70, 26), "Cancel")
    scene.add_top(chart)
    scene.add_top(params, front=True)
    scene.add_top(btn_cancel, front=True)
    scene.add_top(btn_ok, front=True)
    scene.seal()
    return scene


def build_village() -> Scene:
    """The painting sample: a palette group, free-standing buildings and one
    rubber-band group moved by any inner point."""
    scene = Scene("village", width=470, height=320)
    house1 = RectFigure(scene.new_id(), RectF(60, 100, 70, 50), "House", "#d9a066")
    house2 = RectFigure(scene.new_id(), RectF(150, 120, 60, 45), "House", "#cf9358")
    barn = RectFigure(scene.new_id(), RectF(260, 90, 80, 60), "Barn", "#a0622d")
    tower = RectFigure(scene.new_id(), RectF(380, 100, 40, 80), "Tower", "#8a8a9e")
    well = RectFigure(scene.new_id(), RectF(300, 220, 30, 30), "Well", "#6a89a8")
    for building in (house1, house2, barn, tower, well):
        scene.add_top(building)
    palette = ElasticGroup(scene.new_id(), "Buildings", [
        ControlProxy(scene.new_id(), RectF(24, 20, 54, 24), "House"),
        ControlProxy(scene.new_id(), RectF(88, 20, 54, 24), "Barn"),
        ControlProxy(scene.new_id(), RectF(152, 20, 54, 24), "Tower"),
        ControlProxy(scene.new_id(), RectF(216, 20, 54, 24), "Well"),
    ], visual=VisualParams(background_color="#f5f0c0", show_background=True))
    scene.add_top(palette, front=True)
    rubber_band_select(scene, RectF(50, 90, 170, 90))
    scene.seal()
    return scene


SAMPLES = {
    "years-selection": build_years_selection,
    "personal-data": build_personal_data,
    "calculator": build_calculator,
    "ring-editor": build_ring_editor,
    "bar-editor": build_bar_editor,
    "village": build_village,
}


def sample_names() -> list[str]:
    return list(SAMPLES)


def build_sample(name: str) -> Scene:
    try:
        builder = SAMPLES[name]
    except KeyError:
        raise KeyError(f"unknown sample {name!r}; known: {', '.join(SAMPLES)}") from None
    return builder()
