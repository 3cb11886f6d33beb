from __future__ import annotations

from gripkit.geometry import Rect
from gripkit.mover import Unrestricted, WorkArea
from gripkit.scene import Scene
from gripkit.shapes import ControlStub, NCircle, RectCorners, ScrewNut
from gripkit.svg import emit_svg


def one_rect_scene() -> Scene:
    return Scene(WorkArea(400, 300), Unrestricted(),
                 [RectCorners(Rect(100, 100, 100, 60))])


def contour_section(text: str) -> str:
    assert '<g id="contours">' in text
    return text.split('<g id="contours">', 1)[1]


class TestDocumentShape:
    def test_header_and_footer(self):
        text = emit_svg(one_rect_scene())
        assert text.startswith('<svg xmlns="http://www.w3.org/2000/svg" '
                               'width="400" height="300" '
                               'viewBox="0 0 400 300">')
        assert text.endswith("</svg>\n")

    def test_background_fills_the_work_area(self):
        text = emit_svg(one_rect_scene())
        assert '<rect width="400" height="300" fill="#ffffff"/>' in text

    def test_contours_are_opt_in(self):
        scene = one_rect_scene()
        assert '<g id="contours">' not in emit_svg(scene)
        assert '<g id="contours">' in emit_svg(scene, show_contours=True)

    def test_byte_determinism(self):
        scene = one_rect_scene()
        assert emit_svg(scene, True) == emit_svg(scene, True)

    def test_contour_toggle_keeps_the_shape_layer(self):
        scene = one_rect_scene()
        plain = emit_svg(scene)
        overlaid = emit_svg(scene, show_contours=True)
        assert overlaid.startswith(plain[:plain.rindex("</svg>")])


class TestElements:
    def test_corner_contour_is_four_lines_and_four_squares(self):
        text = emit_svg(one_rect_scene(), show_contours=True)
        tail = contour_section(text)
        assert tail.count("<line ") == 4
        assert tail.count("<rect ") == 4
        # Node squares clear their background to stay readable.
        assert tail.count('fill="#ffffff"') == 4

    def test_objects_draw_back_to_front(self):
        scene = Scene(WorkArea(400, 300), Unrestricted(),
                      [RectCorners(Rect(10, 10, 50, 40)),
                       RectCorners(Rect(200, 10, 50, 40))])
        text = emit_svg(scene)
        shapes = text.split('<g id="shapes">', 1)[1]
        assert shapes.index('x="200"') < shapes.index('x="10"')

    def test_circle_element(self):
        scene = Scene(WorkArea(400, 300), Unrestricted(), [NCircle((200, 150), 40)])
        text = emit_svg(scene)
        assert '<circle cx="200" cy="150" r="40"' in text

    def test_polygon_points_attribute(self):
        scene = Scene(WorkArea(400, 300), Unrestricted(), [ScrewNut((200, 150), 40, 95)])
        text = emit_svg(scene)
        assert '<polygon points="295,150 ' in text

    def test_label_text_is_escaped(self):
        stub = ControlStub("a<b&c", Rect(50, 50, 200, 100))
        scene = Scene(WorkArea(400, 300), Unrestricted(), [stub])
        text = emit_svg(scene)
        assert ">a&lt;b&amp;c</text>" in text
        assert ">a<b" not in text
