from __future__ import annotations

import hashlib
import json

import pytest

from gripkit.errors import InvariantError, SceneFormatError
from gripkit.gallery import case_scene, case_slugs, combined_scene
from gripkit.geometry import Rect
from gripkit.mover import PartlyVisible, Unrestricted, WorkArea
from gripkit.scene import Scene, load_scene, save_scene, scene_digest
from gripkit.shapes import NCircle, RectCorners


def sample_scene() -> Scene:
    return Scene(WorkArea(400, 300), Unrestricted(),
                 [RectCorners(Rect(100, 100, 100, 60)),
                  NCircle((250, 150), 40)])


class TestSaveLoad:
    def test_round_trip_is_byte_stable(self):
        text = save_scene(sample_scene())
        assert save_scene(load_scene(text)) == text

    def test_canonical_shape(self):
        text = save_scene(sample_scene())
        assert text.endswith("\n")
        doc = json.loads(text)
        assert doc["work"] == {"width": 400, "height": 300}
        assert doc["policy"] == "unrestricted"
        assert [o["type"] for o in doc["objects"]] == ["rect_corners", "n_circle"]

    def test_policy_defaults_when_absent(self):
        scene = load_scene('{"work": {"width": 100, "height": 100}}')
        assert scene.policy == PartlyVisible(16)
        assert scene.objects == []

    def test_digest_is_sha256_of_the_text(self):
        text = save_scene(sample_scene())
        assert scene_digest(text) == hashlib.sha256(text.encode()).hexdigest()

    def test_copy_is_independent(self):
        scene = sample_scene()
        clone = scene.copy()
        clone.objects[0].move(50, 50)
        assert scene.objects[0].rect == Rect(100, 100, 100, 60)
        assert save_scene(clone) != save_scene(scene)

    def test_build_mover_keeps_order_and_policy(self):
        scene = sample_scene()
        mover = scene.build_mover()
        assert len(mover) == 2
        assert mover[0].obj is scene.objects[0]
        assert mover.policy == Unrestricted()


class TestLoadErrors:
    def test_bad_json_reports_position(self):
        with pytest.raises(SceneFormatError, match=r"line 1, column"):
            load_scene("{nope")

    def test_non_object_root(self):
        with pytest.raises(SceneFormatError, match="JSON object"):
            load_scene("[1, 2]")

    def test_missing_work(self):
        with pytest.raises(SceneFormatError, match="missing field 'work'"):
            load_scene('{"objects": []}')

    @pytest.mark.parametrize("value", ['"40"', "40.5", "true", "null"])
    def test_work_size_must_be_integer(self, value):
        with pytest.raises(SceneFormatError, match="work.width"):
            load_scene('{"work": {"width": %s, "height": 100}}' % value)

    def test_work_size_must_be_positive(self):
        with pytest.raises(InvariantError, match="positive"):
            load_scene('{"work": {"width": 0, "height": 100}}')

    def test_policy_must_be_a_string(self):
        with pytest.raises(SceneFormatError, match="policy"):
            load_scene('{"work": {"width": 9, "height": 9}, "policy": 3}')

    def test_unknown_policy_is_semantic(self):
        with pytest.raises(InvariantError, match="policy"):
            load_scene('{"work": {"width": 9, "height": 9}, "policy": "maybe"}')

    def test_objects_must_be_a_list(self):
        with pytest.raises(SceneFormatError, match="objects"):
            load_scene('{"work": {"width": 9, "height": 9}, "objects": {}}')

    def test_unknown_type_tag_names_the_slot(self):
        with pytest.raises(SceneFormatError, match=r"objects\[0\].*'teapot'"):
            load_scene('{"work": {"width": 9, "height": 9},'
                       ' "objects": [{"type": "teapot"}]}')

    def test_missing_shape_field(self):
        with pytest.raises(SceneFormatError, match=r"objects\[0\].*'rect'"):
            load_scene('{"work": {"width": 9, "height": 9},'
                       ' "objects": [{"type": "rect_corners", "min_w": 20,'
                       ' "min_h": 20, "style": "shifted_squares"}]}')

    def test_semantic_shape_error_keeps_its_class(self):
        doc = ('{"work": {"width": 900, "height": 900}, "objects":'
               ' [{"type": "n_ring", "center": [200, 200], "r_inner": 100,'
               ' "r_outer": 50, "node_distance": 10, "node_radius": 8}]}')
        with pytest.raises(InvariantError, match=r"objects\[0\]"):
            load_scene(doc)


class TestGallery:
    def test_twelve_cases(self):
        assert len(case_slugs()) == 12
        assert case_slugs()[0] == "rect_shifted_squares"
        assert len(set(case_slugs())) == 12

    @pytest.mark.parametrize("slug", case_slugs())
    def test_every_case_round_trips(self, slug):
        text = save_scene(case_scene(slug))
        assert save_scene(load_scene(text)) == text

    def test_unknown_slug(self):
        with pytest.raises(KeyError):
            case_scene("nonesuch")

    def test_combined_scene_holds_all_cases(self):
        scene = combined_scene()
        assert len(scene.objects) == 12
        kinds = {obj.kind for obj in scene.objects}
        assert len(kinds) == 11  # two corner-rect variants share a kind
        text = save_scene(scene)
        assert save_scene(load_scene(text)) == text

    def test_combined_objects_stay_inside_the_work_area(self):
        scene = combined_scene()
        mover = scene.build_mover()
        for i in range(len(mover)):
            box = mover[i].contour.bbox()
            assert box.x >= 0 and box.y >= 0
            assert box.right <= scene.work.width
            assert box.bottom <= scene.work.height
