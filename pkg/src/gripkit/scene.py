"""Scene documents: the serializable world fed to the replay engine.

A scene is a single JSON object: the work area, a containment policy in
compact notation, and an ordered list of tagged shape records.  Loading
constructs real objects (validating as it goes); saving is canonical, so
load/save round-trips are byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import InvariantError, SceneFormatError
from .moveable import MoveableObject
from .mover import (ContainmentPolicy, Mover, PartlyVisible, WorkArea,
                    format_policy, parse_policy)
from .shapes import SHAPE_TYPES


@dataclass
class Scene:
    work: WorkArea
    policy: ContainmentPolicy = field(default_factory=PartlyVisible)
    objects: list[MoveableObject] = field(default_factory=list)

    def build_mover(self) -> Mover:
        """A mover with every object registered in scene order."""
        mover = Mover(self.work, self.policy)
        for obj in self.objects:
            mover.add(obj)
        return mover

    def copy(self) -> "Scene":
        """Deep copy through the canonical serialization."""
        return load_scene(save_scene(self))


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SceneFormatError(f"{what} must be an integer")
    return value


def load_scene(text: str) -> Scene:
    """Parse and validate a scene document.

    Raises SceneFormatError (with position info where available) for
    structural problems and InvariantError for semantic ones.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SceneFormatError(
            f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise SceneFormatError("scene document must be a JSON object")
    try:
        work_doc = doc["work"]
    except KeyError:
        raise SceneFormatError("missing field 'work'") from None
    if not isinstance(work_doc, dict):
        raise SceneFormatError("'work' must be an object")
    width = _require_int(work_doc.get("width"), "work.width")
    height = _require_int(work_doc.get("height"), "work.height")
    if width < 1 or height < 1:
        raise InvariantError("work area must have positive size")
    policy_text = doc.get("policy", "partly:16")
    if not isinstance(policy_text, str):
        raise SceneFormatError("'policy' must be a string")
    policy = parse_policy(policy_text)
    records = doc.get("objects", [])
    if not isinstance(records, list):
        raise SceneFormatError("'objects' must be a list")
    objects: list[MoveableObject] = []
    for i, record in enumerate(records):
        where = f"objects[{i}]"
        if not isinstance(record, dict):
            raise SceneFormatError(f"{where}: each object must be a JSON object")
        tag = record.get("type")
        if tag not in SHAPE_TYPES:
            raise SceneFormatError(f"{where}: unknown type {tag!r}")
        try:
            objects.append(SHAPE_TYPES[tag].from_json(record))
        except InvariantError as e:
            raise InvariantError(f"{where}: {e}") from None
        except KeyError as e:
            raise SceneFormatError(f"{where}: missing field {e.args[0]!r}") from None
        except (TypeError, ValueError) as e:
            raise SceneFormatError(f"{where}: {e}") from None
    return Scene(WorkArea(width, height), policy, objects)


def save_scene(scene: Scene) -> str:
    """Canonical text form; stable for byte comparison and digests."""
    doc = {
        "work": {"width": scene.work.width, "height": scene.work.height},
        "policy": format_policy(scene.policy),
        "objects": [obj.to_json() for obj in scene.objects],
    }
    return json.dumps(doc, indent=2) + "\n"


def scene_digest(text: str) -> str:
    """sha256 of a canonical scene text; the replay comparison currency."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
