"""XML part database: per-part pickup/installation coordinates and assets.

Document shape: a <Parts> root wrapping one or more <Part> entries, each
with id, Part_name, Lift(X,Z), Put(X,Z), Image1, Image2, Commands_Lift,
Commands_Put and videoPath children (element names matched exactly).
Lift/Put are floor-plane coordinates in meters; document order defines
the full-assembly step order.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field


class PartsXmlError(ValueError):
    """Raised when a part database document cannot be parsed."""


@dataclass(frozen=True)
class Part:
    id: int
    part_name: str
    lift: tuple[float, float]  # (x, z)
    put: tuple[float, float]
    image1: str
    image2: str
    commands_lift: str
    commands_put: str
    video_path: str


@dataclass(frozen=True)
class PartsDb:
    parts: tuple[Part, ...]
    warnings: tuple[str, ...] = field(default_factory=tuple, compare=False)

    def step_of(self, part_id: int) -> int | None:
        """Step index of the part with the given id, or None."""
        for i, part in enumerate(self.parts):
            if part.id == part_id:
                return i
        return None


_REQUIRED = (
    "id",
    "Part_name",
    "Lift",
    "Put",
    "Image1",
    "Image2",
    "Commands_Lift",
    "Commands_Put",
    "videoPath",
)


def _child_text(parent: ET.Element, name: str, where: str) -> str:
    node = parent.find(name)
    if node is None:
        raise PartsXmlError(f"missing element {name} in {where}")
    return (node.text or "").strip()


def _coord_pair(part_el: ET.Element, name: str, where: str) -> tuple[float, float]:
    node = part_el.find(name)
    if node is None:
        raise PartsXmlError(f"missing element {name} in {where}")
    values = []
    for axis in ("X", "Z"):
        text = _child_text(node, axis, f"{name} of {where}")
        try:
            values.append(float(text))
        except ValueError:
            raise PartsXmlError(f"non-numeric {name}/{axis} {text!r} in {where}") from None
    return (values[0], values[1])


def parse_parts_xml(text: str) -> PartsDb:
    """Parse a <Parts> document, preserving order.

    Unknown extra elements are ignored but reported in PartsDb.warnings.
    Raises PartsXmlError for malformed XML, a missing required element,
    non-numeric coordinates, a non-positive-integer id, or duplicate ids,
    naming the offending part's position in the document.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise PartsXmlError(f"malformed XML: {exc}") from None
    if root.tag != "Parts":
        raise PartsXmlError(f"root element must be Parts, got {root.tag}")

    parts: list[Part] = []
    warnings: list[str] = []
    seen_ids: set[int] = set()
    for index, part_el in enumerate(root):
        where = f"part at index {index}"
        if part_el.tag != "Part":
            warnings.append(f"ignored unknown element {part_el.tag} under Parts")
            continue
        for child in part_el:
            if child.tag not in _REQUIRED:
                warnings.append(f"ignored unknown element {child.tag} in {where}")
        id_text = _child_text(part_el, "id", where)
        try:
            part_id = int(id_text)
        except ValueError:
            raise PartsXmlError(f"non-integer id {id_text!r} in {where}") from None
        if part_id < 1:
            raise PartsXmlError(f"id must be >= 1, got {part_id} in {where}")
        if part_id in seen_ids:
            raise PartsXmlError(f"duplicate id {part_id} in {where}")
        seen_ids.add(part_id)
        parts.append(
            Part(
                id=part_id,
                part_name=_child_text(part_el, "Part_name", where),
                lift=_coord_pair(part_el, "Lift", where),
                put=_coord_pair(part_el, "Put", where),
                image1=_child_text(part_el, "Image1", where),
                image2=_child_text(part_el, "Image2", where),
                commands_lift=_child_text(part_el, "Commands_Lift", where),
                commands_put=_child_text(part_el, "Commands_Put", where),
                video_path=_child_text(part_el, "videoPath", where),
            )
        )
    return PartsDb(parts=tuple(parts), warnings=tuple(warnings))


def validate_db(db: PartsDb) -> list[str]:
    """Session-readiness checks; returns violations (empty = ok)."""
    violations: list[str] = []
    seen: set[int] = set()
    for i, part in enumerate(db.parts):
        where = f"part {part.id} (step {i})"
        if part.id in seen:
            violations.append(f"duplicate id {part.id}")
        seen.add(part.id)
        if part.id < 1:
            violations.append(f"non-positive id in {where}")
        if not part.part_name:
            violations.append(f"empty part_name in {where}")
        if part.lift[1] <= 0:
            violations.append(f"non-positive depth {part.lift[1]} in lift of {where}")
        if part.put[1] <= 0:
            violations.append(f"non-positive depth {part.put[1]} in put of {where}")
        for label, value in (
            ("image1", part.image1),
            ("image2", part.image2),
            ("video_path", part.video_path),
        ):
            if not value:
                violations.append(f"empty {label} in {where}")
    return violations
