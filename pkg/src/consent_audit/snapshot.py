"""Snapshot data model: a serialized page load (DOM, styles, geometry, listener
flags) that every detector consumes. Snapshots are immutable after load and all
analysis over them is pure, so they are safe to share across worker threads."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, NamedTuple

from .errors import InvariantError, ParseError, SchemaError


class Status(str, Enum):
    SUCCESS = "success"
    UNREACHABLE = "unreachable"
    BLOCKED = "blocked"


class BlockKind(str, Enum):
    CAPTCHA = "captcha"
    CHALLENGE = "challenge"
    HTTP_403 = "http_403"


class Position(str, Enum):
    STATIC = "static"
    RELATIVE = "relative"
    ABSOLUTE = "absolute"
    FIXED = "fixed"
    STICKY = "sticky"
    OTHER = "other"


class TextDecoration(str, Enum):
    NONE = "none"
    UNDERLINE = "underline"
    OTHER = "other"


class TcfApi(str, Enum):
    TCFAPI = "tcfapi"
    CMP = "cmp"
    NONE = "none"


class RGBA(NamedTuple):
    """Color with integer channels in [0,255] and alpha in [0,1]."""

    r: int
    g: int
    b: int
    a: float = 1.0


class BBox(NamedTuple):
    """Bounding box in CSS pixels. Absent entirely for detached elements."""

    x: float
    y: float
    w: float
    h: float


class Viewport(NamedTuple):
    width_px: int
    height_px: int


@dataclass(frozen=True)
class StyleProps:
    z_index: int | None = None
    position: Position = Position.STATIC
    color: RGBA | None = None
    background_color: RGBA | None = None
    border_width_px: float | None = None
    border_color: RGBA | None = None
    border_radius_px: float | None = None
    text_decoration: TextDecoration = TextDecoration.NONE
    display: str = "block"
    visibility: str = "visible"
    opacity: float = 1.0


@dataclass(frozen=True)
class ElementNode:
    node_id: int
    tag: str
    attributes: dict[str, str] = field(default_factory=dict)
    text: str = ""
    style: StyleProps = field(default_factory=StyleProps)
    bbox: BBox | None = None
    has_listener: bool = False
    shadow_host: bool = False
    children: tuple["ElementNode", ...] = ()


@dataclass(frozen=True)
class Frame:
    frame_id: str
    root: ElementNode


@dataclass(frozen=True)
class TcfProbe:
    api: TcfApi
    cmp_id: int | None = None


@dataclass(frozen=True)
class PageSnapshot:
    url: str
    captured_at: str
    status: Status
    viewport: Viewport
    root: ElementNode | None = None
    frames: tuple[Frame, ...] = ()
    block_kind: BlockKind | None = None
    tcf_result: TcfProbe | None = None


class WalkEntry(NamedTuple):
    node: ElementNode
    ancestry: tuple[int, ...]
    frame_id: str | None


def walk(snapshot: PageSnapshot) -> Iterator[WalkEntry]:
    """Depth-first pre-order over the main root and every frame root.

    Shadow subtrees are ordinary children of shadow_host nodes, so no special
    handling is needed. Ancestry is the root-to-parent node_id path.
    """
    if snapshot.root is not None:
        yield from _walk_tree(snapshot.root, (), None)
    for frame in snapshot.frames:
        yield from _walk_tree(frame.root, (), frame.frame_id)


def _walk_tree(
    node: ElementNode, ancestry: tuple[int, ...], frame_id: str | None
) -> Iterator[WalkEntry]:
    yield WalkEntry(node, ancestry, frame_id)
    child_ancestry = ancestry + (node.node_id,)
    for child in node.children:
        yield from _walk_tree(child, child_ancestry, frame_id)


def subtree_nodes(root: ElementNode) -> Iterator[ElementNode]:
    """Pre-order over one subtree, root included."""
    yield root
    for child in root.children:
        yield from subtree_nodes(child)


def is_visible(node: ElementNode, viewport: Viewport) -> bool:
    """On-screen test: a positive-area box intersecting the viewport, not
    hidden by display/visibility/opacity. Missing bbox means not visible."""
    box = node.bbox
    if box is None or box.w <= 0 or box.h <= 0:
        return False
    if box.x >= viewport.width_px or box.y >= viewport.height_px:
        return False
    if box.x + box.w <= 0 or box.y + box.h <= 0:
        return False
    style = node.style
    if style.display == "none" or style.visibility == "hidden":
        return False
    return style.opacity > 0


@dataclass(frozen=True)
class SnapshotIndex:
    """Lookup tables built once per snapshot for ancestor/owner queries."""

    nodes_by_id: dict[int, ElementNode]
    parent_of: dict[int, int | None]
    frame_of: dict[int, str | None]

    def ancestors(self, node_id: int) -> Iterator[ElementNode]:
        """Walk from the node's parent up to its root."""
        current = self.parent_of.get(node_id)
        while current is not None:
            yield self.nodes_by_id[current]
            current = self.parent_of.get(current)


def build_index(snapshot: PageSnapshot) -> SnapshotIndex:
    nodes: dict[int, ElementNode] = {}
    parents: dict[int, int | None] = {}
    frames: dict[int, str | None] = {}
    for node, ancestry, frame_id in walk(snapshot):
        nodes[node.node_id] = node
        parents[node.node_id] = ancestry[-1] if ancestry else None
        frames[node.node_id] = frame_id
    return SnapshotIndex(nodes, parents, frames)


# ---------------------------------------------------------------------------
# Loading and validation


def load_snapshot(path: str) -> PageSnapshot:
    """Load one snapshot JSON document and validate every model invariant."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: snapshot document must be a JSON object")
    return snapshot_from_dict(doc)


def loads_snapshot(text: str) -> PageSnapshot:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("snapshot document must be a JSON object")
    return snapshot_from_dict(doc)


def snapshot_from_dict(doc: dict[str, Any]) -> PageSnapshot:
    url = _require_str(doc, "url")
    captured_at = _require_str(doc, "captured_at")
    status = _enum_field(doc, "status", Status, required=True)

    block_kind = _enum_field(doc, "block_kind", BlockKind, required=False)
    if (status is Status.BLOCKED) != (block_kind is not None):
        raise InvariantError("block_kind", "status=blocked ⇔ block_kind present")

    viewport_doc = doc.get("viewport")
    if not isinstance(viewport_doc, dict):
        raise SchemaError("viewport")
    viewport = Viewport(
        _require_int(viewport_doc, "width_px"),
        _require_int(viewport_doc, "height_px"),
    )

    root_doc = doc.get("root")
    if (status is Status.SUCCESS) != (root_doc is not None):
        raise InvariantError("root", "status=success ⇔ root present")
    root = _node_from_dict(root_doc, "root") if root_doc is not None else None

    frames: list[Frame] = []
    for i, frame_doc in enumerate(doc.get("frames") or []):
        if not isinstance(frame_doc, dict):
            raise SchemaError(f"frames[{i}]")
        frame_id = _require_str(frame_doc, "frame_id")
        frame_root = frame_doc.get("root")
        if frame_root is None:
            raise SchemaError(f"frames[{i}].root")
        frames.append(Frame(frame_id, _node_from_dict(frame_root, f"frames[{i}].root")))
    seen_frames: set[str] = set()
    for frame in frames:
        if frame.frame_id in seen_frames:
            raise InvariantError("frame_id", f"duplicate frame_id {frame.frame_id!r}")
        seen_frames.add(frame.frame_id)

    tcf_doc = doc.get("tcf_result")
    tcf_result = None
    if tcf_doc is not None:
        if not isinstance(tcf_doc, dict):
            raise SchemaError("tcf_result")
        api = _enum_field(tcf_doc, "api", TcfApi, required=True)
        cmp_id = tcf_doc.get("cmp_id")
        if cmp_id is not None and not isinstance(cmp_id, int):
            raise SchemaError("tcf_result.cmp_id")
        if cmp_id is not None and api is TcfApi.NONE:
            raise InvariantError("tcf_result.api", "cmp_id present ⇒ api ≠ none")
        tcf_result = TcfProbe(api, cmp_id)

    snapshot = PageSnapshot(
        url=url,
        captured_at=captured_at,
        status=status,
        viewport=viewport,
        root=root,
        frames=tuple(frames),
        block_kind=block_kind,
        tcf_result=tcf_result,
    )
    _check_unique_node_ids(snapshot)
    return snapshot


def _check_unique_node_ids(snapshot: PageSnapshot) -> None:
    seen: set[int] = set()
    for node, _, _ in walk(snapshot):
        if node.node_id in seen:
            raise InvariantError("node_id", f"duplicate node_id {node.node_id}")
        seen.add(node.node_id)


def _node_from_dict(doc: Any, path: str) -> ElementNode:
    if not isinstance(doc, dict):
        raise SchemaError(path)
    node_id = doc.get("node_id")
    if not isinstance(node_id, int):
        raise SchemaError(f"{path}.node_id")
    tag = doc.get("tag")
    if not isinstance(tag, str) or not tag:
        raise SchemaError(f"{path}.tag", f"{path}.tag must be a non-empty string")
    attributes = doc.get("attributes") or {}
    if not isinstance(attributes, dict):
        raise SchemaError(f"{path}.attributes")
    attributes = {str(k): str(v) for k, v in attributes.items()}
    text = doc.get("text", "")
    if not isinstance(text, str):
        raise SchemaError(f"{path}.text")
    style = _style_from_dict(doc.get("style") or {}, f"{path}.style")
    bbox = _bbox_from_dict(doc.get("bbox"), f"{path}.bbox")
    children = tuple(
        _node_from_dict(child, f"{path}.children[{i}]")
        for i, child in enumerate(doc.get("children") or [])
    )
    return ElementNode(
        node_id=node_id,
        tag=tag.lower(),
        attributes=attributes,
        text=text,
        style=style,
        bbox=bbox,
        has_listener=bool(doc.get("has_listener", False)),
        shadow_host=bool(doc.get("shadow_host", False)),
        children=children,
    )


def _style_from_dict(doc: Any, path: str) -> StyleProps:
    if not isinstance(doc, dict):
        raise SchemaError(path)
    z_index = doc.get("z_index")
    if z_index is not None and not isinstance(z_index, int):
        raise SchemaError(f"{path}.z_index")
    position = _loose_enum(doc.get("position", "static"), Position, f"{path}.position")
    text_decoration = _loose_enum(
        doc.get("text_decoration", "none"), TextDecoration, f"{path}.text_decoration"
    )
    opacity = doc.get("opacity", 1.0)
    if not isinstance(opacity, (int, float)) or isinstance(opacity, bool):
        raise SchemaError(f"{path}.opacity")
    if not 0.0 <= opacity <= 1.0:
        raise InvariantError(f"{path}.opacity", "opacity must be in [0,1]")
    return StyleProps(
        z_index=z_index,
        position=position,
        color=_rgba_from_value(doc.get("color"), f"{path}.color"),
        background_color=_rgba_from_value(
            doc.get("background_color"), f"{path}.background_color"
        ),
        border_width_px=_optional_number(doc, "border_width_px", path),
        border_color=_rgba_from_value(doc.get("border_color"), f"{path}.border_color"),
        border_radius_px=_optional_number(doc, "border_radius_px", path),
        text_decoration=text_decoration,
        display=str(doc.get("display", "block")),
        visibility=str(doc.get("visibility", "visible")),
        opacity=float(opacity),
    )


def _bbox_from_dict(doc: Any, path: str) -> BBox | None:
    if doc is None:
        return None
    if not isinstance(doc, dict):
        raise SchemaError(path)
    values = []
    for key in ("x", "y", "w", "h"):
        value = doc.get(key)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SchemaError(f"{path}.{key}")
        values.append(float(value))
    bbox = BBox(*values)
    if bbox.w < 0 or bbox.h < 0:
        raise InvariantError(path, "bbox.w and bbox.h must be ≥ 0")
    return bbox


def _rgba_from_value(value: Any, path: str) -> RGBA | None:
    if value is None:
        return None
    if not isinstance(value, (list, tuple)) or len(value) not in (3, 4):
        raise SchemaError(path)
    channels = list(value)
    alpha = float(channels[3]) if len(channels) == 4 else 1.0
    for channel in channels[:3]:
        if not isinstance(channel, (int, float)) or isinstance(channel, bool):
            raise SchemaError(path)
        if not 0 <= channel <= 255:
            raise InvariantError(path, "RGBA channels must be in [0,255]")
    if not 0.0 <= alpha <= 1.0:
        raise InvariantError(path, "alpha must be in [0,1]")
    return RGBA(int(channels[0]), int(channels[1]), int(channels[2]), alpha)


def _optional_number(doc: dict[str, Any], key: str, path: str) -> float | None:
    value = doc.get(key)
    if value is None:
        return None
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise SchemaError(f"{path}.{key}")
    return float(value)


def _loose_enum(value: Any, enum_cls: type, path: str):
    """Map unknown CSS keywords to the enum's OTHER member instead of failing."""
    if not isinstance(value, str):
        raise SchemaError(path)
    try:
        return enum_cls(value)
    except ValueError:
        return enum_cls.OTHER


def _enum_field(doc: dict[str, Any], key: str, enum_cls: type, required: bool):
    value = doc.get(key)
    if value is None:
        if required:
            raise SchemaError(key)
        return None
    try:
        return enum_cls(value)
    except ValueError:
        raise SchemaError(key, f"{key}: unknown value {value!r}") from None


def _require_str(doc: dict[str, Any], key: str) -> str:
    value = doc.get(key)
    if not isinstance(value, str) or not value:
        raise SchemaError(key)
    return value


def _require_int(doc: dict[str, Any], key: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(key)
    return value


# ---------------------------------------------------------------------------
# Serialization (used for fixtures and round-trip tests)


def save_snapshot(snapshot: PageSnapshot, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(snapshot_to_dict(snapshot), fh, indent=1)
        fh.write("\n")


def snapshot_to_dict(snapshot: PageSnapshot) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "url": snapshot.url,
        "captured_at": snapshot.captured_at,
        "status": snapshot.status.value,
    }
    if snapshot.block_kind is not None:
        doc["block_kind"] = snapshot.block_kind.value
    if snapshot.root is not None:
        doc["root"] = node_to_dict(snapshot.root)
    if snapshot.frames:
        doc["frames"] = [
            {"frame_id": f.frame_id, "root": node_to_dict(f.root)}
            for f in snapshot.frames
        ]
    doc["viewport"] = {
        "width_px": snapshot.viewport.width_px,
        "height_px": snapshot.viewport.height_px,
    }
    if snapshot.tcf_result is not None:
        probe: dict[str, Any] = {"api": snapshot.tcf_result.api.value}
        if snapshot.tcf_result.cmp_id is not None:
            probe["cmp_id"] = snapshot.tcf_result.cmp_id
        doc["tcf_result"] = probe
    return doc


def node_to_dict(node: ElementNode) -> dict[str, Any]:
    doc: dict[str, Any] = {"node_id": node.node_id, "tag": node.tag}
    if node.attributes:
        doc["attributes"] = dict(node.attributes)
    if node.text:
        doc["text"] = node.text
    style = _style_to_dict(node.style)
    if style:
        doc["style"] = style
    if node.bbox is not None:
        doc["bbox"] = {
            "x": node.bbox.x,
            "y": node.bbox.y,
            "w": node.bbox.w,
            "h": node.bbox.h,
        }
    if node.has_listener:
        doc["has_listener"] = True
    if node.shadow_host:
        doc["shadow_host"] = True
    if node.children:
        doc["children"] = [node_to_dict(child) for child in node.children]
    return doc


def _style_to_dict(style: StyleProps) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if style.z_index is not None:
        doc["z_index"] = style.z_index
    if style.position is not Position.STATIC:
        doc["position"] = style.position.value
    for key, color in (
        ("color", style.color),
        ("background_color", style.background_color),
        ("border_color", style.border_color),
    ):
        if color is not None:
            doc[key] = [color.r, color.g, color.b, color.a]
    if style.border_width_px is not None:
        doc["border_width_px"] = style.border_width_px
    if style.border_radius_px is not None:
        doc["border_radius_px"] = style.border_radius_px
    if style.text_decoration is not TextDecoration.NONE:
        doc["text_decoration"] = style.text_decoration.value
    if style.display != "block":
        doc["display"] = style.display
    if style.visibility != "visible":
        doc["visibility"] = style.visibility
    if style.opacity != 1.0:
        doc["opacity"] = style.opacity
    return doc
