"""Granular purpose toggles inside a consent interface.

A purpose control is a checkbox in the accessibility sense: an input element
with type=checkbox, or any element carrying role=checkbox. Toggle widgets that
sites build out of divs almost always carry the role, which is why the role
check is not limited to input tags.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detector import DetectedInterface
from .snapshot import (
    ElementNode,
    PageSnapshot,
    SnapshotIndex,
    build_index,
    subtree_nodes,
)

_TRUTHY_CHECKED = {"true", "mixed"}


@dataclass(frozen=True)
class PurposeControl:
    node_id: int
    checked: bool
    disabled: bool
    label_hint: str | None = None

    def to_dict(self) -> dict:
        doc: dict = {
            "node_id": self.node_id,
            "checked": self.checked,
            "disabled": self.disabled,
        }
        if self.label_hint is not None:
            doc["label_hint"] = self.label_hint
        return doc


@dataclass(frozen=True)
class PurposeSummary:
    controls: tuple[PurposeControl, ...]
    optional_count: int
    prechecked_optional: bool

    def to_dict(self) -> dict:
        return {
            "controls": [c.to_dict() for c in self.controls],
            "optional_count": self.optional_count,
            "prechecked_optional": self.prechecked_optional,
        }


def is_purpose_control(node: ElementNode) -> bool:
    if node.attributes.get("role", "").strip().lower() == "checkbox":
        return True
    if node.tag == "input":
        return node.attributes.get("type", "").strip().lower() == "checkbox"
    return False


def _is_checked(node: ElementNode) -> bool:
    aria = node.attributes.get("aria-checked")
    if aria is not None:
        return aria.strip().lower() in _TRUTHY_CHECKED
    # Native checkboxes surface state through the checked attribute. Presence
    # counts unless it is explicitly "false" (serializers that reflect the DOM
    # property write checked="true"/"false").
    if "checked" in node.attributes:
        return node.attributes["checked"].strip().lower() != "false"
    return False


def _is_disabled(node: ElementNode) -> bool:
    if "disabled" in node.attributes:
        return node.attributes["disabled"].strip().lower() != "false"
    aria = node.attributes.get("aria-disabled")
    if aria is not None:
        return aria.strip().lower() == "true"
    return False


def _subtree_text(node: ElementNode) -> str:
    parts = [n.text for n in subtree_nodes(node) if n.text]
    return " ".join(p.strip() for p in parts if p.strip()).strip()


def _label_hint(
    control: ElementNode,
    ancestors: list[ElementNode],
    parent: ElementNode | None,
) -> str | None:
    """Best-effort display name, diagnostics only: own aria-label, then the
    wrapping <label>, then the nearest preceding sibling <label>."""
    aria = control.attributes.get("aria-label", "").strip()
    if aria:
        return aria
    for ancestor in ancestors:
        if ancestor.tag == "label":
            text = _subtree_text(ancestor)
            if text:
                return text
    if parent is not None:
        preceding: str | None = None
        for sibling in parent.children:
            if sibling.node_id == control.node_id:
                break
            if sibling.tag == "label":
                text = _subtree_text(sibling)
                if text:
                    preceding = text
        if preceding:
            return preceding
    return None


def extract_purposes(
    interface: DetectedInterface,
    snapshot: PageSnapshot,
    index: SnapshotIndex | None = None,
) -> PurposeSummary:
    """Scan the interface subtree for purpose checkboxes.

    optional_count counts enabled controls only: a disabled prechecked box is
    the "always active" essential category and offers no choice. The
    prechecked flag likewise only fires when an enabled control is already
    checked, because that is the state a user must act to undo.
    """
    if index is None:
        index = build_index(snapshot)
    root = index.nodes_by_id[interface.root_node_id]
    controls: list[PurposeControl] = []
    for node in subtree_nodes(root):
        if not is_purpose_control(node):
            continue
        ancestry = list(index.ancestors(node.node_id))
        parent_id = index.parent_of.get(node.node_id)
        parent = index.nodes_by_id.get(parent_id) if parent_id is not None else None
        controls.append(
            PurposeControl(
                node_id=node.node_id,
                checked=_is_checked(node),
                disabled=_is_disabled(node),
                label_hint=_label_hint(node, ancestry, parent),
            )
        )
    optional = [c for c in controls if not c.disabled]
    prechecked = any(c.checked for c in optional)
    return PurposeSummary(
        controls=tuple(controls),
        optional_count=len(optional),
        prechecked_optional=prechecked,
    )
