"""Interactive-element discovery inside a detected interface and
classification into accept/reject/settings/save/pay options."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .corpus import AmbiguityNote, LabelCorpus, OptionCategory, classify_label, normalize
from .detector import DetectedInterface
from .prominence import ProminenceConfig, resolve_background, score
from .snapshot import (
    ElementNode,
    PageSnapshot,
    SnapshotIndex,
    build_index,
    is_visible,
    subtree_nodes,
)

MAX_LABEL_LENGTH = 256

_BUTTONISH_ROLES = {"button", "submit"}
_BUTTONISH_INPUT_TYPES = {"button", "submit"}


class InteractiveEvidence(str, Enum):
    TAG_BUTTON = "tag_button"
    TAG_ANCHOR = "tag_anchor"
    CLASSLIKE = "classlike"
    ROLELIKE = "rolelike"
    LISTENER_SELF = "listener_self"
    LISTENER_ANCESTOR = "listener_ancestor"


@dataclass(frozen=True)
class UserOption:
    category: OptionCategory
    node_id: int
    label_raw: str
    label_normalized: str
    match_distance: int
    prominence: float
    interactive_evidence: frozenset[InteractiveEvidence]

    def to_dict(self) -> dict:
        return {
            "category": self.category.value,
            "node_id": self.node_id,
            "label_raw": self.label_raw,
            "label_normalized": self.label_normalized,
            "match_distance": self.match_distance,
            "prominence": self.prominence,
            "interactive_evidence": sorted(e.value for e in self.interactive_evidence),
        }


@dataclass(frozen=True)
class OptionSet:
    by_category: dict[OptionCategory, UserOption]
    all_candidates: tuple[UserOption, ...]
    ambiguities: tuple[AmbiguityNote, ...] = ()

    def to_dict(self) -> dict:
        doc: dict = {
            "by_category": {
                category.value: option.to_dict()
                for category, option in sorted(
                    self.by_category.items(), key=lambda kv: kv[0].value
                )
            },
            "all_candidates": [option.to_dict() for option in self.all_candidates],
        }
        if self.ambiguities:
            doc["ambiguities"] = [note.to_dict() for note in self.ambiguities]
        return doc


def interactive_evidence(
    node: ElementNode, listener_above: bool
) -> frozenset[InteractiveEvidence]:
    """Why this element counts as interactive; empty set means it does not.

    Checkbox-style controls are deliberately not buttonish: they are purpose
    controls, handled elsewhere.
    """
    evidence: set[InteractiveEvidence] = set()
    if node.tag == "button":
        evidence.add(InteractiveEvidence.TAG_BUTTON)
    elif node.tag == "a":
        evidence.add(InteractiveEvidence.TAG_ANCHOR)
    # Case-insensitive so camelCase conventions (cookieButtonAccept) count.
    class_value = node.attributes.get("class", "").lower()
    if any(
        "btn" in token or "button" in token for token in class_value.split()
    ):
        evidence.add(InteractiveEvidence.CLASSLIKE)
    if node.attributes.get("role", "").strip().lower() in _BUTTONISH_ROLES:
        evidence.add(InteractiveEvidence.ROLELIKE)
    if (
        node.tag == "input"
        and node.attributes.get("type", "").strip().lower() in _BUTTONISH_INPUT_TYPES
    ):
        evidence.add(InteractiveEvidence.ROLELIKE)
    if node.has_listener:
        evidence.add(InteractiveEvidence.LISTENER_SELF)
    if listener_above:
        evidence.add(InteractiveEvidence.LISTENER_ANCESTOR)
    return frozenset(evidence)


def find_interactive(interface_root: ElementNode) -> list[ElementNode]:
    """Descendants of the interface root that look interactive, in document
    order. Listener evidence propagates from ancestors within the subtree."""
    return [node for node, _ in _interactive_with_evidence(interface_root)]


def _interactive_with_evidence(
    interface_root: ElementNode,
) -> list[tuple[ElementNode, frozenset[InteractiveEvidence]]]:
    found: list[tuple[ElementNode, frozenset[InteractiveEvidence]]] = []

    def visit(node: ElementNode, listener_above: bool) -> None:
        for child in node.children:
            evidence = interactive_evidence(child, listener_above)
            if evidence:
                found.append((child, evidence))
            visit(child, listener_above or child.has_listener)

    visit(interface_root, interface_root.has_listener)
    return found


def option_label(node: ElementNode) -> str:
    """Label source order: own text, then aria-label, value, title."""
    if node.text.strip():
        return node.text
    for attr in ("aria-label", "value", "title"):
        value = node.attributes.get(attr, "")
        if value.strip():
            return value
    # Fall back to the subtree text: buttons often wrap their caption in spans.
    parts = [child.text for child in subtree_nodes(node) if child.text.strip()]
    return " ".join(parts)


def extract_options(
    interface: DetectedInterface,
    snapshot: PageSnapshot,
    labels: LabelCorpus,
    config: ProminenceConfig | None = None,
    index: SnapshotIndex | None = None,
) -> OptionSet:
    """Classify interactive elements and pick the most prominent per category.

    Non-visible candidates stay in all_candidates but never win a category
    while a visible candidate exists. Ties break by document order.
    """
    config = config or ProminenceConfig()
    index = index or build_index(snapshot)
    root = index.nodes_by_id[interface.root_node_id]

    candidates: list[UserOption] = []
    visibility: dict[int, bool] = {}
    ambiguities: list[AmbiguityNote] = []
    for node, evidence in _interactive_with_evidence(root):
        raw = option_label(node)
        if not raw or len(raw) > MAX_LABEL_LENGTH:
            continue
        match = classify_label(raw, labels)
        if match is None:
            continue
        if match.ambiguity is not None:
            ambiguities.append(match.ambiguity)
        breakdown = score(node, resolve_background(index, node.node_id), config)
        option = UserOption(
            category=match.category,
            node_id=node.node_id,
            label_raw=raw,
            label_normalized=normalize(raw),
            match_distance=match.distance,
            prominence=breakdown.total,
            interactive_evidence=evidence,
        )
        candidates.append(option)
        visibility[node.node_id] = is_visible(node, snapshot.viewport)

    by_category: dict[OptionCategory, UserOption] = {}
    for category in OptionCategory:
        of_category = [c for c in candidates if c.category is category]
        if not of_category:
            continue
        pool = [c for c in of_category if visibility[c.node_id]] or of_category
        by_category[category] = max(pool, key=lambda c: c.prominence)

    return OptionSet(
        by_category=by_category,
        all_candidates=tuple(candidates),
        ambiguities=tuple(ambiguities),
    )
