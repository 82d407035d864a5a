"""Consent-interface detection: fixed-position/high-z-index candidates
confirmed against the multilingual trigger corpus."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import NegativeCorpus, TriggerCorpus, match_negative, match_trigger, normalize
from .snapshot import (
    ElementNode,
    PageSnapshot,
    Position,
    Status,
    is_visible,
    subtree_nodes,
    walk,
)

Z_INDEX_FLOOR = 10  # strict: candidates need z_index > 10


@dataclass(frozen=True)
class DetectedInterface:
    root_node_id: int
    frame_id: str | None
    matched_phrases: tuple[str, ...]
    negative_hit: bool
    visible: bool
    area_px2: float
    text_length: int

    def to_dict(self) -> dict:
        return {
            "root_node_id": self.root_node_id,
            "frame_id": self.frame_id,
            "matched_phrases": list(self.matched_phrases),
            "negative_hit": self.negative_hit,
            "visible": self.visible,
            "area_px2": self.area_px2,
            "text_length": self.text_length,
        }


def is_candidate(node: ElementNode) -> bool:
    style = node.style
    return (
        style.z_index is not None
        and style.z_index > Z_INDEX_FLOOR
        and style.position is Position.FIXED
    )


def find_candidates(snapshot: PageSnapshot) -> list[ElementNode]:
    """Every element across DOM, shadow subtrees, and frames with
    z_index > 10 and position fixed, in document order."""
    return [entry.node for entry in walk(snapshot) if is_candidate(entry.node)]


@dataclass(frozen=True)
class _Scored:
    interface: DetectedInterface
    order: int


def detect(
    snapshot: PageSnapshot,
    trigger: TriggerCorpus,
    negative: NegativeCorpus,
) -> DetectedInterface | None:
    """The page's consent interface, or None when no candidate matches.

    Nested matching candidates collapse to the outermost one. Among the rest,
    visible candidates win over invisible ones, then most subtree text, then
    larger area, then smallest node_id. negative_hit is recorded but does not
    reject here; filtering is a post-processing step.
    """
    result = detect_all(snapshot, trigger, negative)
    return result[0] if result else None


def detect_all(
    snapshot: PageSnapshot,
    trigger: TriggerCorpus,
    negative: NegativeCorpus,
) -> list[DetectedInterface]:
    """All matching candidates after nested-collapse, winner first. Positions
    past the first are runner-ups kept for diagnostics."""
    if snapshot.status is not Status.SUCCESS:
        return []

    matching: list[tuple[DetectedInterface, int, tuple[int, ...]]] = []
    for order, entry in enumerate(walk(snapshot)):
        node = entry.node
        if not is_candidate(node):
            continue
        found = _match_subtree(node, trigger)
        if not found:
            continue
        subtree_text = _subtree_text(node)
        interface = DetectedInterface(
            root_node_id=node.node_id,
            frame_id=entry.frame_id,
            matched_phrases=tuple(sorted(found)),
            negative_hit=match_negative(subtree_text, negative),
            visible=is_visible(node, snapshot.viewport),
            area_px2=(node.bbox.w * node.bbox.h) if node.bbox else 0.0,
            text_length=len(normalize(subtree_text)),
        )
        matching.append((interface, order, entry.ancestry))

    if not matching:
        return []

    # Collapse nested matches: drop any candidate whose ancestry contains
    # another matching candidate (the outermost match speaks for the subtree).
    matched_ids = {item[0].root_node_id for item in matching}
    outermost = [
        item
        for item in matching
        if not any(ancestor in matched_ids for ancestor in item[2])
    ]

    def sort_key(item: tuple[DetectedInterface, int, tuple[int, ...]]):
        interface = item[0]
        return (
            0 if interface.visible else 1,
            -interface.text_length,
            -interface.area_px2,
            interface.root_node_id,
        )

    return [item[0] for item in sorted(outermost, key=sort_key)]


def _match_subtree(root: ElementNode, trigger: TriggerCorpus) -> set[str]:
    found: set[str] = set()
    for node in subtree_nodes(root):
        found.update(match_trigger(node.text, node.attributes, trigger))
    return found


def _subtree_text(root: ElementNode) -> str:
    return " ".join(
        node.text for node in subtree_nodes(root) if node.text
    )
