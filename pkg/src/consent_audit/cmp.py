"""Consent-management-platform identification: TCF probe lookup first, then an
ordered regex registry over the interface's id/class values."""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .detector import DetectedInterface
from .errors import EmptyInputError, ParseError, SchemaError
from .snapshot import (
    ElementNode,
    PageSnapshot,
    SnapshotIndex,
    build_index,
    subtree_nodes,
)


class CmpEvidence(str, Enum):
    TCF_ID = "tcf_id"
    CSS_SELECTOR = "css_selector"


@dataclass(frozen=True)
class CmpIdentity:
    provider: str
    evidence: CmpEvidence
    tcf_cmp_id: int | None = None
    matched_pattern: str | None = None

    def to_dict(self) -> dict:
        doc: dict = {"provider": self.provider, "evidence": self.evidence.value}
        if self.tcf_cmp_id is not None:
            doc["tcf_cmp_id"] = self.tcf_cmp_id
        if self.matched_pattern is not None:
            doc["matched_pattern"] = self.matched_pattern
        return doc


@dataclass(frozen=True)
class SelectorRule:
    pattern: str
    provider: str
    compiled: re.Pattern[str]

    def matches(self, token: str) -> bool:
        return self.compiled.search(token) is not None


@dataclass(frozen=True)
class SelectorRegistry:
    rules: tuple[SelectorRule, ...]


@dataclass(frozen=True)
class TcfRegistry:
    id_to_provider: dict[int, str]


def load_selectors(path: str | Path) -> SelectorRegistry:
    """CSV (pattern, provider), order-preserving. Patterns are case-sensitive
    and unanchored unless they carry their own ^/$."""
    rules: list[SelectorRule] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or {"pattern", "provider"} - set(reader.fieldnames):
            raise SchemaError("pattern", f"{path}: expected columns pattern,provider")
        for row_no, row in enumerate(reader, start=2):
            pattern = (row.get("pattern") or "").strip()
            provider = (row.get("provider") or "").strip()
            if not pattern or not provider:
                raise SchemaError("pattern", f"{path}:{row_no}: empty pattern/provider")
            try:
                compiled = re.compile(pattern)
            except re.error as exc:
                raise ParseError(f"{path}:{row_no}: bad pattern {pattern!r}: {exc}") from exc
            rules.append(SelectorRule(pattern, provider, compiled))
    return SelectorRegistry(tuple(rules))


def load_tcf(path: str | Path) -> TcfRegistry:
    mapping: dict[int, str] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or {"cmp_id", "provider"} - set(reader.fieldnames):
            raise SchemaError("cmp_id", f"{path}: expected columns cmp_id,provider")
        for row_no, row in enumerate(reader, start=2):
            raw_id = (row.get("cmp_id") or "").strip()
            provider = (row.get("provider") or "").strip()
            try:
                cmp_id = int(raw_id)
            except ValueError as exc:
                raise SchemaError("cmp_id", f"{path}:{row_no}: bad cmp_id {raw_id!r}") from exc
            if cmp_id <= 0:
                raise SchemaError("cmp_id", f"{path}:{row_no}: cmp_id must be positive")
            if not provider:
                raise SchemaError("provider", f"{path}:{row_no}: empty provider")
            mapping[cmp_id] = provider
    return TcfRegistry(mapping)


def subtree_tokens(root: ElementNode) -> list[str]:
    """All id values and whitespace-split class tokens in the subtree, in
    document order. These are the inputs selector rules run against."""
    tokens: list[str] = []
    for node in subtree_nodes(root):
        node_id_attr = node.attributes.get("id")
        if node_id_attr:
            tokens.append(node_id_attr)
        class_value = node.attributes.get("class")
        if class_value:
            tokens.extend(class_value.split())
    return tokens


def scan_selectors(
    root: ElementNode, selectors: SelectorRegistry
) -> list[tuple[SelectorRule, str]]:
    """Every (rule, token) hit in registry order; first entry wins identify."""
    tokens = subtree_tokens(root)
    hits: list[tuple[SelectorRule, str]] = []
    for rule in selectors.rules:
        for token in tokens:
            if rule.matches(token):
                hits.append((rule, token))
                break
    return hits


def identify(
    interface: DetectedInterface,
    snapshot: PageSnapshot,
    selectors: SelectorRegistry,
    tcf: TcfRegistry,
    index: SnapshotIndex | None = None,
) -> CmpIdentity | None:
    """TCF self-identification wins outright; the selector registry is the
    fallback. None when neither path resolves."""
    probe = snapshot.tcf_result
    if probe is not None and probe.cmp_id is not None:
        provider = tcf.id_to_provider.get(probe.cmp_id)
        if provider is not None:
            return CmpIdentity(
                provider=provider,
                evidence=CmpEvidence.TCF_ID,
                tcf_cmp_id=probe.cmp_id,
            )
    if index is None:
        index = build_index(snapshot)
    root = index.nodes_by_id.get(interface.root_node_id)
    if root is None:
        return None
    hits = scan_selectors(root, selectors)
    if not hits:
        return None
    rule, _ = hits[0]
    return CmpIdentity(
        provider=rule.provider,
        evidence=CmpEvidence.CSS_SELECTOR,
        matched_pattern=rule.pattern,
    )


@dataclass(frozen=True)
class MarketShareRow:
    provider: str
    count: int
    percent: float
    rank: int


def market_share(cmp_identities: list[CmpIdentity | None]) -> list[MarketShareRow]:
    """CMP counts over interfaces; percentages are relative to interfaces that
    resolved to some CMP. Ranks are dense positions after sorting by count
    descending with provider name as the stable tie-break."""
    if not cmp_identities:
        raise EmptyInputError("market_share needs at least one record")
    counts: dict[str, int] = {}
    for identity in cmp_identities:
        if identity is None:
            continue
        counts[identity.provider] = counts.get(identity.provider, 0) + 1
    total = sum(counts.values())
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [
        MarketShareRow(provider, count, 100.0 * count / total, rank)
        for rank, (provider, count) in enumerate(ordered, start=1)
    ]


def default_selectors_path() -> Path:
    return Path(__file__).parent / "data" / "selectors.csv"


def default_tcf_path() -> Path:
    return Path(__file__).parent / "data" / "tcf.csv"
